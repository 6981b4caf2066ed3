#include "charrig/char_ring.hpp"

#include <algorithm>
#include <functional>

#include "charrig/errors.hpp"

namespace charrig {

namespace {

void require_same_rank(Rank a, Rank b) {
  if (a != b) {
    throw RankMismatch("character ring elements of ranks " + std::to_string(a.value()) + " and " +
                       std::to_string(b.value()));
  }
}

}  // namespace

CharElement CharElement::orbit_sum(const DominantWeight& mu) {
  CharElement f(mu.rank());
  f.terms_.emplace(mu, 1);
  return f;
}

Coefficient CharElement::coefficient(const DominantWeight& mu) const {
  auto it = terms_.find(mu);
  return it == terms_.end() ? Coefficient(0) : it->second;
}

Coefficient CharElement::e_coefficient(const Weight& x) const {
  if (x.rank() != rank_) return 0;
  return coefficient(dominant_representative(x));
}

void CharElement::add_term(const DominantWeight& mu, const Coefficient& c) {
  require_same_rank(rank_, mu.rank());
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(mu, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

std::vector<DominantWeight> CharElement::leading_dominants() const {
  std::vector<DominantWeight> leaders;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& mu = it->first;
    // Anything strictly above mu in dominance has a larger level.
    const bool covered = std::any_of(terms_.upper_bound(mu), terms_.end(), [&](const auto& kv) {
      return dominance_leq(mu, kv.first);
    });
    if (!covered) leaders.push_back(mu);
  }
  return leaders;
}

Coefficient CharElement::dimension() const {
  Coefficient total = 0;
  for (const auto& [mu, c] : terms_) total += c * orbit_size(mu);
  return total;
}

CharElement& CharElement::operator+=(const CharElement& o) {
  require_same_rank(rank_, o.rank_);
  for (const auto& [mu, c] : o.terms_) add_term(mu, c);
  return *this;
}

CharElement& CharElement::operator-=(const CharElement& o) {
  require_same_rank(rank_, o.rank_);
  for (const auto& [mu, c] : o.terms_) add_term(mu, -c);
  return *this;
}

CharElement scale(const CharElement& f, const Coefficient& c) {
  CharElement out(f.rank());
  if (c == 0) return out;
  for (const auto& [mu, a] : f.terms()) out.add_term(mu, a * c);
  return out;
}

CharElement multiply_orbit_sums(const DominantWeight& mu, const DominantWeight& nu) {
  require_same_rank(mu.rank(), nu.rank());
  const auto xs = orbit(mu);
  const auto ys = orbit(nu);
  std::map<std::vector<int>, std::int64_t> counts;
  std::vector<int> z(mu.eps().size());
  for (const auto& x : xs) {
    for (const auto& y : ys) {
      for (std::size_t i = 0; i < z.size(); ++i) z[i] = x.eps()[i] + y.eps()[i];
      if (std::is_sorted(z.begin(), z.end(), std::greater<>())) ++counts[z];
    }
  }
  CharElement out(mu.rank());
  for (const auto& [eps, n] : counts) out.add_term(DominantWeight(Weight(eps)), n);
  return out;
}

CharElement operator*(const CharElement& a, const CharElement& b) {
  require_same_rank(a.rank_, b.rank_);
  CharElement out(a.rank_);
  for (const auto& [mu, ca] : a.terms_) {
    for (const auto& [nu, cb] : b.terms_) {
      const Coefficient cab = ca * cb;
      for (const auto& [kappa, n] : multiply_orbit_sums(mu, nu).terms_) out.add_term(kappa, cab * n);
    }
  }
  return out;
}

}  // namespace charrig
