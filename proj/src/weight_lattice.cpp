#include "charrig/weight_lattice.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "charrig/errors.hpp"

namespace charrig {

namespace {

void require_same_rank(const Weight& a, const Weight& b, const char* op) {
  if (a.eps().size() != b.eps().size()) {
    throw RankMismatch(std::string(op) + ": weights " + a.str() + " and " + b.str() +
                       " have different ranks");
  }
}

std::int64_t coord_sum(std::span<const int> v) {
  return std::accumulate(v.begin(), v.end(), std::int64_t{0});
}

// la - mu computed on representatives with equal coordinate sums; empty if
// the difference is not in the root lattice.
std::optional<std::vector<int>> aligned_difference(const Weight& la, const Weight& mu) {
  require_same_rank(la, mu, "aligned_difference");
  const auto n = static_cast<std::int64_t>(la.eps().size());
  const std::int64_t gap = coord_sum(la.eps()) - coord_sum(mu.eps());
  if (gap % n != 0) return std::nullopt;
  const auto shift = static_cast<int>(gap / n);
  std::vector<int> diff(la.eps().size());
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = la.eps()[i] - (mu.eps()[i] + shift);
  return diff;
}

}  // namespace

Rank::Rank(int l) : l_(l) {
  if (l < 1) throw std::invalid_argument("rank must be >= 1, got " + std::to_string(l));
}

Weight::Weight(std::vector<int> eps) : eps_(std::move(eps)) {
  if (eps_.size() < 2) throw std::invalid_argument("weight needs at least two epsilon coordinates");
  const int lo = *std::min_element(eps_.begin(), eps_.end());
  for (int& x : eps_) x -= lo;
}

Weight Weight::zero(Rank l) { return Weight(std::vector<int>(l.dim(), 0)); }

std::vector<int> Weight::fundamental() const {
  std::vector<int> c(eps_.size() - 1);
  for (std::size_t i = 0; i + 1 < eps_.size(); ++i) c[i] = eps_[i] - eps_[i + 1];
  return c;
}

bool Weight::is_dominant() const {
  return std::is_sorted(eps_.begin(), eps_.end(), std::greater<>());
}

Weight Weight::operator-() const {
  std::vector<int> neg(eps_.size());
  std::transform(eps_.begin(), eps_.end(), neg.begin(), std::negate<>());
  return Weight(std::move(neg));
}

Weight operator+(const Weight& a, const Weight& b) {
  require_same_rank(a, b, "operator+");
  std::vector<int> s(a.eps_.size());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = a.eps_[i] + b.eps_[i];
  return Weight(std::move(s));
}

Weight operator-(const Weight& a, const Weight& b) { return a + (-b); }

std::string Weight::str() const {
  std::ostringstream os;
  os << '(';
  const auto c = fundamental();
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << ')';
  return os.str();
}

std::int64_t level(const Weight& w) {
  const auto& e = w.eps();
  const auto l = static_cast<std::int64_t>(e.size()) - 1;
  std::int64_t total = 0;
  for (std::size_t i = 0; i < e.size(); ++i) total += e[i] * (l - 2 * static_cast<std::int64_t>(i));
  return total;
}

DominantWeight::DominantWeight(Weight w) : w_(std::move(w)), level_(charrig::level(w_)) {
  if (!w_.is_dominant()) throw NotDominant("weight " + w_.str() + " is not dominant");
}

bool DominantWeight::is_zero() const { return w_.eps().front() == 0; }

DominantWeight operator+(const DominantWeight& a, const DominantWeight& b) {
  return DominantWeight(a.w_ + b.w_);
}

std::strong_ordering DominantWeight::operator<=>(const DominantWeight& o) const {
  if (auto c = level_ <=> o.level_; c != 0) return c;
  return w_.eps() <=> o.w_.eps();
}

Weight from_fundamental(Rank l, std::span<const int> coords) {
  if (static_cast<int>(coords.size()) != l.value()) {
    throw std::invalid_argument("expected " + std::to_string(l.value()) +
                                " fundamental coordinates, got " + std::to_string(coords.size()));
  }
  std::vector<int> eps(l.dim(), 0);
  for (int i = l.value() - 1; i >= 0; --i) eps[i] = eps[i + 1] + coords[i];
  return Weight(std::move(eps));
}

DominantWeight dominant_from_fundamental(Rank l, std::span<const int> coords) {
  return DominantWeight(from_fundamental(l, coords));
}

DominantWeight fundamental_weight(Rank l, int i) {
  if (i < 1 || i > l.value()) throw std::invalid_argument("no fundamental weight omega_" + std::to_string(i));
  std::vector<int> eps(l.dim(), 0);
  std::fill(eps.begin(), eps.begin() + i, 1);
  return DominantWeight(Weight(std::move(eps)));
}

int fundamental_index(const DominantWeight& d) {
  const auto c = d.fundamental();
  int index = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (c[i] != 1 || index != 0) return 0;
    index = static_cast<int>(i) + 1;
  }
  return index;
}

DominantWeight dominant_representative(const Weight& w) {
  std::vector<int> eps = w.eps();
  std::sort(eps.begin(), eps.end(), std::greater<>());
  return DominantWeight(Weight(std::move(eps)));
}

std::vector<Weight> orbit(const DominantWeight& d) {
  std::vector<int> eps = d.eps();
  std::vector<Weight> out;
  do {
    out.emplace_back(eps);
  } while (std::prev_permutation(eps.begin(), eps.end()));
  return out;
}

std::size_t orbit_size(const DominantWeight& d) {
  // (l+1)! / prod(run lengths)!, accumulated as a product of binomials.
  std::size_t size = 1;
  std::size_t placed = 0;
  const auto& eps = d.eps();
  for (std::size_t i = 0; i < eps.size();) {
    std::size_t j = i;
    while (j < eps.size() && eps[j] == eps[i]) ++j;
    for (std::size_t k = 1; k <= j - i; ++k) size = size * (placed + k) / k;
    placed += j - i;
    i = j;
  }
  return size;
}

bool dominance_leq(const Weight& mu, const Weight& la) {
  const auto diff = aligned_difference(la, mu);
  if (!diff) return false;
  std::int64_t partial = 0;
  for (int x : *diff) {
    partial += x;
    if (partial < 0) return false;
  }
  return true;
}

RootVector root_coordinates(const Weight& la, const Weight& mu) {
  const auto diff = aligned_difference(la, mu);
  if (!diff) {
    throw NotInRootLattice(la.str() + " - " + mu.str() + " is not in the root lattice");
  }
  RootVector beta;
  beta.coeffs.reserve(diff->size() - 1);
  int partial = 0;
  for (std::size_t j = 0; j + 1 < diff->size(); ++j) {
    partial += (*diff)[j];
    beta.coeffs.push_back(partial);
  }
  return beta;
}

std::vector<int> support(const RootVector& beta) {
  std::vector<int> idx;
  for (std::size_t i = 0; i < beta.coeffs.size(); ++i) {
    if (beta.coeffs[i] != 0) idx.push_back(static_cast<int>(i) + 1);
  }
  return idx;
}

int support_size(const RootVector& beta) {
  return static_cast<int>(std::count_if(beta.coeffs.begin(), beta.coeffs.end(),
                                        [](int k) { return k != 0; }));
}

bool mixed_less(const DominantWeight& mu, const DominantWeight& la) {
  if (mu == la) return false;
  if (dominance_leq(mu, la)) return true;
  const auto a = la.fundamental();
  const auto b = mu.fundamental();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return false;
  }
  return true;
}

std::vector<DominantWeight> saturated_dominants(const DominantWeight& la) {
  // Partitions of |la| with at most l+1 parts whose partial sums stay
  // below those of la.
  const auto& top = la.eps();
  const std::size_t n = top.size();
  std::vector<int> bound(n);
  std::partial_sum(top.begin(), top.end(), bound.begin());
  const int total = bound.back();

  std::vector<DominantWeight> out;
  std::vector<int> part(n, 0);
  std::function<void(std::size_t, int, int)> fill = [&](std::size_t pos, int used, int cap) {
    if (pos == n) {
      if (used == total) out.emplace_back(Weight(part));
      return;
    }
    const int remaining_slots = static_cast<int>(n - pos);
    const int hi = std::min(cap, bound[pos] - used);
    for (int v = hi; v >= 0; --v) {
      if (used + v * remaining_slots < total) break;
      part[pos] = v;
      fill(pos + 1, used + v, v);
    }
  };
  fill(0, 0, top.front());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

DominantWeight neg_w0(const DominantWeight& d) {
  auto c = d.fundamental();
  std::reverse(c.begin(), c.end());
  return dominant_from_fundamental(d.rank(), c);
}

Weight rho(Rank l) {
  std::vector<int> eps(l.dim());
  for (int i = 0; i < l.dim(); ++i) eps[i] = l.value() - i;
  return Weight(std::move(eps));
}

std::vector<std::vector<int>> positive_roots(Rank l) {
  std::vector<std::vector<int>> roots;
  for (int i = 0; i < l.dim(); ++i) {
    for (int j = i + 1; j < l.dim(); ++j) {
      std::vector<int> r(l.dim(), 0);
      r[i] = 1;
      r[j] = -1;
      roots.push_back(std::move(r));
    }
  }
  return roots;
}

std::int64_t pairing(std::span<const int> x, std::span<const int> y) {
  if (x.size() != y.size()) throw RankMismatch("pairing: vectors of different length");
  const auto sx = coord_sum(x);
  const auto sy = coord_sum(y);
  if (sx != 0 && sy != 0 && sx != sy) {
    throw std::invalid_argument("pairing: representatives are not sum-aligned");
  }
  std::int64_t dot = 0;
  for (std::size_t i = 0; i < x.size(); ++i) dot += std::int64_t{x[i]} * y[i];
  return dot;
}

std::vector<DominantWeight> dominants_up_to(Rank l, std::int64_t bound) {
  std::vector<DominantWeight> out;
  if (bound < 0) return out;
  std::vector<int> c(l.value(), 0);
  std::function<void(int, std::int64_t)> fill = [&](int i, std::int64_t budget) {
    if (i == l.value()) {
      out.push_back(dominant_from_fundamental(l, c));
      return;
    }
    const std::int64_t step = std::int64_t{i + 1} * (l.value() - i);
    for (int k = 0; k * step <= budget; ++k) {
      c[i] = k;
      fill(i + 1, budget - k * step);
    }
    c[i] = 0;
  };
  fill(0, bound);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace charrig
