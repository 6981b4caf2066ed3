#include "charrig/weyl_oracle.hpp"

#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "charrig/errors.hpp"
#include "charrig/json_codec.hpp"

namespace charrig {

namespace {

std::int64_t squared_norm(const std::vector<int>& v) {
  std::int64_t s = 0;
  for (int x : v) s += std::int64_t{x} * x;
  return s;
}

}  // namespace

CharElement freudenthal_character(const DominantWeight& la) {
  const Rank l = la.rank();
  const std::size_t n = static_cast<std::size_t>(l.dim());
  const auto roots = positive_roots(l);
  const std::vector<int> rho_eps = rho(l).eps();
  const int total = std::accumulate(la.eps().begin(), la.eps().end(), 0);

  // Representatives are aligned to the coordinate sum of la so that norm
  // differences are exact integers.
  auto aligned = [&](const Weight& x) {
    std::vector<int> v = x.eps();
    const int gap = total - std::accumulate(v.begin(), v.end(), 0);
    for (int& c : v) c += gap / static_cast<int>(n);
    return v;
  };
  auto plus_rho = [&](std::vector<int> v) {
    for (std::size_t i = 0; i < n; ++i) v[i] += rho_eps[i];
    return v;
  };

  const std::int64_t top_norm = squared_norm(plus_rho(la.eps()));

  CharElement ch(l);
  auto multiplicity = [&](const Weight& x) -> Coefficient {
    const auto d = dominant_representative(x);
    if (!dominance_leq(d, la)) return 0;
    return ch.coefficient(d);
  };

  for (const auto& mu : saturated_dominants(la)) {
    if (mu == la) {
      ch.add_term(mu, 1);
      continue;
    }
    const auto base = aligned(mu.weight());
    const std::int64_t gap = top_norm - squared_norm(plus_rho(base));
    Coefficient rhs = 0;
    for (const auto& alpha : roots) {
      std::vector<int> x = base;
      for (;;) {
        for (std::size_t i = 0; i < n; ++i) x[i] += alpha[i];
        const Weight wx(x);
        // alpha-strings through a saturated set are unbroken.
        if (!dominance_leq(dominant_representative(wx), la)) break;
        rhs += pairing(x, alpha) * multiplicity(wx);
      }
    }
    rhs *= 2;
    if (gap <= 0 || rhs % gap != 0) {
      std::ostringstream msg;
      msg << "freudenthal: inexact step at " << mu.str() << " in V" << la.str() << ": " << rhs
          << " / " << gap;
      throw std::logic_error(msg.str());
    }
    ch.add_term(mu, rhs / gap);
  }
  return ch;
}

MultiplicityTable multiplicity_table(const DominantWeight& la, const CharElement& character) {
  MultiplicityTable t{la, {}};
  for (const auto& mu : saturated_dominants(la)) t.mults.emplace_back(mu, character.coefficient(mu));
  return t;
}

Coefficient weyl_dim(const DominantWeight& la) {
  const auto& e = la.eps();
  Coefficient num = 1;
  Coefficient den = 1;
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      num *= e[i] - e[j] + static_cast<int>(j - i);
      den *= static_cast<int>(j - i);
    }
  }
  return num / den;
}

CharacterTable::CharacterTable(std::optional<std::filesystem::path> spill_dir)
    : spill_dir_(std::move(spill_dir)) {
  if (spill_dir_) std::filesystem::create_directories(*spill_dir_);
}

std::string CharacterTable::cache_file_name(const DominantWeight& la) {
  std::string name = "A" + std::to_string(la.rank().value()) + "_";
  const auto c = la.fundamental();
  for (std::size_t i = 0; i < c.size(); ++i) name += (i ? "-" : "") + std::to_string(c[i]);
  return name + ".json";
}

std::optional<CharElement> CharacterTable::load(const DominantWeight& la) {
  if (!spill_dir_) return std::nullopt;
  const auto path = *spill_dir_ / cache_file_name(la);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    const Json doc = parse_document(buf.str());
    const Rank l = rank_from_json(doc);
    if (l != la.rank() || dominant_from_json(l, doc.at("lambda")) != la) {
      throw InvariantViolation("cache entry keyed to a different weight");
    }
    CharElement ch = terms_from_json(l, doc.at("terms"));
    // Never trust a cached character: check shape and dimension.
    const auto doms = saturated_dominants(la);
    bool ok = ch.coefficient(la) == 1 && ch.terms().size() == doms.size() &&
              ch.dimension() == weyl_dim(la);
    for (const auto& mu : doms) ok = ok && ch.coefficient(mu) > 0;
    if (!ok) throw InvariantViolation("cache entry is not a valid character");
    std::unique_lock lock(mutex_);
    ++stats_.loaded;
    return ch;
  } catch (const std::exception&) {
    std::unique_lock lock(mutex_);
    ++stats_.rejected;
    return std::nullopt;
  }
}

void CharacterTable::store(const DominantWeight& la, const CharElement& ch) const {
  if (!spill_dir_) return;
  Json doc;
  doc["rank"] = la.rank().value();
  doc["lambda"] = weight_to_json(la.weight());
  doc["terms"] = terms_to_json(ch);
  // Write then rename so concurrent readers never see a partial file.
  const auto path = *spill_dir_ / cache_file_name(la);
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << dump_document(doc);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
}

const CharElement& CharacterTable::character(const DominantWeight& la) {
  {
    std::shared_lock lock(mutex_);
    if (auto it = memo_.find(la); it != memo_.end()) return it->second;
  }
  std::optional<CharElement> ch = load(la);
  const bool fresh = !ch;
  if (fresh) ch = freudenthal_character(la);
  std::unique_lock lock(mutex_);
  auto [it, inserted] = memo_.try_emplace(la, std::move(*ch));
  if (inserted && fresh) {
    ++stats_.computed;
    lock.unlock();
    store(la, it->second);
  }
  return it->second;
}

StructureConstantRow CharacterTable::decompose(const CharElement& f) {
  StructureConstantRow out;
  CharElement residue = f;
  while (!residue.is_zero()) {
    const auto& [mu, c] = *residue.terms().rbegin();
    const DominantWeight top = mu;
    const Coefficient coeff = c;
    out.emplace(top, coeff);
    residue -= scale(character(top), coeff);
  }
  return out;
}

StructureConstantRow CharacterTable::tensor_decompose(const DominantWeight& mu, const DominantWeight& nu) {
  if (mu.rank() != nu.rank()) throw RankMismatch("tensor_decompose: weights of different rank");
  return decompose(character(mu) * character(nu));
}

CharacterTable::Stats CharacterTable::stats() const {
  std::shared_lock lock(mutex_);
  return stats_;
}

}  // namespace charrig
