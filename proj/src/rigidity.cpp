#include "charrig/rigidity.hpp"

#include <algorithm>
#include <memory>
#include <random>
#include <set>

#include "charrig/errors.hpp"

namespace charrig {

namespace {

std::string triple_str(const DominantWeight& mu, const DominantWeight& nu, const DominantWeight& la) {
  return "(mu=" + mu.str() + ", nu=" + nu.str() + ", lambda=" + la.str() + ")";
}

Coefficient row_at(const StructureConstantRow& row, const DominantWeight& t) {
  auto it = row.find(t);
  return it == row.end() ? Coefficient(0) : it->second;
}

const CharElement& prefix_member(const CharacterFamily::Members& prefix, const DominantWeight& la) {
  auto it = prefix.find(la);
  if (it == prefix.end()) throw BoundExceeded("family has no member f" + la.str());
  return it->second;
}

}  // namespace

// ---------------------------------------------------------------------------
// CharacterFamily

CharacterFamily::CharacterFamily(Rank l, std::int64_t bound, Members members)
    : rank_(l), bound_(bound), members_(std::move(members)) {
  if (bound_ < 0) throw InvariantViolation("family bound must be >= 0");
  const auto index = dominants_up_to(rank_, bound_);
  if (index.size() != members_.size()) {
    throw InvariantViolation("family with bound " + std::to_string(bound_) + " needs " +
                             std::to_string(index.size()) + " members, has " +
                             std::to_string(members_.size()));
  }
  for (const auto& la : index) {
    auto it = members_.find(la);
    if (it == members_.end()) throw InvariantViolation("family is missing f" + la.str());
    const CharElement& f = it->second;
    if (f.rank() != rank_) throw InvariantViolation("member f" + la.str() + " has the wrong rank");
    if (f.coefficient(la) != 1) {
      throw InvariantViolation("member f" + la.str() + " does not have leading coefficient 1");
    }
    for (const auto& [mu, c] : f.terms()) {
      if (!dominance_leq(mu, la)) {
        throw InvariantViolation("member f" + la.str() + " has a term at " + mu.str() +
                                 " outside its saturated set");
      }
    }
  }
}

const CharElement& CharacterFamily::member(const DominantWeight& la) const {
  if (!contains(la)) {
    throw BoundExceeded("f" + la.str() + " (level " + std::to_string(la.level()) + ") is outside bound " +
                        std::to_string(bound_));
  }
  return members_.at(la);
}

Coefficient CharacterFamily::multiplicity(const DominantWeight& la, const DominantWeight& mu) const {
  return member(la).coefficient(mu);
}

CharacterFamily weyl_family(Rank l, std::int64_t bound, CharacterTable& table) {
  CharacterFamily::Members members;
  for (const auto& la : dominants_up_to(l, bound)) members.emplace(la, table.character(la));
  return CharacterFamily(l, bound, std::move(members));
}

// ---------------------------------------------------------------------------
// StructureConstantTable

namespace {

std::pair<DominantWeight, DominantWeight> ordered(const DominantWeight& a, const DominantWeight& b) {
  return a <= b ? std::pair{a, b} : std::pair{b, a};
}

}  // namespace

StructureConstantTable StructureConstantTable::littlewood_richardson(Rank l, std::int64_t bound,
                                                                     CharacterTable& table) {
  StructureConstantTable out(l);
  const auto weights = dominants_up_to(l, bound);
  for (std::size_t i = 0; i < weights.size(); ++i) {
    for (std::size_t j = i; j < weights.size(); ++j) {
      if ((weights[i] + weights[j]).level() > bound) continue;
      out.set_row(weights[i], weights[j], table.tensor_decompose(weights[i], weights[j]));
    }
  }
  return out;
}

void StructureConstantTable::set(const DominantWeight& mu, const DominantWeight& nu, const DominantWeight& la,
                                 const Coefficient& value) {
  if (mu.rank() != rank_ || nu.rank() != rank_ || la.rank() != rank_) {
    throw InvariantViolation("structure constant " + triple_str(mu, nu, la) + " has the wrong rank");
  }
  const auto top = mu + nu;
  if (!dominance_leq(la, top)) {
    throw InvariantViolation("structure constant " + triple_str(mu, nu, la) + " lies outside the saturated set of " +
                             top.str());
  }
  if (la == top && value != 1) {
    throw InvariantViolation("top structure constant " + triple_str(mu, nu, la) + " must be 1");
  }
  const auto [a, b] = ordered(mu, nu);
  const Key key{a, b, la};
  if (auto it = entries_.find(key); it != entries_.end()) {
    if (it->second != value) {
      throw InvariantViolation("conflicting values for " + triple_str(mu, nu, la));
    }
    return;
  }
  if (value != 0) entries_.emplace(key, value);
}

void StructureConstantTable::set_row(const DominantWeight& mu, const DominantWeight& nu,
                                     const StructureConstantRow& row) {
  for (const auto& [la, v] : row) set(mu, nu, la, v);
}

bool StructureConstantTable::covers(const DominantWeight& mu, const DominantWeight& nu) const {
  const auto [a, b] = ordered(mu, nu);
  return entries_.contains(Key{a, b, mu + nu});
}

std::optional<Coefficient> StructureConstantTable::value(const DominantWeight& mu, const DominantWeight& nu,
                                                         const DominantWeight& la) const {
  if (!covers(mu, nu)) return std::nullopt;
  const auto [a, b] = ordered(mu, nu);
  auto it = entries_.find(Key{a, b, la});
  return it == entries_.end() ? Coefficient(0) : it->second;
}

Coefficient LrOracle::value(const DominantWeight& mu, const DominantWeight& nu, const DominantWeight& la) {
  const auto key = ordered(mu, nu);
  auto it = rows_.find(key);
  if (it == rows_.end()) it = rows_.emplace(key, table_.tensor_decompose(mu, nu)).first;
  return row_at(it->second, la);
}

Coefficient TableOracle::value(const DominantWeight& mu, const DominantWeight& nu, const DominantWeight& la) {
  auto v = table_.value(mu, nu, la);
  if (!v) throw OracleIncomplete("structure constant table has no row for " + triple_str(mu, nu, la));
  return *v;
}

// ---------------------------------------------------------------------------
// Reconstruction and extraction

std::pair<DominantWeight, DominantWeight> default_split(const DominantWeight& la) {
  const auto c = la.fundamental();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] > 0) {
      const auto omega = fundamental_weight(la.rank(), static_cast<int>(i) + 1);
      return {omega, DominantWeight(la.weight() - omega.weight())};
    }
  }
  throw std::invalid_argument("the zero weight has no split");
}

SplitRule random_split(std::uint64_t seed) {
  auto rng = std::make_shared<std::mt19937_64>(seed);
  return [rng](const DominantWeight& la) {
    // Every mu with 0 <= c_i(mu) <= c_i(la), excluding 0 and la itself.
    const auto c = la.fundamental();
    std::vector<std::vector<int>> choices;
    std::vector<int> cur(c.size(), 0);
    std::function<void(std::size_t)> fill = [&](std::size_t i) {
      if (i == c.size()) {
        const bool zero = std::all_of(cur.begin(), cur.end(), [](int x) { return x == 0; });
        if (!zero && cur != c) choices.push_back(cur);
        return;
      }
      for (int k = 0; k <= c[i]; ++k) {
        cur[i] = k;
        fill(i + 1);
      }
    };
    fill(0);
    if (choices.empty()) throw std::invalid_argument("weight " + la.str() + " has no nontrivial split");
    std::uniform_int_distribution<std::size_t> pick(0, choices.size() - 1);
    const auto mu = dominant_from_fundamental(la.rank(), choices[pick(*rng)]);
    return std::pair{mu, DominantWeight(la.weight() - mu.weight())};
  };
}

CharacterFamily reconstruct_family(StructureConstantOracle& oracle, Rank l, std::int64_t bound,
                                   const SplitRule& split) {
  CharacterFamily::Members members;
  for (const auto& la : dominants_up_to(l, bound)) {
    if (la.is_zero()) {
      members.emplace(la, CharElement::one(l));
      continue;
    }
    if (fundamental_index(la) != 0) {
      members.emplace(la, CharElement::orbit_sum(la));
      continue;
    }
    const auto [mu, nu] = split(la);
    if (mu + nu != la || mu.is_zero() || nu.is_zero()) {
      throw std::invalid_argument("invalid split of " + la.str() + " into " + mu.str() + " + " + nu.str());
    }
    CharElement f = prefix_member(members, mu) * prefix_member(members, nu);
    for (const auto& s : saturated_dominants(la)) {
      if (s == la) continue;
      const Coefficient n = oracle.value(mu, nu, s);
      if (n != 0) f -= scale(prefix_member(members, s), n);
    }
    members.emplace(la, std::move(f));
  }
  return CharacterFamily(l, bound, std::move(members));
}

StructureConstantRow extract_structure_constants(const CharacterFamily& fam, const DominantWeight& mu,
                                                 const DominantWeight& nu) {
  const auto top = mu + nu;
  if (!fam.contains(top)) {
    throw BoundExceeded("product f" + mu.str() + " f" + nu.str() + " needs weights beyond bound " +
                        std::to_string(fam.bound()));
  }
  const CharElement product = fam.member(mu) * fam.member(nu);
  StructureConstantRow row;
  for (const auto& t : saturated_dominants(top)) {
    Coefficient n = product.coefficient(t);
    for (const auto& [s, ns] : row) n -= ns * fam.member(s).coefficient(t);
    if (n != 0) row.emplace(t, std::move(n));
  }
  return row;
}

Coefficient multiplicity_via_eq1(const CharacterFamily::Members& prefix, const DominantWeight& mu,
                                 const DominantWeight& nu, const DominantWeight& t,
                                 const StructureConstantRow& row) {
  const auto la = mu + nu;
  const CharElement product = prefix_member(prefix, mu) * prefix_member(prefix, nu);
  Coefficient n = product.coefficient(t);
  for (const auto& s : saturated_dominants(la)) {
    if (s == la) continue;
    const CharElement& fs = prefix_member(prefix, s);
    n -= row_at(row, s) * fs.coefficient(t);
  }
  return n;
}

// ---------------------------------------------------------------------------
// Condition checks

ConditionReport check_condition1(const CharacterFamily& fam, CharacterTable& table) {
  ConditionReport report;
  const int l = fam.rank().value();
  for (const auto& [la, f] : fam.members()) {
    const CharElement& ch = table.character(la);
    for (const auto& mu : saturated_dominants(la)) {
      if (support_size(root_coordinates(la.weight(), mu.weight())) >= l) continue;
      ++report.condition1_checked;
      const Coefficient expected = ch.coefficient(mu);
      const Coefficient found = f.coefficient(mu);
      if (expected != found) report.condition1_violations.push_back({la, mu, expected, found});
    }
  }
  return report;
}

ConditionReport check_condition2(const CharacterFamily& fam) {
  ConditionReport report;
  std::map<std::pair<DominantWeight, DominantWeight>, StructureConstantRow> rows;
  auto row = [&](const DominantWeight& a, const DominantWeight& b) -> const StructureConstantRow& {
    auto it = rows.find({a, b});
    if (it == rows.end()) it = rows.emplace(std::pair{a, b}, extract_structure_constants(fam, a, b)).first;
    return it->second;
  };

  for (const auto& [mu, fmu] : fam.members()) {
    for (const auto& [nu, fnu] : fam.members()) {
      const auto top = mu + nu;
      if (!fam.contains(top)) continue;
      const auto nu_dual = neg_w0(nu);
      for (const auto& la : saturated_dominants(top)) {
        if (!fam.contains(la + nu_dual)) {
          report.skipped.push_back({mu, nu, la});
          continue;
        }
        ++report.condition2_checked;
        const Coefficient lhs = row_at(row(mu, nu), la);
        const Coefficient rhs = row_at(row(la, nu_dual), mu);
        if (lhs != rhs) report.condition2_violations.push_back({mu, nu, la, lhs, rhs});
      }
    }
  }
  return report;
}

TheoremVerdict verify_theorem(const CharacterFamily& fam, CharacterTable& table) {
  TheoremVerdict verdict;
  verdict.report = check_condition1(fam, table);
  ConditionReport second = check_condition2(fam);
  verdict.report.condition2_violations = std::move(second.condition2_violations);
  verdict.report.skipped = std::move(second.skipped);
  verdict.report.condition2_checked = second.condition2_checked;
  if (verdict.conditions_pass()) {
    for (const auto& [la, f] : fam.members()) {
      if (f != table.character(la)) verdict.differing_members.push_back(la);
    }
    verdict.members_equal = verdict.differing_members.empty();
  }
  return verdict;
}

CharacterFamily perturb_family(const CharacterFamily& fam, const DominantWeight& la, const DominantWeight& mu,
                               const Coefficient& delta) {
  if (delta == 0) throw InvariantViolation("perturbation delta must be nonzero");
  if (!fam.contains(la)) throw InvariantViolation("site lambda " + la.str() + " is outside the family bound");
  if (mu == la) throw InvariantViolation("the leading coefficient n_lambda(lambda) = 1 cannot be perturbed");
  if (mu.rank() != la.rank() || !dominance_leq(mu, la)) {
    throw InvariantViolation("site " + mu.str() + " is not in the saturated set of " + la.str());
  }
  CharacterFamily::Members members = fam.members();
  members.at(la).add_term(mu, delta);
  return CharacterFamily(fam.rank(), fam.bound(), std::move(members));
}

// ---------------------------------------------------------------------------
// Multiplicity form vs structure-constant form

namespace {

struct Eq3Terms {
  Coefficient eq1;
  Coefficient eq2;
  Coefficient g;
};

Eq3Terms eq3_terms(const CharacterFamily& fam, const DominantWeight& mu, const DominantWeight& nu,
                   const DominantWeight& t, const StructureConstantRow& row) {
  const auto la = mu + nu;
  const Coefficient conv = (fam.member(mu) * fam.member(nu)).coefficient(t);
  Coefficient g = conv;
  Coefficient eq2 = conv;
  for (const auto& s : saturated_dominants(la)) {
    if (s == t) continue;
    const Coefficient term = row_at(row, s) * fam.multiplicity(s, t);
    eq2 -= term;
    if (s != la) g -= term;
  }
  return {multiplicity_via_eq1(fam.members(), mu, nu, t, row), eq2, g};
}

bool relation(const Eq3Terms& e, const DominantWeight& la, const DominantWeight& t, const Coefficient& member,
              const Coefficient& row_value) {
  if (t == la) return e.eq1 == 1 && e.eq2 == 1 && member == 1 && row_value == 1;
  return member + row_value == e.g;
}

}  // namespace

Eq3Probe eq3_probe(const CharacterFamily& fam, const DominantWeight& mu, const DominantWeight& nu,
                   const DominantWeight& t, const StructureConstantRow* row) {
  const auto la = mu + nu;
  if (!fam.contains(la)) throw BoundExceeded("eq3 probe at " + la.str() + " outside the family bound");

  std::optional<StructureConstantRow> own;
  if (!row) row = &own.emplace(extract_structure_constants(fam, mu, nu));

  Eq3Probe p;
  const Eq3Terms base = eq3_terms(fam, mu, nu, t, *row);
  p.eq1_value = base.eq1;
  p.eq2_value = base.eq2;
  p.g = base.g;
  p.member_value = fam.multiplicity(la, t);
  p.row_value = row_at(*row, t);
  p.eq1_matches_member = p.eq1_value == p.member_value;
  p.eq2_matches_row = p.eq2_value == p.row_value;
  p.relation_holds = relation(base, la, t, p.member_value, p.row_value);
  p.invariant_under_probes = true;

  if (own && t != la && dominance_leq(t, la)) {
    // Edits g must not see: n_lambda(t) itself, and n_lambda(x) for x not
    // strictly above t.
    std::vector<DominantWeight> sites{t};
    for (const auto& x : saturated_dominants(la)) {
      if (x != la && x != t && !dominance_leq(t, x)) sites.push_back(x);
    }
    for (const auto& x : sites) {
      for (int delta : {1, -1}) {
        const CharacterFamily edited = perturb_family(fam, la, x, delta);
        const StructureConstantRow edited_row = extract_structure_constants(edited, mu, nu);
        const Eq3Terms e = eq3_terms(edited, mu, nu, t, edited_row);
        ++p.probes;
        const bool same_g = e.g == base.g;
        const bool holds = relation(e, la, t, edited.multiplicity(la, t), row_at(edited_row, t));
        p.invariant_under_probes = p.invariant_under_probes && same_g && holds;
      }
    }
  }
  return p;
}

}  // namespace charrig
