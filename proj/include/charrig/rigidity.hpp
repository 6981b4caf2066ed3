#ifndef CHARRIG_RIGIDITY_HPP
#define CHARRIG_RIGIDITY_HPP

// Candidate character families f_lambda, their structure constants
// n_{mu,nu}^lambda, reconstruction of a family from structure constants and
// the two conditions that force a family to be the Weyl characters:
//
//   (1) n_lambda(mu) = m_lambda(mu) whenever lambda - mu involves fewer than
//       l simple roots;
//   (2) n_{mu,nu}^lambda = n_{lambda,-w0 nu}^mu.
//
// Everything is truncated to the dominant weights of level <= bound, where
// level(lambda) = <lambda, 2 rho>.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "charrig/char_ring.hpp"
#include "charrig/weyl_oracle.hpp"

namespace charrig {

class CharacterFamily {
 public:
  using Members = std::map<DominantWeight, CharElement>;

  // Throws InvariantViolation unless members are indexed by exactly the
  // dominant weights of level <= bound, each f_lambda has h(lambda)
  // coefficient 1 and is supported on the saturated set of lambda.
  CharacterFamily(Rank l, std::int64_t bound, Members members);

  Rank rank() const { return rank_; }
  std::int64_t bound() const { return bound_; }
  const Members& members() const { return members_; }

  bool contains(const DominantWeight& la) const { return la.rank() == rank_ && la.level() <= bound_; }
  // Throws BoundExceeded outside the bound.
  const CharElement& member(const DominantWeight& la) const;
  // n_lambda(mu).
  Coefficient multiplicity(const DominantWeight& la, const DominantWeight& mu) const;

  bool operator==(const CharacterFamily&) const = default;

 private:
  Rank rank_;
  std::int64_t bound_;
  Members members_;
};

// The Weyl characters ch_lambda for every lambda in the bound.
CharacterFamily weyl_family(Rank l, std::int64_t bound, CharacterTable& table);

// Sparse n_{mu,nu}^lambda. Symmetric in (mu, nu); stored once per unordered
// pair. A row (mu, nu) is covered when its top entry n^{mu+nu} = 1 is
// present; absent entries of a covered row are zero.
class StructureConstantTable {
 public:
  using Key = std::tuple<DominantWeight, DominantWeight, DominantWeight>;

  explicit StructureConstantTable(Rank l) : rank_(l) {}

  // Every row (mu, nu) with level(mu+nu) <= bound, from the given oracle rows.
  static StructureConstantTable littlewood_richardson(Rank l, std::int64_t bound, CharacterTable& table);

  Rank rank() const { return rank_; }
  const std::map<Key, Coefficient>& entries() const { return entries_; }

  // Throws InvariantViolation if lambda is outside the saturated set of
  // mu+nu, if a top entry is not 1, or if the value conflicts with one
  // already stored.
  void set(const DominantWeight& mu, const DominantWeight& nu, const DominantWeight& la,
           const Coefficient& value);
  void set_row(const DominantWeight& mu, const DominantWeight& nu, const StructureConstantRow& row);

  bool covers(const DominantWeight& mu, const DominantWeight& nu) const;
  // nullopt when the row is not covered.
  std::optional<Coefficient> value(const DominantWeight& mu, const DominantWeight& nu,
                                   const DominantWeight& la) const;

  bool operator==(const StructureConstantTable&) const = default;

 private:
  Rank rank_;
  std::map<Key, Coefficient> entries_;
};

// Source of structure constants for reconstruction.
class StructureConstantOracle {
 public:
  virtual ~StructureConstantOracle() = default;
  // Throws OracleIncomplete when the triple cannot be answered.
  virtual Coefficient value(const DominantWeight& mu, const DominantWeight& nu, const DominantWeight& la) = 0;
};

// Littlewood-Richardson coefficients from Weyl character arithmetic.
class LrOracle : public StructureConstantOracle {
 public:
  explicit LrOracle(CharacterTable& table) : table_(table) {}
  Coefficient value(const DominantWeight& mu, const DominantWeight& nu, const DominantWeight& la) override;

 private:
  CharacterTable& table_;
  std::map<std::pair<DominantWeight, DominantWeight>, StructureConstantRow> rows_;
};

class TableOracle : public StructureConstantOracle {
 public:
  explicit TableOracle(const StructureConstantTable& table) : table_(table) {}
  Coefficient value(const DominantWeight& mu, const DominantWeight& nu, const DominantWeight& la) override;

 private:
  const StructureConstantTable& table_;
};

// Chooses lambda = mu + nu with mu, nu nonzero dominant.
using SplitRule = std::function<std::pair<DominantWeight, DominantWeight>(const DominantWeight&)>;

// lambda = omega_i + (lambda - omega_i) with i the first nonzero coordinate.
std::pair<DominantWeight, DominantWeight> default_split(const DominantWeight& la);
// Uniformly random valid split; deterministic for a fixed seed.
SplitRule random_split(std::uint64_t seed);

// Builds f_lambda for every lambda of level <= bound in increasing
// processing order: f_0 = e(0), f_{omega_i} = h(omega_i), otherwise
// f_lambda = f_mu f_nu - sum_{s != lambda} n_{mu,nu}^s f_s for the split
// (mu, nu) of lambda. Oracle failures propagate as OracleIncomplete.
CharacterFamily reconstruct_family(StructureConstantOracle& oracle, Rank l, std::int64_t bound,
                                   const SplitRule& split = default_split);

// n_{mu,nu}^t for all t, top-down from t = mu+nu:
// n^t = [f_mu f_nu]_t - sum_{s above t} n^s n_s(t). Nonzero entries only.
// Throws BoundExceeded if mu+nu is outside the family.
StructureConstantRow extract_structure_constants(const CharacterFamily& fam, const DominantWeight& mu,
                                                 const DominantWeight& nu);

// n_lambda(t) for lambda = mu+nu from the members strictly below lambda:
// [f_mu f_nu]_t - sum_{s != lambda} row[s] n_s(t).
// Throws BoundExceeded when a needed member is missing from prefix.
Coefficient multiplicity_via_eq1(const CharacterFamily::Members& prefix, const DominantWeight& mu,
                                 const DominantWeight& nu, const DominantWeight& t,
                                 const StructureConstantRow& row);

struct Condition1Violation {
  DominantWeight lambda;
  DominantWeight mu;
  Coefficient expected;  // m_lambda(mu)
  Coefficient found;     // n_lambda(mu)
};

struct Condition2Violation {
  DominantWeight mu;
  DominantWeight nu;
  DominantWeight lambda;
  Coefficient lhs;  // n_{mu,nu}^lambda
  Coefficient rhs;  // n_{lambda,-w0 nu}^mu
};

struct Triple {
  DominantWeight mu;
  DominantWeight nu;
  DominantWeight lambda;
  bool operator==(const Triple&) const = default;
};

struct ConditionReport {
  std::vector<Condition1Violation> condition1_violations;
  std::vector<Condition2Violation> condition2_violations;
  // Condition-2 triples whose dual side leaves the bound.
  std::vector<Triple> skipped;
  std::size_t condition1_checked = 0;
  std::size_t condition2_checked = 0;

  bool condition1_pass() const { return condition1_violations.empty(); }
  bool condition2_pass() const { return condition2_violations.empty(); }
};

ConditionReport check_condition1(const CharacterFamily& fam, CharacterTable& table);
ConditionReport check_condition2(const CharacterFamily& fam);

struct TheoremVerdict {
  ConditionReport report;
  // Set only when both conditions pass.
  std::optional<bool> members_equal;
  std::vector<DominantWeight> differing_members;

  bool conditions_pass() const { return report.condition1_pass() && report.condition2_pass(); }
};

// Runs both checks; when both pass, compares the family memberwise with
// the Weyl characters.
TheoremVerdict verify_theorem(const CharacterFamily& fam, CharacterTable& table);

// Copy with n_lambda(mu) += delta. Throws InvariantViolation when mu is
// lambda itself, mu is outside the saturated set, lambda is outside the
// bound, or delta is 0.
CharacterFamily perturb_family(const CharacterFamily& fam, const DominantWeight& la, const DominantWeight& mu,
                               const Coefficient& delta);

// Links the multiplicity form and the structure-constant form of the
// product expansion at one weight t of lambda = mu + nu. For t != lambda:
//
//   n_lambda(t) + n_{mu,nu}^t = g,
//   g = [f_mu f_nu]_t - sum_{s != lambda, t} n^s n_s(t),
//
// where g reads neither n_lambda(t) nor n_lambda(x) for x not above t.
struct Eq3Probe {
  Coefficient eq1_value;     // n_lambda(t) recomputed from lower data
  Coefficient eq2_value;     // n^t recomputed from the other row entries
  Coefficient member_value;  // n_lambda(t) as stored
  Coefficient row_value;     // n^t as supplied
  Coefficient g;
  bool eq1_matches_member = false;
  bool eq2_matches_row = false;
  bool relation_holds = false;
  // g and the relation survive edits of n_lambda(t) and of n_lambda(x) for
  // x outside the interval above t.
  bool invariant_under_probes = false;
  std::size_t probes = 0;

  bool ok() const { return eq1_matches_member && eq2_matches_row && relation_holds && invariant_under_probes; }
};

// row defaults to extract_structure_constants(fam, mu, nu); probes are only
// run in that case.
Eq3Probe eq3_probe(const CharacterFamily& fam, const DominantWeight& mu, const DominantWeight& nu,
                   const DominantWeight& t, const StructureConstantRow* row = nullptr);

inline bool eq3_consistency(const CharacterFamily& fam, const DominantWeight& mu, const DominantWeight& nu,
                            const DominantWeight& t, const StructureConstantRow* row = nullptr) {
  return eq3_probe(fam, mu, nu, t, row).ok();
}

}  // namespace charrig

#endif
