#ifndef CHARRIG_CHAR_RING_HPP
#define CHARRIG_CHAR_RING_HPP

#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "charrig/weight_lattice.hpp"

namespace charrig {

using Coefficient = boost::multiprecision::cpp_int;

// Element of the Weyl-invariant subring Z[weights]^W, stored sparsely in the
// orbit-sum basis h(mu). Keys are dominant; zero coefficients are never kept.
class CharElement {
 public:
  using Terms = std::map<DominantWeight, Coefficient>;

  explicit CharElement(Rank l) : rank_(l) {}

  static CharElement orbit_sum(const DominantWeight& mu);
  // e(0) == h(0), the multiplicative identity.
  static CharElement one(Rank l) { return orbit_sum(DominantWeight::zero(l)); }

  Rank rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Coefficient of h(mu); zero if absent.
  Coefficient coefficient(const DominantWeight& mu) const;
  // Coefficient of e(x), i.e. of h(dominant representative of x).
  Coefficient e_coefficient(const Weight& x) const;

  // Adds c to the coefficient of h(mu), pruning a resulting zero.
  void add_term(const DominantWeight& mu, const Coefficient& c);

  // Keys that are maximal for dominance among the keys, in decreasing
  // processing order.
  std::vector<DominantWeight> leading_dominants() const;

  // Number of e-basis terms counted with multiplicity: sum c_mu |W mu|.
  Coefficient dimension() const;

  CharElement& operator+=(const CharElement& o);
  CharElement& operator-=(const CharElement& o);
  friend CharElement operator+(CharElement a, const CharElement& b) { return a += b; }
  friend CharElement operator-(CharElement a, const CharElement& b) { return a -= b; }
  friend CharElement operator*(const CharElement& a, const CharElement& b);

  bool operator==(const CharElement&) const = default;

 private:
  Rank rank_;
  Terms terms_;
};

CharElement scale(const CharElement& f, const Coefficient& c);

// h(mu) * h(nu) as counts of pairs (x, y) in the two orbits with x + y
// landing on each dominant weight.
CharElement multiply_orbit_sums(const DominantWeight& mu, const DominantWeight& nu);

}  // namespace charrig

#endif
