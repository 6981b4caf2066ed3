#ifndef CHARRIG_WEIGHT_LATTICE_HPP
#define CHARRIG_WEIGHT_LATTICE_HPP

// Root and weight lattice combinatorics for type A_l.
//
// Weights are stored as epsilon-coordinate vectors of length l+1, taken
// modulo the all-ones vector and normalized so the smallest entry is 0.
// The Weyl group S_{l+1} acts by permuting coordinates, dominance is a
// partial-sum test and fundamental coordinates are c_i = eps_i - eps_{i+1}.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace charrig {

class Rank {
 public:
  explicit Rank(int l);

  int value() const { return l_; }
  // Number of epsilon coordinates, l+1.
  int dim() const { return l_ + 1; }

  auto operator<=>(const Rank&) const = default;

 private:
  int l_;
};

class Weight {
 public:
  // Takes any representative; it is normalized to min(eps) == 0.
  explicit Weight(std::vector<int> eps);

  static Weight zero(Rank l);

  Rank rank() const { return Rank(static_cast<int>(eps_.size()) - 1); }
  const std::vector<int>& eps() const { return eps_; }
  std::vector<int> fundamental() const;
  bool is_dominant() const;

  Weight operator-() const;
  friend Weight operator+(const Weight& a, const Weight& b);
  friend Weight operator-(const Weight& a, const Weight& b);

  bool operator==(const Weight&) const = default;
  // Lexicographic on the canonical vector; only used for container keys.
  auto operator<=>(const Weight&) const = default;

  // Fundamental coordinates, e.g. "(1,0,2)".
  std::string str() const;

 private:
  std::vector<int> eps_;
};

// sum over positive roots: <w, 2 rho>. Shift invariant, integer valued, and
// strictly positive on nonzero dominant weights and on nonzero sums of
// positive roots.
std::int64_t level(const Weight& w);

class DominantWeight {
 public:
  // Throws NotDominant if the weight is not in the dominant chamber.
  explicit DominantWeight(Weight w);

  static DominantWeight zero(Rank l) { return DominantWeight(Weight::zero(l)); }

  const Weight& weight() const { return w_; }
  Rank rank() const { return w_.rank(); }
  const std::vector<int>& eps() const { return w_.eps(); }
  std::vector<int> fundamental() const { return w_.fundamental(); }
  std::int64_t level() const { return level_; }
  bool is_zero() const;
  std::string str() const { return w_.str(); }

  friend DominantWeight operator+(const DominantWeight& a, const DominantWeight& b);

  bool operator==(const DominantWeight& o) const { return w_ == o.w_; }
  // Processing order: level first, ties broken lexicographically on eps.
  // A linear extension of both dominance and "difference is dominant".
  std::strong_ordering operator<=>(const DominantWeight& o) const;

 private:
  Weight w_;
  std::int64_t level_;
};

// Coefficients of beta = sum k_i alpha_i in the simple-root basis.
struct RootVector {
  std::vector<int> coeffs;
  bool operator==(const RootVector&) const = default;
};

Weight from_fundamental(Rank l, std::span<const int> coords);
DominantWeight dominant_from_fundamental(Rank l, std::span<const int> coords);
// omega_i for 1 <= i <= l.
DominantWeight fundamental_weight(Rank l, int i);
// 0 if d is not a fundamental weight, otherwise the index i with d == omega_i.
int fundamental_index(const DominantWeight& d);

DominantWeight dominant_representative(const Weight& w);

// All distinct coordinate permutations; lexicographically decreasing.
std::vector<Weight> orbit(const DominantWeight& d);
std::size_t orbit_size(const DominantWeight& d);

// mu <= la in the dominance order: la - mu is a nonnegative integer
// combination of simple roots.
bool dominance_leq(const Weight& mu, const Weight& la);
inline bool dominance_leq(const DominantWeight& mu, const DominantWeight& la) {
  return dominance_leq(mu.weight(), la.weight());
}

// Throws NotInRootLattice when la - mu is not in the root lattice.
RootVector root_coordinates(const Weight& la, const Weight& mu);

// 1-based indices of the simple roots with nonzero coefficient.
std::vector<int> support(const RootVector& beta);
int support_size(const RootVector& beta);

// mu < la if mu strictly below la in dominance or la - mu nonzero dominant.
bool mixed_less(const DominantWeight& mu, const DominantWeight& la);

// Dominant weights of the saturated set of la, in decreasing processing
// order (la first).
std::vector<DominantWeight> saturated_dominants(const DominantWeight& la);

// -w0: reverses fundamental coordinates, omega_i -> omega_{l+1-i}.
DominantWeight neg_w0(const DominantWeight& d);

Weight rho(Rank l);
std::vector<std::vector<int>> positive_roots(Rank l);
// Integer dot product. Both vectors must have equal coordinate sums, or at
// least one must sum to zero; throws std::invalid_argument otherwise.
std::int64_t pairing(std::span<const int> x, std::span<const int> y);

// Every dominant weight with level <= bound, in increasing processing order.
std::vector<DominantWeight> dominants_up_to(Rank l, std::int64_t bound);

}  // namespace charrig

#endif
