#include "doctest.h"

#include <set>

#include "brute_force.hpp"
#include "charrig/errors.hpp"
#include "charrig/weight_lattice.hpp"
#include "test_helpers.hpp"

using namespace charrig;
using charrig::test::dw;
using charrig::test::eps;

namespace {

// Every dominant weight whose canonical eps-vector sums to at most max_sum.
std::vector<DominantWeight> small_dominants(int l, int max_sum) {
  std::vector<DominantWeight> out;
  // level(omega_i) = i(l+1-i) <= l * i, so level <= l * (eps sum).
  for (const auto& d : dominants_up_to(Rank(l), std::int64_t{l} * max_sum)) {
    int s = 0;
    for (int x : d.eps()) s += x;
    if (s <= max_sum) out.push_back(d);
  }
  return out;
}

}  // namespace

TEST_CASE("from_fundamental") {
  CHECK(from_fundamental(Rank(2), std::vector{1, 0}).eps() == std::vector{1, 0, 0});
  CHECK(from_fundamental(Rank(2), std::vector{1, 1}).eps() == std::vector{2, 1, 0});
  CHECK(from_fundamental(Rank(2), std::vector{0, 0}).eps() == std::vector{0, 0, 0});
  CHECK(from_fundamental(Rank(2), std::vector{1, -1}).eps() == std::vector{1, 0, 1});
  CHECK_FALSE(from_fundamental(Rank(2), std::vector{1, -1}).is_dominant());
  CHECK_THROWS_AS(from_fundamental(Rank(2), std::vector{1, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(dominant_from_fundamental(Rank(2), std::vector{1, -1}), NotDominant);
  CHECK_THROWS(Rank(0));
}

TEST_CASE("canonical form") {
  CHECK(eps({3, 3, 3}) == Weight::zero(Rank(2)));
  CHECK(eps({5, 4, 3}).eps() == std::vector{2, 1, 0});
  CHECK(eps({-1, 0, 2}).eps() == std::vector{0, 1, 3});
  CHECK(dw({1, 1}).fundamental() == std::vector{1, 1});
}

TEST_CASE("dominant_representative") {
  CHECK(dominant_representative(eps({0, 1, 0})) == dw({1, 0}));
  CHECK(dominant_representative(eps({0, 2, 1})) == dw({1, 1}));
  CHECK(dominant_representative(eps({3, 3, 3})) == DominantWeight::zero(Rank(2)));
}

TEST_CASE("orbit") {
  const auto o = orbit(dw({1, 0}));
  CHECK(o.size() == 3);
  CHECK(std::set<Weight>(o.begin(), o.end()) == std::set<Weight>{eps({1, 0, 0}), eps({0, 1, 0}), eps({0, 0, 1})});
  CHECK(orbit(dw({1, 1})).size() == 6);
  CHECK(orbit(DominantWeight::zero(Rank(2))).size() == 1);

  SUBCASE("orbit members dominantize back and sizes match brute force") {
    for (int l : {1, 2, 3, 4}) {
      for (const auto& d : small_dominants(l, 6)) {
        const auto members = orbit(d);
        CHECK(members.size() == brute::orbit_size(d.eps()));
        CHECK(orbit_size(d) == members.size());
        CHECK(std::set<Weight>(members.begin(), members.end()).size() == members.size());
        for (const auto& x : members) CHECK(dominant_representative(x) == d);
      }
    }
  }
}

TEST_CASE("dominance_leq") {
  CHECK(dominance_leq(dw({0, 0}), dw({1, 1})));
  CHECK(dominance_leq(dw({1, 1}), dw({1, 1})));
  CHECK(dominance_leq(dw({0, 1}), dw({2, 0})));
  CHECK_FALSE(dominance_leq(dw({1, 0}), dw({1, 1})));  // different lattice class
  CHECK_FALSE(dominance_leq(dw({2, 0}), dw({1, 1})));
  CHECK_THROWS_AS(dominance_leq(dw({1, 0}), dw({1, 0, 0})), RankMismatch);
}

TEST_CASE("dominance is a partial order and agrees with root coordinates") {
  for (int l : {2, 3}) {
    const auto ws = small_dominants(l, 6);
    for (const auto& a : ws) {
      CHECK(dominance_leq(a, a));
      for (const auto& b : ws) {
        if (dominance_leq(a, b) && dominance_leq(b, a)) CHECK(a == b);
        for (const auto& c : ws) {
          if (dominance_leq(a, b) && dominance_leq(b, c)) CHECK(dominance_leq(a, c));
        }
        // Root coordinates exist iff same lattice class; nonneg iff dominated.
        bool same_class = true;
        RootVector beta;
        try {
          beta = root_coordinates(b.weight(), a.weight());
        } catch (const NotInRootLattice&) {
          same_class = false;
        }
        if (same_class) {
          const bool nonneg = std::all_of(beta.coeffs.begin(), beta.coeffs.end(), [](int k) { return k >= 0; });
          CHECK(nonneg == dominance_leq(a, b));
        } else {
          CHECK_FALSE(dominance_leq(a, b));
        }
      }
    }
  }
}

TEST_CASE("root_coordinates and support") {
  CHECK(root_coordinates(dw({1, 1}).weight(), dw({0, 0}).weight()).coeffs == std::vector{1, 1});
  CHECK(root_coordinates(dw({1, 1}).weight(), dw({1, 1}).weight()).coeffs == std::vector{0, 0});
  CHECK(root_coordinates(dw({2, 1}).weight(), dw({0, 2}).weight()).coeffs == std::vector{1, 0});
  CHECK_THROWS_AS(root_coordinates(dw({1, 0}).weight(), dw({0, 0}).weight()), NotInRootLattice);

  CHECK(support(RootVector{{1, 1}}) == std::vector{1, 2});
  CHECK(support_size(RootVector{{1, 1}}) == 2);
  CHECK(support(RootVector{{0, 0}}).empty());
  CHECK(support_size(RootVector{{0, 0}}) == 0);
  CHECK(support(RootVector{{1, 0}}) == std::vector{1});
  CHECK(support_size(RootVector{{1, 0}}) == 1);
}

TEST_CASE("mixed_less") {
  CHECK(mixed_less(dw({1, 0}), dw({1, 1})));
  CHECK(mixed_less(dw({0, 0}), dw({1, 1})));
  CHECK_FALSE(mixed_less(dw({2, 0}), dw({1, 1})));
  CHECK_FALSE(mixed_less(dw({1, 1}), dw({2, 0})));
  CHECK_FALSE(mixed_less(dw({1, 1}), dw({1, 1})));

  SUBCASE("irreflexive and compatible with the processing order") {
    for (int l : {2, 3}) {
      const auto ws = small_dominants(l, 6);
      for (const auto& a : ws) {
        CHECK_FALSE(mixed_less(a, a));
        for (const auto& b : ws) {
          // Strictly increasing level along the relation rules out cycles.
          if (mixed_less(a, b)) CHECK(a.level() < b.level());
        }
      }
    }
  }
}

TEST_CASE("level") {
  CHECK(dw({1, 0}).level() == 2);
  CHECK(dw({0, 1}).level() == 2);
  CHECK(dw({1, 1}).level() == 4);
  CHECK(dw({0, 1, 0}).level() == 4);
  CHECK(dw({1, 0, 0}).level() == 3);
  // Shift invariant.
  CHECK(level(eps({5, 4, 3})) == level(eps({2, 1, 0})));
}

TEST_CASE("saturated_dominants") {
  CHECK(saturated_dominants(dw({1, 1})) == std::vector{dw({1, 1}), dw({0, 0})});
  CHECK(saturated_dominants(dw({1, 0})) == std::vector{dw({1, 0})});
  CHECK(saturated_dominants(dw({2, 1})) == std::vector{dw({2, 1}), dw({0, 2}), dw({1, 0})});

  SUBCASE("matches a dominance filter over all small dominants") {
    for (int l : {2, 3}) {
      const auto ws = small_dominants(l, 7);
      for (const auto& la : ws) {
        int sum = 0;
        for (int x : la.eps()) sum += x;
        if (sum > 5) continue;
        std::vector<DominantWeight> expected;
        for (const auto& mu : ws) {
          if (dominance_leq(mu, la)) expected.push_back(mu);
        }
        std::sort(expected.begin(), expected.end(), std::greater<>());
        CHECK(saturated_dominants(la) == expected);
      }
    }
  }
}

TEST_CASE("neg_w0") {
  CHECK(neg_w0(dw({1, 0})) == dw({0, 1}));
  CHECK(neg_w0(dw({1, 1})) == dw({1, 1}));
  CHECK(neg_w0(dw({2, 0, 1})) == dw({1, 0, 2}));
  for (const auto& d : small_dominants(3, 6)) {
    CHECK(neg_w0(neg_w0(d)) == d);
    // -w0 is minus the longest element, i.e. negate then dominantize.
    CHECK(neg_w0(d) == dominant_representative(-d.weight()));
  }
}

TEST_CASE("rho, positive roots, pairing") {
  CHECK(rho(Rank(2)).eps() == std::vector{2, 1, 0});
  const auto roots = positive_roots(Rank(2));
  CHECK(roots.size() == 3);
  CHECK(roots == std::vector<std::vector<int>>{{1, -1, 0}, {1, 0, -1}, {0, 1, -1}});
  CHECK(positive_roots(Rank(4)).size() == 10);
  CHECK(pairing(std::vector{2, 1, 0}, std::vector{1, -1, 0}) == 1);
  for (int l : {1, 2, 3, 4}) {
    for (int i = 0; i < l; ++i) {
      std::vector<int> alpha(l + 1, 0);
      alpha[i] = 1;
      alpha[i + 1] = -1;
      CHECK(pairing(alpha, alpha) == 2);
    }
  }
  CHECK_THROWS_AS(pairing(std::vector{1, 0, 0}, std::vector{1, 1, 0}), std::invalid_argument);
  CHECK_NOTHROW(pairing(std::vector{1, 1, 0}, std::vector{2, 0, 0}));
}

TEST_CASE("dominants_up_to") {
  const auto ws = dominants_up_to(Rank(2), 4);
  CHECK(ws == std::vector{dw({0, 0}), dw({1, 0}), dw({0, 1}), dw({2, 0}), dw({1, 1}), dw({0, 2})});
  CHECK(dominants_up_to(Rank(2), 12).size() == 28);
  CHECK(dominants_up_to(Rank(3), 0) == std::vector{DominantWeight::zero(Rank(3))});
  CHECK(dominants_up_to(Rank(3), -1).empty());
}
