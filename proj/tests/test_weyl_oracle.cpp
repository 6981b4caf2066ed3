#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <thread>

#include "brute_force.hpp"
#include "charrig/weyl_oracle.hpp"
#include "test_helpers.hpp"

using namespace charrig;
using charrig::test::dw;

namespace {

std::filesystem::path fresh_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("charrig_test_" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("freudenthal worked examples") {
  const auto adj = freudenthal_character(dw({1, 1}));
  CHECK(adj.terms().size() == 2);
  CHECK(adj.coefficient(dw({1, 1})) == 1);
  CHECK(adj.coefficient(dw({0, 0})) == 2);

  const auto sym2 = freudenthal_character(dw({2, 0}));
  CHECK(sym2.coefficient(dw({2, 0})) == 1);
  CHECK(sym2.coefficient(dw({0, 1})) == 1);

  const auto v21 = freudenthal_character(dw({2, 1}));
  CHECK(v21.coefficient(dw({2, 1})) == 1);
  CHECK(v21.coefficient(dw({0, 2})) == 1);
  CHECK(v21.coefficient(dw({1, 0})) == 2);
  CHECK(v21.dimension() == 15);

  for (int l : {1, 2, 3, 5}) {
    for (int i = 1; i <= l; ++i) {
      const auto w = fundamental_weight(Rank(l), i);
      CHECK(freudenthal_character(w) == CharElement::orbit_sum(w));
    }
  }
}

TEST_CASE("freudenthal agrees with tableau counts") {
  for (int l : {1, 2, 3, 4}) {
    const std::int64_t bound = l == 4 ? 12 : 14;
    for (const auto& la : dominants_up_to(Rank(l), bound)) {
      const auto ch = freudenthal_character(la);
      const auto tableaux = brute::tableau_weights(la.eps());
      std::size_t dominant_count = 0;
      for (const auto& [w, m] : tableaux) {
        if (!std::is_sorted(w.rbegin(), w.rend())) continue;
        ++dominant_count;
        CHECK(ch.coefficient(DominantWeight(Weight(w))) == m);
      }
      CHECK(ch.terms().size() == dominant_count);
    }
  }
}

TEST_CASE("weyl_dim") {
  CHECK(weyl_dim(dw({1, 0})) == 3);
  CHECK(weyl_dim(dw({1, 1})) == 8);
  CHECK(weyl_dim(DominantWeight::zero(Rank(4))) == 1);
  CHECK(weyl_dim(dw({1, 0, 1})) == 15);
  for (const auto& la : dominants_up_to(Rank(3), 10)) CHECK(weyl_dim(la) == brute::dimension(la.eps()));
}

TEST_CASE("multiplicity_table") {
  const auto la = dw({2, 1});
  const auto t = multiplicity_table(la, freudenthal_character(la));
  REQUIRE(t.mults.size() == 3);
  CHECK(t.mults[0].first == la);
  CHECK(t.mults[0].second == 1);
  CHECK(t.mults[2].first == dw({1, 0}));
  CHECK(t.mults[2].second == 2);
}

TEST_CASE("decompose") {
  CharacterTable table;
  CHECK(table.decompose(freudenthal_character(dw({1, 1}))) == StructureConstantRow{{dw({1, 1}), 1}});
  CHECK(table.decompose(CharElement::one(Rank(2))) == StructureConstantRow{{dw({0, 0}), 1}});
  // ch(1,1) = h(1,1) + 2 h(0), so h(1,1) = ch(1,1) - 2 ch(0).
  CHECK(table.decompose(CharElement::orbit_sum(dw({1, 1}))) ==
        StructureConstantRow{{dw({1, 1}), 1}, {dw({0, 0}), -2}});
  CHECK(table.decompose(CharElement(Rank(2))).empty());

  for (const auto& la : dominants_up_to(Rank(3), 10)) {
    CHECK(table.decompose(table.character(la)) == StructureConstantRow{{la, 1}});
  }
}

TEST_CASE("tensor_decompose") {
  CharacterTable table;
  CHECK(table.tensor_decompose(dw({1, 0}), dw({0, 1})) == StructureConstantRow{{dw({1, 1}), 1}, {dw({0, 0}), 1}});
  CHECK(table.tensor_decompose(dw({1, 0}), dw({1, 0})) == StructureConstantRow{{dw({2, 0}), 1}, {dw({0, 1}), 1}});
  CHECK(table.tensor_decompose(dw({2, 1}), dw({0, 0})) == StructureConstantRow{{dw({2, 1}), 1}});
  CHECK(table.tensor_decompose(dw({1, 1}), dw({1, 1})) ==
        StructureConstantRow{{dw({2, 2}), 1}, {dw({3, 0}), 1}, {dw({0, 3}), 1}, {dw({1, 1}), 2}, {dw({0, 0}), 1}});
  CHECK(table.tensor_decompose(dw({1, 0, 0}), dw({0, 0, 1})) ==
        StructureConstantRow{{dw({1, 0, 1}), 1}, {dw({0, 0, 0}), 1}});

  SUBCASE("against tableau convolution") {
    const auto ws = dominants_up_to(Rank(2), 6);
    for (const auto& a : ws) {
      for (const auto& b : ws) {
        StructureConstantRow expected;
        for (const auto& [shape, c] : brute::tensor(a.eps(), b.eps())) expected.emplace(DominantWeight(Weight(shape)), c);
        CHECK(table.tensor_decompose(a, b) == expected);
      }
    }
  }
}

TEST_CASE("LR symmetry, duality, dimension and positivity") {
  CharacterTable table;
  for (int l : {2, 3}) {
    const std::int64_t bound = l == 2 ? 8 : 6;
    const auto ws = dominants_up_to(Rank(l), bound);
    for (const auto& mu : ws) {
      for (const auto& nu : ws) {
        if ((mu + nu).level() > bound) continue;
        const auto row = table.tensor_decompose(mu, nu);
        CHECK(row == table.tensor_decompose(nu, mu));
        Coefficient dims = 0;
        for (const auto& [la, c] : row) {
          CHECK(c > 0);
          dims += c * weyl_dim(la);
          // c_{mu,nu}^la = c_{la,-w0 nu}^mu
          const auto dual = table.tensor_decompose(la, neg_w0(nu));
          const auto it = dual.find(mu);
          CHECK((it == dual.end() ? Coefficient(0) : it->second) == c);
        }
        CHECK(row.at(mu + nu) == 1);
        CHECK(dims == weyl_dim(mu) * weyl_dim(nu));
      }
    }
  }
}

TEST_CASE("-w0 is the duality involution") {
  CharacterTable table;
  for (const auto& la : dominants_up_to(Rank(3), 10)) {
    CHECK(weyl_dim(neg_w0(la)) == weyl_dim(la));
    const auto row = table.tensor_decompose(la, neg_w0(la));
    CHECK(row.at(DominantWeight::zero(Rank(3))) == 1);
  }
}

TEST_CASE("character cache spill") {
  const auto dir = fresh_dir("spill");
  const auto la = dw({2, 1});
  {
    CharacterTable table(dir);
    CHECK(table.character(la) == freudenthal_character(la));
    CHECK(table.stats().computed == 1);
    CHECK(std::filesystem::exists(dir / CharacterTable::cache_file_name(la)));
  }
  CHECK(CharacterTable::cache_file_name(la) == "A2_2-1.json");
  {
    CharacterTable table(dir);
    CHECK(table.character(la) == freudenthal_character(la));
    CHECK(table.stats().loaded == 1);
    CHECK(table.stats().computed == 0);
  }
  SUBCASE("corrupt entries are recomputed") {
    for (const std::string bad : {"not json", R"({"rank":2,"lambda":[2,1],"terms":[{"weight":[2,1],"coeff":1}]})",
                                  R"({"rank":2,"lambda":[1,1],"terms":[]})"}) {
      std::ofstream(dir / CharacterTable::cache_file_name(la), std::ios::trunc) << bad;
      CharacterTable table(dir);
      CHECK(table.character(la) == freudenthal_character(la));
      CHECK(table.stats().rejected == 1);
      CHECK(table.stats().computed == 1);
    }
    // The rewritten entry is valid again.
    CharacterTable table(dir);
    table.character(la);
    CHECK(table.stats().loaded == 1);
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("character table under concurrent use") {
  CharacterTable table;
  const auto ws = dominants_up_to(Rank(3), 9);
  std::vector<std::thread> pool;
  std::vector<int> ok(4, 1);
  for (int t = 0; t < 4; ++t) {
    pool.emplace_back([&, t] {
      for (const auto& la : ws) {
        if (table.character(la).dimension() != weyl_dim(la)) ok[t] = 0;
      }
    });
  }
  for (auto& th : pool) th.join();
  CHECK(std::count(ok.begin(), ok.end(), 1) == 4);
  CHECK(table.stats().computed == ws.size());
}
