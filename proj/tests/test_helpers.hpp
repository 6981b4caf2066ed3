#ifndef CHARRIG_TESTS_TEST_HELPERS_HPP
#define CHARRIG_TESTS_TEST_HELPERS_HPP

#include <initializer_list>
#include <vector>

#include "charrig/weight_lattice.hpp"

namespace charrig::test {

inline DominantWeight dw(std::initializer_list<int> fundamental) {
  const std::vector<int> c(fundamental);
  return dominant_from_fundamental(Rank(static_cast<int>(c.size())), c);
}

inline Weight eps(std::initializer_list<int> e) { return Weight(std::vector<int>(e)); }

}  // namespace charrig::test

#endif
