#ifndef CHARRIG_ERRORS_HPP
#define CHARRIG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace charrig {

struct RankMismatch : std::invalid_argument {
  explicit RankMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct NotInRootLattice : std::domain_error {
  explicit NotInRootLattice(const std::string& what) : std::domain_error(what) {}
};

struct NotDominant : std::invalid_argument {
  explicit NotDominant(const std::string& what) : std::invalid_argument(what) {}
};

// A family query reached outside the indexed weight range.
struct BoundExceeded : std::out_of_range {
  explicit BoundExceeded(const std::string& what) : std::out_of_range(what) {}
};

// A structure-constant oracle could not answer a query.
struct OracleIncomplete : std::runtime_error {
  explicit OracleIncomplete(const std::string& what) : std::runtime_error(what) {}
};

// A document or object breaks a structural invariant (bad file, bad site).
struct InvariantViolation : std::invalid_argument {
  explicit InvariantViolation(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace charrig

#endif
