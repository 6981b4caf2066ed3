#ifndef CHARRIG_WEYL_ORACLE_HPP
#define CHARRIG_WEYL_ORACLE_HPP

#include <cstddef>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <vector>

#include "charrig/char_ring.hpp"

namespace charrig {

// c_{mu,nu}^lambda or n_{mu,nu}^lambda for fixed (mu, nu), keyed by lambda.
using StructureConstantRow = std::map<DominantWeight, Coefficient>;

struct MultiplicityTable {
  DominantWeight lambda;
  // (mu, m_lambda(mu)) for every dominant mu in the saturated set, lambda first.
  std::vector<std::pair<DominantWeight, Coefficient>> mults;
};

// Weyl character of V(la) in the orbit-sum basis, by Freudenthal's recursion
// (|la+rho|^2 - |mu+rho|^2) m(mu) = 2 sum_{alpha>0} sum_{k>=1} (mu+k alpha, alpha) m(mu+k alpha).
// Throws std::logic_error if a division is ever inexact.
CharElement freudenthal_character(const DominantWeight& la);

MultiplicityTable multiplicity_table(const DominantWeight& la, const CharElement& character);

// Product formula on epsilon coordinates.
Coefficient weyl_dim(const DominantWeight& la);

// Memoized Weyl characters, optionally spilled to one JSON document per
// (rank, lambda) in a directory. Safe for concurrent use; inserts are
// idempotent. Unreadable or inconsistent cache files are recomputed and
// overwritten.
class CharacterTable {
 public:
  CharacterTable() = default;
  explicit CharacterTable(std::optional<std::filesystem::path> spill_dir);

  CharacterTable(const CharacterTable&) = delete;
  CharacterTable& operator=(const CharacterTable&) = delete;

  const CharElement& character(const DominantWeight& la);

  // Coefficients d_mu with f = sum d_mu ch_mu. Repeatedly peels off the
  // largest key in processing order.
  StructureConstantRow decompose(const CharElement& f);

  // c_{mu,nu}^lambda for all lambda.
  StructureConstantRow tensor_decompose(const DominantWeight& mu, const DominantWeight& nu);

  struct Stats {
    std::size_t computed = 0;
    std::size_t loaded = 0;
    std::size_t rejected = 0;
  };
  Stats stats() const;

  // Canonical spill file name for a weight, e.g. "A2_1-1.json".
  static std::string cache_file_name(const DominantWeight& la);

 private:
  std::optional<CharElement> load(const DominantWeight& la);
  void store(const DominantWeight& la, const CharElement& ch) const;

  std::optional<std::filesystem::path> spill_dir_;
  mutable std::shared_mutex mutex_;
  std::map<DominantWeight, CharElement> memo_;
  Stats stats_;
};

}  // namespace charrig

#endif
