#ifndef GRPD_SUBGROUPOID_HPP_
#define GRPD_SUBGROUPOID_HPP_

#include <cstdint>
#include <vector>

#include "grpd/groupoid.hpp"

namespace grpd {

// Subset of morphisms containing every identity, closed under inverse and
// defined composition. Members are sorted morphism ids.
struct WideSubgroupoid {
  GroupoidPtr parent;
  std::vector<Morph> members;

  bool contains(Morph g) const;
  bool operator==(const WideSubgroupoid& other) const { return members == other.members; }
};

// True iff the subset (assumed to contain all identities) is closed.
bool is_closed_subset(const FiniteGroupoid& g, const std::vector<Morph>& members);
bool is_wide_subgroupoid(const FiniteGroupoid& g, const std::vector<Morph>& members);

// Least wide subgroupoid containing seed: closure of seed plus all identities
// under inverse and composition.
WideSubgroupoid generated_wide_subgroupoid(const GroupoidPtr& g, const std::vector<Morph>& seed);

// All wide subgroupoids, sorted by size then lexicographically by members.
// Worklist closure over generator extensions; throws CapExceeded when more
// than `cap` candidate closures would be explored.
std::vector<WideSubgroupoid> enumerate_wide_subgroupoids(const GroupoidPtr& g,
                                                         std::size_t cap = (1u << 20));

}  // namespace grpd

#endif  // GRPD_SUBGROUPOID_HPP_
