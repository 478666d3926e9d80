#include "grpd/subgroupoid.hpp"

#include <algorithm>
#include <set>

namespace grpd {

bool WideSubgroupoid::contains(Morph g) const {
  return std::binary_search(members.begin(), members.end(), g);
}

bool is_closed_subset(const FiniteGroupoid& g, const std::vector<Morph>& members) {
  std::vector<bool> in(g.size(), false);
  for (Morph m : members) in[m] = true;
  for (Morph a : members) {
    if (!in[g.inverse(a)]) return false;
    for (Morph b : members) {
      int c = g.compose(a, b);
      if (c >= 0 && !in[c]) return false;
    }
  }
  return true;
}

bool is_wide_subgroupoid(const FiniteGroupoid& g, const std::vector<Morph>& members) {
  std::vector<bool> in(g.size(), false);
  for (Morph m : members) in[m] = true;
  for (Morph e : g.objects())
    if (!in[e]) return false;
  return is_closed_subset(g, members);
}

WideSubgroupoid generated_wide_subgroupoid(const GroupoidPtr& g, const std::vector<Morph>& seed) {
  std::vector<bool> in(g->size(), false);
  std::vector<Morph> work;
  auto push = [&](Morph m) {
    if (!in[m]) {
      in[m] = true;
      work.push_back(m);
    }
  };
  for (Morph e : g->objects()) push(e);
  for (Morph m : seed) push(m);

  // Worklist closure; each new member is paired against everything present.
  for (size_t i = 0; i < work.size(); ++i) {
    Morph a = work[i];
    push(g->inverse(a));
    for (size_t j = 0; j <= i; ++j) {
      Morph b = work[j];
      int ab = g->compose(a, b);
      if (ab >= 0) push(ab);
      int ba = g->compose(b, a);
      if (ba >= 0) push(ba);
    }
  }
  std::sort(work.begin(), work.end());
  return WideSubgroupoid{g, std::move(work)};
}

std::vector<WideSubgroupoid> enumerate_wide_subgroupoids(const GroupoidPtr& g, std::size_t cap) {
  // BFS over the lattice of closed wide subsets: from each known subgroupoid,
  // adjoin one absent morphism and close again.
  std::set<std::vector<Morph>> seen;
  std::vector<std::vector<Morph>> frontier;
  std::size_t explored = 0;

  auto bottom = generated_wide_subgroupoid(g, {});
  seen.insert(bottom.members);
  frontier.push_back(bottom.members);

  for (size_t i = 0; i < frontier.size(); ++i) {
    std::vector<Morph> current = frontier[i];
    for (Morph m = 0; m < g->size(); ++m) {
      if (std::binary_search(current.begin(), current.end(), m)) continue;
      if (++explored > cap) {
        throw CapExceeded("wide subgroupoid enumeration exceeded cap of " + std::to_string(cap));
      }
      std::vector<Morph> seed = current;
      seed.push_back(m);
      auto closed = generated_wide_subgroupoid(g, seed);
      if (seen.insert(closed.members).second) frontier.push_back(closed.members);
    }
  }

  std::vector<WideSubgroupoid> out;
  out.reserve(seen.size());
  for (const auto& members : seen) out.push_back(WideSubgroupoid{g, members});
  std::sort(out.begin(), out.end(), [](const WideSubgroupoid& a, const WideSubgroupoid& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  });
  return out;
}

}  // namespace grpd
