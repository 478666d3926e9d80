#ifndef GRPD_UNION_FIND_HPP_
#define GRPD_UNION_FIND_HPP_

#include <algorithm>
#include <numeric>
#include <vector>

namespace grpd {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int i) {
    while (parent_[i] != i) {
      parent_[i] = parent_[parent_[i]];
      i = parent_[i];
    }
    return i;
  }

  // Returns true if a merge happened. Roots are kept at the smaller index so
  // class representatives are deterministic.
  bool unite(int i, int j) {
    int a = find(i), b = find(j);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

  bool same(int i, int j) { return find(i) == find(j); }

  // Classes sorted by minimal member, members ascending.
  std::vector<std::vector<int>> classes() {
    int n = static_cast<int>(parent_.size());
    std::vector<std::vector<int>> by_root(n);
    for (int i = 0; i < n; ++i) by_root[find(i)].push_back(i);
    std::vector<std::vector<int>> out;
    for (auto& c : by_root) {
      if (!c.empty()) out.push_back(std::move(c));
    }
    return out;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace grpd

#endif  // GRPD_UNION_FIND_HPP_
