#include "oracles.hpp"

#include <algorithm>
#include <set>

namespace grpd::oracles {

int rank(const BaseRing& ring, std::vector<std::vector<mpq_class>> rows) {
  if (rows.empty()) return 0;
  const size_t cols = rows[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows.size(); ++c) {
    size_t pivot = r;
    while (pivot < rows.size() && ring.reduce(rows[pivot][c]) == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    mpq_class inv = *ring.inv(rows[r][c]);
    for (size_t j = c; j < cols; ++j) rows[r][j] = ring.mul(rows[r][j], inv);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r) continue;
      mpq_class f = ring.reduce(rows[i][c]);
      if (f == 0) continue;
      for (size_t j = c; j < cols; ++j) {
        rows[i][j] = ring.sub(rows[i][j], ring.mul(f, rows[r][j]));
      }
    }
    ++r;
  }
  return static_cast<int>(r);
}

bool solvable(const BaseRing& ring, const std::vector<std::vector<mpq_class>>& a,
              const std::vector<mpq_class>& b) {
  auto augmented = a;
  for (size_t i = 0; i < a.size(); ++i) augmented[i].push_back(b[i]);
  return rank(ring, a) == rank(ring, augmented);
}

bool gram_galois(const PartialAction& a) {
  const FiniteGroupoid& G = *a.groupoid();
  const int m = a.m();
  const BaseRing& ring = a.algebra()->base;
  std::vector<std::vector<mpq_class>> rows;
  std::vector<mpq_class> rhs;
  auto add = [&](int var, int value) {
    rows.emplace_back(m * m, mpq_class(0));
    rows.back()[var] = 1;
    rhs.emplace_back(value);
  };
  for (int g = 0; g < G.size(); ++g) {
    for (int k : a.support(G.inverse(g))) {
      if (G.is_identity(g)) {
        add(k * m + k, 1);
      } else {
        add(a.pi(g, k) * m + k, 0);
      }
    }
  }
  return solvable(ring, rows, rhs);
}

bool invariants_match_kernel(const PartialAction& a, const std::vector<Morph>& members,
                             const PartitionSubalgebra& claimed) {
  const FiniteGroupoid& G = *a.groupoid();
  const int m = a.m();
  std::vector<std::vector<mpq_class>> rows;
  std::vector<std::pair<int, int>> relations;
  for (Morph h : members) {
    for (int i : a.support(G.inverse(h))) {
      int j = a.pi(h, i);
      if (i == j) continue;
      relations.emplace_back(i, j);
      rows.emplace_back(m, mpq_class(0));
      rows.back()[i] = 1;
      rows.back()[j] = -1;
    }
  }
  int kernel_dim = m - rank(a.algebra()->base, rows);
  if (kernel_dim != static_cast<int>(claimed.blocks.size())) return false;
  for (size_t b = 0; b < claimed.blocks.size(); ++b) {
    RingElement f = claimed.block_idempotent(static_cast<int>(b));
    for (auto [i, j] : relations) {
      if (f.coeff(i) != f.coeff(j)) return false;
    }
  }
  return true;
}

std::vector<Morph> exhaustive_stabilizer(const PartialAction& a, const PartitionSubalgebra& c) {
  const FiniteGroupoid& G = *a.groupoid();
  const size_t k = c.blocks.size();
  if (k > 16) throw CapExceeded("too many blocks for the exhaustive stabilizer oracle");
  std::vector<RingElement> elems;
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    RingElement x = RingElement::zero(c.alg);
    for (size_t b = 0; b < k; ++b) {
      if (mask & (1u << b)) x = x + c.block_idempotent(static_cast<int>(b));
    }
    elems.push_back(std::move(x));
  }
  std::vector<Morph> out;
  for (int g = 0; g < G.size(); ++g) {
    bool fixes = true;
    for (const auto& x : elems) {
      if (!(a.apply(g, x) == x * a.unit_of(g))) {
        fixes = false;
        break;
      }
    }
    if (fixes) out.push_back(g);
  }
  return out;
}

bool exhaustive_alpha_strong(const PartialAction& a, const PartitionSubalgebra& c) {
  const FiniteGroupoid& G = *a.groupoid();
  auto stab = exhaustive_stabilizer(a, c);
  auto in_stab = [&](Morph g) { return std::binary_search(stab.begin(), stab.end(), g); };
  const size_t k = c.blocks.size();
  std::vector<RingElement> elems;
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    RingElement x = RingElement::zero(c.alg);
    for (size_t b = 0; b < k; ++b) {
      if (mask & (1u << b)) x = x + c.block_idempotent(static_cast<int>(b));
    }
    elems.push_back(std::move(x));
  }
  std::vector<std::vector<RingElement>> applied(G.size());
  for (int g = 0; g < G.size(); ++g) {
    applied[g].reserve(elems.size());
    for (const auto& x : elems) applied[g].push_back(a.apply(g, x));
  }
  for (int g = 0; g < G.size(); ++g) {
    for (int h = 0; h < G.size(); ++h) {
      if (G.ran(g) != G.ran(h)) continue;
      if (in_stab(G.compose(G.inverse(g), h))) continue;
      std::vector<RingElement> candidates = all_idempotents(a.algebra(), a.support(g));
      auto more = all_idempotents(a.algebra(), a.support(h));
      candidates.insert(candidates.end(), more.begin(), more.end());
      for (const auto& e : candidates) {
        if (e.is_zero()) continue;
        bool separated = false;
        for (size_t x = 0; x < elems.size(); ++x) {
          if (!(applied[g][x] * e == applied[h][x] * e)) {
            separated = true;
            break;
          }
        }
        if (!separated) return false;
      }
    }
  }
  return true;
}

std::vector<std::vector<Morph>> brute_force_wide_subgroupoids(const FiniteGroupoid& g) {
  std::vector<Morph> others;
  for (int x = 0; x < g.size(); ++x) {
    if (!g.is_identity(x)) others.push_back(x);
  }
  if (others.size() > 20) throw CapExceeded("brute-force subgroupoid filter needs |G| small");
  std::vector<std::vector<Morph>> out;
  for (unsigned mask = 0; mask < (1u << others.size()); ++mask) {
    std::vector<Morph> members(g.objects().begin(), g.objects().end());
    for (size_t b = 0; b < others.size(); ++b) {
      if (mask & (1u << b)) members.push_back(others[b]);
    }
    std::sort(members.begin(), members.end());
    if (is_closed_subset(g, members)) out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  return out;
}

bool meet_matches_span_intersection(const PartitionSubalgebra& c1, const PartitionSubalgebra& c2,
                                    const PartitionSubalgebra& claimed) {
  const BaseRing& ring = c1.alg->base;
  const int m = c1.alg->m;
  auto indicator_rows = [&](const PartitionSubalgebra& c) {
    std::vector<std::vector<mpq_class>> rows;
    for (const auto& b : c.blocks) {
      rows.emplace_back(m, mpq_class(0));
      for (int i : b) rows.back()[i] = 1;
    }
    return rows;
  };
  auto r1 = indicator_rows(c1), r2 = indicator_rows(c2);
  auto stacked = r1;
  stacked.insert(stacked.end(), r2.begin(), r2.end());
  int dim_sum = rank(ring, stacked);
  int dim_meet = static_cast<int>(c1.blocks.size() + c2.blocks.size()) - dim_sum;
  if (dim_meet != static_cast<int>(claimed.blocks.size())) return false;
  for (size_t b = 0; b < claimed.blocks.size(); ++b) {
    RingElement f = claimed.block_idempotent(static_cast<int>(b));
    if (!c1.contains(f) || !c2.contains(f)) return false;
  }
  return true;
}

std::optional<ActionEquivalence> find_equivalence(const PartialAction& a, const PartialAction& b) {
  const FiniteGroupoid& G = *a.groupoid();
  if (G.table().labels != b.groupoid()->table().labels ||
      G.table().compose != b.groupoid()->table().compose || !(a.algebra()->base == b.algebra()->base)) {
    return std::nullopt;
  }
  ActionEquivalence eq;
  for (const auto& comp : connected_components(G)) {
    Morph e0 = comp.objects.front();
    // Transversal: one morphism e0 -> e per object.
    std::map<Morph, Morph> t;
    for (Morph g : comp.morphisms) {
      if (G.dom(g) == e0 && !t.count(G.ran(g))) t[G.ran(g)] = g;
    }
    if (t.size() != comp.objects.size()) return std::nullopt;
    // Transport along transversals needs totally-defined permutations there.
    for (auto [e, g] : t) {
      if (a.support(G.inverse(g)).size() != a.support(e0).size() ||
          b.support(G.inverse(g)).size() != b.support(e0).size()) {
        return std::nullopt;
      }
    }
    auto sa = a.support(e0);
    auto sb = b.support(e0);
    if (sa.size() != sb.size()) return std::nullopt;
    std::vector<int> image = sb;
    std::sort(image.begin(), image.end());
    bool found = false;
    do {
      std::map<Morph, std::vector<int>> phi;
      bool ok = true;
      for (Morph e : comp.objects) {
        Morph tr = t[e];
        std::vector<int> f(a.m(), -1);
        for (size_t q = 0; q < sa.size() && ok; ++q) {
          int from = a.pi(tr, sa[q]);
          int to = b.pi(tr, image[q]);
          if (from < 0 || to < 0) {
            ok = false;
            break;
          }
          f[from] = to;
        }
        phi[e] = std::move(f);
      }
      if (ok) {
        // Check both equivalence clauses on this component only.
        for (Morph g : comp.morphisms) {
          const auto& phi_r = phi[G.ran(g)];
          const auto& phi_d = phi[G.dom(g)];
          std::set<int> img, expect(b.support(g).begin(), b.support(g).end());
          for (int i : a.support(g)) {
            if (phi_r[i] < 0) {
              ok = false;
              break;
            }
            img.insert(phi_r[i]);
          }
          if (!ok || img != expect) {
            ok = false;
            break;
          }
          for (int i : a.support(G.inverse(g))) {
            if (phi_d[i] < 0 || phi_r[a.pi(g, i)] != b.pi(g, phi_d[i])) {
              ok = false;
              break;
            }
          }
          if (!ok) break;
        }
      }
      if (ok) {
        for (auto& [e, f] : phi) eq.phi[e] = std::move(f);
        found = true;
        break;
      }
    } while (std::next_permutation(image.begin(), image.end()));
    if (!found) return std::nullopt;
  }
  if (!check_equivalence(eq, a, b)) return std::nullopt;
  return eq;
}

}  // namespace grpd::oracles
