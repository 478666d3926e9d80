#include "grpd/random.hpp"

#include <algorithm>
#include <numeric>

#include "grpd/constructions.hpp"
#include "grpd/galois.hpp"
#include "grpd/subgroupoid.hpp"
#include "grpd/union_find.hpp"

namespace grpd {

namespace {

int pick(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

FiniteGroupoid small_group(int kind) {
  switch (kind) {
    case 0: return cyclic_group(1);
    case 1: return cyclic_group(2);
    case 2: return cyclic_group(3);
    case 3: return cyclic_group(4);
    default: return klein_four_group();
  }
}

int small_group_size(int kind) { return kind == 4 ? 4 : kind + 1; }

FiniteGroupoid relabel(const FiniteGroupoid& g, const std::string& suffix) {
  GroupoidTable t = g.table();
  for (auto& l : t.labels) l += suffix;
  return FiniteGroupoid::validate(t).get();
}

// Connected pieces: either a group or coarse(n) x group. Sized to fit both
// the morphism budget and (via the object count) the idempotent budget.
std::vector<FiniteGroupoid> random_components(std::mt19937_64& rng, int max_size, int max_m,
                                              bool regular_rep) {
  std::vector<FiniteGroupoid> comps;
  int size_left = max_size, m_left = max_m;
  while (true) {
    std::vector<std::pair<int, int>> options;  // (n, kind)
    for (int n = 1; n <= 3; ++n) {
      for (int kind = 0; kind <= 4; ++kind) {
        // Under the regular representation the disjoint layout consumes
        // n * |group| idempotents; otherwise a full subgroup can shrink the
        // coset space to one point per object.
        int m_need = regular_rep ? n * small_group_size(kind) : n;
        if (n * n * small_group_size(kind) <= size_left && m_need <= m_left) {
          options.emplace_back(n, kind);
        }
      }
    }
    if (options.empty()) break;
    auto [n, kind] = options[pick(rng, 0, static_cast<int>(options.size()) - 1)];
    FiniteGroupoid grp = small_group(kind);
    comps.push_back(n == 1 ? grp : direct_product(coarse_groupoid(n), grp));
    size_left -= n * n * small_group_size(kind);
    m_left -= regular_rep ? n * small_group_size(kind) : n;
    if (size_left <= 0 || m_left <= 0 || pick(rng, 0, 2) == 0) break;
  }
  if (comps.size() > 1) {
    for (size_t k = 0; k < comps.size(); ++k) {
      comps[k] = relabel(comps[k], "@" + std::to_string(k + 1));
    }
  }
  return comps;
}

GroupoidPtr assemble(const std::vector<FiniteGroupoid>& comps) {
  FiniteGroupoid g = comps[0];
  for (size_t k = 1; k < comps.size(); ++k) g = disjoint_union(g, comps[k]);
  return std::make_shared<const FiniteGroupoid>(std::move(g));
}

PartialAction build_global(std::mt19937_64& rng, const RandomSpec& spec, bool force_disjoint) {
  auto comps = random_components(rng, spec.max_groupoid, spec.max_m, spec.force_galois);
  auto g = assemble(comps);

  std::vector<std::vector<int>> support(g->size()), perm(g->size());
  int next_index = 0, morph_offset = 0, m_left = spec.max_m;

  for (const auto& comp : comps) {
    auto dec = connected_decomposition(comp);
    const FiniteGroupoid& T = dec.isotropy.group;

    // Pick the coset space: regular representation when a fixed-point-free
    // action is required, otherwise cosets of a random subgroup small enough
    // for the idempotent budget.
    std::vector<Morph> sub;
    if (spec.force_galois) {
      sub = {0};
      for (Morph t = 0; t < T.size(); ++t) {
        if (T.is_identity(t)) sub = {t};
      }
    } else {
      auto tg = std::make_shared<const FiniteGroupoid>(T);
      auto subs = enumerate_wide_subgroupoids(tg);
      std::vector<std::vector<Morph>> fitting;
      for (const auto& s : subs) {
        int cosets = T.size() / static_cast<int>(s.members.size());
        if (cosets * dec.n <= m_left || s.members.size() == static_cast<size_t>(T.size())) {
          fitting.push_back(s.members);
        }
      }
      sub = fitting[pick(rng, 0, static_cast<int>(fitting.size()) - 1)];
    }
    UnionFind uf(T.size());
    for (Morph x = 0; x < T.size(); ++x) {
      for (Morph h : sub) uf.unite(x, T.compose(x, h));
    }
    auto cosets = uf.classes();
    const int X = static_cast<int>(cosets.size());
    std::vector<int> coset_of(T.size());
    for (int c = 0; c < X; ++c) {
      for (int x : cosets[c]) coset_of[x] = c;
    }
    // rho[k][c]: the coset of k * (any representative of c).
    std::vector<std::vector<int>> rho(T.size(), std::vector<int>(X));
    for (Morph k = 0; k < T.size(); ++k) {
      for (int c = 0; c < X; ++c) rho[k][c] = coset_of[T.compose(k, cosets[c][0])];
    }

    // Injections lambda_i of the coset space into a per-component pool;
    // disjoint images give an orthogonal layout, a tighter pool overlaps them.
    bool disjoint = force_disjoint || spec.force_orthogonal || pick(rng, 0, 1) == 0;
    int budget = std::max(X, m_left);
    int p = disjoint ? dec.n * X : std::min(std::max(X, X + pick(rng, 0, X)), budget);
    std::vector<std::vector<int>> lambda(dec.n, std::vector<int>(X));
    for (int i = 0; i < dec.n; ++i) {
      if (disjoint) {
        for (int x = 0; x < X; ++x) lambda[i][x] = next_index + i * X + x;
      } else {
        std::vector<int> slots(p);
        std::iota(slots.begin(), slots.end(), next_index);
        std::shuffle(slots.begin(), slots.end(), rng);
        for (int x = 0; x < X; ++x) lambda[i][x] = slots[x];
      }
    }
    for (int lg = 0; lg < comp.size(); ++lg) {
      auto [i, j, k] = dec.to_triple[lg];
      int gg = morph_offset + lg;
      support[gg] = lambda[j];
      std::sort(support[gg].begin(), support[gg].end());
      // Stash the raw map as a flat (from, to) pair list until compression.
      for (int x = 0; x < X; ++x) {
        perm[gg].push_back(lambda[i][x]);
        perm[gg].push_back(lambda[j][rho[k][x]]);
      }
    }
    // Actual consumption after compression is at most dec.n * X in either
    // layout (a lone injection uses exactly X slots of its pool).
    next_index += disjoint ? dec.n * X : p;
    m_left -= dec.n * X;
    morph_offset += comp.size();
  }

  // Compress to the indices actually used by some object support.
  std::vector<int> remap(next_index, -1);
  int m = 0;
  for (Morph e : g->objects()) {
    for (int idx : support[e]) {
      if (remap[idx] < 0) remap[idx] = 1;
    }
  }
  for (int i = 0; i < next_index; ++i) {
    if (remap[i] > 0) remap[i] = m++;
  }

  ActionData d;
  d.groupoid = g;
  d.algebra = make_algebra(spec.base, m);
  d.support.resize(g->size());
  d.perm.assign(g->size(), std::vector<int>(m, -1));
  for (int gg = 0; gg < g->size(); ++gg) {
    for (int idx : support[gg]) d.support[gg].push_back(remap[idx]);
    std::sort(d.support[gg].begin(), d.support[gg].end());
    for (size_t q = 0; q + 1 < perm[gg].size(); q += 2) {
      d.perm[gg][remap[perm[gg][q]]] = remap[perm[gg][q + 1]];
    }
  }
  auto checked = PartialAction::validate(std::move(d));
  if (!checked.ok()) {
    throw TheoremViolation("random global action failed validation: " +
                           join_violations(checked.violations));
  }
  return *checked.value;
}

}  // namespace

GroupoidPtr random_groupoid(std::mt19937_64& rng, int max_size) {
  return assemble(random_components(rng, max_size, max_size, false));
}

PartialAction random_global_action(std::mt19937_64& rng, const RandomSpec& spec) {
  for (int attempt = 0; attempt < 8; ++attempt) {
    PartialAction a = build_global(rng, spec, attempt == 7);
    if (spec.force_galois && !is_galois(a).galois) continue;
    return a;
  }
  throw TheoremViolation("disjoint regular layout produced a non-Galois action");
}

PartialAction random_action(std::mt19937_64& rng, const RandomSpec& spec) {
  PartialAction beta = random_global_action(rng, spec);
  if (spec.global_only) return beta;
  std::vector<int> keep;
  for (int i = 0; i < beta.m(); ++i) {
    if (pick(rng, 0, 3) > 0) keep.push_back(i);
  }
  if (keep.empty()) keep.push_back(pick(rng, 0, beta.m() - 1));
  return standard_restriction(beta, keep);
}

}  // namespace grpd
