#include "grpd/groupoid.hpp"

#include <algorithm>
#include <set>

#include "grpd/union_find.hpp"

namespace grpd {

namespace {

std::string lbl(const GroupoidTable& t, int g) {
  if (g >= 0 && g < static_cast<int>(t.labels.size()) && !t.labels[g].empty()) {
    return t.labels[g];
  }
  return "#" + std::to_string(g);
}

}  // namespace

Checked<FiniteGroupoid> FiniteGroupoid::validate(const GroupoidTable& raw) {
  Checked<FiniteGroupoid> out;
  auto& vs = out.violations;
  const int n = static_cast<int>(raw.labels.size());

  if (static_cast<int>(raw.inverse.size()) != n ||
      static_cast<int>(raw.compose.size()) != n) {
    vs.push_back({"Malformed", "inverse/compose tables do not match morphism count"});
    return out;
  }
  for (int g = 0; g < n; ++g) {
    if (static_cast<int>(raw.compose[g].size()) != n) {
      vs.push_back({"Malformed", "compose row " + lbl(raw, g) + " has wrong length"});
      return out;
    }
  }
  std::vector<bool> is_id(n, false);
  for (int e : raw.identities) {
    if (e < 0 || e >= n) {
      vs.push_back({"Malformed", "identity id out of range"});
      return out;
    }
    is_id[e] = true;
  }
  for (int g = 0; g < n; ++g) {
    int i = raw.inverse[g];
    if (i < 0) {
      vs.push_back({"MissingInverse", "no inverse for " + lbl(raw, g)});
    } else if (i >= n) {
      vs.push_back({"Malformed", "inverse of " + lbl(raw, g) + " out of range"});
    }
    for (int h = 0; h < n; ++h) {
      int r = raw.compose[g][h];
      if (r >= n) {
        vs.push_back({"Malformed", "compose(" + lbl(raw, g) + "," + lbl(raw, h) +
                                       ") out of range"});
      }
    }
  }
  if (!vs.empty()) return out;

  // Derive dom/ran: the unique identity composable on each side.
  std::vector<int> dom(n, -1), ran(n, -1);
  for (int g = 0; g < n; ++g) {
    for (int e = 0; e < n; ++e) {
      if (!is_id[e]) continue;
      if (raw.compose[g][e] >= 0) {
        if (dom[g] >= 0) {
          vs.push_back({"BadIdentity", lbl(raw, g) + " composes with two identities on the right"});
        } else if (raw.compose[g][e] != g) {
          vs.push_back({"BadIdentity", lbl(raw, g) + " * " + lbl(raw, e) + " != " + lbl(raw, g)});
        }
        if (dom[g] < 0) dom[g] = e;
      }
      if (raw.compose[e][g] >= 0) {
        if (ran[g] >= 0 && ran[g] != e) {
          vs.push_back({"BadIdentity", lbl(raw, g) + " composes with two identities on the left"});
        } else if (raw.compose[e][g] != g) {
          vs.push_back({"BadIdentity", lbl(raw, e) + " * " + lbl(raw, g) + " != " + lbl(raw, g)});
        }
        if (ran[g] < 0) ran[g] = e;
      }
    }
    if (dom[g] < 0) vs.push_back({"BadIdentity", "no right identity for " + lbl(raw, g)});
    if (ran[g] < 0) vs.push_back({"BadIdentity", "no left identity for " + lbl(raw, g)});
  }
  if (!vs.empty()) return out;

  for (int e : raw.identities) {
    if (dom[e] != e || ran[e] != e) {
      vs.push_back({"BadIdentity", lbl(raw, e) + " declared identity but not neutral on itself"});
    }
  }
  if (!raw.dom.empty() && raw.dom != dom) {
    vs.push_back({"CompositionDomainMismatch", "declared dom map disagrees with composition table"});
  }
  if (!raw.ran.empty() && raw.ran != ran) {
    vs.push_back({"CompositionDomainMismatch", "declared ran map disagrees with composition table"});
  }

  // Definedness pattern: gh defined iff dom(g) == ran(h).
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) {
      int r = raw.compose[g][h];
      bool should = dom[g] == ran[h];
      if (should != (r >= 0)) {
        vs.push_back({"CompositionDomainMismatch",
                      "compose(" + lbl(raw, g) + "," + lbl(raw, h) + ") " +
                          (should ? "undefined but composable" : "defined but not composable")});
        continue;
      }
      if (r >= 0 && (dom[r] != dom[h] || ran[r] != ran[g])) {
        vs.push_back({"CompositionDomainMismatch",
                      "compose(" + lbl(raw, g) + "," + lbl(raw, h) + ") lands at wrong objects"});
      }
    }
  }

  // Inverse laws.
  for (int g = 0; g < n; ++g) {
    int gi = raw.inverse[g];
    if (raw.inverse[gi] != g) {
      vs.push_back({"MissingInverse", "inverse not involutive at " + lbl(raw, g)});
      continue;
    }
    if (raw.compose[gi][g] != dom[g] || raw.compose[g][gi] != ran[g]) {
      vs.push_back({"MissingInverse", lbl(raw, g) + " does not cancel with its inverse"});
    }
  }
  if (!vs.empty()) return out;

  // Associativity on all doubly-defined triples.
  for (int g = 0; g < n && vs.size() < 32; ++g) {
    for (int h = 0; h < n; ++h) {
      int gh = raw.compose[g][h];
      if (gh < 0) continue;
      for (int k = 0; k < n; ++k) {
        int hk = raw.compose[h][k];
        if (hk < 0) continue;
        if (raw.compose[gh][k] != raw.compose[g][hk]) {
          vs.push_back({"NonAssociative",
                        "(" + lbl(raw, g) + "*" + lbl(raw, h) + ")*" + lbl(raw, k)});
        }
      }
    }
  }
  if (!vs.empty()) return out;

  FiniteGroupoid g;
  g.n_ = n;
  g.comp_.resize(static_cast<size_t>(n) * n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) g.comp_[a * n + b] = raw.compose[a][b];
  }
  g.inv_ = raw.inverse;
  g.dom_ = dom;
  g.ran_ = ran;
  g.objects_ = raw.identities;
  std::sort(g.objects_.begin(), g.objects_.end());
  g.labels_.resize(n);
  for (int a = 0; a < n; ++a) g.labels_[a] = lbl(raw, a);
  g.table_ = raw;
  g.table_.dom = dom;
  g.table_.ran = ran;
  out.value = std::move(g);
  return out;
}

std::optional<Morph> FiniteGroupoid::by_label(const std::string& s) const {
  for (int g = 0; g < n_; ++g) {
    if (labels_[g] == s) return g;
  }
  return std::nullopt;
}

namespace {

FiniteGroupoid must_validate(const GroupoidTable& t, const char* what) {
  auto c = FiniteGroupoid::validate(t);
  if (!c.ok()) {
    throw TheoremViolation(std::string(what) + " builder produced invalid groupoid: " +
                           join_violations(c.violations));
  }
  return *c.value;
}

}  // namespace

FiniteGroupoid coarse_groupoid(int n) {
  if (n < 1) throw PreconditionError("BadArgument", "coarse groupoid needs n >= 1");
  GroupoidTable t;
  const int size = n * n;
  t.labels.resize(size);
  t.inverse.resize(size);
  t.compose.assign(size, std::vector<int>(size, -1));
  auto id_of = [n](int s, int v) { return s * n + v; };  // pair (s, v): dom s, ran v
  for (int s = 0; s < n; ++s) {
    for (int v = 0; v < n; ++v) {
      int g = id_of(s, v);
      t.labels[g] = "(f" + std::to_string(s + 1) + ",f" + std::to_string(v + 1) + ")";
      t.inverse[g] = id_of(v, s);
      if (s == v) t.identities.push_back(g);
    }
  }
  // (s,t)(u,v) = (u,t) iff s == v.
  for (int s = 0; s < n; ++s)
    for (int v = 0; v < n; ++v)
      for (int u = 0; u < n; ++u)
        for (int w = 0; w < n; ++w)
          if (s == w) t.compose[id_of(s, v)][id_of(u, w)] = id_of(u, v);
  return must_validate(t, "coarse");
}

FiniteGroupoid group_from_table(const std::vector<std::string>& labels,
                                const std::vector<std::vector<int>>& mult) {
  const int n = static_cast<int>(labels.size());
  int e = -1;
  for (int i = 0; i < n && e < 0; ++i) {
    bool neutral = true;
    for (int j = 0; j < n; ++j) neutral = neutral && mult[i][j] == j && mult[j][i] == j;
    if (neutral) e = i;
  }
  if (e < 0) throw PreconditionError("BadArgument", "group table has no identity");
  GroupoidTable t;
  t.labels = labels;
  t.identities = {e};
  t.compose = mult;
  t.inverse.assign(n, -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (mult[i][j] == e) t.inverse[i] = j;
  return must_validate(t, "group");
}

namespace {

std::string product_label(const std::string& a, const std::string& b) {
  if (a.size() >= 2 && a.front() == '(' && a.back() == ')') {
    return "(" + a.substr(1, a.size() - 2) + "," + b + ")";
  }
  return "(" + a + "," + b + ")";
}

}  // namespace

FiniteGroupoid direct_product(const FiniteGroupoid& a, const FiniteGroupoid& b) {
  const int na = a.size(), nb = b.size(), n = na * nb;
  GroupoidTable t;
  t.labels.resize(n);
  t.inverse.resize(n);
  t.compose.assign(n, std::vector<int>(n, -1));
  auto id_of = [nb](int x, int y) { return x * nb + y; };
  for (int x = 0; x < na; ++x) {
    for (int y = 0; y < nb; ++y) {
      int g = id_of(x, y);
      t.labels[g] = product_label(a.label(x), b.label(y));
      t.inverse[g] = id_of(a.inverse(x), b.inverse(y));
      if (a.is_identity(x) && b.is_identity(y)) t.identities.push_back(g);
    }
  }
  for (int x1 = 0; x1 < na; ++x1)
    for (int y1 = 0; y1 < nb; ++y1)
      for (int x2 = 0; x2 < na; ++x2)
        for (int y2 = 0; y2 < nb; ++y2) {
          int cx = a.compose(x1, x2), cy = b.compose(y1, y2);
          if (cx >= 0 && cy >= 0) t.compose[id_of(x1, y1)][id_of(x2, y2)] = id_of(cx, cy);
        }
  return must_validate(t, "product");
}

FiniteGroupoid disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b) {
  const int na = a.size(), nb = b.size(), n = na + nb;
  GroupoidTable t;
  t.labels.resize(n);
  t.inverse.resize(n);
  t.compose.assign(n, std::vector<int>(n, -1));
  for (int g = 0; g < na; ++g) {
    t.labels[g] = a.label(g);
    t.inverse[g] = a.inverse(g);
    if (a.is_identity(g)) t.identities.push_back(g);
    for (int h = 0; h < na; ++h)
      if (a.composable(g, h)) t.compose[g][h] = a.compose(g, h);
  }
  for (int g = 0; g < nb; ++g) {
    t.labels[na + g] = b.label(g);
    t.inverse[na + g] = na + b.inverse(g);
    if (b.is_identity(g)) t.identities.push_back(na + g);
    for (int h = 0; h < nb; ++h)
      if (b.composable(g, h)) t.compose[na + g][na + h] = na + b.compose(g, h);
  }
  return must_validate(t, "disjoint union");
}

FiniteGroupoid cyclic_group(int k) {
  std::vector<std::string> labels(k);
  std::vector<std::vector<int>> mult(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i) {
    labels[i] = i == 0 ? "1" : (i == 1 ? "g" : "g^" + std::to_string(i));
    for (int j = 0; j < k; ++j) mult[i][j] = (i + j) % k;
  }
  return group_from_table(labels, mult);
}

FiniteGroupoid klein_four_group() {
  // 0=1, 1=g, 2=h, 3=gh; xor composition
  std::vector<std::string> labels = {"1", "g", "h", "gh"};
  std::vector<std::vector<int>> mult(4, std::vector<int>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) mult[i][j] = i ^ j;
  return group_from_table(labels, mult);
}

std::vector<ConnectedComponent> connected_components(const FiniteGroupoid& g) {
  UnionFind uf(g.size());
  for (int m = 0; m < g.size(); ++m) uf.unite(g.dom(m), g.ran(m));
  std::map<int, ConnectedComponent> by_root;
  for (int e : g.objects()) by_root[uf.find(e)].objects.push_back(e);
  for (int m = 0; m < g.size(); ++m) by_root[uf.find(g.dom(m))].morphisms.push_back(m);
  std::vector<ConnectedComponent> out;
  for (auto& [root, comp] : by_root) out.push_back(std::move(comp));
  return out;
}

bool is_connected(const FiniteGroupoid& g) {
  return connected_components(g).size() == 1;
}

IsotropyGroup isotropy_group(const FiniteGroupoid& g, Morph e) {
  if (e < 0 || e >= g.size() || !g.is_identity(e)) {
    throw PreconditionError("NotAnObject", "morphism is not an object");
  }
  IsotropyGroup iso;
  for (int m = 0; m < g.size(); ++m) {
    if (g.dom(m) == e && g.ran(m) == e) iso.members.push_back(m);
  }
  const int k = static_cast<int>(iso.members.size());
  std::vector<std::string> labels(k);
  std::vector<std::vector<int>> mult(k, std::vector<int>(k, -1));
  auto index_of = [&](int m) {
    return static_cast<int>(std::lower_bound(iso.members.begin(), iso.members.end(), m) -
                            iso.members.begin());
  };
  for (int i = 0; i < k; ++i) {
    labels[i] = g.label(iso.members[i]);
    for (int j = 0; j < k; ++j) mult[i][j] = index_of(g.compose(iso.members[i], iso.members[j]));
  }
  iso.group = group_from_table(labels, mult);
  return iso;
}

namespace {

// Decomposition restricted to one connected component, morphism ids of the parent.
ConnectedDecomposition decompose_component(const FiniteGroupoid& g,
                                           const ConnectedComponent& comp) {
  ConnectedDecomposition dec;
  dec.objects = comp.objects;
  std::sort(dec.objects.begin(), dec.objects.end());
  dec.n = static_cast<int>(dec.objects.size());
  const Morph base = dec.objects[0];
  dec.isotropy = isotropy_group(g, base);
  const int m = static_cast<int>(dec.isotropy.members.size());

  dec.transversal.assign(dec.n, -1);
  for (int i = 0; i < dec.n; ++i) {
    for (int mo = 0; mo < g.size() && dec.transversal[i] < 0; ++mo) {
      if (g.dom(mo) == base && g.ran(mo) == dec.objects[i]) dec.transversal[i] = mo;
    }
    if (dec.transversal[i] < 0) {
      throw PreconditionError("NotConnected", "no morphism from base object to " +
                                                  g.label(dec.objects[i]));
    }
  }

  auto object_index = [&](Morph e) {
    return static_cast<int>(std::lower_bound(dec.objects.begin(), dec.objects.end(), e) -
                            dec.objects.begin());
  };
  auto isotropy_index = [&](Morph h) {
    auto it = std::lower_bound(dec.isotropy.members.begin(), dec.isotropy.members.end(), h);
    return static_cast<int>(it - dec.isotropy.members.begin());
  };

  dec.to_triple.assign(g.size(), {-1, -1, -1});
  dec.from_triple.assign(static_cast<size_t>(dec.n) * dec.n * m, -1);
  for (Morph mo : comp.morphisms) {
    int i = object_index(g.dom(mo));
    int j = object_index(g.ran(mo));
    // t_j^{-1} * mo * t_i lies in the isotropy group at the base object
    Morph h = g.compose(g.compose(g.inverse(dec.transversal[j]), mo), dec.transversal[i]);
    int k = isotropy_index(h);
    dec.to_triple[mo] = {i, j, k};
    dec.from_triple[(static_cast<size_t>(i) * dec.n + j) * m + k] = mo;
  }

  // The bijection must turn composition into componentwise composition.
  for (Morph a : comp.morphisms) {
    for (Morph b : comp.morphisms) {
      if (!g.composable(a, b)) continue;
      auto [ia, ja, ka] = dec.to_triple[a];
      auto [ib, jb, kb] = dec.to_triple[b];
      auto [ic, jc, kc] = dec.to_triple[g.compose(a, b)];
      int kab = dec.isotropy.group.compose(ka, kb);
      if (ia != jb || ic != ib || jc != ja || kc != kab) {
        throw TheoremViolation("connected decomposition does not preserve composition at " +
                               g.label(a) + " * " + g.label(b));
      }
    }
  }
  return dec;
}

}  // namespace

ConnectedDecomposition connected_decomposition(const FiniteGroupoid& g) {
  auto comps = connected_components(g);
  if (comps.size() != 1) {
    throw PreconditionError("NotConnected",
                            "groupoid has " + std::to_string(comps.size()) + " components");
  }
  return decompose_component(g, comps[0]);
}

CanonicalEnumeration canonical_enumeration(const FiniteGroupoid& g,
                                           const ConnectedDecomposition& dec,
                                           Morph e) {
  auto it = std::lower_bound(dec.objects.begin(), dec.objects.end(), e);
  if (it == dec.objects.end() || *it != e) {
    throw PreconditionError("NotAnObject", "object not in decomposition");
  }
  const int i = static_cast<int>(it - dec.objects.begin()) + 1;  // 1-based
  const int n = dec.n;
  const int m = static_cast<int>(dec.isotropy.members.size());

  CanonicalEnumeration en;
  en.object = e;
  en.list.reserve(static_cast<size_t>(n) * m);
  // g_{e_i, j} = (e_{sigma^r(i)}, e_i, g_q) for j = qn + r + 1, sigma(i) = i - 1 cyclically
  for (int j = 1; j <= n * m; ++j) {
    int q = (j - 1) / n;
    int r = (j - 1) % n;
    int si = ((i - 1 - r) % n + n) % n + 1;  // sigma^r(i), 1-based
    Morph mo = dec.from_triple[(static_cast<size_t>(si - 1) * n + (i - 1)) * m + q];
    en.list.push_back(mo);
  }
  if (en.list[0] != e) {
    throw TheoremViolation("canonical enumeration does not start at the identity");
  }
  return en;
}

EnumerationFamily canonical_family(const FiniteGroupoid& g) {
  EnumerationFamily fam;
  for (const auto& comp : connected_components(g)) {
    auto dec = decompose_component(g, comp);
    for (Morph e : dec.objects) {
      fam[e] = canonical_enumeration(g, dec, e).list;
    }
  }
  return fam;
}

bool check_condition_superfluous(const FiniteGroupoid& g, const EnumerationFamily& family) {
  // Each list must enumerate G(-, e) exactly.
  for (Morph e : g.objects()) {
    auto it = family.find(e);
    if (it == family.end()) {
      throw PreconditionError("EnumerationInconsistent", "missing enumeration at " + g.label(e));
    }
    std::set<Morph> seen(it->second.begin(), it->second.end());
    std::set<Morph> expect;
    for (int m = 0; m < g.size(); ++m)
      if (g.ran(m) == e) expect.insert(m);
    if (seen != expect || seen.size() != it->second.size()) {
      throw PreconditionError("EnumerationInconsistent",
                              "enumeration at " + g.label(e) + " is not G(-,e)");
    }
  }
  for (int m = 0; m < g.size(); ++m) {
    if (g.is_identity(m)) continue;
    const auto& ran_list = family.at(g.ran(m));
    const auto& dom_list = family.at(g.dom(m));
    const size_t len = std::min(ran_list.size(), dom_list.size());
    for (size_t u = 0; u < len; ++u) {
      Morph a = ran_list[u], b = dom_list[u];
      Morph c = g.compose(g.compose(g.inverse(a), m), b);
      if (g.is_identity(c)) return false;  // conjugate landed in G_0 for g outside G_0
    }
  }
  return true;
}

}  // namespace grpd
