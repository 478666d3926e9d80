#include "grpd/constructions.hpp"

#include <algorithm>
#include <set>

#include "grpd/union_find.hpp"

namespace grpd {

namespace {

bool in_sorted(const std::vector<int>& v, int x) {
  return std::binary_search(v.begin(), v.end(), x);
}

bool same_groupoid(const FiniteGroupoid& a, const FiniteGroupoid& b) {
  return a.table().labels == b.table().labels && a.table().compose == b.table().compose;
}

}  // namespace

RingElement Orthogonalization::embed(const RingElement& a) const {
  const AlgebraPtr& e_alg = action.algebra();
  std::vector<mpq_class> c(e_alg->m, mpq_class(0));
  for (int t = 0; t < e_alg->m; ++t) c[t] = a.coeff(tags[t].second);
  return RingElement(e_alg, std::move(c));
}

PartitionSubalgebra Orthogonalization::embed_partition(const PartitionSubalgebra& c) const {
  std::vector<std::vector<int>> blocks;
  for (const auto& b : c.blocks) {
    std::vector<int> img;
    for (int i : b) img.insert(img.end(), idem_image[i].begin(), idem_image[i].end());
    if (!img.empty()) blocks.push_back(std::move(img));
  }
  return PartitionSubalgebra::from_blocks(action.algebra(), std::move(blocks));
}

PartitionSubalgebra Orthogonalization::pullback_partition(const PartitionSubalgebra& t) const {
  const int m = static_cast<int>(idem_image.size());
  UnionFind uf(m);
  for (const auto& b : t.blocks) {
    for (size_t j = 1; j < b.size(); ++j) uf.unite(tags[b[0]].second, tags[b[j]].second);
  }
  return PartitionSubalgebra::from_blocks(source_algebra, uf.classes());
}

Orthogonalization orthogonalize(const PartialAction& a) {
  const FiniteGroupoid& G = *a.groupoid();
  const int n = G.size();

  Orthogonalization out{a, a.algebra(), {}, {}, PartitionSubalgebra{}, {}};

  // E's minimal idempotents: one copy of e_i per object e with i in S_e.
  std::map<Morph, std::vector<int>> tidx;  // tidx[e][i] = E index, -1 off S_e
  for (Morph e : G.objects()) tidx[e].assign(a.m(), -1);
  for (Morph e : G.objects()) {
    for (int i : a.support(e)) {
      tidx[e][i] = static_cast<int>(out.tags.size());
      out.tags.emplace_back(e, i);
    }
  }
  const int mE = static_cast<int>(out.tags.size());
  auto e_alg = std::make_shared<IdempotentAlgebra>(a.algebra()->base, mE);
  e_alg->labels.resize(mE);
  for (int t = 0; t < mE; ++t) {
    e_alg->labels[t] = G.label(out.tags[t].first) + ":" + std::to_string(out.tags[t].second + 1);
  }

  ActionData d;
  d.groupoid = a.groupoid();
  d.algebra = e_alg;
  d.support.resize(n);
  d.perm.assign(n, std::vector<int>(mE, -1));
  for (int g = 0; g < n; ++g) {
    for (int i : a.support(g)) d.support[g].push_back(tidx[G.ran(g)][i]);
    for (int i : a.support(G.inverse(g))) {
      d.perm[g][tidx[G.dom(g)][i]] = tidx[G.ran(g)][a.pi(g, i)];
    }
  }
  auto checked = PartialAction::validate(std::move(d));
  if (!checked.ok()) {
    throw TheoremViolation("orthogonalization failed to validate: " +
                           join_violations(checked.violations));
  }
  out.action = *checked.value;
  if (!predicates(out.action).orthogonal) {
    throw TheoremViolation("orthogonalization produced a non-orthogonal action");
  }

  for (Morph e : G.objects()) out.phi.phi[e] = tidx[e];
  if (!check_equivalence(out.phi, a, out.action)) {
    throw TheoremViolation("orthogonalization is not equivalent to its source");
  }

  out.idem_image.assign(a.m(), {});
  for (int t = 0; t < mE; ++t) out.idem_image[out.tags[t].second].push_back(t);
  std::vector<std::vector<int>> blocks;
  for (const auto& img : out.idem_image) {
    if (!img.empty()) blocks.push_back(img);
  }
  out.phi_of_a = PartitionSubalgebra::from_blocks(e_alg, std::move(blocks));
  return out;
}

Globalization globalize(const PartialAction& a) {
  const FiniteGroupoid& G = *a.groupoid();
  const int n = G.size();

  // Symbols (h, i) with i in S_{d(h)}; the symbol lives at object r(h).
  std::vector<std::pair<Morph, int>> symbols;
  std::vector<std::vector<int>> sym_idx(n, std::vector<int>(a.m(), -1));
  for (int h = 0; h < n; ++h) {
    for (int i : a.support(G.dom(h))) {
      sym_idx[h][i] = static_cast<int>(symbols.size());
      symbols.emplace_back(h, i);
    }
  }

  // Identify (h, i) with (h', pi_{h'^-1 h}(i)) whenever the action already
  // relates them; the union-find closes this transitively. The embedding of A
  // must be coherent across objects, so the base symbols (e, i) and (f, i)
  // are glued whenever the identity supports share the index i. (For
  // orthogonal actions the identity supports are disjoint and no gluing
  // happens, recovering B as the product of the B_e.)
  UnionFind uf(static_cast<int>(symbols.size()));
  for (int h = 0; h < n; ++h) {
    for (int h2 = 0; h2 < n; ++h2) {
      if (G.ran(h) != G.ran(h2)) continue;
      int k = G.compose(G.inverse(h2), h);  // h'^-1 h : d(h) -> d(h')
      for (int i : a.support(G.inverse(k))) {
        uf.unite(sym_idx[h][i], sym_idx[h2][a.pi(k, i)]);
      }
    }
  }
  for (Morph e : G.objects()) {
    for (Morph f : G.objects()) {
      for (int i : a.support(e)) {
        if (a.in_support(f, i)) uf.unite(sym_idx[e][i], sym_idx[f][i]);
      }
    }
  }

  // B indices: classes ordered by least symbol. A class belongs to B_e for
  // every object e at which it has a representative.
  auto raw_classes = uf.classes();
  Globalization out;
  std::vector<int> class_of(symbols.size(), -1);
  std::vector<std::vector<char>> at_object;  // class -> per-object presence
  for (const auto& cls : raw_classes) {
    int b = static_cast<int>(out.class_rep.size());
    out.class_rep.push_back(symbols[cls[0]]);
    out.object_of.push_back(G.ran(symbols[cls[0]].first));
    at_object.emplace_back(n, 0);
    for (int s : cls) {
      class_of[s] = b;
      at_object[b][G.ran(symbols[s].first)] = 1;
    }
  }
  const int mB = static_cast<int>(out.class_rep.size());

  auto b_alg = std::make_shared<IdempotentAlgebra>(a.algebra()->base, mB);
  b_alg->labels.resize(mB);
  for (int b = 0; b < mB; ++b) {
    b_alg->labels[b] =
        "[" + G.label(out.class_rep[b].first) + "," + std::to_string(out.class_rep[b].second + 1) + "]";
  }

  // beta_g maps the class of (h, i), r(h) = d(g), to the class of (gh, i); it
  // must not depend on the representative.
  ActionData d;
  d.groupoid = a.groupoid();
  d.algebra = b_alg;
  d.support.resize(n);
  d.perm.assign(n, std::vector<int>(mB, -1));
  for (int g = 0; g < n; ++g) {
    for (int b = 0; b < mB; ++b) {
      if (at_object[b][G.ran(g)]) d.support[g].push_back(b);
    }
  }
  for (int g = 0; g < n; ++g) {
    for (size_t s = 0; s < symbols.size(); ++s) {
      auto [h, i] = symbols[s];
      if (G.ran(h) != G.dom(g)) continue;
      int target = class_of[sym_idx[G.compose(g, h)][i]];
      int& slot = d.perm[g][class_of[s]];
      if (slot >= 0 && slot != target) {
        throw GlobalizationVerificationFailed(
            "WellDefined", "beta_" + G.label(g) + " is ambiguous on the class of (" + G.label(h) +
                               "," + std::to_string(i + 1) + ")");
      }
      slot = target;
    }
  }
  auto checked = PartialAction::validate(std::move(d));
  if (!checked.ok()) {
    throw GlobalizationVerificationFailed("Validation", join_violations(checked.violations));
  }
  out.action = *checked.value;
  if (!predicates(out.action).global) {
    throw GlobalizationVerificationFailed("Validation", "constructed action is not global");
  }

  for (Morph e : G.objects()) {
    auto& emb = out.embed[e];
    emb.assign(a.m(), -1);
    std::set<int> image;
    for (int i : a.support(e)) {
      emb[i] = class_of[sym_idx[e][i]];
      if (!image.insert(emb[i]).second) {
        throw GlobalizationVerificationFailed(
            "G1", "embedding not injective at " + G.label(e) + ", index " + std::to_string(i + 1));
      }
    }
  }

  auto report = verify_globalization(a, out.action, out.embed);
  if (!report.all()) {
    std::string clause = !report.g1 ? "G1" : !report.g2 ? "G2" : !report.g3 ? "G3" : "G4";
    throw GlobalizationVerificationFailed(
        clause, report.failures.empty() ? "unspecified" : report.failures.front());
  }
  return out;
}

GlobalizationReport verify_globalization(const PartialAction& alpha, const PartialAction& beta,
                                         const std::map<Morph, std::vector<int>>& embed) {
  const FiniteGroupoid& G = *alpha.groupoid();
  if (!same_groupoid(G, *beta.groupoid())) {
    throw PreconditionError("BadArgument", "alpha and beta live over different groupoids");
  }
  GlobalizationReport rep;
  rep.g1 = rep.g2 = rep.g3 = rep.g4 = true;

  // (G1) phi_e embeds S_e injectively into S_e^beta.
  for (Morph e : G.objects()) {
    auto it = embed.find(e);
    if (it == embed.end() || static_cast<int>(it->second.size()) != alpha.m()) {
      rep.g1 = false;
      rep.failures.push_back("(G1) missing embedding at " + G.label(e));
      continue;
    }
    std::set<int> image;
    for (int i = 0; i < alpha.m(); ++i) {
      int b = it->second[i];
      if (alpha.in_support(e, i) != (b >= 0)) {
        rep.g1 = false;
        rep.failures.push_back("(G1) embedding at " + G.label(e) + " defined off S_e");
        break;
      }
      if (b >= 0 && (!beta.in_support(e, b) || !image.insert(b).second)) {
        rep.g1 = false;
        rep.failures.push_back("(G1) embedding at " + G.label(e) + " not injective into B_e");
        break;
      }
    }
  }
  if (!rep.g1) return rep;

  // (G2) phi(A_g) = phi(A_{r(g)}) ∩ beta_g(phi(A_{d(g)})).
  for (int g = 0; g < G.size(); ++g) {
    const auto& phi_r = embed.at(G.ran(g));
    const auto& phi_d = embed.at(G.dom(g));
    std::set<int> lhs, rhs;
    for (int j : alpha.support(g)) lhs.insert(phi_r[j]);
    std::set<int> range_image(phi_r.begin(), phi_r.end());
    for (int i : alpha.support(G.dom(g))) {
      int b = phi_d[i];
      if (beta.pi(g, b) >= 0 && range_image.count(beta.pi(g, b))) rhs.insert(beta.pi(g, b));
    }
    if (lhs != rhs) {
      rep.g2 = false;
      rep.failures.push_back("(G2) fails at " + G.label(g));
    }
  }

  // (G3) beta_g ∘ phi_{d(g)} = phi_{r(g)} ∘ alpha_g on S_{g^-1}.
  for (int g = 0; g < G.size(); ++g) {
    const auto& phi_r = embed.at(G.ran(g));
    const auto& phi_d = embed.at(G.dom(g));
    for (int i : alpha.support(G.inverse(g))) {
      if (beta.pi(g, phi_d[i]) != phi_r[alpha.pi(g, i)]) {
        rep.g3 = false;
        rep.failures.push_back("(G3) fails at " + G.label(g) + ", index " + std::to_string(i + 1));
        break;
      }
    }
  }

  // (G4) B_e is covered by the translates beta_h(phi(A_{d(h)})), r(h) = e.
  for (Morph e : G.objects()) {
    std::set<int> covered;
    for (int h = 0; h < G.size(); ++h) {
      if (G.ran(h) != e) continue;
      for (int i : alpha.support(G.dom(h))) {
        int b = embed.at(G.dom(h))[i];
        if (beta.pi(h, b) >= 0) covered.insert(beta.pi(h, b));
      }
    }
    std::set<int> expect(beta.support(e).begin(), beta.support(e).end());
    if (covered != expect) {
      rep.g4 = false;
      rep.failures.push_back("(G4) translates do not span B at " + G.label(e));
    }
  }
  return rep;
}

PartialAction standard_restriction(const PartialAction& beta, const std::vector<int>& keep) {
  const FiniteGroupoid& G = *beta.groupoid();
  if (!predicates(beta).global) {
    throw PreconditionError("NotGlobal", "standard restriction needs a global action");
  }
  for (size_t j = 0; j < keep.size(); ++j) {
    if (keep[j] < 0 || keep[j] >= beta.m() || (j > 0 && keep[j] <= keep[j - 1])) {
      throw PreconditionError("BadArgument", "keep must be a sorted subset of B indices");
    }
  }

  std::vector<int> newidx(beta.m(), -1);
  for (size_t j = 0; j < keep.size(); ++j) newidx[keep[j]] = static_cast<int>(j);

  auto e_alg = std::make_shared<IdempotentAlgebra>(beta.algebra()->base,
                                                   static_cast<int>(keep.size()));
  if (static_cast<int>(beta.algebra()->labels.size()) == beta.m()) {
    for (int b : keep) e_alg->labels.push_back(beta.algebra()->labels[b]);
  }

  const int n = G.size();
  // Object supports first: S_e^E = keep ∩ S_e^beta (in B indices).
  std::vector<std::vector<int>> obj_support(n);
  for (Morph e : G.objects()) {
    for (int b : beta.support(e)) {
      if (newidx[b] >= 0) obj_support[e].push_back(b);
    }
  }
  ActionData d;
  d.groupoid = beta.groupoid();
  d.algebra = e_alg;
  d.support.resize(n);
  d.perm.assign(n, std::vector<int>(static_cast<int>(keep.size()), -1));
  for (int g = 0; g < n; ++g) {
    // S_g^E = S_{r(g)}^E ∩ pi_g(S_{d(g)}^E ∩ S_{g^-1}^beta), then reindexed.
    for (int x : obj_support[G.dom(g)]) {
      if (!beta.in_support(G.inverse(g), x)) continue;
      int y = beta.pi(g, x);
      if (in_sorted(obj_support[G.ran(g)], y)) d.support[g].push_back(newidx[y]);
    }
    std::sort(d.support[g].begin(), d.support[g].end());
  }
  for (int g = 0; g < n; ++g) {
    for (int x : obj_support[G.dom(g)]) {
      if (!beta.in_support(G.inverse(g), x)) continue;
      int y = beta.pi(g, x);
      if (in_sorted(obj_support[G.ran(g)], y)) d.perm[g][newidx[x]] = newidx[y];
    }
  }
  auto checked = PartialAction::validate(std::move(d));
  if (!checked.ok()) {
    throw TheoremViolation("standard restriction failed to validate: " +
                           join_violations(checked.violations));
  }
  return *checked.value;
}

}  // namespace grpd
