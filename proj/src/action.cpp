#include "grpd/action.hpp"

#include <algorithm>
#include <set>

namespace grpd {

namespace {

bool sorted_unique_in_range(const std::vector<int>& v, int m) {
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0 || v[i] >= m) return false;
    if (i > 0 && v[i] <= v[i - 1]) return false;
  }
  return true;
}

bool in_sorted(const std::vector<int>& v, int x) {
  return std::binary_search(v.begin(), v.end(), x);
}

}  // namespace

Checked<PartialAction> PartialAction::validate(ActionData raw) {
  Checked<PartialAction> out;
  auto& vs = out.violations;
  if (!raw.groupoid || !raw.algebra) {
    vs.push_back({"Malformed", "missing groupoid or algebra"});
    return out;
  }
  const FiniteGroupoid& G = *raw.groupoid;
  const int n = G.size(), m = raw.algebra->m;
  if (static_cast<int>(raw.support.size()) != n || static_cast<int>(raw.perm.size()) != n) {
    vs.push_back({"Malformed", "support/perm tables do not match morphism count"});
    return out;
  }
  for (int g = 0; g < n; ++g) {
    if (!sorted_unique_in_range(raw.support[g], m)) {
      vs.push_back({"Malformed", "support of " + G.label(g) + " not a sorted index set"});
      return out;
    }
    if (static_cast<int>(raw.perm[g].size()) != m) {
      vs.push_back({"Malformed", "perm of " + G.label(g) + " has wrong length"});
      return out;
    }
  }

  // pi_g must be a bijection S_{g^-1} -> S_g.
  std::vector<std::vector<int>> perm_inv(n, std::vector<int>(m, -1));
  for (int g = 0; g < n; ++g) {
    const auto& dom = raw.support[G.inverse(g)];
    const auto& img = raw.support[g];
    std::set<int> hit;
    bool ok = true;
    for (int i = 0; i < m; ++i) {
      int j = raw.perm[g][i];
      bool should = in_sorted(dom, i);
      if (should != (j >= 0)) {
        vs.push_back({"NotBijective", "pi_" + G.label(g) + " defined off S_{g^-1} or missing on it"});
        ok = false;
        break;
      }
      if (j >= 0) {
        if (!in_sorted(img, j) || !hit.insert(j).second) {
          vs.push_back({"NotBijective", "pi_" + G.label(g) + " not injective into S_g"});
          ok = false;
          break;
        }
        perm_inv[g][j] = i;
      }
    }
    if (ok && hit.size() != img.size()) {
      vs.push_back({"NotBijective", "pi_" + G.label(g) + " not onto S_g"});
    }
  }
  if (!vs.empty()) return out;

  // Ideal chain S_g ⊆ S_{r(g)}.
  for (int g = 0; g < n; ++g) {
    for (int i : raw.support[g]) {
      if (!in_sorted(raw.support[G.ran(g)], i)) {
        vs.push_back({"IdealChain", "S_" + G.label(g) + " not inside S_" + G.label(G.ran(g))});
        break;
      }
    }
  }

  // (P1): identities act as the identity and their supports cover {1..m}.
  std::vector<bool> covered(m, false);
  for (Morph e : G.objects()) {
    for (int i : raw.support[e]) {
      covered[i] = true;
      if (raw.perm[e][i] != i) {
        vs.push_back({"P1Identity", "pi_" + G.label(e) + " is not the identity on S_e"});
        break;
      }
    }
  }
  for (int i = 0; i < m; ++i) {
    if (!covered[i]) {
      vs.push_back({"P1Covering", "index " + std::to_string(i + 1) +
                                      " not covered by any identity support"});
    }
  }
  if (!vs.empty()) return out;

  // (P2)/(P3) over all composable pairs.
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) {
      if (!G.composable(g, h)) continue;
      int gh = G.compose(g, h);
      for (int j : raw.support[h]) {
        if (!in_sorted(raw.support[G.inverse(g)], j)) continue;  // j in S_{g^-1} ∩ S_h
        int i = perm_inv[h][j];
        if (!in_sorted(raw.support[G.inverse(gh)], i)) {
          vs.push_back({"P2", "pi_" + G.label(h) + "^{-1}(" + std::to_string(j + 1) +
                                  ") escapes S_{(" + G.label(gh) + ")^-1}"});
          continue;
        }
        if (raw.perm[g][j] != raw.perm[gh][i]) {
          vs.push_back({"P3", "pi_" + G.label(g) + "∘pi_" + G.label(h) + " != pi_" +
                                  G.label(gh) + " at index " + std::to_string(i + 1)});
        }
      }
    }
  }
  if (!vs.empty()) return out;

  PartialAction a;
  a.g_ = raw.groupoid;
  a.alg_ = raw.algebra;
  a.support_ = std::move(raw.support);
  a.perm_ = std::move(raw.perm);
  a.perm_inv_ = std::move(perm_inv);
  out.value = std::move(a);
  return out;
}

bool PartialAction::in_support(Morph g, int i) const { return in_sorted(support_[g], i); }

RingElement PartialAction::unit_of(Morph g) const {
  return RingElement::indicator(alg_, support_[g]);
}

RingElement PartialAction::apply(Morph g, const RingElement& a) const {
  std::vector<mpq_class> c(alg_->m, mpq_class(0));
  for (int i : support_[g_->inverse(g)]) c[perm_[g][i]] = a.coeff(i);
  return RingElement(alg_, std::move(c));
}

bool PartialAction::has_empty_support() const {
  return std::any_of(support_.begin(), support_.end(),
                     [](const std::vector<int>& s) { return s.empty(); });
}

bool PartialAction::operator==(const PartialAction& other) const {
  return g_->table().labels == other.g_->table().labels &&
         g_->table().compose == other.g_->table().compose && *alg_ == *other.alg_ &&
         support_ == other.support_ && perm_ == other.perm_;
}

ActionPredicates predicates(const PartialAction& a) {
  ActionPredicates p;
  const FiniteGroupoid& G = *a.groupoid();
  std::vector<bool> seen(a.m(), false);
  p.orthogonal = true;
  for (Morph e : G.objects()) {
    for (int i : a.support(e)) {
      if (seen[i]) p.orthogonal = false;
      seen[i] = true;
    }
  }
  p.global = true;
  for (int g = 0; g < G.size() && p.global; ++g) {
    p.global = a.support(g) == a.support(G.ran(g));
  }
  return p;
}

bool prop22_check(const PartialAction& a) {
  const FiniteGroupoid& G = *a.groupoid();
  const int n = G.size();
  // (i) pi_{g^-1} = pi_g^{-1}
  for (int g = 0; g < n; ++g) {
    for (int i : a.support(G.inverse(g))) {
      if (a.pi(G.inverse(g), a.pi(g, i)) != i) return false;
    }
  }
  // (ii) pi_g(S_{g^-1} ∩ S_h) = S_g ∩ S_{gh}
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) {
      if (!G.composable(g, h)) continue;
      int gh = G.compose(g, h);
      std::set<int> lhs, rhs;
      for (int j : a.support(h)) {
        if (a.pi(g, j) >= 0) lhs.insert(a.pi(g, j));
      }
      for (int j : a.support(g)) {
        if (a.in_support(gh, j)) rhs.insert(j);
      }
      if (lhs != rhs) return false;
    }
  }
  return true;
}

GroupoidPtr subgroupoid_as_groupoid(const WideSubgroupoid& h) {
  const FiniteGroupoid& G = *h.parent;
  const int k = static_cast<int>(h.members.size());
  auto index_of = [&](Morph m) {
    return static_cast<int>(std::lower_bound(h.members.begin(), h.members.end(), m) -
                            h.members.begin());
  };
  GroupoidTable t;
  t.labels.resize(k);
  t.inverse.resize(k);
  t.compose.assign(k, std::vector<int>(k, -1));
  for (int i = 0; i < k; ++i) {
    Morph g = h.members[i];
    t.labels[i] = G.label(g);
    t.inverse[i] = index_of(G.inverse(g));
    if (G.is_identity(g)) t.identities.push_back(i);
    for (int j = 0; j < k; ++j) {
      int c = G.compose(g, h.members[j]);
      if (c >= 0) t.compose[i][j] = index_of(c);
    }
  }
  auto checked = FiniteGroupoid::validate(t);
  if (!checked.ok()) {
    throw PreconditionError("NotWide", "subset is not a subgroupoid: " +
                                           join_violations(checked.violations));
  }
  return std::make_shared<const FiniteGroupoid>(*checked.value);
}

PartialAction restrict_action(const PartialAction& a, const WideSubgroupoid& h) {
  const FiniteGroupoid& G = *a.groupoid();
  if (!is_wide_subgroupoid(G, h.members)) {
    throw PreconditionError("NotWide", "restriction target is not a wide subgroupoid");
  }
  ActionData d;
  d.groupoid = subgroupoid_as_groupoid(h);
  d.algebra = a.algebra();
  const int k = static_cast<int>(h.members.size());
  d.support.resize(k);
  d.perm.resize(k);
  for (int i = 0; i < k; ++i) {
    Morph g = h.members[i];
    d.support[i] = a.support(g);
    d.perm[i].assign(a.m(), -1);
    for (int x : a.support(G.inverse(g))) d.perm[i][x] = a.pi(g, x);
  }
  auto checked = PartialAction::validate(std::move(d));
  if (!checked.ok()) {
    throw TheoremViolation("restriction to a wide subgroupoid failed validation: " +
                           join_violations(checked.violations));
  }
  return *checked.value;
}

bool check_equivalence(const ActionEquivalence& eq, const PartialAction& source,
                       const PartialAction& target) {
  const FiniteGroupoid& G = *source.groupoid();
  if (G.table().labels != target.groupoid()->table().labels ||
      G.table().compose != target.groupoid()->table().compose) {
    throw PreconditionError("BadFamily", "actions live over different groupoids");
  }
  // phi_e must be bijections S_e^source -> S_e^target.
  for (Morph e : G.objects()) {
    auto it = eq.phi.find(e);
    if (it == eq.phi.end() || static_cast<int>(it->second.size()) != source.m()) {
      throw PreconditionError("BadFamily", "missing family member at " + G.label(e));
    }
    std::set<int> image;
    for (int i = 0; i < source.m(); ++i) {
      bool should = source.in_support(e, i);
      int j = it->second[i];
      if (should != (j >= 0)) {
        throw PreconditionError("BadFamily", "phi at " + G.label(e) + " defined off S_e");
      }
      if (j >= 0) {
        if (!target.in_support(e, j) || !image.insert(j).second) {
          throw PreconditionError("BadFamily", "phi at " + G.label(e) + " not injective into S_e");
        }
      }
    }
    if (image.size() != target.support(e).size()) {
      throw PreconditionError("BadFamily", "phi at " + G.label(e) + " not onto S_e");
    }
  }
  for (int g = 0; g < G.size(); ++g) {
    const auto& phi_r = eq.phi.at(G.ran(g));
    const auto& phi_d = eq.phi.at(G.dom(g));
    // (i) phi_{r(g)}(S_g) = S_g^target
    std::set<int> image;
    for (int i : source.support(g)) image.insert(phi_r[i]);
    std::set<int> expect(target.support(g).begin(), target.support(g).end());
    if (image != expect) return false;
    // (ii) phi_{r(g)} ∘ pi_g = pi_g^target ∘ phi_{d(g)} on S_{g^-1}
    for (int i : source.support(G.inverse(g))) {
      if (phi_r[source.pi(g, i)] != target.pi(g, phi_d[i])) return false;
    }
  }
  return true;
}

}  // namespace grpd
