#ifndef GRPD_ACTION_HPP_
#define GRPD_ACTION_HPP_

#include <map>
#include <vector>

#include "grpd/algebra.hpp"
#include "grpd/groupoid.hpp"
#include "grpd/subgroupoid.hpp"

namespace grpd {

// Raw data for a partial action in idempotent-permutation form: per morphism a
// support S_g (so 1_g = sum of e_i over S_g) and a bijection pi_g from
// S_{g^-1} onto S_g realizing alpha_g.
struct ActionData {
  GroupoidPtr groupoid;
  AlgebraPtr algebra;
  std::vector<std::vector<int>> support;  // per morphism, sorted 0-based indices
  std::vector<std::vector<int>> perm;     // perm[g][i] = pi_g(i), -1 outside S_{g^-1}
};

class PartialAction {
 public:
  // Empty placeholder; only validate() yields a usable value.
  PartialAction() = default;

  static Checked<PartialAction> validate(ActionData raw);

  const GroupoidPtr& groupoid() const { return g_; }
  const AlgebraPtr& algebra() const { return alg_; }
  int m() const { return alg_->m; }

  const std::vector<int>& support(Morph g) const { return support_[g]; }
  bool in_support(Morph g, int i) const;
  // pi_g(i); -1 when i is outside S_{g^-1}.
  int pi(Morph g, int i) const { return perm_[g][i]; }
  // pi_g^{-1}(j); -1 when j is outside S_g.
  int pi_inv(Morph g, int j) const { return perm_inv_[g][j]; }

  RingElement unit_of(Morph g) const;  // 1_g
  // alpha_g(a 1_{g^-1}) extended by zero outside A_g.
  RingElement apply(Morph g, const RingElement& a) const;

  bool has_empty_support() const;

  bool operator==(const PartialAction& other) const;

 private:
  GroupoidPtr g_;
  AlgebraPtr alg_;
  std::vector<std::vector<int>> support_;
  std::vector<std::vector<int>> perm_, perm_inv_;
};

struct ActionPredicates {
  bool orthogonal = false;
  bool global = false;
  bool unital = true;     // intrinsic to the representation
  bool preunital = true;  // likewise
};

ActionPredicates predicates(const PartialAction& a);

// Both clauses of the composition lemma: pi_{g^-1} = pi_g^{-1} and
// pi_g(S_{g^-1} ∩ S_h) = S_g ∩ S_{gh}. A theorem for validated actions.
bool prop22_check(const PartialAction& a);

// The subgroupoid H as a standalone groupoid; morphism ids are positions in
// h.members, labels preserved.
GroupoidPtr subgroupoid_as_groupoid(const WideSubgroupoid& h);

// Restriction of the action to a wide subgroupoid, revalidated.
PartialAction restrict_action(const PartialAction& a, const WideSubgroupoid& h);

// Per-object index bijections phi_e : S_e^source -> S_e^target.
struct ActionEquivalence {
  std::map<Morph, std::vector<int>> phi;  // phi[e][i] = image index, -1 outside S_e
};

// Both clauses of action equivalence, checked on minimal idempotents.
bool check_equivalence(const ActionEquivalence& eq, const PartialAction& source,
                       const PartialAction& target);

}  // namespace grpd

#endif  // GRPD_ACTION_HPP_
