#ifndef GRPD_CONSTRUCTIONS_HPP_
#define GRPD_CONSTRUCTIONS_HPP_

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "grpd/action.hpp"

namespace grpd {

class GlobalizationVerificationFailed : public std::runtime_error {
 public:
  GlobalizationVerificationFailed(std::string clause, const std::string& what)
      : std::runtime_error("GlobalizationVerificationFailed(" + clause + "): " + what),
        clause_(std::move(clause)) {}
  const std::string& clause() const { return clause_; }

 private:
  std::string clause_;
};

// The orthogonal action eps on E = prod_e A_e equivalent to the source.
// E's minimal idempotents are tagged (object e, source index i in S_e), in
// sorted object order then source index order.
struct Orthogonalization {
  PartialAction action;                     // eps on E
  AlgebraPtr source_algebra;                // A
  std::vector<std::pair<Morph, int>> tags;  // E index -> (e, i)
  ActionEquivalence phi;                    // per-object phi_e as index maps
  PartitionSubalgebra phi_of_a;             // phi(A) inside E, as a partition
  std::vector<std::vector<int>> idem_image; // source index i -> E indices of phi(e_i)

  // phi(a) = (phi_e(a 1_e))_e, injective.
  RingElement embed(const RingElement& a) const;
  // Partition of E induced by phi(C) for a partition subalgebra C of A.
  PartitionSubalgebra embed_partition(const PartitionSubalgebra& c) const;
  // Pull a partition of E back along phi to a partition of A: i ~ i' whenever
  // some pair of their tagged copies is related.
  PartitionSubalgebra pullback_partition(const PartitionSubalgebra& t) const;
};

Orthogonalization orthogonalize(const PartialAction& a);

// Global action beta on B built as a germ quotient of symbols (h, i),
// i in S_{d(h)}, identified when the action already matches them up. Always
// post-verified against (G1)-(G4); failure throws.
struct Globalization {
  PartialAction action;                     // beta on B
  std::map<Morph, std::vector<int>> embed;  // embed[e][i] = B index of [(e,i)], -1 off S_e
  std::vector<std::pair<Morph, int>> class_rep;  // B index -> least germ (h, i)
  std::vector<Morph> object_of;                  // B index -> object of least germ
};

Globalization globalize(const PartialAction& a);

struct GlobalizationReport {
  bool g1 = false, g2 = false, g3 = false, g4 = false;
  std::vector<std::string> failures;
  bool all() const { return g1 && g2 && g3 && g4; }
};

// Clause-by-clause check of the globalization axioms for beta against alpha,
// with per-object index embeddings; exhaustive over minimal idempotents.
GlobalizationReport verify_globalization(const PartialAction& alpha, const PartialAction& beta,
                                         const std::map<Morph, std::vector<int>>& embed);

// Partial action induced on the ideal spanned by the idempotents `keep`
// (sorted B indices): supports S_g^E = S_{r(g)}^E ∩ pi_g(S_{d(g)}^E ∩ S_{g^-1}),
// permutations restricted accordingly.
PartialAction standard_restriction(const PartialAction& beta, const std::vector<int>& keep);

}  // namespace grpd

#endif  // GRPD_CONSTRUCTIONS_HPP_
