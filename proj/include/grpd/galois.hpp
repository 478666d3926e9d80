#ifndef GRPD_GALOIS_HPP_
#define GRPD_GALOIS_HPP_

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "grpd/action.hpp"

namespace grpd {

// The subring of invariants of the action restricted to the wide subgroupoid
// with the given members: classes of i ~ pi_h(i) over h in H, i in S_{h^-1}.
PartitionSubalgebra invariants(const PartialAction& a, const std::vector<Morph>& members);
PartitionSubalgebra invariants(const PartialAction& a, const WideSubgroupoid& h);
// Invariants under the whole groupoid.
PartitionSubalgebra full_invariants(const PartialAction& a);

struct GaloisCoordinates {
  std::vector<std::pair<RingElement, RingElement>> pairs;  // (x_i, y_i)
};

// Exact check of sum_i x_i alpha_g(y_i 1_{g^-1}) = [g identity] 1_g for all g.
bool verify_coordinates(const PartialAction& a, const GaloisCoordinates& coords);

struct GaloisObstruction {
  Morph g;    // a non-identity morphism
  int index;  // fixed point of pi_g in S_{g^-1}, 0-based
};

struct GaloisResult {
  bool galois = false;
  std::optional<GaloisCoordinates> coords;        // when galois
  std::optional<GaloisObstruction> obstruction;   // when not
};

// Galois iff no non-identity morphism's permutation has a fixed point; the
// witness coordinates are {x_i = y_i = e_i} and are re-verified before return.
GaloisResult is_galois(const PartialAction& a);

struct StabilizerSet {
  GroupoidPtr parent;
  std::vector<Morph> members;  // sorted; always contains all identities
  bool is_wide = false;        // reported, not assumed

  bool contains(Morph g) const;
};

// G_C: morphisms with alpha_g(a 1_{g^-1}) = a 1_g for all a in C; tested on
// block idempotents, which generate C.
StabilizerSet stabilizer(const PartialAction& a, const PartitionSubalgebra& c);

struct AlphaStrongResult {
  bool strong = true;
  // (g, h, index) with r(g) = r(h), g^-1 h outside G_C and no element of C
  // separating the two sides at the index.
  std::optional<std::array<int, 3>> witness;
};

// Fast single-coordinate criterion: for pairs with g^-1 h outside G_C, every
// i in S_g ∩ S_h must have C-inequivalent preimages under pi_g and pi_h.
// (Indices in the symmetric difference are always separated by a block
// idempotent, so only the intersection constrains.)
AlphaStrongResult is_alpha_strong(const PartialAction& a, const PartitionSubalgebra& c);

// Candidate separability idempotent e = sum_b f_b ⊗ f_b of C over D, checked
// symbolically in the free tensor square (coefficients on the f_b ⊗ f_b'
// basis): mu(e) = 1 and (x ⊗ 1 - 1 ⊗ x) e = 0 for the block generators x.
struct SeparabilityWitness {
  PartitionSubalgebra c, d;
  std::vector<std::vector<mpq_class>> coeff;  // on basis f_b ⊗ f_b' of C ⊗ C
  bool verified = false;
};

// Requires every block of d to be a union of blocks of c (d plays A^alpha).
SeparabilityWitness separability_witness(const PartitionSubalgebra& c,
                                         const PartitionSubalgebra& d);

// {x_b = y_b = f_b} over blocks of C, verified to sum to 1 and to make
// sum_b f_b alpha_g(f_b 1_{g^-1}) vanish for every g outside G_C. Throws
// TheoremViolation("VerificationFailed...") if either check fails.
GaloisCoordinates coordinates_vanishing_off_stabilizer(const PartialAction& a,
                                                       const PartitionSubalgebra& c);

}  // namespace grpd

#endif  // GRPD_GALOIS_HPP_
