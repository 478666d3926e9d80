#ifndef GRPD_CORRESPONDENCE_HPP_
#define GRPD_CORRESPONDENCE_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grpd/constructions.hpp"
#include "grpd/galois.hpp"

namespace grpd {

struct CorrespondenceRow {
  WideSubgroupoid h;
  PartitionSubalgebra c;
  bool separable = false;
  bool alpha_strong = false;
  bool stabilizer_equals_h = false;
  // Global mode only: the stabilizer was not itself a subgroupoid and had to
  // be closed before maximalizing.
  bool stabilizer_needed_closure = false;
};

struct CorrespondenceTable {
  std::string mode;  // "orthogonal", "strong" or "global"
  std::vector<CorrespondenceRow> rows;
};

// One row per wide subgroupoid H: C = invariants(a, H), flags asserted
// (separable over the full invariants, alpha-strong, stabilizer = H) and the
// map H -> C injective. Hypotheses: orthogonal, Galois, no empty supports.
CorrespondenceTable run_orthogonal_correspondence(const PartialAction& a);

struct StronglyGaloisResult {
  bool strongly = false;
  std::string reason;  // empty when strongly Galois
  // Distinct wide subgroupoids with equal traces in the orthogonalization.
  std::optional<std::pair<WideSubgroupoid, WideSubgroupoid>> collision;
};

// (i) nonzero object supports, (ii) Galois, (iii) the traces
// E^{eps|H} ∩ phi(A) are pairwise distinct over wide subgroupoids H.
StronglyGaloisResult is_strongly_galois(const PartialAction& a);

// Rows (H, phi^-1(E^{eps|H} ∩ phi(A))) over all wide H; asserts row-wise
// phi(A^{a|H}) = E^{eps|H} ∩ phi(A), the inverse C -> G_{phi(C)} = H, and
// injectivity. Requires is_strongly_galois.
CorrespondenceTable run_strong_correspondence(const PartialAction& a);

struct SimClasses {
  std::vector<WideSubgroupoid> w;          // all wide subgroupoids, canonical order
  std::vector<PartitionSubalgebra> inv;    // invariants per element of w
  std::vector<std::vector<int>> classes;   // indices into w, grouped by equal invariants
  std::vector<int> max_of_class;           // index into w of the class maximum
};

// Equal-invariants classes of wide subgroupoids of a global action; each class
// has a unique maximum (the join of its members), asserted to stay in class.
SimClasses sim_classes(const PartialAction& beta);

// Rows over the class maxima only; inverse = maximalized stabilizer of
// phi(C) in the orthogonalization. Requires global, Galois, no empty supports.
CorrespondenceTable run_global_correspondence(const PartialAction& beta);

// "G0" for the identity-only subgroupoid, else "G0 u {labels...}".
std::string subgroupoid_name(const WideSubgroupoid& h);

// Deterministic text ("<H> -> <C>" per line, all-singleton C printed as "A")
// or JSON rows.
std::string render_table(const CorrespondenceTable& t, const std::string& format);

}  // namespace grpd

#endif  // GRPD_CORRESPONDENCE_HPP_
