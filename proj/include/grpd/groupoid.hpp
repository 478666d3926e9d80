#ifndef GRPD_GROUPOID_HPP_
#define GRPD_GROUPOID_HPP_

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "grpd/error.hpp"

namespace grpd {

using Morph = int;

// Raw composition-table input, prior to axiom checking.
struct GroupoidTable {
  std::vector<std::string> labels;         // morphism id -> label
  std::vector<int> inverse;                // morphism id -> id, -1 missing
  std::vector<int> identities;             // ids declared as objects
  std::vector<std::vector<int>> compose;   // compose[g][h] = gh, -1 undefined
  std::vector<int> dom, ran;               // optional; cross-checked if given
};

// Validation outcome: either a value or the list of broken axioms.
template <typename T>
struct Checked {
  std::optional<T> value;
  std::vector<Violation> violations;

  bool ok() const { return value.has_value(); }
  const T& get() const {
    if (!ok()) throw PreconditionError("ValidationFailed", join_violations(violations));
    return *value;
  }
};

// A finite groupoid with dense morphism indices and a full composition table.
// compose(g, h) is the product gh, defined iff dom(g) == ran(h); identities
// are their own objects, dom(g) = g^{-1}g and ran(g) = gg^{-1}.
class FiniteGroupoid {
 public:
  // Empty placeholder; only validate() and the builders yield usable values.
  FiniteGroupoid() = default;

  static Checked<FiniteGroupoid> validate(const GroupoidTable& raw);

  int size() const { return n_; }
  int compose(Morph g, Morph h) const { return comp_[g * n_ + h]; }
  bool composable(Morph g, Morph h) const { return compose(g, h) >= 0; }
  Morph inverse(Morph g) const { return inv_[g]; }
  Morph dom(Morph g) const { return dom_[g]; }
  Morph ran(Morph g) const { return ran_[g]; }
  bool is_identity(Morph g) const { return dom_[g] == g; }
  const std::vector<Morph>& objects() const { return objects_; }
  const std::string& label(Morph g) const { return labels_[g]; }
  std::optional<Morph> by_label(const std::string& s) const;

  const GroupoidTable& table() const { return table_; }

 private:
  int n_ = 0;
  std::vector<int> comp_;  // n*n, -1 sentinel
  std::vector<Morph> inv_, dom_, ran_;
  std::vector<Morph> objects_;  // sorted identity ids
  std::vector<std::string> labels_;
  GroupoidTable table_;
};

using GroupoidPtr = std::shared_ptr<const FiniteGroupoid>;

// Builders. All outputs pass validate() by construction.
FiniteGroupoid coarse_groupoid(int n);  // throws PreconditionError for n < 1
FiniteGroupoid group_from_table(const std::vector<std::string>& labels,
                                const std::vector<std::vector<int>>& mult);
FiniteGroupoid direct_product(const FiniteGroupoid& a, const FiniteGroupoid& b);
FiniteGroupoid disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b);

// Common small groups for examples and fuzzing.
FiniteGroupoid cyclic_group(int k);
FiniteGroupoid klein_four_group();  // labels 1, g, h, gh

struct ConnectedComponent {
  std::vector<Morph> objects;
  std::vector<Morph> morphisms;
};

std::vector<ConnectedComponent> connected_components(const FiniteGroupoid& g);
bool is_connected(const FiniteGroupoid& g);

struct IsotropyGroup {
  FiniteGroupoid group;        // one-object groupoid
  std::vector<Morph> members;  // group element i -> parent morphism
};

IsotropyGroup isotropy_group(const FiniteGroupoid& g, Morph e);

// G connected: explicit isomorphism G ~= A_n x G(e), e the least object.
// Morphism g with dom-object index i, ran-object index j and isotropy part k
// corresponds to the triple (i, j, k); the bijection is verified to preserve
// composition before being returned.
struct ConnectedDecomposition {
  int n = 0;                               // |objects|
  std::vector<Morph> objects;              // sorted object ids
  IsotropyGroup isotropy;                  // at objects[0]
  std::vector<std::array<int, 3>> to_triple;  // morphism -> (i, j, k)
  std::vector<Morph> from_triple;          // (i*n + j)*|H| + k -> morphism
  std::vector<Morph> transversal;          // t_i in G(objects[0], objects[i])
};

ConnectedDecomposition connected_decomposition(const FiniteGroupoid& g);

// The enumeration {g_{e,1}, ..., g_{e,n_e}} of G(-, e) = { g : ran(g) = e }.
struct CanonicalEnumeration {
  Morph object;
  std::vector<Morph> list;  // list[0] == object
};

CanonicalEnumeration canonical_enumeration(const FiniteGroupoid& g,
                                           const ConnectedDecomposition& dec,
                                           Morph e);

// One enumeration of G(-, e) per object e.
using EnumerationFamily = std::map<Morph, std::vector<Morph>>;

EnumerationFamily canonical_family(const FiniteGroupoid& g);

// True iff conjugating any morphism by aligned enumeration entries can only
// land in the identities when the morphism itself is an identity.
bool check_condition_superfluous(const FiniteGroupoid& g,
                                 const EnumerationFamily& family);

}  // namespace grpd

#endif  // GRPD_GROUPOID_HPP_
