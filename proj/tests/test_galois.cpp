#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "doctest.h"
#include "grpd/constructions.hpp"
#include "grpd/galois.hpp"
#include "grpd/io.hpp"
#include "oracles.hpp"

using namespace grpd;

namespace {

WideSubgroupoid by_labels(const GroupoidPtr& g, std::vector<std::string> labels) {
  std::vector<Morph> members(g->objects().begin(), g->objects().end());
  for (const auto& l : labels) members.push_back(*g->by_label(l));
  std::sort(members.begin(), members.end());
  return WideSubgroupoid{g, members};
}

}  // namespace

TEST_CASE("invariant subrings of the S8 action") {
  PartialAction a = example_action("s8-example");
  auto G = a.groupoid();

  auto h = by_labels(G, {"(f1,f1,g)"});
  CHECK(invariants(a, h) == bracket_parse("[1,2][3,4][5,6][7,8]", a.algebra()));

  auto k0 = by_labels(G, {"(f1,f2,1)", "(f2,f1,1)"});
  CHECK(invariants(a, k0) == bracket_parse("[1,5,9][2,6,10][3,7,11][4,8,12]", a.algebra()));

  CHECK(full_invariants(a) ==
        bracket_parse("[1,2,3,4,5,6,7,8,9,10,11,12]", a.algebra()));

  // Oracle: partitions match the linear kernels.
  CHECK(oracles::invariants_match_kernel(a, h.members, invariants(a, h)));
  CHECK(oracles::invariants_match_kernel(a, k0.members, invariants(a, k0)));

  // Non-closed member sets are rejected.
  std::vector<Morph> open_set(G->objects().begin(), G->objects().end());
  open_set.push_back(*G->by_label("(f1,f2,g)"));
  std::sort(open_set.begin(), open_set.end());
  CHECK_THROWS_AS(invariants(a, WideSubgroupoid{G, open_set}), PreconditionError);
}

TEST_CASE("Galois decision with witness and obstruction") {
  PartialAction s8 = example_action("s8-example");
  auto res = is_galois(s8);
  CHECK(res.galois);
  REQUIRE(res.coords.has_value());
  CHECK(res.coords->pairs.size() == 12);
  CHECK(verify_coordinates(s8, *res.coords));
  CHECK(oracles::gram_galois(s8));

  PartialAction arrow = example_action("non-galois-global");
  auto bad = is_galois(arrow);
  CHECK(!bad.galois);
  REQUIRE(bad.obstruction.has_value());
  CHECK(bad.obstruction->index == 1);  // e_2 is fixed
  std::string lbl = arrow.groupoid()->label(bad.obstruction->g);
  CHECK((lbl == "g" || lbl == "g^-1"));
  CHECK(!oracles::gram_galois(arrow));

  // Wrong coordinates are rejected.
  GaloisCoordinates wrong;
  wrong.pairs.emplace_back(RingElement::one(s8.algebra()), RingElement::one(s8.algebra()));
  CHECK(!verify_coordinates(s8, wrong));
}

TEST_CASE("the unit-vector coordinates for the orthogonalized arrow") {
  PartialAction eps = example_action("non-galois-global");
  Orthogonalization orth = orthogonalize(eps);
  CHECK(is_galois(orth.action).galois);
  // x_1 = y_1 = (e1,0), x_2 = y_2 = (e2,0), x_3 = y_3 = (0,e2), x_4 = y_4 = (0,e3).
  GaloisCoordinates coords;
  for (int i = 0; i < 4; ++i) {
    RingElement u = RingElement::unit(orth.action.algebra(), i);
    coords.pairs.emplace_back(u, u);
  }
  CHECK(verify_coordinates(orth.action, coords));
}

TEST_CASE("stabilizers") {
  PartialAction a = example_action("s8-example");
  auto G = a.groupoid();

  auto h1 = by_labels(G, {"(f1,f1,g)", "(f2,f2,g)"});
  auto c = bracket_parse("[1,2][3,4][5,6][7,8][9,10][11,12]", a.algebra());
  auto stab = stabilizer(a, c);
  CHECK(stab.members == h1.members);
  CHECK(stab.is_wide);
  CHECK(stab.contains(*G->by_label("(f1,f1,g)")));
  CHECK(!stab.contains(*G->by_label("(f1,f1,h)")));
  CHECK(stab.members == oracles::exhaustive_stabilizer(a, c));

  // C = A pins everything down to the identities.
  auto full = PartitionSubalgebra::full(a.algebra());
  auto s0 = stabilizer(a, full);
  CHECK(s0.members == std::vector<Morph>(G->objects().begin(), G->objects().end()));
  CHECK(s0.is_wide);
  CHECK(s0.members == oracles::exhaustive_stabilizer(a, full));

  // C = A^beta is stabilized by the whole groupoid.
  auto inv = full_invariants(a);
  auto sfull = stabilizer(a, inv);
  CHECK(static_cast<int>(sfull.members.size()) == G->size());
}

TEST_CASE("alpha-strong criterion against the exhaustive oracle") {
  PartialAction a = example_action("s8-example");
  for (const char* b :
       {"[1,2][3,4][5,6][7,8][9,10][11,12]", "[1,2,3,4][5,6,7,8]",
        "[1,2,3,4,5,6,7,8,9,10,11,12]", "[1,5,9][2,6,10][3,7,11][4,8,12]"}) {
    auto c = bracket_parse(b, a.algebra());
    CHECK(is_alpha_strong(a, c).strong == oracles::exhaustive_alpha_strong(a, c));
  }
  CHECK(is_alpha_strong(a, PartitionSubalgebra::full(a.algebra())).strong ==
        oracles::exhaustive_alpha_strong(a, PartitionSubalgebra::full(a.algebra())));

  PartialAction w = example_action("not-strongly-galois");
  auto cw = PartitionSubalgebra::full(w.algebra());
  auto r = is_alpha_strong(w, cw);
  CHECK(r.strong == oracles::exhaustive_alpha_strong(w, cw));
  if (!r.strong) CHECK(r.witness.has_value());
}

TEST_CASE("separability witnesses") {
  PartialAction a = example_action("s8-example");
  auto base = full_invariants(a);
  auto c = bracket_parse("[1,2][3,4][5,6][7,8][9,10][11,12]", a.algebra());
  auto w = separability_witness(c, base);
  CHECK(w.verified);
  CHECK(w.coeff.size() == c.blocks.size());

  auto full = PartitionSubalgebra::full(a.algebra());
  CHECK(separability_witness(full, base).verified);

  // d must be a coarsening of c.
  CHECK_THROWS_AS(separability_witness(base, c), PreconditionError);
}

TEST_CASE("vanishing coordinates off the stabilizer") {
  PartialAction a = example_action("s8-example");
  // C = A^beta: the stabilizer is all of G, so the vanishing condition is
  // vacuous and the single pair (1, 1) is returned.
  auto coords = coordinates_vanishing_off_stabilizer(a, full_invariants(a));
  CHECK(coords.pairs.size() == 1);
  CHECK(coords.pairs[0].first == RingElement::one(a.algebra()));

  // C = A: the stabilizer is G0 and the blocks are the e_i, so the pairs
  // double as partial Galois coordinates.
  auto coords2 =
      coordinates_vanishing_off_stabilizer(a, PartitionSubalgebra::full(a.algebra()));
  CHECK(coords2.pairs.size() == 12);
  CHECK(verify_coordinates(a, coords2));
}
