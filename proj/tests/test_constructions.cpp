#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "doctest.h"
#include "grpd/constructions.hpp"
#include "grpd/galois.hpp"
#include "grpd/io.hpp"
#include "oracles.hpp"

using namespace grpd;

TEST_CASE("orthogonalization of the arrow example") {
  PartialAction a = example_action("non-galois-global");
  auto G = a.groupoid();
  Morph f1 = *G->by_label("f1"), f2 = *G->by_label("f2");
  Morph g = *G->by_label("g");

  Orthogonalization orth = orthogonalize(a);
  const PartialAction& eps = orth.action;
  CHECK(predicates(eps).orthogonal);
  CHECK(eps.m() == 4);
  REQUIRE(orth.tags.size() == 4);
  CHECK(orth.tags[0] == std::make_pair(f1, 0));
  CHECK(orth.tags[1] == std::make_pair(f1, 1));
  CHECK(orth.tags[2] == std::make_pair(f2, 1));
  CHECK(orth.tags[3] == std::make_pair(f2, 2));

  CHECK(eps.support(f1) == std::vector<int>{0, 1});
  CHECK(eps.support(f2) == std::vector<int>{2, 3});
  CHECK(eps.support(g) == std::vector<int>{2, 3});
  // eps_g((a e1 + b e2, 0)) = (0, a e2 + b e3).
  CHECK(eps.pi(g, 0) == 3);
  CHECK(eps.pi(g, 1) == 2);

  // phi embeds A block-diagonally: e_2 lives at both objects.
  CHECK(orth.embed(RingElement::unit(a.algebra(), 1)) ==
        RingElement::indicator(eps.algebra(), {1, 2}));
  CHECK(orth.phi_of_a.blocks == std::vector<std::vector<int>>{{0}, {1, 2}, {3}});
  CHECK(orth.embed_partition(PartitionSubalgebra::full(a.algebra())) == orth.phi_of_a);
  CHECK(orth.pullback_partition(orth.phi_of_a) == PartitionSubalgebra::full(a.algebra()));

  auto c = PartitionSubalgebra::from_blocks(a.algebra(), {{0, 2}, {1}});
  CHECK(orth.pullback_partition(orth.embed_partition(c)) == c);
}

TEST_CASE("orthogonalization of the S8 example") {
  PartialAction a = example_action("s8-example");
  Orthogonalization orth = orthogonalize(a);
  CHECK(orth.action.m() == 16);
  CHECK(predicates(orth.action).orthogonal);
  CHECK(prop22_check(orth.action));
  CHECK(is_galois(orth.action).galois);
  // phi(A) identifies the two copies of the overlap e_5..e_8.
  CHECK(orth.phi_of_a.blocks.size() == 12);
}

TEST_CASE("globalization fixes global actions") {
  for (const char* name : {"non-galois-global", "s8-example", "not-strongly-galois"}) {
    PartialAction a = example_action(name);
    REQUIRE(predicates(a).global);
    Globalization glob = globalize(a);
    CHECK(glob.action.m() == a.m());
    CHECK(predicates(glob.action).global);
    auto rep = verify_globalization(a, glob.action, glob.embed);
    CHECK(rep.all());
    ActionEquivalence emb{glob.embed};
    CHECK(check_equivalence(emb, a, glob.action));
  }
}

TEST_CASE("globalization of a proper restriction") {
  PartialAction s8 = example_action("s8-example");
  PartialAction r = standard_restriction(s8, {0, 1, 2, 3, 4, 5});
  CHECK(!predicates(r).global);
  CHECK(prop22_check(r));

  Globalization glob = globalize(r);
  auto rep = verify_globalization(r, glob.action, glob.embed);
  CHECK(rep.g1);
  CHECK(rep.g2);
  CHECK(rep.g3);
  CHECK(rep.g4);
  CHECK(predicates(glob.action).global);

  // The germ classes carry their object and a least representative.
  for (size_t b = 0; b < glob.class_rep.size(); ++b) {
    Morph h = glob.class_rep[b].first;
    CHECK(glob.object_of[b] == glob.action.groupoid()->ran(h));
  }
}

TEST_CASE("globalization is unique up to equivalence") {
  // A global action is its own globalization, so the germ construction must
  // reproduce it up to equivalence.
  PartialAction a = example_action("non-galois-global");
  Globalization glob = globalize(a);
  auto eq = oracles::find_equivalence(a, glob.action);
  CHECK(eq.has_value());
}

TEST_CASE("verification rejects wrong embeddings") {
  PartialAction a = example_action("non-galois-global");
  Globalization glob = globalize(a);
  auto bad = glob.embed;
  // Swap two image indices at the first object with a full support.
  for (auto& [e, v] : bad) {
    std::vector<int> on;
    for (int i = 0; i < static_cast<int>(v.size()); ++i) {
      if (v[i] >= 0) on.push_back(i);
    }
    if (on.size() >= 2) {
      std::swap(v[on[0]], v[on[1]]);
      break;
    }
  }
  auto rep = verify_globalization(a, glob.action, bad);
  CHECK(!rep.all());
  CHECK(!rep.failures.empty());
}

TEST_CASE("standard restriction") {
  PartialAction s8 = example_action("s8-example");
  PartialAction r = standard_restriction(s8, {0, 1, 2, 3, 4, 5});
  auto G = r.groupoid();
  Morph f1 = *G->by_label("(f1,f1,1)");
  Morph f2 = *G->by_label("(f2,f2,1)");
  CHECK(r.support(f1) == std::vector<int>{0, 1, 2, 3, 4, 5});
  CHECK(r.support(f2) == std::vector<int>{4, 5});
  // g in the Klein part swaps 1<->2 and 3<->4 etc.; restricted to the kept
  // ideal its support shrinks accordingly.
  Morph g11 = *G->by_label("(f1,f1,g)");
  CHECK(r.support(g11) == std::vector<int>{0, 1, 2, 3, 4, 5});
  CHECK(r.pi(g11, 0) == 1);

  CHECK_THROWS_AS(standard_restriction(s8, {-1, 2}), PreconditionError);
  CHECK_THROWS_AS(standard_restriction(r, {0, 1}), PreconditionError);  // not global
}
