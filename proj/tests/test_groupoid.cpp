#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "doctest.h"
#include "grpd/groupoid.hpp"
#include "grpd/subgroupoid.hpp"
#include "oracles.hpp"

using namespace grpd;

namespace {

GroupoidPtr s8_groupoid() {
  return std::make_shared<const FiniteGroupoid>(
      direct_product(coarse_groupoid(2), klein_four_group()));
}

std::vector<Morph> with_identities(const FiniteGroupoid& g, std::vector<std::string> labels) {
  std::vector<Morph> members(g.objects().begin(), g.objects().end());
  for (const auto& l : labels) members.push_back(*g.by_label(l));
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace

TEST_CASE("coarse groupoid composition") {
  FiniteGroupoid g = coarse_groupoid(2);
  CHECK(g.size() == 4);
  CHECK(g.objects().size() == 2);
  Morph a = *g.by_label("(f1,f2)");  // dom f1 -> ran f2
  Morph b = *g.by_label("(f2,f1)");
  CHECK(g.dom(a) == *g.by_label("(f1,f1)"));
  CHECK(g.ran(a) == *g.by_label("(f2,f2)"));
  CHECK(g.inverse(a) == b);
  CHECK(g.composable(a, b));
  CHECK(g.compose(a, b) == *g.by_label("(f2,f2)"));
  CHECK(!g.composable(a, a));

  CHECK(coarse_groupoid(1).size() == 1);
  CHECK_THROWS_AS(coarse_groupoid(0), PreconditionError);
}

TEST_CASE("validation catches broken tables") {
  GroupoidTable t = coarse_groupoid(2).table();
  t.inverse[1] = 1;  // break inverse pairing
  auto checked = FiniteGroupoid::validate(t);
  CHECK(!checked.ok());
  CHECK(!checked.violations.empty());
  CHECK_THROWS_AS(checked.get(), PreconditionError);
}

TEST_CASE("cyclic and Klein groups") {
  FiniteGroupoid c = cyclic_group(3);
  CHECK(c.size() == 3);
  Morph g = *c.by_label("g");
  CHECK(c.compose(g, g) == *c.by_label("g^2"));
  CHECK(c.compose(g, *c.by_label("g^2")) == *c.by_label("1"));
  CHECK(c.inverse(g) == *c.by_label("g^2"));

  FiniteGroupoid k = klein_four_group();
  CHECK(k.size() == 4);
  for (int i = 0; i < 4; ++i) CHECK(k.inverse(i) == i);
  CHECK(k.compose(*k.by_label("g"), *k.by_label("h")) == *k.by_label("gh"));
}

TEST_CASE("products, unions and connectivity") {
  auto G = s8_groupoid();
  CHECK(G->size() == 16);
  CHECK(G->objects().size() == 2);
  CHECK(is_connected(*G));
  CHECK(connected_components(*G).size() == 1);

  FiniteGroupoid u = disjoint_union(cyclic_group(2), cyclic_group(3));
  CHECK(u.size() == 5);
  CHECK(connected_components(u).size() == 2);
  CHECK(!is_connected(u));
}

TEST_CASE("isotropy and connected decomposition") {
  auto G = s8_groupoid();
  for (Morph e : G->objects()) {
    auto iso = isotropy_group(*G, e);
    CHECK(iso.group.size() == 4);
    for (Morph m : iso.members) {
      CHECK(G->dom(m) == e);
      CHECK(G->ran(m) == e);
    }
  }

  auto dec = connected_decomposition(*G);
  CHECK(dec.n == 2);
  CHECK(dec.isotropy.group.size() == 4);
  // to_triple and from_triple are mutually inverse and multiplicative.
  const int H = dec.isotropy.group.size();
  for (int g = 0; g < G->size(); ++g) {
    auto [i, j, k] = dec.to_triple[g];
    CHECK(dec.from_triple[(i * dec.n + j) * H + k] == g);
  }
  for (int g = 0; g < G->size(); ++g) {
    for (int h = 0; h < G->size(); ++h) {
      if (!G->composable(g, h)) continue;
      auto [i, j, k] = dec.to_triple[g];
      auto [l, i2, k2] = dec.to_triple[h];
      CHECK(i == i2);
      auto [li, lj, lk] = dec.to_triple[G->compose(g, h)];
      CHECK(li == l);
      CHECK(lj == j);
      CHECK(lk == dec.isotropy.group.compose(k, k2));
    }
  }
}

TEST_CASE("canonical enumerations satisfy the conjugation condition") {
  auto G = s8_groupoid();
  auto dec = connected_decomposition(*G);
  for (Morph e : G->objects()) {
    auto en = canonical_enumeration(*G, dec, e);
    CHECK(en.list.front() == e);
    CHECK(en.list.size() == 8);
    for (Morph g : en.list) CHECK(G->ran(g) == e);
  }
  CHECK(check_condition_superfluous(*G, canonical_family(*G)));

  auto small = std::make_shared<const FiniteGroupoid>(
      direct_product(coarse_groupoid(2), cyclic_group(2)));
  CHECK(check_condition_superfluous(*small, canonical_family(*small)));
}

TEST_CASE("adversarial enumerations of A2 x Z2 can violate the condition") {
  FiniteGroupoid g = direct_product(coarse_groupoid(2), cyclic_group(2));
  // All families: first entry is the identity, the remaining three entries of
  // G(-, e) in any order, independently per object.
  std::vector<std::vector<Morph>> rest(2);
  std::vector<Morph> objs = g.objects();
  for (int oi = 0; oi < 2; ++oi) {
    for (int m = 0; m < g.size(); ++m) {
      if (g.ran(m) == objs[oi] && m != objs[oi]) rest[oi].push_back(m);
    }
    std::sort(rest[oi].begin(), rest[oi].end());
  }
  int violating = 0, total = 0;
  auto r0 = rest[0];
  do {
    auto r1 = rest[1];
    do {
      EnumerationFamily fam;
      fam[objs[0]] = {objs[0]};
      fam[objs[0]].insert(fam[objs[0]].end(), r0.begin(), r0.end());
      fam[objs[1]] = {objs[1]};
      fam[objs[1]].insert(fam[objs[1]].end(), r1.begin(), r1.end());
      ++total;
      if (!check_condition_superfluous(g, fam)) ++violating;
    } while (std::next_permutation(r1.begin(), r1.end()));
  } while (std::next_permutation(r0.begin(), r0.end()));
  CHECK(total == 36);
  // The condition is not automatic: some alignments conjugate a non-identity
  // into the identities. The canonical family never does.
  CHECK(violating > 0);
  CHECK(violating < total);
}

TEST_CASE("generated wide subgroupoids") {
  auto G = s8_groupoid();
  auto g0 = generated_wide_subgroupoid(G, {});
  CHECK(g0.members == with_identities(*G, {}));

  auto h1 = generated_wide_subgroupoid(G, {*G->by_label("(f1,f1,g)"), *G->by_label("(f2,f2,g)")});
  CHECK(h1.members == with_identities(*G, {"(f1,f1,g)", "(f2,f2,g)"}));

  auto big = generated_wide_subgroupoid(
      G, {*G->by_label("(f1,f2,1)"), *G->by_label("(f2,f1,1)"), *G->by_label("(f1,f2,g)"),
          *G->by_label("(f2,f1,g)")});
  CHECK(big.members == with_identities(*G, {"(f1,f2,1)", "(f2,f1,1)", "(f1,f2,g)", "(f2,f1,g)",
                                            "(f1,f1,g)", "(f2,f2,g)"}));
  // Idempotent.
  CHECK(generated_wide_subgroupoid(G, big.members).members == big.members);
}

TEST_CASE("wide subgroupoid enumeration") {
  auto klein = std::make_shared<const FiniteGroupoid>(klein_four_group());
  auto ws = enumerate_wide_subgroupoids(klein);
  CHECK(ws.size() == 5);  // trivial, three Z2, full
  CHECK(ws.front().members.size() == 1);
  CHECK(ws.back().members.size() == 4);

  auto G = s8_groupoid();
  // 25 disconnected pairs of subgroups, plus the connected ones: a connected
  // wide subgroupoid has equal loop groups H at both objects and its cross
  // morphisms form one coset of H, so each subgroup H of Klein contributes
  // [K4 : H] of them: 4 + 3*2 + 1 = 11.
  CHECK(enumerate_wide_subgroupoids(G).size() == 36);

  for (const FiniteGroupoid& g :
       {coarse_groupoid(2), klein_four_group(),
        direct_product(coarse_groupoid(2), cyclic_group(2))}) {
    auto ptr = std::make_shared<const FiniteGroupoid>(g);
    auto fast = enumerate_wide_subgroupoids(ptr);
    auto brute = oracles::brute_force_wide_subgroupoids(*ptr);
    REQUIRE(fast.size() == brute.size());
    for (size_t i = 0; i < fast.size(); ++i) CHECK(fast[i].members == brute[i]);
  }
}

TEST_CASE("wide subgroupoid membership helpers") {
  auto G = s8_groupoid();
  auto ids = with_identities(*G, {});
  CHECK(is_wide_subgroupoid(*G, ids));
  auto bad = ids;
  bad.push_back(*G->by_label("(f1,f2,g)"));  // inverse missing
  std::sort(bad.begin(), bad.end());
  CHECK(!is_closed_subset(*G, bad));
  CHECK(!is_wide_subgroupoid(*G, bad));
}
