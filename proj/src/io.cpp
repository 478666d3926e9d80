#include "grpd/io.hpp"

#include <algorithm>

#include "grpd/constructions.hpp"

namespace grpd {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string need_string(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string()) {
    throw ParseError(std::string("expected string field '") + key + "'");
  }
  return j[key].get<std::string>();
}

const json& need_field(const json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j[key];
}

}  // namespace

ordered_json groupoid_to_json(const FiniteGroupoid& g) {
  ordered_json j;
  j["morphisms"] = ordered_json::array();
  for (int i = 0; i < g.size(); ++i) j["morphisms"].push_back(g.label(i));
  j["identities"] = ordered_json::array();
  for (Morph e : g.objects()) j["identities"].push_back(g.label(e));
  j["inverse"] = ordered_json::object();
  for (int i = 0; i < g.size(); ++i) j["inverse"][g.label(i)] = g.label(g.inverse(i));
  j["compose"] = ordered_json::array();
  for (int a = 0; a < g.size(); ++a) {
    for (int b = 0; b < g.size(); ++b) {
      if (g.composable(a, b)) {
        j["compose"].push_back({g.label(a), g.label(b), g.label(g.compose(a, b))});
      }
    }
  }
  return j;
}

GroupoidPtr groupoid_from_json(const json& j) {
  const json& morphs = need_field(j, "morphisms");
  if (!morphs.is_array() || morphs.empty()) throw ParseError("'morphisms' must be a nonempty array");
  GroupoidTable t;
  for (const auto& m : morphs) {
    if (!m.is_string()) throw ParseError("morphism labels must be strings");
    t.labels.push_back(m.get<std::string>());
  }
  auto index_of = [&](const std::string& s) {
    auto it = std::find(t.labels.begin(), t.labels.end(), s);
    if (it == t.labels.end()) throw ParseError("unknown morphism label '" + s + "'");
    return static_cast<int>(it - t.labels.begin());
  };
  const int n = static_cast<int>(t.labels.size());
  for (const auto& e : need_field(j, "identities")) {
    if (!e.is_string()) throw ParseError("identity labels must be strings");
    t.identities.push_back(index_of(e.get<std::string>()));
  }
  t.inverse.assign(n, -1);
  const json& inv = need_field(j, "inverse");
  if (!inv.is_object()) throw ParseError("'inverse' must be an object");
  for (auto it = inv.begin(); it != inv.end(); ++it) {
    if (!it.value().is_string()) throw ParseError("inverse values must be strings");
    t.inverse[index_of(it.key())] = index_of(it.value().get<std::string>());
  }
  t.compose.assign(n, std::vector<int>(n, -1));
  for (const auto& triple : need_field(j, "compose")) {
    if (!triple.is_array() || triple.size() != 3) {
      throw ParseError("'compose' entries must be [left, right, result] triples");
    }
    int a = index_of(triple[0].get<std::string>());
    int b = index_of(triple[1].get<std::string>());
    t.compose[a][b] = index_of(triple[2].get<std::string>());
  }
  auto checked = FiniteGroupoid::validate(t);
  if (!checked.ok()) {
    throw ParseError("groupoid does not validate: " + join_violations(checked.violations));
  }
  return std::make_shared<const FiniteGroupoid>(*checked.value);
}

ordered_json action_to_json(const PartialAction& a) {
  ordered_json j;
  j["groupoid"] = groupoid_to_json(*a.groupoid());
  j["base"] = a.algebra()->base.str();
  j["m"] = a.m();
  j["support"] = ordered_json::object();
  j["perm"] = ordered_json::object();
  const FiniteGroupoid& G = *a.groupoid();
  for (int g = 0; g < G.size(); ++g) {
    ordered_json s = ordered_json::array();
    for (int i : a.support(g)) s.push_back(i + 1);
    j["support"][G.label(g)] = std::move(s);
    ordered_json p = ordered_json::array();
    for (int i : a.support(G.inverse(g))) p.push_back({i + 1, a.pi(g, i) + 1});
    j["perm"][G.label(g)] = std::move(p);
  }
  return j;
}

PartialAction action_from_json(const json& j) {
  ActionData d;
  d.groupoid = groupoid_from_json(need_field(j, "groupoid"));
  auto base = BaseRing::parse(need_string(j, "base"));
  if (!base) throw ParseError("bad base ring '" + need_string(j, "base") + "'");
  const json& mj = need_field(j, "m");
  if (!mj.is_number_integer() || mj.get<int>() < 1) throw ParseError("'m' must be a positive integer");
  const int m = mj.get<int>();
  d.algebra = make_algebra(*base, m);

  const FiniteGroupoid& G = *d.groupoid;
  d.support.assign(G.size(), {});
  d.perm.assign(G.size(), std::vector<int>(m, -1));
  auto check_index = [m](int i) {
    if (i < 1 || i > m) throw ParseError("index " + std::to_string(i) + " out of range");
    return i - 1;
  };
  const json& sup = need_field(j, "support");
  for (auto it = sup.begin(); it != sup.end(); ++it) {
    auto g = G.by_label(it.key());
    if (!g) throw ParseError("unknown morphism '" + it.key() + "' in support");
    for (const auto& i : it.value()) d.support[*g].push_back(check_index(i.get<int>()));
    std::sort(d.support[*g].begin(), d.support[*g].end());
  }
  const json& perm = need_field(j, "perm");
  for (auto it = perm.begin(); it != perm.end(); ++it) {
    auto g = G.by_label(it.key());
    if (!g) throw ParseError("unknown morphism '" + it.key() + "' in perm");
    for (const auto& pair : it.value()) {
      if (!pair.is_array() || pair.size() != 2) throw ParseError("perm entries must be [from, to]");
      d.perm[*g][check_index(pair[0].get<int>())] = check_index(pair[1].get<int>());
    }
  }
  auto checked = PartialAction::validate(std::move(d));
  if (!checked.ok()) {
    throw ParseError("action does not validate: " + join_violations(checked.violations));
  }
  return *checked.value;
}

namespace {

// Two objects f1 -> f2 joined by g; the four-morphism connected groupoid with
// trivial isotropy plus inverses.
GroupoidPtr two_object_arrow() {
  GroupoidTable t;
  t.labels = {"f1", "f2", "g", "g^-1"};
  t.inverse = {0, 1, 3, 2};
  t.identities = {0, 1};
  t.compose.assign(4, std::vector<int>(4, -1));
  t.compose[0][0] = 0;
  t.compose[1][1] = 1;
  t.compose[2][0] = 2;  // g f1 = g
  t.compose[1][2] = 2;  // f2 g = g
  t.compose[3][1] = 3;  // g^-1 f2 = g^-1
  t.compose[0][3] = 3;  // f1 g^-1 = g^-1
  t.compose[3][2] = 0;  // g^-1 g = f1
  t.compose[2][3] = 1;  // g g^-1 = f2
  return std::make_shared<const FiniteGroupoid>(FiniteGroupoid::validate(t).get());
}

PartialAction non_galois_global(BaseRing base) {
  ActionData d;
  d.groupoid = two_object_arrow();
  d.algebra = make_algebra(base, 3);
  // Supports (0-based): A_{f1} = {0,1}, A_{f2} = {1,2}; beta_g: e1 -> e3,
  // e2 -> e2.
  d.support = {{0, 1}, {1, 2}, {1, 2}, {0, 1}};
  d.perm.assign(4, std::vector<int>(3, -1));
  d.perm[0][0] = 0;
  d.perm[0][1] = 1;
  d.perm[1][1] = 1;
  d.perm[1][2] = 2;
  d.perm[2][0] = 2;
  d.perm[2][1] = 1;
  d.perm[3][2] = 0;
  d.perm[3][1] = 1;
  return PartialAction::validate(std::move(d)).get();
}

// The Klein group inside Sym(8) acting on twelve idempotents over the coarse
// groupoid on two objects; supports overlap on indices 5..8 (1-based).
PartialAction s8_example(BaseRing base) {
  FiniteGroupoid G = direct_product(coarse_groupoid(2), klein_four_group());
  auto g = std::make_shared<const FiniteGroupoid>(std::move(G));

  // 1-based images of 1..8 under each group element.
  const std::vector<int> p_id = {1, 2, 3, 4, 5, 6, 7, 8};
  const std::vector<int> p_g = {2, 1, 4, 3, 6, 5, 8, 7};
  const std::vector<int> p_h = {3, 4, 1, 2, 7, 8, 5, 6};
  const std::vector<int> p_gh = {4, 3, 2, 1, 8, 7, 6, 5};
  auto part_of = [&](const std::string& label) -> const std::vector<int>& {
    // label "(fi,fj,x)": take the last component.
    auto comma = label.rfind(',');
    std::string x = label.substr(comma + 1, label.size() - comma - 2);
    if (x == "1") return p_id;
    if (x == "g") return p_g;
    if (x == "h") return p_h;
    return p_gh;
  };

  ActionData d;
  d.groupoid = g;
  d.algebra = make_algebra(base, 12);
  d.support.resize(g->size());
  d.perm.assign(g->size(), std::vector<int>(12, -1));
  auto f1 = *g->by_label("(f1,f1,1)");
  for (int k = 0; k < g->size(); ++k) {
    bool ran_f1 = (g->ran(k) == f1);
    for (int i = 0; i < 8; ++i) d.support[k].push_back(ran_f1 ? i : i + 4);
    const std::vector<int>& part = part_of(g->label(k));
    bool dom_f1 = (g->dom(k) == f1);
    for (int i = 1; i <= 8; ++i) {
      int from = dom_f1 ? i - 1 : i + 3;
      int to = ran_f1 ? part[i - 1] - 1 : part[i - 1] + 3;
      d.perm[k][from] = to;
    }
  }
  return PartialAction::validate(std::move(d)).get();
}

// Disjoint union of two copies of the order-two group, both swapping the same
// two idempotents.
PartialAction not_strongly_galois(BaseRing base) {
  std::vector<std::vector<int>> z2 = {{0, 1}, {1, 0}};
  FiniteGroupoid c1 = group_from_table({"f1", "g"}, z2);
  FiniteGroupoid c2 = group_from_table({"f2", "h"}, z2);
  auto g = std::make_shared<const FiniteGroupoid>(disjoint_union(c1, c2));
  ActionData d;
  d.groupoid = g;
  d.algebra = make_algebra(base, 2);
  d.support.assign(4, {0, 1});
  d.perm.assign(4, std::vector<int>(2, -1));
  for (int k = 0; k < 4; ++k) {
    bool swap = g->label(k) == "g" || g->label(k) == "h";
    d.perm[k][0] = swap ? 1 : 0;
    d.perm[k][1] = swap ? 0 : 1;
  }
  return PartialAction::validate(std::move(d)).get();
}

}  // namespace

std::vector<std::string> example_names() {
  return {"s8-example", "non-galois-global", "not-strongly-galois", "s8-orthogonalization"};
}

PartialAction example_action(const std::string& name, BaseRing base) {
  if (name == "s8-example") return s8_example(base);
  if (name == "non-galois-global") return non_galois_global(base);
  if (name == "not-strongly-galois") return not_strongly_galois(base);
  if (name == "s8-orthogonalization") return orthogonalize(s8_example(base)).action;
  throw PreconditionError("BadArgument", "unknown example '" + name + "'");
}

}  // namespace grpd
