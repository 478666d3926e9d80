#include "grpd/correspondence.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"

namespace grpd {

namespace {

void require_galois(const PartialAction& a) {
  auto gal = is_galois(a);
  if (!gal.galois) {
    throw PreconditionError("NotGalois",
                            "obstruction at " + a.groupoid()->label(gal.obstruction->g) +
                                ", index " + std::to_string(gal.obstruction->index + 1));
  }
}

void require_full_supports(const PartialAction& a) {
  if (a.has_empty_support()) {
    throw PreconditionError("EmptySupport", "some morphism acts on the zero ideal");
  }
}

}  // namespace

std::string subgroupoid_name(const WideSubgroupoid& h) {
  const FiniteGroupoid& G = *h.parent;
  std::string extra;
  for (Morph g : h.members) {
    if (G.is_identity(g)) continue;
    if (!extra.empty()) extra += ",";
    extra += G.label(g);
  }
  return extra.empty() ? "G0" : "G0 u {" + extra + "}";
}

CorrespondenceTable run_orthogonal_correspondence(const PartialAction& a) {
  if (!predicates(a).orthogonal) {
    throw PreconditionError("NotOrthogonal", "identity supports overlap");
  }
  require_full_supports(a);
  require_galois(a);

  CorrespondenceTable t{"orthogonal", {}};
  auto base = full_invariants(a);
  std::set<std::vector<std::vector<int>>> seen;
  for (const auto& h : enumerate_wide_subgroupoids(a.groupoid())) {
    CorrespondenceRow row;
    row.h = h;
    row.c = invariants(a, h);
    row.separable = separability_witness(row.c, base).verified;
    row.alpha_strong = is_alpha_strong(a, row.c).strong;
    row.stabilizer_equals_h = stabilizer(a, row.c).members == h.members;
    if (!row.separable || !row.alpha_strong || !row.stabilizer_equals_h) {
      throw TheoremViolation("row check failed at " + subgroupoid_name(h) +
                             (row.separable ? "" : " [separable]") +
                             (row.alpha_strong ? "" : " [alpha-strong]") +
                             (row.stabilizer_equals_h ? "" : " [stabilizer]"));
    }
    if (!seen.insert(row.c.blocks).second) {
      throw TheoremViolation("invariants map not injective at " + subgroupoid_name(h));
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

StronglyGaloisResult is_strongly_galois(const PartialAction& a) {
  StronglyGaloisResult out;
  for (Morph e : a.groupoid()->objects()) {
    if (a.support(e).empty()) {
      out.reason = "zero ideal at object " + a.groupoid()->label(e);
      return out;
    }
  }
  if (!is_galois(a).galois) {
    out.reason = "not Galois";
    return out;
  }
  auto orth = orthogonalize(a);
  auto ws = enumerate_wide_subgroupoids(a.groupoid());
  std::vector<std::vector<std::vector<int>>> traces;
  traces.reserve(ws.size());
  for (size_t j = 0; j < ws.size(); ++j) {
    auto trace =
        partition_meet_as_intersection(invariants(orth.action, ws[j].members), orth.phi_of_a);
    for (size_t i = 0; i < j; ++i) {
      if (traces[i] == trace.blocks) {
        out.reason = "equal traces for " + subgroupoid_name(ws[i]) + " and " +
                     subgroupoid_name(ws[j]);
        out.collision = std::make_pair(ws[i], ws[j]);
        return out;
      }
    }
    traces.push_back(trace.blocks);
  }
  out.strongly = true;
  return out;
}

CorrespondenceTable run_strong_correspondence(const PartialAction& a) {
  auto sg = is_strongly_galois(a);
  if (!sg.strongly) throw PreconditionError("NotStronglyGalois", sg.reason);

  auto orth = orthogonalize(a);
  auto base = full_invariants(a);
  CorrespondenceTable t{"strong", {}};
  std::set<std::vector<std::vector<int>>> seen;
  for (const auto& h : enumerate_wide_subgroupoids(a.groupoid())) {
    auto trace =
        partition_meet_as_intersection(invariants(orth.action, h.members), orth.phi_of_a);
    auto inv_h = invariants(a, h);
    if (!(orth.embed_partition(inv_h) == trace)) {
      throw TheoremViolation("trace of invariants mismatch at " + subgroupoid_name(h));
    }
    CorrespondenceRow row;
    row.h = h;
    row.c = orth.pullback_partition(trace);
    if (!(row.c == inv_h)) {
      throw TheoremViolation("pulled-back trace is not the invariant subring at " +
                             subgroupoid_name(h));
    }
    row.separable = separability_witness(row.c, base).verified;
    row.alpha_strong = is_alpha_strong(a, row.c).strong;
    row.stabilizer_equals_h =
        stabilizer(orth.action, orth.embed_partition(row.c)).members == h.members;
    if (!row.stabilizer_equals_h) {
      throw TheoremViolation("inverse direction failed at " + subgroupoid_name(h));
    }
    if (!seen.insert(row.c.blocks).second) {
      throw TheoremViolation("correspondence not injective at " + subgroupoid_name(h));
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

SimClasses sim_classes(const PartialAction& beta) {
  if (!predicates(beta).global) {
    throw PreconditionError("NotGlobal", "similarity classes need a global action");
  }
  SimClasses sc;
  sc.w = enumerate_wide_subgroupoids(beta.groupoid());
  sc.inv.reserve(sc.w.size());
  for (const auto& h : sc.w) sc.inv.push_back(invariants(beta, h));
  for (size_t i = 0; i < sc.w.size(); ++i) {
    bool placed = false;
    for (auto& cls : sc.classes) {
      if (sc.inv[cls[0]] == sc.inv[i]) {
        cls.push_back(static_cast<int>(i));
        placed = true;
        break;
      }
    }
    if (!placed) sc.classes.push_back({static_cast<int>(i)});
  }
  for (const auto& cls : sc.classes) {
    std::vector<Morph> seed;
    for (int i : cls) {
      seed.insert(seed.end(), sc.w[i].members.begin(), sc.w[i].members.end());
    }
    auto join = generated_wide_subgroupoid(beta.groupoid(), seed);
    if (!(invariants(beta, join) == sc.inv[cls[0]])) {
      throw TheoremViolation("join of a similarity class left the class at " +
                             subgroupoid_name(join));
    }
    for (int i : cls) {
      if (!std::includes(join.members.begin(), join.members.end(), sc.w[i].members.begin(),
                         sc.w[i].members.end())) {
        throw TheoremViolation("class join does not contain " + subgroupoid_name(sc.w[i]));
      }
    }
    auto it = std::find(sc.w.begin(), sc.w.end(), join);
    if (it == sc.w.end()) throw TheoremViolation("class join missing from the enumeration");
    sc.max_of_class.push_back(static_cast<int>(it - sc.w.begin()));
  }
  return sc;
}

CorrespondenceTable run_global_correspondence(const PartialAction& beta) {
  if (!predicates(beta).global) {
    throw PreconditionError("NotGlobal", "global correspondence needs a global action");
  }
  require_full_supports(beta);
  require_galois(beta);

  auto sc = sim_classes(beta);
  auto orth = orthogonalize(beta);
  auto base = full_invariants(beta);
  CorrespondenceTable t{"global", {}};
  std::set<std::vector<std::vector<int>>> seen;
  for (size_t k = 0; k < sc.classes.size(); ++k) {
    int mx = sc.max_of_class[k];
    CorrespondenceRow row;
    row.h = sc.w[mx];
    row.c = sc.inv[mx];
    row.separable = separability_witness(row.c, base).verified;
    row.alpha_strong = is_alpha_strong(beta, row.c).strong;

    auto stab = stabilizer(orth.action, orth.embed_partition(row.c));
    row.stabilizer_needed_closure = !stab.is_wide;
    WideSubgroupoid hc = stab.is_wide
                             ? WideSubgroupoid{beta.groupoid(), stab.members}
                             : generated_wide_subgroupoid(beta.groupoid(), stab.members);
    auto it = std::find(sc.w.begin(), sc.w.end(), hc);
    if (it == sc.w.end()) throw TheoremViolation("stabilizer closure missing from enumeration");
    int idx = static_cast<int>(it - sc.w.begin());
    int back = -1;
    for (size_t c2 = 0; c2 < sc.classes.size(); ++c2) {
      if (std::find(sc.classes[c2].begin(), sc.classes[c2].end(), idx) != sc.classes[c2].end()) {
        back = sc.max_of_class[c2];
        break;
      }
    }
    row.stabilizer_equals_h = (back == mx);
    if (!row.stabilizer_equals_h) {
      throw TheoremViolation("maximalized stabilizer is not the row subgroupoid at " +
                             subgroupoid_name(row.h));
    }
    if (!seen.insert(row.c.blocks).second) {
      throw TheoremViolation("global correspondence not injective at " + subgroupoid_name(row.h));
    }
    t.rows.push_back(std::move(row));
  }
  // Canonical row order: by subgroupoid size then members.
  std::sort(t.rows.begin(), t.rows.end(), [](const CorrespondenceRow& x, const CorrespondenceRow& y) {
    if (x.h.members.size() != y.h.members.size()) return x.h.members.size() < y.h.members.size();
    return x.h.members < y.h.members;
  });
  return t;
}

std::string render_table(const CorrespondenceTable& t, const std::string& format) {
  if (format == "text") {
    std::string out;
    for (const auto& row : t.rows) {
      std::string c = bracket_render(row.c);
      out += subgroupoid_name(row.h) + " -> " + (c.empty() ? "A" : c) + "\n";
    }
    return out;
  }
  if (format != "json") throw PreconditionError("BadArgument", "format must be text or json");
  nlohmann::ordered_json j;
  j["mode"] = t.mode;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json r;
    r["subgroupoid"] = nlohmann::ordered_json::array();
    for (Morph g : row.h.members) r["subgroupoid"].push_back(row.h.parent->label(g));
    r["invariants"] = nlohmann::ordered_json::array();
    for (const auto& b : row.c.blocks) {
      nlohmann::ordered_json blk = nlohmann::ordered_json::array();
      for (int i : b) blk.push_back(i + 1);
      r["invariants"].push_back(blk);
    }
    r["flags"] = {{"separable", row.separable},
                  {"alpha_strong", row.alpha_strong},
                  {"stabilizer_equals_h", row.stabilizer_equals_h},
                  {"stabilizer_needed_closure", row.stabilizer_needed_closure}};
    j["rows"].push_back(std::move(r));
  }
  return j.dump(2) + "\n";
}

}  // namespace grpd
