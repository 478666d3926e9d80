#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "grpd/constructions.hpp"
#include "grpd/correspondence.hpp"
#include "grpd/galois.hpp"
#include "grpd/io.hpp"
#include "../tests/properties.hpp"

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw grpd::ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw grpd::ParseError(e.what());
  }
}

grpd::PartialAction load_action(const std::string& path) {
  return grpd::action_from_json(parse_json(slurp(path)));
}

grpd::WideSubgroupoid subgroupoid_from_labels(const grpd::PartialAction& a,
                                              const std::string& csv) {
  const grpd::FiniteGroupoid& g = *a.groupoid();
  std::vector<grpd::Morph> members(g.objects().begin(), g.objects().end());
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.empty()) continue;
    auto m = g.by_label(item);
    if (!m) throw grpd::ParseError("unknown morphism label '" + item + "'");
    members.push_back(*m);
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (!grpd::is_wide_subgroupoid(g, members)) {
    throw grpd::PreconditionError("NotWide", "the listed morphisms do not generate a closed set");
  }
  return grpd::WideSubgroupoid{a.groupoid(), std::move(members)};
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Exact engine for partial groupoid actions and their Galois correspondences"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string base = "Q";
  std::string format = "text";

  auto* validate = app.add_subcommand("validate", "Validate an action file");
  validate->add_option("input", input);

  auto* example = app.add_subcommand("example", "Print a built-in example action");
  std::string example_name;
  example->add_option("name", example_name)->required();
  example->add_option("--base", base);

  auto* make = app.add_subcommand("make-groupoid", "Build a groupoid and print it");
  int coarse_n = 0, cyclic_k = 0;
  bool klein = false;
  make->add_option("--coarse", coarse_n);
  make->add_option("--cyclic", cyclic_k);
  make->add_flag("--klein", klein);

  auto* galois = app.add_subcommand("galois-check", "Galois decision with witness");
  galois->add_option("input", input);

  auto* inv = app.add_subcommand("invariants", "Invariant subring of a restriction");
  std::string subgroupoid_csv;
  inv->add_option("input", input);
  inv->add_option("--subgroupoid", subgroupoid_csv)
      ->description("semicolon-separated non-identity morphism labels");

  auto* stab = app.add_subcommand("stabilizer", "Stabilizer of a partition subalgebra");
  std::string brackets;
  stab->add_option("input", input);
  stab->add_option("--subalgebra", brackets)->required();

  auto* strong = app.add_subcommand("strong-check", "Alpha-strong decision");
  strong->add_option("input", input);
  strong->add_option("--subalgebra", brackets)->required();

  auto* enumerate = app.add_subcommand("enumerate-subgroupoids", "All wide subgroupoids");
  enumerate->add_option("input", input);

  auto* orth = app.add_subcommand("orthogonalize", "Orthogonalization as an action file");
  orth->add_option("input", input);

  auto* glob = app.add_subcommand("globalize", "Globalization as an action file");
  glob->add_option("input", input);

  auto* corr = app.add_subcommand("correspondence", "Run a correspondence table");
  std::string mode = "orthogonal", golden;
  corr->add_option("input", input);
  corr->add_option("--mode", mode)->check(CLI::IsMember({"orthogonal", "strong", "global"}));
  corr->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  corr->add_option("--golden", golden);

  auto* fuzz = app.add_subcommand("fuzz", "Run the seeded property suites");
  std::uint64_t seed = 1;
  int count = 50;
  std::string suite = "both";
  fuzz->add_option("--seed", seed);
  fuzz->add_option("--count", count);
  fuzz->add_option("--suite", suite)->check(CLI::IsMember({"oracle", "theorem", "both"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  auto parse_base = [&]() {
    auto b = grpd::BaseRing::parse(base);
    if (!b) throw grpd::ParseError("bad base ring '" + base + "'");
    return *b;
  };

  if (validate->parsed()) {
    auto a = load_action(input);
    ordered_json out{{"valid", true}, {"m", a.m()}, {"morphisms", a.groupoid()->size()}};
    auto p = grpd::predicates(a);
    out["orthogonal"] = p.orthogonal;
    out["global"] = p.global;
    std::cout << out.dump(2) << "\n";
  } else if (example->parsed()) {
    std::cout << grpd::action_to_json(grpd::example_action(example_name, parse_base())).dump(2)
              << "\n";
  } else if (make->parsed()) {
    std::vector<grpd::FiniteGroupoid> factors;
    if (coarse_n > 0) factors.push_back(grpd::coarse_groupoid(coarse_n));
    if (cyclic_k > 0) factors.push_back(grpd::cyclic_group(cyclic_k));
    if (klein) factors.push_back(grpd::klein_four_group());
    if (factors.empty()) throw grpd::PreconditionError("BadArgument", "no factors requested");
    grpd::FiniteGroupoid g = factors[0];
    for (size_t i = 1; i < factors.size(); ++i) g = grpd::direct_product(g, factors[i]);
    std::cout << grpd::groupoid_to_json(g).dump(2) << "\n";
  } else if (galois->parsed()) {
    auto a = load_action(input);
    auto res = grpd::is_galois(a);
    ordered_json out{{"galois", res.galois}};
    if (res.galois) {
      out["witness"] = "x_i = y_i = e_i";
    } else {
      out["obstruction"] = {{"g", a.groupoid()->label(res.obstruction->g)},
                            {"index", res.obstruction->index + 1}};
    }
    std::cout << out.dump(2) << "\n";
  } else if (inv->parsed()) {
    auto a = load_action(input);
    auto h = subgroupoid_from_labels(a, subgroupoid_csv);
    auto c = grpd::invariants(a, h);
    std::string b = grpd::bracket_render(c);
    std::cout << (b.empty() ? "A" : b) << "\n";
  } else if (stab->parsed() || strong->parsed()) {
    auto a = load_action(input);
    auto c = grpd::bracket_parse(brackets, a.algebra());
    if (stab->parsed()) {
      auto s = grpd::stabilizer(a, c);
      ordered_json out;
      out["members"] = ordered_json::array();
      for (grpd::Morph g : s.members) out["members"].push_back(a.groupoid()->label(g));
      out["is_wide_subgroupoid"] = s.is_wide;
      std::cout << out.dump(2) << "\n";
    } else {
      auto r = grpd::is_alpha_strong(a, c);
      ordered_json out{{"alpha_strong", r.strong}};
      if (!r.strong) {
        out["witness"] = {{"g", a.groupoid()->label((*r.witness)[0])},
                          {"h", a.groupoid()->label((*r.witness)[1])},
                          {"index", (*r.witness)[2] + 1}};
      }
      std::cout << out.dump(2) << "\n";
    }
  } else if (enumerate->parsed()) {
    auto a = load_action(input);
    for (const auto& h : grpd::enumerate_wide_subgroupoids(a.groupoid())) {
      std::cout << grpd::subgroupoid_name(h) << "\n";
    }
  } else if (orth->parsed()) {
    auto a = load_action(input);
    std::cout << grpd::action_to_json(grpd::orthogonalize(a).action).dump(2) << "\n";
  } else if (glob->parsed()) {
    auto a = load_action(input);
    std::cout << grpd::action_to_json(grpd::globalize(a).action).dump(2) << "\n";
  } else if (corr->parsed()) {
    auto a = load_action(input);
    grpd::CorrespondenceTable t;
    if (mode == "orthogonal") t = grpd::run_orthogonal_correspondence(a);
    if (mode == "strong") t = grpd::run_strong_correspondence(a);
    if (mode == "global") t = grpd::run_global_correspondence(a);
    std::string rendered = grpd::render_table(t, format);
    std::cout << rendered;
    if (!golden.empty()) {
      std::string expect = slurp(golden);
      // Normalize CRLF; outputs are already LF.
      expect.erase(std::remove(expect.begin(), expect.end(), '\r'), expect.end());
      if (expect != rendered) {
        throw grpd::TheoremViolation("output differs from golden file " + golden);
      }
    }
  } else if (fuzz->parsed()) {
    ordered_json out;
    bool clean = true;
    auto emit = [&](const char* name, const grpd::props::Report& r) {
      out[name] = {{"instances", r.instances}, {"failures", r.failures}};
      clean = clean && r.ok();
    };
    if (suite != "theorem") emit("oracle", grpd::props::run_oracle_suite(seed, count));
    if (suite != "oracle") emit("theorem", grpd::props::run_theorem_suite(seed, count));
    std::cout << out.dump(2) << "\n";
    if (!clean) throw grpd::TheoremViolation("property suite reported failures");
  }
  return 0;
}

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const grpd::TheoremViolation& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const grpd::GlobalizationVerificationFailed& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const grpd::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 4;
  } catch (const grpd::PreconditionError& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const grpd::CapExceeded& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
}
