// Command-line surface: enumeration, projections, fiber analysis, cube
// embeddings, chart evaluation, stratum identification and the verification
// suites. JSON on stdout for machine consumption, DOT only for Hasse
// diagrams; diagnostics go to stderr. Exit codes: 0 success, 1 domain
// failure, 2 usage.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <iostream>

#include "polyfaces/charts.hpp"
#include "polyfaces/homology.hpp"
#include "polyfaces/posets.hpp"
#include "polyfaces/strata.hpp"
#include "polyfaces/topology.hpp"
#include "polyfaces/tree_functors.hpp"
#include "polyfaces/verify.hpp"
#include "polyfaces/words.hpp"

using namespace polyfaces;

namespace {

int tree_cap(int max_n_flag) {
  if (max_n_flag > 0) return max_n_flag;
  if (const char* env = std::getenv("POLYFACES_MAX_N")) return std::atoi(env);
  return kDefaultTreeCap;
}

int leveled_cap(int max_n_flag) {
  if (max_n_flag > 0) return max_n_flag;
  if (const char* env = std::getenv("POLYFACES_MAX_N")) return std::atoi(env);
  return kDefaultLeveledCap;
}

void warn_if_over_default(int n, int def) {
  if (n > def)
    std::cerr << "warning: n = " << n << " exceeds the default cap " << def
              << "; expect combinatorial growth\n";
}

nlohmann::json contractibility_json(const FinitePoset& p) {
  auto k = order_complex(p);
  auto rep = contractibility(k);
  return nlohmann::json{{"betti_Q", homology_ranks(k, Coeffs::rationals)},
                        {"betti_F2", homology_ranks(k, Coeffs::f2)},
                        {"collapsible", rep.collapsible()}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"face posets, fibers and charts of the associahedron, cyclohedron and permutohedron"};
  app.require_subcommand(1);

  // enumerate
  std::string species_name_arg = "psi", format = "count";
  int n = 0, max_n = -1;
  auto* enumerate = app.add_subcommand("enumerate", "list faces of one of the three polytopes");
  enumerate->add_option("--species", species_name_arg, "psi|phi|psi-level|phi-level")->required();
  enumerate->add_option("--n", n, "dimension parameter")->required();
  enumerate->add_option("--format", format, "count|json|dot");
  enumerate->add_option("--max-n", max_n, "override the enumeration cap");

  // project
  std::string functor_name, input_tree;
  auto* project = app.add_subcommand("project", "apply a face projection to one tree");
  project->add_option("--functor", functor_name, "pi|pi-prime|pi-double-prime")->required();
  project->add_option("--input", input_tree, "tree text")->required();

  // fiber
  std::string over_tree, geq_fan;
  bool with_homology = false;
  auto* fiber = app.add_subcommand("fiber", "fiber of the trunk projection over a tree");
  fiber->add_option("--over", over_tree, "planar tree text")->required();
  fiber->add_option("--geq", geq_fan, "restrict to fans above this fan");
  fiber->add_flag("--homology", with_homology, "attach Betti numbers and a collapse flag");
  fiber->add_option("--max-n", max_n, "override the enumeration cap");

  // cofinal
  auto* cofinal = app.add_subcommand("cofinal", "per-target contractibility report of a projection");
  cofinal->add_option("--functor", functor_name, "pi|pi-prime|pi-double-prime")->required();
  cofinal->add_option("--n", n, "dimension parameter")->required();
  cofinal->add_option("--max-n", max_n, "override the enumeration cap");

  // cube-embed
  std::string word_text;
  auto* cube_embed = app.add_subcommand("cube-embed", "half-integer embedding of a fiber word");
  cube_embed->add_option("--word", word_text, "word over a, b, (ab)")->required();

  // chart
  std::string kind = "alpha", config_text;
  auto* chart = app.add_subcommand("chart", "evaluate a compactification chart");
  chart->add_option("--kind", kind, "alpha|beta|gamma|delta")->required();
  chart->add_option("--config", config_text, "comma-separated rationals 0 < t_1 < ... < t_n < 1")
      ->required();

  // stratum
  std::string path_text, space_name = "assoc";
  auto* stratum = app.add_subcommand("stratum", "identify the boundary face of a degenerating path");
  stratum->add_option("--path", path_text, "comma-separated Laurent polynomials in e")->required();
  stratum->add_option("--space", space_name, "assoc|cycl|perm")->required();

  // verify
  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "run the acceptance suites");
  verify->add_option("--suite", suite, "all|posets|fibers|charts");

  CLI11_PARSE(app, argc, argv);

  try {
    if (enumerate->parsed()) {
      Species sp = parse_species(species_name_arg);
      bool leveled = sp == Species::psi_level || sp == Species::phi_level;
      int cap = leveled ? leveled_cap(max_n) : tree_cap(max_n);
      warn_if_over_default(n, leveled ? kDefaultLeveledCap : kDefaultTreeCap);
      if (format == "count") {
        std::cout << enumerate_texts(sp, n, cap).size() << "\n";
      } else if (format == "json") {
        auto p = leveled ? face_poset(sp, n, kDefaultTreeCap, cap) : face_poset(sp, n, cap);
        std::cout << p.to_json().dump() << "\n";
      } else if (format == "dot") {
        auto p = leveled ? face_poset(sp, n, kDefaultTreeCap, cap) : face_poset(sp, n, cap);
        std::cout << p.hasse_dot();
      } else {
        std::cerr << "unknown format: " << format << "\n";
        return 2;
      }
      return 0;
    }

    if (project->parsed()) {
      AnyTree t = parse_tree(input_tree);
      std::string out;
      if (functor_name == "pi") {
        out = pi(std::get<Fan>(t)).text();
      } else if (functor_name == "pi-prime") {
        out = forget_levels(std::get<LeveledFan>(t)).text();
      } else if (functor_name == "pi-double-prime") {
        if (std::holds_alternative<LeveledPlanarTree>(t))
          out = forget_levels(std::get<LeveledPlanarTree>(t)).text();
        else  // a leveled fan routes through the composite projection
          out = pi(forget_levels(std::get<LeveledFan>(t))).text();
      } else {
        std::cerr << "unknown functor: " << functor_name << "\n";
        return 2;
      }
      std::cout << out << "\n";
      return 0;
    }

    if (fiber->parsed()) {
      auto t = parse_planar_tree(over_tree);
      int cap = tree_cap(max_n);
      FinitePoset p = geq_fan.empty() ? fiber_poset(t, cap)
                                      : fiber_geq_poset(t, parse_fan(geq_fan), cap);
      auto j = p.to_json();
      if (with_homology) j["contractibility"] = contractibility_json(p);
      std::cout << j.dump() << "\n";
      return 0;
    }

    if (cofinal->parsed()) {
      warn_if_over_default(n, functor_name == "pi" ? kDefaultTreeCap : kDefaultLeveledCap);
      Functor f = functor_name == "pi"             ? pi_functor(n, tree_cap(max_n))
                  : functor_name == "pi-prime"     ? pi_prime_functor(n, leveled_cap(max_n))
                  : functor_name == "pi-double-prime"
                      ? pi_double_prime_functor(n, leveled_cap(max_n))
                      : throw PreconditionError("unknown functor: " + functor_name);
      auto rep = cofinality_report(f.map);
      std::cout << rep.to_json().dump() << "\n";
      return rep.all_acyclic ? 0 : 1;
    }

    if (cube_embed->parsed()) {
      std::cout << f_embed_text(Word::parse(word_text)) << "\n";
      return 0;
    }

    if (chart->parsed()) {
      auto c = Configuration::parse(config_text);
      nlohmann::json j;
      if (kind == "alpha")
        j = chart_alpha(c).to_json();
      else if (kind == "beta")
        j = chart_beta(c).to_json();
      else if (kind == "gamma")
        j = chart_gamma(c).to_json();
      else if (kind == "delta")
        j = chart_delta(c).to_json();
      else {
        std::cerr << "unknown chart kind: " << kind << "\n";
        return 2;
      }
      std::cout << j.dump() << "\n";
      return 0;
    }

    if (stratum->parsed()) {
      auto p = EpsilonPath::parse(path_text);
      auto face = identify_stratum(p, parse_stratum_space(space_name));
      std::cout << format_tree(face) << "\n";
      return 0;
    }

    if (verify->parsed()) {
      auto results = run_acceptance_suite(suite);
      bool ok = report_acceptance(results, std::cout);
      return ok ? 0 : 1;
    }
  } catch (const ParseError& e) {
    std::cerr << nlohmann::json{{"error", "parse"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  } catch (const InvariantError& e) {
    std::cerr << nlohmann::json{{"error", "invariant"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  } catch (const CapError& e) {
    std::cerr << nlohmann::json{{"error", "cap"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  } catch (const PreconditionError& e) {
    std::cerr << nlohmann::json{{"error", "precondition"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  } catch (const std::bad_variant_access&) {
    std::cerr << nlohmann::json{{"error", "precondition"},
                                {"message", "input tree has the wrong species for this functor"}}
                     .dump()
              << "\n";
    return 1;
  }
  return 2;
}
