#include "weyldual/cli.hpp"

#include <CLI11.hpp>

#include "weyldual/dual.hpp"
#include "weyldual/errors.hpp"
#include "weyldual/recipe.hpp"
#include "weyldual/serialize.hpp"
#include "weyldual/verify.hpp"

namespace weyldual {

namespace {

struct Options {
  std::string recipe;
  std::string window;
  std::string mode;
  std::string out = "json";
  unsigned parallel = 1;
  bool koszul = false;
  std::string theorem = "all";
  bool all = false;
};

BuildOptions build_options(const Options& o, const Recipe& r) {
  BuildOptions b;
  if (!o.mode.empty()) b.mode = parse_grading_mode(o.mode);
  if (!o.window.empty()) {
    b.window = parse_window(o.window, recipe_spec(r, b).lattice_rank());
  }
  return b;
}

std::string presentation_text(const GradedPresentation& m) {
  std::ostringstream os;
  os << "grading " << to_string(m.spec().mode) << ", n = " << m.n() << ", box "
     << m.window().lo.str() << ".." << m.window().hi.str() << '\n';
  for (const auto& [a, k] : m.dims()) {
    if (k == 0) continue;
    os << "  " << a.str() << ": " << k;
    if (m.basis_names()) {
      auto it = m.basis_names()->find(a);
      if (it != m.basis_names()->end()) {
        os << "  [";
        for (std::size_t j = 0; j < it->second.size(); ++j) os << (j ? ", " : "") << it->second[j];
        os << ']';
      }
    }
    os << '\n';
  }
  const auto report = validate(m);
  os << "relations: " << report.checked << " checked, " << report.skipped << " skipped, "
     << report.violations.size() << " violated\n";
  return os.str();
}

void emit_presentation(const GradedPresentation& m, const Options& o, std::ostream& out) {
  if (o.out == "text") {
    out << presentation_text(m);
  } else if (o.out == "json") {
    out << presentation_to_json(m).dump(2) << '\n';
  } else {
    throw ParseError("presentations are written as json or text");
  }
}

void emit_table(const CohomologyTable& t, const Options& o, std::ostream& out) {
  if (o.out == "json") {
    out << table_to_json(t).dump(2) << '\n';
  } else if (o.out == "csv") {
    out << table_to_csv(t);
  } else {
    out << table_to_text(t);
  }
}

int emit_reports(const std::vector<TheoremReport>& reports, const Options& o, std::ostream& out) {
  bool all_pass = true;
  Json arr = Json::array();
  for (const auto& r : reports) {
    all_pass = all_pass && r.verdict == Verdict::kPass;
    arr.push_back(r.to_json());
  }
  if (o.out == "json") {
    out << arr.dump(2) << '\n';
  } else if (o.out == "csv") {
    out << "theorem,recipe,verdict\n";
    for (const auto& r : reports) {
      out << r.theorem << ",\"" << r.recipe << "\"," << to_string(r.verdict) << '\n';
    }
  } else {
    for (const auto& r : reports) {
      out << to_string(r.verdict) << "  " << r.theorem << "  " << r.recipe << "  " << r.left.dump()
          << " vs " << r.right.dump() << '\n';
      for (const auto& note : r.notes) out << "    " << note << '\n';
    }
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graded D-modules: de Rham cohomology and graded Matlis duality", "weyldual"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool needs_recipe) {
    auto* opt = sub->add_option("--recipe", o.recipe, "module, e.g. \"E(n=2)\" or \"shift(R(n=1),-2)\"");
    if (needs_recipe) opt->required();
    sub->add_option("--window", o.window, "lo..hi, or per axis \"a..b x c..d\"");
    sub->add_option("--mode", o.mode, "coarse or fine")->check(CLI::IsMember({"coarse", "fine"}));
    sub->add_option("--out", o.out, "json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--parallel", o.parallel, "worker threads")->check(CLI::PositiveNumber);
  };

  auto* build = app.add_subcommand("build", "print a presentation");
  add_common(build, true);
  auto* derham = app.add_subcommand("derham", "de Rham cohomology table");
  add_common(derham, true);
  derham->add_flag("--koszul", o.koszul, "homological Koszul complex of -d_1, ..., -d_n instead");
  auto* dual = app.add_subcommand("dual", "print the graded Matlis dual");
  add_common(dual, true);
  auto* eulerian = app.add_subcommand("eulerian", "Euler operator test on a module and its dual");
  add_common(eulerian, true);
  auto* verify = app.add_subcommand("verify", "run theorem checks");
  add_common(verify, false);
  verify->add_option("--theorem", o.theorem, "theorem name or all");
  verify->add_flag("--all", o.all, "every theorem over the module zoo");
  auto* zoo = app.add_subcommand("zoo", "list the module zoo");
  zoo->add_option("--out", o.out, "json or text")->check(CLI::IsMember({"json", "text"}));

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n' << app.help();
    return 2;
  }

  try {
    const EngineOptions engine{o.parallel, WedgeConvention::kLexLeftInsert};
    if (zoo->parsed()) {
      if (o.out == "json") {
        out << Json(zoo_recipes()).dump(2) << '\n';
      } else {
        for (const auto& r : zoo_recipes()) out << r << '\n';
      }
      return 0;
    }
    if (verify->parsed()) {
      if (o.all) return emit_reports(run_all(o.parallel), o, out);
      const auto& names = theorem_names();
      if (o.theorem != "all" && std::find(names.begin(), names.end(), o.theorem) == names.end()) {
        throw ParseError("unknown theorem '" + o.theorem + "'");
      }
      if (o.recipe.empty() && o.theorem != "noninjectivity") {
        throw ParseError("verify needs --recipe or --all");
      }
      BuildOptions b;
      if (!o.recipe.empty()) b = build_options(o, parse_recipe(o.recipe));
      std::vector<TheoremReport> reports;
      for (const auto& t : names) {
        if (o.theorem != "all" && t != o.theorem) continue;
        if (o.theorem == "all" && t == "noninjectivity") continue;
        reports.push_back(run_theorem(t, o.recipe, b, engine));
      }
      return emit_reports(reports, o, out);
    }

    const Recipe recipe = parse_recipe(o.recipe);
    const auto m = build_recipe(recipe, build_options(o, recipe));
    if (build->parsed()) {
      emit_presentation(m, o, out);
    } else if (dual->parsed()) {
      emit_presentation(matlis_dual(m), o, out);
    } else if (derham->parsed()) {
      emit_table(o.koszul ? koszul_homology(m, -1, engine) : derham_cohomology(m, engine), o, out);
    } else if (eulerian->parsed()) {
      const auto primal = is_eulerian(m);
      Json j{{"recipe", recipe.str()}, {"eulerian", primal.eulerian}, {"labels_checked", primal.checked}};
      if (primal.witness) {
        j["witness"] = label_to_json(*primal.witness);
        j["defect"] = matrix_to_json(*primal.defect);
      } else {
        j["dual_eulerian"] = eulerian_dual_check(m);
      }
      if (o.out == "text") {
        out << recipe.str() << (primal.eulerian ? " is Eulerian" : " is not Eulerian");
        if (primal.witness) out << " (witness label " << primal.witness->str() << ")";
        if (!primal.witness) {
          out << "; dual " << (j["dual_eulerian"].get<bool>() ? "is" : "is not") << " Eulerian";
        }
        out << '\n';
      } else {
        out << j.dump(2) << '\n';
      }
    }
    return 0;
  } catch (const ParseError& e) {
    err << e.what() << '\n';
    return 2;
  } catch (const IncompatibleSpecs& e) {
    err << e.what() << '\n';
    return 2;
  } catch (const CoarseModeUnsupported& e) {
    err << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return 1;
  }
}

}  // namespace weyldual
