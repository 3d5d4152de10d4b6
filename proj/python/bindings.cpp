#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "weyldual/derham.hpp"
#include "weyldual/dual.hpp"
#include "weyldual/errors.hpp"
#include "weyldual/recipe.hpp"
#include "weyldual/serialize.hpp"
#include "weyldual/verify.hpp"

namespace py = pybind11;
using namespace weyldual;

namespace {

// A module argument is either a recipe string or a serialized presentation.
GradedPresentation load(const std::string& source, const std::optional<std::string>& window,
                        const std::optional<std::string>& mode) {
  if (!source.empty() && source.front() == '{') {
    if (window || mode) throw ParseError("window and mode apply to recipes only");
    try {
      return presentation_from_json(Json::parse(source));
    } catch (const Json::exception& e) {
      throw ParseError(e.what());
    }
  }
  const Recipe r = parse_recipe(source);
  BuildOptions b;
  if (mode) b.mode = parse_grading_mode(*mode);
  if (window) b.window = parse_window(*window, recipe_spec(r, b).lattice_rank());
  return build_recipe(r, b);
}

BuildOptions options(const std::string& recipe, const std::optional<std::string>& window,
                     const std::optional<std::string>& mode) {
  BuildOptions b;
  if (mode) b.mode = parse_grading_mode(*mode);
  if (window) b.window = parse_window(*window, recipe_spec(parse_recipe(recipe), b).lattice_rank());
  return b;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  auto base = py::register_exception<Error>(m, "WeylDualError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<IncompatibleSpecs>(m, "IncompatibleSpecs", base.ptr());
  py::register_exception<CoarseModeUnsupported>(m, "CoarseModeUnsupported", base.ptr());
  py::register_exception<IncompleteWindow>(m, "IncompleteWindow", base.ptr());
  py::register_exception<PreconditionFailed>(m, "PreconditionFailed", base.ptr());

  const auto none = py::none();

  m.def(
      "build",
      [](const std::string& src, std::optional<std::string> window,
         std::optional<std::string> mode) {
        return presentation_to_json(load(src, window, mode)).dump();
      },
      py::arg("module"), py::arg("window") = none, py::arg("mode") = none);

  m.def(
      "derham",
      [](const std::string& src, bool koszul, unsigned workers, std::optional<std::string> window,
         std::optional<std::string> mode) {
        const auto p = load(src, window, mode);
        EngineOptions opts;
        opts.workers = workers;
        py::gil_scoped_release release;
        const auto t = koszul ? koszul_homology(p, -1, opts) : derham_cohomology(p, opts);
        return table_to_json(t).dump();
      },
      py::arg("module"), py::arg("koszul") = false, py::arg("workers") = 1u,
      py::arg("window") = none, py::arg("mode") = none);

  m.def(
      "dual",
      [](const std::string& src, std::optional<std::string> window,
         std::optional<std::string> mode) {
        return presentation_to_json(matlis_dual(load(src, window, mode))).dump();
      },
      py::arg("module"), py::arg("window") = none, py::arg("mode") = none);

  m.def(
      "validate",
      [](const std::string& src) {
        const auto r = validate(load(src, std::nullopt, std::nullopt));
        Json j{{"ok", r.ok()}, {"checked", r.checked}, {"skipped", r.skipped},
               {"violations", Json::array()}};
        for (const auto& v : r.violations) {
          j["violations"].push_back({{"kind", v.kind}, {"label", label_to_json(v.label)},
                                     {"i", v.i}, {"j", v.j}, {"detail", v.detail}});
        }
        return j.dump();
      },
      py::arg("module"));

  m.def(
      "eulerian",
      [](const std::string& src) {
        const auto r = is_eulerian(load(src, std::nullopt, std::nullopt));
        Json j{{"eulerian", r.eulerian}, {"checked", r.checked}};
        j["witness"] = r.witness ? label_to_json(*r.witness) : Json(nullptr);
        j["defect"] = r.defect ? matrix_to_json(*r.defect) : Json(nullptr);
        return j.dump();
      },
      py::arg("module"));

  m.def(
      "verify",
      [](const std::string& theorem, const std::string& recipe, unsigned workers,
         std::optional<std::string> window, std::optional<std::string> mode) {
        const auto b = theorem == "noninjectivity" ? BuildOptions{} : options(recipe, window, mode);
        EngineOptions opts;
        opts.workers = workers;
        py::gil_scoped_release release;
        return run_theorem(theorem, recipe, b, opts).to_json().dump();
      },
      py::arg("theorem"), py::arg("recipe") = "", py::arg("workers") = 1u,
      py::arg("window") = none, py::arg("mode") = none);

  m.def(
      "run_all",
      [](unsigned workers) {
        std::vector<TheoremReport> reports;
        {
          py::gil_scoped_release release;
          reports = run_all(workers);
        }
        Json j = Json::array();
        for (const auto& r : reports) j.push_back(r.to_json());
        return j.dump();
      },
      py::arg("workers") = 1u);

  m.def("zoo", [] { return zoo_recipes(); });
  m.def("theorems", [] { return theorem_names(); });
}
