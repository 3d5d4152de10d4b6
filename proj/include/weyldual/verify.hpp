#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weyldual/derham.hpp"
#include "weyldual/presentation.hpp"
#include "weyldual/recipe.hpp"
#include "weyldual/serialize.hpp"

namespace weyldual {

enum class Verdict { kPass, kFail, kInconclusive };
const char* to_string(Verdict v);

struct TheoremReport {
  std::string theorem;
  std::string recipe;
  Verdict verdict = Verdict::kInconclusive;
  Json left;
  Json right;
  std::vector<std::string> notes;
  Json details = Json::object();

  Json to_json() const;
};

/// Total dim H^i(M) against total dim H^{n-i}(DD(M)).
TheoremReport verify_duality(const GradedPresentation& m, const std::string& recipe,
                             const EngineOptions& opts = {});

struct SurjectionCount {
  std::size_t s = 0;
  /// dim H^0_dR(DD(M)), from the dual presentation.
  std::size_t h0_dual = 0;
  bool h0_dual_complete = false;
  /// Explicit maps M -> E(b_k), one per basis functional of H^0(DD(M)).
  bool explicit_linear = true;
  bool explicit_surjective = true;
  std::size_t explicit_labels_checked = 0;
};

/// s = dim H^n_dR(M), with the H^0(DD(M)) cross-check and the explicit
/// surjection onto a sum of shifted copies of E. Throws IncompleteWindow.
SurjectionCount max_surjections_onto_E(const GradedPresentation& m, const EngineOptions& opts = {});

/// Dimension of the space of graded D-linear maps M -> E, found by solving
/// the commutation equations degree by degree over the window.
std::size_t grhom_d_dim(const GradedPresentation& m);

struct InjectionCount {
  std::size_t s = 0;
  bool linear = true;
  bool injective = true;
  std::size_t labels_checked = 0;
};

/// s = dim H^0_dR(M), with the maps R -> M sending 1 to each joint-kernel
/// basis vector. Throws IncompleteWindow.
InjectionCount max_injections_from_R(const GradedPresentation& m, const EngineOptions& opts = {});

TheoremReport verify_surjections(const GradedPresentation& m, const std::string& recipe,
                                 const EngineOptions& opts = {});
TheoremReport verify_injections(const GradedPresentation& m, const std::string& recipe,
                                const EngineOptions& opts = {});
/// The sequence 0 -> E -> D/(D*xd) -> R -> 0 is exact, D-linear and
/// not split.
TheoremReport verify_noninjectivity(std::optional<Window> window = std::nullopt);
/// Eulerian M has Eulerian dual; INCONCLUSIVE when M is not Eulerian.
TheoremReport verify_eulerian_duality(const GradedPresentation& m, const std::string& recipe);
/// dim h_i of the homological Koszul complex against dim h^{n-i}.
TheoremReport verify_koszul_swap(const GradedPresentation& m, const std::string& recipe,
                                 const EngineOptions& opts = {});
/// DD(DD(M)) = M.
TheoremReport verify_double_dual(const GradedPresentation& m, const std::string& recipe);

/// duality, surjections, injections, eulerian, koszul, double_dual,
/// noninjectivity.
const std::vector<std::string>& theorem_names();

/// Runs one named theorem on a recipe string (ignored for noninjectivity).
TheoremReport run_theorem(const std::string& theorem, const std::string& recipe,
                          const BuildOptions& build = {}, const EngineOptions& opts = {});

/// Recipe strings of the shipped module zoo.
const std::vector<std::string>& zoo_recipes();

/// Every theorem over the zoo, in a fixed order. `workers` bounds the
/// number of checks running at once.
std::vector<TheoremReport> run_all(unsigned workers = 1);

}  // namespace weyldual
