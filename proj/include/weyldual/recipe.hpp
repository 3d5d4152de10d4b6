#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "weyldual/presentation.hpp"

namespace weyldual {

/// Parsed module description, e.g. "shift(E(n=2),-2)" or "sum(R(n=1),XD)".
struct Recipe {
  enum class Kind { kPolynomialRing, kInjectiveHullE, kLocalCohVars, kCyclicXd, kShift, kDirectSum };

  Kind kind = Kind::kPolynomialRing;
  std::size_t n = 1;
  std::set<std::size_t> vars;   // 1-based, kLocalCohVars only
  std::vector<int> shift_by;    // kShift only
  std::vector<Recipe> children;

  /// Variable count shared by all leaves.
  std::size_t variables() const;
  bool needs_fine() const;
  /// Canonical spelling; parse(str()) round-trips.
  std::string str() const;
};

/// Throws ParseError on unknown or malformed recipes.
Recipe parse_recipe(const std::string& text);

struct BuildOptions {
  /// Defaults to FINE when the recipe contains Hvars, otherwise COARSE.
  std::optional<GradingMode> mode;
  /// Replaces the default window of every leaf constructor.
  std::optional<Window> window;
};

GradedPresentation build_recipe(const Recipe& r, const BuildOptions& opts = {});
GradingSpec recipe_spec(const Recipe& r, const BuildOptions& opts = {});

/// "lo..hi" for every axis, or per-axis ranges joined by " x "
/// ("-3..3 x 0..5"); "a,b" is accepted in place of "a..b".
Window parse_window(const std::string& text, std::size_t rank);

}  // namespace weyldual
