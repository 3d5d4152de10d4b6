#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "weyldual/graded_map.hpp"
#include "weyldual/presentation.hpp"

namespace weyldual {

/// COARSE: [-(n+6), 6]. FINE: [-7, 6]^n. No vanishing flags; constructors
/// add the ones their support justifies.
Window default_window(const GradingSpec& spec);

/// R = Q[x_1..x_n] on the monomial basis.
GradedPresentation polynomial_ring(const GradingSpec& spec,
                                   std::optional<Window> window = std::nullopt);

/// E = H^n_m(R) on inverse monomials x^b, all b_i <= -1.
GradedPresentation injective_hull_E(const GradingSpec& spec,
                                    std::optional<Window> window = std::nullopt);

/// H^{|S|}_{(x_i : i in S)}(R): basis x^b with b_i <= -1 for i in S and
/// b_j >= 0 otherwise. `vars` holds 0-based indices. FINE only.
GradedPresentation local_coh_vars(const GradingSpec& spec, const std::set<std::size_t>& vars,
                                  std::optional<Window> window = std::nullopt);

/// D/(D*xd) for n = 1 (COARSE): x^a at label a >= 0, d^b at label -b.
GradedPresentation cyclic_xd(std::optional<Window> window = std::nullopt);

/// Exponent vectors of the basis of R_a, in basis order.
std::vector<std::vector<int>> polynomial_basis(const GradingSpec& spec, const Label& a);
/// Exponent vectors (all entries <= -1) of the basis of E_a, in basis order.
std::vector<std::vector<int>> inverse_monomial_basis(const GradingSpec& spec, const Label& a);

/// The short exact sequence 0 -> E -> D/(D*xd) -> R -> 0, n = 1, COARSE.
/// The first map is right multiplication by d under E = D/(D*x)
/// (x^{-b} <-> class of d^{b-1} / ((-1)^{b-1} (b-1)!)).
struct XdSequence {
  GradedPresentation e;
  GradedPresentation middle;
  GradedPresentation r;
  GradedMap inject;
  GradedMap project;
};
XdSequence ses_xd(std::optional<Window> window = std::nullopt);

}  // namespace weyldual
