#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "weyldual/grading.hpp"
#include "weyldual/matrix.hpp"
#include "weyldual/weyl.hpp"

namespace weyldual {

using ActionMaps = std::map<Label, ExactMatrix>;
using BasisNames = std::map<Label, std::vector<std::string>>;

/// Finite-window degreewise model of a graded D-module.
///
/// Pieces M_a are known for every label in the window box. Outside the box a
/// piece is known only if a vanishing flag declares it zero. X[i] holds the
/// matrices of multiplication by x_i (M_a -> M_{a+deg x_i}) and D[i] those of
/// d_i (M_a -> M_{a-deg x_i}), keyed by source label. Only matrices whose
/// source and target are both nonzero are stored.
///
/// The optional Euler certificate is a finite set of defects c such that,
/// on each axis k of the lattice, the operator theta_k = sum of x_i d_i over
/// the variables of that axis satisfies prod_c (theta_k - a_k - c_k) = 0 on
/// every piece M_a. Eulerian modules carry {0}. It lets cohomology totals be
/// certified complete without vanishing flags in every direction; it is
/// re-checked on the window before being trusted.
class GradedPresentation {
 public:
  GradedPresentation(GradingSpec spec, Window window, std::map<Label, std::size_t> dims,
                     std::vector<ActionMaps> x, std::vector<ActionMaps> d,
                     std::optional<BasisNames> basis_names = std::nullopt,
                     std::optional<std::set<Label>> euler_defects = std::nullopt);

  const GradingSpec& spec() const { return spec_; }
  std::size_t n() const { return spec_.n; }
  const Window& window() const { return window_; }
  const std::map<Label, std::size_t>& dims() const { return dims_; }
  const std::vector<ActionMaps>& x_maps() const { return x_; }
  const std::vector<ActionMaps>& d_maps() const { return d_; }
  const std::optional<BasisNames>& basis_names() const { return names_; }
  const std::optional<std::set<Label>>& euler_defects() const { return defects_; }

  /// Dimension of M_a, or nullopt when a is not covered.
  std::optional<std::size_t> dim_at(const Label& a) const;

  /// x_i : M_a -> M_{a+deg x_i}; nullopt when either side is uncovered or a
  /// required matrix is missing.
  std::optional<ExactMatrix> x_map(std::size_t i, const Label& a) const;
  /// d_i : M_a -> M_{a-deg x_i}.
  std::optional<ExactMatrix> d_map(std::size_t i, const Label& a) const;

  GradedPresentation with_x_matrix(std::size_t i, const Label& a, ExactMatrix m) const;
  GradedPresentation with_d_matrix(std::size_t i, const Label& a, ExactMatrix m) const;
  GradedPresentation with_dim(const Label& a, std::size_t dim) const;
  GradedPresentation with_euler_defects(std::optional<std::set<Label>> defects) const;
  GradedPresentation without_basis_names() const;

  /// Total dimension over the box.
  std::size_t total_dim() const;

 private:
  std::optional<ExactMatrix> action(const std::vector<ActionMaps>& maps, std::size_t i,
                                    const Label& a, const Label& target) const;

  GradingSpec spec_;
  Window window_;
  std::map<Label, std::size_t> dims_;
  std::vector<ActionMaps> x_;
  std::vector<ActionMaps> d_;
  std::optional<BasisNames> names_;
  std::optional<std::set<Label>> defects_;
};

struct Violation {
  std::string kind;
  Label label;
  std::size_t i = 0;
  std::size_t j = 0;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  std::size_t checked = 0;
  /// Relation instances skipped because a composite left the covered region.
  std::size_t skipped = 0;

  bool ok() const { return violations.empty(); }
};

/// Checks shapes, presence of matrices, and the relations
/// x_i x_j = x_j x_i, d_i d_j = d_j d_i, d_i x_j - x_j d_i = delta_ij
/// at every box label where the composites stay covered.
ValidationReport validate(const GradedPresentation& m);

/// M(l)_a = M_{a+l}.
GradedPresentation shift(const GradedPresentation& m, const Label& l);

/// Blockwise sum. Boxes are intersected; a vanishing flag survives only when
/// every summand guarantees it for the new box.
/// Throws IncompatibleSpecs or UncoveredRegion (empty intersection).
GradedPresentation direct_sum(const GradedPresentation& a, const GradedPresentation& b);

struct EulerianResult {
  bool eulerian = true;
  std::optional<Label> witness;
  /// sum_i x_i d_i - eps(a) on the witness piece.
  std::optional<ExactMatrix> defect;
  std::size_t checked = 0;
};

EulerianResult is_eulerian(const GradedPresentation& m);

/// Whether the presentation's Euler certificate holds on every box label
/// where it can be evaluated. False when there is no certificate.
bool check_euler_certificate(const GradedPresentation& m);

/// Image of v in M_a under p, with its label. Throws InhomogeneousOperator or
/// UncoveredRegion.
std::pair<Label, Vector> apply_op(const GradedPresentation& m, const WeylOp& p,
                                  const Label& a, const Vector& v);

/// Matrix of x^e : M_a -> M_{a+deg e}, applying x_1 first; nullopt when a
/// step leaves the covered region.
std::optional<ExactMatrix> x_power_map(const GradedPresentation& m, const std::vector<int>& e,
                                       const Label& a);

/// Structural equality of dims, window, spec, and action matrices.
bool same_structure(const GradedPresentation& a, const GradedPresentation& b);

}  // namespace weyldual
