#pragma once

#include "weyldual/graded_map.hpp"
#include "weyldual/presentation.hpp"

namespace weyldual {

/// Graded Matlis dual: DD(M)_a = (M_{-a-D})^vee with D = deg(x_1...x_n).
/// The dual basis is indexed like the primal one. X_i acts by the transpose
/// of X_i and d_i by minus the transpose of d_i. The box is reflected and
/// the vanishing flags swap sides.
GradedPresentation matlis_dual(const GradedPresentation& m);

/// DD(f) : DD(N) -> DD(M) for f : M -> N of degree d; the block at b is
/// f[-b-D-d]^T and the degree stays d. Throws NotAMapOfPresentations when a
/// block has the wrong shape or, with `check_linear`, when f is not D-linear.
GradedMap dual_map(const GradedMap& f, const GradedPresentation& m, const GradedPresentation& n,
                   bool check_linear = true);

/// Socle coefficient of v in E_a: v[0] at a = -D, zero elsewhere.
Rational residue(const GradedPresentation& e, const Label& a, const Vector& v);

/// Whether DD(DD(M)) reproduces M exactly.
bool evaluation_check(const GradedPresentation& m);

/// is_eulerian(DD(M)). Throws PreconditionFailed when M is not Eulerian.
bool eulerian_dual_check(const GradedPresentation& m);

}  // namespace weyldual
