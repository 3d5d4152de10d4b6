#pragma once

#include <cstddef>
#include <map>
#include <optional>

#include "weyldual/presentation.hpp"

namespace weyldual {

/// k-linear map between presentations, homogeneous of `degree`:
/// blocks[a] : M_a -> N_{a+degree}. Absent blocks are zero.
struct GradedMap {
  Label degree;
  std::map<Label, ExactMatrix> blocks;
};

/// The block at source label a, or nullopt if either side is uncovered.
std::optional<ExactMatrix> map_block(const GradedMap& f, const GradedPresentation& source,
                                     const GradedPresentation& target, const Label& a);

/// g after f; blocks exist where both factors are known.
GradedMap compose(const GradedMap& g, const GradedMap& f, const GradedPresentation& source,
                  const GradedPresentation& middle, const GradedPresentation& target);

GradedMap identity_map(const GradedPresentation& m);

struct LinearityReport {
  bool ok = true;
  std::size_t checked = 0;
  std::optional<Label> witness;
};

/// Whether f commutes with every x_i and d_i wherever both composites are
/// known.
LinearityReport check_d_linear(const GradedMap& f, const GradedPresentation& source,
                               const GradedPresentation& target);

}  // namespace weyldual
