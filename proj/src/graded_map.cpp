#include "weyldual/graded_map.hpp"

namespace weyldual {

std::optional<ExactMatrix> map_block(const GradedMap& f, const GradedPresentation& source,
                                     const GradedPresentation& target, const Label& a) {
  const auto src = source.dim_at(a);
  const auto tgt = target.dim_at(a + f.degree);
  if (!src || !tgt) return std::nullopt;
  auto it = f.blocks.find(a);
  if (it == f.blocks.end() || *src == 0 || *tgt == 0) return ExactMatrix(*tgt, *src);
  return it->second;
}

GradedMap compose(const GradedMap& g, const GradedMap& f, const GradedPresentation& source,
                  const GradedPresentation& middle, const GradedPresentation& target) {
  GradedMap out{f.degree + g.degree, {}};
  for (const auto& a : source.window().labels()) {
    auto fa = map_block(f, source, middle, a);
    if (!fa) continue;
    auto gb = map_block(g, middle, target, a + f.degree);
    if (!gb) continue;
    out.blocks.emplace(a, (*gb) * (*fa));
  }
  return out;
}

GradedMap identity_map(const GradedPresentation& m) {
  GradedMap out{m.spec().zero(), {}};
  for (const auto& a : m.window().labels()) {
    out.blocks.emplace(a, ExactMatrix::identity(*m.dim_at(a)));
  }
  return out;
}

LinearityReport check_d_linear(const GradedMap& f, const GradedPresentation& source,
                               const GradedPresentation& target) {
  LinearityReport report;
  const auto& spec = source.spec();
  auto record = [&](const Label& a, const std::optional<ExactMatrix>& lhs1,
                    const std::optional<ExactMatrix>& lhs2,
                    const std::optional<ExactMatrix>& rhs1,
                    const std::optional<ExactMatrix>& rhs2) {
    if (!lhs1 || !lhs2 || !rhs1 || !rhs2) return;
    ++report.checked;
    if (!((*lhs2) * (*lhs1) == (*rhs2) * (*rhs1)) && report.ok) {
      report.ok = false;
      report.witness = a;
    }
  };
  for (const auto& a : source.window().labels()) {
    const Label b = a + f.degree;
    for (std::size_t i = 0; i < spec.n; ++i) {
      const Label e = spec.deg_x(i);
      record(a, map_block(f, source, target, a), target.x_map(i, b), source.x_map(i, a),
             map_block(f, source, target, a + e));
      record(a, map_block(f, source, target, a), target.d_map(i, b), source.d_map(i, a),
             map_block(f, source, target, a - e));
    }
  }
  return report;
}

}  // namespace weyldual
