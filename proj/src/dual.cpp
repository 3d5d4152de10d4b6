#include "weyldual/dual.hpp"

#include "weyldual/errors.hpp"

namespace weyldual {

GradedPresentation matlis_dual(const GradedPresentation& m) {
  const auto& spec = m.spec();
  const Label D = spec.d_total();
  const Window& w = m.window();
  Window dw{-w.hi - D, -w.lo - D, w.vanish_above, w.vanish_below};

  std::map<Label, std::size_t> dims;
  std::optional<BasisNames> names;
  if (m.basis_names()) names.emplace();
  for (const auto& b : dw.labels()) {
    const Label c = -b - D;
    dims[b] = *m.dim_at(c);
    if (names) {
      auto it = m.basis_names()->find(c);
      if (it == m.basis_names()->end()) continue;
      auto& out = (*names)[b];
      for (const auto& s : it->second) out.push_back("dual(" + s + ")");
    }
  }

  std::vector<ActionMaps> x(spec.n);
  std::vector<ActionMaps> d(spec.n);
  for (const auto& b : dw.labels()) {
    for (std::size_t i = 0; i < spec.n; ++i) {
      const Label e = spec.deg_x(i);
      if (dw.in_box(b + e)) {
        if (auto mat = m.x_map(i, -b - e - D)) x[i].emplace(b, mat->transpose());
      }
      if (dw.in_box(b - e)) {
        if (auto mat = m.d_map(i, -b + e - D)) d[i].emplace(b, Rational(-1) * mat->transpose());
      }
    }
  }

  std::optional<std::set<Label>> defects;
  if (m.euler_defects()) {
    defects.emplace();
    for (const auto& c : *m.euler_defects()) defects->insert(-c);
  }
  return GradedPresentation(spec, dw, std::move(dims), std::move(x), std::move(d),
                            std::move(names), std::move(defects));
}

GradedMap dual_map(const GradedMap& f, const GradedPresentation& m, const GradedPresentation& n,
                   bool check_linear) {
  if (!(m.spec() == n.spec())) throw NotAMapOfPresentations("source and target gradings differ");
  const Label D = m.spec().d_total();
  for (const auto& [a, block] : f.blocks) {
    const auto src = m.dim_at(a);
    const auto tgt = n.dim_at(a + f.degree);
    if (!src || !tgt || block.cols() != *src || block.rows() != *tgt) {
      throw NotAMapOfPresentations("block at " + a.str() + " does not fit the presentations");
    }
  }
  if (check_linear) {
    const auto report = check_d_linear(f, m, n);
    if (!report.ok) {
      throw NotAMapOfPresentations("map is not D-linear at " +
                                   (report.witness ? report.witness->str() : std::string("?")));
    }
  }
  GradedMap out{f.degree, {}};
  for (const auto& [a, block] : f.blocks) {
    if (block.is_zero()) continue;
    out.blocks.emplace(-a - D - f.degree, block.transpose());
  }
  return out;
}

Rational residue(const GradedPresentation& e, const Label& a, const Vector& v) {
  if (a != -e.spec().d_total() || v.empty()) return 0;
  return v.front();
}

bool evaluation_check(const GradedPresentation& m) {
  return same_structure(matlis_dual(matlis_dual(m)), m);
}

bool eulerian_dual_check(const GradedPresentation& m) {
  const auto primal = is_eulerian(m);
  if (!primal.eulerian) {
    throw PreconditionFailed("module is not Eulerian at " +
                             (primal.witness ? primal.witness->str() : std::string("?")));
  }
  return is_eulerian(matlis_dual(m)).eulerian;
}

}  // namespace weyldual
