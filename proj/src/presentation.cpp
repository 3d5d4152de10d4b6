#include "weyldual/presentation.hpp"

#include <algorithm>

#include "weyldual/errors.hpp"

namespace weyldual {

GradedPresentation::GradedPresentation(GradingSpec spec, Window window,
                                       std::map<Label, std::size_t> dims,
                                       std::vector<ActionMaps> x, std::vector<ActionMaps> d,
                                       std::optional<BasisNames> basis_names,
                                       std::optional<std::set<Label>> euler_defects)
    : spec_(spec),
      window_(std::move(window)),
      dims_(std::move(dims)),
      x_(std::move(x)),
      d_(std::move(d)),
      names_(std::move(basis_names)),
      defects_(std::move(euler_defects)) {
  if (window_.rank() != spec_.lattice_rank()) {
    throw IncompatibleSpecs("window rank " + std::to_string(window_.rank()) +
                            " does not match lattice rank " +
                            std::to_string(spec_.lattice_rank()));
  }
  for (const auto& a : window_.labels()) dims_.try_emplace(a, 0);
  x_.resize(spec_.n);
  d_.resize(spec_.n);
  for (auto* maps : {&x_, &d_}) {
    for (auto& per_var : *maps) {
      std::erase_if(per_var, [](const auto& kv) { return kv.second.empty(); });
    }
  }
}

std::optional<std::size_t> GradedPresentation::dim_at(const Label& a) const {
  if (window_.in_box(a)) {
    auto it = dims_.find(a);
    return it == dims_.end() ? 0 : it->second;
  }
  if (window_.known_zero(a)) return 0;
  return std::nullopt;
}

std::optional<ExactMatrix> GradedPresentation::action(const std::vector<ActionMaps>& maps,
                                                      std::size_t i, const Label& a,
                                                      const Label& target) const {
  const auto src = dim_at(a);
  const auto tgt = dim_at(target);
  if (!src || !tgt) return std::nullopt;
  if (*src == 0 || *tgt == 0) return ExactMatrix(*tgt, *src);
  auto it = maps.at(i).find(a);
  if (it == maps.at(i).end()) return std::nullopt;
  return it->second;
}

std::optional<ExactMatrix> GradedPresentation::x_map(std::size_t i, const Label& a) const {
  return action(x_, i, a, a + spec_.deg_x(i));
}

std::optional<ExactMatrix> GradedPresentation::d_map(std::size_t i, const Label& a) const {
  return action(d_, i, a, a - spec_.deg_x(i));
}

GradedPresentation GradedPresentation::with_x_matrix(std::size_t i, const Label& a,
                                                     ExactMatrix m) const {
  GradedPresentation out = *this;
  out.x_.at(i)[a] = std::move(m);
  return out;
}

GradedPresentation GradedPresentation::with_d_matrix(std::size_t i, const Label& a,
                                                     ExactMatrix m) const {
  GradedPresentation out = *this;
  out.d_.at(i)[a] = std::move(m);
  return out;
}

GradedPresentation GradedPresentation::with_dim(const Label& a, std::size_t dim) const {
  GradedPresentation out = *this;
  out.dims_[a] = dim;
  return out;
}

GradedPresentation GradedPresentation::with_euler_defects(
    std::optional<std::set<Label>> defects) const {
  GradedPresentation out = *this;
  out.defects_ = std::move(defects);
  return out;
}

GradedPresentation GradedPresentation::without_basis_names() const {
  GradedPresentation out = *this;
  out.names_.reset();
  return out;
}

std::size_t GradedPresentation::total_dim() const {
  std::size_t s = 0;
  for (const auto& [a, k] : dims_) s += k;
  return s;
}

namespace {

std::string shape_str(const ExactMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void check_stored(const GradedPresentation& m, const std::vector<ActionMaps>& maps,
                  bool raising, const char* name, ValidationReport& report) {
  const auto& spec = m.spec();
  for (std::size_t i = 0; i < maps.size(); ++i) {
    for (const auto& [a, mat] : maps[i]) {
      const Label target = raising ? a + spec.deg_x(i) : a - spec.deg_x(i);
      if (!m.window().in_box(a)) {
        report.violations.push_back({std::string(name) + "_outside_box", a, i, 0,
                                     "matrix stored for a label outside the box"});
        continue;
      }
      const auto tgt = m.dim_at(target);
      if (!tgt) {
        report.violations.push_back({std::string(name) + "_uncovered_target", a, i, 0,
                                     "target " + target.str() + " is not covered"});
        continue;
      }
      const std::size_t src = *m.dim_at(a);
      if (mat.rows() != *tgt || mat.cols() != src) {
        report.violations.push_back(
            {std::string(name) + "_shape", a, i, 0,
             "expected " + std::to_string(*tgt) + "x" + std::to_string(src) + ", got " +
                 shape_str(mat)});
      }
    }
  }
}

void check_missing(const GradedPresentation& m, const std::vector<ActionMaps>& maps,
                   bool raising, const char* name, ValidationReport& report) {
  const auto& spec = m.spec();
  for (const auto& a : m.window().labels()) {
    const std::size_t src = *m.dim_at(a);
    if (src == 0) continue;
    for (std::size_t i = 0; i < m.n(); ++i) {
      const Label target = raising ? a + spec.deg_x(i) : a - spec.deg_x(i);
      const auto tgt = m.dim_at(target);
      if (!tgt || *tgt == 0) continue;
      if (!maps[i].contains(a)) {
        report.violations.push_back({std::string(name) + "_missing", a, i, 0,
                                     "no matrix for a covered nonzero target"});
      }
    }
  }
}

/// Relation f2*f1 - g2*g1 == c*identity where every factor must be known.
void check_relation(const char* kind, const Label& a, std::size_t i, std::size_t j,
                    const std::optional<ExactMatrix>& f1, const std::optional<ExactMatrix>& f2,
                    const std::optional<ExactMatrix>& g1, const std::optional<ExactMatrix>& g2,
                    int c, ValidationReport& report) {
  if (!f1 || !f2 || !g1 || !g2) {
    ++report.skipped;
    return;
  }
  ++report.checked;
  try {
    ExactMatrix lhs = (*f2) * (*f1) - (*g2) * (*g1);
    if (c != 0) lhs = lhs - ExactMatrix::scalar(lhs.rows(), c);
    if (!lhs.is_zero()) {
      report.violations.push_back({kind, a, i, j, "relation fails"});
    }
  } catch (const ShapeMismatch& e) {
    report.violations.push_back({kind, a, i, j, e.what()});
  }
}

}  // namespace

ValidationReport validate(const GradedPresentation& m) {
  ValidationReport report;
  const auto& spec = m.spec();
  for (const auto& [a, k] : m.dims()) {
    if (!m.window().in_box(a) && k != 0) {
      report.violations.push_back({"dim_outside_box", a, 0, 0, "piece outside the box"});
    }
  }
  check_stored(m, m.x_maps(), true, "x", report);
  check_stored(m, m.d_maps(), false, "d", report);
  check_missing(m, m.x_maps(), true, "x", report);
  check_missing(m, m.d_maps(), false, "d", report);
  if (!report.ok()) return report;

  for (const auto& a : m.window().labels()) {
    for (std::size_t i = 0; i < m.n(); ++i) {
      const Label ei = spec.deg_x(i);
      for (std::size_t j = 0; j < m.n(); ++j) {
        const Label ej = spec.deg_x(j);
        if (i < j) {
          check_relation("x_commute", a, i, j, m.x_map(j, a), m.x_map(i, a + ej),
                         m.x_map(i, a), m.x_map(j, a + ei), 0, report);
          check_relation("d_commute", a, i, j, m.d_map(j, a), m.d_map(i, a - ej),
                         m.d_map(i, a), m.d_map(j, a - ei), 0, report);
        }
        check_relation("weyl", a, i, j, m.x_map(j, a), m.d_map(i, a + ej), m.d_map(i, a),
                       m.x_map(j, a - ei), i == j ? 1 : 0, report);
      }
    }
  }
  return report;
}

namespace {

ActionMaps shift_maps(const ActionMaps& maps, const Label& l) {
  ActionMaps out;
  for (const auto& [a, mat] : maps) out.emplace(a - l, mat);
  return out;
}

std::set<Label> shift_defects(const std::set<Label>& defects, const Label& l) {
  std::set<Label> out;
  for (const auto& c : defects) out.insert(c + l);
  return out;
}

}  // namespace

GradedPresentation shift(const GradedPresentation& m, const Label& l) {
  if (l.rank() != m.spec().lattice_rank()) {
    throw IncompatibleSpecs("shift of rank " + std::to_string(l.rank()) +
                            " on a lattice of rank " +
                            std::to_string(m.spec().lattice_rank()));
  }
  std::map<Label, std::size_t> dims;
  for (const auto& [a, k] : m.dims()) dims.emplace(a - l, k);
  std::vector<ActionMaps> x;
  std::vector<ActionMaps> d;
  for (const auto& maps : m.x_maps()) x.push_back(shift_maps(maps, l));
  for (const auto& maps : m.d_maps()) d.push_back(shift_maps(maps, l));
  std::optional<BasisNames> names;
  if (m.basis_names()) {
    names.emplace();
    for (const auto& [a, v] : *m.basis_names()) names->emplace(a - l, v);
  }
  std::optional<std::set<Label>> defects;
  if (m.euler_defects()) defects = shift_defects(*m.euler_defects(), l);
  return GradedPresentation(m.spec(), m.window().translated(-l), std::move(dims), std::move(x),
                            std::move(d), std::move(names), std::move(defects));
}

namespace {

/// Whether summand s guarantees zero pieces beyond the new box edge on axis k.
bool flag_survives(const GradedPresentation& s, const Window& box, std::size_t k, bool below) {
  const Window& w = s.window();
  if (below ? !w.vanish_below[k] : !w.vanish_above[k]) return false;
  if (below ? w.lo[k] == box.lo[k] : w.hi[k] == box.hi[k]) return true;
  for (std::size_t j = 0; j < w.rank(); ++j) {
    if (j != k && (w.lo[j] != box.lo[j] || w.hi[j] != box.hi[j])) return false;
  }
  for (const auto& a : w.labels()) {
    const bool beyond = below ? a[k] < box.lo[k] : a[k] > box.hi[k];
    if (beyond && *s.dim_at(a) != 0) return false;
  }
  return true;
}

}  // namespace

GradedPresentation direct_sum(const GradedPresentation& a, const GradedPresentation& b) {
  if (!(a.spec() == b.spec())) throw IncompatibleSpecs("direct sum of different gradings");
  const auto& spec = a.spec();
  const std::size_t r = spec.lattice_rank();
  Window w = Window::box(a.window().lo, a.window().hi);
  for (std::size_t k = 0; k < r; ++k) {
    w.lo[k] = std::max(a.window().lo[k], b.window().lo[k]);
    w.hi[k] = std::min(a.window().hi[k], b.window().hi[k]);
  }
  if (w.empty()) throw UncoveredRegion("summand windows do not overlap");
  for (std::size_t k = 0; k < r; ++k) {
    w.vanish_below[k] = flag_survives(a, w, k, true) && flag_survives(b, w, k, true);
    w.vanish_above[k] = flag_survives(a, w, k, false) && flag_survives(b, w, k, false);
  }

  std::map<Label, std::size_t> dims;
  std::optional<BasisNames> names;
  if (a.basis_names() && b.basis_names()) names.emplace();
  for (const auto& l : w.labels()) {
    dims[l] = *a.dim_at(l) + *b.dim_at(l);
    if (names) {
      std::vector<std::string> v;
      for (const auto* s : {&a, &b}) {
        auto it = s->basis_names()->find(l);
        const std::string tag = s == &a ? "[1]" : "[2]";
        if (it != s->basis_names()->end()) {
          for (const auto& nm : it->second) v.push_back(nm + tag);
        }
      }
      (*names)[l] = std::move(v);
    }
  }
  std::vector<ActionMaps> x(spec.n);
  std::vector<ActionMaps> d(spec.n);
  for (const auto& l : w.labels()) {
    for (std::size_t i = 0; i < spec.n; ++i) {
      if (w.in_box(l + spec.deg_x(i))) {
        auto ma = a.x_map(i, l);
        auto mb = b.x_map(i, l);
        if (ma && mb) x[i].emplace(l, weyldual::direct_sum(*ma, *mb));
      }
      if (w.in_box(l - spec.deg_x(i))) {
        auto ma = a.d_map(i, l);
        auto mb = b.d_map(i, l);
        if (ma && mb) d[i].emplace(l, weyldual::direct_sum(*ma, *mb));
      }
    }
  }
  std::optional<std::set<Label>> defects;
  if (a.euler_defects() && b.euler_defects()) {
    defects = *a.euler_defects();
    defects->insert(b.euler_defects()->begin(), b.euler_defects()->end());
  }
  return GradedPresentation(spec, std::move(w), std::move(dims), std::move(x), std::move(d),
                            std::move(names), std::move(defects));
}

namespace {

/// sum over variables i in `vars` of x_i d_i on M_a, or nullopt if uncovered.
std::optional<ExactMatrix> theta(const GradedPresentation& m, const Label& a,
                                 const std::vector<std::size_t>& vars) {
  const std::size_t dim = *m.dim_at(a);
  ExactMatrix acc(dim, dim);
  for (std::size_t i : vars) {
    auto down = m.d_map(i, a);
    if (!down) return std::nullopt;
    auto up = m.x_map(i, a - m.spec().deg_x(i));
    if (!up) return std::nullopt;
    acc = acc + (*up) * (*down);
  }
  return acc;
}

}  // namespace

EulerianResult is_eulerian(const GradedPresentation& m) {
  EulerianResult result;
  std::vector<std::size_t> all(m.n());
  for (std::size_t i = 0; i < m.n(); ++i) all[i] = i;
  for (const auto& a : m.window().labels()) {
    auto t = theta(m, a, all);
    if (!t) continue;
    ++result.checked;
    ExactMatrix diff = *t - ExactMatrix::scalar(t->rows(), m.spec().eps(a));
    if (!diff.is_zero() && result.eulerian) {
      result.eulerian = false;
      result.witness = a;
      result.defect = std::move(diff);
    }
  }
  return result;
}

bool check_euler_certificate(const GradedPresentation& m) {
  if (!m.euler_defects()) return false;
  const auto& spec = m.spec();
  const std::size_t r = spec.lattice_rank();
  std::vector<std::vector<std::size_t>> vars(r);
  for (std::size_t i = 0; i < m.n(); ++i) vars[spec.axis_of(i)].push_back(i);
  std::vector<std::set<int>> per_axis(r);
  for (const auto& c : *m.euler_defects()) {
    for (std::size_t k = 0; k < r; ++k) per_axis[k].insert(c[k]);
  }
  for (const auto& a : m.window().labels()) {
    const std::size_t dim = *m.dim_at(a);
    if (dim == 0) continue;
    for (std::size_t k = 0; k < r; ++k) {
      auto t = theta(m, a, vars[k]);
      if (!t) continue;
      ExactMatrix prod = ExactMatrix::identity(dim);
      for (int c : per_axis[k]) prod = prod * (*t - ExactMatrix::scalar(dim, a[k] + c));
      if (!prod.is_zero()) return false;
    }
  }
  return true;
}

std::pair<Label, Vector> apply_op(const GradedPresentation& m, const WeylOp& p, const Label& a,
                                  const Vector& v) {
  const auto deg = op_degree(p, m.spec());
  if (!deg) throw InhomogeneousOperator(p.str());
  const Label target = a + *deg;
  const auto tdim = m.dim_at(target);
  if (!m.dim_at(a) || !tdim) throw UncoveredRegion("label " + a.str() + " or " + target.str());
  if (v.size() != *m.dim_at(a)) throw ShapeMismatch("vector does not match piece " + a.str());
  Vector out(*tdim, 0);
  const auto& spec = m.spec();
  for (const auto& [mono, coeff] : p.terms()) {
    Vector cur = v;
    Label at = a;
    for (std::size_t i = 0; i < m.n(); ++i) {
      for (int t = 0; t < mono.d_exp[i]; ++t) {
        auto mat = m.d_map(i, at);
        if (!mat) throw UncoveredRegion("d" + std::to_string(i + 1) + " at " + at.str());
        cur = mat->apply(cur);
        at = at - spec.deg_x(i);
      }
    }
    for (std::size_t i = 0; i < m.n(); ++i) {
      for (int t = 0; t < mono.x_exp[i]; ++t) {
        auto mat = m.x_map(i, at);
        if (!mat) throw UncoveredRegion("x" + std::to_string(i + 1) + " at " + at.str());
        cur = mat->apply(cur);
        at = at + spec.deg_x(i);
      }
    }
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += coeff * cur[k];
  }
  return {target, out};
}

std::optional<ExactMatrix> x_power_map(const GradedPresentation& m, const std::vector<int>& e,
                                       const Label& a) {
  const auto start = m.dim_at(a);
  if (!start) return std::nullopt;
  ExactMatrix acc = ExactMatrix::identity(*start);
  Label at = a;
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (int t = 0; t < e[i]; ++t) {
      auto mat = m.x_map(i, at);
      if (!mat) return std::nullopt;
      acc = (*mat) * acc;
      at = at + m.spec().deg_x(i);
    }
  }
  return acc;
}

bool same_structure(const GradedPresentation& a, const GradedPresentation& b) {
  return a.spec() == b.spec() && a.window() == b.window() && a.dims() == b.dims() &&
         a.x_maps() == b.x_maps() && a.d_maps() == b.d_maps() &&
         a.euler_defects() == b.euler_defects();
}

}  // namespace weyldual
