#include "weyldual/constructors.hpp"

#include <map>
#include <string>
#include <vector>

#include "weyldual/errors.hpp"

namespace weyldual {

Window default_window(const GradingSpec& spec) {
  if (spec.mode == GradingMode::kCoarse) {
    return Window::box(Label{-static_cast<int>(spec.n) - 6}, Label{6});
  }
  return Window::box(Label(std::vector<int>(spec.n, -7)), Label(std::vector<int>(spec.n, 6)));
}

namespace {

/// Modules with a basis of Laurent monomials x^b, where each b_i is either
/// always <= -1 ("negative" variables) or always >= 0. x_i and d_i act as on
/// Laurent monomials, followed by projection onto the basis.
class MonomialModule {
 public:
  MonomialModule(const GradingSpec& spec, std::vector<bool> negative)
      : spec_(spec), negative_(std::move(negative)) {}

  bool member(const std::vector<int>& b) const {
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (negative_[i] ? b[i] > -1 : b[i] < 0) return false;
    }
    return true;
  }

  /// Basis of the piece at label a, ordered lexicographically by
  /// magnitude (b_i, or -b_i - 1 for negative variables).
  std::vector<std::vector<int>> basis(const Label& a) const {
    std::vector<std::vector<int>> out;
    if (spec_.mode == GradingMode::kFine) {
      if (member(a.coords())) out.push_back(a.coords());
      return out;
    }
    // Coarse pieces are finite only when all variables share a sign.
    const int total = negative_.front() ? -a[0] - static_cast<int>(spec_.n) : a[0];
    if (total < 0) return out;
    std::vector<int> mag(spec_.n, 0);
    compositions(total, 0, mag, out);
    return out;
  }

  std::vector<int> from_magnitude(const std::vector<int>& mag) const {
    std::vector<int> b(mag.size());
    for (std::size_t i = 0; i < mag.size(); ++i) b[i] = negative_[i] ? -mag[i] - 1 : mag[i];
    return b;
  }

  Window flagged(Window w) const {
    if (spec_.mode == GradingMode::kCoarse) {
      if (negative_.front()) {
        w.vanish_above[0] = w.hi[0] >= -static_cast<int>(spec_.n);
      } else {
        w.vanish_below[0] = w.lo[0] <= 0;
      }
      return w;
    }
    for (std::size_t k = 0; k < spec_.n; ++k) {
      if (negative_[k]) {
        w.vanish_above[k] = w.hi[k] >= -1;
      } else {
        w.vanish_below[k] = w.lo[k] <= 0;
      }
    }
    return w;
  }

  GradedPresentation build(const Window& raw) const {
    const Window w = flagged(raw);
    std::map<Label, std::size_t> dims;
    BasisNames names;
    std::map<Label, std::map<std::vector<int>, std::size_t>> index;
    for (const auto& a : w.labels()) {
      auto basis = this->basis(a);
      dims[a] = basis.size();
      auto& idx = index[a];
      auto& nm = names[a];
      for (std::size_t k = 0; k < basis.size(); ++k) {
        idx.emplace(basis[k], k);
        nm.push_back(monomial_name(basis[k]));
      }
    }
    std::vector<ActionMaps> x(spec_.n);
    std::vector<ActionMaps> d(spec_.n);
    for (const auto& a : w.labels()) {
      if (dims[a] == 0) continue;
      for (std::size_t i = 0; i < spec_.n; ++i) {
        for (int dir : {+1, -1}) {
          const Label target = dir > 0 ? a + spec_.deg_x(i) : a - spec_.deg_x(i);
          if (!w.in_box(target) || dims[target] == 0) continue;
          std::vector<ExactMatrix::Triplet> t;
          for (const auto& [b, col] : index[a]) {
            std::vector<int> nb = b;
            nb[i] += dir;
            if (!member(nb)) continue;
            const Rational coeff = dir > 0 ? 1 : b[i];
            if (coeff != 0) t.push_back({index[target].at(nb), col, coeff});
          }
          auto mat = ExactMatrix::from_triplets(dims[target], dims[a], std::move(t));
          (dir > 0 ? x : d)[i].emplace(a, std::move(mat));
        }
      }
    }
    return GradedPresentation(spec_, w, std::move(dims), std::move(x), std::move(d),
                              std::move(names), std::set<Label>{spec_.zero()});
  }

  static std::string monomial_name(const std::vector<int>& b) {
    std::string s;
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (b[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += "x" + std::to_string(i + 1);
      if (b[i] != 1) s += "^" + std::to_string(b[i]);
    }
    return s.empty() ? "1" : s;
  }

 private:
  void compositions(int remaining, std::size_t pos, std::vector<int>& mag,
                    std::vector<std::vector<int>>& out) const {
    if (pos + 1 == spec_.n) {
      mag[pos] = remaining;
      out.push_back(from_magnitude(mag));
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      mag[pos] = v;
      compositions(remaining - v, pos + 1, mag, out);
    }
  }

  GradingSpec spec_;
  std::vector<bool> negative_;
};

Window check_window(const GradingSpec& spec, std::optional<Window> window) {
  Window w = window ? *window : default_window(spec);
  if (w.rank() != spec.lattice_rank()) {
    throw IncompatibleSpecs("window rank does not match the grading");
  }
  return w;
}

}  // namespace

GradedPresentation polynomial_ring(const GradingSpec& spec, std::optional<Window> window) {
  return MonomialModule(spec, std::vector<bool>(spec.n, false)).build(check_window(spec, window));
}

GradedPresentation injective_hull_E(const GradingSpec& spec, std::optional<Window> window) {
  return MonomialModule(spec, std::vector<bool>(spec.n, true)).build(check_window(spec, window));
}

GradedPresentation local_coh_vars(const GradingSpec& spec, const std::set<std::size_t>& vars,
                                  std::optional<Window> window) {
  if (spec.mode != GradingMode::kFine) {
    throw CoarseModeUnsupported("local cohomology at a variable ideal needs the fine grading");
  }
  if (vars.empty()) throw PreconditionFailed("variable set must be nonempty");
  std::vector<bool> negative(spec.n, false);
  for (std::size_t i : vars) {
    if (i >= spec.n) throw PreconditionFailed("variable index out of range");
    negative[i] = true;
  }
  return MonomialModule(spec, std::move(negative)).build(check_window(spec, window));
}

GradedPresentation cyclic_xd(std::optional<Window> window) {
  const GradingSpec spec{1, GradingMode::kCoarse};
  const Window w = check_window(spec, window);
  std::map<Label, std::size_t> dims;
  BasisNames names;
  std::vector<ActionMaps> x(1);
  std::vector<ActionMaps> d(1);
  for (const auto& l : w.labels()) {
    const int a = l[0];
    dims[l] = 1;
    if (a > 1) {
      names[l] = {"x^" + std::to_string(a)};
    } else if (a == 1) {
      names[l] = {"x"};
    } else if (a == 0) {
      names[l] = {"1"};
    } else if (a == -1) {
      names[l] = {"d"};
    } else {
      names[l] = {"d^" + std::to_string(-a)};
    }
    // x * x^a = x^(a+1); x * d = xd = 0; x * d^b = (1-b) d^(b-1).
    if (w.in_box(Label{a + 1})) {
      const Rational c = a >= 0 ? Rational(1) : Rational(1 + a);
      x[0].emplace(l, ExactMatrix::from_dense(1, 1, {c}));
    }
    // d * x^a = a x^(a-1); d * 1 = d; d * d^b = d^(b+1).
    if (w.in_box(Label{a - 1})) {
      const Rational c = a >= 1 ? Rational(a) : Rational(1);
      d[0].emplace(l, ExactMatrix::from_dense(1, 1, {c}));
    }
  }
  return GradedPresentation(spec, w, std::move(dims), std::move(x), std::move(d),
                            std::move(names), std::set<Label>{spec.zero()});
}

std::vector<std::vector<int>> polynomial_basis(const GradingSpec& spec, const Label& a) {
  return MonomialModule(spec, std::vector<bool>(spec.n, false)).basis(a);
}

std::vector<std::vector<int>> inverse_monomial_basis(const GradingSpec& spec, const Label& a) {
  return MonomialModule(spec, std::vector<bool>(spec.n, true)).basis(a);
}

XdSequence ses_xd(std::optional<Window> window) {
  const GradingSpec spec{1, GradingMode::kCoarse};
  const Window w = check_window(spec, window);
  XdSequence seq{injective_hull_E(spec, w), cyclic_xd(w), polynomial_ring(spec, w),
                 GradedMap{spec.zero(), {}}, GradedMap{spec.zero(), {}}};
  for (const auto& l : w.labels()) {
    const int a = l[0];
    if (a <= -1) {
      const int b = -a;
      Integer fact = 1;
      for (int k = 2; k < b; ++k) fact *= k;
      const Rational c = Rational((b - 1) % 2 ? -1 : 1) / Rational(fact);
      seq.inject.blocks.emplace(l, ExactMatrix::from_dense(1, 1, {c}));
    } else {
      seq.project.blocks.emplace(l, ExactMatrix::identity(1));
    }
  }
  return seq;
}

}  // namespace weyldual
