#include "weyldual/verify.hpp"

#include <algorithm>
#include <future>

#include "weyldual/constructors.hpp"
#include "weyldual/dual.hpp"
#include "weyldual/errors.hpp"
#include "weyldual/recipe.hpp"

namespace weyldual {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "PASS";
    case Verdict::kFail:
      return "FAIL";
    case Verdict::kInconclusive:
      return "INCONCLUSIVE";
  }
  return "?";
}

Json TheoremReport::to_json() const {
  return Json{{"theorem", theorem}, {"recipe", recipe},   {"verdict", to_string(verdict)},
              {"left", left},       {"right", right},     {"notes", notes},
              {"details", details}};
}

namespace {

TheoremReport make_report(const std::string& theorem, const std::string& recipe) {
  TheoremReport r;
  r.theorem = theorem;
  r.recipe = recipe;
  return r;
}

Json totals_json(const CohomologyTable& t) {
  Json out = Json::array();
  for (const auto& [i, tot] : t.totals) out.push_back(tot.dim);
  return out;
}

/// Joint kernel of the d_i at a, or nullopt when some d_i is unknown there.
std::optional<std::vector<Vector>> joint_kernel(const GradedPresentation& m, const Label& a) {
  const auto dim = m.dim_at(a);
  if (!dim) return std::nullopt;
  std::vector<ExactMatrix> rows;
  for (std::size_t i = 0; i < m.n(); ++i) {
    auto mat = m.d_map(i, a);
    if (!mat) return std::nullopt;
    rows.push_back(std::move(*mat));
  }
  if (*dim == 0) return std::vector<Vector>{};
  return kernel_basis(vstack(rows));
}

struct LabelledVector {
  Label label;
  Vector v;
};

std::vector<LabelledVector> h0_basis(const GradedPresentation& m) {
  std::vector<LabelledVector> out;
  for (const auto& a : m.window().labels()) {
    auto ker = joint_kernel(m, a);
    if (!ker) continue;
    for (auto& v : *ker) out.push_back({a, std::move(v)});
  }
  return out;
}

Vector row_times(const Vector& mu, const ExactMatrix& a) {
  // mu^T * a
  return a.transpose().apply(mu);
}

}  // namespace

TheoremReport verify_duality(const GradedPresentation& m, const std::string& recipe,
                             const EngineOptions& opts) {
  TheoremReport r = make_report("duality", recipe);
  const auto primal = derham_cohomology(m, opts);
  const auto dual = derham_cohomology(matlis_dual(m), opts);
  r.left = totals_json(primal);
  Json reversed = Json::array();
  auto dv = dual.total_vector();
  for (auto it = dv.rbegin(); it != dv.rend(); ++it) reversed.push_back(*it);
  r.right = reversed;
  r.details = {{"primal_complete", primal.complete()}, {"dual_complete", dual.complete()}};
  if (!primal.complete() || !dual.complete()) {
    r.notes.push_back("totals not certified complete on this window");
    r.verdict = Verdict::kInconclusive;
    return r;
  }
  r.verdict = r.left == r.right ? Verdict::kPass : Verdict::kFail;
  return r;
}

SurjectionCount max_surjections_onto_E(const GradedPresentation& m, const EngineOptions& opts) {
  const auto table = derham_cohomology(m, opts);
  const int n = static_cast<int>(m.n());
  if (!table.totals.at(n).complete) {
    throw IncompleteWindow("H^" + std::to_string(n) + " total is not certified complete");
  }
  SurjectionCount out;
  out.s = table.total(n);

  const auto dual = matlis_dual(m);
  const auto h0 = h0_fast(dual);
  out.h0_dual = h0.total(0);
  out.h0_dual_complete = h0.complete();

  const auto& spec = m.spec();
  const Label D = spec.d_total();
  struct Component {
    GradedPresentation e;
    GradedMap phi;
  };
  std::vector<Component> comps;
  for (const auto& [b, mu] : h0_basis(dual)) {
    const Label c = -b - D;
    GradedPresentation e = injective_hull_E(spec, m.window().translated(b));
    GradedMap phi{b, {}};
    for (const auto& a : m.window().labels()) {
      const auto src = m.dim_at(a);
      const auto tgt = e.dim_at(a + b);
      if (!src || !tgt || *src == 0 || *tgt == 0) continue;
      std::vector<ExactMatrix::Triplet> t;
      const auto basis = inverse_monomial_basis(spec, a + b);
      for (std::size_t row = 0; row < basis.size(); ++row) {
        std::vector<int> beta(basis[row].size());
        for (std::size_t k = 0; k < beta.size(); ++k) beta[k] = -basis[row][k] - 1;
        auto xb = x_power_map(m, beta, a);
        if (!xb || !(a + spec.deg_monomial(beta) == c)) {
          throw PreconditionFailed("explicit surjection leaves the window at " + a.str());
        }
        const Vector r = row_times(mu, *xb);
        for (std::size_t col = 0; col < r.size(); ++col) {
          if (r[col] != 0) t.push_back({row, col, r[col]});
        }
      }
      phi.blocks.emplace(a, ExactMatrix::from_triplets(*tgt, *src, std::move(t)));
    }
    if (!check_d_linear(phi, m, e).ok) out.explicit_linear = false;
    comps.push_back({std::move(e), std::move(phi)});
  }
  for (const auto& a : m.window().labels()) {
    std::vector<ExactMatrix> rows;
    std::size_t want = 0;
    const auto src = m.dim_at(a);
    if (!src) continue;
    for (const auto& comp : comps) {
      auto block = map_block(comp.phi, m, comp.e, a);
      if (!block) continue;
      want += block->rows();
      rows.push_back(std::move(*block));
    }
    ++out.explicit_labels_checked;
    if (want == 0) continue;
    if (rank(vstack(rows)) != want) out.explicit_surjective = false;
  }
  return out;
}

std::size_t grhom_d_dim(const GradedPresentation& m) {
  const auto& spec = m.spec();
  const Label D = spec.d_total();
  std::size_t total = 0;
  for (const auto& a0 : m.window().labels()) {
    if (m.dim_at(a0).value_or(0) == 0) continue;
    const Label d = -D - a0;
    const GradedPresentation e = injective_hull_E(spec, m.window().translated(d));

    // Unknown blocks f_a : M_a -> E_{a+d}, row-major.
    std::map<Label, std::size_t> offset;
    std::size_t unknowns = 0;
    for (const auto& a : m.window().labels()) {
      const std::size_t src = m.dim_at(a).value_or(0);
      const std::size_t tgt = e.dim_at(a + d).value_or(0);
      if (src == 0 || tgt == 0) continue;
      offset[a] = unknowns;
      unknowns += src * tgt;
    }
    if (!offset.count(a0)) continue;

    std::vector<ExactMatrix::Triplet> eqs;
    std::size_t row = 0;
    auto var = [&](const Label& a, std::size_t r, std::size_t c) {
      return offset.at(a) + r * m.dim_at(a).value() + c;
    };
    // f_{a'} * A_M[a] - A_E[a+d] * f_a = 0 with a' the target of the action.
    auto add_relation = [&](const Label& a, const Label& a2, const std::optional<ExactMatrix>& am,
                            const std::optional<ExactMatrix>& ae) {
      if (!am || !ae) return;
      const std::size_t rows = e.dim_at(a2 + d).value();
      const std::size_t cols = m.dim_at(a).value();
      const bool has_a = offset.count(a) > 0;
      const bool has_a2 = offset.count(a2) > 0;
      if (!has_a && !has_a2) return;
      const ExactMatrix am_t = am->transpose();
      std::map<std::size_t, Rational> coeffs;
      for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
          coeffs.clear();
          if (has_a2) {
            for (const auto& [k, v] : am_t.row(c)) coeffs[var(a2, r, k)] += v;
          }
          if (has_a) {
            for (const auto& [k, v] : ae->row(r)) coeffs[var(a, k, c)] -= v;
          }
          bool any = false;
          for (const auto& [col, v] : coeffs) {
            if (v != 0) {
              eqs.push_back({row, col, v});
              any = true;
            }
          }
          if (any) ++row;
        }
      }
    };
    for (const auto& a : m.window().labels()) {
      if (m.dim_at(a).value_or(0) == 0) continue;
      for (std::size_t i = 0; i < spec.n; ++i) {
        const Label up = a + spec.deg_x(i);
        const Label down = a - spec.deg_x(i);
        if (m.dim_at(up) && e.dim_at(up + d)) {
          add_relation(a, up, m.x_map(i, a), e.x_map(i, a + d));
        }
        if (m.dim_at(down) && e.dim_at(down + d)) {
          add_relation(a, down, m.d_map(i, a), e.d_map(i, a + d));
        }
      }
    }
    const ExactMatrix system = ExactMatrix::from_triplets(row, unknowns, eqs);
    std::vector<ExactMatrix::Triplet> pinned = eqs;
    std::size_t prow = row;
    const std::size_t width = m.dim_at(a0).value() * e.dim_at(a0 + d).value();
    for (std::size_t k = 0; k < width; ++k) pinned.push_back({prow++, offset.at(a0) + k, 1});
    const ExactMatrix with_pins = ExactMatrix::from_triplets(prow, unknowns, std::move(pinned));
    total += rank(with_pins) - rank(system);
  }
  return total;
}

InjectionCount max_injections_from_R(const GradedPresentation& m, const EngineOptions& opts) {
  const auto table = derham_cohomology(m, opts);
  if (!table.totals.at(0).complete) throw IncompleteWindow("H^0 total is not certified complete");
  InjectionCount out;
  out.s = table.total(0);
  const auto& spec = m.spec();
  struct Component {
    GradedPresentation r;
    GradedMap psi;
  };
  std::vector<Component> comps;
  for (const auto& [a, v] : h0_basis(m)) {
    GradedPresentation r = polynomial_ring(spec, m.window().translated(-a));
    GradedMap psi{a, {}};
    for (const auto& l : r.window().labels()) {
      const auto basis = polynomial_basis(spec, l);
      const auto tgt = m.dim_at(l + a);
      if (basis.empty() || !tgt || *tgt == 0) continue;
      std::vector<ExactMatrix::Triplet> t;
      for (std::size_t col = 0; col < basis.size(); ++col) {
        auto xa = x_power_map(m, basis[col], a);
        if (!xa) throw PreconditionFailed("injection leaves the window at " + l.str());
        const Vector w = xa->apply(v);
        for (std::size_t row = 0; row < w.size(); ++row) {
          if (w[row] != 0) t.push_back({row, col, w[row]});
        }
      }
      psi.blocks.emplace(l, ExactMatrix::from_triplets(*tgt, basis.size(), std::move(t)));
    }
    if (!check_d_linear(psi, r, m).ok) out.linear = false;
    comps.push_back({std::move(r), std::move(psi)});
  }
  for (const auto& t : m.window().labels()) {
    std::vector<ExactMatrix> cols;
    std::size_t want = 0;
    for (const auto& comp : comps) {
      auto block = map_block(comp.psi, comp.r, m, t - comp.psi.degree);
      if (!block) continue;
      want += block->cols();
      cols.push_back(std::move(*block));
    }
    ++out.labels_checked;
    if (want == 0) continue;
    if (rank(hstack(cols)) != want) out.injective = false;
  }
  return out;
}

TheoremReport verify_surjections(const GradedPresentation& m, const std::string& recipe,
                                 const EngineOptions& opts) {
  TheoremReport r = make_report("surjections", recipe);
  SurjectionCount c;
  try {
    c = max_surjections_onto_E(m, opts);
  } catch (const IncompleteWindow& e) {
    r.notes.push_back(e.what());
    return r;
  }
  r.left = c.s;
  r.right = c.h0_dual;
  r.details = {{"h0_dual_complete", c.h0_dual_complete},
               {"explicit_linear", c.explicit_linear},
               {"explicit_surjective", c.explicit_surjective},
               {"explicit_labels_checked", c.explicit_labels_checked}};
  bool ok = c.s == c.h0_dual && c.explicit_linear && c.explicit_surjective;
  if (m.n() <= 2) {
    const std::size_t g = grhom_d_dim(m);
    r.details["grhom_d_dim"] = g;
    ok = ok && g == c.s;
  }
  if (!c.h0_dual_complete) {
    r.notes.push_back("H^0 of the dual is not certified complete");
    return r;
  }
  r.verdict = ok ? Verdict::kPass : Verdict::kFail;
  return r;
}

TheoremReport verify_injections(const GradedPresentation& m, const std::string& recipe,
                                const EngineOptions& opts) {
  TheoremReport r = make_report("injections", recipe);
  InjectionCount c;
  try {
    c = max_injections_from_R(m, opts);
  } catch (const IncompleteWindow& e) {
    r.notes.push_back(e.what());
    return r;
  }
  const auto fast = h0_fast(m);
  r.left = c.s;
  r.right = fast.total(0);
  r.details = {{"linear", c.linear},
               {"injective", c.injective},
               {"labels_checked", c.labels_checked}};
  r.verdict = c.linear && c.injective && c.s == fast.total(0) ? Verdict::kPass : Verdict::kFail;
  return r;
}

TheoremReport verify_noninjectivity(std::optional<Window> window) {
  TheoremReport r = make_report("noninjectivity", "XD");
  const auto seq = ses_xd(window);
  bool exact = true;
  bool complex = true;
  for (const auto& a : seq.middle.window().labels()) {
    const std::size_t de = seq.e.dim_at(a).value_or(0);
    const std::size_t dm = seq.middle.dim_at(a).value_or(0);
    const std::size_t dr = seq.r.dim_at(a).value_or(0);
    const auto i = map_block(seq.inject, seq.e, seq.middle, a);
    const auto p = map_block(seq.project, seq.middle, seq.r, a);
    if (!i || !p) {
      exact = false;
      continue;
    }
    if (!((*p) * (*i)).is_zero()) complex = false;
    const std::size_t ri = rank(*i);
    const std::size_t rp = rank(*p);
    if (de + dr != dm || ri != de || rp != dr || ri != dm - rp) exact = false;
  }
  const bool inject_linear = check_d_linear(seq.inject, seq.e, seq.middle).ok;
  const bool project_linear = check_d_linear(seq.project, seq.middle, seq.r).ok;

  const auto shifted = shift(seq.middle, Label{-1});
  const auto table = derham_cohomology(seq.middle);
  const auto table_shifted = derham_cohomology(shifted);
  std::optional<std::size_t> s_shifted;
  std::optional<std::size_t> s_e;
  try {
    s_shifted = max_surjections_onto_E(shifted).s;
    s_e = max_surjections_onto_E(seq.e).s;
  } catch (const IncompleteWindow& e) {
    r.notes.push_back(e.what());
  }
  r.left = s_shifted ? Json(*s_shifted) : Json(nullptr);
  r.right = s_e ? Json(*s_e) : Json(nullptr);
  r.details = {{"degreewise_exact", exact},
               {"complex", complex},
               {"inject_d_linear", inject_linear},
               {"project_d_linear", project_linear},
               {"middle_totals", totals_json(table)},
               {"shifted_middle_totals", totals_json(table_shifted)}};
  if (!s_shifted || !s_e || !table.complete() || !table_shifted.complete()) return r;
  // A splitting would give a surjection from the middle term onto E.
  const bool nonsplit = *s_shifted == 0 && *s_e == 1;
  if (nonsplit) r.notes.push_back("no surjection onto E from the middle term, so no splitting");
  const bool h_zero = table.total(0) == 0 && table.total(1) == 0;
  r.verdict = exact && complex && inject_linear && project_linear && nonsplit && h_zero
                  ? Verdict::kPass
                  : Verdict::kFail;
  return r;
}

TheoremReport verify_eulerian_duality(const GradedPresentation& m, const std::string& recipe) {
  TheoremReport r = make_report("eulerian", recipe);
  const auto primal = is_eulerian(m);
  r.left = primal.eulerian;
  if (!primal.eulerian) {
    r.notes.push_back("precondition failed: module is not Eulerian");
    if (primal.witness) r.details["witness"] = label_to_json(*primal.witness);
    return r;
  }
  const auto dual = is_eulerian(matlis_dual(m));
  r.right = dual.eulerian;
  r.details = {{"labels_checked", primal.checked}, {"dual_labels_checked", dual.checked}};
  if (dual.witness) r.details["dual_witness"] = label_to_json(*dual.witness);
  r.verdict = dual.eulerian ? Verdict::kPass : Verdict::kFail;
  return r;
}

TheoremReport verify_koszul_swap(const GradedPresentation& m, const std::string& recipe,
                                 const EngineOptions& opts) {
  TheoremReport r = make_report("koszul", recipe);
  const auto co = derham_cohomology(m, opts);
  const auto ho = koszul_homology(m, -1, opts);
  const int n = static_cast<int>(m.n());
  Json reversed = Json::array();
  for (int i = n; i >= 0; --i) reversed.push_back(co.total(i));
  r.left = totals_json(ho);
  r.right = reversed;
  // Per-label: h_i at a equals h^{n-i} at a + D.
  const Label D = m.spec().d_total();
  std::size_t compared = 0;
  bool per_label = true;
  for (const auto& [key, e] : ho.entries) {
    if (!e.certified) continue;
    auto it = co.entries.find({key.first + D, n - key.second});
    const std::size_t other = it == co.entries.end() ? 0 : it->second.dim;
    if (it != co.entries.end() && !it->second.certified) continue;
    ++compared;
    if (other != e.dim) per_label = false;
  }
  r.details = {{"per_label_agree", per_label}, {"entries_compared", compared}};
  if (!co.complete() || !ho.complete()) {
    r.notes.push_back("totals not certified complete on this window");
    return r;
  }
  r.verdict = per_label && r.left == r.right ? Verdict::kPass : Verdict::kFail;
  return r;
}

TheoremReport verify_double_dual(const GradedPresentation& m, const std::string& recipe) {
  TheoremReport r = make_report("double_dual", recipe);
  const bool ok = evaluation_check(m);
  r.left = ok;
  r.right = true;
  r.verdict = ok ? Verdict::kPass : Verdict::kFail;
  return r;
}

const std::vector<std::string>& theorem_names() {
  static const std::vector<std::string> names{"duality", "surjections", "injections", "eulerian",
                                              "koszul",  "double_dual", "noninjectivity"};
  return names;
}

TheoremReport run_theorem(const std::string& theorem, const std::string& recipe,
                          const BuildOptions& build, const EngineOptions& opts) {
  if (theorem == "noninjectivity") return verify_noninjectivity(build.window);
  const auto m = build_recipe(parse_recipe(recipe), build);
  if (theorem == "duality") return verify_duality(m, recipe, opts);
  if (theorem == "surjections") return verify_surjections(m, recipe, opts);
  if (theorem == "injections") return verify_injections(m, recipe, opts);
  if (theorem == "eulerian") return verify_eulerian_duality(m, recipe);
  if (theorem == "koszul") return verify_koszul_swap(m, recipe, opts);
  if (theorem == "double_dual") return verify_double_dual(m, recipe);
  throw ParseError("unknown theorem '" + theorem + "'");
}

const std::vector<std::string>& zoo_recipes() {
  static const std::vector<std::string> zoo{
      "R(n=1)",          "R(n=2)",           "R(n=3)",
      "E(n=1)",          "E(n=2)",           "E(n=3)",
      "shift(R(n=2),2)", "shift(R(n=2),-2)", "shift(E(n=2),2)",
      "shift(E(n=2),-2)", "XD",              "Hvars(n=2,S=1)",
      "Hvars(n=2,S=1,2)", "Hvars(n=3,S=1,2)", "sum(E(n=2),E(n=2))",
      "sum(R(n=2),R(n=2))", "sum(R(n=1),XD)"};
  return zoo;
}

std::vector<TheoremReport> run_all(unsigned workers) {
  struct Job {
    std::string theorem;
    std::string recipe;
  };
  std::vector<Job> jobs;
  for (const auto& t : theorem_names()) {
    if (t == "noninjectivity") {
      jobs.push_back({t, "XD"});
      continue;
    }
    for (const auto& rec : zoo_recipes()) {
      // Shifted modules are not Eulerian, so the check does not apply.
      if (t == "eulerian" && parse_recipe(rec).kind == Recipe::Kind::kShift) continue;
      jobs.push_back({t, rec});
    }
  }
  std::vector<TheoremReport> out(jobs.size());
  workers = std::max(1u, workers);
  std::vector<std::future<void>> tasks;
  for (unsigned w = 0; w < workers; ++w) {
    tasks.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t k = w; k < jobs.size(); k += workers) {
        out[k] = run_theorem(jobs[k].theorem, jobs[k].recipe);
      }
    }));
  }
  for (auto& t : tasks) t.get();
  return out;
}

}  // namespace weyldual
