#pragma once

// Test-only generators and brute-force oracles.

#include <optional>
#include <random>
#include <vector>

#include "weyldual/graded_map.hpp"
#include "weyldual/matrix.hpp"
#include "weyldual/presentation.hpp"

namespace wdtest {

using namespace weyldual;

inline ExactMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols,
                                 int lo = -5, int hi = 5, double density = 1.0) {
  std::uniform_int_distribution<int> val(lo, hi);
  std::bernoulli_distribution keep(density);
  std::vector<ExactMatrix::Triplet> t;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (keep(rng)) t.push_back({r, c, Rational(val(rng))});
    }
  }
  return ExactMatrix::from_triplets(rows, cols, std::move(t));
}

/// Textbook Gaussian elimination on rationals, first nonzero pivot.
inline std::size_t naive_rank(const ExactMatrix& a) {
  std::vector<std::vector<Rational>> m(a.rows(), std::vector<Rational>(a.cols()));
  for (const auto& t : a.triplets()) m[t.row][t.col] = t.value;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
    std::size_t p = rank;
    while (p < a.rows() && m[p][c] == 0) ++p;
    if (p == a.rows()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = rank + 1; r < a.rows(); ++r) {
      if (m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < a.cols(); ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// Unit lower times unit upper triangular, so always invertible.
inline std::pair<ExactMatrix, ExactMatrix> random_invertible(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> val(-3, 3);
  std::vector<Rational> l(n * n), u(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        l[i * n + j] = u[i * n + j] = 1;
      } else if (i > j) {
        l[i * n + j] = val(rng);
      } else {
        u[i * n + j] = val(rng);
      }
    }
  }
  const ExactMatrix L = ExactMatrix::from_dense(n, n, l);
  const ExactMatrix U = ExactMatrix::from_dense(n, n, u);
  // Inverse by forward/back substitution on the identity.
  auto solve_lower = [&](const std::vector<Rational>& m, bool lower) {
    std::vector<Rational> inv(n * n);
    for (std::size_t col = 0; col < n; ++col) {
      std::vector<Rational> x(n);
      for (std::size_t s = 0; s < n; ++s) {
        const std::size_t i = lower ? s : n - 1 - s;
        Rational acc = i == col ? 1 : 0;
        for (std::size_t k = 0; k < n; ++k) {
          if ((lower && k < i) || (!lower && k > i)) acc -= m[i * n + k] * x[k];
        }
        x[i] = acc;
      }
      for (std::size_t i = 0; i < n; ++i) inv[i * n + col] = x[i];
    }
    return ExactMatrix::from_dense(n, n, inv);
  };
  const ExactMatrix Linv = solve_lower(l, true);
  const ExactMatrix Uinv = solve_lower(u, false);
  return {L * U, Uinv * Linv};
}

/// The same module in a random basis of every piece.
inline GradedPresentation conjugate(const GradedPresentation& m, std::mt19937& rng) {
  std::map<Label, std::pair<ExactMatrix, ExactMatrix>> basis;
  for (const auto& [a, k] : m.dims()) basis.emplace(a, random_invertible(rng, k));
  auto change = [&](const std::vector<ActionMaps>& maps, bool raising) {
    std::vector<ActionMaps> out(maps.size());
    for (std::size_t i = 0; i < maps.size(); ++i) {
      for (const auto& [a, mat] : maps[i]) {
        const Label t = raising ? a + m.spec().deg_x(i) : a - m.spec().deg_x(i);
        out[i].emplace(a, basis.at(t).first * mat * basis.at(a).second);
      }
    }
    return out;
  };
  return GradedPresentation(m.spec(), m.window(), m.dims(), change(m.x_maps(), true),
                            change(m.d_maps(), false), std::nullopt, m.euler_defects());
}

/// Whether the Weyl relations hold on every box piece where all composites
/// stay covered. Brute force over the raw action maps; missing pieces are zero.
inline bool relations_hold(const GradedPresentation& m) {
  const auto& spec = m.spec();
  auto op = [&](bool raise, std::size_t i, const Label& a) -> std::optional<ExactMatrix> {
    const Label t = raise ? a + spec.deg_x(i) : a - spec.deg_x(i);
    const auto s = m.dim_at(a);
    const auto r = m.dim_at(t);
    if (!s || !r) return std::nullopt;
    const auto& maps = raise ? m.x_maps() : m.d_maps();
    const auto it = maps[i].find(a);
    if (it != maps[i].end()) return it->second;
    return ExactMatrix(*r, *s);
  };
  auto both = [&](bool first, std::size_t i, bool second, std::size_t j,
                  const Label& a) -> std::optional<ExactMatrix> {
    const auto f = op(first, i, a);
    if (!f) return std::nullopt;
    const auto g = op(second, j, first ? a + spec.deg_x(i) : a - spec.deg_x(i));
    if (!g) return std::nullopt;
    return *g * *f;
  };
  for (const auto& a : m.window().labels()) {
    const std::size_t k = *m.dim_at(a);
    if (k == 0) continue;
    for (std::size_t i = 0; i < m.n(); ++i) {
      for (std::size_t j = 0; j < m.n(); ++j) {
        for (bool raise : {true, false}) {
          const auto p = both(raise, i, raise, j, a);
          const auto q = both(raise, j, raise, i, a);
          if (p && q && !(*p - *q).is_zero()) return false;
        }
        // d_i x_j - x_j d_i = delta_ij.
        const auto dx = both(true, j, false, i, a);
        const auto xd = both(false, i, true, j, a);
        if (dx && xd) {
          const auto c = *dx - *xd;
          if (i == j ? !(c - ExactMatrix::identity(k)).is_zero() : !c.is_zero()) return false;
        }
      }
    }
  }
  return true;
}

/// Dimension of the space of D-linear maps M -> N of degree d, solving the
/// commutation equations over M's window. Blocks at labels whose pieces are
/// uncovered are left free.
inline std::size_t hom_dim(const GradedPresentation& m, const GradedPresentation& n,
                           const Label& d) {
  std::map<Label, std::size_t> offset;
  std::size_t unknowns = 0;
  for (const auto& a : m.window().labels()) {
    const std::size_t s = m.dim_at(a).value_or(0);
    const std::size_t t = n.dim_at(a + d).value_or(0);
    if (s == 0 || t == 0) continue;
    offset[a] = unknowns;
    unknowns += s * t;
  }
  std::vector<ExactMatrix::Triplet> eqs;
  std::size_t row = 0;
  auto relation = [&](const Label& a, const Label& a2, const ExactMatrix& am,
                      const ExactMatrix& an) {
    const std::size_t cols = *m.dim_at(a);
    const std::size_t rows = *n.dim_at(a2 + d);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        bool any = false;
        if (offset.count(a2)) {
          for (std::size_t k = 0; k < *m.dim_at(a2); ++k) {
            const Rational v = am.at(k, c);
            if (v != 0) {
              eqs.push_back({row, offset[a2] + r * *m.dim_at(a2) + k, v});
              any = true;
            }
          }
        }
        if (offset.count(a)) {
          for (std::size_t k = 0; k < *n.dim_at(a + d); ++k) {
            const Rational v = an.at(r, k);
            if (v != 0) {
              eqs.push_back({row, offset[a] + k * cols + c, -v});
              any = true;
            }
          }
        }
        if (any) ++row;
      }
    }
  };
  for (const auto& a : m.window().labels()) {
    if (m.dim_at(a).value_or(0) == 0) continue;
    for (std::size_t i = 0; i < m.n(); ++i) {
      const Label e = m.spec().deg_x(i);
      auto mx = m.x_map(i, a);
      auto nx = n.x_map(i, a + d);
      if (mx && nx) relation(a, a + e, *mx, *nx);
      auto md = m.d_map(i, a);
      auto nd = n.d_map(i, a + d);
      if (md && nd) relation(a, a - e, *md, *nd);
    }
  }
  return unknowns - rank(ExactMatrix::from_triplets(row, unknowns, std::move(eqs)));
}

}  // namespace wdtest
