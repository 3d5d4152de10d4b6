#include "weyldual/matrix.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "weyldual/errors.hpp"

namespace weyldual {

namespace {

std::string shape(const ExactMatrix& a) {
  return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

constexpr std::size_t kDenseRankLimit = 4096;

}  // namespace

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational");
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  bool seen_digit = false;
  bool seen_slash = false;
  bool digit_after_slash = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c >= '0' && c <= '9') {
      seen_digit = true;
      if (seen_slash) digit_after_slash = true;
    } else if (c == '/' && !seen_slash && seen_digit) {
      seen_slash = true;
    } else {
      throw ParseError("bad rational '" + text + "'");
    }
  }
  if (!seen_digit || (seen_slash && !digit_after_slash)) {
    throw ParseError("bad rational '" + text + "'");
  }
  const std::string body = text[0] == '+' ? text.substr(1) : text;
  Rational q;
  q.set_str(body, 10);
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), row_start_(rows + 1, 0) {}

ExactMatrix ExactMatrix::from_triplets(std::size_t rows, std::size_t cols,
                                       std::vector<Triplet> triplets) {
  for (const auto& t : triplets) {
    if (t.row >= rows || t.col >= cols) {
      throw ShapeMismatch("entry (" + std::to_string(t.row) + "," +
                          std::to_string(t.col) + ") outside " +
                          std::to_string(rows) + "x" + std::to_string(cols));
    }
  }
  std::stable_sort(triplets.begin(), triplets.end(),
                   [](const Triplet& a, const Triplet& b) {
                     return a.row != b.row ? a.row < b.row : a.col < b.col;
                   });
  ExactMatrix m(rows, cols);
  std::vector<std::size_t> counts(rows, 0);
  for (std::size_t k = 0; k < triplets.size();) {
    std::size_t j = k;
    Rational sum = 0;
    while (j < triplets.size() && triplets[j].row == triplets[k].row &&
           triplets[j].col == triplets[k].col) {
      Rational v = triplets[j].value;
      v.canonicalize();
      sum += v;
      ++j;
    }
    if (sum != 0) {
      m.entries_.push_back({triplets[k].col, sum});
      ++counts[triplets[k].row];
    }
    k = j;
  }
  for (std::size_t r = 0; r < rows; ++r) {
    m.row_start_[r + 1] = m.row_start_[r] + counts[r];
  }
  return m;
}

ExactMatrix ExactMatrix::from_dense(std::size_t rows, std::size_t cols,
                                    const std::vector<Rational>& row_major) {
  if (row_major.size() != rows * cols) {
    throw ShapeMismatch("dense data has " + std::to_string(row_major.size()) +
                        " entries, expected " + std::to_string(rows * cols));
  }
  std::vector<Triplet> t;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (row_major[r * cols + c] != 0) t.push_back({r, c, row_major[r * cols + c]});
    }
  }
  return from_triplets(rows, cols, std::move(t));
}

ExactMatrix ExactMatrix::identity(std::size_t n) { return scalar(n, 1); }

ExactMatrix ExactMatrix::scalar(std::size_t n, const Rational& c) {
  std::vector<Triplet> t;
  if (c != 0) {
    for (std::size_t i = 0; i < n; ++i) t.push_back({i, i, c});
  }
  return from_triplets(n, n, std::move(t));
}

std::span<const ExactMatrix::Entry> ExactMatrix::row(std::size_t r) const {
  return {entries_.data() + row_start_[r], row_start_[r + 1] - row_start_[r]};
}

Rational ExactMatrix::at(std::size_t r, std::size_t c) const {
  for (const auto& e : row(r)) {
    if (e.col == c) return e.value;
  }
  return 0;
}

std::vector<ExactMatrix::Triplet> ExactMatrix::triplets() const {
  std::vector<Triplet> out;
  out.reserve(entries_.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& e : row(r)) out.push_back({r, e.col, e.value});
  }
  return out;
}

std::vector<Rational> ExactMatrix::to_dense() const {
  std::vector<Rational> d(rows_ * cols_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& e : row(r)) d[r * cols_ + e.col] = e.value;
  }
  return d;
}

ExactMatrix ExactMatrix::transpose() const {
  auto t = triplets();
  for (auto& x : t) std::swap(x.row, x.col);
  return from_triplets(cols_, rows_, std::move(t));
}

Vector ExactMatrix::apply(const Vector& v) const {
  if (v.size() != cols_) {
    throw ShapeMismatch("vector of size " + std::to_string(v.size()) +
                        " applied to " + shape(*this));
  }
  Vector out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& e : row(r)) out[r] += e.value * v[e.col];
  }
  return out;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.rows()) {
    throw ShapeMismatch("cannot multiply " + shape(a) + " by " + shape(b));
  }
  std::vector<ExactMatrix::Triplet> t;
  std::map<std::size_t, Rational> acc;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    acc.clear();
    for (const auto& ea : a.row(r)) {
      for (const auto& eb : b.row(ea.col)) acc[eb.col] += ea.value * eb.value;
    }
    for (auto& [c, v] : acc) {
      if (v != 0) t.push_back({r, c, v});
    }
  }
  return ExactMatrix::from_triplets(a.rows(), b.cols(), std::move(t));
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeMismatch("cannot add " + shape(a) + " and " + shape(b));
  }
  auto t = a.triplets();
  for (auto& x : b.triplets()) t.push_back(std::move(x));
  return ExactMatrix::from_triplets(a.rows(), a.cols(), std::move(t));
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
  return a + Rational(-1) * b;
}

ExactMatrix operator*(const Rational& c, const ExactMatrix& a) {
  auto t = a.triplets();
  for (auto& x : t) x.value *= c;
  return ExactMatrix::from_triplets(a.rows(), a.cols(), std::move(t));
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.row_start_ != b.row_start_) {
    return false;
  }
  for (std::size_t k = 0; k < a.entries_.size(); ++k) {
    if (a.entries_[k].col != b.entries_[k].col ||
        a.entries_[k].value != b.entries_[k].value) {
      return false;
    }
  }
  return true;
}

std::size_t rank(const ExactMatrix& a) {
  if (a.rows() * a.cols() <= kDenseRankLimit) return rank_bareiss(a);
  return rank_sparse(a);
}

std::size_t rank_bareiss(const ExactMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (m == 0 || n == 0 || a.is_zero()) return 0;
  // Scale each row by the lcm of its denominators; row scaling keeps rank.
  std::vector<std::vector<Integer>> g(m, std::vector<Integer>(n, 0));
  for (std::size_t r = 0; r < m; ++r) {
    Integer l = 1;
    for (const auto& e : a.row(r)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.value.get_den_mpz_t());
    for (const auto& e : a.row(r)) g[r][e.col] = e.value.get_num() * (l / e.value.get_den());
  }
  Integer prev = 1;
  std::size_t rk = 0;
  for (std::size_t k = 0; k < n && rk < m; ++k) {
    std::size_t piv = rk;
    while (piv < m && g[piv][k] == 0) ++piv;
    if (piv == m) continue;
    std::swap(g[piv], g[rk]);
    for (std::size_t i = rk + 1; i < m; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = g[i][j] * g[rk][k] - g[i][k] * g[rk][j];
        mpz_divexact(g[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      g[i][k] = 0;
    }
    prev = g[rk][k];
    ++rk;
  }
  return rk;
}

std::size_t rank_sparse(const ExactMatrix& a) {
  using Row = std::map<std::size_t, Rational>;
  std::vector<Row> rows(a.rows());
  std::vector<std::set<std::size_t>> col_rows(a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (const auto& e : a.row(r)) {
      rows[r].emplace(e.col, e.value);
      col_rows[e.col].insert(r);
    }
  }
  std::set<std::size_t> active;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!rows[r].empty()) active.insert(r);
  }
  std::size_t rk = 0;
  while (!active.empty()) {
    // Markowitz: minimise (row count - 1) * (column count - 1).
    std::size_t best_row = 0;
    std::size_t best_col = 0;
    std::size_t best_cost = static_cast<std::size_t>(-1);
    for (std::size_t r : active) {
      const std::size_t rc = rows[r].size() - 1;
      for (const auto& [c, v] : rows[r]) {
        const std::size_t cost = rc * (col_rows[c].size() - 1);
        if (cost < best_cost) {
          best_cost = cost;
          best_row = r;
          best_col = c;
        }
      }
      if (best_cost == 0) break;
    }
    active.erase(best_row);
    ++rk;
    const Row pivot_row = rows[best_row];
    const Rational pivot = pivot_row.at(best_col);
    for (const auto& [c, v] : pivot_row) col_rows[c].erase(best_row);
    const std::vector<std::size_t> targets(col_rows[best_col].begin(),
                                           col_rows[best_col].end());
    for (std::size_t r : targets) {
      const Rational factor = rows[r].at(best_col) / pivot;
      for (const auto& [c, v] : pivot_row) {
        auto it = rows[r].find(c);
        if (it == rows[r].end()) {
          rows[r].emplace(c, -factor * v);
          col_rows[c].insert(r);
        } else {
          it->second -= factor * v;
          if (it->second == 0) {
            rows[r].erase(it);
            col_rows[c].erase(r);
          }
        }
      }
      if (rows[r].empty()) active.erase(r);
    }
  }
  return rk;
}

std::vector<Vector> kernel_basis(const ExactMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  std::vector<Rational> d = a.to_dense();
  auto at = [&](std::size_t r, std::size_t c) -> Rational& { return d[r * n + c]; };
  std::vector<std::size_t> pivot_cols;
  std::size_t rk = 0;
  for (std::size_t c = 0; c < n && rk < m; ++c) {
    std::size_t piv = rk;
    while (piv < m && at(piv, c) == 0) ++piv;
    if (piv == m) continue;
    if (piv != rk) {
      for (std::size_t j = 0; j < n; ++j) std::swap(at(piv, j), at(rk, j));
    }
    const Rational inv = 1 / at(rk, c);
    for (std::size_t j = c; j < n; ++j) at(rk, j) *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == rk || at(i, c) == 0) continue;
      const Rational f = at(i, c);
      for (std::size_t j = c; j < n; ++j) {
        if (at(rk, j) != 0) at(i, j) -= f * at(rk, j);
      }
    }
    pivot_cols.push_back(c);
    ++rk;
  }
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : pivot_cols) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector v(n, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = -at(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t cohomology_dim(const ExactMatrix& a_in, const ExactMatrix& a_out) {
  if (a_in.rows() != a_out.cols()) {
    throw ShapeMismatch("incoming " + shape(a_in) + " and outgoing " + shape(a_out) +
                        " do not meet at a common space");
  }
  if (!(a_out * a_in).is_zero()) {
    throw ComplexConditionViolated("outgoing * incoming is nonzero");
  }
  return a_out.cols() - rank(a_out) - rank(a_in);
}

ExactMatrix assemble_blocks(const std::vector<std::size_t>& row_heights,
                            const std::vector<std::size_t>& col_widths,
                            const std::vector<Block>& blocks) {
  std::vector<std::size_t> row_off(row_heights.size() + 1, 0);
  std::vector<std::size_t> col_off(col_widths.size() + 1, 0);
  for (std::size_t i = 0; i < row_heights.size(); ++i) row_off[i + 1] = row_off[i] + row_heights[i];
  for (std::size_t j = 0; j < col_widths.size(); ++j) col_off[j + 1] = col_off[j] + col_widths[j];
  std::vector<ExactMatrix::Triplet> t;
  for (const auto& b : blocks) {
    if (b.matrix.rows() != row_heights.at(b.block_row) ||
        b.matrix.cols() != col_widths.at(b.block_col)) {
      throw ShapeMismatch("block (" + std::to_string(b.block_row) + "," +
                          std::to_string(b.block_col) + ") has shape " + shape(b.matrix));
    }
    for (auto& x : b.matrix.triplets()) {
      t.push_back({x.row + row_off[b.block_row], x.col + col_off[b.block_col], x.value});
    }
  }
  return ExactMatrix::from_triplets(row_off.back(), col_off.back(), std::move(t));
}

ExactMatrix hstack(const std::vector<ExactMatrix>& parts) {
  if (parts.empty()) return {};
  std::vector<std::size_t> widths;
  std::vector<Block> blocks;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    widths.push_back(parts[j].cols());
    blocks.push_back({0, j, parts[j]});
  }
  return assemble_blocks({parts.front().rows()}, widths, blocks);
}

ExactMatrix vstack(const std::vector<ExactMatrix>& parts) {
  if (parts.empty()) return {};
  std::vector<std::size_t> heights;
  std::vector<Block> blocks;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    heights.push_back(parts[i].rows());
    blocks.push_back({i, 0, parts[i]});
  }
  return assemble_blocks(heights, {parts.front().cols()}, blocks);
}

ExactMatrix direct_sum(const ExactMatrix& a, const ExactMatrix& b) {
  return assemble_blocks({a.rows(), b.rows()}, {a.cols(), b.cols()},
                         {{0, 0, a}, {1, 1, b}});
}

}  // namespace weyldual
