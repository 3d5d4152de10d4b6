#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "weyldual/rational.hpp"

namespace weyldual {

using Vector = std::vector<Rational>;

/// Immutable sparse matrix over the rationals in compressed-row form.
/// Stored entries are never zero.
class ExactMatrix {
 public:
  struct Triplet {
    std::size_t row;
    std::size_t col;
    Rational value;
  };
  struct Entry {
    std::size_t col;
    Rational value;
  };

  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);

  /// Duplicate positions are summed; zeros are dropped.
  static ExactMatrix from_triplets(std::size_t rows, std::size_t cols,
                                   std::vector<Triplet> triplets);
  static ExactMatrix from_dense(std::size_t rows, std::size_t cols,
                                const std::vector<Rational>& row_major);
  static ExactMatrix identity(std::size_t n);
  static ExactMatrix scalar(std::size_t n, const Rational& c);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const { return entries_.size(); }
  bool empty() const { return rows_ == 0 || cols_ == 0; }
  bool is_zero() const { return entries_.empty(); }

  std::span<const Entry> row(std::size_t r) const;
  Rational at(std::size_t r, std::size_t c) const;
  std::vector<Triplet> triplets() const;
  std::vector<Rational> to_dense() const;

  ExactMatrix transpose() const;
  Vector apply(const Vector& v) const;

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator*(const Rational& c, const ExactMatrix& a);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::size_t> row_start_{0};
  std::vector<Entry> entries_;
};

/// Rank over Q. Small blocks go through fraction-free elimination on a dense
/// integer copy, large ones through sparse elimination.
std::size_t rank(const ExactMatrix& a);

/// Bareiss-style fraction-free elimination (rows scaled to integers first).
std::size_t rank_bareiss(const ExactMatrix& a);

/// Sparse elimination; pivots chosen by smallest Markowitz count.
std::size_t rank_sparse(const ExactMatrix& a);

/// Basis of ker(a) from the reduced row echelon form: one vector per free
/// column, with a 1 in that column.
std::vector<Vector> kernel_basis(const ExactMatrix& a);

/// dim ker(a_out) / im(a_in) for  V_prev --a_in--> V --a_out--> V_next.
/// Throws ShapeMismatch or ComplexConditionViolated.
std::size_t cohomology_dim(const ExactMatrix& a_in, const ExactMatrix& a_out);

/// Block matrices from a grid of optional blocks; missing blocks are zero.
/// Row heights and column widths must be given explicitly.
struct Block {
  std::size_t block_row;
  std::size_t block_col;
  ExactMatrix matrix;
};
ExactMatrix assemble_blocks(const std::vector<std::size_t>& row_heights,
                            const std::vector<std::size_t>& col_widths,
                            const std::vector<Block>& blocks);

ExactMatrix hstack(const std::vector<ExactMatrix>& parts);
ExactMatrix vstack(const std::vector<ExactMatrix>& parts);
ExactMatrix direct_sum(const ExactMatrix& a, const ExactMatrix& b);

}  // namespace weyldual
