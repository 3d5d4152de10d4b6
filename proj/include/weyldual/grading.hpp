#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace weyldual {

/// A point of the grading lattice: Z (one coordinate) or Z^n.
class Label {
 public:
  Label() = default;
  explicit Label(std::vector<int> coords) : c_(std::move(coords)) {}
  Label(std::initializer_list<int> coords) : c_(coords) {}
  static Label zero(std::size_t rank) { return Label(std::vector<int>(rank, 0)); }

  std::size_t rank() const { return c_.size(); }
  int operator[](std::size_t k) const { return c_[k]; }
  int& operator[](std::size_t k) { return c_[k]; }
  const std::vector<int>& coords() const { return c_; }

  Label operator-() const;
  friend Label operator+(const Label& a, const Label& b);
  friend Label operator-(const Label& a, const Label& b);
  friend Label operator*(int s, const Label& a);
  friend auto operator<=>(const Label&, const Label&) = default;
  friend bool operator==(const Label&, const Label&) = default;

  /// "3" in rank 1, "(1,-2)" otherwise.
  std::string str() const;

 private:
  std::vector<int> c_;
};

enum class GradingMode { kCoarse, kFine };

const char* to_string(GradingMode mode);
GradingMode parse_grading_mode(const std::string& text);

/// COARSE: lattice Z, deg(x_i) = 1. FINE: lattice Z^n, deg(x_i) = e_i.
struct GradingSpec {
  std::size_t n = 1;
  GradingMode mode = GradingMode::kCoarse;

  std::size_t lattice_rank() const { return mode == GradingMode::kCoarse ? 1 : n; }
  Label zero() const { return Label::zero(lattice_rank()); }
  Label deg_x(std::size_t i) const;
  /// Degree of x_1 * ... * x_n.
  Label d_total() const;
  /// Total-degree functional.
  int eps(const Label& a) const;
  /// Lattice axis carrying deg(x_i).
  std::size_t axis_of(std::size_t i) const { return mode == GradingMode::kCoarse ? 0 : i; }
  /// Degree of the monomial x^e.
  Label deg_monomial(const std::vector<int>& e) const;

  friend bool operator==(const GradingSpec&, const GradingSpec&) = default;
};

/// Finite box of labels plus per-axis flags declaring everything beyond the
/// box (in that direction) to be zero.
struct Window {
  Label lo;
  Label hi;
  std::vector<bool> vanish_below;
  std::vector<bool> vanish_above;

  static Window box(Label lo, Label hi);

  std::size_t rank() const { return lo.rank(); }
  bool in_box(const Label& a) const;
  bool known_zero(const Label& a) const;
  bool covered(const Label& a) const { return in_box(a) || known_zero(a); }
  bool all_flags_set() const;
  bool empty() const;
  /// Box labels in lexicographic order.
  std::vector<Label> labels() const;
  Window translated(const Label& by) const;

  friend bool operator==(const Window&, const Window&) = default;
};

}  // namespace weyldual
