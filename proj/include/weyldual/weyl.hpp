#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weyldual/grading.hpp"
#include "weyldual/rational.hpp"

namespace weyldual {

/// x^x_exp * d^d_exp, always with every x to the left of every d.
struct WeylMonomial {
  std::vector<int> x_exp;
  std::vector<int> d_exp;
  friend auto operator<=>(const WeylMonomial&, const WeylMonomial&) = default;
  friend bool operator==(const WeylMonomial&, const WeylMonomial&) = default;
};

/// Element of the Weyl algebra Q[x_1..x_n]<d_1..d_n> in normal order.
class WeylOp {
 public:
  explicit WeylOp(std::size_t n = 1) : n_(n) {}

  static WeylOp constant(std::size_t n, const Rational& c);
  static WeylOp x(std::size_t n, std::size_t i);
  static WeylOp d(std::size_t n, std::size_t i);
  static WeylOp monomial(std::size_t n, std::vector<int> x_exp, std::vector<int> d_exp,
                         const Rational& coeff = 1);

  std::size_t n() const { return n_; }
  const std::map<WeylMonomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Terms in descending lexicographic (x_exp, d_exp) order, e.g. "x1*d1 + 3*d2^2".
  std::string str() const;

  friend WeylOp operator+(const WeylOp& p, const WeylOp& q);
  friend WeylOp operator-(const WeylOp& p, const WeylOp& q);
  friend WeylOp operator*(const WeylOp& p, const WeylOp& q);
  friend WeylOp operator*(const Rational& c, const WeylOp& p);
  friend bool operator==(const WeylOp&, const WeylOp&) = default;

 private:
  void add_term(const WeylMonomial& m, const Rational& c);

  std::size_t n_;
  std::map<WeylMonomial, Rational> terms_;
};

/// Normal form of p*q. Throws VariableCountMismatch.
WeylOp multiply(const WeylOp& p, const WeylOp& q);

/// Standard transposition: f * d^b  |->  (-1)^|b| d^b * f, renormalised.
WeylOp transpose(const WeylOp& p);

/// sum_i x_i d_i.
WeylOp euler(std::size_t n);

/// Common degree of all terms, or nullopt when p is inhomogeneous.
/// The zero operator is homogeneous of degree zero.
std::optional<Label> op_degree(const WeylOp& p, const GradingSpec& spec);

/// Parses tokens x1..xn, d1..dn (x, d when n = 1), integer and p/q
/// coefficients, + - * ^ and parentheses. Products are Weyl products taken
/// left to right.
WeylOp parse_weyl(std::size_t n, const std::string& text);

}  // namespace weyldual
