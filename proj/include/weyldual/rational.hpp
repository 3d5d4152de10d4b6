#pragma once

#include <gmpxx.h>

#include <string>

namespace weyldual {

/// Exact rational number. GMP arithmetic assumes canonical operands; the
/// two-argument constructor does not reduce, so inputs are canonicalized
/// wherever they enter a matrix.
using Rational = mpq_class;
using Integer = mpz_class;

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(Rational q) {
  q.canonicalize();
  return q.get_str();
}

/// Accepts "p" or "p/q" with optional sign; throws ParseError otherwise.
Rational parse_rational(const std::string& text);

}  // namespace weyldual
