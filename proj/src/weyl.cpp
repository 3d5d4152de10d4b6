#include "weyldual/weyl.hpp"

#include <cctype>

#include "weyldual/errors.hpp"

namespace weyldual {

namespace {

Integer falling(int c, int k) {
  Integer r = 1;
  for (int t = 0; t < k; ++t) r *= c - t;
  return r;
}

Integer binomial(int b, int k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(b), static_cast<unsigned long>(k));
  return r;
}

void check_same_n(const WeylOp& p, const WeylOp& q) {
  if (p.n() != q.n()) {
    throw VariableCountMismatch(std::to_string(p.n()) + " vs " + std::to_string(q.n()));
  }
}

}  // namespace

void WeylOp::add_term(const WeylMonomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

WeylOp WeylOp::constant(std::size_t n, const Rational& c) {
  return monomial(n, std::vector<int>(n, 0), std::vector<int>(n, 0), c);
}

WeylOp WeylOp::x(std::size_t n, std::size_t i) {
  std::vector<int> a(n, 0);
  a.at(i) = 1;
  return monomial(n, a, std::vector<int>(n, 0));
}

WeylOp WeylOp::d(std::size_t n, std::size_t i) {
  std::vector<int> b(n, 0);
  b.at(i) = 1;
  return monomial(n, std::vector<int>(n, 0), b);
}

WeylOp WeylOp::monomial(std::size_t n, std::vector<int> x_exp, std::vector<int> d_exp,
                        const Rational& coeff) {
  if (x_exp.size() != n || d_exp.size() != n) {
    throw VariableCountMismatch("exponent vectors must have length " + std::to_string(n));
  }
  WeylOp p(n);
  p.add_term({std::move(x_exp), std::move(d_exp)}, coeff);
  return p;
}

WeylOp operator+(const WeylOp& p, const WeylOp& q) {
  check_same_n(p, q);
  WeylOp r = p;
  for (const auto& [m, c] : q.terms_) r.add_term(m, c);
  return r;
}

WeylOp operator-(const WeylOp& p, const WeylOp& q) { return p + Rational(-1) * q; }

WeylOp operator*(const Rational& c, const WeylOp& p) {
  WeylOp r(p.n());
  for (const auto& [m, v] : p.terms_) r.add_term(m, c * v);
  return r;
}

WeylOp operator*(const WeylOp& p, const WeylOp& q) {
  check_same_n(p, q);
  const std::size_t n = p.n();
  WeylOp r(n);
  for (const auto& [mp, cp] : p.terms_) {
    for (const auto& [mq, cq] : q.terms_) {
      // d^b x^c = sum_k prod_i C(b_i,k_i) c_i!/(c_i-k_i)! x^(c-k) d^(b-k)
      std::vector<int> k(n, 0);
      while (true) {
        Integer coeff = 1;
        WeylMonomial m{std::vector<int>(n), std::vector<int>(n)};
        for (std::size_t i = 0; i < n; ++i) {
          coeff *= binomial(mp.d_exp[i], k[i]) * falling(mq.x_exp[i], k[i]);
          m.x_exp[i] = mp.x_exp[i] + mq.x_exp[i] - k[i];
          m.d_exp[i] = mp.d_exp[i] + mq.d_exp[i] - k[i];
        }
        r.add_term(m, cp * cq * Rational(coeff));
        std::size_t i = 0;
        for (; i < n; ++i) {
          if (k[i] < std::min(mp.d_exp[i], mq.x_exp[i])) {
            ++k[i];
            break;
          }
          k[i] = 0;
        }
        if (i == n) break;
      }
    }
  }
  return r;
}

WeylOp multiply(const WeylOp& p, const WeylOp& q) { return p * q; }

WeylOp transpose(const WeylOp& p) {
  const std::size_t n = p.n();
  const std::vector<int> zero(n, 0);
  WeylOp r(n);
  for (const auto& [m, c] : p.terms()) {
    int order = 0;
    for (int b : m.d_exp) order += b;
    const WeylOp dpart = WeylOp::monomial(n, zero, m.d_exp, order % 2 ? -1 : 1);
    const WeylOp xpart = WeylOp::monomial(n, m.x_exp, zero, c);
    r = r + dpart * xpart;
  }
  return r;
}

WeylOp euler(std::size_t n) {
  WeylOp e(n);
  for (std::size_t i = 0; i < n; ++i) e = e + WeylOp::x(n, i) * WeylOp::d(n, i);
  return e;
}

std::optional<Label> op_degree(const WeylOp& p, const GradingSpec& spec) {
  if (p.n() != spec.n) {
    throw VariableCountMismatch("operator has " + std::to_string(p.n()) +
                                " variables, grading has " + std::to_string(spec.n));
  }
  std::optional<Label> deg;
  for (const auto& [m, c] : p.terms()) {
    const Label t = spec.deg_monomial(m.x_exp) - spec.deg_monomial(m.d_exp);
    if (deg && *deg != t) return std::nullopt;
    deg = t;
  }
  return deg ? deg : spec.zero();
}

std::string WeylOp::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string factors;
    auto put = [&](char sym, const std::vector<int>& e) {
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!factors.empty()) factors += "*";
        factors += sym + std::to_string(i + 1);
        if (e[i] > 1) factors += "^" + std::to_string(e[i]);
      }
    };
    put('x', m.x_exp);
    put('d', m.d_exp);
    const Rational mag = abs(c);
    std::string coeff;
    if (factors.empty()) {
      coeff = mag.get_str();
    } else if (mag != 1) {
      coeff = mag.get_str() + "*";
    }
    if (first) {
      out += (c < 0 ? "-" : "") + coeff + factors;
    } else {
      out += (c < 0 ? " - " : " + ") + coeff + factors;
    }
    first = false;
  }
  return out;
}

namespace {

class WeylParser {
 public:
  WeylParser(std::size_t n, const std::string& text) : n_(n), s_(text) {}

  WeylOp parse() {
    WeylOp r = sum();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(why + " at position " + std::to_string(pos_) + " in '" + s_ + "'");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  WeylOp sum() {
    WeylOp r(n_);
    bool neg = false;
    if (eat('-')) {
      neg = true;
    } else {
      eat('+');
    }
    r = neg ? Rational(-1) * product() : product();
    while (true) {
      if (eat('+')) {
        r = r + product();
      } else if (eat('-')) {
        r = r - product();
      } else {
        return r;
      }
    }
  }

  WeylOp product() {
    WeylOp r = power();
    while (eat('*')) r = r * power();
    return r;
  }

  WeylOp power() {
    WeylOp base = atom();
    if (eat('^')) {
      skip_ws();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      const int e = std::stoi(s_.substr(start, pos_ - start));
      WeylOp r = WeylOp::constant(n_, 1);
      for (int k = 0; k < e; ++k) r = r * base;
      return r;
    }
    return base;
  }

  WeylOp atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      WeylOp r = sum();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      }
      return WeylOp::constant(n_, parse_rational(s_.substr(start, pos_ - start)));
    }
    if (c == 'x' || c == 'd') {
      ++pos_;
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::size_t index = 1;
      if (start == pos_) {
        if (n_ != 1) fail("variable index required when n > 1");
      } else {
        index = std::stoul(s_.substr(start, pos_ - start));
      }
      if (index < 1 || index > n_) fail("variable index out of range");
      return c == 'x' ? WeylOp::x(n_, index - 1) : WeylOp::d(n_, index - 1);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::size_t n_;
  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

WeylOp parse_weyl(std::size_t n, const std::string& text) {
  return WeylParser(n, text).parse();
}

}  // namespace weyldual
