#include "weyldual/grading.hpp"

#include <algorithm>

#include "weyldual/errors.hpp"

namespace weyldual {

Label Label::operator-() const {
  Label out = *this;
  for (auto& x : out.c_) x = -x;
  return out;
}

Label operator+(const Label& a, const Label& b) {
  if (a.rank() != b.rank()) throw ShapeMismatch("label ranks differ");
  Label out = a;
  for (std::size_t k = 0; k < a.rank(); ++k) out.c_[k] += b.c_[k];
  return out;
}

Label operator-(const Label& a, const Label& b) { return a + (-b); }

Label operator*(int s, const Label& a) {
  Label out = a;
  for (auto& x : out.c_) x *= s;
  return out;
}

std::string Label::str() const {
  if (c_.size() == 1) return std::to_string(c_[0]);
  std::string s = "(";
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(c_[k]);
  }
  return s + ")";
}

const char* to_string(GradingMode mode) {
  return mode == GradingMode::kCoarse ? "coarse" : "fine";
}

GradingMode parse_grading_mode(const std::string& text) {
  if (text == "coarse") return GradingMode::kCoarse;
  if (text == "fine") return GradingMode::kFine;
  throw ParseError("unknown grading mode '" + text + "'");
}

Label GradingSpec::deg_x(std::size_t i) const {
  Label d = zero();
  d[axis_of(i)] = 1;
  return d;
}

Label GradingSpec::d_total() const {
  Label d = zero();
  for (std::size_t i = 0; i < n; ++i) d[axis_of(i)] += 1;
  return d;
}

int GradingSpec::eps(const Label& a) const {
  int s = 0;
  for (int x : a.coords()) s += x;
  return s;
}

Label GradingSpec::deg_monomial(const std::vector<int>& e) const {
  Label d = zero();
  for (std::size_t i = 0; i < e.size(); ++i) d[axis_of(i)] += e[i];
  return d;
}

Window Window::box(Label lo, Label hi) {
  const std::size_t r = lo.rank();
  return Window{std::move(lo), std::move(hi), std::vector<bool>(r, false),
                std::vector<bool>(r, false)};
}

bool Window::in_box(const Label& a) const {
  for (std::size_t k = 0; k < rank(); ++k) {
    if (a[k] < lo[k] || a[k] > hi[k]) return false;
  }
  return true;
}

bool Window::known_zero(const Label& a) const {
  for (std::size_t k = 0; k < rank(); ++k) {
    if (a[k] < lo[k] && vanish_below[k]) return true;
    if (a[k] > hi[k] && vanish_above[k]) return true;
  }
  return false;
}

bool Window::all_flags_set() const {
  return std::all_of(vanish_below.begin(), vanish_below.end(), [](bool b) { return b; }) &&
         std::all_of(vanish_above.begin(), vanish_above.end(), [](bool b) { return b; });
}

bool Window::empty() const {
  for (std::size_t k = 0; k < rank(); ++k) {
    if (lo[k] > hi[k]) return true;
  }
  return false;
}

std::vector<Label> Window::labels() const {
  std::vector<Label> out;
  if (empty()) return out;
  Label cur = lo;
  while (true) {
    out.push_back(cur);
    std::size_t k = rank();
    while (k > 0) {
      --k;
      if (cur[k] < hi[k]) {
        ++cur[k];
        for (std::size_t j = k + 1; j < rank(); ++j) cur[j] = lo[j];
        break;
      }
      if (k == 0) return out;
    }
    if (rank() == 0) return out;
  }
}

Window Window::translated(const Label& by) const {
  Window w = *this;
  w.lo = lo + by;
  w.hi = hi + by;
  return w;
}

}  // namespace weyldual
