#include "weyldual/recipe.hpp"

#include <cctype>
#include <charconv>

#include "weyldual/constructors.hpp"
#include "weyldual/errors.hpp"

namespace weyldual {

namespace {

class RecipeParser {
 public:
  explicit RecipeParser(const std::string& text) : s_(text) {}

  Recipe parse() {
    Recipe r = module();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("recipe '" + s_ + "' at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string ident() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a name");
    return s_.substr(start, pos_ - start);
  }

  int integer() {
    skip();
    int value = 0;
    const char* begin = s_.data() + pos_;
    if (*begin == '+') ++begin;
    auto [end, ec] = std::from_chars(begin, s_.data() + s_.size(), value);
    if (ec != std::errc()) fail("expected an integer");
    pos_ = static_cast<std::size_t>(end - s_.data());
    return value;
  }

  std::size_t arg_n() {
    if (ident() != "n") fail("expected n=");
    expect('=');
    const int n = integer();
    if (n < 1) fail("n must be positive");
    return static_cast<std::size_t>(n);
  }

  Recipe module() {
    const std::string name = ident();
    Recipe r;
    if (name == "R" || name == "E") {
      r.kind = name == "R" ? Recipe::Kind::kPolynomialRing : Recipe::Kind::kInjectiveHullE;
      expect('(');
      r.n = arg_n();
      expect(')');
    } else if (name == "Hvars") {
      r.kind = Recipe::Kind::kLocalCohVars;
      expect('(');
      r.n = arg_n();
      expect(',');
      if (ident() != "S") fail("expected S=");
      expect('=');
      do {
        const int v = integer();
        if (v < 1 || static_cast<std::size_t>(v) > r.n) fail("variable index out of range");
        r.vars.insert(static_cast<std::size_t>(v));
      } while (accept(','));
      expect(')');
    } else if (name == "XD") {
      r.kind = Recipe::Kind::kCyclicXd;
      r.n = 1;
    } else if (name == "shift") {
      r.kind = Recipe::Kind::kShift;
      expect('(');
      r.children.push_back(module());
      r.n = r.children.front().n;
      while (accept(',')) r.shift_by.push_back(integer());
      if (r.shift_by.empty()) fail("shift needs an amount");
      expect(')');
    } else if (name == "sum") {
      r.kind = Recipe::Kind::kDirectSum;
      expect('(');
      do {
        r.children.push_back(module());
      } while (accept(','));
      if (r.children.size() < 2) fail("sum needs at least two summands");
      r.n = r.children.front().n;
      for (const auto& c : r.children) {
        if (c.variables() != r.n) fail("summands have different variable counts");
      }
      expect(')');
    } else {
      fail("unknown module '" + name + "'");
    }
    return r;
  }

  std::string s_;
  std::size_t pos_ = 0;
};

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s;
}

}  // namespace

std::size_t Recipe::variables() const { return n; }

bool Recipe::needs_fine() const {
  if (kind == Kind::kLocalCohVars) return true;
  for (const auto& c : children) {
    if (c.needs_fine()) return true;
  }
  return false;
}

std::string Recipe::str() const {
  switch (kind) {
    case Kind::kPolynomialRing:
      return "R(n=" + std::to_string(n) + ")";
    case Kind::kInjectiveHullE:
      return "E(n=" + std::to_string(n) + ")";
    case Kind::kLocalCohVars:
      return "Hvars(n=" + std::to_string(n) + ",S=" +
             join_ints(std::vector<int>(vars.begin(), vars.end())) + ")";
    case Kind::kCyclicXd:
      return "XD";
    case Kind::kShift:
      return "shift(" + children.front().str() + "," + join_ints(shift_by) + ")";
    case Kind::kDirectSum: {
      std::string s = "sum(";
      for (std::size_t k = 0; k < children.size(); ++k) s += (k ? "," : "") + children[k].str();
      return s + ")";
    }
  }
  return {};
}

Recipe parse_recipe(const std::string& text) { return RecipeParser(text).parse(); }

GradingSpec recipe_spec(const Recipe& r, const BuildOptions& opts) {
  GradingSpec spec{r.variables(), GradingMode::kCoarse};
  if (opts.mode) {
    spec.mode = *opts.mode;
  } else if (r.needs_fine()) {
    spec.mode = GradingMode::kFine;
  }
  return spec;
}

namespace {

GradedPresentation build_with(const Recipe& r, const GradingSpec& spec,
                              const std::optional<Window>& window) {
  switch (r.kind) {
    case Recipe::Kind::kPolynomialRing:
      return polynomial_ring(spec, window);
    case Recipe::Kind::kInjectiveHullE:
      return injective_hull_E(spec, window);
    case Recipe::Kind::kLocalCohVars: {
      std::set<std::size_t> zero_based;
      for (std::size_t v : r.vars) zero_based.insert(v - 1);
      return local_coh_vars(spec, zero_based, window);
    }
    case Recipe::Kind::kCyclicXd:
      if (spec.mode != GradingMode::kCoarse) {
        throw IncompatibleSpecs("XD is built in the coarse grading");
      }
      return cyclic_xd(window);
    case Recipe::Kind::kShift: {
      Label l(r.shift_by);
      if (l.rank() != spec.lattice_rank()) {
        throw IncompatibleSpecs("shift amount has " + std::to_string(l.rank()) +
                                " coordinates, lattice rank is " +
                                std::to_string(spec.lattice_rank()));
      }
      return shift(build_with(r.children.front(), spec, window), l);
    }
    case Recipe::Kind::kDirectSum: {
      GradedPresentation acc = build_with(r.children.front(), spec, window);
      for (std::size_t k = 1; k < r.children.size(); ++k) {
        acc = direct_sum(acc, build_with(r.children[k], spec, window));
      }
      return acc;
    }
  }
  throw ParseError("unhandled recipe");
}

}  // namespace

GradedPresentation build_recipe(const Recipe& r, const BuildOptions& opts) {
  const GradingSpec spec = recipe_spec(r, opts);
  if (opts.window && opts.window->rank() != spec.lattice_rank()) {
    throw IncompatibleSpecs("window rank does not match the grading");
  }
  return build_with(r, spec, opts.window);
}

namespace {

std::pair<int, int> parse_range(const std::string& text) {
  std::string t;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  }
  std::size_t split = t.find("..");
  std::size_t skip = 2;
  if (split == std::string::npos) {
    split = t.find(',', 1);
    skip = 1;
  }
  if (split == std::string::npos) throw ParseError("window range '" + text + "' needs lo..hi");
  auto to_int = [&](const std::string& s) {
    int v = 0;
    const char* b = s.data();
    if (!s.empty() && *b == '+') ++b;
    auto [end, ec] = std::from_chars(b, s.data() + s.size(), v);
    if (ec != std::errc() || end != s.data() + s.size() || s.empty()) {
      throw ParseError("bad window bound '" + s + "'");
    }
    return v;
  };
  const int lo = to_int(t.substr(0, split));
  const int hi = to_int(t.substr(split + skip));
  if (lo > hi) throw ParseError("window range '" + text + "' has lo > hi");
  return {lo, hi};
}

}  // namespace

Window parse_window(const std::string& text, std::size_t rank) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t x = text.find(" x ", start);
    parts.push_back(text.substr(start, x == std::string::npos ? std::string::npos : x - start));
    if (x == std::string::npos) break;
    start = x + 3;
  }
  if (parts.size() == 1 && rank > 1) parts.assign(rank, parts.front());
  if (parts.size() != rank) {
    throw ParseError("window has " + std::to_string(parts.size()) + " ranges, lattice rank is " +
                     std::to_string(rank));
  }
  std::vector<int> lo, hi;
  for (const auto& p : parts) {
    auto [a, b] = parse_range(p);
    lo.push_back(a);
    hi.push_back(b);
  }
  return Window::box(Label(lo), Label(hi));
}

}  // namespace weyldual
