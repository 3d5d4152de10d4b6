#include <doctest.h>

#include "support.hpp"
#include "weyldual/constructors.hpp"
#include "weyldual/derham.hpp"

using namespace weyldual;

namespace {

const GradingSpec kC1{1, GradingMode::kCoarse};
const GradingSpec kC2{2, GradingMode::kCoarse};
const GradingSpec kF1{1, GradingMode::kFine};
const GradingSpec kF2{2, GradingMode::kFine};

std::vector<std::size_t> totals(const CohomologyTable& t) { return t.total_vector(); }

/// Per-label complex rebuilt from scratch for n = 1: M_a --d--> M_{a-1}.
std::pair<std::size_t, std::size_t> one_variable_brute(const GradedPresentation& m, const Label& a) {
  const std::size_t k0 = m.dim_at(a).value_or(0);
  const std::size_t k1 = m.dim_at(a - m.spec().deg_x(0)).value_or(0);
  const std::size_t r = k0 && k1 ? wdtest::naive_rank(*m.d_map(0, a)) : 0;
  return {k0 - r, k1 - r};
}

/// A random module: sum of shifted zoo pieces in a random basis.
GradedPresentation random_module(std::mt19937& rng, const GradingSpec& spec) {
  std::uniform_int_distribution<int> sh(-2, 2);
  auto piece = [&](int kind) {
    const Label l = spec.mode == GradingMode::kCoarse ? Label{sh(rng)} : Label{sh(rng), sh(rng)};
    const auto base = kind == 0 ? polynomial_ring(spec) : injective_hull_E(spec);
    return shift(base, l);
  };
  auto m = piece(static_cast<int>(rng() % 2));
  const int extra = static_cast<int>(rng() % 3);
  for (int k = 0; k < extra; ++k) m = direct_sum(m, piece(static_cast<int>(rng() % 2)));
  return wdtest::conjugate(m, rng);
}

}  // namespace

TEST_CASE("summand examples") {
  const auto r = polynomial_ring(kC1);
  const auto s = build_summand(r, Label{0});
  CHECK(s.object_dims == std::vector<std::size_t>{1, 0});
  CHECK(s.cohomology() == std::vector<std::size_t>{1, 0});
  const auto e = injective_hull_E(kC1);
  const auto se = build_summand(e, Label{0});
  CHECK(se.object_dims == std::vector<std::size_t>{0, 1});
  CHECK(se.cohomology() == std::vector<std::size_t>{0, 1});
  CHECK(se.certified);
}

TEST_CASE("one-variable brute force agrees with the engine") {
  for (const auto& m : {polynomial_ring(kC1), injective_hull_E(kC1), cyclic_xd()}) {
    const auto t = derham_cohomology(m);
    for (const auto& a : m.window().labels()) {
      if (!m.window().in_box(a - kC1.deg_x(0))) continue;
      const auto [h0, h1] = one_variable_brute(m, a);
      auto get = [&](int i) {
        auto it = t.entries.find({a, i});
        return it == t.entries.end() ? std::size_t{0} : it->second.dim;
      };
      CHECK(get(0) == h0);
      // H^1 at summand a sits on M_{a-1}, cokernel of d : M_a -> M_{a-1}.
      CHECK(get(1) == h1);
    }
  }
}

TEST_CASE("totals of R and E") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (GradingMode mode : {GradingMode::kCoarse, GradingMode::kFine}) {
      const GradingSpec spec{n, mode};
      const auto tr = derham_cohomology(polynomial_ring(spec));
      std::vector<std::size_t> want_r(n + 1, 0), want_e(n + 1, 0);
      want_r[0] = 1;
      want_e[n] = 1;
      CHECK(totals(tr) == want_r);
      CHECK(tr.complete());
      const auto te = derham_cohomology(injective_hull_E(spec));
      CHECK(totals(te) == want_e);
      CHECK(te.complete());
    }
  }
}

TEST_CASE("D/(D*xd) has no de Rham cohomology") {
  const auto t = derham_cohomology(cyclic_xd());
  CHECK(totals(t) == std::vector<std::size_t>{0, 0});
  CHECK(t.complete());
}

TEST_CASE("Kunneth oracle for local cohomology at one variable") {
  // H(E in x1) tensor H(R in x2), each computed in one variable.
  const auto e1 = derham_cohomology(injective_hull_E(kF1)).total_vector();
  const auto r1 = derham_cohomology(polynomial_ring(kF1)).total_vector();
  std::vector<std::size_t> want(3, 0);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) want[i + j] += e1[i] * r1[j];
  }
  const auto t = derham_cohomology(local_coh_vars(kF2, {0}));
  CHECK(t.total_vector() == want);
  CHECK(t.total_vector() == std::vector<std::size_t>{0, 1, 0});
  CHECK(t.complete());
}

TEST_CASE("fast H^0 and H^n agree with the full engine") {
  const std::vector<GradedPresentation> mods{
      polynomial_ring(kC2), injective_hull_E(kC2), cyclic_xd(), local_coh_vars(kF2, {0}),
      direct_sum(injective_hull_E(kC2), injective_hull_E(kC2)), shift(polynomial_ring(kC1), Label{2})};
  for (const auto& m : mods) {
    const auto full = derham_cohomology(m);
    const int n = static_cast<int>(m.n());
    const auto h0 = h0_fast(m);
    const auto hn = hn_fast(m);
    CHECK(h0.total(0) == full.total(0));
    CHECK(hn.total(n) == full.total(n));
    CHECK(h0.complete());
    CHECK(hn.complete());
    for (const auto& [key, e] : h0.entries) {
      if (!e.certified) continue;
      auto it = full.entries.find(key);
      CHECK((it == full.entries.end() ? 0 : it->second.dim) == e.dim);
    }
  }
  const auto ee = direct_sum(injective_hull_E(kC2), injective_hull_E(kC2));
  CHECK(h0_fast(ee).total(0) == 0);
  CHECK(hn_fast(ee).total(2) == 2);
  CHECK(h0_fast(polynomial_ring(kC2)).entries.at({Label{0}, 0}).dim == 1);
}

TEST_CASE("Koszul index swap and sign independence") {
  const std::vector<GradedPresentation> mods{
      polynomial_ring(kC2), injective_hull_E(kC2), cyclic_xd(), local_coh_vars(kF2, {1}),
      shift(injective_hull_E(kF2), Label{1, -2})};
  for (const auto& m : mods) {
    const auto co = derham_cohomology(m);
    const auto plus = koszul_homology(m, 1);
    const auto minus = koszul_homology(m, -1);
    const int n = static_cast<int>(m.n());
    for (int i = 0; i <= n; ++i) {
      CHECK(plus.total(i) == co.total(n - i));
      CHECK(minus.total(i) == plus.total(i));
    }
    CHECK(plus.complete());
  }
  CHECK(koszul_homology(polynomial_ring(kC2)).total_vector() == std::vector<std::size_t>{0, 0, 1});
  CHECK(koszul_homology(injective_hull_E(kC2)).total_vector() == std::vector<std::size_t>{1, 0, 0});
}

TEST_CASE("wedge conventions give the same dimensions") {
  const auto m = local_coh_vars(GradingSpec{3, GradingMode::kFine}, {0, 2},
                                Window::box(Label{-4, -4, -4}, Label{3, 3, 3}));
  const auto lex = derham_cohomology(m, {1, WedgeConvention::kLexLeftInsert});
  const auto colex = derham_cohomology(m, {1, WedgeConvention::kColexRightInsert});
  CHECK(lex.total_vector() == colex.total_vector());
  CHECK(lex.total_vector() == std::vector<std::size_t>{0, 0, 1, 0});
  for (const auto& [key, e] : lex.entries) CHECK(colex.entries.at(key).dim == e.dim);
}

TEST_CASE("parallel engine matches the serial one") {
  const auto m = local_coh_vars(GradingSpec{3, GradingMode::kFine}, {0, 1});
  const auto a = derham_cohomology(m, {1, WedgeConvention::kLexLeftInsert});
  const auto b = derham_cohomology(m, {4, WedgeConvention::kLexLeftInsert});
  CHECK(a.total_vector() == b.total_vector());
  CHECK(a.entries.size() == b.entries.size());
}

TEST_CASE("random: d o d = 0 and additivity on random sums") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 12; ++trial) {
    const GradingSpec spec = trial % 2 ? kC2 : kF2;
    const auto m = random_module(rng, spec);
    const auto n = random_module(rng, spec);
    CHECK(validate(m).ok());
    const auto t = derham_cohomology(m);
    for (const auto& a : Window::box(m.window().lo, m.window().hi + spec.d_total()).labels()) {
      const auto s = build_summand(m, a);
      if (!s.certified) continue;
      for (std::size_t i = 0; i + 1 < s.differentials.size(); ++i) {
        CHECK((s.differentials[i + 1] * s.differentials[i]).is_zero());
      }
    }
    const auto tn = derham_cohomology(n);
    const auto ts = derham_cohomology(direct_sum(m, n));
    for (const auto& [key, e] : ts.entries) {
      if (!e.certified) continue;
      auto get = [&](const CohomologyTable& x) {
        auto it = x.entries.find(key);
        return it == x.entries.end() ? std::size_t{0} : it->second.dim;
      };
      CHECK(e.dim == get(t) + get(tn));
    }
    if (t.complete() && tn.complete() && ts.complete()) {
      for (int i = 0; i <= 2; ++i) CHECK(ts.total(i) == t.total(i) + tn.total(i));
    }
  }
}

TEST_CASE("Euler characteristic is additive along the short exact sequence") {
  const auto seq = ses_xd();
  const auto te = derham_cohomology(seq.e);
  const auto tm = derham_cohomology(seq.middle);
  const auto tr = derham_cohomology(seq.r);
  REQUIRE(te.complete());
  REQUIRE(tm.complete());
  REQUIRE(tr.complete());
  auto chi = [](const CohomologyTable& t) {
    return static_cast<long>(t.total(0)) - static_cast<long>(t.total(1));
  };
  CHECK(chi(tm) == chi(te) + chi(tr));
}

TEST_CASE("truncated windows are not certified complete") {
  const auto r = polynomial_ring(kC1, Window::box(Label{2}, Label{5}));
  const auto t = derham_cohomology(r);
  CHECK_FALSE(t.complete());
  const auto xd = cyclic_xd(Window::box(Label{3}, Label{6}));
  CHECK_FALSE(derham_cohomology(xd).complete());
  CHECK(certified_support(cyclic_xd()) == std::set<Label>{Label{0}});
}
