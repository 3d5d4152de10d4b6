#include <doctest.h>

#include "support.hpp"
#include "weyldual/errors.hpp"

using namespace weyldual;

namespace {

ExactMatrix dense(std::size_t r, std::size_t c, std::vector<int> v) {
  std::vector<Rational> q(v.begin(), v.end());
  return ExactMatrix::from_dense(r, c, q);
}

bool in_kernel(const ExactMatrix& a, const Vector& v) {
  for (const auto& x : a.apply(v)) {
    if (x != 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("rank examples") {
  CHECK(rank(ExactMatrix::identity(2)) == 2);
  CHECK(rank(ExactMatrix(3, 4)) == 0);
  CHECK(rank(dense(2, 2, {1, 2, 2, 4})) == 1);
  CHECK(rank(ExactMatrix(0, 5)) == 0);
}

TEST_CASE("kernel examples") {
  CHECK(kernel_basis(ExactMatrix::identity(3)).empty());
  const auto k = kernel_basis(ExactMatrix(2, 2));
  REQUIRE(k.size() == 2);
  CHECK(rank(ExactMatrix::from_dense(2, 2, {k[0][0], k[0][1], k[1][0], k[1][1]})) == 2);
  const auto k1 = kernel_basis(dense(1, 2, {1, 1}));
  REQUIRE(k1.size() == 1);
  CHECK(k1[0][0] == -k1[0][1]);
  CHECK(k1[0][0] != 0);
}

TEST_CASE("cohomology_dim examples and errors") {
  CHECK(cohomology_dim(ExactMatrix(3, 0), ExactMatrix(0, 3)) == 3);
  CHECK(cohomology_dim(ExactMatrix::identity(3), ExactMatrix(0, 3)) == 0);
  CHECK(cohomology_dim(dense(2, 1, {1, 0}), dense(1, 2, {0, 1})) == 0);
  CHECK_THROWS_AS(cohomology_dim(dense(2, 1, {1, 1}), dense(1, 2, {0, 1})),
                  ComplexConditionViolated);
  CHECK_THROWS_AS(cohomology_dim(ExactMatrix(2, 1), ExactMatrix(1, 3)), ShapeMismatch);
}

TEST_CASE("entries are canonical") {
  const auto m = ExactMatrix::from_triplets(2, 2, {{0, 0, 1}, {0, 0, -1}, {1, 1, Rational(2, 4)}});
  CHECK(m.nnz() == 1);
  CHECK(m.at(1, 1) == Rational(1, 2));
  CHECK(m.at(1, 1).get_den() == 2);
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(to_string(Rational(-6, 4)) == "-3/2");
}

TEST_CASE("random: rank-nullity, transpose rank, elimination paths agree") {
  std::mt19937 rng(20261016);
  std::uniform_int_distribution<std::size_t> dim(0, 8);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = dim(rng), c = dim(rng);
    // Low-rank products exercise dependent rows.
    ExactMatrix a = trial % 3 == 0
                        ? wdtest::random_matrix(rng, r, 2) * wdtest::random_matrix(rng, 2, c)
                        : wdtest::random_matrix(rng, r, c, -5, 5, 0.6);
    const std::size_t rk = wdtest::naive_rank(a);
    CHECK(rank_bareiss(a) == rk);
    CHECK(rank_sparse(a) == rk);
    CHECK(rank(a.transpose()) == rk);
    const auto ker = kernel_basis(a);
    CHECK(ker.size() + rk == c);
    for (const auto& v : ker) CHECK(in_kernel(a, v));
  }
}

TEST_CASE("random: sparse and dense ranks agree on larger sparse matrices") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = wdtest::random_matrix(rng, 60, 80, -3, 3, 0.05);
    CHECK(rank_sparse(a) == rank_bareiss(a));
  }
}

TEST_CASE("random: cohomology_dim invariant under change of basis") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    // V0 -> V1 -> V2 built as B*A with B*A = 0 by construction.
    const std::size_t n0 = 3, n1 = 6, n2 = 3;
    const auto a = wdtest::random_matrix(rng, n1, n0, -2, 2);
    const auto ka = kernel_basis(a.transpose());
    std::vector<ExactMatrix::Triplet> t;
    for (std::size_t r = 0; r < std::min(n2, ka.size()); ++r) {
      for (std::size_t c = 0; c < n1; ++c) t.push_back({r, c, ka[r][c]});
    }
    const auto b = ExactMatrix::from_triplets(n2, n1, t);
    const std::size_t h = cohomology_dim(a, b);
    const auto [p, pinv] = wdtest::random_invertible(rng, n1);
    const auto [q, qinv] = wdtest::random_invertible(rng, n0);
    CHECK(cohomology_dim(p * a * qinv, b * pinv) == h);
  }
}

TEST_CASE("block assembly") {
  const auto a = dense(1, 2, {1, 2});
  const auto b = dense(2, 1, {3, 4});
  const auto m = assemble_blocks({1, 2}, {2, 1}, {{0, 0, a}, {1, 1, b}});
  CHECK(m == dense(3, 3, {1, 2, 0, 0, 0, 3, 0, 0, 4}));
  CHECK(hstack({a, dense(1, 1, {5})}) == dense(1, 3, {1, 2, 5}));
  CHECK(vstack({a, a}) == dense(2, 2, {1, 2, 1, 2}));
  CHECK(direct_sum(a, b) == m);
}
