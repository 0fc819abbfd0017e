#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "blowup/exact_algebra.hpp"
#include "oracles.hpp"

using namespace blowup::algebra;

namespace {

LaurentPoly poly(int low, std::vector<long> c) {
  std::vector<Integer> v(c.begin(), c.end());
  return LaurentPoly::from_coeffs(low, v);
}

bool is_diagonal_chain(const IntMatrix& d) {
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (i != j && d(i, j) != 0) return false;
  const std::size_t r = std::min(d.rows(), d.cols());
  for (std::size_t i = 0; i < r; ++i) {
    if (d(i, i) < 0) return false;
    if (i + 1 < r) {
      if (d(i, i) == 0 && d(i + 1, i + 1) != 0) return false;
      if (d(i, i) != 0 && d(i + 1, i + 1) % d(i, i) != 0) return false;
    }
  }
  return true;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int bound) {
  std::uniform_int_distribution<int> e(-bound, bound);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = e(rng);
  return m;
}

}  // namespace

TEST_CASE("snf of [[2,4],[6,8]] is diag(2,4)") {
  const IntMatrix m = int_matrix({{2, 4}, {6, 8}});
  const auto s = smith_normal_form(m);
  CHECK(s.D == int_matrix({{2, 0}, {0, 4}}));
  CHECK(s.U * m * s.V == s.D);
  const auto f = oracle::invariant_factors(m);
  CHECK(f == std::vector<Integer>{2, 4});
}

TEST_CASE("snf of identity and zero") {
  CHECK(smith_normal_form(identity_matrix(4)).D == identity_matrix(4));
  const IntMatrix z(3, 2, 0);
  CHECK(smith_normal_form(z).D == z);
  CHECK(smith_normal_form(IntMatrix(0, 3)).D.rows() == 0);
}

TEST_CASE("snf random property against minors oracle") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    const IntMatrix m = random_matrix(rng, r, c, 9);
    const auto s = smith_normal_form(m);
    REQUIRE(s.U * m * s.V == s.D);
    CHECK(abs(determinant(s.U)) == 1);
    CHECK(abs(determinant(s.V)) == 1);
    CHECK(is_diagonal_chain(s.D));
    const auto f = oracle::invariant_factors(m);
    for (std::size_t i = 0; i < f.size(); ++i) CHECK(s.D(i, i) == f[i]);
  }
}

TEST_CASE("cokernel examples") {
  const auto g = cokernel(int_matrix({{-2, 1}, {1, -2}}));
  CHECK(g.rank == 0);
  CHECK(g.torsion == std::vector<Integer>{3});
  CHECK(g.to_string() == "Z/3");
  CHECK(cokernel(int_matrix({{0}})).rank == 1);
  CHECK(cokernel(int_matrix({{1}})).is_trivial());
  CHECK(cokernel(IntMatrix(0, 2)).rank == 2);
  CHECK(cokernel(int_matrix({{2, 0}, {0, 0}})).to_string() == "Z + Z/2");
}

TEST_CASE("cokernel order equals |det| for nonsingular square matrices") {
  std::mt19937_64 rng(11);
  int checked = 0;
  while (checked < 100) {
    const std::size_t n = 1 + rng() % 4;
    const IntMatrix m = random_matrix(rng, n, n, 6);
    const Integer d = determinant(m);
    CHECK(d == oracle::cofactor_det(m));
    if (d == 0) continue;
    const auto g = cokernel(m);
    CHECK(g.rank == 0);
    CHECK(g.order() == abs(d));
    ++checked;
  }
}

TEST_CASE("determinant handles big entries exactly") {
  IntMatrix m(2, 2);
  m(0, 0) = Integer("123456789012345678901234567890");
  m(0, 1) = 1;
  m(1, 0) = 1;
  m(1, 1) = Integer("98765432109876543210");
  CHECK(determinant(m) == m(0, 0) * m(1, 1) - 1);
}

TEST_CASE("laurent arithmetic") {
  const LaurentPoly t = LaurentPoly::t();
  CHECK((t - 1) * (t + 1) == t * t - 1);
  CHECK((t - t).is_zero());
  CHECK(poly(-1, {1, 0, 1}).reflected() == poly(-1, {1, 0, 1}));
  CHECK(poly(0, {1, -1, 1}).to_string() == "t^2 - t + 1");
  CHECK(LaurentPoly::monomial(-1, -2).is_unit());
  CHECK(poly(3, {2, 4}).content() == 2);
  CHECK(divide_exact(t * t * t + 1, t + 1) == t * t - t + 1);
  CHECK_THROWS_AS(divide_exact(t * t + 1, t + 1), std::domain_error);
  CHECK(divide_exact(LaurentPoly::monomial(1, -2), LaurentPoly::monomial(1, 3)) == LaurentPoly::monomial(1, -5));
}

TEST_CASE("laurent_det examples") {
  const LaurentPoly t = LaurentPoly::t();
  LaurentMatrix a(1, 1);
  a(0, 0) = 1 - t;
  CHECK(laurent_det(a) == 1 - t);
  LaurentMatrix b(2, 2);
  b(0, 0) = t - 1;
  b(0, 1) = 1;
  b(1, 0) = -t;
  b(1, 1) = t - 1;
  CHECK(laurent_det(b) == t * t - t + 1);
  CHECK(laurent_det(b) == oracle::cofactor_det(b));
  CHECK(laurent_det(LaurentMatrix(0, 0)) == LaurentPoly(1));
  CHECK_THROWS_AS(laurent_det(LaurentMatrix(1, 2)), blowup::Error);
}

TEST_CASE("laurent_det agrees with integer determinant after substitution") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> e(-3, 3), ex(-2, 2);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    LaurentMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        m(i, j) = LaurentPoly::monomial(e(rng), ex(rng)) + LaurentPoly::monomial(e(rng), ex(rng));
    const LaurentPoly d = laurent_det(m);
    CHECK(d == oracle::cofactor_det(m));
    for (long x : {-3L, -1L, 2L, 5L}) {
      Matrix<Rational> q(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) q(i, j) = eval_at(m(i, j), x);
      CHECK(eval_at(d, x) == oracle::cofactor_det(q));
    }
  }
}

TEST_CASE("eval_at") {
  const LaurentPoly t = LaurentPoly::t();
  CHECK(eval_at(t * t - t + 1, -1) == 3);
  CHECK(eval_at(LaurentPoly(), -1) == 0);
  CHECK(eval_at(LaurentPoly::monomial(1, -1) + t, -1) == -2);
  CHECK(eval_at(LaurentPoly::monomial(1, -2), 2) == Rational(1, 4));
  CHECK_THROWS_AS(eval_at(t, 0), blowup::Error);
}

TEST_CASE("unit_normalize") {
  const auto n = unit_normalize(poly(3, {-1, 1}));
  CHECK(n.min_exp() == 0);
  CHECK(n.coeffs() == std::vector<Integer>{-1, 1});
  CHECK(unit_normalize(LaurentPoly(1)) == LaurentPoly(1));
  CHECK(unit_normalize(LaurentPoly::monomial(-1, -2)) == LaurentPoly(1));
  CHECK(unit_normalize(LaurentPoly()).is_zero());
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> e(-4, 4);
  for (int i = 0; i < 50; ++i) {
    const LaurentPoly p = poly(e(rng), {e(rng), e(rng), e(rng)});
    const LaurentPoly u = unit_normalize(p);
    CHECK(unit_normalize(u) == u);
    CHECK(equal_up_to_units(u, p));
    CHECK((u == p.shifted(-p.min_exp()) || u == -p.shifted(-p.min_exp())));
  }
}

TEST_CASE("laurent_gcd") {
  const LaurentPoly t = LaurentPoly::t();
  const LaurentPoly a = (t * t - t + 1) * (t - 1) * 6;
  const LaurentPoly b = (t * t - t + 1) * (t + 2) * 4;
  CHECK(laurent_gcd(a, b) == unit_normalize((t * t - t + 1) * 2));
  CHECK(laurent_gcd(LaurentPoly(), t - 1) == unit_normalize(t - 1));
  CHECK(laurent_gcd(LaurentPoly(), LaurentPoly()).is_zero());
  CHECK(laurent_gcd(t + 1, t - 1) == LaurentPoly(1));
  CHECK(laurent_gcd(LaurentPoly::monomial(3, -2) * (t + 1), (t + 1) * (t + 1)) == unit_normalize(t + 1));
}
