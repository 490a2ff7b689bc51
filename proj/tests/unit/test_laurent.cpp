#include <limits>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "skeincoeff/laurent.hpp"
#include "skeincoeff/series.hpp"

using namespace skein;

namespace {
const LaurentPoly y = LaurentPoly::monomial(1, 1);
const LaurentPoly yi = LaurentPoly::monomial(1, -1);
const LaurentPoly one = LaurentPoly::constant(1);
}  // namespace

TEST_CASE("laurent sums") {
  CHECK((y + yi).str() == "y^-1 + y");
  LaurentPoly p = LaurentPoly::parse("3*y^2 - y^-1 + 4");
  CHECK(p + LaurentPoly{} == p);
  CHECK(((y + yi) + (-(y + yi))).is_zero());
  CHECK(LaurentPoly{}.str() == "0");
}

TEST_CASE("laurent products") {
  const LaurentPoly s = y + yi;
  CHECK(s * s == LaurentPoly::parse("y^2 + 2 + y^-2"));
  CHECK(s * one == s);
  CHECK(s.pow(3) == LaurentPoly::parse("y^3 + 3*y + 3*y^-1 + y^-3"));
  CHECK(s.pow(0) == one);
}

TEST_CASE("serialization is ascending and round-trips") {
  LaurentPoly p = LaurentPoly::parse("-1 + 2*y^2 + y^-4");
  CHECK(p.str() == "y^-4 - 1 + 2*y^2");
  CHECK(LaurentPoly::parse(p.str()) == p);
  CHECK(LaurentPoly::constant(-1).str() == "-1");
  CHECK(LaurentPoly::monomial(-3, 1).str() == "-3*y");
  CHECK(LaurentPoly::parse("y^1 - y") .is_zero());

  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    LaurentPoly q = testutil::random_laurent(rng);
    CHECK(LaurentPoly::parse(q.str()) == q);
    BivariatePoly b = testutil::random_bivariate(rng);
    CHECK(BivariatePoly::parse(b.str()) == b);
  }
  CHECK_THROWS(LaurentPoly::parse("2*x"));
  CHECK_THROWS(LaurentPoly::parse("y^"));
  CHECK_THROWS(BivariatePoly::parse("y z"));
}

TEST_CASE("bivariate term order is (z, y)") {
  CHECK(d_const().str() == "y^-1*z^-1 + y*z^-1 - 1");
  CHECK(BivariatePoly::parse("z + y^-1 + y*z^-1").str() == "y*z^-1 + y^-1 + z");
}

TEST_CASE("no silent overflow") {
  const Coeff big = std::numeric_limits<Coeff>::max();
  LaurentPoly p = LaurentPoly::constant(big);
  CHECK_THROWS_AS(p + one, std::overflow_error);
  CHECK_THROWS_AS(p * LaurentPoly::constant(2), std::overflow_error);
  CHECK_THROWS_AS(checked_mul(big / 2 + 1, 2), std::overflow_error);
  LaurentPoly m = LaurentPoly::constant(std::numeric_limits<Coeff>::min());
  CHECK(m.str() == "-9223372036854775808");
  CHECK_THROWS_AS(-m, std::overflow_error);
}

TEST_CASE("pow_binom closed form") {
  CHECK(pow_binom(0, 0, 1) == one);
  CHECK(pow_binom(0, 1, 2) == LaurentPoly::constant(-1));
  CHECK(pow_binom(3, 0, 1) == LaurentPoly::monomial(1, 3));
  CHECK(pow_binom(0, 0, 2) == y + yi);
  for (int r = 1; r <= 8; ++r)
    for (int n = -2; n <= r + 2; ++n) CHECK(pow_binom(2, n, r).is_zero() == (n < 0 || n > r - 1));
  CHECK(binomial(7, 3) == 35);
  CHECK(binomial(3, 5) == 0);
}

TEST_CASE("bivariate plumbing") {
  CHECK(shift_z(BivariatePoly::constant(1), -1) == BivariatePoly::monomial(1, 0, -1));
  CHECK(d_const() * BivariatePoly::z() == BivariatePoly::parse("y + y^-1 - z"));
  CHECK(d_const() * BivariatePoly::z() + BivariatePoly::z() == BivariatePoly(y + yi));
  CHECK(subst_y_inverse(BivariatePoly::parse("y + y^-2*z")) == BivariatePoly::parse("y^-1 + y^2*z"));
  CHECK(d_const().term_count() == 3);
  CHECK(BivariatePoly::parse("y^2*z - 3*z + 1").at_y_one() == LaurentPoly::parse("1 - 2*y"));
}

TEST_CASE("ring axioms on random inputs") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    LaurentPoly a = testutil::random_laurent(rng), b = testutil::random_laurent(rng), c = testutil::random_laurent(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    BivariatePoly p = testutil::random_bivariate(rng), q = testutil::random_bivariate(rng), s = testutil::random_bivariate(rng);
    CHECK(p * q == q * p);
    CHECK((p * q) * s == p * (q * s));
    CHECK(p * (q + s) == p * q + p * s);
    CHECK(subst_y_inverse(subst_y_inverse(p)) == p);
    CHECK(subst_y_inverse(p * q) == subst_y_inverse(p) * subst_y_inverse(q));
  }
}

TEST_CASE("monotone coefficients resum to d^(r-1)") {
  for (int r = 1; r <= 8; ++r) {
    BivariatePoly sum;
    for (int n = 0; n < r; ++n) sum.set_z_coeff(n + 1 - r, pow_binom(0, n, r));
    CHECK(sum == d_const().pow(r - 1));
  }
}
