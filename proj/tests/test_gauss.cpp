#include <doctest.h>

#include "oracles.hpp"
#include "qident/gauss.hpp"
#include "qident/qcomb.hpp"
#include "qident/serialize.hpp"

using namespace qident;

namespace {

LaurentPoly P(const char* text) { return parse_laurent(text); }
BivarPoly B(const char* text) { return parse_bivar(text); }

// r_n(1, a) summed with subset-sum binomials.
LaurentPoly rs_oracle(int n, int sign, int a_exp) {
  oracle::Dense sum;
  for (int k = 0; k <= n; ++k) {
    const int count = n - k;
    const int s = (sign < 0 && count % 2 != 0) ? -1 : 1;
    sum = oracle::add(sum, oracle::mul(oracle::monomial(s, static_cast<std::int64_t>(a_exp) * count),
                                       oracle::subset_binomial(n, k)));
  }
  return oracle::to_poly(sum);
}

const Monomial one = Monomial::one();

} // namespace

TEST_CASE("Rogers-Szego examples") {
  CHECK(rs_direct(2, one, Monomial::minus_one()) == P("1 - q"));
  CHECK(rs_direct(3, one, Monomial::minus_one()).is_zero());
  CHECK(rs_direct(0, Monomial{-1, 5}, Monomial{1, -2}) == P("1"));
  CHECK(rs_direct(1, one, Monomial{-1, 3}) == P("1 - q^3"));
  for (int n = 0; n <= 12; ++n)
    for (int a = 0; a <= 3; ++a)
      CHECK(rs_direct(n, one, Monomial{-1, a}) == rs_oracle(n, -1, a));
  CHECK_THROWS_AS(rs_direct(-1, one, one), UnsupportedIndex);
}

TEST_CASE("Gauss evaluation") {
  CHECK(gauss_eval(2) == P("1 - q"));
  CHECK(gauss_eval(4) == P("1 - q - q^3 + q^4"));
  CHECK(gauss_eval(1).is_zero());
  CHECK(gauss_eval(0) == P("1"));
  for (int n = 0; n <= 24; ++n)
    CHECK(gauss_eval(n) == rs_direct(n, one, Monomial::minus_one()));
}

TEST_CASE("generating-function formula") {
  CHECK(rs_qk_via_gf(2, 1) == rs_direct(2, one, Monomial{-1, 1}));
  CHECK(rs_qk_via_gf(2, 1) == P("1 - q"));
  for (int n = 0; n <= 10; ++n)
    CHECK(rs_qk_via_gf(n, 0) == gauss_eval(n));
  for (int m = 1; m <= 10; ++m)
    CHECK(rs_qk_via_gf(2 * m - 1, 1) == gauss_eval(2 * m));
}

TEST_CASE("ratios b and c") {
  for (int n = 1; n <= 10; ++n) {
    CHECK(b_ratio(n, 1) == P("1"));
    CHECK(b_ratio(n, 2) == P("1 + q"));
    CHECK(c_ratio(n, 0) == P("1"));
    CHECK(c_ratio(n, 1) == P("1"));
  }
  CHECK(b_ratio(1, 3) == P("1 + q + q^2"));
  CHECK(c_ratio(1, 2) == P("1 + q - q^3"));
  CHECK_THROWS_AS(b_ratio(0, 1), UnsupportedIndex);
  // The defining negative form agrees with the positive one.
  for (int n = 1; n <= 6; ++n)
    for (int k = 0; k <= 6; ++k)
      CHECK(b_ratio(n, k) ==
            exact_div(-rs_direct(2 * n - 1, Monomial::q_power(k), Monomial::minus_one()),
                      gauss_eval(2 * n)));
}

TEST_CASE("f polynomials") {
  CHECK(f_poly_rec(0).is_zero());
  CHECK(f_poly_rec(1) == B("(1)"));
  CHECK(f_poly_rec(2) == B("(1 + q)"));
  CHECK(f_poly_rec(3) == B("(1 + q + q^2 + q^3) + (-q)*s"));
  CHECK(f_poly_closed(1) == B("(1)"));
  CHECK(f_poly_closed(2) == B("(1 + q)"));
  CHECK(f_poly_closed(3) == f_poly_rec(3));
  for (int k = 0; k <= 15; ++k)
    CHECK(f_poly_closed(k) == f_poly_rec(k));
}

TEST_CASE("Theorem 2 closed forms") {
  for (int n = 1; n <= 8; ++n) {
    const LaurentPoly t = one_minus_q_power(2 * n - 2);
    CHECK(theorem2_odd(n, 4) == gauss_binomial(4, 1) + gauss_binomial(4, 3).shifted(3) * t);
    CHECK(theorem2_odd(n, 5) == gauss_binomial(5, 1) + gauss_binomial(5, 3).shifted(3) * t +
                                    LaurentPoly::q_power(10) * t * one_minus_q_power(2 * n - 4));
    CHECK(theorem2_odd(n, 0).is_zero());
    const LaurentPoly u = one_minus_q_power(2 * n);
    CHECK(theorem2_even(n, 2) == P("1") + u.shifted(1));
    CHECK(theorem2_even(n, 3) == P("1") + u.shifted(1) * gauss_binomial(3, 2));
    CHECK(theorem2_even(n, 4) == P("1") + u.shifted(1) * gauss_binomial(4, 2) +
                                     u.shifted(6) * one_minus_q_power(2 * n - 2));
    CHECK(theorem2_even(n, 0) == P("1"));
    for (int k = 0; k <= 10; ++k) {
      CHECK(theorem2_odd(n, k) == b_ratio(n, k));
      CHECK(theorem2_even(n, k) == c_ratio(n, k));
      CHECK(b_ratio(n, k) == substitute_s(f_poly_rec(k), Monomial::q_power(2 * n)));
    }
  }
}

TEST_CASE("alternate product forms") {
  for (int n = 1; n <= 6; ++n)
    for (int k = 0; k <= 8; ++k) {
      CHECK(rs_odd_product_form(n, k) == rs_direct(2 * n - 1, one, Monomial{-1, k}));
      CHECK(rs_even_product_form(n, k) == rs_direct(2 * n, one, Monomial{-1, k}));
    }
}
