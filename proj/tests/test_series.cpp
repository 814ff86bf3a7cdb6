#include <doctest.h>

#include "oracles.hpp"
#include "qident/serialize.hpp"
#include "qident/series.hpp"

using namespace qident;

namespace {

LaurentPoly P(const char* text) { return parse_laurent(text); }

std::vector<Integer> ints(std::initializer_list<long> v) {
  return {v.begin(), v.end()};
}

std::vector<Integer> coeffs_of(const TruncatedSeries& s) {
  return {s.coeffs().begin(), s.coeffs().end()};
}

} // namespace

TEST_CASE("series_from_poly") {
  CHECK(coeffs_of(series_from_poly(P("1 - q"), 3)) == ints({1, -1, 0, 0}));
  CHECK(coeffs_of(series_from_poly(LaurentPoly{}, 2)) == ints({0, 0, 0}));
  CHECK(coeffs_of(series_from_poly(P("q^5"), 3)) == ints({0, 0, 0, 0}));
  CHECK_THROWS_AS(series_from_poly(P("q^-1 + 1"), 3), NegativeExponent);
}

TEST_CASE("series_invert") {
  CHECK(coeffs_of(series_invert(series_from_poly(P("1 - q"), 4))) == ints({1, 1, 1, 1, 1}));
  CHECK(coeffs_of(series_invert(TruncatedSeries::one(3))) == ints({1, 0, 0, 0}));
  CHECK(coeffs_of(series_invert(series_from_poly(P("-1 + q"), 2))) == ints({-1, -1, -1}));
  CHECK_THROWS_AS(series_invert(series_from_poly(P("2 + q"), 2)), NonUnitConstantTerm);
  CHECK_THROWS_AS(series_invert(series_from_poly(P("q"), 2)), NonUnitConstantTerm);
}

TEST_CASE("inverse of the Euler product counts partitions") {
  CHECK(coeffs_of(series_invert(product_family(1, 1, 5))) == ints({1, 1, 2, 3, 5, 7}));
  const auto inverse = series_invert(product_family(1, 1, 60));
  CHECK(coeffs_of(inverse) == oracle::partition_counts(60));
}

TEST_CASE("product_family") {
  CHECK(coeffs_of(product_family(1, 1, 7)) == ints({1, -1, -1, 0, 0, 1, 0, 1}));
  CHECK(coeffs_of(product_family(3, 3, 2)) == ints({1, 0, 0}));
  CHECK(coeffs_of(product_family(1, 2, 4)) == ints({1, -1, 0, -1, 1}));
  CHECK_THROWS_AS(product_family(0, 1, 4), std::invalid_argument);
  // Against a dense oracle product.
  oracle::Dense d = oracle::constant(1);
  for (int e = 2; e <= 30; e += 4)
    d = oracle::mul(d, oracle::one_minus(e));
  CHECK(product_family(2, 4, 30) == series_from_poly(oracle::to_poly(d), 30));
}

TEST_CASE("pentagonal_theta") {
  CHECK(coeffs_of(pentagonal_theta(7)) == ints({1, -1, -1, 0, 0, 1, 0, 1}));
  CHECK(coeffs_of(pentagonal_theta(0)) == ints({1}));
  CHECK(pentagonal_theta(12)[12] == -1);
  CHECK(pentagonal_theta(500) == product_family(1, 1, 500));
}

TEST_CASE("truncated arithmetic takes the smaller order") {
  const auto a = series_from_poly(P("1 + q + q^2"), 5);
  const auto b = series_from_poly(P("1 - q"), 2);
  CHECK((a * b).order() == 2);
  CHECK((a + b).order() == 2);
  CHECK(coeffs_of(a * b) == ints({1, 0, 0}));
  CHECK(a == series_from_poly(P("1 + q + q^2 + q^4"), 2));
  CHECK_FALSE(a == series_from_poly(P("1 + q + q^2 + q^4"), 4));
}

TEST_CASE("shifted_theta") {
  const auto t0 = shifted_theta(0, 30);
  CHECK(t0.shift == 0);
  CHECK(t0.series == pentagonal_theta(30));

  const auto t3 = shifted_theta(3, 40);
  CHECK(t3.shift == -2);
  CHECK(t3.coefficient(-2) == -1);
  // Direct enumeration over j.
  for (std::int64_t e = -2; e <= 38; ++e) {
    Integer c = 0;
    for (std::int64_t j = -20; j <= 20; ++j)
      if (j * (3 * j + 1) / 2 + 3 * j == e)
        c += (j % 2 == 0) ? 1 : -1;
    CHECK(t3.coefficient(e) == c);
  }

  for (std::int64_t m : {1, 4, 7, -2})
    CHECK(shifted_theta(m, 50).series.is_zero());
}

TEST_CASE("triple product") {
  for (std::int64_t m = 0; m <= 9; ++m)
    CHECK(triple_product_check(m, 30));
  CHECK(triple_product(1, 30).series.is_zero());
  CHECK(triple_product(3, 60) == shifted_theta(3, 60));
}

TEST_CASE("multiply and shifted equality") {
  const auto prod = multiply(P("-q^-2"), product_family(1, 1, 20));
  CHECK(prod.shift == -2);
  CHECK(prod.coefficient(-2) == -1);
  CHECK(prod.coefficient(-1) == 1);
  CHECK(prod == shifted_theta(3, 20));
  // Windows are compared where both are defined.
  const ShiftedSeries a{0, series_from_poly(P("1 + q"), 5)};
  const ShiftedSeries b{-1, series_from_poly(P("q + q^2"), 3)};
  CHECK(a == b);
}

TEST_CASE("q-exponential shift") {
  for (std::int64_t t = 1; t <= 5; ++t)
    CHECK(q_exponential_at_power(t + 1, 100) ==
          series_from_poly(one_minus_q_power(t), 100) * q_exponential_at_power(t, 100));
  CHECK(q_exponential_at_power(1, 60) == series_invert(product_family(1, 1, 60)));
}

TEST_CASE("series text round trip") {
  const auto t3 = shifted_theta(3, 10);
  const std::string text = to_text(t3);
  CHECK(text.rfind(" + O(q^9)") != std::string::npos);
  CHECK(parse_series(text) == t3);
}
