#include <doctest.h>

#include <thread>

#include "oracles.hpp"
#include "qident/qcomb.hpp"
#include "qident/serialize.hpp"

using namespace qident;

namespace {

LaurentPoly P(const char* text) { return parse_laurent(text); }

} // namespace

TEST_CASE("gauss_binomial examples") {
  CHECK(gauss_binomial(3, 1) == P("1 + q + q^2"));
  CHECK(gauss_binomial(4, 2) == P("1 + q + 2*q^2 + q^3 + q^4"));
  CHECK(gauss_binomial(2, 3).is_zero());
  CHECK(gauss_binomial(5, 0) == P("1"));
  CHECK(gauss_binomial(5, -1).is_zero());
  CHECK_THROWS_AS(gauss_binomial(-1, 0), UnsupportedIndex);
}

TEST_CASE("gauss_binomial matches the subset-sum oracle") {
  for (int n = 0; n <= 13; ++n)
    for (int k = 0; k <= n; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      CHECK(gauss_binomial(n, k) == oracle::to_poly(oracle::subset_binomial(n, k)));
    }
}

TEST_CASE("gauss_binomial matches the product formula") {
  for (int n = 0; n <= 25; ++n)
    for (int k = 0; k <= n; ++k)
      CHECK(gauss_binomial(n, k) == gauss_binomial_by_product(n, k));
}

TEST_CASE("degree and symmetry") {
  for (int n = 0; n <= 30; ++n)
    for (int k = 0; k <= n; ++k) {
      const auto b = gauss_binomial(n, k);
      CHECK(b.min_exponent() == 0);
      CHECK(b.max_exponent() == k * (n - k));
      CHECK(b == gauss_binomial(n, n - k));
      CHECK(b == substitute_power(b, -1).shifted(k * (n - k))); // palindromic
    }
}

TEST_CASE("base changes") {
  CHECK(gauss_binomial_base(2, 1, 2) == P("1 + q^2"));
  CHECK(gauss_binomial_base(2, 1, -1) == P("1 + q^-1"));
  CHECK(gauss_binomial_base(4, 2, -1) == P("1 + q + 2*q^2 + q^3 + q^4").shifted(-4));
  for (int n = 0; n <= 15; ++n)
    for (int k = 0; k <= n; ++k)
      CHECK(gauss_binomial_base(n, k, -1) == gauss_binomial(n, k).shifted(-k * (n - k)));
}

TEST_CASE("q_pochhammer") {
  CHECK(q_pochhammer(0) == P("1"));
  CHECK(q_pochhammer(2) == P("1 - q - q^2 + q^3"));
  CHECK(q_pochhammer(3) == P("1 - q - q^2 + q^4 + q^5 - q^6"));
  CHECK(q_pochhammer(2, 2, 2) == P("1 - q^2") * P("1 - q^4"));
  CHECK(q_pochhammer(1, 2, 3) == P("1 - q") * P("1 - q^3") * P("1 - q^5"));
  CHECK(q_pochhammer(7, 3, 0) == P("1"));
}

TEST_CASE("q_integer and plus_product") {
  CHECK(q_integer(0).is_zero());
  CHECK(q_integer(1) == P("1"));
  CHECK(q_integer(3) == P("1 + q + q^2"));
  CHECK(plus_product(0) == P("1"));
  CHECK(plus_product(2) == P("1 + q") * P("1 + q^2"));
  for (int m = 1; m <= 12; ++m)
    CHECK(q_integer(m) * P("1 - q") == P("1") - LaurentPoly::q_power(m));
}

TEST_CASE("q = 1 gives ordinary binomials") {
  for (int n = 0; n <= 30; ++n)
    for (int k = 0; k <= n; ++k)
      CHECK(evaluate_at(gauss_binomial(n, k), 1) == binomial(n, k));
}

TEST_CASE("concurrent memo access is consistent") {
  clear_binomial_cache();
  std::vector<std::vector<LaurentPoly>> seen(4);
  {
    std::vector<std::jthread> threads;
    for (int t = 0; t < 4; ++t)
      threads.emplace_back([&seen, t] {
        for (int n = 40; n >= 0; --n)
          seen[static_cast<std::size_t>(t)].push_back(gauss_binomial(n, n / 3));
      });
  }
  for (int t = 1; t < 4; ++t)
    CHECK(seen[static_cast<std::size_t>(t)] == seen[0]);
  clear_binomial_cache();
  CHECK(gauss_binomial(40, 13) == seen[0][0]);
}
