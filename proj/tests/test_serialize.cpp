#include <doctest.h>

#include "oracles.hpp"
#include "qident/serialize.hpp"

using namespace qident;
using nlohmann::json;

TEST_CASE("text form of Laurent polynomials") {
  CHECK(to_text(LaurentPoly{}) == "0");
  CHECK(to_text(parse_laurent("q^-1")) == "q^-1");
  CHECK(to_text(LaurentPoly::from_terms({{0, 1}, {1, -1}, {3, 2}})) == "1 - q + 2*q^3");
  CHECK(to_text(LaurentPoly::from_terms({{-2, -3}, {0, 1}})) == "-3*q^-2 + 1");
  CHECK(to_text(LaurentPoly::monomial(-1, 1)) == "-q");
}

TEST_CASE("text parser accepts variants") {
  CHECK(parse_laurent("q^(-1)") == LaurentPoly::q_power(-1));
  CHECK(parse_laurent("  2*q^3 -q+1 ") == LaurentPoly::from_terms({{0, 1}, {1, -1}, {3, 2}}));
  CHECK(parse_laurent("0").is_zero());
  CHECK(parse_laurent("q + q") == LaurentPoly::monomial(2, 1));
  CHECK_THROWS_AS(parse_laurent(""), ParseError);
  CHECK_THROWS_AS(parse_laurent("1 +"), ParseError);
  CHECK_THROWS_AS(parse_laurent("x"), ParseError);
  CHECK_THROWS_AS(parse_laurent("2*"), ParseError);
  CHECK_THROWS_AS(parse_laurent("q^"), ParseError);
}

TEST_CASE("bivariate text form") {
  const BivarPoly p = BivarPoly::from_terms(
      {{-1, LaurentPoly::q_power(2)}, {0, parse_laurent("1 + q")}, {1, LaurentPoly::q_power(1)}});
  CHECK(to_text(p) == "(q^2)*s^-1 + (1 + q) + (q)*s");
  CHECK(parse_bivar(to_text(p)) == p);
  CHECK(to_text(BivarPoly{}) == "0");
  CHECK(parse_bivar("0").is_zero());
  CHECK_THROWS_AS(parse_bivar("(1"), ParseError);
}

TEST_CASE("JSON forms") {
  const LaurentPoly p = parse_laurent("-q^-1 + 3*q^2");
  CHECK(to_json(p).dump() == R"({"terms":[[-1,"-1"],[2,"3"]],"var":"q"})");
  CHECK(laurent_from_json(json::parse(R"({"var":"q","terms":[[0,5],[1,"-2"]]})")) ==
        parse_laurent("5 - 2*q"));
  CHECK_THROWS_AS(laurent_from_json(json::parse(R"({"var":"s","terms":[]})")), ParseError);
  CHECK_THROWS_AS(laurent_from_json(json::parse(R"({"var":"q","terms":[[0,"x"]]})")), ParseError);
  CHECK_THROWS_AS(laurent_from_json(json::parse(R"({"var":"q","terms":[[0.5,"1"]]})")), ParseError);

  const BivarPoly b = parse_bivar("(q^2)*s^-1 + (1 + q)");
  const json jb = to_json(b);
  CHECK(jb.at("var") == "s");
  CHECK(jb.at("coeff_var") == "q");
  CHECK(jb.at("terms").dump() == R"([[-1,[[2,"1"]]],[0,[[0,"1"],[1,"1"]]]])");
  CHECK(bivar_from_json(jb) == b);

  const LaurentPoly big = LaurentPoly::monomial(Integer("123456789012345678901234567890"), 7);
  CHECK(laurent_from_json(json::parse(to_json(big).dump())) == big);
}

TEST_CASE("CSV forms") {
  CHECK(to_csv(parse_laurent("1 - q^2")) == "exponent,coefficient\n0,1\n2,-1\n");
  CHECK(to_csv(parse_bivar("(1) + (-q)*s")) ==
        "s_exponent,q_exponent,coefficient\n0,0,1\n1,1,-1\n");
}

TEST_CASE("series forms") {
  TruncatedSeries s(3);
  s[0] = 1;
  s[2] = -4;
  const ShiftedSeries x{-1, s};
  CHECK(to_text(x) == "q^-1 - 4*q + O(q^3)");
  CHECK(parse_series(to_text(x)) == x);
  CHECK(series_from_json(to_json(x)) == x);
  CHECK(to_json(x).at("shift") == -1);
  CHECK(to_json(x).at("order") == 3);
  CHECK(to_text(ShiftedSeries{0, TruncatedSeries(2)}) == "O(q^3)");
  CHECK_THROWS_AS(parse_series("1 + q^5 + O(q^3)"), ParseError);
  CHECK_THROWS_AS(parse_series("1 + q"), ParseError);
}

TEST_CASE("round trips on random values") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 300; ++trial) {
    const LaurentPoly p = oracle::random_poly(rng, 8, 20, 1000000);
    CHECK(parse_laurent(to_text(p)) == p);
    CHECK(laurent_from_json(json::parse(to_json(p).dump())) == p);

    std::vector<BivarPoly::Term> terms;
    for (int k = -2; k <= 2; ++k)
      terms.push_back({k, oracle::random_poly(rng, 3, 5, 50)});
    const BivarPoly b = BivarPoly::from_terms(std::move(terms));
    CHECK(parse_bivar(to_text(b)) == b);
    CHECK(bivar_from_json(json::parse(to_json(b).dump())) == b);
  }
}
