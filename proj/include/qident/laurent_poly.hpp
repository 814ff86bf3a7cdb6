#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "qident/errors.hpp"

namespace qident {

using Integer = mpz_class;
using Rational = mpq_class;
using Exponent = std::int64_t;

// Floor division and nonnegative residue; the sign conventions of the
// w-sequence depend on rounding toward minus infinity.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t d = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0)))
    --d;
  return d;
}

constexpr std::int64_t floor_mod(std::int64_t a, std::int64_t b) {
  return a - b * floor_div(a, b);
}

// a(a-1)/2, valid for negative a as well.
constexpr std::int64_t choose2(std::int64_t a) { return a * (a - 1) / 2; }

// sign * q^exponent with sign in {-1, +1}.
struct Monomial {
  int sign = 1;
  Exponent exponent = 0;

  static constexpr Monomial one() { return {1, 0}; }
  static constexpr Monomial minus_one() { return {-1, 0}; }
  static constexpr Monomial q_power(Exponent e, int sign = 1) { return {sign, e}; }

  // m^k for any integer k (a monomial is a unit in the Laurent ring).
  constexpr Monomial pow(std::int64_t k) const {
    return {(sign < 0 && (k % 2 != 0)) ? -1 : 1, exponent * k};
  }

  friend constexpr Monomial operator*(Monomial a, Monomial b) {
    return {a.sign * b.sign, a.exponent + b.exponent};
  }
  friend constexpr Monomial operator-(Monomial a) { return {-a.sign, a.exponent}; }
  friend constexpr bool operator==(Monomial, Monomial) = default;
};

// Exact univariate Laurent polynomial in q with arbitrary-precision integer
// coefficients.
//
// Stored as a flat sparse map: terms sorted by strictly increasing exponent,
// no zero coefficients. The zero polynomial has no terms, so equality is
// plain structural equality.
class LaurentPoly {
public:
  struct Term {
    Exponent exponent;
    Integer coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  LaurentPoly() = default;
  LaurentPoly(Monomial m);

  static LaurentPoly constant(const Integer& c);
  static LaurentPoly monomial(const Integer& c, Exponent e);
  static LaurentPoly q_power(Exponent e) { return monomial(1, e); }
  // Sorts, merges equal exponents and strips zeros.
  static LaurentPoly from_terms(std::vector<Term> terms);
  // Dense coefficients starting at exponent `low`.
  static LaurentPoly from_dense(Exponent low, std::span<const Integer> coeffs);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::span<const Term> terms() const { return terms_; }
  Integer coefficient(Exponent e) const;

  // Preconditions: !is_zero().
  Exponent min_exponent() const { return terms_.front().exponent; }
  Exponent max_exponent() const { return terms_.back().exponent; }

  // True when this is +-q^e (used for sign bookkeeping).
  bool is_monomial() const { return terms_.size() == 1; }

  // Multiplication by q^k.
  LaurentPoly shifted(Exponent k) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, Monomial m);
  friend LaurentPoly operator*(Monomial m, const LaurentPoly& a) { return a * m; }
  friend LaurentPoly operator*(const LaurentPoly& a, const Integer& c);

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

private:
  std::vector<Term> terms_;
};

// Quotient t with t * d == p. Throws NonzeroRemainder when d does not divide
// p in Z[q, 1/q], std::invalid_argument when d is zero.
LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& d);

// q -> q^m. m must be nonzero.
LaurentPoly substitute_power(const LaurentPoly& p, std::int64_t m);

// Exact value at q = v (v nonzero).
Rational evaluate_at(const LaurentPoly& p, const Integer& v);

// 1 - q^e as a polynomial (zero when e == 0).
LaurentPoly one_minus_q_power(Exponent e);

} // namespace qident
