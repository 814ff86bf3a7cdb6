#pragma once

#include <span>
#include <vector>

#include "qident/laurent_poly.hpp"

namespace qident {

// Laurent polynomial in s whose coefficients are Laurent polynomials in q.
// Terms are sorted by s-exponent and no coefficient is the zero polynomial.
class BivarPoly {
public:
  struct Term {
    Exponent s_exponent;
    LaurentPoly coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  BivarPoly() = default;
  // A polynomial constant in s.
  explicit BivarPoly(LaurentPoly constant);

  static BivarPoly s_power(Exponent k, LaurentPoly coeff = LaurentPoly::constant(1));
  static BivarPoly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  std::span<const Term> terms() const { return terms_; }
  LaurentPoly coefficient(Exponent k) const;

  BivarPoly operator-() const;
  BivarPoly& operator+=(const BivarPoly& other);
  BivarPoly& operator-=(const BivarPoly& other);

  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
  friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
  friend BivarPoly operator*(const BivarPoly& a, const LaurentPoly& c);
  friend BivarPoly operator*(const LaurentPoly& c, const BivarPoly& a) { return a * c; }

  friend bool operator==(const BivarPoly&, const BivarPoly&) = default;

private:
  std::vector<Term> terms_;
};

// s -> value; s^k contributes sign^k q^(k * exponent).
LaurentPoly substitute_s(const BivarPoly& p, Monomial value);

// s -> q^j s: the coefficient of s^k picks up q^(j k).
BivarPoly shift_s(const BivarPoly& p, Exponent j);

// Multiplication by s^k.
BivarPoly times_s_power(const BivarPoly& p, Exponent k);

// q -> q^m applied to every coefficient.
BivarPoly substitute_q_power(const BivarPoly& p, std::int64_t m);

} // namespace qident
