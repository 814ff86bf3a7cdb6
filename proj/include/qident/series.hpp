#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qident/laurent_poly.hpp"

namespace qident {

// Formal power series c_0 + c_1 q + ... + c_N q^N modulo q^(N+1).
//
// Binary arithmetic yields the smaller of the two orders, and == compares
// coefficients up to the common order.
class TruncatedSeries {
public:
  explicit TruncatedSeries(std::size_t order = 0) : coeffs_(order + 1) {}
  TruncatedSeries(std::size_t order, std::vector<Integer> coeffs);

  static TruncatedSeries one(std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  std::span<const Integer> coeffs() const { return coeffs_; }
  const Integer& operator[](std::size_t i) const { return coeffs_[i]; }
  Integer& operator[](std::size_t i) { return coeffs_[i]; }
  bool is_zero() const;

  // Multiplies in place by (1 - q^e), e >= 1.
  void times_one_minus_q_power(std::int64_t e);

  TruncatedSeries operator-() const;
  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

private:
  std::vector<Integer> coeffs_;
};

// q^shift * series: a power series whose lowest possible exponent is `shift`.
// Used for bilateral theta sums, which have negative exponents.
struct ShiftedSeries {
  std::int64_t shift = 0;
  TruncatedSeries series;

  // Coefficient of q^e; zero below `shift`. Precondition: e <= shift + order.
  Integer coefficient(std::int64_t e) const;

  // Equal on the common exponent window
  // [min(shift), min(shift + order)].
  friend bool operator==(const ShiftedSeries& a, const ShiftedSeries& b);
};

// Throws NegativeExponent when p has a negative exponent.
TruncatedSeries series_from_poly(const LaurentPoly& p, std::size_t order);

// Converts the series back to a polynomial (drops the truncation).
LaurentPoly series_to_poly(const ShiftedSeries& s);

// Multiplicative inverse; requires constant term +1 or -1.
TruncatedSeries series_invert(const TruncatedSeries& u);

// prod_{i >= 0, start + i*step <= order} (1 - q^(start + i*step)).
TruncatedSeries product_family(std::int64_t start, std::int64_t step, std::size_t order);

// sum over j in Z of (-1)^j q^(j(3j+1)/2), truncated at `order`.
TruncatedSeries pentagonal_theta(std::size_t order);

// sum over j in Z of (-1)^j q^(j(3j+1)/2 + m j).
//
// `shift` is the smallest exponent j(3j+1)/2 + m j over all integers j, and the
// series holds the coefficients of exponents shift .. shift + order. When the
// sum cancels entirely (m = 1 mod 3) the result is the zero series with
// shift 0.
ShiftedSeries shifted_theta(std::int64_t m, std::size_t order);

// prod_{n >= 0} (1 - q^(3n+2+m)) (1 - q^(3n+1-m)) (1 - q^(3n+3)).
//
// Factors with negative exponent are rewritten as
// (1 - q^-e) = -q^-e (1 - q^e); a zero exponent makes the product vanish.
ShiftedSeries triple_product(std::int64_t m, std::size_t order);

// shifted_theta(m, order) == triple_product(m, order).
bool triple_product_check(std::int64_t m, std::size_t order);

// p * s for a Laurent polynomial p: shift is p's lowest exponent and the
// order is that of s.
ShiftedSeries multiply(const LaurentPoly& p, const TruncatedSeries& s);

// e(q^t) = 1 / (q^t; q)_inf as a truncated series (t >= 1).
TruncatedSeries q_exponential_at_power(std::int64_t t, std::size_t order);

} // namespace qident
