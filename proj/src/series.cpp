#include "qident/series.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace qident {

TruncatedSeries::TruncatedSeries(std::size_t order, std::vector<Integer> coeffs)
    : coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1);
}

TruncatedSeries TruncatedSeries::one(std::size_t order) {
  TruncatedSeries s(order);
  s.coeffs_[0] = 1;
  return s;
}

bool TruncatedSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c == 0; });
}

void TruncatedSeries::times_one_minus_q_power(std::int64_t e) {
  assert(e >= 1);
  const auto step = static_cast<std::size_t>(e);
  for (std::size_t i = coeffs_.size(); i-- > step;)
    coeffs_[i] -= coeffs_[i - step];
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries out = *this;
  for (auto& c : out.coeffs_)
    c = -c;
  return out;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out(std::min(a.order(), b.order()));
  for (std::size_t i = 0; i <= out.order(); ++i)
    out[i] = a[i] + b[i];
  return out;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out(std::min(a.order(), b.order()));
  for (std::size_t i = 0; i <= out.order(); ++i)
    out[i] = a[i] - b[i];
  return out;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  TruncatedSeries out(n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a[i] == 0)
      continue;
    for (std::size_t j = 0; i + j <= n; ++j)
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  return out;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  return std::equal(a.coeffs_.begin(), a.coeffs_.begin() + static_cast<std::ptrdiff_t>(n + 1),
                    b.coeffs_.begin());
}

Integer ShiftedSeries::coefficient(std::int64_t e) const {
  if (e < shift)
    return 0;
  const auto idx = static_cast<std::size_t>(e - shift);
  assert(idx <= series.order());
  return series[idx];
}

bool operator==(const ShiftedSeries& a, const ShiftedSeries& b) {
  const std::int64_t lo = std::min(a.shift, b.shift);
  const std::int64_t hi = std::min(a.shift + static_cast<std::int64_t>(a.series.order()),
                                   b.shift + static_cast<std::int64_t>(b.series.order()));
  for (std::int64_t e = lo; e <= hi; ++e)
    if (a.coefficient(e) != b.coefficient(e))
      return false;
  return true;
}

TruncatedSeries series_from_poly(const LaurentPoly& p, std::size_t order) {
  TruncatedSeries out(order);
  for (const auto& t : p.terms()) {
    if (t.exponent < 0)
      throw NegativeExponent("series_from_poly: term q^" + std::to_string(t.exponent) +
                             " has a negative exponent");
    if (static_cast<std::size_t>(t.exponent) <= order)
      out[static_cast<std::size_t>(t.exponent)] = t.coeff;
  }
  return out;
}

LaurentPoly series_to_poly(const ShiftedSeries& s) {
  return LaurentPoly::from_dense(s.shift, s.series.coeffs());
}

TruncatedSeries series_invert(const TruncatedSeries& u) {
  const Integer& c0 = u[0];
  if (c0 != 1 && c0 != -1)
    throw NonUnitConstantTerm("series_invert: constant term is not +1 or -1");
  const std::size_t n = u.order();
  TruncatedSeries v(n);
  // v_0 = 1/c0 = c0; v_i = -c0 * sum_{j=1}^{i} u_j v_{i-j}.
  v[0] = c0;
  Integer acc;
  for (std::size_t i = 1; i <= n; ++i) {
    acc = 0;
    for (std::size_t j = 1; j <= i; ++j)
      if (u[j] != 0)
        mpz_addmul(acc.get_mpz_t(), u[j].get_mpz_t(), v[i - j].get_mpz_t());
    v[i] = -c0 * acc;
  }
  return v;
}

TruncatedSeries product_family(std::int64_t start, std::int64_t step, std::size_t order) {
  if (start < 1 || step < 1)
    throw std::invalid_argument("product_family: start and step must be positive");
  TruncatedSeries out = TruncatedSeries::one(order);
  for (std::int64_t e = start; e <= static_cast<std::int64_t>(order); e += step)
    out.times_one_minus_q_power(e);
  return out;
}

namespace {

// j(3j+1)/2 + m j
std::int64_t theta_exponent(std::int64_t j, std::int64_t m) {
  return (3 * j * j + (2 * m + 1) * j) / 2;
}

} // namespace

TruncatedSeries pentagonal_theta(std::size_t order) {
  return shifted_theta(0, order).series;
}

ShiftedSeries shifted_theta(std::int64_t m, std::size_t order) {
  // The exponent is a convex quadratic in j with vertex at -(2m+1)/6.
  const std::int64_t centre = floor_div(-(2 * m + 1), 6);
  std::int64_t lowest = theta_exponent(centre, m);
  for (std::int64_t j = centre - 1; j <= centre + 2; ++j)
    lowest = std::min(lowest, theta_exponent(j, m));

  const std::int64_t bound = lowest + static_cast<std::int64_t>(order);
  TruncatedSeries series(order);
  // The vertex lies in [centre, centre + 1); exponents grow away from it on
  // both sides, so each walk stops at the first out-of-window term.
  auto add = [&](std::int64_t j) {
    const std::int64_t e = theta_exponent(j, m);
    if (e > bound)
      return false;
    series[static_cast<std::size_t>(e - lowest)] += (j % 2 == 0) ? 1 : -1;
    return true;
  };
  for (std::int64_t j = centre; add(j) || j <= centre + 1; ++j) {
  }
  for (std::int64_t j = centre - 1; add(j); --j) {
  }
  if (series.is_zero())
    return {0, TruncatedSeries(order)};
  return {lowest, std::move(series)};
}

ShiftedSeries triple_product(std::int64_t m, std::size_t order) {
  const auto top = static_cast<std::int64_t>(order);
  TruncatedSeries series = TruncatedSeries::one(order);
  std::int64_t shift = 0;
  int sign = 1;
  for (std::int64_t start : {2 + m, 1 - m, std::int64_t{3}}) {
    for (std::int64_t e = start; e <= top; e += 3) {
      if (e == 0)
        return {0, TruncatedSeries(order)};
      if (e < 0) {
        sign = -sign;
        shift += e;
        if (-e <= top)
          series.times_one_minus_q_power(-e);
      } else {
        series.times_one_minus_q_power(e);
      }
    }
  }
  if (sign < 0)
    series = -series;
  return {shift, std::move(series)};
}

bool triple_product_check(std::int64_t m, std::size_t order) {
  return shifted_theta(m, order) == triple_product(m, order);
}

ShiftedSeries multiply(const LaurentPoly& p, const TruncatedSeries& s) {
  const std::size_t n = s.order();
  if (p.is_zero())
    return {0, TruncatedSeries(n)};
  const std::int64_t low = p.min_exponent();
  TruncatedSeries out(n);
  for (const auto& t : p.terms()) {
    const auto offset = static_cast<std::size_t>(t.exponent - low);
    for (std::size_t i = 0; i + offset <= n; ++i)
      mpz_addmul(out[i + offset].get_mpz_t(), t.coeff.get_mpz_t(), s[i].get_mpz_t());
  }
  return {low, std::move(out)};
}

TruncatedSeries q_exponential_at_power(std::int64_t t, std::size_t order) {
  return series_invert(product_family(t, 1, order));
}

} // namespace qident
