#include "qident/pentagon.hpp"

#include <string>

#include "qident/qcomb.hpp"

namespace qident {

namespace {

void require_nonnegative(std::int64_t v, const char* what) {
  if (v < 0)
    throw UnsupportedIndex(std::string(what) + " must be nonnegative, got " + std::to_string(v));
}

LaurentPoly signed_q_power(bool negative, Exponent e) {
  return LaurentPoly::monomial(negative ? -1 : 1, e);
}

} // namespace

LaurentPoly w_seq(std::int64_t n, WVariant variant) {
  if (floor_mod(n, 3) == 2)
    return {};
  const Exponent e = n * (n - 1) / 6;
  const bool negative = floor_mod(floor_div(n, 3), 2) == 1;
  return signed_q_power(negative, variant == WVariant::reciprocal ? -e : e);
}

LaurentPoly h_direct(std::int64_t L, std::int64_t k) {
  require_nonnegative(L, "h_direct: L");
  require_nonnegative(k, "h_direct: k");
  LaurentPoly sum;
  for (std::int64_t j = -L; j <= 2 * L; ++j) {
    LaurentPoly b = gauss_binomial(2 * L - j, L + j);
    if (b.is_zero())
      continue;
    const Exponent e = j * (3 * j + 1) / 2 + k * j;
    sum += (j % 2 == 0 ? b : -b).shifted(e);
  }
  return sum;
}

std::vector<LaurentPoly> h_closed_terms(std::int64_t L, std::int64_t k, WVariant variant) {
  require_nonnegative(L, "h_closed: L");
  require_nonnegative(k, "h_closed: k");
  std::vector<LaurentPoly> terms;
  terms.reserve(static_cast<std::size_t>(k + 1));
  for (std::int64_t j = 0; j <= k; ++j) {
    LaurentPoly t = gauss_binomial(k, j).shifted(choose2(j + 1) + j * L) * w_seq(-k - j, variant);
    terms.push_back(j % 2 == 0 ? std::move(t) : -t);
  }
  return terms;
}

LaurentPoly h_closed(std::int64_t L, std::int64_t k, WVariant variant) {
  LaurentPoly sum;
  for (const auto& t : h_closed_terms(L, k, variant))
    sum += t;
  return sum;
}

LaurentPoly h_closed_reflected(std::int64_t L, std::int64_t k, WVariant variant) {
  require_nonnegative(L, "h_closed: L");
  require_nonnegative(k, "h_closed: k");
  LaurentPoly sum;
  for (std::int64_t j = 0; j <= k; ++j) {
    LaurentPoly t = gauss_binomial(k, j).shifted(choose2(j + 1) + j * L) * w_seq(k + j + 1, variant);
    sum += j % 2 == 0 ? t : -t;
  }
  return sum;
}

LaurentPoly h_limit(std::int64_t m) {
  require_nonnegative(m, "h_limit: m");
  return w_seq(-m, WVariant::reciprocal);
}

BivarPoly qfib_F(std::int64_t n) {
  if (n < 0) {
    const std::int64_t m = -n;
    BivarPoly p = times_s_power(qfib_F(m), -m);
    return (m - 1) % 2 == 0 ? p : -p;
  }
  std::vector<BivarPoly::Term> terms;
  for (std::int64_t k = 0; 2 * k <= n - 1; ++k)
    terms.push_back({k, gauss_binomial(n - k - 1, k).shifted(choose2(k + 1))});
  return BivarPoly::from_terms(std::move(terms));
}

BivarPoly f_lower(std::int64_t n) {
  if (n < 0)
    return substitute_q_power(qfib_F(n), -1);
  std::vector<BivarPoly::Term> terms;
  for (std::int64_t k = 0; k <= n - 1; ++k)
    terms.push_back({k, gauss_binomial_base(n - 1 - k, k, -1).shifted(-choose2(k + 1))});
  return BivarPoly::from_terms(std::move(terms));
}

BivarPoly f_lower_via_F(std::int64_t n) { return substitute_q_power(qfib_F(n), -1); }

BivarPoly G_direct(std::int64_t L, std::int64_t i) {
  require_nonnegative(L, "G_direct: L");
  if (2 * L + i < -L)
    throw EmptyRange("G_direct: empty summation range for L = " + std::to_string(L) +
                     ", i = " + std::to_string(i));
  std::vector<BivarPoly::Term> terms;
  for (std::int64_t j = -L; j <= 2 * L + i; ++j) {
    LaurentPoly b = gauss_binomial(2 * L + i - j, L + j);
    if (b.is_zero())
      continue;
    terms.push_back({j, b.shifted(j * (3 * j - 1) / 2 - i * j)});
  }
  return BivarPoly::from_terms(std::move(terms));
}

BivarPoly G_extended(std::int64_t L, std::int64_t i) {
  require_nonnegative(L, "G_extended: L");
  const Exponent e = L * (3 * L + 1) / 2 + i * L;
  return times_s_power(f_lower(3 * L + i + 1), -L) * LaurentPoly::q_power(e);
}

std::array<Integer, 3> binomial_class_sums(std::int64_t n) {
  require_nonnegative(n, "binomial_class_sums: n");
  std::array<Integer, 3> sums{0, 0, 0};
  for (std::int64_t j = 0; j <= n; ++j)
    sums[static_cast<std::size_t>(j % 3)] += binomial(n, j);
  return sums;
}

} // namespace qident
