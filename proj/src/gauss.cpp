#include "qident/gauss.hpp"

#include <string>

#include "qident/qcomb.hpp"

namespace qident {

namespace {

void require_at_least(std::int64_t v, std::int64_t lo, const char* what) {
  if (v < lo)
    throw UnsupportedIndex(std::string(what) + " must be >= " + std::to_string(lo) + ", got " +
                           std::to_string(v));
}

LaurentPoly alternating(std::int64_t j, LaurentPoly p) { return j % 2 == 0 ? p : -p; }

} // namespace

LaurentPoly rs_direct(std::int64_t n, Monomial x, Monomial a) {
  require_at_least(n, 0, "rs_direct: n");
  LaurentPoly sum;
  for (std::int64_t k = 0; k <= n; ++k)
    sum += gauss_binomial(n, k) * (x.pow(k) * a.pow(n - k));
  return sum;
}

LaurentPoly gauss_eval(std::int64_t n) {
  require_at_least(n, 0, "gauss_eval: n");
  if (n % 2 != 0)
    return {};
  return q_pochhammer(1, 2, n / 2);
}

LaurentPoly rs_qk_via_gf(std::int64_t n, std::int64_t k) {
  require_at_least(n, 0, "rs_qk_via_gf: n");
  require_at_least(k, 0, "rs_qk_via_gf: k");
  const LaurentPoly numerator = q_pochhammer(n);
  LaurentPoly sum;
  for (std::int64_t j = n % 2; j <= n; j += 2) {
    LaurentPoly b = gauss_binomial(k, j);
    if (b.is_zero())
      continue;
    const std::int64_t l = (n - j) / 2;
    sum += b.shifted(choose2(j)) * exact_div(numerator, q_pochhammer(2, 2, l));
  }
  return sum;
}

LaurentPoly b_ratio(std::int64_t n, std::int64_t k) {
  require_at_least(n, 1, "b_ratio: n");
  require_at_least(k, 0, "b_ratio: k");
  return exact_div(rs_direct(2 * n - 1, Monomial::one(), Monomial::q_power(k, -1)),
                   gauss_eval(2 * n));
}

LaurentPoly c_ratio(std::int64_t n, std::int64_t k) {
  require_at_least(n, 0, "c_ratio: n");
  require_at_least(k, 0, "c_ratio: k");
  return exact_div(rs_direct(2 * n, Monomial::one(), Monomial::q_power(k, -1)), gauss_eval(2 * n));
}

BivarPoly f_poly_rec(std::int64_t k) {
  require_at_least(k, 0, "f_poly_rec: k");
  BivarPoly prev;                                         // f(0)
  BivarPoly cur(LaurentPoly::constant(1));                // f(1)
  if (k == 0)
    return prev;
  const BivarPoly s = BivarPoly::s_power(1);
  for (std::int64_t i = 2; i <= k; ++i) {
    BivarPoly next = cur * (LaurentPoly::constant(1) + LaurentPoly::q_power(i - 1)) -
                     s * prev * LaurentPoly::q_power(i - 2);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

BivarPoly f_poly_closed(std::int64_t k) {
  require_at_least(k, 0, "f_poly_closed: k");
  std::vector<BivarPoly::Term> terms;
  for (std::int64_t j = 0; 2 * j <= k - 1; ++j) {
    LaurentPoly c = gauss_binomial_base(k - j - 1, j, 2) * plus_product(k - 1 - 2 * j);
    terms.push_back({j, alternating(j, c.shifted(j * j))});
  }
  return BivarPoly::from_terms(std::move(terms));
}

LaurentPoly theorem2_odd(std::int64_t n, std::int64_t k) {
  require_at_least(n, 1, "theorem2_odd: n");
  require_at_least(k, 0, "theorem2_odd: k");
  LaurentPoly sum;
  for (std::int64_t j = 0; 2 * j <= k - 1; ++j) {
    LaurentPoly c = gauss_binomial_base(k - j - 1, j, 2) * plus_product(k - 1 - 2 * j);
    sum += alternating(j, c.shifted(j * j + 2 * j * n));
  }
  return sum;
}

LaurentPoly theorem2_even(std::int64_t n, std::int64_t k) {
  require_at_least(n, 0, "theorem2_even: n");
  require_at_least(k, 0, "theorem2_even: k");
  if (k == 0)
    return LaurentPoly::constant(1);
  LaurentPoly sum;
  for (std::int64_t j = 0; 2 * j <= k; ++j) {
    LaurentPoly numerator =
        one_minus_q_power(k) * gauss_binomial_base(k - j, j, 2) * plus_product(k - 2 * j);
    LaurentPoly c = exact_div(numerator, one_minus_q_power(2 * k - 2 * j));
    sum += alternating(j, c.shifted(j * j + 2 * j * n));
  }
  return sum;
}

LaurentPoly rs_odd_product_form(std::int64_t n, std::int64_t k) {
  require_at_least(n, 1, "rs_odd_product_form: n");
  require_at_least(k, 0, "rs_odd_product_form: k");
  LaurentPoly sum;
  for (std::int64_t j = 0; 2 * j + 1 <= k; ++j) {
    // prod_{i=n-j}^{n-1} (1 - q^(2i)), j factors
    LaurentPoly tail = q_pochhammer(2 * (n - j), 2, j);
    sum += gauss_binomial(k, 2 * j + 1).shifted(choose2(2 * j + 1)) * tail;
  }
  return gauss_eval(2 * n) * sum;
}

LaurentPoly rs_even_product_form(std::int64_t n, std::int64_t k) {
  require_at_least(n, 0, "rs_even_product_form: n");
  require_at_least(k, 0, "rs_even_product_form: k");
  LaurentPoly sum;
  for (std::int64_t j = 0; 2 * j <= k; ++j) {
    // prod_{i=n-j+1}^{n} (1 - q^(2i)), j factors
    LaurentPoly tail = q_pochhammer(2 * (n - j + 1), 2, j);
    sum += gauss_binomial(k, 2 * j).shifted(choose2(2 * j)) * tail;
  }
  return gauss_eval(2 * n) * sum;
}

} // namespace qident
