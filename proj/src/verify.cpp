#include "qident/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <functional>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "qident/gauss.hpp"
#include "qident/qcomb.hpp"
#include "qident/serialize.hpp"

namespace qident {

namespace {

using nlohmann::json;

struct Outcome {
  bool pass = false;
  std::optional<Evidence> lhs;
  std::optional<Evidence> rhs;
};

struct Job {
  std::size_t suite_rank;
  std::string id;
  Params params;
  std::function<Outcome()> run;
};

template <typename T>
Outcome same(T lhs, T rhs) {
  if (lhs == rhs)
    return {true, std::nullopt, std::nullopt};
  return {false, Evidence(std::move(lhs)), Evidence(std::move(rhs))};
}

Outcome value_is(const Rational& value, const Integer& expected) {
  if (value == expected)
    return {true, std::nullopt, std::nullopt};
  return {false, Evidence(value.get_str()), Evidence(expected)};
}

Outcome vanishes(LaurentPoly value) { return same(std::move(value), LaurentPoly{}); }

// A passing case that still carries both sides, for recorded discrepancies.
template <typename T>
Outcome recorded(bool pass, T lhs, T rhs) {
  return {pass, Evidence(std::move(lhs)), Evidence(std::move(rhs))};
}

LaurentPoly one() { return LaurentPoly::constant(1); }
LaurentPoly qp(Exponent e) { return LaurentPoly::q_power(e); }
LaurentPoly binom(std::int64_t n, std::int64_t k) { return gauss_binomial(n, k); }

class Builder {
public:
  Builder(std::vector<Job>& jobs, std::size_t rank, std::string suite)
      : jobs_(jobs), rank_(rank), suite_(std::move(suite)) {}

  void add(const std::string& identity, Params params, std::function<Outcome()> run) {
    jobs_.push_back({rank_, suite_ + "." + identity, std::move(params), std::move(run)});
  }

private:
  std::vector<Job>& jobs_;
  std::size_t rank_;
  std::string suite_;
};

std::int64_t pick(const std::optional<std::int64_t>& v, std::int64_t fallback) {
  return v.value_or(fallback);
}

// ---------------------------------------------------------------------------

void berkovich_garvan(Builder& b, const VerifyOptions& o) {
  const auto L_max = pick(o.L_max, 50);
  for (std::int64_t L = 0; L <= L_max; ++L)
    b.add("h_L0_is_one", {{"L", L}}, [L] { return same(h_direct(L, 0), one()); });
}

// Expanded h(L, k) for k = 0..4 and k = 7.
LaurentPoly h_table(std::int64_t L, std::int64_t k) {
  switch (k) {
  case 0:
    return one();
  case 1:
    return binom(1, 1).shifted(L);
  case 2:
    return -binom(2, 0).shifted(-1) + binom(2, 1).shifted(L - 1);
  case 3:
    return -binom(3, 0).shifted(-2) + binom(3, 2).shifted(2 * L - 2) -
           binom(3, 3).shifted(3 * L - 1);
  case 4:
    return -binom(4, 1).shifted(L - 4) + binom(4, 2).shifted(2 * L - 4) -
           binom(4, 4).shifted(4 * L - 2);
  case 7: {
    LaurentPoly a1 = binom(7, 1).shifted(L - 11) + binom(7, 4).shifted(4 * L - 12) +
                     binom(7, 7).shifted(7 * L - 7);
    LaurentPoly a2 = binom(7, 2).shifted(2 * L - 12) + binom(7, 5).shifted(5 * L - 11);
    return a1 - a2;
  }
  default:
    throw std::logic_error("no displayed table for this k");
  }
}

void theorem1(Builder& b, const VerifyOptions& o) {
  const auto L_max = pick(o.L_max, 12);
  const auto k_max = pick(o.k_max, 12);
  const WVariant variant = o.w_variant;

  for (std::int64_t L = 0; L <= L_max; ++L)
    for (std::int64_t k = 0; k <= k_max; ++k) {
      b.add("closed_eq_direct", {{"L", L}, {"k", k}},
            [=] { return same(h_closed(L, k, variant), h_direct(L, k)); });
      b.add("reflected_w_form", {{"L", L}, {"k", k}},
            [=] { return same(h_closed_reflected(L, k, variant), h_closed(L, k, variant)); });
    }

  for (std::int64_t L = 4; L <= 10; ++L)
    for (std::int64_t k : {0, 1, 2, 3, 4, 7})
      b.add("displayed_table", {{"L", L}, {"k", k}},
            [=] { return same(h_closed(L, k, variant), h_table(L, k)); });

  // Every nonzero summand of the closed form is +-(positive polynomial); all
  // summands with j in one residue class mod 3 share a sign.
  for (std::int64_t k = 0; k <= k_max; ++k)
    b.add("sign_classes", {{"k", k}}, [=] {
      const auto terms = h_closed_terms(5, k, variant);
      std::array<int, 3> sign{0, 0, 0};
      for (std::size_t j = 0; j < terms.size(); ++j) {
        if (terms[j].is_zero())
          continue;
        const auto& coeffs = terms[j].terms();
        const int s = coeffs.front().coeff > 0 ? 1 : -1;
        for (const auto& t : coeffs)
          if ((t.coeff > 0 ? 1 : -1) != s)
            return Outcome{false, Evidence(terms[j]), Evidence(std::string("mixed signs"))};
        int& slot = sign[j % 3];
        if (slot != 0 && slot != s)
          return Outcome{false, Evidence(terms[j]),
                         Evidence(std::string("sign differs within residue class"))};
        slot = s;
      }
      return Outcome{true, std::nullopt, std::nullopt};
    });

  b.add("exponent_forms_agree", {{"j_max", 200}}, [] {
    for (std::int64_t j = -200; j <= 200; ++j)
      if (choose2(j) + j != (j + 1) * j / 2)
        return same(Integer(choose2(j) + j), Integer((j + 1) * j / 2));
    return Outcome{true, std::nullopt, std::nullopt};
  });

  if (variant == WVariant::reciprocal) {
    b.add("as_printed_disagrees", {{"L_max", L_max}, {"k_max", k_max}}, [=] {
      for (std::int64_t k = 2; k <= k_max; ++k)
        for (std::int64_t L = 0; L <= L_max; ++L) {
          LaurentPoly printed = h_closed(L, k, WVariant::as_printed);
          LaurentPoly direct = h_direct(L, k);
          if (printed != direct)
            return recorded(true, std::move(printed), std::move(direct));
        }
      return Outcome{false, std::nullopt, std::nullopt};
    });
  }

  const auto collapse_L = std::min<std::int64_t>(L_max, 10);
  const auto collapse_k = std::min<std::int64_t>(k_max, 10);
  for (std::int64_t L = 0; L <= collapse_L; ++L)
    for (std::int64_t k = 0; k <= collapse_k; ++k)
      b.add("q_equals_one", {{"L", L}, {"k", k}}, [=] {
        return value_is(evaluate_at(h_direct(L, k), 1), 1);
      });

  b.add("class_sums_worked_example", {{"n", 7}}, [] {
    const auto a = binomial_class_sums(7);
    return same(Integer(a[1] - a[2]), Integer(1));
  });
  for (std::int64_t m = 0; m <= 10; ++m)
    b.add("class_sums_alternate", {{"m", m}}, [m] {
      const auto a = binomial_class_sums(3 * m + 1);
      return same(Integer(a[1] - a[2]), Integer(m % 2 == 0 ? 1 : -1));
    });
}

void pentagon_recurrences(Builder& b, const VerifyOptions&) {
  for (auto variant : {WVariant::as_printed, WVariant::reciprocal})
    for (std::int64_t n = -30; n <= 30; ++n)
      b.add("w_reflection", {{"n", n}, {"reciprocal", variant == WVariant::reciprocal}},
            [=] { return same(w_seq(-n, variant), w_seq(n + 1, variant)); });

  for (std::int64_t n = 0; n <= 20; ++n)
    b.add("f_lower_sum_eq_F_inverted", {{"n", n}},
          [n] { return same(f_lower(n), f_lower_via_F(n)); });

  const BivarPoly s = BivarPoly::s_power(1);
  for (std::int64_t n = -10; n <= 20; ++n)
    b.add("f_recurrence", {{"n", n}}, [n, s] {
      return same(shift_s(f_lower(n), 1), f_lower(n - 1) + s * f_lower(n - 2));
    });

  // Run the f recurrence backwards from f_1, f_0 and compare with the
  // reflection formula used for negative indices.
  b.add("negative_index_reflection", {{"n_max", 12}}, [s] {
    std::vector<BivarPoly> f{BivarPoly(), BivarPoly(one())}; // f_0, f_1
    const BivarPoly s_inv = BivarPoly::s_power(-1);
    // f_{n-2} = s^-1 (f_n(qs) - f_{n-1}(s)), walking n = 1, 0, -1, ...
    std::vector<BivarPoly> negative; // f_{-1}, f_{-2}, ...
    BivarPoly upper = f[1], lower = f[0];
    for (int n = 1; n <= 12; ++n) {
      BivarPoly next = s_inv * (shift_s(upper, 1) - lower);
      negative.push_back(next);
      upper = lower;
      lower = next;
    }
    for (int n = 1; n <= 12; ++n)
      if (negative[static_cast<std::size_t>(n - 1)] != f_lower(-n))
        return same(negative[static_cast<std::size_t>(n - 1)], f_lower(-n));
    return Outcome{true, std::nullopt, std::nullopt};
  });

  const Monomial minus_q_inv{-1, -1};
  for (std::int64_t n = 1; n <= 12; ++n)
    b.add("negative_index_at_minus_inverse_q", {{"n", n}}, [=] {
      return same(substitute_s(qfib_F(-n), minus_q_inv),
                  -substitute_s(qfib_F(n), minus_q_inv).shifted(n));
    });

  for (std::int64_t L = 0; L <= 5; ++L)
    for (std::int64_t i = -3 * L; i <= 6; ++i)
      b.add("G_direct_matches_f_lower", {{"L", L}, {"i", i}}, [=] {
        return same(times_s_power(G_direct(L, i), L),
                    f_lower(3 * L + i + 1) * qp(L * (3 * L + 1) / 2 + i * L));
      });

  for (std::int64_t L = 0; L <= 5; ++L)
    for (std::int64_t i = -8; i <= 8; ++i)
      b.add("G_recurrence", {{"L", L}, {"i", i}}, [=] {
        return same(shift_s(G_extended(L, i), 1),
                    G_extended(L, i - 1) + s * G_extended(L, i - 2) * qp(L));
      });

  const Monomial minus_q{-1, 1};
  for (std::int64_t n = -8; n <= 8; ++n) {
    const LaurentPoly sign = LaurentPoly::constant(n % 2 == 0 ? 1 : -1);
    b.add("f_at_minus_q_3n", {{"n", n}},
          [=] { return vanishes(substitute_s(f_lower(3 * n), minus_q)); });
    b.add("f_at_minus_q_3n_plus_1", {{"n", n}}, [=] {
      return same(substitute_s(f_lower(3 * n + 1), minus_q), sign.shifted(-n * (3 * n - 1) / 2));
    });
    b.add("f_at_minus_q_3n_plus_2", {{"n", n}}, [=] {
      return same(substitute_s(f_lower(3 * n + 2), minus_q), sign.shifted(-n * (3 * n + 1) / 2));
    });
  }

  for (std::int64_t L = 0; L <= 5; ++L)
    for (std::int64_t n = -10; n <= 10; ++n)
      b.add("G_at_minus_q_is_w", {{"L", L}, {"n", n}}, [=] {
        return same(substitute_s(G_extended(L, n), minus_q), w_seq(n, WVariant::reciprocal));
      });

  for (std::int64_t L = 0; L <= 3; ++L)
    for (std::int64_t i = -3; i <= 3; ++i)
      for (std::int64_t k = 0; k <= 5; ++k)
        b.add("G_shift_expansion", {{"L", L}, {"i", i}, {"k", k}}, [=] {
          BivarPoly rhs;
          for (std::int64_t j = 0; j <= k; ++j)
            rhs += times_s_power(G_extended(L, i - k - j), j) *
                   binom(k, j).shifted(choose2(j) + j * L);
          return same(shift_s(G_extended(L, i), k), rhs);
        });
}

void limits(Builder& b, const VerifyOptions& o) {
  const auto m_max = pick(o.m_max, 9);
  const std::size_t N = o.order_N;
  for (std::int64_t m = 0; m <= m_max; ++m) {
    b.add("theta_eq_limit_times_euler", {{"m", m}, {"N", static_cast<std::int64_t>(N)}}, [=] {
      return same(shifted_theta(m, N), multiply(h_limit(m), product_family(1, 1, N)));
    });
    if (m % 3 == 1)
      b.add("limit_vanishes", {{"m", m}}, [m] { return vanishes(h_limit(m)); });
  }
  // h(3k) = (-1)^k q^(+k(3k+1)/2) at k = 1. Passes when the series identity
  // refutes this positive-exponent value.
  b.add("positive_exponent_limit_refuted", {{"k", 1}, {"N", static_cast<std::int64_t>(N)}}, [=] {
    const LaurentPoly positive = LaurentPoly::monomial(-1, 2);
    ShiftedSeries lhs = shifted_theta(3, N);
    ShiftedSeries rhs = multiply(positive, product_family(1, 1, N));
    const bool refuted = !(lhs == rhs);
    return recorded(refuted, std::move(lhs), std::move(rhs));
  });
}

void triple_product_suite(Builder& b, const VerifyOptions& o) {
  const auto m_max = pick(o.m_max, 9);
  const std::size_t N = o.order_N;
  for (std::int64_t m = 0; m <= m_max; ++m)
    b.add("theta_eq_product", {{"m", m}, {"N", static_cast<std::int64_t>(N)}}, [=] {
      return same(shifted_theta(m, N), triple_product(m, N));
    });

  const std::size_t euler_N = std::max<std::size_t>(500, N);
  b.add("euler_pentagonal", {{"N", static_cast<std::int64_t>(euler_N)}}, [=] {
    return same(ShiftedSeries{0, product_family(1, 1, euler_N)},
                ShiftedSeries{0, pentagonal_theta(euler_N)});
  });

  for (std::int64_t t = 1; t <= 5; ++t)
    b.add("q_exponential_shift", {{"t", t}, {"N", 100}}, [t] {
      TruncatedSeries lhs = q_exponential_at_power(t + 1, 100);
      TruncatedSeries rhs = series_from_poly(one_minus_q_power(t), 100) *
                            q_exponential_at_power(t, 100);
      return same(ShiftedSeries{0, lhs}, ShiftedSeries{0, rhs});
    });

  b.add("pairing_exponent_sum", {{"m_max", 1000}}, [] {
    Integer sum = 0;
    for (std::int64_t m = 1; m <= 1000; ++m) {
      sum += 3 * m - 1;
      if (sum != Integer(m * (3 * m + 1) / 2))
        return same(sum, Integer(m * (3 * m + 1) / 2));
    }
    return Outcome{true, std::nullopt, std::nullopt};
  });
}

void gauss_theorem(Builder& b, const VerifyOptions& o) {
  const auto m_max = pick(o.m_max, 20);
  const Monomial x = Monomial::one(), a = Monomial::minus_one();
  for (std::int64_t m = 0; m <= m_max; ++m) {
    b.add("odd_vanishes", {{"m", m}}, [=] { return vanishes(rs_direct(2 * m + 1, x, a)); });
    b.add("even_product", {{"m", m}}, [=] {
      return same(rs_direct(2 * m, x, a) * q_pochhammer(2, 2, m), q_pochhammer(2 * m));
    });
    b.add("odd_factor_form", {{"m", m}},
          [=] { return same(gauss_eval(2 * m), rs_direct(2 * m, x, a)); });
  }
  // (1-q)(1-q^2)...(1-q^(2n-1)) with every factor. Passes when it is refuted.
  b.add("all_factor_form_refuted", {{"m", 2}}, [=] {
    LaurentPoly all = q_pochhammer(3);
    LaurentPoly direct = rs_direct(4, x, a);
    const bool refuted = all != direct;
    return recorded(refuted, std::move(all), std::move(direct));
  });
}

void eq2_6(Builder& b, const VerifyOptions& o) {
  const auto n_max = pick(o.n_max, 20);
  const auto k_max = pick(o.k_max, 10);
  for (std::int64_t n = 0; n <= n_max; ++n)
    for (std::int64_t k = 0; k <= k_max; ++k)
      b.add("gf_eq_direct", {{"n", n}, {"k", k}}, [=] {
        return same(rs_qk_via_gf(n, k), rs_direct(n, Monomial::one(), Monomial::q_power(k, -1)));
      });
}

LaurentPoly odd_table(std::int64_t n, std::int64_t k) {
  const LaurentPoly t1 = one_minus_q_power(2 * n - 2);
  switch (k) {
  case 1:
    return one();
  case 2:
    return binom(2, 1);
  case 3:
    return binom(3, 1) + qp(3) * t1;
  case 4:
    return binom(4, 1) + qp(3) * binom(4, 3) * t1;
  case 5:
    return binom(5, 1) + binom(5, 3) * qp(3) * t1 +
           binom(5, 5) * qp(10) * t1 * one_minus_q_power(2 * n - 4);
  default:
    throw std::logic_error("no displayed odd table for this k");
  }
}

LaurentPoly even_table(std::int64_t n, std::int64_t k) {
  const LaurentPoly t0 = one_minus_q_power(2 * n);
  switch (k) {
  case 1:
    return one();
  case 2:
    return one() + qp(1) * t0;
  case 3:
    return one() + qp(1) * t0 * binom(3, 2);
  case 4:
    return one() + qp(1) * t0 * binom(4, 2) +
           qp(6) * t0 * one_minus_q_power(2 * n - 2) * binom(4, 4);
  default:
    throw std::logic_error("no displayed even table for this k");
  }
}

void theorem2(Builder& b, const VerifyOptions& o) {
  const auto n_max = pick(o.n_max, 8);
  const auto k_max = pick(o.k_max, 10);
  for (std::int64_t n = 1; n <= n_max; ++n)
    for (std::int64_t k = 0; k <= k_max; ++k) {
      b.add("odd_closed_eq_ratio", {{"n", n}, {"k", k}},
            [=] { return same(theorem2_odd(n, k), b_ratio(n, k)); });
      b.add("even_closed_eq_ratio", {{"n", n}, {"k", k}},
            [=] { return same(theorem2_even(n, k), c_ratio(n, k)); });
    }
  for (std::int64_t n = 1; n <= n_max; ++n) {
    for (std::int64_t k = 1; k <= 5; ++k)
      b.add("odd_displayed_values", {{"n", n}, {"k", k}},
            [=] { return same(b_ratio(n, k), odd_table(n, k)); });
    for (std::int64_t k = 1; k <= 4; ++k)
      b.add("even_displayed_values", {{"n", n}, {"k", k}},
            [=] { return same(c_ratio(n, k), even_table(n, k)); });
  }
}

void gauss_recurrences(Builder& b, const VerifyOptions&) {
  for (std::int64_t n = 0; n <= 15; ++n)
    for (std::int64_t t = 0; t <= 4; ++t)
      for (std::int64_t u = 0; u <= 4; ++u)
        b.add("rs_shift_identity", {{"n", n}, {"t", t}, {"u", u}}, [=] {
          const Monomial a{-1, u};
          // qx/a = -q^(t+1-u), x/a = -q^(t-u)
          LaurentPoly lhs = rs_direct(n, Monomial::q_power(t + 2), a) -
                            (one() + qp(t + 1 - u)) * rs_direct(n, Monomial::q_power(t + 1), a) +
                            rs_direct(n, Monomial::q_power(t), a).shifted(n + 1 + t - u);
          return vanishes(std::move(lhs));
        });

  for (std::int64_t n = 1; n <= 8; ++n)
    for (std::int64_t k = 0; k <= 8; ++k)
      b.add("b_recurrence", {{"n", n}, {"k", k}}, [=] {
        return vanishes(b_ratio(n, k + 2) - (one() + qp(k + 1)) * b_ratio(n, k + 1) +
                        b_ratio(n, k).shifted(2 * n + k));
      });

  for (std::int64_t k = 0; k <= 15; ++k)
    b.add("f_closed_eq_recurrence", {{"k", k}},
          [k] { return same(f_poly_closed(k), f_poly_rec(k)); });

  for (std::int64_t n = 1; n <= 8; ++n)
    for (std::int64_t k = 0; k <= 10; ++k)
      b.add("b_is_f_at_q2n", {{"n", n}, {"k", k}}, [=] {
        return same(b_ratio(n, k), substitute_s(f_poly_rec(k), Monomial::q_power(2 * n)));
      });

  for (std::int64_t n = 0; n <= 8; ++n)
    for (std::int64_t k = 0; k <= 8; ++k)
      b.add("c_from_b_difference", {{"n", n}, {"k", k}}, [=] {
        return same(c_ratio(n, k).shifted(k), b_ratio(n + 1, k + 1) - b_ratio(n + 1, k));
      });

  for (std::int64_t n = 1; n <= 6; ++n)
    for (std::int64_t k = 0; k <= 8; ++k) {
      const Monomial a = Monomial::q_power(k, -1);
      b.add("odd_product_form", {{"n", n}, {"k", k}}, [=] {
        return same(rs_odd_product_form(n, k), rs_direct(2 * n - 1, Monomial::one(), a));
      });
      b.add("even_product_form", {{"n", n}, {"k", k}}, [=] {
        return same(rs_even_product_form(n, k), rs_direct(2 * n, Monomial::one(), a));
      });
    }

  const Monomial minus_q{-1, 1};
  for (std::int64_t n = 1; n <= 12; ++n) {
    b.add("parity_even", {{"n", n}},
          [=] { return same(rs_direct(2 * n, Monomial::one(), minus_q), gauss_eval(2 * n)); });
    b.add("parity_odd", {{"n", n}}, [=] {
      return same(rs_direct(2 * n - 1, Monomial::one(), minus_q), gauss_eval(2 * n));
    });
  }

  for (std::int64_t n = 1; n <= 8; ++n)
    for (std::int64_t k = 0; k <= 8; ++k)
      b.add("b_sign_identity", {{"n", n}, {"k", k}}, [=] {
        return same(rs_direct(2 * n - 1, Monomial::q_power(k), Monomial::minus_one()),
                    -rs_direct(2 * n - 1, Monomial::one(), Monomial::q_power(k, -1)));
      });
}

// Integer Pascal triangle, independent of the polynomial code.
std::vector<std::vector<Integer>> pascal_rows(std::int64_t n_max) {
  std::vector<std::vector<Integer>> rows;
  for (std::int64_t n = 0; n <= n_max; ++n) {
    std::vector<Integer> row(static_cast<std::size_t>(n + 1), 1);
    for (std::int64_t k = 1; k < n; ++k)
      row[static_cast<std::size_t>(k)] = rows.back()[static_cast<std::size_t>(k - 1)] +
                                         rows.back()[static_cast<std::size_t>(k)];
    rows.push_back(std::move(row));
  }
  return rows;
}

void qcomb_identities(Builder& b, const VerifyOptions& o) {
  const auto n_max = pick(o.n_max, 40);
  for (std::int64_t n = 1; n <= n_max; ++n)
    for (std::int64_t k = 0; k <= n; ++k) {
      b.add("pascal_low", {{"n", n}, {"k", k}}, [=] {
        return same(binom(n, k), binom(n - 1, k) + binom(n - 1, k - 1).shifted(n - k));
      });
      b.add("pascal_high", {{"n", n}, {"k", k}}, [=] {
        return same(binom(n, k), binom(n - 1, k).shifted(k) + binom(n - 1, k - 1));
      });
      b.add("symmetry", {{"n", n}, {"k", k}}, [=] { return same(binom(n, k), binom(n, n - k)); });
    }

  for (std::int64_t n = 0; n <= 30; ++n)
    for (std::int64_t k = 0; k <= n && n + k <= 30; ++k)
      b.add("reciprocal_base", {{"n", n}, {"k", k}}, [=] {
        return same(gauss_binomial_base(n - k, k, -1).shifted(-choose2(k)),
                    binom(n - k, k).shifted(-choose2(n) + k * k + choose2(n - k)));
      });

  for (std::int64_t n = 0; n <= 30; ++n)
    for (std::int64_t k = 0; k <= n + 1; ++k)
      b.add("rs_coefficient_identity", {{"n", n}, {"k", k}}, [=] {
        LaurentPoly inner = (qp(k) - one()) * binom(n, k) +
                            one_minus_q_power(n + 1 - k) * binom(n, k - 1);
        return vanishes(inner.shifted(k));
      });

  for (std::int64_t k = 3; k <= 25; ++k)
    for (std::int64_t j = 1; 2 * j + 1 <= k; ++j)
      b.add("q2_binomial_identity", {{"k", k}, {"j", j}}, [=] {
        const LaurentPoly factor = one() + qp(k - 1 - 2 * j);
        LaurentPoly v = gauss_binomial_base(k - j - 1, j, 2) * factor -
                        (one() + qp(k - 1)) * gauss_binomial_base(k - j - 2, j, 2) -
                        gauss_binomial_base(k - j - 2, j - 1, 2).shifted(k - 1 - 2 * j) * factor;
        return vanishes(std::move(v));
      });

  const auto rows = std::make_shared<const std::vector<std::vector<Integer>>>(pascal_rows(30));
  for (std::int64_t n = 0; n <= 30; ++n)
    for (std::int64_t k = 0; k <= n; ++k)
      b.add("q_equals_one", {{"n", n}, {"k", k}}, [=] {
        return value_is(evaluate_at(binom(n, k), 1),
                        (*rows)[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]);
      });

  for (std::int64_t n = 0; n <= 20; ++n)
    for (std::int64_t k = 0; k <= n; ++k)
      b.add("product_formula", {{"n", n}, {"k", k}},
            [=] { return same(binom(n, k), gauss_binomial_by_product(n, k)); });
}

using SuiteFn = void (*)(Builder&, const VerifyOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites{
      {"berkovich_garvan", berkovich_garvan},
      {"theorem1", theorem1},
      {"pentagon_recurrences", pentagon_recurrences},
      {"limits", limits},
      {"triple_product", triple_product_suite},
      {"gauss_theorem", gauss_theorem},
      {"eq2_6", eq2_6},
      {"theorem2", theorem2},
      {"gauss_recurrences", gauss_recurrences},
      {"qcomb_identities", qcomb_identities},
  };
  return suites;
}

CaseResult execute(const Job& job) {
  CaseResult r{job.id, job.params, false, std::nullopt, std::nullopt};
  try {
    Outcome o = job.run();
    r.pass = o.pass;
    r.lhs = std::move(o.lhs);
    r.rhs = std::move(o.rhs);
  } catch (const std::exception& e) {
    r.lhs = Evidence(std::string("error: ") + e.what());
  }
  return r;
}

std::vector<CaseResult> run_jobs(const std::vector<Job>& jobs, unsigned workers) {
  std::vector<CaseResult> results(jobs.size());
  if (workers <= 1 || jobs.size() < 2) {
    for (std::size_t i = 0; i < jobs.size(); ++i)
      results[i] = execute(jobs[i]);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < jobs.size(); i = next++)
        results[i] = execute(jobs[i]);
    });
  pool.clear();
  return results;
}

json evidence_json(const std::optional<Evidence>& e) {
  if (!e)
    return nullptr;
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Integer>)
          return v.get_str();
        else if constexpr (std::is_same_v<T, std::string>)
          return v;
        else
          return to_json(v);
      },
      *e);
}

std::optional<Evidence> evidence_from_json(const json& j) {
  if (j.is_null())
    return std::nullopt;
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    Integer v;
    const bool numeric = !s.empty() && s.find_first_not_of("-0123456789") == std::string::npos &&
                         v.set_str(s, 10) == 0 && v.get_str() == s;
    return numeric ? Evidence(v) : Evidence(s);
  }
  if (j.is_object() && j.value("var", "") == "s")
    return Evidence(bivar_from_json(j));
  if (j.is_object() && j.contains("shift"))
    return Evidence(series_from_json(j));
  return Evidence(laurent_from_json(j));
}

std::string evidence_text(const Evidence& e) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Integer>)
          return v.get_str();
        else if constexpr (std::is_same_v<T, std::string>)
          return v;
        else
          return to_text(v);
      },
      e);
}

std::string params_text(const Params& params, const char* sep) {
  std::string out;
  for (const auto& [name, value] : params) {
    if (!out.empty())
      out += sep;
    out += name + "=" + std::to_string(value);
  }
  return out;
}

} // namespace

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return !c.pass; }));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry())
      out.push_back(name);
    out.push_back("all");
    return out;
  }();
  return names;
}

VerificationReport run_suite(std::string_view suite, const VerifyOptions& options) {
  std::vector<Job> jobs;
  bool found = false;
  for (std::size_t rank = 0; rank < registry().size(); ++rank) {
    const auto& [name, fn] = registry()[rank];
    if (suite == "all" || suite == name) {
      Builder builder(jobs, rank, name);
      fn(builder, options);
      found = true;
    }
  }
  if (!found)
    throw std::invalid_argument("unknown suite: " + std::string(suite));

  std::sort(jobs.begin(), jobs.end(), [](const Job& a, const Job& b) {
    if (a.suite_rank != b.suite_rank)
      return a.suite_rank < b.suite_rank;
    if (a.id != b.id)
      return a.id < b.id;
    return std::lexicographical_compare(
        a.params.begin(), a.params.end(), b.params.begin(), b.params.end(),
        [](const auto& x, const auto& y) { return x.second < y.second; });
  });

  VerificationReport report;
  report.suite = std::string(suite);
  report.cases = run_jobs(jobs, std::max(1u, options.jobs));
  return report;
}

json to_json(const VerificationReport& report) {
  json cases = json::array();
  for (const auto& c : report.cases) {
    json params = json::object();
    for (const auto& [name, value] : c.params)
      params[name] = value;
    cases.push_back(json{{"id", c.id},
                         {"params", std::move(params)},
                         {"pass", c.pass},
                         {"lhs", evidence_json(c.lhs)},
                         {"rhs", evidence_json(c.rhs)}});
  }
  return json{{"suite", report.suite}, {"cases", std::move(cases)}, {"failures", report.failures()}};
}

VerificationReport report_from_json(const json& j) {
  if (!j.is_object() || !j.contains("suite") || !j.contains("cases") || !j.contains("failures"))
    throw ParseError("report needs \"suite\", \"cases\" and \"failures\"");
  VerificationReport report;
  report.suite = j.at("suite").get<std::string>();
  for (const auto& c : j.at("cases")) {
    CaseResult r;
    r.id = c.at("id").get<std::string>();
    for (const auto& [name, value] : c.at("params").items())
      r.params.emplace_back(name, value.get<std::int64_t>());
    r.pass = c.at("pass").get<bool>();
    r.lhs = evidence_from_json(c.at("lhs"));
    r.rhs = evidence_from_json(c.at("rhs"));
    report.cases.push_back(std::move(r));
  }
  if (j.at("failures").get<std::size_t>() != report.failures())
    throw ParseError("\"failures\" does not match the failing cases");
  return report;
}

std::string to_text(const VerificationReport& report) {
  std::ostringstream out;
  for (const auto& c : report.cases) {
    out << (c.pass ? "PASS " : "FAIL ") << c.id;
    if (!c.params.empty())
      out << ' ' << params_text(c.params, " ");
    out << '\n';
    if (c.lhs)
      out << "  lhs: " << evidence_text(*c.lhs) << '\n';
    if (c.rhs)
      out << "  rhs: " << evidence_text(*c.rhs) << '\n';
  }
  out << "suite " << report.suite << ": " << report.cases.size() << " cases, "
      << report.failures() << " failures\n";
  return out.str();
}

std::string to_csv(const VerificationReport& report) {
  std::ostringstream out;
  out << "suite,id,params,pass\n";
  for (const auto& c : report.cases)
    out << report.suite << ',' << c.id << ',' << params_text(c.params, ";") << ','
        << (c.pass ? "true" : "false") << '\n';
  return out.str();
}

} // namespace qident
