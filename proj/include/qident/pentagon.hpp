#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "qident/bivar_poly.hpp"
#include "qident/laurent_poly.hpp"

namespace qident {

// Which sign convention to use for the exponent of the w-sequence.
//
// as_printed: w(n) = (-1)^floor(n/3) q^(n(n-1)/6)
// reciprocal: the same with q -> 1/q, i.e. exponent -n(n-1)/6.
//
// Only `reciprocal` makes the closed form of h(L, k) agree with the direct
// sum; `as_printed` is kept so the disagreement can be demonstrated.
enum class WVariant { as_printed, reciprocal };

// Zero for n = 2 (mod 3), otherwise a signed monomial.
LaurentPoly w_seq(std::int64_t n, WVariant variant = WVariant::reciprocal);

// h(L, k) = sum_{j=-L}^{2L} (-1)^j q^(j(3j+1)/2 + kj) [2L-j, L+j],
// summed term by term (the brute-force oracle).
LaurentPoly h_direct(std::int64_t L, std::int64_t k);

// The individual summands
//   q^C(j+1,2) q^(jL) [k j] (-1)^j w(-k-j),  j = 0..k
// of the closed form for h(L, k).
std::vector<LaurentPoly> h_closed_terms(std::int64_t L, std::int64_t k,
                                        WVariant variant = WVariant::reciprocal);

// Closed form of h(L, k): the sum of h_closed_terms.
LaurentPoly h_closed(std::int64_t L, std::int64_t k, WVariant variant = WVariant::reciprocal);

// The closed form written with w(k+j+1) in place of w(-k-j).
LaurentPoly h_closed_reflected(std::int64_t L, std::int64_t k,
                               WVariant variant = WVariant::reciprocal);

// lim_{L -> inf} h(L, m): the L-independent j = 0 summand w(-m).
LaurentPoly h_limit(std::int64_t m);

// q-Fibonacci polynomial F_n(1, s) for every integer n; negative n use
// F_{-n}(1, s) = (-1)^(n-1) F_n(1, s) / s^n.
BivarPoly qfib_F(std::int64_t n);

// f_n(s) = F_n(1, s) with q -> 1/q. For n >= 0 this is evaluated from its own
// sum over 1/q-binomials; negative n go through qfib_F.
BivarPoly f_lower(std::int64_t n);

// f_n(s) for n >= 0 computed as qfib_F(n) with q -> 1/q (cross-check path).
BivarPoly f_lower_via_F(std::int64_t n);

// G(L, i, s) = sum_{j=-L}^{2L+i} s^j q^(j(3j-1)/2 - ij) [2L+i-j, L+j].
// Throws EmptyRange when 2L + i < -L.
BivarPoly G_direct(std::int64_t L, std::int64_t i);

// G(L, i, s) = q^(L(3L+1)/2 + iL) s^-L f_{3L+i+1}(s), defined for every i.
BivarPoly G_extended(std::int64_t L, std::int64_t i);

// (A_{n,0}, A_{n,1}, A_{n,2}) with A_{n,r} = sum_{j = r mod 3} C(n, j).
std::array<Integer, 3> binomial_class_sums(std::int64_t n);

} // namespace qident
