#pragma once

#include <cstdint>

#include "qident/bivar_poly.hpp"
#include "qident/laurent_poly.hpp"

namespace qident {

// Rogers-Szego polynomial r_n(x, a) = sum_k [n k] x^k a^(n-k) at monomial
// arguments.
LaurentPoly rs_direct(std::int64_t n, Monomial x, Monomial a);

// r_n(1, -1): zero for odd n, (1-q)(1-q^3)...(1-q^(n-1)) for even n.
LaurentPoly gauss_eval(std::int64_t n);

// r_n(1, -q^k) from the generating-function expansion
//   (q;q)_n sum_{j+2l=n} q^C(j,2) [k j] / (q^2;q^2)_l
// with each quotient taken by exact division.
LaurentPoly rs_qk_via_gf(std::int64_t n, std::int64_t k);

// b(n, k) = r_{2n-1}(1, -q^k) / r_{2n}(1, -1), exact (n >= 1).
LaurentPoly b_ratio(std::int64_t n, std::int64_t k);

// c(n, k) = r_{2n}(1, -q^k) / r_{2n}(1, -1), exact (n >= 0).
LaurentPoly c_ratio(std::int64_t n, std::int64_t k);

// f(k, s) from f(k) = (1 + q^(k-1)) f(k-1) - q^(k-2) s f(k-2), f(0) = 0, f(1) = 1.
BivarPoly f_poly_rec(std::int64_t k);

// f(k, s) = sum_j (-1)^j q^(j^2) s^j [k-j-1, j]_{q^2} prod_{i=1}^{k-1-2j} (1 + q^i).
BivarPoly f_poly_closed(std::int64_t k);

// Closed form of b(n, k):
//   sum_j (-1)^j q^(j^2 + 2jn) [k-j-1, j]_{q^2} prod_{i=1}^{k-1-2j} (1 + q^i).
LaurentPoly theorem2_odd(std::int64_t n, std::int64_t k);

// Closed form of c(n, k):
//   sum_j (-1)^j q^(j^2 + 2jn) [k]/[2k-2j] [k-j, j]_{q^2} prod_{i=1}^{k-2j} (1 + q^i).
// The bracket ratio is (1-q^k)/(1-q^(2k-2j)), applied by exact division of the
// whole summand. k = 0 is defined as 1.
LaurentPoly theorem2_even(std::int64_t n, std::int64_t k);

// r_{2n}(1,-1) sum_j q^C(2j+1,2) [k, 2j+1] prod_{i=n-j}^{n-1} (1 - q^(2i)),
// which equals r_{2n-1}(1, -q^k).
LaurentPoly rs_odd_product_form(std::int64_t n, std::int64_t k);

// r_{2n}(1,-1) sum_j q^C(2j,2) [k, 2j] prod_{i=n-j+1}^{n} (1 - q^(2i)),
// which equals r_{2n}(1, -q^k).
LaurentPoly rs_even_product_form(std::int64_t n, std::int64_t k);

} // namespace qident
