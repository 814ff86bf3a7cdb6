#pragma once

#include <cstdint>

#include "qident/laurent_poly.hpp"

namespace qident {

/// Gaussian binomial [n k] in q.
///
/// Computed by the Pascal recurrence [n k] = [n-1 k] + q^(n-k) [n-1 k-1] and
/// memoized in a process-wide table that is safe for concurrent use. Returns
/// zero when k < 0 or k > n. Throws UnsupportedIndex for n < 0.
LaurentPoly gauss_binomial(std::int64_t n, std::int64_t k);

/// [n k] evaluated in base q^m, i.e. gauss_binomial(n, k) with q -> q^m.
LaurentPoly gauss_binomial_base(std::int64_t n, std::int64_t k, std::int64_t m);

/// [n k] from the product formula (1-q^(n-k+1))...(1-q^n) / ((1-q)...(1-q^k)),
/// divided exactly. Independent of the memoized recurrence; used to cross-check
/// it.
LaurentPoly gauss_binomial_by_product(std::int64_t n, std::int64_t k);

/// Drops every memoized binomial.
void clear_binomial_cache();

/// (q;q)_n = (1-q)(1-q^2)...(1-q^n).
LaurentPoly q_pochhammer(std::int64_t n);

/// prod_{i=0}^{n-1} (1 - q^(start + i*step)).
LaurentPoly q_pochhammer(std::int64_t start, std::int64_t step, std::int64_t n);

/// [m] = 1 + q + ... + q^(m-1); [0] = 0.
LaurentPoly q_integer(std::int64_t m);

/// prod_{i=1}^{m} (1 + q^i); empty product is 1.
LaurentPoly plus_product(std::int64_t m);

/// Ordinary binomial coefficient; zero outside 0 <= k <= n.
Integer binomial(std::int64_t n, std::int64_t k);

} // namespace qident
