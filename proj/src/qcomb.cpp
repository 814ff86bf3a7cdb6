#include "qident/qcomb.hpp"

#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>

namespace qident {

namespace {

class BinomialCache {
public:
  using Value = std::shared_ptr<const LaurentPoly>;

  Value find(std::int64_t n, std::int64_t k) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find(key(n, k));
    return it == table_.end() ? nullptr : it->second;
  }

  // Concurrent inserts of the same key are harmless: the values are equal and
  // the first one wins.
  Value insert(std::int64_t n, std::int64_t k, LaurentPoly value) {
    auto ptr = std::make_shared<const LaurentPoly>(std::move(value));
    std::unique_lock lock(mutex_);
    return table_.try_emplace(key(n, k), std::move(ptr)).first->second;
  }

  void clear() {
    std::unique_lock lock(mutex_);
    table_.clear();
  }

private:
  static std::uint64_t key(std::int64_t n, std::int64_t k) {
    return (static_cast<std::uint64_t>(n) << 32) | static_cast<std::uint32_t>(k);
  }

  mutable std::shared_mutex mutex_;
  std::unordered_map<std::uint64_t, Value> table_;
};

BinomialCache& cache() {
  static BinomialCache instance;
  return instance;
}

const LaurentPoly& zero_poly() {
  static const LaurentPoly zero;
  return zero;
}

// Returns a reference that stays valid while `hold` is alive.
const LaurentPoly& binomial_ref(std::int64_t n, std::int64_t k, BinomialCache::Value& hold) {
  if (k < 0 || k > n)
    return zero_poly();
  if (2 * k > n)
    k = n - k;
  if (k == 0) {
    static const LaurentPoly one = LaurentPoly::constant(1);
    return one;
  }
  if (auto hit = cache().find(n, k)) {
    hold = std::move(hit);
    return *hold;
  }
  BinomialCache::Value left, right;
  LaurentPoly value = binomial_ref(n - 1, k, left);
  value += binomial_ref(n - 1, k - 1, right).shifted(n - k);
  hold = cache().insert(n, k, std::move(value));
  return *hold;
}

} // namespace

LaurentPoly gauss_binomial(std::int64_t n, std::int64_t k) {
  if (n < 0)
    throw UnsupportedIndex("gauss_binomial: negative upper index n = " + std::to_string(n));
  BinomialCache::Value hold;
  return binomial_ref(n, k, hold);
}

LaurentPoly gauss_binomial_base(std::int64_t n, std::int64_t k, std::int64_t m) {
  return substitute_power(gauss_binomial(n, k), m);
}

LaurentPoly gauss_binomial_by_product(std::int64_t n, std::int64_t k) {
  if (n < 0)
    throw UnsupportedIndex("gauss_binomial_by_product: negative upper index n = " +
                           std::to_string(n));
  if (k < 0 || k > n)
    return {};
  return exact_div(q_pochhammer(n - k + 1, 1, k), q_pochhammer(k));
}

void clear_binomial_cache() { cache().clear(); }

LaurentPoly q_pochhammer(std::int64_t n) { return q_pochhammer(1, 1, n); }

LaurentPoly q_pochhammer(std::int64_t start, std::int64_t step, std::int64_t n) {
  LaurentPoly out = LaurentPoly::constant(1);
  for (std::int64_t i = 0; i < n; ++i)
    out *= one_minus_q_power(start + i * step);
  return out;
}

LaurentPoly q_integer(std::int64_t m) {
  std::vector<LaurentPoly::Term> terms;
  for (std::int64_t i = 0; i < m; ++i)
    terms.push_back({i, 1});
  return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly plus_product(std::int64_t m) {
  LaurentPoly out = LaurentPoly::constant(1);
  for (std::int64_t i = 1; i <= m; ++i)
    out *= LaurentPoly::constant(1) + LaurentPoly::q_power(i);
  return out;
}

Integer binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n)
    return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

} // namespace qident
