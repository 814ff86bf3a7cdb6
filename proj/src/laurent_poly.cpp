#include "qident/laurent_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace qident {

namespace {

// Products whose exponent span is at most this many times the number of term
// pairs go through a dense accumulator; sparser products are sorted and merged.
constexpr std::size_t kDenseSlack = 4;

} // namespace

LaurentPoly::LaurentPoly(Monomial m) { terms_.push_back({m.exponent, Integer(m.sign)}); }

LaurentPoly LaurentPoly::constant(const Integer& c) { return monomial(c, 0); }

LaurentPoly LaurentPoly::monomial(const Integer& c, Exponent e) {
  LaurentPoly p;
  if (c != 0)
    p.terms_.push_back({e, c});
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
  LaurentPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exponent == t.exponent) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0)
        p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0)
    p.terms_.pop_back();
  return p;
}

LaurentPoly LaurentPoly::from_dense(Exponent low, std::span<const Integer> coeffs) {
  LaurentPoly p;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0)
      p.terms_.push_back({low + static_cast<Exponent>(i), coeffs[i]});
  return p;
}

Integer LaurentPoly::coefficient(Exponent e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, Exponent x) { return t.exponent < x; });
  if (it != terms_.end() && it->exponent == e)
    return it->coeff;
  return 0;
}

LaurentPoly LaurentPoly::shifted(Exponent k) const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_)
    t.exponent += k;
  return p;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& t : p.terms_)
    t.coeff = -t.coeff;
  return p;
}

namespace {

template <typename Combine>
std::vector<LaurentPoly::Term> merge_terms(std::span<const LaurentPoly::Term> a,
                                           std::span<const LaurentPoly::Term> b,
                                           Combine combine, bool negate_b) {
  std::vector<LaurentPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].exponent < b[j].exponent)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].exponent < a[i].exponent) {
      out.push_back(b[j]);
      if (negate_b)
        out.back().coeff = -out.back().coeff;
      ++j;
    } else {
      Integer c = combine(a[i].coeff, b[j].coeff);
      if (c != 0)
        out.push_back({a[i].exponent, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

} // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  if (other.is_zero())
    return *this;
  terms_ = merge_terms(terms_, other.terms_,
                       [](const Integer& x, const Integer& y) { return Integer(x + y); }, false);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  if (other.is_zero())
    return *this;
  terms_ = merge_terms(terms_, other.terms_,
                       [](const Integer& x, const Integer& y) { return Integer(x - y); }, true);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero())
    return {};
  if (a.is_monomial())
    return (b * a.terms_.front().coeff).shifted(a.terms_.front().exponent);
  if (b.is_monomial())
    return (a * b.terms_.front().coeff).shifted(b.terms_.front().exponent);

  const Exponent low = a.min_exponent() + b.min_exponent();
  const auto span = static_cast<std::size_t>(a.max_exponent() + b.max_exponent() - low + 1);
  const std::size_t pairs = a.size() * b.size();
  if (span <= kDenseSlack * pairs) {
    std::vector<Integer> buf(span);
    for (const auto& x : a.terms_) {
      for (const auto& y : b.terms_) {
        auto& slot = buf[static_cast<std::size_t>(x.exponent + y.exponent - low)];
        mpz_addmul(slot.get_mpz_t(), x.coeff.get_mpz_t(), y.coeff.get_mpz_t());
      }
    }
    return LaurentPoly::from_dense(low, buf);
  }
  std::vector<LaurentPoly::Term> prod;
  prod.reserve(pairs);
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_)
      prod.push_back({x.exponent + y.exponent, x.coeff * y.coeff});
  return LaurentPoly::from_terms(std::move(prod));
}

LaurentPoly operator*(const LaurentPoly& a, Monomial m) {
  LaurentPoly p = a.shifted(m.exponent);
  return m.sign < 0 ? -p : p;
}

LaurentPoly operator*(const LaurentPoly& a, const Integer& c) {
  if (c == 0)
    return {};
  LaurentPoly p = a;
  for (auto& t : p.terms_)
    t.coeff *= c;
  return p;
}

LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& d) {
  if (d.is_zero())
    throw std::invalid_argument("exact_div: division by the zero polynomial");
  if (p.is_zero())
    return {};

  const auto dterms = d.terms();
  const Exponent d_low = d.min_exponent();
  const Exponent d_span = d.max_exponent() - d_low;
  const Integer& lead = dterms.front().coeff;

  const Exponent p_low = p.min_exponent();
  const Exponent p_high = p.max_exponent();
  if (p_high - p_low < d_span)
    throw NonzeroRemainder("exact_div: divisor has larger span than dividend");

  std::vector<Integer> rem(static_cast<std::size_t>(p_high - p_low + 1));
  for (const auto& t : p.terms())
    rem[static_cast<std::size_t>(t.exponent - p_low)] = t.coeff;

  std::vector<LaurentPoly::Term> quot;
  const auto last = static_cast<std::size_t>(p_high - p_low - d_span);
  Integer factor;
  for (std::size_t i = 0; i <= last; ++i) {
    if (rem[i] == 0)
      continue;
    if (!mpz_divisible_p(rem[i].get_mpz_t(), lead.get_mpz_t()))
      throw NonzeroRemainder("exact_div: leading coefficient does not divide");
    mpz_divexact(factor.get_mpz_t(), rem[i].get_mpz_t(), lead.get_mpz_t());
    for (const auto& t : dterms) {
      auto& slot = rem[i + static_cast<std::size_t>(t.exponent - d_low)];
      mpz_submul(slot.get_mpz_t(), factor.get_mpz_t(), t.coeff.get_mpz_t());
    }
    quot.push_back({p_low + static_cast<Exponent>(i) - d_low, factor});
  }
  for (std::size_t i = last + 1; i < rem.size(); ++i)
    if (rem[i] != 0)
      throw NonzeroRemainder("exact_div: nonzero remainder");
  return LaurentPoly::from_terms(std::move(quot));
}

LaurentPoly substitute_power(const LaurentPoly& p, std::int64_t m) {
  if (m == 0)
    throw std::invalid_argument("substitute_power: exponent multiplier must be nonzero");
  std::vector<LaurentPoly::Term> out(p.terms().begin(), p.terms().end());
  for (auto& t : out)
    t.exponent *= m;
  if (m < 0)
    std::reverse(out.begin(), out.end());
  return LaurentPoly::from_terms(std::move(out));
}

Rational evaluate_at(const LaurentPoly& p, const Integer& v) {
  if (v == 0)
    throw std::invalid_argument("evaluate_at: evaluation point must be nonzero");
  Rational sum = 0;
  Integer power;
  for (const auto& t : p.terms()) {
    const auto mag = static_cast<unsigned long>(t.exponent < 0 ? -t.exponent : t.exponent);
    mpz_pow_ui(power.get_mpz_t(), v.get_mpz_t(), mag);
    Rational term = t.exponent < 0 ? Rational(Integer(t.coeff), power) : Rational(t.coeff * power);
    term.canonicalize();
    sum += term;
  }
  sum.canonicalize();
  return sum;
}

LaurentPoly one_minus_q_power(Exponent e) {
  return LaurentPoly::constant(1) - LaurentPoly::q_power(e);
}

} // namespace qident
