#include "qident/bivar_poly.hpp"

#include <algorithm>
#include <map>

namespace qident {

BivarPoly::BivarPoly(LaurentPoly constant) {
  if (!constant.is_zero())
    terms_.push_back({0, std::move(constant)});
}

BivarPoly BivarPoly::s_power(Exponent k, LaurentPoly coeff) {
  BivarPoly p;
  if (!coeff.is_zero())
    p.terms_.push_back({k, std::move(coeff)});
  return p;
}

BivarPoly BivarPoly::from_terms(std::vector<Term> terms) {
  std::map<Exponent, LaurentPoly> acc;
  for (auto& t : terms)
    acc[t.s_exponent] += t.coeff;
  BivarPoly p;
  for (auto& [k, c] : acc)
    if (!c.is_zero())
      p.terms_.push_back({k, std::move(c)});
  return p;
}

LaurentPoly BivarPoly::coefficient(Exponent k) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                             [](const Term& t, Exponent x) { return t.s_exponent < x; });
  if (it != terms_.end() && it->s_exponent == k)
    return it->coeff;
  return {};
}

BivarPoly BivarPoly::operator-() const {
  BivarPoly p = *this;
  for (auto& t : p.terms_)
    t.coeff = -t.coeff;
  return p;
}

namespace {

std::vector<BivarPoly::Term> merge(std::span<const BivarPoly::Term> a,
                                   std::span<const BivarPoly::Term> b, bool subtract) {
  std::vector<BivarPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].s_exponent < b[j].s_exponent)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].s_exponent < a[i].s_exponent) {
      out.push_back(subtract ? BivarPoly::Term{b[j].s_exponent, -b[j].coeff} : b[j]);
      ++j;
    } else {
      LaurentPoly c = subtract ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
      if (!c.is_zero())
        out.push_back({a[i].s_exponent, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

} // namespace

BivarPoly& BivarPoly::operator+=(const BivarPoly& other) {
  terms_ = merge(terms_, other.terms_, false);
  return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& other) {
  terms_ = merge(terms_, other.terms_, true);
  return *this;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
  std::vector<BivarPoly::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_)
      prod.push_back({x.s_exponent + y.s_exponent, x.coeff * y.coeff});
  return BivarPoly::from_terms(std::move(prod));
}

BivarPoly operator*(const BivarPoly& a, const LaurentPoly& c) {
  BivarPoly p;
  for (const auto& t : a.terms_) {
    LaurentPoly v = t.coeff * c;
    if (!v.is_zero())
      p.terms_.push_back({t.s_exponent, std::move(v)});
  }
  return p;
}

LaurentPoly substitute_s(const BivarPoly& p, Monomial value) {
  LaurentPoly out;
  for (const auto& t : p.terms())
    out += t.coeff * value.pow(t.s_exponent);
  return out;
}

BivarPoly shift_s(const BivarPoly& p, Exponent j) {
  std::vector<BivarPoly::Term> out;
  for (const auto& t : p.terms())
    out.push_back({t.s_exponent, t.coeff.shifted(j * t.s_exponent)});
  return BivarPoly::from_terms(std::move(out));
}

BivarPoly times_s_power(const BivarPoly& p, Exponent k) {
  std::vector<BivarPoly::Term> out(p.terms().begin(), p.terms().end());
  for (auto& t : out)
    t.s_exponent += k;
  return BivarPoly::from_terms(std::move(out));
}

BivarPoly substitute_q_power(const BivarPoly& p, std::int64_t m) {
  std::vector<BivarPoly::Term> out;
  for (const auto& t : p.terms())
    out.push_back({t.s_exponent, substitute_power(t.coeff, m)});
  return BivarPoly::from_terms(std::move(out));
}

} // namespace qident
