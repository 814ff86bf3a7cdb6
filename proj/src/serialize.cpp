#include "qident/serialize.hpp"

#include <cctype>
#include <sstream>

namespace qident {

namespace {

using nlohmann::json;

// Magnitude part of a term, without its sign: "3", "q", "2*q^-1".
std::string term_body(const Integer& magnitude, Exponent e) {
  std::string out;
  const bool unit = magnitude == 1;
  if (e == 0)
    return magnitude.get_str();
  if (!unit)
    out = magnitude.get_str() + "*";
  out += "q";
  if (e != 1)
    out += "^" + std::to_string(e);
  return out;
}

json terms_json(const LaurentPoly& p) {
  json arr = json::array();
  for (const auto& t : p.terms())
    arr.push_back(json::array({t.exponent, t.coeff.get_str()}));
  return arr;
}

LaurentPoly terms_from_json(const json& arr) {
  if (!arr.is_array())
    throw ParseError("expected an array of [exponent, coefficient] pairs");
  std::vector<LaurentPoly::Term> terms;
  for (const auto& item : arr) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer())
      throw ParseError("malformed term: " + item.dump());
    Integer c;
    if (item[1].is_string()) {
      if (c.set_str(item[1].get<std::string>(), 10) != 0)
        throw ParseError("malformed coefficient: " + item[1].dump());
    } else if (item[1].is_number_integer()) {
      c = Integer(item[1].dump());
    } else {
      throw ParseError("malformed coefficient: " + item[1].dump());
    }
    terms.push_back({item[0].get<Exponent>(), c});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

void expect_var(const json& j, const char* key, const char* value) {
  if (!j.is_object() || !j.contains(key) || j.at(key) != value)
    throw ParseError(std::string("expected \"") + key + "\": \"" + value + "\"");
}

class Cursor {
public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c))
      fail(std::string("expected '") + c + "'");
  }
  std::string digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (start == pos_)
      fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }
  Exponent signed_int() {
    bool paren = accept('(');
    bool negative = accept('-');
    if (!negative)
      accept('+');
    const std::string d = digits();
    if (paren)
      expect(')');
    const Exponent v = std::stoll(d);
    return negative ? -v : v;
  }
  std::size_t position() const { return pos_; }
  std::string_view rest() const { return s_.substr(pos_); }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) +
                     "\"");
  }

private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

// term := [digits ['*' 'q' ['^' int]]] | 'q' ['^' int]
LaurentPoly::Term parse_term(Cursor& cur, char var) {
  Integer coeff = 1;
  bool have_coeff = false;
  if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
    coeff = Integer(cur.digits());
    have_coeff = true;
    if (!cur.accept('*'))
      return {0, coeff};
  }
  if (!cur.accept(var)) {
    if (have_coeff)
      cur.fail(std::string("expected '") + var + "' after '*'");
    cur.fail("expected a term");
  }
  Exponent e = 1;
  if (cur.accept('^'))
    e = cur.signed_int();
  return {e, coeff};
}

// Parses "t1 +- t2 +- ..." up to (not including) a stop character or the end.
LaurentPoly parse_sum(Cursor& cur, char var, char stop) {
  std::vector<LaurentPoly::Term> terms;
  bool first = true;
  while (!cur.done() && cur.peek() != stop) {
    bool negative = false;
    if (cur.accept('-'))
      negative = true;
    else if (!cur.accept('+') && !first)
      cur.fail("expected '+' or '-'");
    // "O(" marks the start of a truncation suffix.
    if (cur.peek() == 'O') {
      if (negative)
        cur.fail("unexpected '-' before O(...)");
      break;
    }
    auto t = parse_term(cur, var);
    if (negative)
      t.coeff = -t.coeff;
    terms.push_back(std::move(t));
    first = false;
  }
  if (first && terms.empty())
    cur.fail("empty polynomial");
  return LaurentPoly::from_terms(std::move(terms));
}

} // namespace

std::string to_text(const LaurentPoly& p) {
  if (p.is_zero())
    return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    const bool negative = t.coeff < 0;
    const Integer magnitude = abs(t.coeff);
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    out += term_body(magnitude, t.exponent);
    first = false;
  }
  return out;
}

std::string to_text(const BivarPoly& p) {
  if (p.is_zero())
    return "0";
  std::string out;
  for (const auto& t : p.terms()) {
    if (!out.empty())
      out += " + ";
    out += "(" + to_text(t.coeff) + ")";
    if (t.s_exponent == 1)
      out += "*s";
    else if (t.s_exponent != 0)
      out += "*s^" + std::to_string(t.s_exponent);
  }
  return out;
}

std::string to_text(const ShiftedSeries& s) {
  const LaurentPoly p = series_to_poly(s);
  const Exponent cut = s.shift + static_cast<Exponent>(s.series.order()) + 1;
  std::string tail = "O(q^" + std::to_string(cut) + ")";
  if (p.is_zero())
    return tail;
  return to_text(p) + " + " + tail;
}

json to_json(const LaurentPoly& p) { return json{{"var", "q"}, {"terms", terms_json(p)}}; }

json to_json(const BivarPoly& p) {
  json arr = json::array();
  for (const auto& t : p.terms())
    arr.push_back(json::array({t.s_exponent, terms_json(t.coeff)}));
  return json{{"var", "s"}, {"coeff_var", "q"}, {"terms", std::move(arr)}};
}

json to_json(const ShiftedSeries& s) {
  return json{{"var", "q"},
              {"shift", s.shift},
              {"order", s.series.order()},
              {"terms", terms_json(series_to_poly(s))}};
}

std::string to_csv(const LaurentPoly& p) {
  std::ostringstream out;
  out << "exponent,coefficient\n";
  for (const auto& t : p.terms())
    out << t.exponent << ',' << t.coeff.get_str() << '\n';
  return out.str();
}

std::string to_csv(const BivarPoly& p) {
  std::ostringstream out;
  out << "s_exponent,q_exponent,coefficient\n";
  for (const auto& st : p.terms())
    for (const auto& t : st.coeff.terms())
      out << st.s_exponent << ',' << t.exponent << ',' << t.coeff.get_str() << '\n';
  return out.str();
}

std::string to_csv(const ShiftedSeries& s) { return to_csv(series_to_poly(s)); }

LaurentPoly parse_laurent(std::string_view text) {
  Cursor cur(text);
  LaurentPoly p = parse_sum(cur, 'q', '\0');
  if (!cur.done())
    cur.fail("trailing input");
  return p;
}

BivarPoly parse_bivar(std::string_view text) {
  Cursor cur(text);
  if (cur.peek() == '0') {
    cur.accept('0');
    if (!cur.done())
      cur.fail("trailing input after 0");
    return {};
  }
  std::vector<BivarPoly::Term> terms;
  bool first = true;
  while (!cur.done()) {
    if (!first)
      cur.expect('+');
    cur.expect('(');
    LaurentPoly c = parse_sum(cur, 'q', ')');
    cur.expect(')');
    Exponent k = 0;
    if (cur.accept('*')) {
      cur.expect('s');
      k = cur.accept('^') ? cur.signed_int() : 1;
    }
    terms.push_back({k, std::move(c)});
    first = false;
  }
  return BivarPoly::from_terms(std::move(terms));
}

ShiftedSeries parse_series(std::string_view text) {
  Cursor cur(text);
  LaurentPoly p;
  if (cur.peek() != 'O')
    p = parse_sum(cur, 'q', '\0');
  cur.expect('O');
  cur.expect('(');
  cur.expect('q');
  cur.expect('^');
  const Exponent cut = cur.signed_int();
  cur.expect(')');
  if (!cur.done())
    cur.fail("trailing input");
  const Exponent shift = p.is_zero() ? 0 : p.min_exponent();
  if (cut <= shift)
    throw ParseError("truncation O(q^" + std::to_string(cut) + ") below the lowest term");
  if (!p.is_zero() && p.max_exponent() >= cut)
    throw ParseError("term beyond the truncation order");
  TruncatedSeries series(static_cast<std::size_t>(cut - shift - 1));
  for (const auto& t : p.terms())
    series[static_cast<std::size_t>(t.exponent - shift)] = t.coeff;
  return {shift, std::move(series)};
}

LaurentPoly laurent_from_json(const json& j) {
  expect_var(j, "var", "q");
  if (!j.contains("terms"))
    throw ParseError("missing \"terms\"");
  return terms_from_json(j.at("terms"));
}

BivarPoly bivar_from_json(const json& j) {
  expect_var(j, "var", "s");
  expect_var(j, "coeff_var", "q");
  if (!j.contains("terms") || !j.at("terms").is_array())
    throw ParseError("missing \"terms\" array");
  std::vector<BivarPoly::Term> terms;
  for (const auto& item : j.at("terms")) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer())
      throw ParseError("malformed s-term: " + item.dump());
    terms.push_back({item[0].get<Exponent>(), terms_from_json(item[1])});
  }
  return BivarPoly::from_terms(std::move(terms));
}

ShiftedSeries series_from_json(const json& j) {
  expect_var(j, "var", "q");
  if (!j.contains("shift") || !j.contains("order") || !j.contains("terms"))
    throw ParseError("series needs \"shift\", \"order\" and \"terms\"");
  const auto shift = j.at("shift").get<Exponent>();
  const auto order = j.at("order").get<std::size_t>();
  const LaurentPoly p = terms_from_json(j.at("terms"));
  TruncatedSeries series(order);
  for (const auto& t : p.terms()) {
    const Exponent idx = t.exponent - shift;
    if (idx < 0 || idx > static_cast<Exponent>(order))
      throw ParseError("series term q^" + std::to_string(t.exponent) + " outside its window");
    series[static_cast<std::size_t>(idx)] = t.coeff;
  }
  return {shift, std::move(series)};
}

} // namespace qident
