#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "qident/bivar_poly.hpp"
#include "qident/laurent_poly.hpp"
#include "qident/series.hpp"

namespace qident {

class ParseError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Text form: ascending exponents, "c*q^e" terms, signs folded into the
// separators: "1 - q + 2*q^3", "q^-1", "0" for zero.
std::string to_text(const LaurentPoly& p);
// s-major nesting: "(q^2)*s^-1 + (1 + q) + (q)*s".
std::string to_text(const BivarPoly& p);
// Polynomial part followed by the truncation: "1 - q - q^2 + O(q^3)".
std::string to_text(const ShiftedSeries& s);

// {"var":"q","terms":[[e,"c"],...]}, coefficients as decimal strings.
nlohmann::json to_json(const LaurentPoly& p);
// {"var":"s","coeff_var":"q","terms":[[k,[[e,"c"],...]],...]}
nlohmann::json to_json(const BivarPoly& p);
// {"var":"q","shift":s,"order":N,"terms":[[e,"c"],...]} with absolute exponents.
nlohmann::json to_json(const ShiftedSeries& s);

// Rows "exponent,coefficient" after a header line.
std::string to_csv(const LaurentPoly& p);
// Rows "s_exponent,q_exponent,coefficient" after a header line.
std::string to_csv(const BivarPoly& p);
std::string to_csv(const ShiftedSeries& s);

// Inverses of the above. Throw ParseError on malformed input.
LaurentPoly parse_laurent(std::string_view text);
BivarPoly parse_bivar(std::string_view text);
ShiftedSeries parse_series(std::string_view text);
LaurentPoly laurent_from_json(const nlohmann::json& j);
BivarPoly bivar_from_json(const nlohmann::json& j);
ShiftedSeries series_from_json(const nlohmann::json& j);

} // namespace qident
