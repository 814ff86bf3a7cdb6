#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "qident/bivar_poly.hpp"
#include "qident/laurent_poly.hpp"
#include "qident/pentagon.hpp"
#include "qident/series.hpp"

namespace qident {

// One side of a checked identity, kept only when it is worth showing.
using Evidence = std::variant<LaurentPoly, BivarPoly, ShiftedSeries, Integer, std::string>;

using Params = std::vector<std::pair<std::string, std::int64_t>>;

struct CaseResult {
  std::string id; // "<suite>.<identity>"
  Params params;
  bool pass = false;
  std::optional<Evidence> lhs;
  std::optional<Evidence> rhs;
};

struct VerificationReport {
  std::string suite;
  std::vector<CaseResult> cases;

  std::size_t failures() const;
};

// Range overrides. Unset ranges fall back to each suite's own defaults.
struct VerifyOptions {
  std::optional<std::int64_t> L_max;
  std::optional<std::int64_t> k_max;
  std::optional<std::int64_t> n_max;
  std::optional<std::int64_t> m_max;
  std::size_t order_N = 200;
  WVariant w_variant = WVariant::reciprocal;
  unsigned jobs = 1;
};

// Suite names accepted by run_suite, in the order `all` runs them.
const std::vector<std::string>& suite_names();

// Runs the named suite (or "all"). Cases are sorted by suite, identity and
// parameter tuple, so the report does not depend on scheduling.
// Throws std::invalid_argument for an unknown suite.
VerificationReport run_suite(std::string_view suite, const VerifyOptions& options);

nlohmann::json to_json(const VerificationReport& report);
VerificationReport report_from_json(const nlohmann::json& j);
std::string to_text(const VerificationReport& report);
std::string to_csv(const VerificationReport& report);

} // namespace qident
