#include "qident/cli.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "qident/errors.hpp"
#include "qident/gauss.hpp"
#include "qident/pentagon.hpp"
#include "qident/qcomb.hpp"
#include "qident/serialize.hpp"
#include "qident/series.hpp"
#include "qident/verify.hpp"

namespace qident {

namespace {

using nlohmann::json;

enum class Format { text, json, csv };

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

using ClassSums = std::array<Integer, 3>;
using Value = std::variant<LaurentPoly, BivarPoly, ShiftedSeries, ClassSums>;

struct EvalContext {
  std::vector<std::int64_t> args;
  WVariant variant;
};

struct Family {
  std::vector<std::size_t> arities;
  const char* usage;
  std::function<Value(const EvalContext&)> eval;
};

const std::map<std::string, Family>& families() {
  using C = const EvalContext&;
  static const std::map<std::string, Family> table{
      {"h_direct", {{2}, "L k", [](C c) -> Value { return h_direct(c.args[0], c.args[1]); }}},
      {"h_closed",
       {{2}, "L k", [](C c) -> Value { return h_closed(c.args[0], c.args[1], c.variant); }}},
      {"h_limit", {{1}, "m", [](C c) -> Value { return h_limit(c.args[0]); }}},
      {"w", {{1}, "n", [](C c) -> Value { return w_seq(c.args[0], c.variant); }}},
      {"G", {{2}, "L i", [](C c) -> Value { return G_extended(c.args[0], c.args[1]); }}},
      {"f_lower", {{1}, "n", [](C c) -> Value { return f_lower(c.args[0]); }}},
      {"qfib_F", {{1}, "n", [](C c) -> Value { return qfib_F(c.args[0]); }}},
      {"rs",
       {{2}, "n k",
        [](C c) -> Value {
          if (c.args[1] < 0)
            throw UnsupportedIndex("rs: k must be >= 0");
          return rs_direct(c.args[0], Monomial::one(), Monomial::q_power(c.args[1], -1));
        }}},
      {"gauss_eval", {{1}, "n", [](C c) -> Value { return gauss_eval(c.args[0]); }}},
      {"b", {{2}, "n k", [](C c) -> Value { return b_ratio(c.args[0], c.args[1]); }}},
      {"c", {{2}, "n k", [](C c) -> Value { return c_ratio(c.args[0], c.args[1]); }}},
      {"f_rec", {{1}, "k", [](C c) -> Value { return f_poly_rec(c.args[0]); }}},
      {"f_closed", {{1}, "k", [](C c) -> Value { return f_poly_closed(c.args[0]); }}},
      {"theorem2_odd",
       {{2}, "n k", [](C c) -> Value { return theorem2_odd(c.args[0], c.args[1]); }}},
      {"theorem2_even",
       {{2}, "n k", [](C c) -> Value { return theorem2_even(c.args[0], c.args[1]); }}},
      {"binomial",
       {{2, 3}, "n k [m]",
        [](C c) -> Value {
          if (c.args.size() == 3)
            return gauss_binomial_base(c.args[0], c.args[1], c.args[2]);
          return gauss_binomial(c.args[0], c.args[1]);
        }}},
      {"pochhammer",
       {{1, 3}, "n | start step n",
        [](C c) -> Value {
          if (c.args.size() == 3)
            return q_pochhammer(c.args[0], c.args[1], c.args[2]);
          return q_pochhammer(c.args[0]);
        }}},
      {"pentagonal_theta",
       {{1}, "N",
        [](C c) -> Value {
          if (c.args[0] < 0)
            throw UnsupportedIndex("pentagonal_theta: N must be >= 0");
          return ShiftedSeries{0, pentagonal_theta(static_cast<std::size_t>(c.args[0]))};
        }}},
      {"class_sums", {{1}, "n", [](C c) -> Value { return binomial_class_sums(c.args[0]); }}},
  };
  return table;
}

std::int64_t parse_int(const std::string& s) {
  std::int64_t v = 0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end)
    throw UsageError("not an integer: " + s);
  return v;
}

std::string render(const Value& value, Format format) {
  return std::visit(
      [format](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ClassSums>) {
          switch (format) {
          case Format::text:
            return v[0].get_str() + " " + v[1].get_str() + " " + v[2].get_str() + "\n";
          case Format::json:
            return json::array({v[0].get_str(), v[1].get_str(), v[2].get_str()}).dump() + "\n";
          case Format::csv:
            return "residue,sum\n0," + v[0].get_str() + "\n1," + v[1].get_str() + "\n2," +
                   v[2].get_str() + "\n";
          }
        } else {
          switch (format) {
          case Format::text:
            return to_text(v) + "\n";
          case Format::json:
            return to_json(v).dump() + "\n";
          case Format::csv:
            return to_csv(v);
          }
        }
        return {};
      },
      value);
}

std::string render(const VerificationReport& report, Format format) {
  switch (format) {
  case Format::text:
    return to_text(report);
  case Format::json:
    return to_json(report).dump() + "\n";
  case Format::csv:
    return to_csv(report);
  }
  return {};
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of q-series identities"};
  app.require_subcommand(1);
  app.fallthrough();

  Format format = Format::text;
  WVariant variant = WVariant::reciprocal;
  const std::map<std::string, Format> format_names{
      {"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};
  const std::map<std::string, WVariant> variant_names{{"reciprocal", WVariant::reciprocal},
                                                      {"as_printed", WVariant::as_printed}};
  app.add_option("--format", format, "Output format")
      ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case))
      ->capture_default_str();
  app.add_option("--w-variant", variant, "Sign convention of the w-sequence")
      ->transform(CLI::CheckedTransformer(variant_names))
      ->capture_default_str();

  auto* eval = app.add_subcommand("eval", "Evaluate one quantity at integer parameters");
  std::string family;
  std::vector<std::string> raw_args;
  eval->add_option("family", family, "Quantity to evaluate")->required();
  eval->add_option("params", raw_args, "Integer parameters");
  std::string family_help = "Families:\n";
  for (const auto& [name, f] : families())
    family_help += "  " + name + " " + f.usage + "\n";
  eval->footer(family_help);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite;
  VerifyOptions options;
  std::int64_t L_max = 0, k_max = 0, n_max = 0, m_max = 0;
  std::size_t order_N = options.order_N;
  unsigned jobs = options.jobs;
  verify->add_option("suite", suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  auto* L_opt = verify->add_option("--L-max", L_max, "Upper bound for L")->check(CLI::NonNegativeNumber);
  auto* k_opt = verify->add_option("--k-max", k_max, "Upper bound for k")->check(CLI::NonNegativeNumber);
  auto* n_opt = verify->add_option("--n-max", n_max, "Upper bound for n")->check(CLI::NonNegativeNumber);
  auto* m_opt = verify->add_option("--m-max", m_max, "Upper bound for m")->check(CLI::NonNegativeNumber);
  verify->add_option("--order-N", order_N, "Series truncation order")
      ->envname("QIDENT_ORDER_N")
      ->capture_default_str();
  verify->add_option("--jobs", jobs, "Worker threads")
      ->envname("QIDENT_JOBS")
      ->capture_default_str();

  std::vector<std::string> args;
  for (int i = argc - 1; i > 0; --i)
    args.emplace_back(argv[i]);

  try {
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    std::ostringstream help_out, error_out;
    const int code = app.exit(e, help_out, error_out);
    out << help_out.str();
    err << error_out.str();
    return code == 0 ? 0 : 2;
  }

  try {
    if (*eval) {
      const auto it = families().find(family);
      if (it == families().end())
        throw UsageError("unknown family: " + family);
      EvalContext ctx{{}, variant};
      for (const auto& a : raw_args)
        ctx.args.push_back(parse_int(a));
      const auto& arities = it->second.arities;
      if (std::find(arities.begin(), arities.end(), ctx.args.size()) == arities.end())
        throw UsageError(family + " takes parameters: " + it->second.usage);
      out << render(it->second.eval(ctx), format);
      return 0;
    }

    if (jobs == 0)
      throw UsageError("--jobs must be at least 1");
    if (*L_opt)
      options.L_max = L_max;
    if (*k_opt)
      options.k_max = k_max;
    if (*n_opt)
      options.n_max = n_max;
    if (*m_opt)
      options.m_max = m_max;
    options.order_N = order_N;
    options.w_variant = variant;
    options.jobs = jobs;
    const VerificationReport report = run_suite(suite, options);
    out << render(report, format);
    return report.failures() == 0 ? 0 : 1;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

} // namespace qident
