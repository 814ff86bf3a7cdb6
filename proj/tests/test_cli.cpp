#include <doctest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "qident/cli.hpp"
#include "qident/serialize.hpp"
#include "qident/verify.hpp"

using namespace qident;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

std::int64_t param(const CaseResult& c, const std::string& name) {
  for (const auto& [n, v] : c.params)
    if (n == name)
      return v;
  FAIL("missing parameter " << name);
  return 0;
}

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "qident");
  std::vector<const char*> argv;
  for (const auto& a : args)
    argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("eval examples") {
  CHECK(run({"eval", "h_direct", "1", "1"}).out == "q\n");
  CHECK(run({"eval", "gauss_eval", "4"}).out == "1 - q - q^3 + q^4\n");
  CHECK(run({"eval", "w", "2"}).out == "0\n");
  CHECK(run({"eval", "w", "-2"}).out == "-q^-1\n");
  CHECK(run({"--w-variant", "as_printed", "eval", "w", "3"}).out == "-q\n");
  CHECK(run({"eval", "h_limit", "3"}).out == "-q^-2\n");
  CHECK(run({"eval", "binomial", "4", "2"}).out == "1 + q + 2*q^2 + q^3 + q^4\n");
  CHECK(run({"eval", "binomial", "2", "1", "2"}).out == "1 + q^2\n");
  CHECK(run({"eval", "pochhammer", "2"}).out == "1 - q - q^2 + q^3\n");
  CHECK(run({"eval", "pochhammer", "1", "2", "2"}).out == "1 - q - q^3 + q^4\n");
  CHECK(run({"eval", "G", "1", "0"}).out == "(q^2)*s^-1 + (1 + q)\n");
  CHECK(run({"eval", "pentagonal_theta", "7"}).out == "1 - q - q^2 + q^5 + q^7 + O(q^8)\n");
  CHECK(run({"eval", "class_sums", "7"}).out == "43 43 42\n");
  CHECK(run({"eval", "rs", "1", "3"}).out == "1 - q^3\n");
  CHECK(run({"eval", "c", "1", "2"}).out == "1 + q - q^3\n");
}

TEST_CASE("eval formats") {
  const Run j = run({"eval", "--format", "json", "gauss_eval", "4"});
  CHECK(j.code == 0);
  CHECK(laurent_from_json(json::parse(j.out)) == parse_laurent("1 - q - q^3 + q^4"));
  const Run c = run({"--format", "csv", "eval", "gauss_eval", "2"});
  CHECK(c.out == "exponent,coefficient\n0,1\n1,-1\n");
  const Run b = run({"--format", "json", "eval", "f_rec", "3"});
  CHECK(bivar_from_json(json::parse(b.out)) == parse_bivar("(1 + q + q^2 + q^3) + (-q)*s"));
}

TEST_CASE("exit codes") {
  CHECK(run({"eval", "nope", "1"}).code == 2);
  CHECK(run({"eval", "h_direct", "1"}).code == 2);
  CHECK(run({"eval", "h_direct", "1", "x"}).code == 2);
  CHECK(run({"eval", "h_direct", "-1", "0"}).code == 1);
  CHECK(run({"eval", "b", "0", "1"}).code == 1);
  CHECK(run({"verify", "nope"}).code == 2);
  CHECK(run({"--format", "xml", "eval", "w", "1"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
  const Run err = run({"eval", "h_direct", "-1", "0"});
  CHECK(err.out.empty());
  CHECK(err.err.find("error") != std::string::npos);
}

TEST_CASE("verify runs a suite") {
  const Run r = run({"verify", "berkovich_garvan", "--L-max", "5", "--format", "json"});
  CHECK(r.code == 0);
  const auto report = report_from_json(json::parse(r.out));
  CHECK(report.suite == "berkovich_garvan");
  CHECK(report.cases.size() == 6);
  CHECK(report.failures() == 0);

  const Run csv = run({"verify", "berkovich_garvan", "--L-max", "1", "--format", "csv"});
  CHECK(csv.out == "suite,id,params,pass\n"
                   "berkovich_garvan,berkovich_garvan.h_L0_is_one,L=0,true\n"
                   "berkovich_garvan,berkovich_garvan.h_L0_is_one,L=1,true\n");
}

TEST_CASE("printed w variant fails Theorem 1") {
  const Run r = run({"verify", "theorem1", "--w-variant", "as_printed", "--L-max", "3",
                     "--k-max", "3", "--format", "json"});
  CHECK(r.code == 1);
  const auto report = report_from_json(json::parse(r.out));
  CHECK(report.failures() > 0);
  for (const auto& c : report.cases)
    if (!c.pass && c.id == "theorem1.closed_eq_direct") {
      CHECK(c.lhs.has_value());
      CHECK(c.rhs.has_value());
      CHECK(param(c, "k") >= 1);
    }
}

TEST_CASE("order and jobs from the environment, flags win") {
  ::setenv("QIDENT_ORDER_N", "37", 1);
  Run r = run({"verify", "limits", "--m-max", "0", "--format", "json"});
  ::unsetenv("QIDENT_ORDER_N");
  auto report = report_from_json(json::parse(r.out));
  CHECK(param(report.cases.front(), "N") == 37);

  ::setenv("QIDENT_ORDER_N", "37", 1);
  r = run({"verify", "limits", "--m-max", "0", "--order-N", "41", "--format", "json"});
  ::unsetenv("QIDENT_ORDER_N");
  report = report_from_json(json::parse(r.out));
  CHECK(param(report.cases.front(), "N") == 41);

  ::setenv("QIDENT_JOBS", "zero", 1);
  CHECK(run({"verify", "limits"}).code == 2);
  ::setenv("QIDENT_JOBS", "0", 1);
  CHECK(run({"verify", "limits"}).code == 2);
  ::setenv("QIDENT_JOBS", "3", 1);
  CHECK(run({"verify", "limits"}).code == 0);
  ::unsetenv("QIDENT_JOBS");
}

TEST_CASE("reports do not depend on the number of workers") {
  VerifyOptions one, four;
  four.jobs = 4;
  one.n_max = four.n_max = 12;
  const auto a = run_suite("qcomb_identities", one);
  const auto b = run_suite("qcomb_identities", four);
  CHECK(to_json(a) == to_json(b));
}

TEST_CASE("report JSON round trip") {
  VerifyOptions options;
  options.L_max = 3;
  options.k_max = 3;
  const auto report = run_suite("theorem1", options);
  const json j = to_json(report);
  CHECK(j.at("failures") == 0);
  const auto back = report_from_json(json::parse(j.dump()));
  CHECK(to_json(back) == j);
  // The recorded discrepancy carries both sides even though it passes.
  bool recorded = false;
  for (const auto& c : back.cases)
    if (c.id == "theorem1.as_printed_disagrees") {
      recorded = c.pass && c.lhs && c.rhs;
    }
  CHECK(recorded);
  CHECK_THROWS_AS(run_suite("nope", options), std::invalid_argument);
}

TEST_CASE("report parser checks the failure count") {
  json broken = json::parse(R"({"suite":"x","cases":[],"failures":1})");
  CHECK_THROWS_AS(report_from_json(broken), ParseError);
}
