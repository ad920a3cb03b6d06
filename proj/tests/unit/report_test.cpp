#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include <json.hpp>

#include "../support.hpp"
#include "liesym/errors.hpp"
#include "liesym/report.hpp"

using namespace liesym;
using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

AnalyzeConfig config(const std::string& file, ParamOverrides over = {}) {
  AnalyzeConfig cfg;
  cfg.text = slurp(std::string(LIESYM_DATA) + "/" + file);
  cfg.overrides = std::move(over);
  return cfg;
}

int run(const std::string& args) {
  std::string cmd = std::string(LIESYM_BIN) + " " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string data(const std::string& f) { return std::string(LIESYM_DATA) + "/" + f; }

}  // namespace

TEST_CASE("example family with symmetries") {
  auto r = run_analyze(config("quadratic.ode", {{"a", Rat(1)}}));
  CHECK(r.search.family_detected);
  CHECK(r.bound.kind == BoundKind::Certified);
  CHECK(r.bound.value == 1);
  CHECK(r.scan.m_min == -1);
  CHECK(r.scan.m_max == 1);
  REQUIRE(r.scan.spaces.size() == 3);
  CHECK(r.scan.spaces[1].dim() == 2);
  CHECK(r.scan.spaces[2].dim() == 2);
  REQUIRE(r.algebra);
  CHECK(r.algebra->dim() == 4);
  CHECK(r.derived == std::vector<std::size_t>{4, 3, 1, 0});
  CHECK(r.solvable);
  CHECK(r.verdict == "NontrivialSymmetriesFound");
  for (const auto& rec : r.records) CHECK(rec.status == "certified");
}

TEST_CASE("example family without symmetries") {
  auto r = run_analyze(config("quadratic.ode"));
  REQUIRE(r.records.size() == 2);
  CHECK(r.records[0].status == "blocked");
  CHECK(r.records[1].status == "certified");
  REQUIRE(r.bound_source);
  CHECK(*r.bound_source == 1);
  CHECK(r.bound.value == 1);
  CHECK(r.scan.certified);
  CHECK(r.verdict == "NoNontrivialAnalyticSymmetries");
  CHECK_FALSE(r.warnings.empty());  // the blocked balance is mentioned

  auto r3 = run_analyze(config("quadratic.ode", {{"a", Rat(3)}}));
  CHECK(r3.bound.value == 1);
  CHECK(r3.verdict == "NoNontrivialAnalyticSymmetries");
}

TEST_CASE("semi-quasihomogeneous systems") {
  auto lv = run_semi(config("lv.ode"));
  REQUIRE(lv.semi);
  CHECK(lv.semi->sign == SqhSign::Negative);
  CHECK(lv.semi->weights_derived);
  CHECK(lv.semi->symmetry_class == "polynomial");
  CHECK(lv.verdict == "NoNontrivialAnalyticSymmetries");  // about the core
  CHECK(lv.semi->conclusion == "NoNontrivialPolynomialSymmetries");
  CHECK(lv.weights.g == std::vector<Rat>{1, 1});

  auto rep = run_semi(config("replicator.ode"));
  REQUIRE(rep.semi);
  CHECK(rep.semi->sign == SqhSign::Positive);
  CHECK(rep.semi->symmetry_class == "analytic");
  CHECK(rep.semi->conclusion == "NoNontrivialAnalyticSymmetries");

  auto lv1 = run_semi(config("lv.ode", {{"a", Rat(1)}}));
  CHECK(lv1.verdict == "NontrivialSymmetriesFound");
  CHECK(lv1.semi->conclusion == "Inconclusive");

  auto w = derive_semi_weights(testsupport::field({"x1 - 2*x2 + x1^2 + x1*x2", "3*x1 + 2*x1*x2 + x2^2"}));
  REQUIRE(w);
  CHECK(w->g == std::vector<Rat>{1, 1});
}

TEST_CASE("JSON report") {
  auto cfg = config("quadratic.ode");
  const std::string a = report_json(run_analyze(cfg));
  const std::string b = report_json(run_analyze(cfg));
  CHECK(a == b);
  json j = json::parse(a);
  CHECK(j["schema_version"] == 1);
  CHECK(j["command"] == "analyze");
  CHECK(j["system"]["params"]["a"] == "2");
  CHECK(j["weights"]["l"] == 1);
  CHECK(j["balances"]["items"].size() == 2);
  CHECK(j["balances"]["items"][0]["bound_status"] == "blocked");
  CHECK(j["degree_bound"]["kind"] == "Certified");
  CHECK(j["degree_bound"]["m_max"] == 1);
  CHECK(j["degree_bound"]["m_min"] == -1);
  CHECK(j["symmetries"]["total_dim"] == 1);
  CHECK(j["symmetries"]["dim_modulo_field"] == 0);
  CHECK(j["verdict"] == "NoNontrivialAnalyticSymmetries");
  CHECK_FALSE(j.contains("seconds"));
  CHECK(a.find("time") == std::string::npos);
}

TEST_CASE("numeric exponents never give a certified negative verdict") {
  auto cfg = config("irrational.ode");
  cfg.weights = std::vector<Rat>{1, 1, 1};
  auto r = run_analyze(cfg);
  REQUIRE_FALSE(r.records.empty());
  CHECK(r.records[0].status == "numeric");
  CHECK(r.bound.kind == BoundKind::Uncertified);
  CHECK_FALSE(r.scan.certified);
  CHECK(r.verdict != "NoNontrivialAnalyticSymmetries");
  json j = json::parse(report_json(r));
  CHECK(j["degree_bound"]["kind"] == "Uncertified");
  const auto& ex = j["balances"]["items"][0]["exponents"];
  REQUIRE(ex.size() == 3);
  CHECK(ex[1].is_object());
  CHECK(ex[1].contains("tol"));

  // A truncated scan below the certified bound is not certified either.
  auto low = config("quadratic.ode");
  low.max_degree = 0;
  auto t = run_analyze(low);
  CHECK_FALSE(t.scan.certified);
  CHECK(t.verdict.find("UpToDegree") == 0);
}

TEST_CASE("error paths") {
  CHECK_THROWS_AS(run_analyze(config("lv.ode")), NotQuasihomogeneous);
  AnalyzeConfig fam;
  fam.text = "vars: x1 x2\neq x1' = x1^2\neq x2' = x1*x2\n";
  CHECK_THROWS_AS(run_analyze(fam), HypothesisError);
  fam.weights = std::vector<Rat>{1, 1};
  CHECK_NOTHROW(run_analyze(fam));
  fam.weights = std::vector<Rat>{1, 2, 3};
  CHECK_THROWS_AS(run_analyze(fam), DimensionError);
  AnalyzeConfig bad;
  bad.text = "vars: x\neq x' = 0.5*x\n";
  CHECK_THROWS_AS(run_analyze(bad), ParseError);
}

TEST_CASE("text helpers") {
  std::vector<std::string> names{"X1", "X2", "X3"};
  CHECK(combination_string({-1, -1, 0}, names) == "-X1 - X2");
  CHECK(combination_string({1, 1, 0}, names) == "X1 + X2");
  CHECK(combination_string({0, 0, -1}, names) == "-X3");
  CHECK(combination_string({0, 0, 0}, names) == "0");
  auto t = structure_constants({testsupport::X1(), testsupport::X2(), testsupport::X3(), testsupport::X4()});
  std::string txt = table_text(t, {"X1", "X2", "X3", "X4"});
  CHECK(txt.find("-X1 - X2") != std::string::npos);
  CHECK(txt.find("derived series: 4 3 1 0") != std::string::npos);
  json tj = json::parse(table_json(t, {"X1", "X2", "X3", "X4"}));
  CHECK(tj.dump() == json::parse(table_json(t, {"X1", "X2", "X3", "X4"})).dump());
}

TEST_CASE("command line exit codes") {
  CHECK(run("analyze " + data("quadratic.ode")) == 0);
  CHECK(run("analyze " + data("quadratic.ode") + " --set a=1 --json -") == 0);
  CHECK(run("analyze " + data("lv.ode") + " --semi") == 0);
  CHECK(run("analyze " + data("lv.ode")) == 3);
  CHECK(run("analyze " + data("missing.ode")) == 2);
  CHECK(run("analyze " + data("quadratic.ode") + " --set a=0.5") == 2);
  CHECK(run("analyze " + data("quadratic.ode") + " --bogus") == 2);
  CHECK(run("bracket " + data("X1.field") + " " + data("X4.field")) == 0);
  CHECK(run("table " + data("l4.fields")) == 0);
  CHECK(run("resonance --lambdas -1,0") == 0);
  CHECK(run("resonance --lambdas 1,0") == 3);
  CHECK(run("resonance --lambdas=-1,1 --equilibrium 2") == 0);
  CHECK(run("--help") == 0);
}
