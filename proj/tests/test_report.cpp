#include <doctest.h>

#include <stdexcept>
#include <string>

#include "nonarch/report.hpp"
#include "nonarch/run.hpp"
#include "nonarch/serialize.hpp"
#include "nonarch/series_text.hpp"
#include "nonarch/witness_spherical.hpp"
#include "nonarch/witness_theorem.hpp"

using namespace nonarch;

namespace {

Report small_theorem_report() {
  TheoremConfig cfg;
  cfg.p = 2;
  cfg.n = 4;
  return run_theorem(cfg);
}

const Check* find_check(const Report& r, const std::string& name) {
  for (const auto& c : r.checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

Check* find_check(Report& r, const std::string& name) {
  for (auto& c : r.checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

}  // namespace

TEST_SUITE("report") {

TEST_CASE("verdict: vacuous reports pass, one failure poisons everything") {
  Report empty;
  empty.witness = "unknown";
  CHECK(empty.passed());
  CHECK(report_to_json(empty).find("\"verdict\": \"pass\"") != std::string::npos);

  Report one_fail;
  one_fail.witness = "unknown";
  one_fail.add("a", "calc", true);
  one_fail.add("b", "calc", false);
  one_fail.add_assumed("c", "calc");
  CHECK_FALSE(one_fail.passed());
  CHECK(one_fail.failed_count() == 1);
  CHECK(report_to_json(one_fail).find("\"verdict\": \"fail\"") != std::string::npos);

  // Assumptions alone do not fail a report.
  Report assumed_only;
  assumed_only.witness = "unknown";
  assumed_only.add_assumed("c", "calc");
  CHECK(assumed_only.passed());
}

TEST_CASE("serialization is deterministic and round-trips") {
  Report r = small_theorem_report();
  std::string a = report_to_json(r);
  std::string b = report_to_json(r);
  CHECK(a == b);

  Report back = report_from_json(a);
  CHECK(back.witness == r.witness);
  CHECK(back.config == r.config);
  REQUIRE(back.checks.size() == r.checks.size());
  for (std::size_t i = 0; i < r.checks.size(); ++i) {
    CHECK(back.checks[i].name == r.checks[i].name);
    CHECK(back.checks[i].anchor == r.checks[i].anchor);
    CHECK(back.checks[i].status == r.checks[i].status);
    CHECK(back.checks[i].values == r.checks[i].values);
  }
  CHECK(report_to_json(back) == a);
}

TEST_CASE("text rendering carries one line per check plus the verdict") {
  Report r;
  r.witness = "unknown";
  r.add("alpha", "calc", true, {}, "fine");
  r.add("beta", "calc", false, {}, "broken");
  std::string text = report_to_text(r);
  CHECK(text.find("[pass] alpha") != std::string::npos);
  CHECK(text.find("[fail] beta") != std::string::npos);
  CHECK(text.find("verdict: fail") != std::string::npos);
}

TEST_CASE("malformed or inconsistent documents are rejected") {
  CHECK_THROWS_AS(report_from_json("not json"), std::invalid_argument);
  CHECK_THROWS_AS(report_from_json("{}"), std::invalid_argument);

  Report r;
  r.witness = "unknown";
  r.add("a", "calc", true);
  std::string good = report_to_json(r);

  // Wrong schema version.
  std::string bad_version = good;
  auto pos = bad_version.find("\"schema_version\": 1");
  REQUIRE(pos != std::string::npos);
  bad_version.replace(pos, 19, "\"schema_version\": 2");
  CHECK_THROWS_AS(report_from_json(bad_version), std::invalid_argument);

  // A verdict contradicting the checks is tampering, not data.
  std::string lied = good;
  pos = lied.find("\"verdict\": \"pass\"");
  REQUIRE(pos != std::string::npos);
  lied.replace(pos, 17, "\"verdict\": \"fail\"");
  CHECK_THROWS_AS(report_from_json(lied), std::invalid_argument);

  // Unknown status strings are rejected.
  std::string bad_status = good;
  pos = bad_status.find("\"status\": \"pass\"");
  REQUIRE(pos != std::string::npos);
  bad_status.replace(pos, 16, "\"status\": \"maybe\"");
  CHECK_THROWS_AS(report_from_json(bad_status), std::invalid_argument);
}

}  // TEST_SUITE

TEST_SUITE("verify") {

TEST_CASE("a sound report is confirmed check for check") {
  Report r = small_theorem_report();
  Report v = verify_report(r);
  CHECK(v.passed());
  CHECK(v.witness == "verify");
  CHECK(v.checks.size() == r.checks.size());
  CHECK(v.config.at("source_witness") == "theorem");
}

TEST_CASE("spherical and gauss reports are re-checkable from their values alone") {
  CHECK(verify_report(run_spherical(SphericalConfig{})).passed());

  GaussConfig gcfg;
  gcfg.identity_levels = 3;
  gcfg.norm_trials = 10;
  gcfg.gap_trials = 5;
  gcfg.gap_max_level = 3;
  gcfg.norm_max_level = 3;
  CHECK(verify_report(run_gauss(gcfg)).passed());
}

TEST_CASE("tampered values are caught by pure exponent arithmetic") {
  // The radius formula: swap in a wrong observed value.
  Report r = small_theorem_report();
  Check* gap = find_check(r, "radius.gap[n=1]");
  REQUIRE(gap != nullptr);
  gap->values["observed_val"] = "5/2";
  Report v = verify_report(r);
  CHECK_FALSE(v.passed());
  const Check* flagged = find_check(v, "radius.gap[n=1]");
  REQUIRE(flagged != nullptr);
  CHECK(flagged->status == CheckStatus::kFail);

  // The differential bound: break the closed form.
  Report r2 = small_theorem_report();
  Check* kb = find_check(r2, "kahler.bound[n=1]");
  REQUIRE(kb != nullptr);
  kb->values["e"] = "7/2";
  CHECK_FALSE(verify_report(r2).passed());

  // The unique-unit decomposition: claim a second unit.
  Report r3 = small_theorem_report();
  Check* pp = find_check(r3, "pth-power.unique-unit[n=2]");
  REQUIRE(pp != nullptr);
  pp->values["exponents"] = "4, 6, 9, 11";
  CHECK_FALSE(verify_report(r3).passed());

  // The greedy trace: reorder the residual valuations.
  Report r4 = run_spherical(SphericalConfig{});
  Check* mono = find_check(r4, "greedy.monotone");
  REQUIRE(mono != nullptr);
  mono->values["residual_vals"] = "2, 8, 4, 16, 32";
  CHECK_FALSE(verify_report(r4).passed());
}

TEST_CASE("failing inputs cannot be laundered into confirmations") {
  Report r;
  r.witness = "theorem";
  r.add("radius.gap[n=0]", "radius.gap", false,
        {{"p", "2"},
         {"n", "0"},
         {"d_next", "3"},
         {"expected_val", "3/2"},
         {"observed_val", "3/2"}});
  Report v = verify_report(r);
  CHECK_FALSE(v.passed());
  CHECK(v.checks.at(0).status == CheckStatus::kFail);
}

TEST_CASE("unknown check families fail closed") {
  Report r;
  r.witness = "unknown";
  r.add("mystery.claim", "mystery.family", true, {{"x", "1"}});
  Report v = verify_report(r);
  CHECK_FALSE(v.passed());
}

TEST_CASE("assumptions stay assumptions after re-validation") {
  Report r = small_theorem_report();
  Report v = verify_report(r);
  const Check* assumed = find_check(v, "chain.intersection-empty");
  REQUIRE(assumed != nullptr);
  CHECK(assumed->status == CheckStatus::kAssumed);
}

TEST_CASE("missing required values are flagged, not skipped") {
  Report r;
  r.witness = "theorem";
  r.add("radius.gap[n=0]", "radius.gap", true, {{"p", "2"}});  // everything else missing
  CHECK_FALSE(verify_report(r).passed());
}

}  // TEST_SUITE

TEST_SUITE("run_dispatch") {

TEST_CASE("witness selection and exit codes") {
  RunConfig ok;
  ok.witness = RunConfig::Witness::kTheorem;
  ok.theorem.n = 3;
  RunResult r = run(ok);
  CHECK(r.exit_code == 0);
  CHECK(r.report.passed());

  // A failing check is exit 1 (d_2 = 10 is even, so not coprime to p = 2).
  RunConfig failing;
  failing.witness = RunConfig::Witness::kTheorem;
  failing.theorem.n = 3;
  failing.theorem.user_d = {BigInt(3), BigInt(10), BigInt(23)};
  CHECK(run(failing).exit_code == 1);

  // An unusable configuration is exit 2 with a synthesized config.valid check.
  RunConfig invalid;
  invalid.witness = RunConfig::Witness::kTheorem;
  invalid.theorem.p = 4;
  RunResult r2 = run(invalid);
  CHECK(r2.exit_code == 2);
  REQUIRE(r2.report.checks.size() == 1);
  CHECK(r2.report.checks[0].name == "config.valid");
  CHECK(r2.report.checks[0].status == CheckStatus::kFail);
}

TEST_CASE("series calculator: exact answers and precision discipline") {
  RunConfig calc;
  calc.witness = RunConfig::Witness::kSeriesCalc;
  calc.calc.p = 2;
  calc.calc.op = "mul";
  calc.calc.lhs = "t + t^(3/2)";
  calc.calc.rhs = "t + t^(3/2)";
  RunResult r = run(calc);
  CHECK(r.exit_code == 0);
  CHECK(r.report.checks.at(0).values.at("result") == "t^2 + t^3");

  // Inversion must be told how far to go.
  RunConfig inv;
  inv.witness = RunConfig::Witness::kSeriesCalc;
  inv.calc.p = 2;
  inv.calc.op = "invert";
  inv.calc.lhs = "1 + t";
  CHECK(run(inv).exit_code == 2);

  inv.calc.precision = BigRat(4);
  RunResult r2 = run(inv);
  CHECK(r2.exit_code == 0);
  CHECK(r2.report.checks.at(0).values.at("result") == "1 + t + t^2 + t^3 + O(t^4)");

  RunConfig frob;
  frob.witness = RunConfig::Witness::kSeriesCalc;
  frob.calc.p = 2;
  frob.calc.op = "frobenius-power";
  frob.calc.power = 2;
  frob.calc.lhs = "t + t^(3/2)";
  RunResult r3 = run(frob);
  CHECK(r3.exit_code == 0);
  CHECK(r3.report.checks.at(0).values.at("result") == "t^4 + t^6");

  RunConfig unknown_op;
  unknown_op.witness = RunConfig::Witness::kSeriesCalc;
  unknown_op.calc.op = "exp";
  unknown_op.calc.lhs = "t";
  CHECK(run(unknown_op).exit_code == 2);
}

TEST_CASE("chain classification through the dispatcher") {
  auto f2 = FieldDescriptor::gf(2, 1);
  DiscChain chain;
  chain.discs = {Disc{parse_series("t", f2), LogNorm(ExtRational(BigRat(1)))},
                 Disc{parse_series("t", f2), LogNorm(ExtRational(BigRat(2)))}};
  chain.declared = LimitDeclaration{ExtRational::infinity(), true,
                                    AlgebraicIntersection::kNonempty};
  RunConfig classify_cfg;
  classify_cfg.witness = RunConfig::Witness::kClassify;
  classify_cfg.chain_json = chain_to_json(chain);
  RunResult r = run(classify_cfg);
  CHECK(r.exit_code == 0);
  bool type_found = false;
  for (const auto& c : r.report.checks) {
    if (c.name == "classify.type") {
      type_found = true;
      CHECK(c.values.at("type") == "1");
    }
  }
  CHECK(type_found);

  // Verifying the classification report closes the loop.
  CHECK(verify_report(r.report).passed());

  classify_cfg.chain_json = "{ not json";
  CHECK(run(classify_cfg).exit_code == 2);
}

TEST_CASE("the verifier is reachable through the dispatcher") {
  TheoremConfig cfg;
  cfg.p = 2;
  cfg.n = 3;
  Report r = run_theorem(cfg);
  RunConfig vcfg;
  vcfg.witness = RunConfig::Witness::kVerify;
  vcfg.report_json = report_to_json(r);
  RunResult v = run(vcfg);
  CHECK(v.exit_code == 0);
  CHECK(v.report.witness == "verify");

  vcfg.report_json = "broken";
  CHECK(run(vcfg).exit_code == 2);
}

}  // TEST_SUITE
