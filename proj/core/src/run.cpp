#include <nonarch/run.hpp>

#include <nonarch/field.hpp>
#include <nonarch/hahn.hpp>
#include <nonarch/serialize.hpp>
#include <nonarch/series_text.hpp>

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nonarch {

namespace {

std::string witness_name(RunConfig::Witness w) {
  switch (w) {
    case RunConfig::Witness::kTheorem: return "theorem";
    case RunConfig::Witness::kGauss: return "gauss";
    case RunConfig::Witness::kSpherical: return "spherical";
    case RunConfig::Witness::kClassify: return "classify";
    case RunConfig::Witness::kSeriesCalc: return "series-calc";
    case RunConfig::Witness::kVerify: return "verify";
  }
  return "unknown";
}

std::string join_ext(const std::vector<ExtRational>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].str();
  }
  return out;
}

FieldPtr calc_field(const SeriesCalcConfig& config) {
  if (config.p == 0) return FieldDescriptor::rationals();
  if (!is_prime(config.p))
    throw std::invalid_argument("field characteristic must be prime or 0");
  return FieldDescriptor::gf(config.p, config.ext_degree);
}

}  // namespace

Report run_classify(const DiscChain& chain) {
  Report report;
  report.witness = "classify";
  report.config["discs"] = std::to_string(chain.discs.size());
  if (chain.declared.has_value()) {
    report.config["declared_limit_val"] = chain.declared->limit_val.str();
    report.config["declared_centers_stabilize"] =
        chain.declared->centers_stabilize ? "true" : "false";
  }

  std::vector<ExtRational> radius_vals, distance_vals;
  for (const auto& d : chain.discs) radius_vals.push_back(d.radius.val());
  for (std::size_t i = 0; i + 1 < chain.discs.size(); ++i)
    distance_vals.push_back(
        distance(chain.discs[i + 1].center, chain.discs[i].center).val());

  const NestedCheck nested = check_nested(chain);
  report.add("classify.nested", "classify.nested", nested.nested,
             {{"radius_vals", join_ext(radius_vals)},
              {"distance_vals", join_ext(distance_vals)}},
             nested.nested ? "each disc contains the next" : nested.detail);
  report.add("classify.strict-decrease", "classify.nested",
             nested.strictly_decreasing,
             {{"radius_vals", join_ext(radius_vals)}},
             nested.strictly_decreasing ? "radii strictly decrease"
                                        : nested.detail);
  if (!nested.pass()) return report;

  if (chain.declared.has_value() &&
      chain.declared->intersection != AlgebraicIntersection::kUnknown) {
    const bool empty =
        chain.declared->intersection == AlgebraicIntersection::kEmpty;
    report.add_assumed("classify.declared-intersection",
                       "classify.declared-intersection",
                       {{"intersection", empty ? "empty" : "nonempty"}},
                       "declared by the caller, not computed");
  }

  const ClassifyResult cls = classify(chain);
  std::map<std::string, std::string> values{
      {"type", cls.type.has_value()
                   ? std::to_string(static_cast<int>(*cls.type))
                   : "indeterminate"},
      {"radius_vals", join_ext(radius_vals)}};
  if (chain.declared.has_value()) {
    values["limit_val"] = chain.declared->limit_val.str();
    values["centers_stabilize"] =
        chain.declared->centers_stabilize ? "true" : "false";
  }
  report.add("classify.type", "classify.type", cls.type.has_value(),
             std::move(values), cls.reason);

  if (cls.type.has_value()) {
    const EFInvariants ef = ef_invariants(*cls.type);
    report.add("classify.ef", "classify.ef", abhyankar_ok(*cls.type),
               {{"type", std::to_string(static_cast<int>(*cls.type))},
                {"e", std::to_string(ef.e)},
                {"f", std::to_string(ef.f)}},
               "residue-extension invariants of the decided type");
  }
  return report;
}

Report run_series_calc(const SeriesCalcConfig& config) {
  const FieldPtr field = calc_field(config);
  const bool binary = config.op == "add" || config.op == "sub" ||
                      config.op == "mul" || config.op == "distance";
  if (config.lhs.empty()) throw std::invalid_argument("missing lhs series");
  if (binary && config.rhs.empty())
    throw std::invalid_argument("operation '" + config.op +
                                "' needs an rhs series");

  const HahnSeries lhs = parse_series(config.lhs, field);
  Report report;
  report.witness = "series-calc";
  report.config["field"] = field->name();
  report.config["op"] = config.op;
  report.config["lhs"] = lhs.str();

  std::map<std::string, std::string> values{{"lhs", lhs.str()}};
  std::string result_str;

  const auto record_series = [&](const HahnSeries& result) {
    values["result"] = result.str();
    // Re-dump compact: a values entry should stay on one line.
    values["result_json"] = nlohmann::json::parse(series_to_json(result)).dump();
    result_str = result.str();
  };

  if (binary) {
    const HahnSeries rhs = parse_series(config.rhs, field);
    report.config["rhs"] = rhs.str();
    values["rhs"] = rhs.str();
    if (config.op == "add") record_series(lhs + rhs);
    else if (config.op == "sub") record_series(lhs - rhs);
    else if (config.op == "mul") record_series(lhs * rhs);
    else {
      const LogNorm d = distance(lhs, rhs);
      values["result"] = d.str();
      values["val"] = d.val().str();
      result_str = d.str();
    }
  } else if (config.op == "valuation") {
    const ExtRational v = lhs.valuation();
    values["result"] = v.str();
    result_str = v.str();
  } else if (config.op == "invert") {
    if (!config.precision.has_value())
      throw std::invalid_argument(
          "invert needs an explicit --precision (the reciprocal of a "
          "non-monomial has infinitely many terms)");
    report.config["precision"] = config.precision->str();
    record_series(lhs.invert(*config.precision));
  } else if (config.op == "derivative") {
    record_series(lhs.derivative());
  } else if (config.op == "frobenius") {
    record_series(lhs.frobenius());
  } else if (config.op == "frobenius-inverse") {
    record_series(lhs.frobenius_inverse());
  } else if (config.op == "frobenius-power") {
    report.config["power"] = std::to_string(config.power);
    record_series(lhs.frobenius_power(config.power));
  } else {
    throw std::invalid_argument("unknown operation '" + config.op + "'");
  }

  report.add("calc." + config.op, "calc", true, std::move(values),
             "computed exactly; tail bounds propagated");
  return report;
}

RunResult run(const RunConfig& config) {
  RunResult result;
  try {
    switch (config.witness) {
      case RunConfig::Witness::kTheorem:
        result.report = run_theorem(config.theorem);
        break;
      case RunConfig::Witness::kGauss:
        result.report = run_gauss(config.gauss);
        break;
      case RunConfig::Witness::kSpherical:
        result.report = run_spherical(config.spherical);
        break;
      case RunConfig::Witness::kClassify:
        result.report = run_classify(chain_from_json(config.chain_json));
        break;
      case RunConfig::Witness::kSeriesCalc:
        result.report = run_series_calc(config.calc);
        break;
      case RunConfig::Witness::kVerify:
        result.report = verify_report(report_from_json(config.report_json));
        break;
    }
  } catch (const std::exception& e) {
    result.report = Report{};
    result.report.witness = witness_name(config.witness);
    result.report.add("config.valid", "config.valid", false, {}, e.what());
    result.exit_code = 2;
    return result;
  }
  result.exit_code = result.report.passed() ? 0 : 1;
  return result;
}

}  // namespace nonarch
