#include "nonarch/report.hpp"

#include <stdexcept>

#include <json.hpp>

#include "nonarch/version.hpp"

namespace nonarch {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kAssumed: return "assumed";
  }
  throw std::logic_error("unreachable check status");
}

namespace {

CheckStatus status_from_string(const std::string& s) {
  if (s == "pass") return CheckStatus::kPass;
  if (s == "fail") return CheckStatus::kFail;
  if (s == "assumed") return CheckStatus::kAssumed;
  throw std::invalid_argument("unknown check status '" + s + "'");
}

}  // namespace

void Report::add(std::string name, std::string anchor, bool pass,
                 std::map<std::string, std::string> values, std::string detail) {
  checks.push_back(Check{std::move(name), std::move(anchor),
                         pass ? CheckStatus::kPass : CheckStatus::kFail, std::move(values),
                         std::move(detail)});
}

void Report::add_assumed(std::string name, std::string anchor,
                         std::map<std::string, std::string> values, std::string detail) {
  checks.push_back(Check{std::move(name), std::move(anchor), CheckStatus::kAssumed,
                         std::move(values), std::move(detail)});
}

bool Report::passed() const { return failed_count() == 0; }

std::size_t Report::failed_count() const {
  std::size_t n = 0;
  for (const auto& c : checks) {
    if (c.status == CheckStatus::kFail) ++n;
  }
  return n;
}

std::string report_to_json(const Report& report) {
  nlohmann::json j;
  j["schema_version"] = kReportSchemaVersion;
  j["tool"] = kToolName;
  j["tool_version"] = kVersion;
  j["witness"] = report.witness;
  j["config"] = report.config;
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks) {
    nlohmann::json jc;
    jc["name"] = c.name;
    jc["anchor"] = c.anchor;
    jc["status"] = to_string(c.status);
    jc["values"] = c.values;
    jc["detail"] = c.detail;
    checks.push_back(std::move(jc));
  }
  j["checks"] = std::move(checks);
  j["verdict"] = report.passed() ? "pass" : "fail";
  return j.dump(2) + "\n";
}

std::string report_to_text(const Report& report) {
  std::string out;
  out += report.witness + " report (" + kToolName + " " + kVersion + ")\n";
  for (const auto& [key, value] : report.config) {
    out += "  config " + key + " = " + value + "\n";
  }
  for (const auto& c : report.checks) {
    out += "[" + to_string(c.status) + "] " + c.name;
    if (!c.detail.empty()) out += ": " + c.detail;
    if (!c.values.empty()) {
      out += " {";
      bool first = true;
      for (const auto& [key, value] : c.values) {
        if (!first) out += ", ";
        first = false;
        out += key + "=" + value;
      }
      out += "}";
    }
    out += "\n";
  }
  out += "verdict: " + std::string(report.passed() ? "pass" : "fail") + " (" +
         std::to_string(report.checks.size()) + " checks, " +
         std::to_string(report.failed_count()) + " failed)\n";
  return out;
}

Report report_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("report is not valid JSON: ") + e.what());
  }
  try {
    if (!j.is_object()) throw std::invalid_argument("report must be a JSON object");
    const int version = j.at("schema_version").get<int>();
    if (version != kReportSchemaVersion) {
      throw std::invalid_argument("unsupported report schema version " +
                                  std::to_string(version));
    }
    Report out;
    out.witness = j.at("witness").get<std::string>();
    if (j.contains("config")) {
      out.config = j.at("config").get<std::map<std::string, std::string>>();
    }
    for (const auto& jc : j.at("checks")) {
      Check c;
      c.name = jc.at("name").get<std::string>();
      c.anchor = jc.at("anchor").get<std::string>();
      c.status = status_from_string(jc.at("status").get<std::string>());
      if (jc.contains("values")) {
        c.values = jc.at("values").get<std::map<std::string, std::string>>();
      }
      if (jc.contains("detail")) c.detail = jc.at("detail").get<std::string>();
      out.checks.push_back(std::move(c));
    }
    if (j.contains("verdict")) {
      const std::string claimed = j.at("verdict").get<std::string>();
      const std::string actual = out.passed() ? "pass" : "fail";
      if (claimed != actual) {
        throw std::invalid_argument("report verdict '" + claimed +
                                    "' contradicts its checks ('" + actual +
                                    "')");
      }
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("report JSON has the wrong shape: ") + e.what());
  }
}

}  // namespace nonarch
