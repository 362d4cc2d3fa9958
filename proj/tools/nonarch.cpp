// Command-line entry point: runs one witness and emits its report.
//
// Subcommands: theorem, gauss, spherical, classify, series-calc, verify.
// Reports go to stdout; --output writes them to a file as well (relative
// paths resolve under $NONARCH_REPORT_DIR when that is set, as does the
// default <witness>.json when only the env var is given).
//
// Exit codes: 0 all non-assumed checks pass, 1 a check failed, 2 unusable
// configuration or input.

#include <nonarch/run.hpp>
#include <nonarch/series_text.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<nonarch::BigInt> parse_int_list(const std::string& text) {
  std::vector<nonarch::BigInt> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (!part.empty()) out.emplace_back(part);
  }
  return out;
}

std::vector<nonarch::BigRat> parse_rat_list(const std::string& text) {
  std::vector<nonarch::BigRat> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (!part.empty()) out.push_back(nonarch::parse_rational(part));
  }
  return out;
}

// Resolve where the report file should go: an explicit --output wins
// (relative forms joined under $NONARCH_REPORT_DIR when set); otherwise the
// env var alone selects <dir>/<witness>.<ext>; otherwise no file is written.
std::optional<std::filesystem::path> report_path(const std::string& output,
                                                 const std::string& witness,
                                                 const std::string& format) {
  const char* dir = std::getenv("NONARCH_REPORT_DIR");
  if (!output.empty()) {
    std::filesystem::path p(output);
    if (p.is_relative() && dir) return std::filesystem::path(dir) / p;
    return p;
  }
  if (dir) {
    const std::string ext = format == "text" ? ".txt" : ".json";
    return std::filesystem::path(dir) / (witness + ext);
  }
  return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace nonarch;

  CLI::App app{"Exact-arithmetic witnesses over valued series fields"};
  app.require_subcommand(1);
  // Let shared options (--format, --output) appear after the subcommand.
  app.fallthrough();

  std::string output;
  std::string format = "json";
  app.add_option("-o,--output", output,
                 "also write the report to this file (relative paths land "
                 "under $NONARCH_REPORT_DIR when set)");
  app.add_option("--format", format, "report format: json or text")
      ->check(CLI::IsMember({"json", "text"}));

  RunConfig rc;

  auto* theorem = app.add_subcommand(
      "theorem", "d-sequence, approximant radii, Frobenius gaps, power "
                 "decomposition, differential bounds, disc chain");
  std::string theorem_mode = "ones";
  std::string theorem_d;
  theorem->add_option("--p", rc.theorem.p, "prime characteristic")
      ->capture_default_str();
  theorem->add_option("--n", rc.theorem.n, "deepest approximant index N")
      ->capture_default_str();
  theorem->add_option("--mode", theorem_mode,
                      "coefficient choice: ones or generator-powers")
      ->check(CLI::IsMember({"ones", "generator-powers"}))
      ->capture_default_str();
  theorem->add_option("--ext-degree", rc.theorem.ext_degree,
                      "field extension degree for generator-powers mode")
      ->capture_default_str();
  theorem->add_option("--d", theorem_d,
                      "comma-separated user d_1..d_N replacing the formula");

  auto* gauss = app.add_subcommand(
      "gauss", "polynomial substitution endomorphism: telescoping identity, "
               "norm preservation, distance-from-image certificates");
  std::string gauss_exponents;
  std::string gauss_bound;
  gauss->add_option("--levels", rc.gauss.identity_levels,
                    "telescoping identity depth")
      ->capture_default_str();
  gauss->add_flag("--rational-ground", rc.gauss.rational_ground,
                  "coefficients over the rationals instead of GF(p)");
  gauss->add_option("--p", rc.gauss.prime, "ground characteristic")
      ->capture_default_str();
  gauss->add_option("--ext-degree", rc.gauss.ext_degree,
                    "ground extension degree")
      ->capture_default_str();
  gauss->add_option("--norm-trials", rc.gauss.norm_trials,
                    "random norm-preservation trials")
      ->capture_default_str();
  gauss->add_option("--norm-max-level", rc.gauss.norm_max_level,
                    "max level of sampled polynomials")
      ->capture_default_str();
  gauss->add_option("--gap-trials", rc.gauss.gap_trials,
                    "random image-gap trials per level")
      ->capture_default_str();
  gauss->add_option("--gap-max-level", rc.gauss.gap_max_level,
                    "deepest image-gap level")
      ->capture_default_str();
  gauss->add_option("--seed", rc.gauss.seed, "sampler seed")
      ->capture_default_str();
  gauss->add_option("--exponents", gauss_exponents,
                    "comma-separated scaling exponents e_i (default dyadic "
                    "2^-i)");
  gauss->add_option("--bound", gauss_bound,
                    "declared bound on the exponent partial sums");

  auto* spherical = app.add_subcommand(
      "spherical", "greedy digit-matching preimages under a series "
                   "endomorphism t -> tau(t)");
  spherical->add_option("--p", rc.spherical.p, "characteristic")
      ->capture_default_str();
  spherical->add_option("--ext-degree", rc.spherical.ext_degree,
                        "field extension degree")
      ->capture_default_str();
  spherical->add_option("--tau", rc.spherical.tau_text,
                        "image of t, e.g. \"t + t^2\"")
      ->capture_default_str();
  spherical->add_option("--x", rc.spherical.x_text, "target series")
      ->capture_default_str();
  spherical->add_option("--steps", rc.spherical.steps, "greedy digits to take")
      ->capture_default_str();

  auto* classify = app.add_subcommand(
      "classify", "nested-disc chain classification from a JSON chain "
                  "document");
  std::string chain_file;
  classify->add_option("--chain", chain_file,
                       "chain document path ('-' for stdin)")
      ->required();

  auto* calc = app.add_subcommand("series-calc",
                                  "exact series arithmetic on expressions");
  std::string calc_precision;
  calc->add_option("--p", rc.calc.p,
                   "field characteristic (0 for the rationals)")
      ->capture_default_str();
  calc->add_option("--ext-degree", rc.calc.ext_degree,
                   "field extension degree")
      ->capture_default_str();
  calc->add_option("--op", rc.calc.op,
                   "add|sub|mul|distance|valuation|invert|derivative|"
                   "frobenius|frobenius-inverse|frobenius-power")
      ->required();
  calc->add_option("--lhs", rc.calc.lhs, "left series expression")->required();
  calc->add_option("--rhs", rc.calc.rhs, "right series expression");
  calc->add_option("--precision", calc_precision,
                   "truncation exponent for invert (exact rational)");
  calc->add_option("--power", rc.calc.power,
                   "exponent for frobenius-power (may be negative)")
      ->capture_default_str();

  auto* verify = app.add_subcommand(
      "verify", "re-validate the exact values recorded in an emitted report");
  std::string report_file;
  verify->add_option("--report", report_file,
                     "report document path ('-' for stdin)")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (theorem->parsed()) {
      rc.witness = RunConfig::Witness::kTheorem;
      rc.theorem.mode = theorem_mode == "ones" ? CoeffMode::kOnes
                                               : CoeffMode::kGeneratorPowers;
      if (!theorem_d.empty()) rc.theorem.user_d = parse_int_list(theorem_d);
    } else if (gauss->parsed()) {
      rc.witness = RunConfig::Witness::kGauss;
      if (!gauss_exponents.empty())
        rc.gauss.exponents = parse_rat_list(gauss_exponents);
      if (!gauss_bound.empty())
        rc.gauss.declared_bound = parse_rational(gauss_bound);
    } else if (spherical->parsed()) {
      rc.witness = RunConfig::Witness::kSpherical;
    } else if (classify->parsed()) {
      rc.witness = RunConfig::Witness::kClassify;
      rc.chain_json = read_file(chain_file);
    } else if (calc->parsed()) {
      rc.witness = RunConfig::Witness::kSeriesCalc;
      if (!calc_precision.empty())
        rc.calc.precision = parse_rational(calc_precision);
    } else if (verify->parsed()) {
      rc.witness = RunConfig::Witness::kVerify;
      rc.report_json = read_file(report_file);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  const RunResult result = run(rc);
  const std::string rendered = format == "text"
                                   ? report_to_text(result.report)
                                   : report_to_json(result.report);
  std::cout << rendered;

  if (const auto path =
          report_path(output, result.report.witness, format)) {
    std::error_code ec;
    if (path->has_parent_path())
      std::filesystem::create_directories(path->parent_path(), ec);
    std::ofstream out(*path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write report to '" << path->string()
                << "'\n";
      return 2;
    }
    out << rendered;
  }

  return result.exit_code;
}
