#pragma once

// Witness dispatch: one entry point that validates a configuration, runs
// the selected witness, and settles the process exit code.
//
// Exit codes: 0 when every non-assumed check passes, 1 when any check
// fails, 2 when the configuration or input is unusable (malformed
// expressions, non-prime characteristic, missing precision, contradictory
// declarations).  On a code-2 error the returned report carries a single
// failing "config.valid" check holding the error text.

#include <nonarch/berkovich.hpp>
#include <nonarch/exact.hpp>
#include <nonarch/report.hpp>
#include <nonarch/witness_gauss.hpp>
#include <nonarch/witness_spherical.hpp>
#include <nonarch/witness_theorem.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace nonarch {

/// Exact series calculator over one field: binary arithmetic, inversion to
/// a caller-chosen precision, Frobenius powers, derivatives, distances.
struct SeriesCalcConfig {
  std::uint32_t p = 0;  // field characteristic; 0 means the rationals
  std::uint32_t ext_degree = 1;
  std::string op;   // add|sub|mul|distance|valuation|invert|derivative|
                    // frobenius|frobenius-inverse|frobenius-power
  std::string lhs;  // series expression, e.g. "t + t^(3/2) + O(t^4)"
  std::string rhs;  // required by add|sub|mul|distance
  std::optional<BigRat> precision;  // required by invert
  int power = 1;                    // frobenius-power exponent (may be < 0)
};

struct RunConfig {
  enum class Witness {
    kTheorem,
    kGauss,
    kSpherical,
    kClassify,
    kSeriesCalc,
    kVerify,
  };
  Witness witness = Witness::kTheorem;

  TheoremConfig theorem;
  GaussConfig gauss;
  SphericalConfig spherical;
  std::string chain_json;   // classify: the chain document
  SeriesCalcConfig calc;
  std::string report_json;  // verify: a previously emitted report document
};

struct RunResult {
  Report report;
  int exit_code = 0;
};

/// Classification witness over a caller-supplied chain: nesting, strict
/// radius decrease, type decision against the declaration, and the (E,F)
/// invariants of the decided type.
Report run_classify(const DiscChain& chain);

Report run_series_calc(const SeriesCalcConfig& config);

RunResult run(const RunConfig& config);

}  // namespace nonarch
