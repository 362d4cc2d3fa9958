#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nonarch/exact.hpp"
#include "nonarch/hahn.hpp"
#include "nonarch/report.hpp"

namespace nonarch {

/**
 * A continuous k-linear ring endomorphism of k((t)) determined by where t
 * goes: f = sum a_i t^i maps to sum a_i tau(t)^i. Only tau(t) with integer
 * exponents is accepted (the domain is the Laurent field, not its
 * fractional-exponent extensions); whether tau(t) actually matches the value
 * group (val 1) and residue normalization (leading coefficient 1) is the
 * business of compat_check, so ill-formed endomorphisms can be reported
 * rather than rejected at the door.
 */
class SeriesEndomorphism {
 public:
  explicit SeriesEndomorphism(HahnSeries tau_t);

  const HahnSeries& tau_t() const { return tau_t_; }
  const FieldPtr& field() const { return tau_t_.field(); }

 private:
  HahnSeries tau_t_;
};

struct CompatCheck {
  bool value_group_ok;    // val(tau(t)) = 1
  bool residue_identity;  // leading coefficient 1
  ExtRational observed_val;
  std::string leading_coeff;  // "" when tau(t) has no visible terms
  bool pass() const { return value_group_ok && residue_identity; }
};
CompatCheck compat_check(const SeriesEndomorphism& se);

/**
 * Evaluate the endomorphism on a Laurent series to O(t^precision). Constants
 * pass through exactly (k-linearity); everything else is truncated to the
 * requested precision. Inputs must be determinate that far (precision_error
 * otherwise) and must have integer exponents.
 */
HahnSeries se_apply(const SeriesEndomorphism& se, const HahnSeries& f, const BigInt& precision);

struct GreedyStep {
  std::size_t step;          // 1-based
  BigInt digit_exponent;     // j in digit b t^j
  std::string digit_coeff;   // b, rendered
  ExtRational residual_val;  // val(x - tau(y)) after taking the digit
};

struct GreedyResult {
  HahnSeries y;         // the accumulated preimage polynomial
  HahnSeries residual;  // x - tau(y), to working precision
  std::vector<GreedyStep> trace;
  bool stalled;
  std::string stall_reason;
  bool exact_hit;  // residual became exactly zero before using all steps
};

/**
 * Successive digit-matching: at each step read the residual's lowest term
 * c t^i and take the unique digit b t^j with tau(b t^j) = c t^i + higher
 * (j = i when val(tau(t)) = 1, b = c / lc^j). Residual valuations strictly
 * increase, one unit or more per step, so after `steps` steps
 * val(x - tau(y)) >= val(x) + steps. Stalls — possible only when
 * compat_check fails or the input's own precision runs out — are reported in
 * the result, with the valuation nothing could reach.
 */
GreedyResult greedy_preimage(const SeriesEndomorphism& se, const HahnSeries& x,
                             std::size_t steps);

struct SphericalConfig {
  std::uint32_t p = 2;
  std::uint32_t ext_degree = 1;
  std::string tau_text = "t + t^2";
  std::string x_text = "t";
  std::size_t steps = 5;
};

/// Parse tau(t) and x over GF(p^ext_degree), run the compat check and the
/// greedy loop, and report every step with its exact residual valuation.
Report run_spherical(const SphericalConfig& config);

}  // namespace nonarch
