#include <nonarch/witness_gauss.hpp>

#include <nonarch/field.hpp>
#include <nonarch/gausspoly.hpp>
#include <nonarch/hahn.hpp>
#include <nonarch/sampling.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace nonarch {

namespace {

std::string join_rats(const std::vector<BigRat>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].str();
  }
  return out;
}

}  // namespace

Report run_gauss(const GaussConfig& config) {
  if (config.identity_levels < 1)
    throw std::invalid_argument("identity_levels must be at least 1");
  if (config.norm_max_level < 1 || config.gap_max_level < 1)
    throw std::invalid_argument("trial levels must be at least 1");

  FieldPtr ground;
  if (config.rational_ground) {
    ground = FieldDescriptor::rationals();
  } else {
    if (!is_prime(config.prime))
      throw std::invalid_argument("ground characteristic must be prime");
    if (config.ext_degree < 1)
      throw std::invalid_argument("ext_degree must be at least 1");
    ground = FieldDescriptor::gf(config.prime, config.ext_degree);
  }

  // Enough scaling exponents for the deepest identity level (which touches
  // x_{n+1}) and for substituting into polynomials of the highest sampled
  // level (which touches x_{level}; images then reach level + 1).
  const std::size_t need =
      std::max<std::size_t>({config.identity_levels + 1,
                             config.norm_max_level + 1,
                             config.gap_max_level + 1});
  ScalingSequence xs =
      config.exponents.empty()
          ? ScalingSequence::dyadic(ground, need)
          : ScalingSequence(ground, config.exponents,
                            config.declared_bound.value_or(
                                [&] {
                                  BigRat s(0);
                                  for (const auto& e : config.exponents)
                                    s += e;
                                  return s;
                                }()));
  if (xs.size() < need)
    throw std::invalid_argument(
        "need at least " + std::to_string(need) + " scaling exponents, got " +
        std::to_string(xs.size()));

  Report report;
  report.witness = "gauss";
  report.config["ground"] = ground->name();
  report.config["identity_levels"] = std::to_string(config.identity_levels);
  report.config["norm_trials"] = std::to_string(config.norm_trials);
  report.config["norm_max_level"] = std::to_string(config.norm_max_level);
  report.config["gap_trials"] = std::to_string(config.gap_trials);
  report.config["gap_max_level"] = std::to_string(config.gap_max_level);
  report.config["seed"] = std::to_string(config.seed);
  report.config["exponents"] =
      config.exponents.empty() ? "dyadic 2^-i" : join_rats(config.exponents);
  report.config["declared_bound"] = xs.declared_bound().str();

  // Exact telescoping identity, one check per level.
  for (std::uint32_t n = 1; n <= config.identity_levels; ++n) {
    const TauIdentityResult r = tau_identity_check(n, xs);
    report.add("tau.telescope[n=" + std::to_string(n) + "]", "tau.telescope",
               r.holds && r.gap_matches,
               {{"lhs", r.lhs.str()},
                {"rhs", r.rhs.str()},
                {"gap_val", r.gap_val.str()},
                {"expected_gap_val", r.expected_gap_val.str()}},
               "substituting into the staircase sum must telescope exactly, "
               "moving mass of norm val e_1+...+e_{n+1}");
  }

  // The scaling data itself: products |x_1...x_n| strictly shrink, stay
  // above the declared bound's norm, and everything clears the lambda
  // threshold.
  {
    bool ok = true;
    std::string note = "partial sums strictly increase and stay at or below "
                       "the declared bound; the threshold sits strictly above";
    for (std::size_t n = 1; n <= xs.size(); ++n) {
      if (n > 1 && !(xs.partial_sum(n) > xs.partial_sum(n - 1))) ok = false;
      if (xs.partial_sum(n) > xs.declared_bound()) ok = false;
    }
    if (!(xs.lambda_threshold() > xs.declared_bound())) ok = false;
    report.add("scaling.threshold", "scaling.threshold", ok,
               {{"bound", xs.declared_bound().str()},
                {"lambda_threshold", xs.lambda_threshold().str()},
                {"deepest_partial_sum", xs.partial_sum(xs.size()).str()}},
               note);
  }

  Sampler sampler(config.seed);

  // Substitution preserves the Gauss norm on random polynomials.
  {
    std::size_t failures = 0;
    std::string first;
    for (std::size_t trial = 0; trial < config.norm_trials; ++trial) {
      const MultiPoly P = sampler.poly(ground, config.norm_max_level, 5, 3,
                                       /*den_base=*/2, /*den_pow_max=*/3);
      const LogNorm before = gauss_norm(P);
      const LogNorm after = gauss_norm(apply_tau(P, xs));
      if (!(before == after)) {
        ++failures;
        if (first.empty())
          first = "trial " + std::to_string(trial) + ": " + P.str() +
                  " norm " + before.str() + " -> " + after.str();
      }
    }
    std::map<std::string, std::string> values = {
        {"trials", std::to_string(config.norm_trials)},
        {"failures", std::to_string(failures)},
        {"max_level", std::to_string(config.norm_max_level)}};
    if (!first.empty()) values["first_failure"] = first;
    report.add("tau.norm-preservation", "tau.norm-preservation",
               failures == 0, values,
               "the substitution is unipotent-triangular with |x_n| < 1, so "
               "it cannot move the Gauss norm");
  }

  // Substitution is a ring homomorphism on random pairs.
  {
    std::size_t failures = 0;
    const std::size_t trials = 40;
    for (std::size_t trial = 0; trial < trials; ++trial) {
      const MultiPoly P = sampler.poly(ground, config.norm_max_level, 4, 2,
                                       2, 3);
      const MultiPoly Q = sampler.poly(ground, config.norm_max_level, 4, 2,
                                       2, 3);
      if (!(apply_tau(P + Q, xs) == apply_tau(P, xs) + apply_tau(Q, xs)))
        ++failures;
      if (!(apply_tau(P * Q, xs) == apply_tau(P, xs) * apply_tau(Q, xs)))
        ++failures;
    }
    report.add("tau.ring-hom", "tau.ring-hom", failures == 0,
               {{"trials", std::to_string(trials)},
                {"failures", std::to_string(failures)}},
               "additivity and multiplicativity of the substitution");
  }

  // Named distance-from-image certificates.
  {
    const ImageGapResult r =
        image_gap_certificate(MultiPoly::zero(ground), 1, xs);
    report.add("image.gap-zero", "image.gap", r.holds && r.monomial_untouched,
               {{"achieved_val", r.achieved_val.str()},
                {"bound_val", r.bound_val.str()}},
               "y' = 0, n = 1: the staircase sum itself clears the bound");
  }
  {
    const ImageGapResult r =
        image_gap_certificate(MultiPoly::variable(ground, 1), 2, xs);
    const bool val_matches = r.achieved_val == ExtRational(xs.partial_sum(1));
    report.add("image.gap-t1", "image.gap",
               r.holds && r.monomial_untouched && val_matches,
               {{"achieved_val", r.achieved_val.str()},
                {"expected_val", xs.partial_sum(1).str()},
                {"bound_val", r.bound_val.str()}},
               "y' = t_1, n = 2: the difference starts at the x_1 t_2 term");
  }

  // Randomized certificates, one aggregated check per level.
  for (std::uint32_t n = 1; n <= config.gap_max_level; ++n) {
    std::size_t failures = 0;
    std::string first;
    for (std::size_t trial = 0; trial < config.gap_trials; ++trial) {
      const MultiPoly yprime = sampler.poly(ground, n, 4, 2, 2, 3);
      const ImageGapResult r = image_gap_certificate(yprime, n, xs);
      if (!(r.holds && r.monomial_untouched)) {
        ++failures;
        if (first.empty())
          first = "trial " + std::to_string(trial) + ": y' = " + yprime.str();
      }
    }
    std::map<std::string, std::string> values = {
        {"trials", std::to_string(config.gap_trials)},
        {"failures", std::to_string(failures)},
        {"bound_val", xs.partial_sum(n).str()}};
    if (!first.empty()) values["first_failure"] = first;
    report.add("image.gap[n=" + std::to_string(n) + "]", "image.gap",
               failures == 0, values,
               "no level-" + std::to_string(n) +
                   " polynomial comes closer to the staircase sum than "
                   "|x_1...x_n|");
  }

  return report;
}

}  // namespace nonarch
