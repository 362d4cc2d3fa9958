#include "nonarch/witness_spherical.hpp"

#include <stdexcept>
#include <utility>

#include "nonarch/field.hpp"
#include "nonarch/series_text.hpp"

namespace nonarch {

namespace {

bool integral_exponents(const HahnSeries& f) {
  for (const auto& term : f.terms()) {
    if (boost::multiprecision::denominator(term.exponent) != 1) return false;
  }
  return true;
}

bool is_constant(const HahnSeries& f) {
  return f.is_exact() &&
         (f.terms().empty() || (f.terms().size() == 1 && f.terms()[0].exponent == 0));
}

// tau(t)^j to O(t^cap) (exact when j >= 0 — products of exact series stay
// exact; the cap only trims what the caller will never look at).
//
// Greedy digit exponents grow multiplicatively, so j can reach p^steps; the
// exponentiation must cost O(log j) multiplications, never O(j).
HahnSeries tau_power(const HahnSeries& tau_t, const BigInt& j, const BigRat& cap) {
  const ExtRational cap_ext{cap};
  const FieldPtr& field = tau_t.field();
  if (j == 0) return HahnSeries::one(field);
  if (j < 0) {
    // Negative exponents only arise from negative-valuation residual terms,
    // which the strictly increasing valuation trace exhausts after a few
    // steps, so |j| stays small and the plain ladder is fine.  The inverse
    // needs enough tail that |j| multiplications stay determinate past the
    // cap.
    const HahnSeries base = tau_t.invert(cap + BigRat(-j) + 4);
    HahnSeries acc = base;
    for (BigInt i = 1; i < -j; ++i) {
      acc = acc * base;
      if (!acc.is_exact()) acc = acc.truncated(cap_ext);
    }
    return acc;
  }
  const std::uint32_t p = field->characteristic();
  if (p == 0) {
    // Binary squaring; characteristic 0 keeps no-vanishing binomials, so the
    // exponents the greedy loop asks for stay modest anyway.
    HahnSeries acc = HahnSeries::one(field);
    HahnSeries base = tau_t;
    BigInt k = j;
    while (k > 0) {
      if (k % 2 == 1) {
        acc = acc * base;
        if (!acc.is_exact()) acc = acc.truncated(cap_ext);
      }
      k /= 2;
      if (k > 0) {
        base = base * base;
        if (!base.is_exact()) base = base.truncated(cap_ext);
      }
    }
    return acc;
  }
  // Characteristic p: with j = sum d_i p^i (0 <= d_i < p),
  //   tau^j = prod_i Frobenius^i(tau^{d_i}),
  // and each Frobenius application is term-wise, so it adds no terms and no
  // multiplications — only the per-digit factors cost anything.
  HahnSeries acc = HahnSeries::one(field);
  BigInt k = j;
  int level = 0;
  while (k > 0) {
    const BigInt rem = k % p;
    k /= p;
    const std::uint32_t d = static_cast<std::uint32_t>(rem);
    if (d != 0) {
      HahnSeries factor = tau_t;
      for (std::uint32_t s = 1; s < d; ++s) factor = factor * tau_t;
      acc = acc * factor.frobenius_power(level);
      if (!acc.is_exact()) acc = acc.truncated(cap_ext);
    }
    ++level;
  }
  return acc;
}

}  // namespace

SeriesEndomorphism::SeriesEndomorphism(HahnSeries tau_t) : tau_t_(std::move(tau_t)) {
  if (!integral_exponents(tau_t_))
    throw std::invalid_argument("tau(t) must be a Laurent series (integer exponents)");
}

CompatCheck compat_check(const SeriesEndomorphism& se) {
  const HahnSeries& tau_t = se.tau_t();
  CompatCheck out{false, false, ExtRational::infinity(), ""};
  if (!tau_t.has_visible_terms()) {
    if (!tau_t.is_exact()) out.observed_val = tau_t.tail();  // only a lower bound
    return out;  // zero or indeterminate image: fails both ways
  }
  out.observed_val = ExtRational(tau_t.leading().exponent);
  out.value_group_ok = out.observed_val == ExtRational(1L);
  out.leading_coeff = tau_t.leading().coeff.str();
  out.residue_identity = tau_t.leading().coeff.is_one();
  return out;
}

HahnSeries se_apply(const SeriesEndomorphism& se, const HahnSeries& f,
                    const BigInt& precision) {
  if (!integral_exponents(f))
    throw std::invalid_argument("endomorphism applies to Laurent series only");
  if (is_constant(f)) return f;  // k-linearity: constants pass through exactly
  const BigRat cap{precision};
  const ExtRational cap_ext{cap};
  if (f.tail() < cap_ext)
    throw precision_error("input known only to O(t^" + f.tail().str() +
                          "), below the requested precision " + cap.str());
  const FieldPtr& field = f.field();
  HahnSeries acc = HahnSeries::zero(field);
  for (const auto& term : f.terms()) {
    const BigInt j = boost::multiprecision::numerator(term.exponent);
    acc = acc + tau_power(se.tau_t(), j, cap).scaled(term.coeff);
  }
  return acc.truncated(cap_ext);
}

GreedyResult greedy_preimage(const SeriesEndomorphism& se, const HahnSeries& x,
                             std::size_t steps) {
  const FieldPtr& field = x.field();
  if (!integral_exponents(x))
    throw std::invalid_argument("greedy preimage needs a Laurent series target");
  if (!field->same(*se.field()))
    throw std::invalid_argument("target and endomorphism over different fields");

  const HahnSeries& tau_t = se.tau_t();
  // Image valuation scale: digits b t^j land at val j * v.
  BigInt v = 0;
  FieldElement lc = FieldElement::one(field);
  if (tau_t.has_visible_terms() && integral_exponents(tau_t)) {
    v = boost::multiprecision::numerator(tau_t.leading().exponent);
    lc = tau_t.leading().coeff;
  }

  // Base working precision; grows on retry if an internally introduced
  // truncation (negative digits only) hides a residual before the steps run
  // out. Exact runs never retry.
  BigRat base_cap(steps + 8);
  if (x.has_visible_terms() && x.leading().exponent > 0) {
    base_cap += x.leading().exponent;
  }

  for (int attempt = 0; attempt < 12; ++attempt) {
    GreedyResult out{HahnSeries::zero(field), x, {}, false, "", false};
    const BigRat cap = base_cap;
    bool used_truncation = false;
    bool retry = false;
    for (std::size_t step = 1; step <= steps; ++step) {
      if (out.residual.is_exact_zero()) {
        out.exact_hit = true;
        break;
      }
      if (!out.residual.has_visible_terms()) {
        if (used_truncation) {
          retry = true;  // our own cap hid the next term; rerun with more room
          break;
        }
        out.stalled = true;
        out.stall_reason = "residual known only to O(t^" + out.residual.tail().str() +
                           "); the input's precision is exhausted";
        break;
      }
      const BigRat i_exp = out.residual.leading().exponent;
      const FieldElement c = out.residual.leading().coeff;
      if (v <= 0) {
        out.stalled = true;
        out.stall_reason = "tau(t) has valuation " +
                           (tau_t.has_visible_terms() ? tau_t.leading().exponent.str()
                                                      : std::string("inf")) +
                           "; no digit reaches valuation " + i_exp.str();
        break;
      }
      const BigInt i = boost::multiprecision::numerator(i_exp);
      if (i % v != 0) {
        out.stalled = true;
        out.stall_reason = "value group mismatch: no digit image has valuation " +
                           i.str() + " (digit valuations are multiples of " + v.str() +
                           ")";
        break;
      }
      const BigInt j = i / v;
      const FieldElement b = c * lc.pow(j).inverse();
      out.y = out.y + HahnSeries::monomial(field, BigRat(j), b);
      if (j < 0) used_truncation = true;
      const HahnSeries image = tau_power(tau_t, j, cap).scaled(b);
      out.residual = out.residual - image;
      ExtRational val_after = ExtRational::infinity();
      if (out.residual.has_visible_terms()) {
        val_after = ExtRational(out.residual.leading().exponent);
      } else if (!out.residual.is_exact()) {
        if (used_truncation) {
          retry = true;
          break;
        }
        val_after = out.residual.tail();  // lower bound from the input's own tail
      }
      out.trace.push_back(GreedyStep{step, j, b.str(), val_after});
    }
    if (retry) {
      base_cap = cap * 2;
      continue;
    }
    return out;
  }
  throw std::runtime_error("greedy preimage: working precision kept running out");
}

Report run_spherical(const SphericalConfig& config) {
  const FieldPtr field = FieldDescriptor::gf(config.p, config.ext_degree);
  const HahnSeries tau_t = parse_series(config.tau_text, field);
  const HahnSeries x = parse_series(config.x_text, field);
  const SeriesEndomorphism se(tau_t);

  Report report;
  report.witness = "spherical";
  report.config["p"] = std::to_string(config.p);
  report.config["field"] = field->name();
  report.config["tau"] = tau_t.str();
  report.config["x"] = x.str();
  report.config["steps"] = std::to_string(config.steps);

  const CompatCheck compat = compat_check(se);
  report.add("compat.value-group", "compat.value-group", compat.value_group_ok,
             {{"observed_val", compat.observed_val.str()}, {"expected_val", "1"}},
             "val(tau(t)) must be 1 so digit images sweep every valuation");
  report.add("compat.residue-identity", "compat.residue-identity", compat.residue_identity,
             {{"leading_coeff", compat.leading_coeff}},
             "leading coefficient of tau(t) must be 1 (identity residue normalization)");

  const GreedyResult result = greedy_preimage(se, x, config.steps);
  ExtRational prev;
  bool have_prev = false;
  bool increasing = true;
  std::vector<std::string> val_strs;
  for (const auto& step : result.trace) {
    const bool step_ok = !have_prev || step.residual_val > prev;
    if (!step_ok) increasing = false;
    report.add("greedy.step[" + std::to_string(step.step) + "]", "greedy.step", step_ok,
               {{"digit_exponent", step.digit_exponent.str()},
                {"digit_coeff", step.digit_coeff},
                {"residual_val", step.residual_val.str()}},
               "digit kills the lowest residual term; valuation must rise");
    prev = step.residual_val;
    have_prev = true;
    val_strs.push_back(step.residual_val.str());
  }
  {
    std::string joined;
    for (const auto& s : val_strs) {
      if (!joined.empty()) joined += ", ";
      joined += s;
    }
    report.add("greedy.monotone", "greedy.monotone", increasing && !result.stalled,
               {{"residual_vals", joined}},
               result.stalled ? result.stall_reason
                              : "residual valuations strictly increase");
  }
  {
    // val(x - tau(y)) >= val(x) + steps (trivially met on an exact hit).
    ExtRational final_val = ExtRational::infinity();
    if (!result.trace.empty()) final_val = result.trace.back().residual_val;
    ExtRational x_val = ExtRational::infinity();
    if (x.has_visible_terms()) x_val = ExtRational(x.leading().exponent);
    const ExtRational needed = x_val + ExtRational(BigRat(config.steps));
    const bool ok = !result.stalled && final_val >= needed;
    report.add("greedy.progress", "greedy.progress", ok,
               {{"x_val", x_val.str()},
                {"final_residual_val", final_val.str()},
                {"required_val", needed.str()},
                {"steps", std::to_string(config.steps)},
                {"y", result.y.str()}},
               "after N digits the residual valuation clears val(x) + N");
  }
  return report;
}

}  // namespace nonarch
