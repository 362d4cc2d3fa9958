#include <nonarch/report.hpp>

#include <nonarch/exact.hpp>

#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

// Re-validation of recorded check values by plain rational arithmetic.
//
// Every check family records enough exact strings for its claim to be
// re-derived without recomputing any series: the verifier parses those
// strings and replays the claimed relation.  A check that passed must
// satisfy its relation; a check that failed cannot be confirmed and fails
// verification; assumed checks are echoed as assumptions.  Unknown check
// families fail closed.

namespace nonarch {

namespace {

struct VerifyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

[[noreturn]] void reject(const std::string& why) { throw VerifyError(why); }

const std::string& need(const Check& c, const std::string& key) {
  const auto it = c.values.find(key);
  if (it == c.values.end()) reject("missing recorded value '" + key + "'");
  return it->second;
}

BigInt to_int(const std::string& s) {
  try {
    return BigInt(s);
  } catch (const std::exception&) {
    reject("'" + s + "' is not an integer");
  }
}

BigRat to_rat(const std::string& s) {
  try {
    return BigRat(s);
  } catch (const std::exception&) {
    reject("'" + s + "' is not a rational");
  }
}

ExtRational to_ext(const std::string& s) {
  if (s == "inf") return ExtRational::infinity();
  return ExtRational(to_rat(s));
}

std::string trim(const std::string& s) {
  const std::size_t first = s.find_first_not_of(" \t");
  if (first == std::string::npos) return "";
  const std::size_t last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t comma = s.find(',', start);
    if (comma == std::string::npos) {
      std::string piece = trim(s.substr(start));
      if (!piece.empty()) out.push_back(std::move(piece));
      break;
    }
    out.push_back(trim(s.substr(start, comma - start)));
    start = comma + 1;
  }
  return out;
}

std::vector<BigInt> int_list(const std::string& s) {
  std::vector<BigInt> out;
  for (const auto& part : split_list(s)) out.push_back(to_int(part));
  return out;
}

std::vector<BigRat> rat_list(const std::string& s) {
  std::vector<BigRat> out;
  for (const auto& part : split_list(s)) out.push_back(to_rat(part));
  return out;
}

std::vector<ExtRational> ext_list(const std::string& s) {
  std::vector<ExtRational> out;
  for (const auto& part : split_list(s)) out.push_back(to_ext(part));
  return out;
}

std::uint32_t to_u32(const std::string& s) {
  const BigInt v = to_int(s);
  if (v < 0 || v > 1000000) reject("'" + s + "' out of range");
  return static_cast<std::uint32_t>(v);
}

BigRat pow_rat(std::uint32_t base, std::uint32_t exp) {
  return BigRat(pow_uint(base, exp));
}

// The check-name family: everything before the first '[' bracket.
std::string family_of(const std::string& name) {
  const auto b = name.find('[');
  return b == std::string::npos ? name : name.substr(0, b);
}

// ---- family relations -------------------------------------------------------

void check_dseq_coprime(const Check& c) {
  const std::uint32_t p = to_u32(need(c, "p"));
  const auto d = int_list(need(c, "d"));
  if (d.empty()) reject("empty d list");
  if (d.front() != 1) reject("d_0 must be 1");
  for (const auto& di : d)
    if (di % p == 0) reject("p divides " + di.str());
}

void check_dseq_jumps(const Check& c) {
  const auto jumps = int_list(need(c, "jumps"));
  if (jumps.empty()) reject("empty jump list");
  for (std::size_t i = 0; i < jumps.size(); ++i) {
    if (jumps[i] <= 0) reject("jump " + jumps[i].str() + " not positive");
    if (i && jumps[i] < jumps[i - 1]) reject("jumps decrease");
  }
}

void check_dseq_jump_closed_form(const Check& c) {
  const std::uint32_t p = to_u32(need(c, "p"));
  const auto jumps = int_list(need(c, "jumps"));
  const auto expected = int_list(need(c, "expected"));
  if (jumps.size() != expected.size()) reject("jump/expected length mismatch");
  for (std::size_t i = 0; i < jumps.size(); ++i) {
    const BigInt want = BigInt(1) + BigInt(p) * BigInt(i);
    if (expected[i] != want) reject("expected jump is not 1 + p i");
    if (jumps[i] != want) reject("recorded jump differs from 1 + p i");
  }
}

void check_dseq_scaled_monotone(const Check& c) {
  const auto scaled = rat_list(need(c, "scaled"));
  for (std::size_t i = 1; i < scaled.size(); ++i)
    if (!(scaled[i - 1] < scaled[i])) reject("scaled values fail to increase");
}

void check_dseq_scaled_bounded(const Check& c) {
  const auto scaled = rat_list(need(c, "scaled"));
  const BigRat bound = to_rat(need(c, "bound"));
  for (const auto& s : scaled)
    if (!(s < bound)) reject("scaled value reaches the bound");
}

void check_radius_gap(const Check& c) {
  const std::uint32_t p = to_u32(need(c, "p"));
  const std::uint32_t n = to_u32(need(c, "n"));
  const BigInt d_next = to_int(need(c, "d_next"));
  const BigRat expected = to_rat(need(c, "expected_val"));
  const ExtRational observed = to_ext(need(c, "observed_val"));
  if (expected != BigRat(d_next) / pow_rat(p, n + 1))
    reject("expected_val is not d_next / p^(n+1)");
  if (!(observed == ExtRational(expected)))
    reject("observed_val differs from expected_val");
}

void check_radius_monotone_bounded(const Check& c) {
  const auto vals = rat_list(need(c, "radius_vals"));
  const BigRat bound = to_rat(need(c, "bound"));
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (i && !(vals[i - 1] < vals[i])) reject("radius vals fail to increase");
    if (!(vals[i] < bound)) reject("radius val reaches the bound");
  }
}

void check_frobenius_gap(const Check& c) {
  const std::uint32_t p = to_u32(need(c, "p"));
  const std::uint32_t n = to_u32(need(c, "n"));
  const std::uint32_t m = to_u32(need(c, "m"));
  if (!(n < m)) reject("needs n < m");
  const BigInt d_next = to_int(need(c, "d_next"));
  const BigRat expected = to_rat(need(c, "expected_val"));
  const ExtRational observed = to_ext(need(c, "observed_val"));
  if (expected != BigRat(d_next) / BigRat(BigInt(p)))
    reject("expected_val is not d_next / p");
  if (!(observed == ExtRational(expected)))
    reject("observed_val differs from expected_val");
}

void check_pth_power_unique_unit(const Check& c) {
  const std::uint32_t p = to_u32(need(c, "p"));
  const BigInt d_n = to_int(need(c, "d_n"));
  const auto exponents = int_list(need(c, "exponents"));
  const auto units = int_list(need(c, "units"));
  std::vector<BigInt> recomputed;
  for (const auto& e : exponents)
    if (e % p != 0) recomputed.push_back(e);
  if (recomputed.size() != 1) reject("unit count is not exactly one");
  if (recomputed != units) reject("recorded units differ from recomputation");
  if (recomputed.front() != d_n) reject("the unique unit is not d_n");
}

void check_kahler_bound(const Check& c) {
  const std::uint32_t p = to_u32(need(c, "p"));
  const BigInt d_n = to_int(need(c, "d_n"));
  const BigInt d_next = to_int(need(c, "d_next"));
  const BigRat e = to_rat(need(c, "e"));
  if (e != BigRat(d_next) / BigRat(BigInt(p)) - BigRat(d_n) + 1)
    reject("e is not d_next/p - d_n + 1");
  const auto cf = c.values.find("closed_form");
  if (cf != c.values.end()) {
    const std::uint32_t n = to_u32(need(c, "n"));
    const BigRat closed = to_rat(cf->second);
    if (closed != e) reject("closed form differs from e");
    if (closed !=
        (BigRat(1) + BigRat(BigInt(p) * BigInt(n)) + BigRat(BigInt(p))) /
            BigRat(BigInt(p)))
      reject("closed form is not (1 + p n + p)/p");
  }
}

void check_kahler_divergence(const Check& c) {
  const auto vals = rat_list(need(c, "exponents"));
  const bool formula = need(c, "d_source") == "formula";
  for (std::size_t i = 1; i < vals.size(); ++i) {
    const BigRat step = vals[i] - vals[i - 1];
    if (formula && step != 1) reject("exponent step is not exactly 1");
    if (!formula && step < 0) reject("exponents decrease");
  }
}

void check_quasinilpotence_bound(const Check& c) {
  const std::uint32_t p = to_u32(need(c, "p"));
  const BigInt d_next = to_int(need(c, "d_next"));
  const BigRat bound = to_rat(need(c, "bound_exponent"));
  const ExtRational observed = to_ext(need(c, "observed_val"));
  if (bound != BigRat(d_next) / BigRat(BigInt(p)))
    reject("bound_exponent is not d_next / p");
  if (!(observed == ExtRational(bound)))
    reject("observed_val differs from bound_exponent");
}

void check_quasinilpotence_divergence(const Check& c) {
  const auto vals = rat_list(need(c, "bound_exponents"));
  for (std::size_t i = 1; i < vals.size(); ++i)
    if (!(vals[i - 1] < vals[i])) reject("bound exponents fail to increase");
}

void check_chain_nested(const Check& c) {
  // What is re-checkable from the record: the radius ladder, and (when the
  // run recorded center distances) the containment relation
  // |c_{n+1} - c_n| <= r_n, i.e. distance val >= radius val pairwise.
  const auto vals = ext_list(need(c, "radius_vals"));
  if (vals.empty()) reject("no radius vals recorded");
  for (std::size_t i = 1; i < vals.size(); ++i)
    if (!(vals[i - 1] < vals[i])) reject("radius vals fail to increase");
  const auto dv = c.values.find("distance_vals");
  if (dv != c.values.end()) {
    const auto dists = ext_list(dv->second);
    if (dists.size() + 1 != vals.size())
      reject("distance list length mismatch");
    for (std::size_t i = 0; i < dists.size(); ++i)
      if (!(dists[i] >= vals[i]))
        reject("a center escapes its disc (distance val below radius val)");
  }
}

void check_classify_type(const Check& c) {
  const std::string type = need(c, "type");
  if (type != "1" && type != "2" && type != "3" && type != "4")
    reject("no type was decided");
  const ExtRational limit = to_ext(need(c, "limit_val"));
  const bool stabilize = need(c, "centers_stabilize") == "true";
  if (type == "1") {
    if (!limit.is_infinite()) reject("type 1 needs limit val +inf");
    return;
  }
  if (limit.is_infinite()) reject("finite types need a finite limit val");
  const bool integral = denominator(limit.finite()) == 1;
  if (type == "2" && !(stabilize && integral))
    reject("type 2 needs stabilized centers and an integral limit val");
  if (type == "3" && !(stabilize && !integral))
    reject("type 3 needs stabilized centers and a non-integral limit val");
  if (type == "4" && stabilize) reject("type 4 needs non-stabilizing centers");
  for (const auto& v : ext_list(need(c, "radius_vals")))
    if (v > limit) reject("observed radius val above the limit");
}

void check_classify_ef(const Check& c) {
  const std::string type = need(c, "type");
  const std::string e = need(c, "e");
  const std::string f = need(c, "f");
  const bool ok = (type == "1" && e == "0" && f == "0") ||
                  (type == "2" && e == "0" && f == "1") ||
                  (type == "3" && e == "1" && f == "0") ||
                  (type == "4" && e == "0" && f == "0");
  if (!ok) reject("(E,F) pair differs from the fixed table");
}

void check_calc_echo(const Check& c) {
  // Calculator output: the result series is the record itself; confirm the
  // echo is present and well-formed rather than re-deriving arithmetic.
  need(c, "lhs");
  need(c, "result");
}

void check_chain_classify(const Check& c) {
  if (need(c, "type") != "4") reject("recorded type is not 4");
  if (need(c, "centers_stabilize") != "false")
    reject("type 4 needs non-stabilizing centers");
  const ExtRational limit = to_ext(need(c, "limit_val"));
  if (limit.is_infinite()) reject("type 4 needs a finite limit val");
  for (const auto& v : ext_list(need(c, "radius_vals")))
    if (v > limit) reject("observed radius val above the limit");
}

void check_chain_ef_table(const Check& c) {
  if (need(c, "t1") != "(0,0)" || need(c, "t2") != "(0,1)" ||
      need(c, "t3") != "(1,0)" || need(c, "t4") != "(0,0)")
    reject("(E,F) table differs from the fixed one");
}

void check_tau_telescope(const Check& c) {
  if (need(c, "lhs") != need(c, "rhs"))
    reject("recorded sides are not identical");
  const ExtRational gap = to_ext(need(c, "gap_val"));
  const BigRat expected = to_rat(need(c, "expected_gap_val"));
  if (!(gap == ExtRational(expected)))
    reject("gap val differs from e_1 + ... + e_{n+1}");
}

void check_scaling_threshold(const Check& c) {
  const BigRat bound = to_rat(need(c, "bound"));
  const BigRat threshold = to_rat(need(c, "lambda_threshold"));
  const BigRat deepest = to_rat(need(c, "deepest_partial_sum"));
  if (deepest > bound) reject("partial sum above the declared bound");
  if (!(bound < threshold)) reject("threshold not above the bound");
}

void check_trials(const Check& c) {
  const BigInt trials = to_int(need(c, "trials"));
  const BigInt failures = to_int(need(c, "failures"));
  if (trials <= 0) reject("no trials recorded");
  if (failures != 0) reject("recorded failures");
}

void check_image_gap_zero(const Check& c) {
  const ExtRational achieved = to_ext(need(c, "achieved_val"));
  const BigRat bound = to_rat(need(c, "bound_val"));
  if (!(achieved <= ExtRational(bound)))
    reject("achieved val above the bound val (norm below the bound)");
}

void check_image_gap_t1(const Check& c) {
  check_image_gap_zero(c);
  const ExtRational achieved = to_ext(need(c, "achieved_val"));
  const BigRat expected = to_rat(need(c, "expected_val"));
  if (!(achieved == ExtRational(expected)))
    reject("achieved val differs from e_1");
}

void check_image_gap_trials(const Check& c) {
  check_trials(c);
  to_rat(need(c, "bound_val"));
}

void check_compat_value_group(const Check& c) {
  const ExtRational observed = to_ext(need(c, "observed_val"));
  const ExtRational expected = to_ext(need(c, "expected_val"));
  if (!(expected == ExtRational(BigRat(1)))) reject("expected val is not 1");
  if (!(observed == expected)) reject("observed val differs");
}

void check_compat_residue(const Check& c) {
  if (need(c, "leading_coeff") != "1") reject("leading coefficient is not 1");
}

void check_greedy_step(const Check& c, const Report& input) {
  to_int(need(c, "digit_exponent"));
  const ExtRational val = to_ext(need(c, "residual_val"));
  // Cross-check against the recorded monotone trace when present.
  const auto b = c.name.find('[');
  const auto e = c.name.find(']');
  if (b == std::string::npos || e == std::string::npos || e <= b + 1) return;
  const std::size_t k =
      static_cast<std::size_t>(to_u32(c.name.substr(b + 1, e - b - 1)));
  for (const auto& other : input.checks) {
    if (other.name != "greedy.monotone") continue;
    const auto trace = ext_list(need(other, "residual_vals"));
    if (k < 1 || k > trace.size()) reject("step index outside the trace");
    if (!(trace[k - 1] == val))
      reject("step residual differs from the trace entry");
  }
}

void check_greedy_monotone(const Check& c) {
  const auto trace = ext_list(need(c, "residual_vals"));
  if (trace.empty()) reject("empty trace");
  for (std::size_t i = 1; i < trace.size(); ++i)
    if (!(trace[i - 1] < trace[i])) reject("residual vals fail to increase");
}

void check_greedy_progress(const Check& c) {
  const ExtRational x_val = to_ext(need(c, "x_val"));
  const ExtRational final_val = to_ext(need(c, "final_residual_val"));
  const ExtRational required = to_ext(need(c, "required_val"));
  const BigRat steps(to_int(need(c, "steps")));
  if (!(required == x_val + ExtRational(steps)))
    reject("required val is not x_val + steps");
  if (!(final_val >= required)) reject("final residual below required val");
}

}  // namespace

Report verify_report(const Report& report) {
  using Validator = std::function<void(const Check&, const Report&)>;
  const auto plain = [](void (*f)(const Check&)) {
    return [f](const Check& c, const Report&) { f(c); };
  };
  static const std::map<std::string, Validator> validators = {
      {"dseq.coprime", plain(check_dseq_coprime)},
      {"dseq.jumps", plain(check_dseq_jumps)},
      {"dseq.jump-closed-form", plain(check_dseq_jump_closed_form)},
      {"dseq.scaled-monotone", plain(check_dseq_scaled_monotone)},
      {"dseq.scaled-bounded", plain(check_dseq_scaled_bounded)},
      {"radius.gap", plain(check_radius_gap)},
      {"radius.monotone-bounded", plain(check_radius_monotone_bounded)},
      {"frobenius.gap", plain(check_frobenius_gap)},
      {"pth-power.unique-unit", plain(check_pth_power_unique_unit)},
      {"kahler.bound", plain(check_kahler_bound)},
      {"kahler.divergence", plain(check_kahler_divergence)},
      {"quasinilpotence.bound", plain(check_quasinilpotence_bound)},
      {"quasinilpotence.divergence", plain(check_quasinilpotence_divergence)},
      {"chain.nested", plain(check_chain_nested)},
      {"chain.strict-decrease", plain(check_chain_nested)},
      {"chain.classify", plain(check_chain_classify)},
      {"chain.ef-table", plain(check_chain_ef_table)},
      {"tau.telescope", plain(check_tau_telescope)},
      {"scaling.threshold", plain(check_scaling_threshold)},
      {"tau.norm-preservation", plain(check_trials)},
      {"tau.ring-hom", plain(check_trials)},
      {"image.gap-zero", plain(check_image_gap_zero)},
      {"image.gap-t1", plain(check_image_gap_t1)},
      {"image.gap", plain(check_image_gap_trials)},
      {"compat.value-group", plain(check_compat_value_group)},
      {"compat.residue-identity", plain(check_compat_residue)},
      {"greedy.step", check_greedy_step},
      {"greedy.monotone", plain(check_greedy_monotone)},
      {"greedy.progress", plain(check_greedy_progress)},
      {"classify.nested", plain(check_chain_nested)},
      {"classify.strict-decrease", plain(check_chain_nested)},
      {"classify.type", plain(check_classify_type)},
      {"classify.ef", plain(check_classify_ef)},
      {"calc.add", plain(check_calc_echo)},
      {"calc.sub", plain(check_calc_echo)},
      {"calc.mul", plain(check_calc_echo)},
      {"calc.distance", plain(check_calc_echo)},
      {"calc.valuation", plain(check_calc_echo)},
      {"calc.invert", plain(check_calc_echo)},
      {"calc.derivative", plain(check_calc_echo)},
      {"calc.frobenius", plain(check_calc_echo)},
      {"calc.frobenius-inverse", plain(check_calc_echo)},
      {"calc.frobenius-power", plain(check_calc_echo)},
  };

  Report out;
  out.witness = "verify";
  out.config = report.config;
  out.config["source_witness"] = report.witness;

  for (const auto& c : report.checks) {
    if (c.status == CheckStatus::kAssumed) {
      out.add_assumed(c.name, c.anchor, c.values,
                      "assumption carried over, nothing to re-derive");
      continue;
    }
    if (c.status == CheckStatus::kFail) {
      out.add(c.name, c.anchor, false, c.values,
              "original check failed; a failing record cannot be confirmed");
      continue;
    }
    const auto it = validators.find(family_of(c.name));
    if (it == validators.end()) {
      out.add(c.name, c.anchor, false, c.values,
              "unknown check family '" + family_of(c.name) +
                  "': refusing to confirm what cannot be re-derived");
      continue;
    }
    try {
      it->second(c, report);
      out.add(c.name, c.anchor, true, c.values,
              "recorded values replay the claimed relation");
    } catch (const VerifyError& e) {
      out.add(c.name, c.anchor, false, c.values, e.what());
    }
  }
  return out;
}

}  // namespace nonarch
