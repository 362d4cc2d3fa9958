#include "nonarch/witness_theorem.hpp"

#include <stdexcept>
#include <utility>

namespace nonarch {

namespace {

BigRat canonical_bound(std::uint32_t p) {
  // p^2/(p-1)^2, the exact supremum of p^{-i} d_i for the formula values.
  const BigInt pm1 = BigInt(p) - 1;
  return BigRat(BigInt(p) * p, pm1 * pm1);
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& s : parts) {
    if (!out.empty()) out += ",";
    out += s;
  }
  return out;
}

std::string join_bigints(const std::vector<BigInt>& v) {
  std::vector<std::string> parts;
  parts.reserve(v.size());
  for (const auto& x : v) parts.push_back(x.str());
  return join(parts);
}

}  // namespace

DSequence::DSequence(std::uint32_t p, std::vector<BigInt> d, BigRat bound, bool from_formula)
    : p_(p), d_(std::move(d)), bound_(std::move(bound)), from_formula_(from_formula) {
  if (!is_prime(p_)) throw std::invalid_argument("d-sequence needs a prime p");
  if (d_.size() < 2) throw std::invalid_argument("d-sequence needs at least d_0 and d_1");
  for (const auto& di : d_) {
    if (di <= 0) throw std::invalid_argument("d-sequence entries must be positive");
  }
}

DSequence DSequence::standard(std::uint32_t p, std::size_t N) {
  if (N < 1) throw std::invalid_argument("d-sequence needs N >= 1");
  if (!is_prime(p)) throw std::invalid_argument("d-sequence needs a prime p");
  std::vector<BigInt> d;
  d.reserve(N + 1);
  for (std::size_t i = 0; i <= N; ++i) {
    BigInt di = 1;
    for (std::size_t j = 1; j <= i; ++j) {
      di += pow_uint(p, static_cast<std::uint32_t>(j)) * BigInt(i + 1 - j);
    }
    d.push_back(std::move(di));
  }
  return DSequence(p, std::move(d), canonical_bound(p), true);
}

DSequence DSequence::from_values(std::uint32_t p, std::vector<BigInt> d,
                                 std::optional<BigRat> declared_bound) {
  std::vector<BigInt> full;
  full.reserve(d.size() + 1);
  full.emplace_back(1);
  for (auto& di : d) full.push_back(std::move(di));
  return DSequence(p, std::move(full),
                   declared_bound ? std::move(*declared_bound) : canonical_bound(p), false);
}

const BigInt& DSequence::d(std::size_t i) const {
  if (i >= d_.size()) throw std::out_of_range("d-sequence index beyond computed range");
  return d_[i];
}

BigRat DSequence::scaled(std::size_t i) const {
  return BigRat(d(i), pow_uint(p_, static_cast<std::uint32_t>(i)));
}

DSequence::InvariantReport DSequence::validate() const {
  InvariantReport out{true, true, true, true, ""};
  auto note = [&out](const std::string& what) {
    if (out.detail.empty()) out.detail = what;
  };
  for (std::size_t i = 0; i < d_.size(); ++i) {
    if (d_[i] % p_ == 0) {
      out.coprime = false;
      note("p divides d_" + std::to_string(i) + " = " + d_[i].str());
      break;
    }
  }
  BigInt prev_jump = 0;  // jumps must be > 0, so 0 is a safe floor
  for (std::size_t i = 0; i + 1 < d_.size(); ++i) {
    const BigInt jump = d_[i + 1] - BigInt(p_) * d_[i];
    if (jump <= 0) {
      out.jumps = false;
      note("jump d_" + std::to_string(i + 1) + " - p d_" + std::to_string(i) +
           " = " + jump.str() + " is not positive");
      break;
    }
    if (jump < prev_jump) {
      out.jumps = false;
      note("jumps decrease at i = " + std::to_string(i));
      break;
    }
    prev_jump = jump;
  }
  for (std::size_t i = 0; i + 1 < d_.size(); ++i) {
    if (!(scaled(i) < scaled(i + 1))) {
      out.scaled_monotone = false;
      note("p^{-i} d_i fails to increase at i = " + std::to_string(i));
      break;
    }
  }
  for (std::size_t i = 0; i < d_.size(); ++i) {
    if (!(scaled(i) < bound_)) {
      out.scaled_bounded = false;
      note("p^{-i} d_i reaches the bound at i = " + std::to_string(i) + ": " +
           scaled(i).str() + " vs " + bound_.str());
      break;
    }
  }
  return out;
}

std::vector<FieldElement> witness_coefficients(const FieldPtr& field, CoeffMode mode,
                                               std::size_t count) {
  std::vector<FieldElement> out;
  out.reserve(count + 1);
  if (mode == CoeffMode::kOnes) {
    for (std::size_t i = 0; i <= count; ++i) out.push_back(FieldElement::one(field));
    return out;
  }
  const FieldElement g = FieldElement::generator(field);
  FieldElement acc = FieldElement::one(field);
  for (std::size_t i = 0; i <= count; ++i) {
    out.push_back(acc);
    acc = acc * g;
  }
  return out;
}

HahnSeries witness_alpha(const DSequence& ds, std::size_t n,
                         const std::vector<FieldElement>& coeffs) {
  if (n >= coeffs.size())
    throw std::invalid_argument("not enough coefficients for alpha_n");
  std::vector<SeriesTerm> terms;
  terms.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    if (coeffs[i].is_zero()) throw std::invalid_argument("zero coefficient c_i rejected");
    terms.push_back(SeriesTerm{ds.scaled(i), coeffs[i]});
  }
  return HahnSeries(coeffs[0].field(), std::move(terms));
}

PAdicRational radius_val(const DSequence& ds, std::size_t n) {
  return PAdicRational(ds.d(n + 1), static_cast<std::uint32_t>(n + 1), ds.prime());
}

GapCheck gap_check(const DSequence& ds, std::size_t n,
                   const std::vector<FieldElement>& coeffs) {
  const HahnSeries next = witness_alpha(ds, n + 1, coeffs);
  const HahnSeries here = witness_alpha(ds, n, coeffs);
  GapCheck out{distance(next, here).val(), radius_val(ds, n), false};
  out.holds = out.observed == ExtRational(out.expected.to_rational());
  return out;
}

GapCheck frobenius_gap_check(const DSequence& ds, std::size_t n, std::size_t m,
                             const std::vector<FieldElement>& coeffs) {
  if (m <= n) throw std::invalid_argument("frobenius gap needs m > n");
  const HahnSeries lhs = witness_alpha(ds, m, coeffs).frobenius_power(static_cast<int>(n));
  const HahnSeries rhs = witness_alpha(ds, n, coeffs).frobenius_power(static_cast<int>(n));
  // p^n * (r_n val) = d_{n+1}/p, independent of n's power.
  GapCheck out{distance(lhs, rhs).val(), radius_val(ds, n).shifted(static_cast<int>(n)),
               false};
  out.holds = out.observed == ExtRational(out.expected.to_rational());
  return out;
}

PthPowerDecomposition pth_power_decomposition(const DSequence& ds, std::size_t n,
                                              const std::vector<FieldElement>& coeffs) {
  const HahnSeries a_n = witness_alpha(ds, n, coeffs).frobenius_power(static_cast<int>(n));
  PthPowerDecomposition out{true, {}, {}, ds.d(n), false};
  for (const auto& term : a_n.terms()) {
    if (boost::multiprecision::denominator(term.exponent) != 1) {
      out.integer_exponents = false;
      continue;
    }
    BigInt e = boost::multiprecision::numerator(term.exponent);
    if (e % ds.prime() != 0) out.prime_to_p.push_back(e);
    out.exponents.push_back(std::move(e));
  }
  out.holds = out.integer_exponents && out.prime_to_p.size() == 1 &&
              out.prime_to_p.front() == out.expected_unit;
  return out;
}

KahlerBound kahler_bound(const DSequence& ds, std::size_t n) {
  const std::uint32_t p = ds.prime();
  const PAdicRational e =
      PAdicRational(ds.d(n + 1), 1, p) + PAdicRational::integer(BigInt(1) - ds.d(n), p);
  KahlerBound out{e, BigRat(BigInt(1) + BigInt(p) * BigInt(n) + p, BigInt(p)), false, false};
  out.matches_closed_form = e.to_rational() == out.closed_form;
  const PAdicRational relation =
      radius_val(ds, n).shifted(static_cast<int>(n)) +
      PAdicRational::integer(BigInt(1) - ds.d(n), p);
  out.matches_gap_relation = e == relation;
  return out;
}

QuasinilpotenceCheck quasinilpotence_check(const DSequence& ds, std::size_t n, std::size_t m,
                                           const std::vector<FieldElement>& coeffs) {
  QuasinilpotenceCheck out{frobenius_gap_check(ds, n, m, coeffs),
                           radius_val(ds, n).shifted(static_cast<int>(n))};
  return out;
}

DiscChain witness_chain(const DSequence& ds, const std::vector<FieldElement>& coeffs) {
  DiscChain chain;
  const std::size_t N = ds.count();
  chain.discs.reserve(N);
  for (std::size_t n = 0; n + 1 <= N; ++n) {
    chain.discs.push_back(Disc{witness_alpha(ds, n, coeffs),
                               LogNorm(ExtRational(radius_val(ds, n).to_rational()))});
  }
  chain.declared = LimitDeclaration{ExtRational(ds.bound()), false,
                                    AlgebraicIntersection::kEmpty};
  return chain;
}

Report run_theorem(const TheoremConfig& config) {
  if (!is_prime(config.p)) throw std::invalid_argument("p must be prime");
  if (config.n < 3) throw std::invalid_argument("the witness needs N >= 3");
  if (config.ext_degree < 1) throw std::invalid_argument("extension degree must be >= 1");

  const DSequence ds = config.user_d.empty()
                           ? DSequence::standard(config.p, config.n)
                           : DSequence::from_values(config.p, config.user_d);
  const std::size_t N = ds.count();
  const FieldPtr field = config.mode == CoeffMode::kOnes
                             ? FieldDescriptor::gf(config.p, 1)
                             : FieldDescriptor::gf(config.p, config.ext_degree);
  const auto coeffs = witness_coefficients(field, config.mode, N);

  Report report;
  report.witness = "theorem";
  report.config["p"] = std::to_string(config.p);
  report.config["n"] = std::to_string(config.n);
  report.config["mode"] = config.mode == CoeffMode::kOnes ? "ones" : "generator-powers";
  report.config["field"] = field->name();
  report.config["d_source"] = ds.from_formula() ? "formula" : "user";

  // --- the d-sequence and its three conditions -----------------------------
  std::vector<std::string> d_strs, scaled_strs, jump_strs;
  for (std::size_t i = 0; i <= N; ++i) {
    d_strs.push_back(ds.d(i).str());
    scaled_strs.push_back(ds.scaled(i).str());
  }
  for (std::size_t i = 0; i < N; ++i) {
    jump_strs.push_back((ds.d(i + 1) - BigInt(config.p) * ds.d(i)).str());
  }
  const auto inv = ds.validate();
  report.add("dseq.coprime", "dseq.conditions", inv.coprime,
             {{"p", std::to_string(config.p)}, {"d", join(d_strs)}},
             inv.coprime ? "p divides no d_i" : inv.detail);
  report.add("dseq.jumps", "dseq.conditions", inv.jumps,
             {{"p", std::to_string(config.p)}, {"jumps", join(jump_strs)}},
             inv.jumps ? "jumps d_{i+1} - p d_i positive and nondecreasing" : inv.detail);
  report.add("dseq.scaled-monotone", "dseq.conditions", inv.scaled_monotone,
             {{"scaled", join(scaled_strs)}},
             inv.scaled_monotone ? "p^{-i} d_i strictly increasing" : inv.detail);
  report.add("dseq.scaled-bounded", "dseq.conditions", inv.scaled_bounded,
             {{"scaled", join(scaled_strs)}, {"bound", ds.bound().str()}},
             inv.scaled_bounded ? "p^{-i} d_i strictly below the bound" : inv.detail);
  if (ds.from_formula()) {
    bool closed = true;
    std::vector<std::string> expected;
    for (std::size_t i = 0; i < N; ++i) {
      const BigInt want = BigInt(1) + BigInt(config.p) * BigInt(i);
      expected.push_back(want.str());
      if (ds.d(i + 1) - BigInt(config.p) * ds.d(i) != want) closed = false;
    }
    report.add("dseq.jump-closed-form", "dseq.jump-closed-form", closed,
               {{"p", std::to_string(config.p)},
                {"jumps", join(jump_strs)},
                {"expected", join(expected)}},
               "d_{i+1} - p d_i = 1 + p i by direct subtraction");
  }

  // --- radii ----------------------------------------------------------------
  std::vector<std::string> radius_strs;
  for (std::size_t n = 0; n + 1 <= N; ++n) {
    const GapCheck gc = gap_check(ds, n, coeffs);
    radius_strs.push_back(gc.expected.to_rational().str());
    report.add("radius.gap[n=" + std::to_string(n) + "]", "radius.gap", gc.holds,
               {{"p", std::to_string(config.p)},
                {"n", std::to_string(n)},
                {"d_next", ds.d(n + 1).str()},
                {"expected_val", gc.expected.to_rational().str()},
                {"observed_val", gc.observed.str()}},
               "distance(alpha_{n+1}, alpha_n) lands on p^{-(n+1)} d_{n+1}");
  }
  {
    bool monotone = true;
    bool bounded = true;
    for (std::size_t n = 0; n + 1 <= N; ++n) {
      const BigRat v = radius_val(ds, n).to_rational();
      if (n + 2 <= N && !(v < radius_val(ds, n + 1).to_rational())) monotone = false;
      if (!(v < ds.bound())) bounded = false;
    }
    report.add("radius.monotone-bounded", "radius.monotone-bounded", monotone && bounded,
               {{"radius_vals", join(radius_strs)}, {"bound", ds.bound().str()}},
               "radius vals strictly increase and stay below the bound (positive limit "
               "radius)");
  }

  // --- Frobenius gaps over all pairs -----------------------------------------
  for (std::size_t n = 0; n < N; ++n) {
    for (std::size_t m = n + 1; m <= N; ++m) {
      const GapCheck gc = frobenius_gap_check(ds, n, m, coeffs);
      report.add(
          "frobenius.gap[n=" + std::to_string(n) + ",m=" + std::to_string(m) + "]",
          "frobenius.gap", gc.holds,
          {{"p", std::to_string(config.p)},
           {"n", std::to_string(n)},
           {"m", std::to_string(m)},
           {"d_next", ds.d(n + 1).str()},
           {"expected_val", gc.expected.to_rational().str()},
           {"observed_val", gc.observed.str()}},
          "distance(Frob^n alpha_m, Frob^n alpha_n) = p^n (r_n val) = d_{n+1}/p");
    }
  }

  // --- p-th power decomposition ----------------------------------------------
  for (std::size_t n = 0; n <= N; ++n) {
    const auto dec = pth_power_decomposition(ds, n, coeffs);
    report.add("pth-power.unique-unit[n=" + std::to_string(n) + "]",
               "pth-power.unique-unit", dec.holds,
               {{"p", std::to_string(config.p)},
                {"n", std::to_string(n)},
                {"d_n", dec.expected_unit.str()},
                {"exponents", join_bigints(dec.exponents)},
                {"units", join_bigints(dec.prime_to_p)}},
               "alpha_n^{p^n} has integer exponents, exactly one prime to p (namely d_n)");
  }

  // --- differential bound exponents ------------------------------------------
  std::vector<std::string> kahler_strs;
  std::vector<BigRat> kahler_vals;
  for (std::size_t n = 0; n + 1 <= N; ++n) {
    const KahlerBound kb = kahler_bound(ds, n);
    kahler_vals.push_back(kb.e.to_rational());
    kahler_strs.push_back(kb.e.to_rational().str());
    const bool pass =
        kb.matches_gap_relation && (!ds.from_formula() || kb.matches_closed_form);
    std::map<std::string, std::string> values{
        {"p", std::to_string(config.p)},
        {"n", std::to_string(n)},
        {"d_n", ds.d(n).str()},
        {"d_next", ds.d(n + 1).str()},
        {"e", kb.e.to_rational().str()},
    };
    if (ds.from_formula()) values["closed_form"] = kb.closed_form.str();
    report.add("kahler.bound[n=" + std::to_string(n) + "]", "kahler.bound", pass,
               std::move(values),
               "e_n = p^{-1} d_{n+1} - d_n + 1 = p^n (r_n val) + 1 - d_n" +
                   std::string(ds.from_formula() ? " = (1 + p n + p)/p" : ""));
  }
  {
    bool nondecreasing = true;
    bool unit_steps = true;
    for (std::size_t n = 0; n + 1 < kahler_vals.size(); ++n) {
      const BigRat step = kahler_vals[n + 1] - kahler_vals[n];
      if (step < 0) nondecreasing = false;
      if (step != 1) unit_steps = false;
    }
    const bool pass = ds.from_formula() ? unit_steps : nondecreasing;
    report.add("kahler.divergence", "kahler.divergence", pass,
               {{"exponents", join(kahler_strs)},
                {"d_source", ds.from_formula() ? "formula" : "user"}},
               ds.from_formula()
                   ? "e_{n+1} - e_n = 1 exactly: the bound exponents diverge, so the "
                     "seminorm bound collapses to 0"
                   : "bound exponents nondecreasing on the computed range; divergence "
                     "rests on condition (b)'s limit");
  }

  // --- quasi-nilpotence bounds -------------------------------------------------
  std::vector<std::string> qn_strs;
  for (std::size_t n = 0; n + 1 <= N; ++n) {
    const auto qc = quasinilpotence_check(ds, n, N, coeffs);
    qn_strs.push_back(qc.bound_exponent.to_rational().str());
    report.add("quasinilpotence.bound[n=" + std::to_string(n) + "]",
               "quasinilpotence.bound", qc.gap.holds,
               {{"p", std::to_string(config.p)},
                {"n", std::to_string(n)},
                {"m", std::to_string(N)},
                {"d_next", ds.d(n + 1).str()},
                {"bound_exponent", qc.bound_exponent.to_rational().str()},
                {"observed_val", qc.gap.observed.str()}},
               "|alpha_m^{p^n} - alpha_n^{p^n}| sits exactly on the bound exponent "
               "d_{n+1}/p");
  }
  {
    bool increasing = true;
    for (std::size_t n = 0; n + 1 <= N; ++n) {
      if (n + 2 <= N && !(radius_val(ds, n).shifted(static_cast<int>(n)).to_rational() <
                          radius_val(ds, n + 1)
                              .shifted(static_cast<int>(n + 1))
                              .to_rational())) {
        increasing = false;
      }
    }
    report.add("quasinilpotence.divergence", "quasinilpotence.divergence", increasing,
               {{"bound_exponents", join(qn_strs)}},
               "the power-norm bound exponents strictly increase: powers shrink toward "
               "norm 0");
  }

  // --- the disc chain ------------------------------------------------------------
  const DiscChain chain = witness_chain(ds, coeffs);
  const NestedCheck nested = check_nested(chain);
  report.add("chain.nested", "chain.nested", nested.nested,
             {{"radius_vals", join(radius_strs)}},
             nested.nested ? "each disc contains the next" : nested.detail);
  report.add("chain.strict-decrease", "chain.nested", nested.strictly_decreasing,
             {{"radius_vals", join(radius_strs)}},
             nested.strictly_decreasing ? "radii strictly decrease" : nested.detail);
  report.add_assumed("chain.intersection-empty", "chain.intersection-empty",
                     {{"intersection", "empty"}},
                     "declared, not computed: emptiness rests on the published "
                     "transcendence argument");
  {
    ClassifyResult cls{std::nullopt, ""};
    bool is_type4 = false;
    std::string type_str = "indeterminate";
    if (nested.pass()) {
      cls = classify(chain);
      if (cls.type.has_value()) {
        type_str = std::to_string(static_cast<int>(*cls.type));
        is_type4 = *cls.type == PointType::kType4;
      }
    }
    report.add("chain.classify", "chain.classify", is_type4,
               {{"type", type_str},
                {"limit_val", ds.bound().str()},
                {"centers_stabilize", "false"},
                {"radius_vals", join(radius_strs)}},
               cls.reason);
  }
  {
    const bool table_ok =
        ef_invariants(PointType::kType1).e == 0 && ef_invariants(PointType::kType1).f == 0 &&
        ef_invariants(PointType::kType2).e == 0 && ef_invariants(PointType::kType2).f == 1 &&
        ef_invariants(PointType::kType3).e == 1 && ef_invariants(PointType::kType3).f == 0 &&
        ef_invariants(PointType::kType4).e == 0 && ef_invariants(PointType::kType4).f == 0 &&
        abhyankar_ok(PointType::kType1) && abhyankar_ok(PointType::kType2) &&
        abhyankar_ok(PointType::kType3) && abhyankar_ok(PointType::kType4);
    report.add("chain.ef-table", "chain.ef-table", table_ok,
               {{"t1", "(0,0)"}, {"t2", "(0,1)"}, {"t3", "(1,0)"}, {"t4", "(0,0)"}},
               "(E,F) per type with E + F <= 1 throughout");
  }
  return report;
}

}  // namespace nonarch
