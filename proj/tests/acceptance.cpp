// Acceptance gate: one timed pass/fail line per criterion, exit 0 only if
// every criterion holds within its time budget. Every assertion is an exact
// rational identity or inequality — no tolerances anywhere.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "nonarch/berkovich.hpp"
#include "nonarch/hahn.hpp"
#include "nonarch/report.hpp"
#include "nonarch/sampling.hpp"
#include "nonarch/witness_gauss.hpp"
#include "nonarch/witness_spherical.hpp"
#include "nonarch/witness_theorem.hpp"

using namespace nonarch;

namespace {

struct Criterion {
  std::string label;
  double budget_seconds;
  std::function<bool(std::string&)> body;
};

bool fail(std::string& why, const std::string& message) {
  why = message;
  return false;
}

// Schoolbook convolution over the visible terms of exact series: the
// independent oracle the fast path is checked against.
HahnSeries naive_mul(const HahnSeries& f, const HahnSeries& g) {
  std::vector<SeriesTerm> out;
  out.reserve(f.terms().size() * g.terms().size());
  for (const auto& a : f.terms()) {
    for (const auto& b : g.terms()) {
      out.push_back(SeriesTerm{a.exponent + b.exponent, a.coeff * b.coeff});
    }
  }
  return HahnSeries(f.field(), std::move(out));
}

// 1. Exponent-sequence invariants for p in {2, 3, 5} up to index 50.
bool criterion_dseq(std::string& why) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    DSequence ds = DSequence::standard(p, 50);
    if (!ds.validate().pass()) return fail(why, "invariants fail for p=" + std::to_string(p));
    for (std::size_t i = 0; i + 1 <= 50; ++i) {
      if (ds.d(i + 1) - p * ds.d(i) != 1 + BigInt(p) * BigInt(i))
        return fail(why, "jump closed form fails at p=" + std::to_string(p) +
                             ", i=" + std::to_string(i));
    }
    if (!(ds.scaled(50) < ds.bound())) return fail(why, "scaled value reached the bound");
  }
  return true;
}

// 2. Radii: distances between successive approximants at p = 2, N = 10.
bool criterion_radii(std::string& why) {
  DSequence ds = DSequence::standard(2, 10);
  auto coeffs = witness_coefficients(FieldDescriptor::gf(2, 1), CoeffMode::kOnes, 10);
  const BigRat frozen[] = {BigRat(3, 2), BigRat(9, 4), BigRat(23, 8), BigRat(53, 16)};
  for (std::size_t n = 0; n + 1 <= 10; ++n) {
    GapCheck gc = gap_check(ds, n, coeffs);
    if (!gc.holds) return fail(why, "distance mismatch at n=" + std::to_string(n));
    if (n < 4 && gc.expected.to_rational() != frozen[n])
      return fail(why, "frozen radius mismatch at n=" + std::to_string(n));
    if (!(gc.expected.to_rational() < BigRat(4)))
      return fail(why, "radius val reached the bound at n=" + std::to_string(n));
    if (n > 0 && !(radius_val(ds, n).to_rational() > radius_val(ds, n - 1).to_rational()))
      return fail(why, "radius vals not strictly increasing at n=" + std::to_string(n));
  }
  return true;
}

// 3. Iterated-power distances for every pair 0 <= n < m <= 10, p in {2, 3}.
bool criterion_frobenius_gaps(std::string& why) {
  for (std::uint32_t p : {2u, 3u}) {
    DSequence ds = DSequence::standard(p, 10);
    auto coeffs = witness_coefficients(FieldDescriptor::gf(p, 1), CoeffMode::kOnes, 10);
    for (std::size_t n = 0; n < 10; ++n) {
      for (std::size_t m = n + 1; m <= 10; ++m) {
        GapCheck gc = frobenius_gap_check(ds, n, m, coeffs);
        if (!gc.holds)
          return fail(why, "gap mismatch at p=" + std::to_string(p) + ", n=" +
                               std::to_string(n) + ", m=" + std::to_string(m));
        // The expected value is d_{n+1}/p, independent of m.
        if (gc.expected.to_rational() != BigRat(ds.d(n + 1)) / p)
          return fail(why, "expected value is not d_{n+1}/p at n=" + std::to_string(n));
      }
    }
  }
  return true;
}

// 4. p-power decompositions: exactly one prime-to-p exponent, equal to d_n.
bool criterion_pth_power(std::string& why) {
  for (std::uint32_t p : {2u, 3u}) {
    DSequence ds = DSequence::standard(p, 10);
    auto coeffs = witness_coefficients(FieldDescriptor::gf(p, 1), CoeffMode::kOnes, 10);
    for (std::size_t n = 0; n <= 10; ++n) {
      PthPowerDecomposition dec = pth_power_decomposition(ds, n, coeffs);
      if (!dec.integer_exponents || !dec.holds || dec.prime_to_p.size() != 1 ||
          dec.prime_to_p.front() != ds.d(n))
        return fail(why, "decomposition fails at p=" + std::to_string(p) +
                             ", n=" + std::to_string(n));
    }
  }
  return true;
}

// 5. Differential-bound exponents: closed form and unit increments.
bool criterion_kahler(std::string& why) {
  for (std::uint32_t p : {2u, 3u}) {
    DSequence ds = DSequence::standard(p, 11);
    BigRat prev;
    for (std::size_t n = 0; n <= 10; ++n) {
      KahlerBound kb = kahler_bound(ds, n);
      if (!kb.matches_closed_form || !kb.matches_gap_relation)
        return fail(why, "bound forms disagree at p=" + std::to_string(p) +
                             ", n=" + std::to_string(n));
      if (kb.closed_form != BigRat(1 + BigInt(p) * BigInt(n) + p) / p)
        return fail(why, "closed form wrong at n=" + std::to_string(n));
      if (n > 0 && kb.e.to_rational() - prev != 1)
        return fail(why, "increment is not 1 at n=" + std::to_string(n));
      prev = kb.e.to_rational();
    }
  }
  return true;
}

// 6. The disc chain: nested, strictly shrinking, wandering, limit point of
// the last kind, with the emptiness assumption recorded as assumed and the
// residue invariants in the fixed table.
bool criterion_chain(std::string& why) {
  TheoremConfig cfg;
  cfg.p = 2;
  cfg.n = 8;
  Report r = run_theorem(cfg);
  bool classify_ok = false, assumed_ok = false, ef_ok = false;
  for (const auto& c : r.checks) {
    if (c.name == "chain.classify" && c.status == CheckStatus::kPass &&
        c.values.at("type") == "4")
      classify_ok = true;
    if (c.name == "chain.intersection-empty" && c.status == CheckStatus::kAssumed)
      assumed_ok = true;
    if (c.name == "chain.ef-table" && c.status == CheckStatus::kPass) ef_ok = true;
  }
  if (!classify_ok) return fail(why, "chain does not classify as a limit point (type 4)");
  if (!assumed_ok) return fail(why, "intersection emptiness not recorded as assumed");
  if (!ef_ok) return fail(why, "residue-invariant table check missing or failing");
  DiscChain chain = witness_chain(DSequence::standard(2, 8),
                                  witness_coefficients(FieldDescriptor::gf(2, 1),
                                                       CoeffMode::kOnes, 8));
  if (!check_nested(chain).pass()) return fail(why, "chain fails the nesting check");
  return true;
}

// 7. The polynomial side: telescoping to depth 8, norm preservation over 200
// samples up to level 6, and 50 distance-from-image trials per level.
bool criterion_gauss(std::string& why) {
  GaussConfig cfg;  // defaults: levels 8, 200 norm trials, 50 gap trials, max level 6
  Report r = run_gauss(cfg);
  if (!r.passed()) return fail(why, "polynomial witness report has failures");
  std::size_t telescope = 0;
  for (const auto& c : r.checks) {
    if (c.anchor == "tau.telescope") ++telescope;
  }
  if (telescope != 8) return fail(why, "expected 8 telescoping levels");
  return true;
}

// 8. Greedy preimages: the frozen doubling trace, then 100 randomized
// compatible instances over GF(2) and GF(3) gaining 20 valuation units.
bool criterion_spherical(std::string& why) {
  SphericalConfig frozen;  // tau = t + t^2, x = t, 5 steps
  Report r = run_spherical(frozen);
  if (!r.passed()) return fail(why, "frozen instance fails");
  bool trace_ok = false;
  for (const auto& c : r.checks) {
    if (c.name == "greedy.monotone" && c.values.at("residual_vals") == "2, 4, 8, 16, 32")
      trace_ok = true;
  }
  if (!trace_ok) return fail(why, "frozen residual trace is not 2, 4, 8, 16, 32");

  Sampler rng(20260816);
  const std::size_t steps = 20;
  for (std::uint32_t p : {2u, 3u}) {
    auto field = FieldDescriptor::gf(p, 1);
    for (int trial = 0; trial < 50; ++trial) {
      HahnSeries tau = HahnSeries::variable(field);
      for (int j = 2; j <= 6; ++j) {
        if (rng.coin()) {
          tau = tau + HahnSeries::monomial(field, BigRat(j), rng.nonzero_element(field));
        }
      }
      SeriesEndomorphism se(tau);
      HahnSeries x = rng.nonzero_series(field, 4, 0, 8, p, 0);
      GreedyResult g = greedy_preimage(se, x, steps);
      if (g.stalled)
        return fail(why, "greedy stalled on a compatible instance: " + g.stall_reason);
      ExtRational reached =
          g.exact_hit ? ExtRational::infinity() : g.trace.back().residual_val;
      if (!(reached >= x.valuation() + ExtRational(BigRat(static_cast<long>(steps)))))
        return fail(why, "residual gained fewer than 20 valuation units");
    }
  }
  return true;
}

// 9. Kernel property suites: ring axioms against the convolution oracle,
// valuation additivity, Frobenius laws, and the derivative bound.
bool criterion_kernel(std::string& why) {
  Sampler rng(424242);
  auto q = FieldDescriptor::rationals();
  auto f4 = FieldDescriptor::gf(2, 2);
  auto f9 = FieldDescriptor::gf(3, 2);

  // Ring axioms on 500 random triples of exact series, with every product
  // cross-checked against the schoolbook convolution.
  for (int trial = 0; trial < 500; ++trial) {
    const auto& field = (trial % 3 == 0) ? q : (trial % 3 == 1 ? f4 : f9);
    std::uint32_t p = field->characteristic() == 0 ? 2 : field->characteristic();
    HahnSeries f = rng.series(field, 4, -6, 6, p, 2);
    HahnSeries g = rng.series(field, 4, -6, 6, p, 2);
    HahnSeries h = rng.series(field, 4, -6, 6, p, 2);
    if ((f + g) + h != f + (g + h)) return fail(why, "addition is not associative");
    if (f + g != g + f) return fail(why, "addition is not commutative");
    if (f * g != naive_mul(f, g)) return fail(why, "product disagrees with the oracle");
    if (f * g != g * f) return fail(why, "product is not commutative");
    if ((f * g) * h != f * (g * h)) return fail(why, "product is not associative");
    if (f * (g + h) != f * g + f * h) return fail(why, "product does not distribute");
    // Valuation additivity on the nonzero samples.
    if (!f.is_exact_zero() && !g.is_exact_zero()) {
      if ((f * g).valuation() != f.valuation() + g.valuation())
        return fail(why, "valuation is not additive");
    }
  }

  // Truncated products at matching precision agree with the truncated oracle.
  for (int trial = 0; trial < 200; ++trial) {
    const auto& field = (trial % 2 == 0) ? q : f4;
    std::uint32_t p = field->characteristic() == 0 ? 2 : field->characteristic();
    HahnSeries f = rng.nonzero_series(field, 4, -6, 6, p, 2);
    HahnSeries g = rng.nonzero_series(field, 4, -6, 6, p, 2);
    ExtRational bf = f.valuation() + ExtRational(rng.rational(1, 6, 4));
    ExtRational bg = g.valuation() + ExtRational(rng.rational(1, 6, 4));
    HahnSeries ft = f.truncated(bf);
    HahnSeries gt = g.truncated(bg);
    HahnSeries prod = ft * gt;
    if (prod.tail() != min(bf + g.valuation(), bg + f.valuation()))
      return fail(why, "truncated product carries the wrong precision");
    if (prod != naive_mul(f, g).truncated(prod.tail()))
      return fail(why, "truncated product disagrees with the truncated oracle");
  }

  // Frobenius: homomorphism in both operations, and a perfect round-trip.
  for (int trial = 0; trial < 200; ++trial) {
    const auto& field = (trial % 2 == 0) ? f4 : f9;
    std::uint32_t p = field->characteristic();
    HahnSeries f = rng.series(field, 4, -6, 6, p, 2);
    HahnSeries g = rng.series(field, 4, -6, 6, p, 2);
    if ((f + g).frobenius() != f.frobenius() + g.frobenius())
      return fail(why, "Frobenius is not additive");
    if (!f.is_exact_zero() && !g.is_exact_zero() &&
        (f * g).frobenius() != f.frobenius() * g.frobenius())
      return fail(why, "Frobenius is not multiplicative");
    if (f.frobenius().frobenius_inverse() != f)
      return fail(why, "Frobenius round-trip is not the identity");
  }

  // The derivative loses at most one unit of valuation: 200 random
  // characteristic-0 series with fractional (including negative) exponents.
  for (int trial = 0; trial < 200; ++trial) {
    HahnSeries f = rng.series(q, 5, -8, 8, 3, 3);
    DerivativeBound b = derivative_bound_check(f);
    if (!b.holds) return fail(why, "derivative bound fails");
  }
  return true;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"exponent-sequence invariants for p in {2,3,5} up to i = 50", 1.0, criterion_dseq},
      {"approximant distances match the radius formula (p = 2, N = 10)", 1.0,
       criterion_radii},
      {"iterated-power distances for all 0 <= n < m <= 10, p in {2,3}", 5.0,
       criterion_frobenius_gaps},
      {"p-power decompositions have a unique prime-to-p exponent d_n", 5.0,
       criterion_pth_power},
      {"differential-bound exponents: closed form and unit increments", 1.0,
       criterion_kahler},
      {"disc chain: nested, wandering, limit point of the last kind", 1.0, criterion_chain},
      {"polynomial twist: telescoping, norm preservation, image distance", 10.0,
       criterion_gauss},
      {"greedy preimages: frozen trace and 100 randomized 20-step runs", 10.0,
       criterion_spherical},
      {"kernel suites: ring axioms vs oracle, valuation, Frobenius, derivative", 30.0,
       criterion_kernel},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    std::string why;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.body(why);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = seconds < c.budget_seconds;
    const bool pass = ok && in_budget;
    if (!pass) ++failures;
    std::printf("criterion %zu: %s — %s (%.3f s, budget %.0f s)%s%s\n", i + 1,
                pass ? "pass" : "FAIL", c.label.c_str(), seconds, c.budget_seconds,
                why.empty() ? "" : " — ", why.c_str());
    if (ok && !in_budget) std::printf("  over budget\n");
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
