#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "nonarch/gausspoly.hpp"
#include "nonarch/sampling.hpp"
#include "nonarch/series_text.hpp"

using namespace nonarch;

namespace {

MultiPoly var(const FieldPtr& q, std::size_t i) { return MultiPoly::variable(q, i); }

MultiPoly times_series(const FieldPtr& q, const std::string& coeff, std::size_t i) {
  return var(q, i).scaled(parse_series(coeff, q));
}

}  // namespace

TEST_SUITE("gausspoly") {

TEST_CASE("polynomials in countably many variables: shape and arithmetic") {
  auto q = FieldDescriptor::rationals();
  MultiPoly p = var(q, 1) + var(q, 2) * var(q, 2);
  CHECK(p.level() == 2);
  CHECK(MultiPoly::zero(q).is_zero());
  CHECK(MultiPoly::zero(q).level() == 0);
  CHECK(p - p == MultiPoly::zero(q));
  CHECK(p.pow(0) == MultiPoly::constant(HahnSeries::one(q)));
  CHECK(p.pow(2) == p * p);

  // coefficient() pads/trims trailing zeros in the monomial key.
  CHECK(p.coefficient({1}) == HahnSeries::one(q));
  CHECK(p.coefficient({0, 2}) == HahnSeries::one(q));
  CHECK(p.coefficient({0, 2, 0, 0}) == HahnSeries::one(q));
  CHECK(p.coefficient({1, 1}) == HahnSeries::zero(q));

  // Scaling by the zero series annihilates.
  CHECK(p.scaled(HahnSeries::zero(q)).is_zero());
}

TEST_CASE("Gauss norm takes the best coefficient valuation") {
  auto q = FieldDescriptor::rationals();
  // |t_1 + t^(1/2) t_2| = max(1, |t|^(1/2)) -> val 0
  MultiPoly a = var(q, 1) + times_series(q, "t^(1/2)", 2);
  CHECK(gauss_norm(a).val() == ExtRational(BigRat(0)));

  // |t^(1/2) t_1 + t^(3/4) t_2| -> val 1/2
  MultiPoly b = times_series(q, "t^(1/2)", 1) + times_series(q, "t^(3/4)", 2);
  CHECK(gauss_norm(b).val() == ExtRational(BigRat(1, 2)));

  CHECK(gauss_norm(MultiPoly::zero(q)).is_zero_norm());
}

TEST_CASE("dyadic scaling sequence: exponents, products, threshold") {
  auto q = FieldDescriptor::rationals();
  ScalingSequence xs = ScalingSequence::dyadic(q, 6);
  CHECK(xs.size() == 6);
  CHECK(xs.exponent(1) == BigRat(1, 2));
  CHECK(xs.exponent(2) == BigRat(1, 4));
  CHECK(xs.partial_sum(2) == BigRat(3, 4));
  CHECK(xs.partial_sum(4) == BigRat(15, 16));
  CHECK(xs.declared_bound() == BigRat(1));
  CHECK(xs.lambda_threshold() == BigRat(2));
  CHECK(xs.x(1) == parse_series("t^(1/2)", q));
  CHECK(xs.x_product(2) == parse_series("t^(3/4)", q));

  // |x_1 x_2 t_3| -> val 3/4
  MultiPoly m = var(q, 3).scaled(xs.x_product(2));
  CHECK(gauss_norm(m).val() == ExtRational(BigRat(3, 4)));
}

TEST_CASE("scaling sequences reject non-positive steps and bound violations") {
  auto q = FieldDescriptor::rationals();
  CHECK_THROWS_AS(ScalingSequence(q, {BigRat(0)}, BigRat(1)), std::invalid_argument);
  CHECK_THROWS_AS(ScalingSequence(q, {BigRat(-1, 2)}, BigRat(1)), std::invalid_argument);
  // Partial sums may touch the declared bound but never pass it.
  CHECK(ScalingSequence(q, {BigRat(1, 2), BigRat(1, 2)}, BigRat(1)).partial_sum(2) == BigRat(1));
  CHECK_THROWS_AS(ScalingSequence(q, {BigRat(1, 2), BigRat(2, 3)}, BigRat(1)),
                  std::invalid_argument);
  // A user sequence with its own bound is fine as long as sums stay below it.
  ScalingSequence user(q, {BigRat(1, 2), BigRat(1, 3)}, BigRat(7, 8));
  CHECK(user.partial_sum(2) == BigRat(5, 6));
  CHECK(user.lambda_threshold() == BigRat(15, 8));
}

TEST_CASE("the twist map sends t_n to t_n - x_n t_(n+1)") {
  auto q = FieldDescriptor::rationals();
  ScalingSequence xs = ScalingSequence::dyadic(q, 6);

  CHECK(apply_tau(var(q, 1), xs) ==
        var(q, 1) - var(q, 2).scaled(xs.x(1)));

  // Constants are fixed.
  MultiPoly c = MultiPoly::constant(parse_series("1 + t", q));
  CHECK(apply_tau(c, xs) == c);

  // tau(t_1 + x_1 t_2) telescopes to t_1 - x_1 x_2 t_3.
  MultiPoly y1 = var(q, 1) + var(q, 2).scaled(xs.x(1));
  CHECK(apply_tau(y1, xs) == var(q, 1) - var(q, 3).scaled(xs.x_product(2)));
}

TEST_CASE("the twist map is a ring homomorphism") {
  auto q = FieldDescriptor::rationals();
  ScalingSequence xs = ScalingSequence::dyadic(q, 8);
  Sampler rng(61);
  for (int trial = 0; trial < 25; ++trial) {
    MultiPoly a = rng.poly(q, 5, 4, 2, 2, 3);
    MultiPoly b = rng.poly(q, 5, 4, 2, 2, 3);
    CHECK(apply_tau(a + b, xs) == apply_tau(a, xs) + apply_tau(b, xs));
    CHECK(apply_tau(a * b, xs) == apply_tau(a, xs) * apply_tau(b, xs));
  }
}

TEST_CASE("the twist map preserves the Gauss norm") {
  auto q = FieldDescriptor::rationals();
  ScalingSequence xs = ScalingSequence::dyadic(q, 8);
  Sampler rng(67);
  for (int trial = 0; trial < 50; ++trial) {
    MultiPoly a = rng.poly(q, 6, 5, 3, 2, 3);
    CHECK(gauss_norm(apply_tau(a, xs)) == gauss_norm(a));
  }
}

TEST_CASE("partial preimages y'' accumulate scaled variables") {
  auto q = FieldDescriptor::rationals();
  ScalingSequence xs = ScalingSequence::dyadic(q, 6);

  MultiPoly y1 = build_ydp(1, xs);
  CHECK(y1 == var(q, 1) + var(q, 2).scaled(xs.x(1)));
  CHECK(y1.level() == 2);

  MultiPoly y2 = build_ydp(2, xs);
  CHECK(y2 == var(q, 1) + var(q, 2).scaled(xs.x(1)) + var(q, 3).scaled(xs.x_product(2)));
  CHECK(y2.level() == 3);
  CHECK(build_ydp(4, xs).level() == 5);
}

TEST_CASE("telescoping identity holds at every depth with the exact gap norm") {
  auto q = FieldDescriptor::rationals();
  ScalingSequence xs = ScalingSequence::dyadic(q, 8);
  for (std::size_t n = 1; n <= 6; ++n) {
    CAPTURE(n);
    TauIdentityResult r = tau_identity_check(n, xs);
    CHECK(r.holds);
    CHECK(r.gap_matches);
    CHECK(r.lhs == r.rhs);
    CHECK(r.gap_val == ExtRational(r.expected_gap_val));
    CHECK(r.expected_gap_val == xs.partial_sum(n + 1));
  }
  // Depth 3: tau(y'') = t_1 - (x_1 x_2 x_3 x_4) t_5 and the coefficient on
  // t_5 is exactly t^(15/16).
  TauIdentityResult r3 = tau_identity_check(3, xs);
  CHECK(r3.lhs.coefficient({0, 0, 0, 0, 1}) == -parse_series("t^(15/16)", q));
  CHECK(r3.expected_gap_val == BigRat(15, 16));
}

TEST_CASE("distance from shallower polynomials: the top monomial survives") {
  auto q = FieldDescriptor::rationals();
  ScalingSequence xs = ScalingSequence::dyadic(q, 8);

  // y' = 0 at depth 1: |y'' - 0| = |y''| = 1, i.e. val 0.
  ImageGapResult r0 = image_gap_certificate(MultiPoly::zero(q), 1, xs);
  CHECK(r0.monomial_untouched);
  CHECK(r0.holds);
  CHECK(r0.achieved_val == ExtRational(BigRat(0)));
  CHECK(r0.bound_val == BigRat(1, 2));

  // y' = t_1 at depth 2: |y'' - t_1| = |x_1| exactly.
  ImageGapResult r1 = image_gap_certificate(var(q, 1), 2, xs);
  CHECK(r1.monomial_untouched);
  CHECK(r1.holds);
  CHECK(r1.achieved_val == ExtRational(xs.partial_sum(1)));
  CHECK(r1.bound_val == xs.partial_sum(2));

  // A y' reaching into t_{n+1} is outside the certificate's domain.
  CHECK_THROWS_AS(image_gap_certificate(var(q, 3), 2, xs), std::invalid_argument);
}

TEST_CASE("distance bound holds for random shallower polynomials") {
  auto q = FieldDescriptor::rationals();
  ScalingSequence xs = ScalingSequence::dyadic(q, 8);
  Sampler rng(71);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      MultiPoly yp = rng.poly(q, static_cast<std::uint32_t>(n), 4, 2, 2, 3);
      ImageGapResult r = image_gap_certificate(yp, n, xs);
      CAPTURE(n);
      CHECK(r.monomial_untouched);
      CHECK(r.holds);
      CHECK(r.achieved_val <= ExtRational(r.bound_val));
    }
  }
}

}  // TEST_SUITE
