#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "nonarch/hahn.hpp"
#include "nonarch/sampling.hpp"
#include "nonarch/series_text.hpp"

using namespace nonarch;

namespace {

HahnSeries q_series(const std::string& text) {
  return parse_series(text, FieldDescriptor::rationals());
}

HahnSeries gf_series(const std::string& text, std::uint32_t p, std::uint32_t m = 1) {
  return parse_series(text, FieldDescriptor::gf(p, m));
}

}  // namespace

TEST_SUITE("hahn") {

TEST_CASE("construction normalizes: cancellation, sorting, tail clipping") {
  auto q = FieldDescriptor::rationals();
  FieldElement c = FieldElement::from_integer(q, BigInt(5));

  // Terms at the same exponent combine; a full cancellation is exact zero.
  HahnSeries cancel(q, {{BigRat(1), c}, {BigRat(1), -c}});
  CHECK(cancel.is_exact_zero());
  CHECK(cancel == HahnSeries::zero(q));

  // Terms come out sorted by exponent regardless of input order.
  HahnSeries unsorted(q, {{BigRat(3, 2), FieldElement::one(q)}, {BigRat(1), FieldElement::one(q)}});
  REQUIRE(unsorted.terms().size() == 2);
  CHECK(unsorted.terms()[0].exponent == BigRat(1));
  CHECK(unsorted.terms()[1].exponent == BigRat(3, 2));

  // A term at or above the tail is unknowable and is dropped.
  HahnSeries clipped(q, {{BigRat(2), FieldElement::one(q)}}, ExtRational(BigRat(2)));
  CHECK_FALSE(clipped.has_visible_terms());
  CHECK(clipped.tail() == ExtRational(BigRat(2)));
  CHECK(clipped.str() == "O(t^2)");

  // Zero coefficients are dropped.
  HahnSeries zeros(q, {{BigRat(1), FieldElement::zero(q)}});
  CHECK(zeros.is_exact_zero());
}

TEST_CASE("squaring in characteristic 2 kills the cross term") {
  HahnSeries f = gf_series("t + t^(3/2)", 2);
  CHECK(f * f == gf_series("t^2 + t^3", 2));
}

TEST_CASE("product over GF(3) with fractional exponents") {
  HahnSeries a = gf_series("t^(1/2) + t", 3);
  HahnSeries b = gf_series("t^(1/2) + 2*t", 3);
  // Cross terms: (1+2) t^(3/2) = 0.
  CHECK(a * b == gf_series("t + 2*t^2", 3));
}

TEST_CASE("additive and multiplicative identities") {
  auto q = FieldDescriptor::rationals();
  HahnSeries f = q_series("3/2 - 2*t^(1/3) + t^2");
  CHECK(f + HahnSeries::zero(q) == f);
  CHECK(f * HahnSeries::one(q) == f);
  CHECK((f - f).is_exact_zero());
  CHECK(f + (-f) == HahnSeries::zero(q));
}

TEST_CASE("tails: addition keeps the worse bound, truncation only lowers") {
  auto q = FieldDescriptor::rationals();
  HahnSeries f = q_series("t + O(t^3)");
  HahnSeries g = q_series("t^2 + O(t^5)");
  CHECK((f + g).tail() == ExtRational(BigRat(3)));
  CHECK((f + g).str() == "t + t^2 + O(t^3)");
  CHECK(f.truncated(ExtRational(BigRat(2))).tail() == ExtRational(BigRat(2)));
  // Raising the bound is impossible: truncation takes the min.
  CHECK(f.truncated(ExtRational(BigRat(7))).tail() == ExtRational(BigRat(3)));
}

TEST_CASE("tails: multiplication shifts each bound by the other valuation") {
  auto q = FieldDescriptor::rationals();
  HahnSeries f = q_series("t + O(t^3)");       // val 1, tail 3
  HahnSeries g = q_series("t^2 + O(t^5)");     // val 2, tail 5
  // min(3 + 2, 5 + 1) = 5
  CHECK((f * g).tail() == ExtRational(BigRat(5)));
  CHECK((f * g).str() == "t^3 + O(t^5)");
}

TEST_CASE("multiplying by an indeterminate-valuation series is refused") {
  auto q = FieldDescriptor::rationals();
  HahnSeries unknown = HahnSeries::unknown(q, ExtRational(BigRat(2)));
  HahnSeries f = q_series("1 + t");
  CHECK_THROWS_AS(unknown * f, precision_error);
  // The exact zero is absorbing even against inexact series.
  CHECK((HahnSeries::zero(q) * f).is_exact_zero());
  CHECK((HahnSeries::zero(q) * unknown).is_exact_zero());
}

TEST_CASE("inverting a monomial is exact") {
  auto q = FieldDescriptor::rationals();
  HahnSeries t = HahnSeries::variable(q);
  HahnSeries inv = t.invert(BigRat(10));
  CHECK(inv == q_series("t^(-1)"));
  CHECK(inv.is_exact());
  CHECK((t * inv) == HahnSeries::one(q));
}

TEST_CASE("inverting 1 + t over GF(2) to precision 4") {
  HahnSeries f = gf_series("1 + t", 2);
  CHECK(f.invert(BigRat(4)) == gf_series("1 + t + t^2 + t^3 + O(t^4)", 2));
}

TEST_CASE("inversion rejects series without a visible leading term") {
  auto q = FieldDescriptor::rationals();
  CHECK_THROWS_AS(HahnSeries::zero(q).invert(BigRat(4)), std::domain_error);
  CHECK_THROWS_AS(HahnSeries::unknown(q, ExtRational(BigRat(2))).invert(BigRat(4)),
                  precision_error);
}

TEST_CASE("inverse times original is 1 up to the requested precision") {
  Sampler rng(31);
  auto q = FieldDescriptor::rationals();
  for (int trial = 0; trial < 40; ++trial) {
    HahnSeries f = rng.nonzero_series(q, 4, -5, 5, 2, 2);
    BigRat target(rng.range(1, 6));
    HahnSeries g = f.invert(target);
    HahnSeries diff = f * g - HahnSeries::one(q);
    // f g = 1 + O(t^target): everything visible below target has cancelled.
    CHECK_FALSE(diff.has_visible_terms());
    CHECK(diff.tail() >= ExtRational(target));
  }
}

TEST_CASE("Frobenius scales exponents by p and its inverse undoes it") {
  HahnSeries f = gf_series("t^(3/2)", 2);
  CHECK(f.frobenius() == gf_series("t^3", 2));

  HahnSeries a1 = gf_series("t + t^(3/2)", 2);
  CHECK(a1.frobenius_power(2) == gf_series("t^4 + t^6", 2));
  CHECK(a1.frobenius_power(-1).frobenius_power(1) == a1);
  CHECK(a1.frobenius_power(0) == a1);

  // Tails scale with the exponents.
  HahnSeries g = gf_series("t + O(t^2)", 2);
  CHECK(g.frobenius().tail() == ExtRational(BigRat(4)));
  CHECK(g.frobenius_inverse().tail() == ExtRational(BigRat(1)));

  CHECK_THROWS_AS(q_series("t").frobenius(), std::logic_error);
}

TEST_CASE("Frobenius is a ring homomorphism on random series") {
  Sampler rng(37);
  for (std::uint32_t p : {2u, 3u}) {
    auto field = FieldDescriptor::gf(p, 2);
    for (int trial = 0; trial < 30; ++trial) {
      HahnSeries f = rng.series(field, 4, -4, 6, p, 2);
      HahnSeries g = rng.series(field, 4, -4, 6, p, 2);
      CHECK((f + g).frobenius() == f.frobenius() + g.frobenius());
      if (f.has_visible_terms() && g.has_visible_terms()) {
        CHECK((f * g).frobenius() == f.frobenius() * g.frobenius());
      }
      CHECK(f.frobenius().frobenius_inverse() == f);
    }
  }
}

TEST_CASE("valuation reads the leading exponent") {
  CHECK(q_series("t^(3/2) + t^2").valuation() == ExtRational(BigRat(3, 2)));
  CHECK(HahnSeries::zero(FieldDescriptor::rationals()).valuation().is_infinite());
  CHECK(q_series("t^(-1) + 2/3").valuation() == ExtRational(BigRat(-1)));
  // No visible terms and a finite tail: the valuation is indeterminate.
  CHECK_THROWS_AS(q_series("O(t^2)").valuation(), precision_error);
}

TEST_CASE("valuation adds under multiplication") {
  Sampler rng(41);
  auto q = FieldDescriptor::rationals();
  auto f9 = FieldDescriptor::gf(3, 2);
  for (int trial = 0; trial < 60; ++trial) {
    const auto& field = (trial % 2 == 0) ? q : f9;
    HahnSeries f = rng.nonzero_series(field, 4, -6, 6, 3, 2);
    HahnSeries g = rng.nonzero_series(field, 4, -6, 6, 3, 2);
    CHECK((f * g).valuation() == f.valuation() + g.valuation());
  }
}

TEST_CASE("ultrametric inequality for the valuation of a sum") {
  Sampler rng(43);
  auto q = FieldDescriptor::rationals();
  for (int trial = 0; trial < 60; ++trial) {
    HahnSeries f = rng.nonzero_series(q, 4, -6, 6, 2, 2);
    HahnSeries g = rng.nonzero_series(q, 4, -6, 6, 2, 2);
    CHECK((f + g).valuation() >= min(f.valuation(), g.valuation()));
  }
}

TEST_CASE("distance is the norm of the difference") {
  HahnSeries a0 = gf_series("t", 2);
  HahnSeries a1 = gf_series("t + t^(3/2)", 2);
  HahnSeries a2 = gf_series("t + t^(3/2) + t^(9/4)", 2);
  CHECK(distance(a1, a0).val() == ExtRational(BigRat(3, 2)));
  CHECK(distance(a2, a1).val() == ExtRational(BigRat(9, 4)));
  CHECK(distance(a1, a1).is_zero_norm());
  // Symmetric.
  CHECK(distance(a0, a1).val() == distance(a1, a0).val());
  // Indeterminate difference: both known only to O(t^2) with equal visible parts.
  CHECK_THROWS_AS(distance(gf_series("t + O(t^2)", 2), gf_series("t + O(t^2)", 2)),
                  precision_error);
}

TEST_CASE("derivative in characteristic zero") {
  CHECK(q_series("t^2").derivative() == q_series("2*t"));
  CHECK(q_series("t^(1/2)").derivative() == q_series("1/2 * t^(-1/2)"));
  CHECK(q_series("7").derivative().is_exact_zero());
}

TEST_CASE("derivative in characteristic p needs integer exponents") {
  CHECK(gf_series("t^2", 3).derivative() == gf_series("2*t", 3));
  // Exponent divisible by p: the term dies.
  CHECK(gf_series("t^3", 3).derivative().is_exact_zero());
  CHECK_THROWS_AS(gf_series("t^(3/2)", 2).derivative(), std::logic_error);
}

TEST_CASE("the derivative loses at most one unit of valuation") {
  DerivativeBound b = derivative_bound_check(q_series("t^(1/3) + t"));
  CHECK(b.holds);
  CHECK(b.val_f == ExtRational(BigRat(1, 3)));
  CHECK(b.val_df == ExtRational(BigRat(-2, 3)));
  CHECK(b.val_df == b.val_f - ExtRational(BigRat(1)));

  // Constants: the derivative is zero, the bound holds with room to spare.
  CHECK(derivative_bound_check(q_series("5")).holds);
  CHECK(derivative_bound_check(HahnSeries::zero(FieldDescriptor::rationals())).holds);
}

TEST_CASE("scaling and shifting act on coefficients and exponents") {
  auto q = FieldDescriptor::rationals();
  HahnSeries f = q_series("t + t^2");
  CHECK(f.shifted(BigRat(1, 2)) == q_series("t^(3/2) + t^(5/2)"));
  CHECK(f.scaled(FieldElement::from_integer(q, BigInt(3))) == q_series("3*t + 3*t^2"));
  CHECK(f.scaled(FieldElement::zero(q)).is_exact_zero());
}

TEST_CASE("series equality is canonical-form equality") {
  auto q = FieldDescriptor::rationals();
  CHECK(q_series("t + t^2") == q_series("t^2 + t"));
  CHECK(q_series("t + O(t^3)") != q_series("t"));
  CHECK(q_series("0") == HahnSeries::zero(q));
  // Same terms over different fields are different series.
  CHECK(q_series("t") != gf_series("t", 2));
}

TEST_CASE("mixed-field arithmetic is rejected") {
  CHECK_THROWS_AS(q_series("t") + gf_series("t", 2), std::invalid_argument);
  CHECK_THROWS_AS(q_series("t") * gf_series("t", 2), std::invalid_argument);
}

}  // TEST_SUITE
