#include <doctest.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "nonarch/sampling.hpp"
#include "nonarch/series_text.hpp"

using namespace nonarch;

TEST_SUITE("series_text") {

TEST_CASE("formatter output parses back to the same series") {
  auto q = FieldDescriptor::rationals();
  auto f4 = FieldDescriptor::gf(2, 2);
  auto f9 = FieldDescriptor::gf(3, 2);
  struct Case {
    FieldPtr field;
    std::string text;
  };
  std::vector<Case> cases = {
      {q, "0"},
      {q, "1"},
      {q, "t"},
      {q, "t + t^(3/2) + O(t^4)"},
      {q, "3/2 - 2*t^(1/3) + t^2"},
      {q, "t^(-1) + 2/3"},
      {q, "O(t^2)"},
      {q, "-t + t^2"},
      {f4, "g*t^(-1) + (1+g)*t^(3/2)"},
      {f4, "1 + g*t + O(t^5)"},
      {f9, "2*t + (1+2*g)*t^2"},
      {f9, "g^1*t"},  // non-canonical spelling, round-trips through canonical form
  };
  for (const auto& c : cases) {
    CAPTURE(c.text);
    HahnSeries f = parse_series(c.text, c.field);
    CHECK(parse_series(f.str(), c.field) == f);
    CHECK(format_series(f) == f.str());
  }
}

TEST_CASE("canonical renderings are stable") {
  auto q = FieldDescriptor::rationals();
  CHECK(parse_series("t^2+t", q).str() == "t + t^2");
  CHECK(parse_series("  t +  O( t^4 ) + t^(3/2)", q).str() == "t + t^(3/2) + O(t^4)");
  CHECK(parse_series("0", q).str() == "0");
  CHECK(parse_series("-1/2 + t", q).str() == "-1/2 + t");
  // Two O(...) terms combine by min.
  CHECK(parse_series("t + O(t^5) + O(t^3)", q).str() == "t + O(t^3)");
  // O(1) uses the constant spelling.
  CHECK(parse_series("O(1)", q).str() == "O(1)");
  CHECK(parse_series("O(1)", q).tail() == ExtRational(BigRat(0)));
}

TEST_CASE("coefficients over extensions parse in both atom and sum form") {
  auto f4 = FieldDescriptor::gf(2, 2);
  FieldElement g = FieldElement::generator(f4);
  HahnSeries a = parse_series("(1+g)*t", f4);
  REQUIRE(a.terms().size() == 1);
  CHECK(a.terms()[0].coeff == FieldElement::one(f4) + g);
  CHECK(parse_series("g^2*t", f4).terms()[0].coeff == g * g);
  // Integer coefficients reduce mod p.
  CHECK(parse_series("3*t", f4) == parse_series("t", f4));
  CHECK(parse_series("2*t", f4).is_exact_zero());
}

TEST_CASE("malformed input is rejected with invalid_argument") {
  auto q = FieldDescriptor::rationals();
  auto f2 = FieldDescriptor::gf(2, 1);
  for (const char* bad : {
           "",            // empty
           "t +",         // dangling operator
           "t t",         // missing operator
           "x + 1",       // unknown symbol
           "t^",          // missing exponent
           "t^(3/)",      // broken rational
           "1/0",         // zero denominator
           "O(t^2",       // unclosed O
           "O(-t)",       // O of a non-power
           "(1+g*t",      // unclosed coefficient group
       }) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_series(bad, q), std::invalid_argument);
  }
  // g only exists over extensions of degree >= 2.
  CHECK_THROWS_AS(parse_series("g*t", q), std::invalid_argument);
  CHECK_THROWS_AS(parse_series("g*t", f2), std::invalid_argument);
  // Rational coefficients make no sense in characteristic p.
  CHECK_THROWS_AS(parse_series("1/2 * t", f2), std::invalid_argument);
}

TEST_CASE("random series round-trip through text") {
  Sampler rng(53);
  std::vector<FieldPtr> fields = {
      FieldDescriptor::rationals(),
      FieldDescriptor::gf(2, 1),
      FieldDescriptor::gf(2, 2),
      FieldDescriptor::gf(3, 2),
  };
  for (const auto& field : fields) {
    std::uint32_t p = field->characteristic() == 0 ? 2 : field->characteristic();
    for (int trial = 0; trial < 50; ++trial) {
      HahnSeries f = rng.series(field, 5, -8, 8, p, 3);
      if (rng.coin()) f = f.truncated(ExtRational(rng.rational(-2, 9, 8)));
      CHECK(parse_series(f.str(), field) == f);
    }
  }
}

TEST_CASE("rational and extended-rational scalar parsing") {
  CHECK(parse_rational("3") == BigRat(3));
  CHECK(parse_rational("-9/4") == BigRat(-9, 4));
  CHECK(parse_rational(" 15/4 ") == BigRat(15, 4));
  CHECK_THROWS_AS(parse_rational("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);

  CHECK(parse_ext_rational("inf").is_infinite());
  CHECK(parse_ext_rational("-2/3") == ExtRational(BigRat(-2, 3)));
}

}  // TEST_SUITE
