#pragma once

// Deterministic, seedable sample generators for randomized checks.
//
// Everything here is reproducible: the engine is std::mt19937_64 (whose
// output sequence is fully specified by the C++ standard) and all bounded
// draws go through `below`, which uses plain modulo reduction.  The small
// modulo bias is irrelevant for coverage-style testing and keeps the draw
// sequence identical on every platform.

#include <nonarch/exact.hpp>
#include <nonarch/field.hpp>
#include <nonarch/gausspoly.hpp>
#include <nonarch/hahn.hpp>

#include <cstdint>
#include <random>
#include <vector>

namespace nonarch {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t raw() { return engine_(); }

  // Uniform draw in [0, n).  n must be positive.
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }

  // Uniform draw in [lo, hi], inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool coin() { return below(2) == 1; }

  // Rational num/den with num in [lo, hi] and den in [1, max_den].
  BigRat rational(std::int64_t lo, std::int64_t hi, std::int64_t max_den) {
    return BigRat(BigInt(range(lo, hi)), BigInt(range(1, max_den)));
  }

  // Rational of the form num / base^j with num in [lo, hi], j in
  // [0, max_pow].  With base = p this lands in Z[1/p].
  BigRat denominator_power_rational(std::int64_t lo, std::int64_t hi,
                                    std::uint32_t base,
                                    std::uint32_t max_pow) {
    const BigInt den =
        pow_uint(base, static_cast<std::uint32_t>(below(max_pow + 1)));
    return BigRat(BigInt(range(lo, hi)), den);
  }

  // Arbitrary element of the coefficient field (zero allowed).
  FieldElement element(const FieldPtr& field) {
    if (field->is_rationals()) {
      return FieldElement::from_rational(field, rational(-6, 6, 4));
    }
    std::vector<std::uint32_t> coords(field->degree());
    for (auto& c : coords)
      c = static_cast<std::uint32_t>(below(field->characteristic()));
    return FieldElement::from_coords(field, coords);
  }

  FieldElement nonzero_element(const FieldPtr& field) {
    for (;;) {
      FieldElement e = element(field);
      if (!(e == FieldElement::zero(field))) return e;
    }
  }

  // Exact series (infinite tail) with up to max_terms monomials, exponents
  // num/base^j for num in [num_lo, num_hi], j in [0, den_pow_max].
  // Duplicate exponents merge during normalization; the result may be zero.
  HahnSeries series(const FieldPtr& field, std::size_t max_terms,
                    std::int64_t num_lo, std::int64_t num_hi,
                    std::uint32_t den_base, std::uint32_t den_pow_max) {
    const std::size_t count = 1 + below(max_terms);
    std::vector<SeriesTerm> terms;
    terms.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
      terms.push_back(SeriesTerm{
          denom_exponent_(num_lo, num_hi, den_base, den_pow_max),
          element(field)});
    }
    return HahnSeries(field, std::move(terms));
  }

  HahnSeries nonzero_series(const FieldPtr& field, std::size_t max_terms,
                            std::int64_t num_lo, std::int64_t num_hi,
                            std::uint32_t den_base,
                            std::uint32_t den_pow_max) {
    for (;;) {
      HahnSeries f = series(field, max_terms, num_lo, num_hi, den_base,
                            den_pow_max);
      if (f.has_visible_terms()) return f;
    }
  }

  // Nonzero polynomial of level <= max_level with at most max_monomials
  // monomials, variable degrees <= max_degree, and exact nonzero series
  // coefficients whose exponents live in Z[1/den_base].
  MultiPoly poly(const FieldPtr& ground, std::uint32_t max_level,
                 std::size_t max_monomials, std::uint32_t max_degree,
                 std::uint32_t den_base, std::uint32_t den_pow_max) {
    for (;;) {
      MultiPoly::TermMap terms;
      const std::size_t count = 1 + below(max_monomials);
      for (std::size_t i = 0; i < count; ++i) {
        const std::size_t len = below(max_level + 1);
        MultiPoly::Monomial mono(len);
        for (auto& d : mono)
          d = static_cast<std::uint32_t>(below(max_degree + 1));
        terms.insert_or_assign(
            std::move(mono),
            nonzero_series(ground, 3, -4, 8, den_base, den_pow_max));
      }
      MultiPoly p(ground, std::move(terms));
      if (!p.is_zero()) return p;
    }
  }

 private:
  BigRat denom_exponent_(std::int64_t lo, std::int64_t hi,
                         std::uint32_t base, std::uint32_t max_pow) {
    if (base < 2) return BigRat(BigInt(range(lo, hi)));
    return denominator_power_rational(lo, hi, base, max_pow);
  }

  std::mt19937_64 engine_;
};

}  // namespace nonarch
