#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nonarch/exact.hpp"
#include "nonarch/hahn.hpp"

namespace nonarch {

/**
 * Multivariate polynomial in t_1, t_2, ... with series coefficients over a
 * common ground field, normalized so that monomial exponent vectors carry no
 * trailing zeros (the constant term has the empty vector). The level is the
 * highest variable index that actually occurs; equality is semantic, so the
 * same polynomial built at different nominal levels compares equal.
 */
class MultiPoly {
 public:
  using Monomial = std::vector<std::uint32_t>;
  using TermMap = std::map<Monomial, HahnSeries>;

  MultiPoly(FieldPtr ground, TermMap terms);

  static MultiPoly zero(const FieldPtr& ground);
  static MultiPoly constant(HahnSeries c);
  /// t_index (1-based), with coefficient 1.
  static MultiPoly variable(const FieldPtr& ground, std::size_t index);

  const FieldPtr& ground() const { return ground_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Highest variable index occurring in any monomial (0 for constants).
  std::size_t level() const;

  MultiPoly operator+(const MultiPoly& rhs) const;
  MultiPoly operator-(const MultiPoly& rhs) const;
  MultiPoly operator-() const;
  MultiPoly operator*(const MultiPoly& rhs) const;
  MultiPoly scaled(const HahnSeries& c) const;
  MultiPoly pow(std::uint32_t k) const;

  /// Coefficient of the given monomial (trailing zeros ignored); zero series
  /// if absent.
  HahnSeries coefficient(const Monomial& mono) const;

  bool operator==(const MultiPoly& rhs) const;
  bool operator!=(const MultiPoly& rhs) const { return !(*this == rhs); }

  std::string str() const;

 private:
  void normalize_();

  FieldPtr ground_;
  TermMap terms_;
};

/// Gauss norm: min over monomials of the coefficient valuation (so the max of
/// the coefficient norms). Zero polynomial has norm 0 (val +infinity).
/// Coefficients of indeterminate valuation raise precision_error.
LogNorm gauss_norm(const MultiPoly& P);

/**
 * The scaling data x_1, x_2, ...: monomials x_i = t^{e_i} in the ground field
 * with e_i > 0 and every partial sum e_1 + ... + e_n at or below a declared
 * bound (so the product x_1 x_2 ... never shrinks to norm 0).
 */
class ScalingSequence {
 public:
  ScalingSequence(FieldPtr ground, std::vector<BigRat> exponents, BigRat declared_bound);

  /// e_i = 2^-i for i = 1..count, bound 1 (the partial sums 1 - 2^-n).
  static ScalingSequence dyadic(const FieldPtr& ground, std::size_t count);

  std::size_t size() const { return exponents_.size(); }
  const FieldPtr& ground() const { return ground_; }
  /// e_i, 1-based.
  const BigRat& exponent(std::size_t i) const;
  /// e_1 + ... + e_n (n = 0 gives 0).
  BigRat partial_sum(std::size_t n) const;
  const BigRat& declared_bound() const { return bound_; }
  /// A valuation strictly above every partial sum: declared bound + 1. Any
  /// element with valuation at or beyond this is smaller in norm than every
  /// product x_1...x_n.
  BigRat lambda_threshold() const { return bound_ + 1; }

  /// x_i as a series: t^{e_i}.
  HahnSeries x(std::size_t i) const;
  /// x_1 x_2 ... x_n = t^{e_1+...+e_n} (n = 0 gives 1).
  HahnSeries x_product(std::size_t n) const;

 private:
  FieldPtr ground_;
  std::vector<BigRat> exponents_;
  BigRat bound_;
};

/// Substitute t_n -> t_n - x_n t_{n+1} in every variable simultaneously and
/// expand. Needs scaling exponents up to P's level.
MultiPoly apply_tau(const MultiPoly& P, const ScalingSequence& xs);

/// y'' = t_1 + x_1 t_2 + x_1 x_2 t_3 + ... + (x_1...x_n) t_{n+1}; level n+1.
MultiPoly build_ydp(std::size_t n, const ScalingSequence& xs);

/**
 * The telescoping identity: tau(y'') = t_1 - (x_1...x_{n+1}) t_{n+2},
 * checked by exact polynomial equality, plus the norm of what tau moved:
 * gauss_norm(tau(y'') - t_1) should sit exactly at val e_1 + ... + e_{n+1}.
 */
struct TauIdentityResult {
  bool holds;
  bool gap_matches;
  MultiPoly lhs;              // tau(y'')
  MultiPoly rhs;              // t_1 - (x_1...x_{n+1}) t_{n+2}
  ExtRational gap_val;        // val of gauss_norm(tau(y'') - t_1)
  BigRat expected_gap_val;    // e_1 + ... + e_{n+1}
};
TauIdentityResult tau_identity_check(std::size_t n, const ScalingSequence& xs);

/**
 * Distance-from-image certificate: for any y' in t_1..t_n, the difference
 * y'' - y' keeps the monomial (x_1...x_n) t_{n+1} untouched, so
 * |y'' - y'| >= |x_1...x_n|. Returns the achieved norm value and the bound.
 */
struct ImageGapResult {
  bool monomial_untouched;
  bool holds;
  ExtRational achieved_val;  // val of |y'' - y'|
  BigRat bound_val;          // e_1 + ... + e_n
};
ImageGapResult image_gap_certificate(const MultiPoly& yprime, std::size_t n,
                                     const ScalingSequence& xs);

}  // namespace nonarch
