#pragma once

#include <string>
#include <vector>

#include "nonarch/exact.hpp"
#include "nonarch/field.hpp"

namespace nonarch {

struct SeriesTerm {
  BigRat exponent;
  FieldElement coeff;
};

/**
 * Truncated generalized power series: a finite list of terms with strictly
 * increasing rational exponents and nonzero coefficients, plus a tail bound.
 * A series with tail beta is known modulo terms of exponent >= beta; an
 * infinite tail means the series is exact.
 *
 * Normalization is canonical: equal series have identical representations
 * (same field, same term list, same tail). Exponents may be negative
 * (Laurent-style); in characteristic p the operations used here keep them in
 * Z[1/p] but the type itself imposes no denominator restriction, so
 * characteristic-0 Puiseux exponents like 1/3 are representable too.
 *
 * Values are immutable; all operations return new series.
 */
class HahnSeries {
 public:
  HahnSeries(FieldPtr field, std::vector<SeriesTerm> terms,
             ExtRational tail = ExtRational::infinity());

  /// The exact zero series.
  static HahnSeries zero(const FieldPtr& field);
  /// A series with no visible terms known only modulo t^tail, i.e. O(t^tail).
  static HahnSeries unknown(const FieldPtr& field, ExtRational tail);
  static HahnSeries one(const FieldPtr& field);
  static HahnSeries monomial(const FieldPtr& field, BigRat exponent, FieldElement coeff);
  /// The series t.
  static HahnSeries variable(const FieldPtr& field);

  const FieldPtr& field() const { return field_; }
  const std::vector<SeriesTerm>& terms() const { return terms_; }
  const ExtRational& tail() const { return tail_; }

  bool is_exact() const { return tail_.is_infinite(); }
  bool is_exact_zero() const { return terms_.empty() && is_exact(); }
  bool has_visible_terms() const { return !terms_.empty(); }
  /// Leading (lowest-exponent) term; requires a visible term.
  const SeriesTerm& leading() const;

  HahnSeries operator+(const HahnSeries& rhs) const;
  HahnSeries operator-(const HahnSeries& rhs) const;
  HahnSeries operator-() const;
  /**
   * Exact product on visible terms with tail min(tail_f + val g, tail_g + val f).
   * An operand whose valuation is indeterminate (no visible terms yet a finite
   * tail) is refused rather than guessed at; an exact zero operand yields the
   * exact zero.
   */
  HahnSeries operator*(const HahnSeries& rhs) const;

  /// c . f
  HahnSeries scaled(const FieldElement& c) const;
  /// t^e . f
  HahnSeries shifted(const BigRat& e) const;
  /// Same series known only modulo t^new_tail (tail becomes the min).
  HahnSeries truncated(const ExtRational& new_tail) const;

  /**
   * Valuation: the leading exponent; +infinity for the exact zero. A series
   * with no visible terms and a finite tail has indeterminate valuation and
   * raises precision_error.
   */
  ExtRational valuation() const;
  LogNorm norm() const { return LogNorm(valuation()); }

  /**
   * Inverse by geometric-series expansion, targeting val(f g - 1) >=
   * target_precision (less if f's own tail does not support that much).
   * Requires a visible leading term. Terminating expansions (monomials)
   * return the exact inverse.
   */
  HahnSeries invert(const BigRat& target_precision) const;

  /// Term-wise p-th power: (q, c) -> (p q, c^p), tail p.beta. Characteristic p.
  HahnSeries frobenius() const;
  /// Term-wise p-th root: (q, c) -> (q/p, c^(1/p)), tail beta/p. Characteristic p.
  HahnSeries frobenius_inverse() const;
  /// frobenius applied n times (n >= 0) or frobenius_inverse -n times (n < 0).
  HahnSeries frobenius_power(int n) const;

  /**
   * Term-wise derivative d/dt: (q, c) -> (q - 1, q c). Defined for
   * characteristic 0, and for characteristic p when every exponent is an
   * integer (the term-wise rule is not a derivation on fractional exponents
   * there).
   */
  HahnSeries derivative() const;

  bool operator==(const HahnSeries& rhs) const;
  bool operator!=(const HahnSeries& rhs) const { return !(*this == rhs); }

  /// "t + t^(3/2) + O(t^4)" style rendering; inverse of the text parser.
  std::string str() const;

 private:
  void normalize_();
  void check_same_field_(const HahnSeries& rhs) const;
  /// Leading exponent if visible, otherwise the tail: a lower bound for the
  /// true valuation, used in precision propagation.
  ExtRational val_lower_bound_() const;

  FieldPtr field_;
  std::vector<SeriesTerm> terms_;
  ExtRational tail_;
};

/// |f - g| as a LogNorm; requires the difference to be determinate at its
/// leading term (precision_error otherwise).
LogNorm distance(const HahnSeries& f, const HahnSeries& g);

/// The derivation estimate |f'| <= |t|^-1 |f|, i.e. val(f') >= val(f) - 1.
/// Holds identically over trivially valued characteristic-0 coefficients.
struct DerivativeBound {
  bool holds;
  ExtRational val_f;
  ExtRational val_df;
};
DerivativeBound derivative_bound_check(const HahnSeries& f);

}  // namespace nonarch
