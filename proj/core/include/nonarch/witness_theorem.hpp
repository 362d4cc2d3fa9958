#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nonarch/berkovich.hpp"
#include "nonarch/exact.hpp"
#include "nonarch/field.hpp"
#include "nonarch/hahn.hpp"
#include "nonarch/report.hpp"

namespace nonarch {

/**
 * The exponent backbone d_0 = 1, d_i = 1 + sum_{j=1}^{i} p^j (i+1-j).
 * Three conditions make the whole construction work:
 *   (a) p never divides d_i;
 *   (b) the jumps d_{i+1} - p d_i are positive and nondecreasing
 *       (for the built-in formula they equal 1 + p i exactly);
 *   (c) p^{-i} d_i strictly increases and stays strictly below a declared
 *       bound (default p^2/(p-1)^2, the exact supremum for the formula).
 *
 * User-supplied values are accepted and validated; violations surface as
 * failing report checks, not exceptions.
 */
class DSequence {
 public:
  /// The formula values d_0..d_N with the canonical bound p^2/(p-1)^2.
  static DSequence standard(std::uint32_t p, std::size_t N);
  /// User-supplied d_1..d_N (d_0 fixed at 1); bound defaults to p^2/(p-1)^2.
  static DSequence from_values(std::uint32_t p, std::vector<BigInt> d,
                               std::optional<BigRat> declared_bound = std::nullopt);

  std::uint32_t prime() const { return p_; }
  /// Largest index N; entries are d(0) .. d(N).
  std::size_t count() const { return d_.size() - 1; }
  const BigInt& d(std::size_t i) const;
  /// p^{-i} d_i.
  BigRat scaled(std::size_t i) const;
  const BigRat& bound() const { return bound_; }
  bool from_formula() const { return from_formula_; }

  struct InvariantReport {
    bool coprime;          // (a)
    bool jumps;            // (b)
    bool scaled_monotone;  // (c) strict increase
    bool scaled_bounded;   // (c) strictly below the bound
    std::string detail;    // first violation, if any
    bool pass() const { return coprime && jumps && scaled_monotone && scaled_bounded; }
  };
  InvariantReport validate() const;

 private:
  DSequence(std::uint32_t p, std::vector<BigInt> d, BigRat bound, bool from_formula);

  std::uint32_t p_;
  std::vector<BigInt> d_;  // d_[i] = d_i, i = 0..N
  BigRat bound_;
  bool from_formula_;
};

enum class CoeffMode { kOnes, kGeneratorPowers };

/// c_0..c_count: all 1, or successive generator powers g^i of the field.
/// Every c_i is nonzero by construction.
std::vector<FieldElement> witness_coefficients(const FieldPtr& field, CoeffMode mode,
                                               std::size_t count);

/// alpha_n = sum_{i=0}^{n} c_i t^{p^{-i} d_i}, an exact series.
HahnSeries witness_alpha(const DSequence& ds, std::size_t n,
                         const std::vector<FieldElement>& coeffs);

/// The radius exponent r_n-val = p^{-(n+1)} d_{n+1} as exact p-power data.
PAdicRational radius_val(const DSequence& ds, std::size_t n);

/// distance(alpha_{n+1}, alpha_n) against the radius formula.
struct GapCheck {
  ExtRational observed;
  PAdicRational expected;
  bool holds;
};
GapCheck gap_check(const DSequence& ds, std::size_t n, const std::vector<FieldElement>& coeffs);

/// distance(Frob^n alpha_m, Frob^n alpha_n) against p^n * (r_n val), m > n.
GapCheck frobenius_gap_check(const DSequence& ds, std::size_t n, std::size_t m,
                             const std::vector<FieldElement>& coeffs);

/// alpha_n^{p^n}: integer exponents p^{n-i} d_i of which exactly one — d_n —
/// is prime to p.
struct PthPowerDecomposition {
  bool integer_exponents;
  std::vector<BigInt> exponents;        // as computed, ascending
  std::vector<BigInt> prime_to_p;       // the exponents p does not divide
  BigInt expected_unit;                 // d_n
  bool holds;
};
PthPowerDecomposition pth_power_decomposition(const DSequence& ds, std::size_t n,
                                              const std::vector<FieldElement>& coeffs);

/**
 * The differential-bound exponent e_n = p^{-1} d_{n+1} - d_n + 1, checked
 * against its two equivalent forms: p^n (r_n val) + 1 - d_n and the closed
 * form (1 + p n + p)/p. The e_n march upward in steps of exactly 1, which is
 * the finitary content of the seminorm collapsing to 0.
 */
struct KahlerBound {
  PAdicRational e;            // defining expression
  BigRat closed_form;         // (1 + p n + p)/p
  bool matches_closed_form;
  bool matches_gap_relation;  // e == p^n (r_n val) + 1 - d_n
};
KahlerBound kahler_bound(const DSequence& ds, std::size_t n);

/**
 * The quasi-nilpotence estimate at level n, with alpha_m (m > n) standing in
 * for the chain limit: |alpha_m^{p^n} - alpha_n^{p^n}| must land exactly on
 * the bound exponent p^n (r_n val) = d_{n+1}/p.
 */
struct QuasinilpotenceCheck {
  GapCheck gap;
  PAdicRational bound_exponent;  // d_{n+1}/p
};
QuasinilpotenceCheck quasinilpotence_check(const DSequence& ds, std::size_t n, std::size_t m,
                                           const std::vector<FieldElement>& coeffs);

/// The nested chain: disc n has center alpha_n and radius val r_n. The
/// declaration carries the exact limit (the declared bound of the
/// d-sequence), wandering centers, and an empty algebraic intersection —
/// the last is an assumption, recorded as such.
DiscChain witness_chain(const DSequence& ds, const std::vector<FieldElement>& coeffs);

struct TheoremConfig {
  std::uint32_t p = 2;
  std::size_t n = 10;  // N: build alpha_0..alpha_N
  CoeffMode mode = CoeffMode::kOnes;
  std::uint32_t ext_degree = 2;  // field degree for generator-powers mode
  std::vector<BigInt> user_d;    // optional replacement for the formula values
};

/// Run every check family over all valid indices and assemble the report.
Report run_theorem(const TheoremConfig& config);

}  // namespace nonarch
