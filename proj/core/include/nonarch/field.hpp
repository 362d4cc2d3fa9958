#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "nonarch/exact.hpp"

namespace nonarch {

/**
 * Coefficient field: either GF(p^m) in polynomial basis over a deterministic
 * modulus, or the rationals for characteristic 0.
 *
 * The modulus for GF(p^m) is the monic irreducible of degree m over GF(p)
 * whose coefficient vector, read as the base-p encoding p^m + sum a_i p^i,
 * is smallest. The choice is a pure function of (p, m), so serialized
 * elements are portable across runs.
 *
 * Descriptors are immutable and held by shared_ptr.
 */
class FieldDescriptor {
 public:
  static std::shared_ptr<const FieldDescriptor> rationals();
  static std::shared_ptr<const FieldDescriptor> gf(std::uint32_t p, std::uint32_t m);

  std::uint32_t characteristic() const { return char_; }
  /// Extension degree m; 1 for prime fields and for the rationals.
  std::uint32_t degree() const { return degree_; }
  /// Modulus coefficients a_0..a_m (monic, a_m = 1); empty when degree is 1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  bool is_rationals() const { return char_ == 0; }
  bool same(const FieldDescriptor& other) const;
  std::string name() const;

 private:
  FieldDescriptor(std::uint32_t characteristic, std::uint32_t degree,
                  std::vector<std::uint32_t> modulus)
      : char_(characteristic), degree_(degree), modulus_(std::move(modulus)) {}

  std::uint32_t char_;
  std::uint32_t degree_;
  std::vector<std::uint32_t> modulus_;
};

using FieldPtr = std::shared_ptr<const FieldDescriptor>;

/// Whether the monic polynomial with coefficients a_0..a_m (a_m = 1) is
/// irreducible over GF(p). Trial division by every monic divisor candidate
/// of degree at most m/2.
bool gf_poly_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p);

/**
 * An element of a coefficient field, in canonical form: a reduced coordinate
 * vector over the polynomial basis for GF(p^m), or an exact rational for
 * characteristic 0. Values are immutable.
 */
class FieldElement {
 public:
  static FieldElement zero(const FieldPtr& field);
  static FieldElement one(const FieldPtr& field);
  static FieldElement from_integer(const FieldPtr& field, const BigInt& n);
  static FieldElement from_rational(const FieldPtr& field, BigRat q);
  static FieldElement from_coords(const FieldPtr& field, std::vector<std::uint32_t> coords);
  /// The class of x in GF(p^m) for m >= 2; the smallest primitive root for
  /// GF(p). Rejected for the rationals.
  static FieldElement generator(const FieldPtr& field);

  const FieldPtr& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  FieldElement operator+(const FieldElement& rhs) const;
  FieldElement operator-(const FieldElement& rhs) const;
  FieldElement operator-() const;
  FieldElement operator*(const FieldElement& rhs) const;
  /// Multiplicative inverse; zero is rejected.
  FieldElement inverse() const;
  bool operator==(const FieldElement& rhs) const;

  /// n . a for an integer n (repeated addition, computed directly).
  FieldElement scaled_integer(const BigInt& n) const;
  /// q . a for a rational q; characteristic 0 only.
  FieldElement scaled_rational(const BigRat& q) const;

  /// a^e for an integer exponent; negative exponents invert first.
  FieldElement pow(const BigInt& e) const;

  /// a^p. Characteristic p only.
  FieldElement frobenius() const;
  /// The unique b with b^p = a (the field is perfect). Characteristic p only.
  FieldElement frobenius_inverse() const;

  const std::vector<std::uint32_t>& coords() const;
  const BigRat& rational() const;

  std::string str() const;

 private:
  FieldElement(FieldPtr field, std::vector<std::uint32_t> coords)
      : field_(std::move(field)), coords_(std::move(coords)), rat_(0) {}
  FieldElement(FieldPtr field, BigRat q)
      : field_(std::move(field)), rat_(std::move(q)) {}

  void check_same_field_(const FieldElement& rhs) const;

  FieldPtr field_;
  std::vector<std::uint32_t> coords_;  // characteristic p, size = degree
  BigRat rat_;                         // characteristic 0
};

}  // namespace nonarch
