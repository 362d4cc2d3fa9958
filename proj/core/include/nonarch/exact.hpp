#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace nonarch {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Raised when a value is asked for below the precision a truncated series
/// actually carries (e.g. the valuation of a series with no visible terms).
class precision_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool is_prime(std::uint32_t n);

/// p^k as an exact integer.
BigInt pow_uint(std::uint32_t base, std::uint32_t exp);

/**
 * Exact rational whose denominator is a power of a fixed prime p:
 * value = numerator / p^denom_exponent.
 *
 * Canonical form: p does not divide the numerator unless the exponent is 0,
 * and zero is stored as (0, 0). The type is closed under addition,
 * subtraction, integer scaling and division by p; it is the exponent algebra
 * for series with exponents in Z[1/p].
 */
class PAdicRational {
 public:
  PAdicRational(BigInt numerator, std::uint32_t denom_exponent, std::uint32_t prime);

  static PAdicRational integer(BigInt n, std::uint32_t prime);
  static PAdicRational zero(std::uint32_t prime);

  const BigInt& numerator() const { return num_; }
  std::uint32_t denom_exponent() const { return k_; }
  std::uint32_t prime() const { return p_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return k_ == 0; }

  PAdicRational operator+(const PAdicRational& rhs) const;
  PAdicRational operator-(const PAdicRational& rhs) const;
  PAdicRational operator-() const;

  /// Multiplication by an arbitrary integer.
  PAdicRational scaled(const BigInt& n) const;
  /// Division by p.
  PAdicRational div_p() const;
  /// Multiplication by p^power; power may be negative.
  PAdicRational shifted(int power) const;

  /// Total order as rationals. Mixed primes are rejected.
  std::strong_ordering operator<=>(const PAdicRational& rhs) const;
  bool operator==(const PAdicRational& rhs) const;

  BigRat to_rational() const;
  std::string str() const;

 private:
  void normalize_();
  void check_same_prime_(const PAdicRational& rhs) const;

  BigInt num_;
  std::uint32_t k_;
  std::uint32_t p_;
};

/// An exact rational or +infinity. +infinity absorbs addition and is greater
/// than every rational; it is the valuation of an exact zero.
class ExtRational {
 public:
  ExtRational() : inf_(false), q_(0) {}
  ExtRational(BigRat q) : inf_(false), q_(std::move(q)) {}
  ExtRational(long n) : inf_(false), q_(n) {}
  static ExtRational infinity();

  bool is_infinite() const { return inf_; }
  /// The finite value; throws if infinite.
  const BigRat& finite() const;

  ExtRational operator+(const ExtRational& rhs) const;
  /// Subtraction; infinite - finite = infinite, anything else involving
  /// infinity on the right is undefined and throws.
  ExtRational operator-(const ExtRational& rhs) const;

  std::strong_ordering operator<=>(const ExtRational& rhs) const;
  bool operator==(const ExtRational& rhs) const;

  std::string str() const;

 private:
  bool inf_;
  BigRat q_;
};

ExtRational min(const ExtRational& a, const ExtRational& b);
ExtRational max(const ExtRational& a, const ExtRational& b);

/**
 * A multiplicatively written nonarchimedean norm stored additively: the
 * value represents |x| = rho^val for a fixed normalization 0 < rho < 1
 * (rho = |t| throughout). Larger val means smaller norm; val = +infinity
 * encodes |x| = 0.
 */
class LogNorm {
 public:
  explicit LogNorm(ExtRational val) : val_(std::move(val)) {}

  /// Norm 1 (val 0), the multiplicative identity.
  static LogNorm one() { return LogNorm(ExtRational(0L)); }
  /// Norm 0 (val +infinity), the absorbing element.
  static LogNorm zero() { return LogNorm(ExtRational::infinity()); }

  const ExtRational& val() const { return val_; }
  bool is_zero_norm() const { return val_.is_infinite(); }

  /// Norm multiplication: vals add.
  LogNorm operator*(const LogNorm& rhs) const { return LogNorm(val_ + rhs.val_); }

  /// The ultrametric bound for |x + y|: max of norms, i.e. min of vals.
  LogNorm ultrametric_add(const LogNorm& rhs) const {
    return LogNorm(min(val_, rhs.val_));
  }

  /// Orders by norm magnitude: |a| < |b| iff val(a) > val(b).
  static std::strong_ordering norm_compare(const LogNorm& a, const LogNorm& b) {
    auto c = a.val_ <=> b.val_;
    if (c == std::strong_ordering::less) return std::strong_ordering::greater;
    if (c == std::strong_ordering::greater) return std::strong_ordering::less;
    return std::strong_ordering::equal;
  }
  bool norm_less(const LogNorm& rhs) const {
    return norm_compare(*this, rhs) == std::strong_ordering::less;
  }

  bool operator==(const LogNorm& rhs) const { return val_ == rhs.val_; }

  std::string str() const;

 private:
  ExtRational val_;
};

}  // namespace nonarch
