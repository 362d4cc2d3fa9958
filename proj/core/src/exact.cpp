#include "nonarch/exact.hpp"

namespace nonarch {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

BigInt pow_uint(std::uint32_t base, std::uint32_t exp) {
  BigInt b = base;
  return boost::multiprecision::pow(b, exp);
}

PAdicRational::PAdicRational(BigInt numerator, std::uint32_t denom_exponent,
                             std::uint32_t prime)
    : num_(std::move(numerator)), k_(denom_exponent), p_(prime) {
  if (!is_prime(prime)) {
    throw std::invalid_argument("PAdicRational: " + std::to_string(prime) +
                                " is not prime");
  }
  normalize_();
}

PAdicRational PAdicRational::integer(BigInt n, std::uint32_t prime) {
  return PAdicRational(std::move(n), 0, prime);
}

PAdicRational PAdicRational::zero(std::uint32_t prime) {
  return PAdicRational(BigInt(0), 0, prime);
}

void PAdicRational::normalize_() {
  if (num_ == 0) {
    k_ = 0;
    return;
  }
  while (k_ > 0 && num_ % p_ == 0) {
    num_ /= p_;
    --k_;
  }
}

void PAdicRational::check_same_prime_(const PAdicRational& rhs) const {
  if (p_ != rhs.p_) {
    throw std::invalid_argument("PAdicRational: mixed primes " +
                                std::to_string(p_) + " and " +
                                std::to_string(rhs.p_));
  }
}

PAdicRational PAdicRational::operator+(const PAdicRational& rhs) const {
  check_same_prime_(rhs);
  std::uint32_t k = std::max(k_, rhs.k_);
  BigInt n = num_ * pow_uint(p_, k - k_) + rhs.num_ * pow_uint(p_, k - rhs.k_);
  return PAdicRational(std::move(n), k, p_);
}

PAdicRational PAdicRational::operator-(const PAdicRational& rhs) const {
  return *this + (-rhs);
}

PAdicRational PAdicRational::operator-() const {
  return PAdicRational(-num_, k_, p_);
}

PAdicRational PAdicRational::scaled(const BigInt& n) const {
  return PAdicRational(num_ * n, k_, p_);
}

PAdicRational PAdicRational::div_p() const {
  return PAdicRational(num_, k_ + 1, p_);
}

PAdicRational PAdicRational::shifted(int power) const {
  if (power >= 0) {
    return PAdicRational(num_ * pow_uint(p_, static_cast<std::uint32_t>(power)),
                         k_, p_);
  }
  return PAdicRational(num_, k_ + static_cast<std::uint32_t>(-power), p_);
}

std::strong_ordering PAdicRational::operator<=>(const PAdicRational& rhs) const {
  check_same_prime_(rhs);
  // num/p^k vs num'/p^k': cross-multiply by the common power.
  std::uint32_t k = std::max(k_, rhs.k_);
  BigInt lhs_n = num_ * pow_uint(p_, k - k_);
  BigInt rhs_n = rhs.num_ * pow_uint(p_, k - rhs.k_);
  if (lhs_n < rhs_n) return std::strong_ordering::less;
  if (lhs_n > rhs_n) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool PAdicRational::operator==(const PAdicRational& rhs) const {
  return p_ == rhs.p_ && k_ == rhs.k_ && num_ == rhs.num_;
}

BigRat PAdicRational::to_rational() const {
  return BigRat(num_, pow_uint(p_, k_));
}

std::string PAdicRational::str() const {
  if (k_ == 0) return num_.str();
  return num_.str() + "/" + pow_uint(p_, k_).str();
}

ExtRational ExtRational::infinity() {
  ExtRational r;
  r.inf_ = true;
  return r;
}

const BigRat& ExtRational::finite() const {
  if (inf_) throw std::domain_error("ExtRational: value is infinite");
  return q_;
}

ExtRational ExtRational::operator+(const ExtRational& rhs) const {
  if (inf_ || rhs.inf_) return infinity();
  return ExtRational(q_ + rhs.q_);
}

ExtRational ExtRational::operator-(const ExtRational& rhs) const {
  if (rhs.inf_) {
    throw std::domain_error("ExtRational: cannot subtract infinity");
  }
  if (inf_) return infinity();
  return ExtRational(q_ - rhs.q_);
}

std::strong_ordering ExtRational::operator<=>(const ExtRational& rhs) const {
  if (inf_ && rhs.inf_) return std::strong_ordering::equal;
  if (inf_) return std::strong_ordering::greater;
  if (rhs.inf_) return std::strong_ordering::less;
  if (q_ < rhs.q_) return std::strong_ordering::less;
  if (q_ > rhs.q_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool ExtRational::operator==(const ExtRational& rhs) const {
  return (*this <=> rhs) == std::strong_ordering::equal;
}

std::string ExtRational::str() const {
  if (inf_) return "inf";
  return q_.str();
}

ExtRational min(const ExtRational& a, const ExtRational& b) {
  return a <= b ? a : b;
}

ExtRational max(const ExtRational& a, const ExtRational& b) {
  return a >= b ? a : b;
}

std::string LogNorm::str() const {
  if (val_.is_infinite()) return "|.|=0";
  return "rho^(" + val_.str() + ")";
}

}  // namespace nonarch
