#include "nonarch/field.hpp"

#include <algorithm>

namespace nonarch {

namespace {

// Dense GF(p)[x] helpers on coefficient vectors a_0..a_deg (may carry
// leading zeros; degree is recomputed where it matters).

int poly_degree(const std::vector<std::uint32_t>& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) {
    if (f[static_cast<std::size_t>(i)] != 0) return i;
  }
  return -1;
}

std::uint32_t mod_inverse_prime(std::uint32_t a, std::uint32_t p) {
  // Fermat: a^(p-2) mod p.
  std::uint64_t result = 1, base = a % p;
  std::uint32_t e = p - 2;
  while (e > 0) {
    if (e & 1u) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

// f mod g over GF(p); g monic of degree dg.
std::vector<std::uint32_t> poly_mod(std::vector<std::uint32_t> f,
                                    const std::vector<std::uint32_t>& g,
                                    std::uint32_t p) {
  int dg = poly_degree(g);
  for (int i = poly_degree(f); i >= dg && dg >= 0; i = poly_degree(f)) {
    std::uint64_t c = f[static_cast<std::size_t>(i)];
    int shift = i - dg;
    for (int j = 0; j <= dg; ++j) {
      std::uint64_t sub = c * g[static_cast<std::size_t>(j)] % p;
      std::uint64_t cur = f[static_cast<std::size_t>(j + shift)];
      f[static_cast<std::size_t>(j + shift)] = static_cast<std::uint32_t>((cur + p - sub) % p);
    }
  }
  return f;
}

std::vector<std::uint32_t> poly_mul_mod(const std::vector<std::uint32_t>& a,
                                        const std::vector<std::uint32_t>& b,
                                        const std::vector<std::uint32_t>& modulus,
                                        std::uint32_t p) {
  std::vector<std::uint32_t> prod(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = static_cast<std::uint32_t>(
          (prod[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
  }
  return poly_mod(std::move(prod), modulus, p);
}

}  // namespace

bool gf_poly_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
  int deg = poly_degree(poly);
  if (deg <= 0) return false;
  if (deg == 1) return true;
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (int dd = 1; dd * 2 <= deg; ++dd) {
    BigInt count = pow_uint(p, static_cast<std::uint32_t>(dd));
    for (BigInt enc = 0; enc < count; ++enc) {
      std::vector<std::uint32_t> div(static_cast<std::size_t>(dd) + 1, 0);
      BigInt e = enc;
      for (int i = 0; i < dd; ++i) {
        div[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(e % p);
        e /= p;
      }
      div[static_cast<std::size_t>(dd)] = 1;
      if (poly_degree(poly_mod(poly, div, p)) < 0) return false;
    }
  }
  return true;
}

std::shared_ptr<const FieldDescriptor> FieldDescriptor::rationals() {
  static const std::shared_ptr<const FieldDescriptor> q(
      new FieldDescriptor(0, 1, {}));
  return q;
}

std::shared_ptr<const FieldDescriptor> FieldDescriptor::gf(std::uint32_t p,
                                                           std::uint32_t m) {
  if (!is_prime(p)) {
    throw std::invalid_argument("FieldDescriptor::gf: " + std::to_string(p) +
                                " is not prime");
  }
  if (m < 1) throw std::invalid_argument("FieldDescriptor::gf: degree must be >= 1");
  if (p >= (1u << 16) || m > 16) {
    throw std::invalid_argument("FieldDescriptor::gf: field too large");
  }
  if (m == 1) {
    return std::shared_ptr<const FieldDescriptor>(new FieldDescriptor(p, 1, {}));
  }
  // Smallest monic irreducible of degree m in base-p encoding order.
  BigInt count = pow_uint(p, m);
  for (BigInt enc = 0; enc < count; ++enc) {
    std::vector<std::uint32_t> cand(m + 1, 0);
    BigInt e = enc;
    for (std::uint32_t i = 0; i < m; ++i) {
      cand[i] = static_cast<std::uint32_t>(e % p);
      e /= p;
    }
    cand[m] = 1;
    if (gf_poly_irreducible(cand, p)) {
      return std::shared_ptr<const FieldDescriptor>(
          new FieldDescriptor(p, m, std::move(cand)));
    }
  }
  throw std::logic_error("FieldDescriptor::gf: no irreducible found");
}

bool FieldDescriptor::same(const FieldDescriptor& other) const {
  return char_ == other.char_ && degree_ == other.degree_ &&
         modulus_ == other.modulus_;
}

std::string FieldDescriptor::name() const {
  if (is_rationals()) return "QQ";
  if (degree_ == 1) return "GF(" + std::to_string(char_) + ")";
  return "GF(" + std::to_string(char_) + "^" + std::to_string(degree_) + ")";
}

FieldElement FieldElement::zero(const FieldPtr& field) {
  if (field->is_rationals()) return FieldElement(field, BigRat(0));
  return FieldElement(field, std::vector<std::uint32_t>(field->degree(), 0));
}

FieldElement FieldElement::one(const FieldPtr& field) {
  return from_integer(field, 1);
}

FieldElement FieldElement::from_integer(const FieldPtr& field, const BigInt& n) {
  if (field->is_rationals()) return FieldElement(field, BigRat(n));
  std::vector<std::uint32_t> coords(field->degree(), 0);
  BigInt r = n % field->characteristic();
  if (r < 0) r += field->characteristic();
  coords[0] = static_cast<std::uint32_t>(r);
  return FieldElement(field, std::move(coords));
}

FieldElement FieldElement::from_rational(const FieldPtr& field, BigRat q) {
  if (!field->is_rationals()) {
    throw std::invalid_argument("FieldElement: rational value in characteristic p");
  }
  return FieldElement(field, std::move(q));
}

FieldElement FieldElement::from_coords(const FieldPtr& field,
                                       std::vector<std::uint32_t> coords) {
  if (field->is_rationals()) {
    throw std::invalid_argument("FieldElement: coordinate vector over the rationals");
  }
  if (coords.size() != field->degree()) {
    throw std::invalid_argument("FieldElement: coordinate vector has wrong length");
  }
  for (auto c : coords) {
    if (c >= field->characteristic()) {
      throw std::invalid_argument("FieldElement: coordinate out of range");
    }
  }
  return FieldElement(field, std::move(coords));
}

FieldElement FieldElement::generator(const FieldPtr& field) {
  if (field->is_rationals()) {
    throw std::domain_error("FieldElement::generator: no generator over the rationals");
  }
  std::uint32_t p = field->characteristic();
  if (field->degree() >= 2) {
    std::vector<std::uint32_t> coords(field->degree(), 0);
    coords[1] = 1;
    return FieldElement(field, std::move(coords));
  }
  // Smallest primitive root mod p.
  for (std::uint32_t g = 1; g < p; ++g) {
    std::uint32_t order = 1;
    std::uint64_t acc = g;
    while (acc != 1) {
      acc = acc * g % p;
      ++order;
    }
    if (order == p - 1) return from_integer(field, g);
  }
  throw std::logic_error("FieldElement::generator: no primitive root found");
}

bool FieldElement::is_zero() const {
  if (field_->is_rationals()) return rat_ == 0;
  return std::all_of(coords_.begin(), coords_.end(),
                     [](std::uint32_t c) { return c == 0; });
}

bool FieldElement::is_one() const {
  if (field_->is_rationals()) return rat_ == 1;
  if (coords_.empty() || coords_[0] != 1) return false;
  return std::all_of(coords_.begin() + 1, coords_.end(),
                     [](std::uint32_t c) { return c == 0; });
}

void FieldElement::check_same_field_(const FieldElement& rhs) const {
  if (!field_->same(*rhs.field_)) {
    throw std::invalid_argument("FieldElement: mixed fields " + field_->name() +
                                " and " + rhs.field_->name());
  }
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
  check_same_field_(rhs);
  if (field_->is_rationals()) return FieldElement(field_, rat_ + rhs.rat_);
  std::uint32_t p = field_->characteristic();
  std::vector<std::uint32_t> out(coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    out[i] = (coords_[i] + rhs.coords_[i]) % p;
  }
  return FieldElement(field_, std::move(out));
}

FieldElement FieldElement::operator-() const {
  if (field_->is_rationals()) return FieldElement(field_, -rat_);
  std::uint32_t p = field_->characteristic();
  std::vector<std::uint32_t> out(coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    out[i] = (p - coords_[i]) % p;
  }
  return FieldElement(field_, std::move(out));
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
  return *this + (-rhs);
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
  check_same_field_(rhs);
  if (field_->is_rationals()) return FieldElement(field_, rat_ * rhs.rat_);
  std::uint32_t p = field_->characteristic();
  if (field_->degree() == 1) {
    std::uint64_t v = static_cast<std::uint64_t>(coords_[0]) * rhs.coords_[0] % p;
    return FieldElement(field_, std::vector<std::uint32_t>{static_cast<std::uint32_t>(v)});
  }
  auto prod = poly_mul_mod(coords_, rhs.coords_, field_->modulus(), p);
  prod.resize(field_->degree());
  return FieldElement(field_, std::move(prod));
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("FieldElement: inversion of zero");
  if (field_->is_rationals()) return FieldElement(field_, 1 / rat_);
  // a^(q-2) with q = p^m.
  BigInt q = pow_uint(field_->characteristic(), field_->degree());
  return pow(q - 2);
}

bool FieldElement::operator==(const FieldElement& rhs) const {
  if (!field_->same(*rhs.field_)) return false;
  if (field_->is_rationals()) return rat_ == rhs.rat_;
  return coords_ == rhs.coords_;
}

FieldElement FieldElement::scaled_integer(const BigInt& n) const {
  if (field_->is_rationals()) return FieldElement(field_, rat_ * BigRat(n));
  std::uint32_t p = field_->characteristic();
  BigInt r = n % p;
  if (r < 0) r += p;
  std::uint64_t s = static_cast<std::uint64_t>(static_cast<std::uint32_t>(r));
  std::vector<std::uint32_t> out(coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    out[i] = static_cast<std::uint32_t>(coords_[i] * s % p);
  }
  return FieldElement(field_, std::move(out));
}

FieldElement FieldElement::scaled_rational(const BigRat& q) const {
  if (!field_->is_rationals()) {
    throw std::domain_error("FieldElement: rational scaling in characteristic p");
  }
  return FieldElement(field_, rat_ * q);
}

FieldElement FieldElement::pow(const BigInt& e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElement acc = one(field_);
  FieldElement base = *this;
  BigInt k = e;
  while (k > 0) {
    if (k % 2 == 1) acc = acc * base;
    base = base * base;
    k /= 2;
  }
  return acc;
}

FieldElement FieldElement::frobenius() const {
  if (field_->is_rationals()) {
    throw std::domain_error("FieldElement: Frobenius in characteristic 0");
  }
  return pow(field_->characteristic());
}

FieldElement FieldElement::frobenius_inverse() const {
  if (field_->is_rationals()) {
    throw std::domain_error("FieldElement: Frobenius in characteristic 0");
  }
  // a^(p^(m-1)) is the unique p-th root: raising it to p gives a^(p^m) = a.
  FieldElement acc = *this;
  for (std::uint32_t i = 1; i < field_->degree(); ++i) {
    acc = acc.frobenius();
  }
  return acc;
}

const std::vector<std::uint32_t>& FieldElement::coords() const {
  if (field_->is_rationals()) {
    throw std::domain_error("FieldElement: no coordinates over the rationals");
  }
  return coords_;
}

const BigRat& FieldElement::rational() const {
  if (!field_->is_rationals()) {
    throw std::domain_error("FieldElement: not a rational element");
  }
  return rat_;
}

std::string FieldElement::str() const {
  if (field_->is_rationals()) return rat_.str();
  if (field_->degree() == 1) return std::to_string(coords_[0]);
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] == 0) continue;
    if (!first) out += "+";
    first = false;
    if (i == 0) {
      out += std::to_string(coords_[i]);
    } else {
      if (coords_[i] != 1) out += std::to_string(coords_[i]) + "*";
      out += (i == 1) ? "g" : "g^" + std::to_string(i);
    }
  }
  if (first) return "0";
  return out;
}

}  // namespace nonarch
