#include "nonarch/gausspoly.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace nonarch {

namespace {

void trim_trailing_zeros(MultiPoly::Monomial& m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
}

MultiPoly::Monomial monomial_product(const MultiPoly::Monomial& a,
                                     const MultiPoly::Monomial& b) {
  MultiPoly::Monomial out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

std::string monomial_str(const MultiPoly::Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "t_" + std::to_string(i + 1);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out;
}

}  // namespace

MultiPoly::MultiPoly(FieldPtr ground, TermMap terms)
    : ground_(std::move(ground)), terms_(std::move(terms)) {
  normalize_();
}

void MultiPoly::normalize_() {
  if (!ground_) throw std::invalid_argument("polynomial requires a ground field");
  TermMap canonical;
  for (auto& [mono, coeff] : terms_) {
    if (!coeff.field()->same(*ground_))
      throw std::invalid_argument("polynomial coefficient over a different ground field");
    if (coeff.is_exact_zero()) continue;
    Monomial key = mono;
    trim_trailing_zeros(key);
    auto it = canonical.find(key);
    if (it == canonical.end()) {
      canonical.emplace(std::move(key), coeff);
    } else {
      it->second = it->second + coeff;
      if (it->second.is_exact_zero()) canonical.erase(it);
    }
  }
  terms_ = std::move(canonical);
}

MultiPoly MultiPoly::zero(const FieldPtr& ground) { return MultiPoly(ground, {}); }

MultiPoly MultiPoly::constant(HahnSeries c) {
  FieldPtr ground = c.field();
  TermMap terms;
  terms.emplace(Monomial{}, std::move(c));
  return MultiPoly(std::move(ground), std::move(terms));
}

MultiPoly MultiPoly::variable(const FieldPtr& ground, std::size_t index) {
  if (index == 0) throw std::invalid_argument("variable indices are 1-based");
  Monomial m(index, 0);
  m[index - 1] = 1;
  TermMap terms;
  terms.emplace(std::move(m), HahnSeries::one(ground));
  return MultiPoly(ground, std::move(terms));
}

std::size_t MultiPoly::level() const {
  std::size_t level = 0;
  for (const auto& [mono, coeff] : terms_) level = std::max(level, mono.size());
  return level;
}

MultiPoly MultiPoly::operator+(const MultiPoly& rhs) const {
  if (!ground_->same(*rhs.ground_))
    throw std::invalid_argument("polynomials over different ground fields");
  TermMap out = terms_;
  for (const auto& [mono, coeff] : rhs.terms_) {
    auto it = out.find(mono);
    if (it == out.end()) {
      out.emplace(mono, coeff);
    } else {
      it->second = it->second + coeff;
      if (it->second.is_exact_zero()) out.erase(it);
    }
  }
  return MultiPoly(ground_, std::move(out));
}

MultiPoly MultiPoly::operator-() const {
  TermMap out = terms_;
  for (auto& [mono, coeff] : out) coeff = -coeff;
  return MultiPoly(ground_, std::move(out));
}

MultiPoly MultiPoly::operator-(const MultiPoly& rhs) const { return *this + (-rhs); }

MultiPoly MultiPoly::operator*(const MultiPoly& rhs) const {
  if (!ground_->same(*rhs.ground_))
    throw std::invalid_argument("polynomials over different ground fields");
  TermMap out;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : rhs.terms_) {
      Monomial mono = monomial_product(ma, mb);
      HahnSeries prod = ca * cb;
      auto it = out.find(mono);
      if (it == out.end()) {
        out.emplace(std::move(mono), std::move(prod));
      } else {
        it->second = it->second + prod;
        if (it->second.is_exact_zero()) out.erase(it);
      }
    }
  }
  return MultiPoly(ground_, std::move(out));
}

MultiPoly MultiPoly::scaled(const HahnSeries& c) const {
  if (c.is_exact_zero()) return zero(ground_);
  TermMap out;
  for (const auto& [mono, coeff] : terms_) out.emplace(mono, coeff * c);
  return MultiPoly(ground_, std::move(out));
}

MultiPoly MultiPoly::pow(std::uint32_t k) const {
  MultiPoly acc = constant(HahnSeries::one(ground_));
  for (std::uint32_t i = 0; i < k; ++i) acc = acc * *this;
  return acc;
}

HahnSeries MultiPoly::coefficient(const Monomial& mono) const {
  Monomial key = mono;
  trim_trailing_zeros(key);
  auto it = terms_.find(key);
  if (it == terms_.end()) return HahnSeries::zero(ground_);
  return it->second;
}

bool MultiPoly::operator==(const MultiPoly& rhs) const {
  if (!ground_->same(*rhs.ground_)) return false;
  if (terms_.size() != rhs.terms_.size()) return false;
  auto it = rhs.terms_.begin();
  for (const auto& [mono, coeff] : terms_) {
    if (mono != it->first) return false;
    if (!(coeff == it->second)) return false;
    ++it;
  }
  return true;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [mono, coeff] : terms_) {
    if (!out.empty()) out += " + ";
    const std::string ms = monomial_str(mono);
    if (ms.empty()) {
      out += "(" + coeff.str() + ")";
      continue;
    }
    if (coeff == HahnSeries::one(ground_)) {
      out += ms;
    } else {
      out += "(" + coeff.str() + ")*" + ms;
    }
  }
  return out;
}

LogNorm gauss_norm(const MultiPoly& P) {
  ExtRational best = ExtRational::infinity();
  for (const auto& [mono, coeff] : P.terms()) best = min(best, coeff.valuation());
  return LogNorm(best);
}

ScalingSequence::ScalingSequence(FieldPtr ground, std::vector<BigRat> exponents,
                                 BigRat declared_bound)
    : ground_(std::move(ground)), exponents_(std::move(exponents)), bound_(std::move(declared_bound)) {
  if (!ground_) throw std::invalid_argument("scaling sequence requires a ground field");
  BigRat sum(0);
  for (const auto& e : exponents_) {
    if (e <= 0) throw std::invalid_argument("scaling exponents must be positive");
    sum += e;
    if (sum > bound_)
      throw std::invalid_argument(
          "scaling exponent partial sums exceed the declared bound (product would shrink to "
          "norm 0)");
  }
}

ScalingSequence ScalingSequence::dyadic(const FieldPtr& ground, std::size_t count) {
  std::vector<BigRat> exps;
  exps.reserve(count);
  BigInt den = 2;
  for (std::size_t i = 1; i <= count; ++i) {
    exps.emplace_back(BigRat(BigInt(1), den));
    den *= 2;
  }
  return ScalingSequence(ground, std::move(exps), BigRat(1));
}

const BigRat& ScalingSequence::exponent(std::size_t i) const {
  if (i == 0 || i > exponents_.size())
    throw std::out_of_range("scaling sequence index out of range");
  return exponents_[i - 1];
}

BigRat ScalingSequence::partial_sum(std::size_t n) const {
  if (n > exponents_.size()) throw std::out_of_range("scaling sequence index out of range");
  BigRat sum(0);
  for (std::size_t i = 0; i < n; ++i) sum += exponents_[i];
  return sum;
}

HahnSeries ScalingSequence::x(std::size_t i) const {
  return HahnSeries::monomial(ground_, exponent(i), FieldElement::one(ground_));
}

HahnSeries ScalingSequence::x_product(std::size_t n) const {
  return HahnSeries::monomial(ground_, partial_sum(n), FieldElement::one(ground_));
}

MultiPoly apply_tau(const MultiPoly& P, const ScalingSequence& xs) {
  const std::size_t level = P.level();
  if (xs.size() < level)
    throw std::invalid_argument("scaling sequence too short for this polynomial level");
  // Images of the variables: t_n -> t_n - x_n t_{n+1}.
  std::vector<MultiPoly> image;
  image.reserve(level);
  for (std::size_t n = 1; n <= level; ++n) {
    image.push_back(MultiPoly::variable(P.ground(), n) -
                    MultiPoly::variable(P.ground(), n + 1).scaled(xs.x(n)));
  }
  MultiPoly out = MultiPoly::zero(P.ground());
  for (const auto& [mono, coeff] : P.terms()) {
    MultiPoly term = MultiPoly::constant(coeff);
    for (std::size_t i = 0; i < mono.size(); ++i) {
      if (mono[i] == 0) continue;
      term = term * image[i].pow(mono[i]);
    }
    out = out + term;
  }
  return out;
}

MultiPoly build_ydp(std::size_t n, const ScalingSequence& xs) {
  if (n == 0) throw std::invalid_argument("y'' needs n >= 1");
  if (xs.size() < n)
    throw std::invalid_argument("scaling sequence too short for y'' at this n");
  MultiPoly out = MultiPoly::zero(xs.ground());
  for (std::size_t i = 0; i <= n; ++i) {
    out = out + MultiPoly::variable(xs.ground(), i + 1).scaled(xs.x_product(i));
  }
  return out;
}

TauIdentityResult tau_identity_check(std::size_t n, const ScalingSequence& xs) {
  if (xs.size() < n + 1)
    throw std::invalid_argument("identity at n needs scaling exponents up to n+1");
  const MultiPoly ydp = build_ydp(n, xs);
  MultiPoly lhs = apply_tau(ydp, xs);
  MultiPoly rhs = MultiPoly::variable(xs.ground(), 1) -
                  MultiPoly::variable(xs.ground(), n + 2).scaled(xs.x_product(n + 1));
  const MultiPoly moved = lhs - MultiPoly::variable(xs.ground(), 1);
  TauIdentityResult out{
      lhs == rhs,
      false,
      std::move(lhs),
      std::move(rhs),
      gauss_norm(moved).val(),
      xs.partial_sum(n + 1),
  };
  out.gap_matches = out.gap_val == ExtRational(out.expected_gap_val);
  return out;
}

ImageGapResult image_gap_certificate(const MultiPoly& yprime, std::size_t n,
                                     const ScalingSequence& xs) {
  if (n == 0) throw std::invalid_argument("certificate needs n >= 1");
  if (yprime.level() > n)
    throw std::invalid_argument("y' may only use t_1..t_n");
  if (!yprime.ground()->same(*xs.ground()))
    throw std::invalid_argument("y' over a different ground field");
  const MultiPoly diff = build_ydp(n, xs) - yprime;
  MultiPoly::Monomial top(n + 1, 0);
  top[n] = 1;
  ImageGapResult out{
      diff.coefficient(top) == xs.x_product(n),
      false,
      gauss_norm(diff).val(),
      xs.partial_sum(n),
  };
  out.holds = out.monomial_untouched && out.achieved_val <= ExtRational(out.bound_val);
  return out;
}

}  // namespace nonarch
