#include "nonarch/hahn.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace nonarch {

namespace {

BigInt rat_num(const BigRat& q) { return boost::multiprecision::numerator(q); }
BigInt rat_den(const BigRat& q) { return boost::multiprecision::denominator(q); }
bool is_integral(const BigRat& q) { return rat_den(q) == 1; }

// "t", "t^4", "t^(3/2)", "t^(-1)"; exponent 0 renders as "1" (used by O(...)).
std::string power_str(const BigRat& q) {
  if (q == 0) return "1";
  if (q == 1) return "t";
  if (is_integral(q) && q > 0) return "t^" + q.str();
  return "t^(" + q.str() + ")";
}

// Only sums are ambiguous next to "*t^e" or a leading sign; products like
// "2*g" and fractions like "3/2" bind tighter than the term structure.
bool needs_parens(const std::string& s) {
  return s.find_first_of("+-") != std::string::npos;
}

}  // namespace

HahnSeries::HahnSeries(FieldPtr field, std::vector<SeriesTerm> terms, ExtRational tail)
    : field_(std::move(field)), terms_(std::move(terms)), tail_(std::move(tail)) {
  normalize_();
}

HahnSeries HahnSeries::zero(const FieldPtr& field) {
  return HahnSeries(field, {}, ExtRational::infinity());
}

HahnSeries HahnSeries::unknown(const FieldPtr& field, ExtRational tail) {
  return HahnSeries(field, {}, std::move(tail));
}

HahnSeries HahnSeries::one(const FieldPtr& field) {
  return monomial(field, BigRat(0), FieldElement::one(field));
}

HahnSeries HahnSeries::monomial(const FieldPtr& field, BigRat exponent, FieldElement coeff) {
  std::vector<SeriesTerm> terms;
  terms.push_back(SeriesTerm{std::move(exponent), std::move(coeff)});
  return HahnSeries(field, std::move(terms));
}

HahnSeries HahnSeries::variable(const FieldPtr& field) {
  return monomial(field, BigRat(1), FieldElement::one(field));
}

void HahnSeries::normalize_() {
  if (!field_) throw std::invalid_argument("series requires a coefficient field");
  for (const auto& t : terms_) {
    if (!t.coeff.field()->same(*field_))
      throw std::invalid_argument("series term coefficient lies in a different field");
  }
  std::sort(terms_.begin(), terms_.end(),
            [](const SeriesTerm& a, const SeriesTerm& b) { return a.exponent < b.exponent; });
  std::vector<SeriesTerm> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!tail_.is_infinite() && t.exponent >= tail_.finite()) continue;
    if (!merged.empty() && merged.back().exponent == t.exponent) {
      merged.back().coeff = merged.back().coeff + t.coeff;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const SeriesTerm& t) { return t.coeff.is_zero(); });
  terms_ = std::move(merged);
}

void HahnSeries::check_same_field_(const HahnSeries& rhs) const {
  if (!field_->same(*rhs.field_))
    throw std::invalid_argument("series over different coefficient fields");
}

const SeriesTerm& HahnSeries::leading() const {
  if (terms_.empty()) throw std::logic_error("leading term of a series without visible terms");
  return terms_.front();
}

ExtRational HahnSeries::val_lower_bound_() const {
  if (!terms_.empty()) return ExtRational(terms_.front().exponent);
  return tail_;
}

HahnSeries HahnSeries::operator+(const HahnSeries& rhs) const {
  check_same_field_(rhs);
  std::vector<SeriesTerm> combined = terms_;
  combined.insert(combined.end(), rhs.terms_.begin(), rhs.terms_.end());
  return HahnSeries(field_, std::move(combined), min(tail_, rhs.tail_));
}

HahnSeries HahnSeries::operator-() const {
  std::vector<SeriesTerm> out = terms_;
  for (auto& t : out) t.coeff = -t.coeff;
  return HahnSeries(field_, std::move(out), tail_);
}

HahnSeries HahnSeries::operator-(const HahnSeries& rhs) const { return *this + (-rhs); }

HahnSeries HahnSeries::operator*(const HahnSeries& rhs) const {
  check_same_field_(rhs);
  if (is_exact_zero() || rhs.is_exact_zero()) return zero(field_);
  if (terms_.empty() || rhs.terms_.empty())
    throw precision_error(
        "product with a series of indeterminate valuation (no visible terms below its tail)");
  const ExtRational val_f(terms_.front().exponent);
  const ExtRational val_g(rhs.terms_.front().exponent);
  std::vector<SeriesTerm> out;
  out.reserve(terms_.size() * rhs.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : rhs.terms_) {
      out.push_back(SeriesTerm{a.exponent + b.exponent, a.coeff * b.coeff});
    }
  }
  return HahnSeries(field_, std::move(out), min(tail_ + val_g, rhs.tail_ + val_f));
}

HahnSeries HahnSeries::scaled(const FieldElement& c) const {
  if (!c.field()->same(*field_))
    throw std::invalid_argument("scalar lies in a different field");
  if (c.is_zero()) return zero(field_);
  std::vector<SeriesTerm> out = terms_;
  for (auto& t : out) t.coeff = t.coeff * c;
  return HahnSeries(field_, std::move(out), tail_);
}

HahnSeries HahnSeries::shifted(const BigRat& e) const {
  std::vector<SeriesTerm> out = terms_;
  for (auto& t : out) t.exponent += e;
  return HahnSeries(field_, std::move(out), tail_ + ExtRational(e));
}

HahnSeries HahnSeries::truncated(const ExtRational& new_tail) const {
  return HahnSeries(field_, terms_, min(tail_, new_tail));
}

ExtRational HahnSeries::valuation() const {
  if (!terms_.empty()) return ExtRational(terms_.front().exponent);
  if (tail_.is_infinite()) return ExtRational::infinity();
  throw precision_error("valuation is indeterminate: no visible terms below O(" +
                        power_str(tail_.finite()) + ")");
}

HahnSeries HahnSeries::invert(const BigRat& target_precision) const {
  if (terms_.empty()) {
    if (is_exact()) throw std::domain_error("inverse of the zero series");
    throw precision_error("inverse of a series of indeterminate valuation");
  }
  const BigRat q0 = terms_.front().exponent;
  const FieldElement c0 = terms_.front().coeff;
  const HahnSeries base = monomial(field_, -q0, c0.inverse());
  // f = c0 t^q0 (1 + u) with val(u) > 0; the inverse is base * sum((-u)^j).
  const HahnSeries u = shifted(-q0).scaled(c0.inverse()) - one(field_);
  if (u.is_exact_zero()) return base;
  // val(f g - 1) can never exceed tail(f) - q0, whatever the request.
  const ExtRational wp = min(ExtRational(target_precision), tail_ - ExtRational(q0));
  HahnSeries h = one(field_).truncated(wp);
  if (u.has_visible_terms()) {
    const HahnSeries step = (-u).truncated(wp);
    HahnSeries pw = one(field_);
    while (step.has_visible_terms() && pw.has_visible_terms()) {
      pw = (pw * step).truncated(wp);
      if (!pw.has_visible_terms()) break;
      h = h + pw;
    }
  }
  return h.scaled(c0.inverse()).shifted(-q0);
}

HahnSeries HahnSeries::frobenius() const {
  const std::uint32_t p = field_->characteristic();
  if (p == 0) throw std::logic_error("frobenius requires positive characteristic");
  std::vector<SeriesTerm> out = terms_;
  for (auto& t : out) {
    t.exponent *= p;
    t.coeff = t.coeff.frobenius();
  }
  ExtRational tail = tail_.is_infinite() ? ExtRational::infinity()
                                         : ExtRational(tail_.finite() * p);
  return HahnSeries(field_, std::move(out), std::move(tail));
}

HahnSeries HahnSeries::frobenius_inverse() const {
  const std::uint32_t p = field_->characteristic();
  if (p == 0) throw std::logic_error("frobenius requires positive characteristic");
  std::vector<SeriesTerm> out = terms_;
  for (auto& t : out) {
    t.exponent /= p;
    t.coeff = t.coeff.frobenius_inverse();
  }
  ExtRational tail = tail_.is_infinite() ? ExtRational::infinity()
                                         : ExtRational(tail_.finite() / p);
  return HahnSeries(field_, std::move(out), std::move(tail));
}

HahnSeries HahnSeries::frobenius_power(int n) const {
  HahnSeries out = *this;
  for (int i = 0; i < n; ++i) out = out.frobenius();
  for (int i = 0; i > n; --i) out = out.frobenius_inverse();
  return out;
}

HahnSeries HahnSeries::derivative() const {
  const std::uint32_t p = field_->characteristic();
  std::vector<SeriesTerm> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (t.exponent == 0) continue;
    if (p == 0) {
      out.push_back(SeriesTerm{t.exponent - 1, t.coeff.scaled_rational(t.exponent)});
    } else {
      if (!is_integral(t.exponent))
        throw std::logic_error(
            "term-wise derivative over characteristic p requires integer exponents");
      FieldElement c = t.coeff.scaled_integer(rat_num(t.exponent));
      if (c.is_zero()) continue;
      out.push_back(SeriesTerm{t.exponent - 1, std::move(c)});
    }
  }
  ExtRational tail = tail_.is_infinite() ? ExtRational::infinity()
                                         : ExtRational(tail_.finite() - 1);
  return HahnSeries(field_, std::move(out), std::move(tail));
}

bool HahnSeries::operator==(const HahnSeries& rhs) const {
  if (!field_->same(*rhs.field_)) return false;
  if (tail_ != rhs.tail_) return false;
  if (terms_.size() != rhs.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].exponent != rhs.terms_[i].exponent) return false;
    if (!(terms_[i].coeff == rhs.terms_[i].coeff)) return false;
  }
  return true;
}

std::string HahnSeries::str() const {
  std::string out;
  bool first = true;
  auto append = [&](const std::string& body, bool negative) {
    if (first) {
      if (negative) out += "-";
      out += body;
      first = false;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  };
  for (const auto& term : terms_) {
    bool negative = false;
    FieldElement c = term.coeff;
    if (field_->is_rationals() && c.rational() < 0) {
      negative = true;
      c = -c;
    }
    std::string body;
    if (term.exponent == 0) {
      body = c.str();
      if (needs_parens(body)) body = "(" + body + ")";
    } else if (c.is_one()) {
      body = power_str(term.exponent);
    } else {
      std::string cs = c.str();
      if (needs_parens(cs)) cs = "(" + cs + ")";
      body = cs + "*" + power_str(term.exponent);
    }
    append(body, negative);
  }
  if (!tail_.is_infinite()) append("O(" + power_str(tail_.finite()) + ")", false);
  if (first) return "0";
  return out;
}

LogNorm distance(const HahnSeries& f, const HahnSeries& g) {
  return LogNorm((f - g).valuation());
}

DerivativeBound derivative_bound_check(const HahnSeries& f) {
  DerivativeBound out{false, f.valuation(), f.derivative().valuation()};
  out.holds = out.val_df >= out.val_f - ExtRational(1L);
  return out;
}

}  // namespace nonarch
