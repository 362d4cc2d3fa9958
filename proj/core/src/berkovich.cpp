#include "nonarch/berkovich.hpp"

#include <stdexcept>

namespace nonarch {

namespace {

bool is_integer_val(const ExtRational& v) {
  return !v.is_infinite() && boost::multiprecision::denominator(v.finite()) == 1;
}

}  // namespace

NestedCheck check_nested(const DiscChain& chain) {
  if (chain.discs.size() < 2)
    throw std::invalid_argument("a disc chain needs at least two discs");
  NestedCheck out{true, true, 0, ""};
  for (std::size_t n = 0; n + 1 < chain.discs.size(); ++n) {
    const Disc& outer = chain.discs[n];
    const Disc& inner = chain.discs[n + 1];
    // |c_{n+1} - c_n| <= r_n, i.e. val of the difference >= radius val.
    const LogNorm gap = distance(inner.center, outer.center);
    if (out.nested && gap.val() < outer.radius.val()) {
      out.nested = false;
      out.first_violation = n;
      out.detail = "disc " + std::to_string(n + 1) + " is not contained in disc " +
                   std::to_string(n) + ": center gap val " + gap.val().str() +
                   " < radius val " + outer.radius.val().str();
    }
    if (out.strictly_decreasing && !(inner.radius.val() > outer.radius.val())) {
      out.strictly_decreasing = false;
      if (out.detail.empty()) {
        out.first_violation = n;
        out.detail = "radius vals not strictly increasing at discs " + std::to_string(n) +
                     "," + std::to_string(n + 1) + ": " + outer.radius.val().str() +
                     " then " + inner.radius.val().str();
      }
    }
  }
  return out;
}

EFInvariants ef_invariants(PointType type) {
  switch (type) {
    case PointType::kType1: return {0, 0};
    case PointType::kType2: return {0, 1};
    case PointType::kType3: return {1, 0};
    case PointType::kType4: return {0, 0};
  }
  throw std::logic_error("unreachable point type");
}

bool abhyankar_ok(PointType type) {
  const EFInvariants ef = ef_invariants(type);
  return ef.e + ef.f <= 1;
}

ClassifyResult classify(const DiscChain& chain) {
  const NestedCheck nested = check_nested(chain);
  if (!nested.pass())
    throw std::invalid_argument("chain fails the nesting check: " + nested.detail);
  if (!chain.declared.has_value())
    return {std::nullopt, "no limit declaration; a finite prefix alone decides nothing"};
  const LimitDeclaration& decl = *chain.declared;
  // Consistency: radius vals increase toward the declared limit, so every
  // observed val must stay at or below a finite declared limit.
  if (!decl.limit_val.is_infinite()) {
    for (std::size_t n = 0; n < chain.discs.size(); ++n) {
      if (chain.discs[n].radius.val() > decl.limit_val) {
        throw std::invalid_argument(
            "declared radius-val limit " + decl.limit_val.str() +
            " contradicts observed radius val " + chain.discs[n].radius.val().str() +
            " at disc " + std::to_string(n));
      }
    }
  }
  if (decl.limit_val.is_infinite()) {
    return {PointType::kType1, "radii shrink to norm 0: the chain pins down one point"};
  }
  if (decl.centers_stabilize) {
    if (is_integer_val(decl.limit_val)) {
      return {PointType::kType2,
              "limit radius val " + decl.limit_val.str() + " lies in the value group"};
    }
    return {PointType::kType3,
            "limit radius val " + decl.limit_val.str() + " is outside the value group"};
  }
  if (decl.intersection == AlgebraicIntersection::kEmpty) {
    return {PointType::kType4,
            "positive limit radius, wandering centers, and no algebraic point declared in "
            "the intersection"};
  }
  return {std::nullopt,
          "positive limit radius with wandering centers but the intersection status is "
          "unsettled"};
}

}  // namespace nonarch
