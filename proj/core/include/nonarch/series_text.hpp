#pragma once

#include <string>

#include "nonarch/exact.hpp"
#include "nonarch/field.hpp"
#include "nonarch/hahn.hpp"

namespace nonarch {

/**
 * Parse a plain-text series over the given coefficient field.
 *
 * Grammar (whitespace-insensitive):
 *   series   := [-] term ((+|-) term)* | "0"
 *   term     := "O" "(" power ")" | coeff [*] power | coeff | power
 *   power    := "t" [^ exponent] | "1"  (inside O(...) only)
 *   exponent := integer | "(" rational ")" | -integer
 *   coeff    := rational | gf-atom | "(" coeff ((+|-) coeff)* ")"
 *   gf-atom  := integer [* ] "g" [^ integer] | "g" [^ integer] | integer
 *
 * Examples: "t + t^(3/2) + O(t^4)", "1 + t", "(1+g)*t^2 + g*t^3",
 * "t^(-1) + 2/3", "O(t^2)", "0".
 * Repeated O(...) terms combine by taking the minimum tail. The formatter
 * (HahnSeries::str) emits text this parser round-trips exactly.
 */
HahnSeries parse_series(const std::string& text, const FieldPtr& field);

/// HahnSeries::str, exposed alongside the parser for symmetry.
std::string format_series(const HahnSeries& f);

/// "3", "-9/4" -> exact rational; throws std::invalid_argument on junk.
BigRat parse_rational(const std::string& text);

/// parse_rational plus "inf" for +infinity.
ExtRational parse_ext_rational(const std::string& text);

}  // namespace nonarch
