#pragma once

// JSON round-trips for the value types the CLI reads and writes.
//
// All numeric payloads are exact strings (never floats).  Grammar:
//
//   field        {"char": 0}                      the rationals
//                {"char": p, "degree": m}         GF(p^m)
//   rational     {"num": "3", "den": "2"}         exact fraction
//   exponent     {"num": "3", "den_pow": 1}       num / char^den_pow
//                (p-power denominators; emitted whenever the exponent's
//                denominator is a power of the field characteristic, which
//                the writer prefers; the rational form is accepted and
//                emitted as the fallback)
//   ext          rational | "inf"
//   coefficient  [c0, c1, ...]                    GF coords, ints in [0, p)
//                rational                         char-0 coefficient
//   series       {"field": field,
//                 "terms": [{"exp": exponent|rational, "coeff": coefficient}],
//                 "tail": ext}
//   chain        {"discs": [{"center": series, "radius_val": ext}],
//                 "declared": {"limit_val": ext,
//                              "centers_stabilize": bool,
//                              "algebraic_intersection":
//                                  "empty"|"nonempty"|"unknown"}}
//                ("declared" optional)
//   poly         {"ground": field,
//                 "terms": [{"monomial": [ints], "coeff": series}]}
//
// Serialization is deterministic: object keys are emitted in sorted order
// and arrays preserve canonical (normalized) term order.

#include <nonarch/berkovich.hpp>
#include <nonarch/field.hpp>
#include <nonarch/gausspoly.hpp>
#include <nonarch/hahn.hpp>

#include <string>

namespace nonarch {

std::string field_to_json(const FieldPtr& field);
FieldPtr field_from_json(const std::string& text);

std::string series_to_json(const HahnSeries& f);
HahnSeries series_from_json(const std::string& text);

std::string chain_to_json(const DiscChain& chain);
DiscChain chain_from_json(const std::string& text);

std::string poly_to_json(const MultiPoly& P);
MultiPoly poly_from_json(const std::string& text);

}  // namespace nonarch
