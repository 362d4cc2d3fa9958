#include <nonarch/serialize.hpp>

#include <nonarch/exact.hpp>

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nonarch {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& what) {
  throw std::invalid_argument("serialize: " + what);
}

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) bad("malformed JSON");
  return j;
}

// --- rationals -------------------------------------------------------------

json rational_to(const BigRat& q) {
  return json{{"num", numerator(q).str()}, {"den", denominator(q).str()}};
}

BigInt parse_bigint(const json& j, const char* where) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (!j.is_string()) bad(std::string(where) + ": expected integer string");
  try {
    return BigInt(j.get<std::string>());
  } catch (const std::exception&) {
    bad(std::string(where) + ": not an integer");
  }
}

BigRat rational_from(const json& j, const char* where) {
  if (!j.is_object() || !j.contains("num"))
    bad(std::string(where) + ": expected {num, den}");
  const BigInt num = parse_bigint(j.at("num"), where);
  BigInt den(1);
  if (j.contains("den")) den = parse_bigint(j.at("den"), where);
  if (den == 0) bad(std::string(where) + ": zero denominator");
  return BigRat(num, den);
}

json ext_to(const ExtRational& v) {
  if (v.is_infinite()) return json("inf");
  return rational_to(v.finite());
}

ExtRational ext_from(const json& j, const char* where) {
  if (j.is_string() && j.get<std::string>() == "inf")
    return ExtRational::infinity();
  return ExtRational(rational_from(j, where));
}

// --- exponents -------------------------------------------------------------

// Prefer {"num", "den_pow"} when the denominator is a power of the field
// characteristic; fall back to the plain rational form.
json exponent_to(const BigRat& q, std::uint32_t characteristic) {
  const BigInt den = denominator(q);
  if (characteristic >= 2) {
    BigInt d = den;
    int pow = 0;
    while (d % characteristic == 0) {
      d /= characteristic;
      ++pow;
    }
    if (d == 1)
      return json{{"num", numerator(q).str()}, {"den_pow", pow}};
  } else if (den == 1) {
    return json{{"num", numerator(q).str()}, {"den_pow", 0}};
  }
  return rational_to(q);
}

BigRat exponent_from(const json& j, std::uint32_t characteristic,
                     const char* where) {
  if (j.is_object() && j.contains("den_pow")) {
    const BigInt num = parse_bigint(j.at("num"), where);
    if (!j.at("den_pow").is_number_integer() ||
        j.at("den_pow").get<long long>() < 0)
      bad(std::string(where) + ": den_pow must be a nonnegative integer");
    const auto pow =
        static_cast<std::uint32_t>(j.at("den_pow").get<long long>());
    if (pow > 0 && characteristic < 2)
      bad(std::string(where) +
          ": den_pow needs a positive-characteristic field");
    const BigInt den =
        pow == 0 ? BigInt(1) : pow_uint(characteristic, pow);
    return BigRat(num, den);
  }
  return rational_from(j, where);
}

// --- fields and elements ---------------------------------------------------

json field_to(const FieldPtr& field) {
  if (field->is_rationals()) return json{{"char", 0}};
  return json{{"char", field->characteristic()},
              {"degree", field->degree()}};
}

FieldPtr field_from(const json& j) {
  if (!j.is_object() || !j.contains("char")) bad("field: expected {char}");
  const auto p = j.at("char").get<std::uint32_t>();
  if (p == 0) return FieldDescriptor::rationals();
  std::uint32_t m = 1;
  if (j.contains("degree")) m = j.at("degree").get<std::uint32_t>();
  return FieldDescriptor::gf(p, m);
}

json coeff_to(const FieldElement& c) {
  if (c.field()->is_rationals()) return rational_to(c.rational());
  return json(c.coords());
}

FieldElement coeff_from(const json& j, const FieldPtr& field) {
  if (field->is_rationals())
    return FieldElement::from_rational(field,
                                       rational_from(j, "coefficient"));
  if (!j.is_array()) bad("coefficient: expected coordinate array");
  std::vector<std::uint32_t> coords;
  coords.reserve(j.size());
  for (const auto& c : j) {
    if (!c.is_number_integer() || c.get<long long>() < 0)
      bad("coefficient: coordinates must be nonnegative integers");
    const auto v = c.get<unsigned long long>();
    if (v >= field->characteristic())
      bad("coefficient: coordinate out of range [0, p)");
    coords.push_back(static_cast<std::uint32_t>(v));
  }
  if (coords.size() > field->degree())
    bad("coefficient: more coordinates than the field degree");
  coords.resize(field->degree(), 0);
  return FieldElement::from_coords(field, coords);
}

// --- series ----------------------------------------------------------------

json series_to(const HahnSeries& f) {
  const std::uint32_t p = f.field()->characteristic();
  json terms = json::array();
  for (const auto& t : f.terms()) {
    terms.push_back(
        json{{"exp", exponent_to(t.exponent, p)}, {"coeff", coeff_to(t.coeff)}});
  }
  return json{{"field", field_to(f.field())},
              {"terms", std::move(terms)},
              {"tail", ext_to(f.tail())}};
}

HahnSeries series_from(const json& j) {
  if (!j.is_object() || !j.contains("field") || !j.contains("terms") || !j.contains("tail"))
    bad("series: expected {field, terms, tail}");
  const FieldPtr field = field_from(j.at("field"));
  if (!j.at("terms").is_array()) bad("series: terms must be an array");
  std::vector<SeriesTerm> terms;
  terms.reserve(j.at("terms").size());
  for (const auto& t : j.at("terms")) {
    if (!t.is_object() || !t.contains("exp") || !t.contains("coeff"))
      bad("series: each term needs exp and coeff");
    terms.push_back(
        SeriesTerm{exponent_from(t.at("exp"), field->characteristic(), "exp"),
                   coeff_from(t.at("coeff"), field)});
  }
  ExtRational tail = ext_from(j.at("tail"), "tail");
  return HahnSeries(field, std::move(terms), tail);
}

// --- chains ------------------------------------------------------------------

json chain_to(const DiscChain& chain) {
  json discs = json::array();
  for (const auto& d : chain.discs) {
    discs.push_back(json{{"center", series_to(d.center)},
                         {"radius_val", ext_to(d.radius.val())}});
  }
  json out{{"discs", std::move(discs)}};
  if (chain.declared.has_value()) {
    const auto& decl = *chain.declared;
    const char* intersection = decl.intersection == AlgebraicIntersection::kEmpty
                                   ? "empty"
                               : decl.intersection == AlgebraicIntersection::kNonempty
                                   ? "nonempty"
                                   : "unknown";
    out["declared"] = json{{"limit_val", ext_to(decl.limit_val)},
                           {"centers_stabilize", decl.centers_stabilize},
                           {"algebraic_intersection", intersection}};
  }
  return out;
}

DiscChain chain_from(const json& j) {
  if (!j.is_object() || !j.contains("discs") || !j.at("discs").is_array())
    bad("chain: expected {discs: [...]}");
  DiscChain chain;
  for (const auto& d : j.at("discs")) {
    if (!d.is_object() || !d.contains("center") || !d.contains("radius_val"))
      bad("chain: each disc needs center and radius_val");
    chain.discs.push_back(Disc{series_from(d.at("center")),
                               LogNorm(ext_from(d.at("radius_val"), "radius_val"))});
  }
  if (j.contains("declared")) {
    const auto& dj = j.at("declared");
    if (!dj.is_object() || !dj.contains("limit_val"))
      bad("chain: declared needs limit_val");
    LimitDeclaration decl;
    decl.limit_val = ext_from(dj.at("limit_val"), "limit_val");
    if (dj.contains("centers_stabilize")) {
      if (!dj.at("centers_stabilize").is_boolean())
        bad("chain: centers_stabilize must be a boolean");
      decl.centers_stabilize = dj.at("centers_stabilize").get<bool>();
    }
    if (dj.contains("algebraic_intersection")) {
      const std::string s = dj.at("algebraic_intersection").get<std::string>();
      if (s == "empty")
        decl.intersection = AlgebraicIntersection::kEmpty;
      else if (s == "nonempty")
        decl.intersection = AlgebraicIntersection::kNonempty;
      else if (s == "unknown")
        decl.intersection = AlgebraicIntersection::kUnknown;
      else
        bad("chain: algebraic_intersection must be empty|nonempty|unknown");
    }
    chain.declared = decl;
  }
  return chain;
}

// --- polynomials ---------------------------------------------------------------

json poly_to(const MultiPoly& P) {
  json terms = json::array();
  for (const auto& [mono, coeff] : P.terms()) {
    terms.push_back(json{{"monomial", mono}, {"coeff", series_to(coeff)}});
  }
  return json{{"ground", field_to(P.ground())}, {"terms", std::move(terms)}};
}

MultiPoly poly_from(const json& j) {
  if (!j.is_object() || !j.contains("ground") || !j.contains("terms"))
    bad("poly: expected {ground, terms}");
  const FieldPtr ground = field_from(j.at("ground"));
  if (!j.at("terms").is_array()) bad("poly: terms must be an array");
  MultiPoly::TermMap terms;
  for (const auto& t : j.at("terms")) {
    if (!t.is_object() || !t.contains("monomial") || !t.contains("coeff"))
      bad("poly: each term needs monomial and coeff");
    if (!t.at("monomial").is_array()) bad("poly: monomial must be an array");
    MultiPoly::Monomial mono;
    for (const auto& d : t.at("monomial")) {
      if (!d.is_number_integer() || d.get<long long>() < 0)
        bad("poly: monomial entries must be nonnegative integers");
      mono.push_back(static_cast<std::uint32_t>(d.get<unsigned long long>()));
    }
    HahnSeries coeff = series_from(t.at("coeff"));
    if (!coeff.field()->same(*ground))
      bad("poly: coefficient field differs from the ground field");
    terms.insert_or_assign(std::move(mono), std::move(coeff));
  }
  return MultiPoly(ground, std::move(terms));
}

}  // namespace

std::string field_to_json(const FieldPtr& field) {
  return field_to(field).dump(2) + "\n";
}

FieldPtr field_from_json(const std::string& text) {
  return field_from(parse_text(text));
}

std::string series_to_json(const HahnSeries& f) {
  return series_to(f).dump(2) + "\n";
}

HahnSeries series_from_json(const std::string& text) {
  return series_from(parse_text(text));
}

std::string chain_to_json(const DiscChain& chain) {
  return chain_to(chain).dump(2) + "\n";
}

DiscChain chain_from_json(const std::string& text) {
  return chain_from(parse_text(text));
}

std::string poly_to_json(const MultiPoly& P) {
  return poly_to(P).dump(2) + "\n";
}

MultiPoly poly_from_json(const std::string& text) {
  return poly_from(parse_text(text));
}

}  // namespace nonarch
