// JSON serialization of series, reports and ingested representations.
#pragma once

#include "weylzeta/hecke.hpp"
#include "weylzeta/rational_function.hpp"
#include "weylzeta/strips.hpp"
#include "weylzeta/torus.hpp"
#include "weylzeta/zeta.hpp"

#include <json.hpp>

#include <string>
#include <variant>

namespace weylzeta {

using Json = nlohmann::ordered_json;

/// Integers as JSON numbers when they fit in 64 bits, decimal strings
/// otherwise; non-integral rationals as [num, den].
Json to_json(const Integer& x);
Json to_json(const Rational& x);
Json to_json(const ZPoly& p);
Json to_json(const QPoly& p);

/// {num, den, coeffs, order}, coefficients lowest degree first.
Json series_json(const RationalFunctionQ& f, std::size_t order);
Json series_json(const RationalFunction<Integer>& f, std::size_t order);

/// num/den with common factors removed and den(0) = 1.
RationalFunctionQ reduced(const RationalFunction<Integer>& f);

Json census_json(const CensusReport& r);
Json zeta_json(const IharaZeta& z);
Json zeta_json(const StripZeta<Integer>& z);
Json error_json(const std::string& kind, const std::string& message);

/// Malformed representation input (not a relation failure).
class InputError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/// {dim, generators: {s1: [[...]], ...}, scalar: "rational" | "q-poly", q}.
/// Rational entries are integers, "a/b" strings or [a, b] pairs; q-poly
/// entries are coefficient lists in q (lowest degree first) or constants.
/// With scalar "rational", q is required; with "q-poly", q is formal.
/// A nonzero "characteristic" is rejected. Validation runs against `table`
/// when given, and RepresentationError propagates.
using IngestedRepresentation = std::variant<Representation<Rational>, Representation<QPoly>>;
IngestedRepresentation parse_representation(const Json& j, const CoxeterSystem& system,
                                            const ElementTable* table = nullptr);

} // namespace weylzeta
