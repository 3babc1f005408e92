#include "weylzeta/json_io.hpp"

namespace weylzeta {

Json to_json(const Integer& x)
{
  if (x.fits_slong_p())
    return Json(x.get_si());
  return Json(x.get_str());
}

Json to_json(const Rational& x)
{
  if (is_integral(x))
    return to_json(Integer(x.get_num()));
  return Json::array({to_json(Integer(x.get_num())), to_json(Integer(x.get_den()))});
}

namespace {

template<typename R>
Json coefficient_array(const std::vector<R>& coeffs)
{
  Json out = Json::array();
  for (const auto& c : coeffs)
    out.push_back(to_json(c));
  return out;
}

Rational parse_scalar(const Json& j)
{
  if (j.is_number_integer())
    return Rational(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string())
    return parse_rational(j.get<std::string>());
  if (j.is_array() && j.size() == 2 && j[0].is_number_integer() && j[1].is_number_integer()) {
    if (j[1].get<std::int64_t>() == 0)
      throw InputError("zero denominator in a rational entry");
    Rational r(static_cast<long>(j[0].get<std::int64_t>()), static_cast<long>(j[1].get<std::int64_t>()));
    r.canonicalize();
    return r;
  }
  throw InputError("expected an integer, \"a/b\" or [a, b], got " + j.dump());
}

QPoly parse_qpoly(const Json& j)
{
  if (!j.is_array())
    return QPoly(parse_scalar(j));
  std::vector<Rational> c;
  for (const auto& x : j)
    c.push_back(parse_scalar(x));
  return QPoly(std::move(c));
}

template<typename R, typename Parse>
std::vector<Matrix<R>> parse_generators(const Json& j, const CoxeterSystem& system, std::size_t dim, Parse parse)
{
  if (!j.contains("generators") || !j["generators"].is_object())
    throw InputError("missing \"generators\" object");
  const Json& gens = j["generators"];
  for (auto it = gens.begin(); it != gens.end(); ++it) {
    const std::string& name = it.key();
    bool known = false;
    for (std::size_t s = 0; s < system.rank(); ++s)
      known = known || name == "s" + std::to_string(s + 1);
    if (!known)
      throw InputError("unknown generator \"" + name + "\" for " + system.type_tag());
  }
  std::vector<Matrix<R>> out;
  for (std::size_t s = 0; s < system.rank(); ++s) {
    const std::string name = "s" + std::to_string(s + 1);
    if (!gens.contains(name))
      throw InputError("missing generator " + name);
    const Json& rows = gens[name];
    if (!rows.is_array() || rows.size() != dim)
      throw InputError(name + " must have " + std::to_string(dim) + " rows");
    Matrix<R> m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      if (!rows[i].is_array() || rows[i].size() != dim)
        throw InputError(name + " row " + std::to_string(i + 1) + " must have " + std::to_string(dim) + " entries");
      for (std::size_t k = 0; k < dim; ++k)
        m(i, k) = parse(rows[i][k]);
    }
    out.push_back(std::move(m));
  }
  return out;
}

} // namespace

Json to_json(const ZPoly& p) { return coefficient_array(p.coefficients()); }
Json to_json(const QPoly& p) { return coefficient_array(p.coefficients()); }

Json series_json(const RationalFunctionQ& f, std::size_t order)
{
  Json out;
  out["num"] = to_json(f.numerator());
  out["den"] = to_json(f.denominator());
  out["coeffs"] = coefficient_array(f.expand(order).coefficients());
  out["order"] = order;
  return out;
}

Json series_json(const RationalFunction<Integer>& f, std::size_t order) { return series_json(to_rational(f), order); }

RationalFunctionQ reduced(const RationalFunction<Integer>& f) { return weylzeta::reduced(to_rational(f)); }

Json census_json(const CensusReport& r)
{
  Json out;
  out["type"] = r.type_tag;
  out["scheme"] = r.scheme;
  out["L"] = r.order;
  out["slice_counts"] = coefficient_array(r.slice_counts);
  out["expected"] = coefficient_array(r.expected);
  out["lengths_add"] = r.lengths_add;
  out["distinct"] = r.distinct;
  out["counts_match"] = r.counts_match;
  out["pass"] = r.pass;
  if (r.witness) {
    Json w = Json::array();
    for (const Word& word : *r.witness)
      w.push_back(format_word(word));
    out["witness"] = w;
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

Json zeta_json(const IharaZeta& z)
{
  Json out;
  out["zeta_inverse_poly"] = to_json(z.zeta_inverse);
  out["N"] = coefficient_array(std::vector<Integer>(z.traces.begin() + 1, z.traces.end()));
  out["primitive_counts"] = coefficient_array(std::vector<Integer>(z.primitive_counts.begin() + 1, z.primitive_counts.end()));
  return out;
}

Json zeta_json(const StripZeta<Integer>& z)
{
  Json out;
  out["zeta_inverse_poly"] = to_json(z.zeta_inverse);
  out["N"] = coefficient_array(std::vector<Integer>(z.traces.begin() + 1, z.traces.end()));
  const auto prim = primitive_counts(z.traces);
  out["primitive_counts"] = coefficient_array(std::vector<Integer>(prim.begin() + 1, prim.end()));
  out["length"] = z.length;
  return out;
}

Json error_json(const std::string& kind, const std::string& message)
{
  Json out;
  out["error"] = kind;
  out["message"] = message;
  return out;
}

IngestedRepresentation parse_representation(const Json& j, const CoxeterSystem& system, const ElementTable* table)
{
  if (!j.is_object())
    throw InputError("representation must be a JSON object");
  if (j.contains("characteristic")) {
    const Json& c = j["characteristic"];
    if (!c.is_number_integer() || c.get<std::int64_t>() != 0)
      throw InputError("only characteristic 0 is supported");
  }
  if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<std::int64_t>() <= 0)
    throw InputError("\"dim\" must be a positive integer");
  const auto dim = static_cast<std::size_t>(j["dim"].get<std::int64_t>());
  const std::string scalar = j.value("scalar", std::string("rational"));
  if (scalar == "rational") {
    if (!j.contains("q") || j["q"].is_null())
      throw InputError("a rational representation needs a value for q");
    const Rational q = parse_scalar(j["q"]);
    auto gens = parse_generators<Rational>(j, system, dim, parse_scalar);
    return Representation<Rational>::validate(system, std::move(gens), q, table);
  }
  if (scalar == "q-poly") {
    if (j.contains("q") && !j["q"].is_null())
      throw InputError("q is formal for q-poly representations; drop the \"q\" field");
    auto gens = parse_generators<QPoly>(j, system, dim, parse_qpoly);
    return Representation<QPoly>::validate(system, std::move(gens), QPoly::variable(), table);
  }
  throw InputError("\"scalar\" must be \"rational\" or \"q-poly\"");
}

} // namespace weylzeta
