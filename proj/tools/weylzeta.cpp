// weylzeta: compute and verify Poincare series, alternating products,
// strip factorizations, determinant identities and zeta functions.
//
// Exit status: 0 when every requested verification passes, 1 when one
// fails, 2 for bad input and 3 when a resource cap is hit.

#include "weylzeta/json_io.hpp"
#include "weylzeta/rootsys.hpp"
#include "weylzeta/series.hpp"
#include "weylzeta/strips.hpp"
#include "weylzeta/torus.hpp"
#include "weylzeta/zeta.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace weylzeta;

namespace {

struct Config
{
  std::string command;
  std::string type;
  int rank = 0;
  std::size_t trunc = 24;
  int scale = 2;
  std::string q; // empty: formal
  std::string rep_path;
  std::string graph_path;
  std::string character;
  std::string format = "text";
  std::string out_path;
};

struct Outcome
{
  std::string text;
  bool pass = true;
};

class UsageError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

std::string resolve_tag(const Config& c)
{
  if (c.type.empty())
    throw UsageError("--type is required");
  if (c.rank <= 0)
    return c.type;
  // "--type C --rank 2" or "--type Ct --rank 2"
  std::string letter = c.type.substr(0, 1);
  std::string suffix = c.type.size() > 1 ? c.type.substr(1) : "";
  if (!suffix.empty() && suffix != "t" && suffix != "~")
    throw UsageError("--rank needs a bare family letter in --type, got " + c.type);
  return letter + std::to_string(c.rank) + suffix;
}

Rational parse_q(const std::string& text)
{
  try {
    return parse_rational(text);
  } catch (const ArithmeticError& e) {
    throw UsageError(std::string("--q: ") + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string join(const std::vector<Integer>& v, std::size_t from = 0)
{
  std::string out;
  for (std::size_t i = from; i < v.size(); ++i)
    out += (i > from ? " " : "") + v[i].get_str();
  return out;
}

std::string factored(const RationalFunctionQ& f)
{
  auto exps = cyclotomic_exponents(f);
  return exps ? format_cyclotomic(*exps) : f.to_string();
}

Outcome run_poincare(const Config& c)
{
  const CoxeterSystem sys = build_system(resolve_tag(c));
  RationalFunctionQ w;
  if (sys.affine())
    w = poincare_affine(sys, 0).rational;
  else
    w = RationalFunctionQ(to_rational(parabolic_poincare_polynomial(sys, sys.all_generators())));
  if (c.format == "json") {
    Json j;
    j["type"] = sys.type_tag();
    j["affine"] = sys.affine();
    j["series"] = series_json(w, c.trunc);
    return {dump(j)};
  }
  std::ostringstream o;
  o << "W(u) = " << w.to_string() << "\n";
  o << "coefficients: " << join(to_integer_series(w.expand(c.trunc)).coefficients()) << "\n";
  return {o.str()};
}

Outcome run_alt(const Config& c)
{
  const CoxeterSystem sys = build_system(resolve_tag(c));
  const RationalFunctionQ inverse = alt_product_rational(sys).inverse();
  const std::string f = factored(inverse);
  if (c.format == "json") {
    Json j;
    j["type"] = sys.type_tag();
    j["alt_inverse"] = series_json(inverse, c.trunc);
    j["alt_inverse_factored"] = f;
    return {dump(j)};
  }
  return {f + "\n"};
}

// table bound at which every proper parabolic subgroup is seen to close:
// one past its longest element
std::size_t parabolic_depth(const CoxeterSystem& sys)
{
  long depth = 0;
  for (const auto& subset : generator_subsets(sys.rank()))
    if (subset.size() < sys.rank())
      depth = std::max(depth, parabolic_poincare_polynomial(sys, subset).degree());
  return static_cast<std::size_t>(depth) + 1;
}

Outcome run_factorize(const Config& c)
{
  const CoxeterSystem sys = build_system(resolve_tag(c));
  const ElementTable table = enumerate(sys, std::max(c.trunc, parabolic_depth(sys)));
  const CensusReport r = factorization_census(table, factorization_scheme(sys.type_tag()), c.trunc);
  if (c.format == "json")
    return {dump(census_json(r)), r.pass};
  std::ostringstream o;
  o << r.type_tag << " " << r.scheme << " L=" << r.order << "\n";
  o << "slice counts: " << join(r.slice_counts) << "\n";
  o << "W(u):         " << join(r.expected) << "\n";
  o << "(a) lengths add: " << (r.lengths_add ? "yes" : "no") << "\n";
  o << "(b) distinct:    " << (r.distinct ? "yes" : "no") << "\n";
  o << "(c) counts:      " << (r.counts_match ? "yes" : "no") << "\n";
  if (r.witness) {
    o << "witness:";
    for (const Word& w : *r.witness)
      o << " [" << format_word(w) << "]";
    o << "\n";
  }
  o << (r.pass ? "PASS" : "FAIL") << "\n";
  return {o.str(), r.pass};
}


template<typename R>
Json corollary_entry(const std::string& label, const Representation<R>& rho, const std::string& q,
                     const ElementTable& table, std::size_t order, bool& all_pass)
{
  const Corollary1Result<R> r = verify_corollary1(table, rho, order);
  all_pass = all_pass && r.pass;
  Json j;
  j["representation"] = label;
  j["dim"] = rho.dim();
  j["q"] = q;
  j["strips"] = r.strips.to_string();
  j["alt"] = r.alt.to_string();
  j["series_agree"] = r.series_agree;
  j["pass"] = r.pass;
  return j;
}

Outcome run_corollary1(const Config& c)
{
  const CoxeterSystem sys = build_system(resolve_tag(c));
  strip_generators(sys); // rejects types without strip data
  const std::size_t order = c.trunc;
  const ElementTable table = enumerate(sys, std::max(order, parabolic_depth(sys)));
  bool pass = true;
  Json results = Json::array();
  if (!c.rep_path.empty()) {
    if (!c.q.empty())
      throw UsageError("--q does not apply to --rep; the file fixes q");
    if (!c.character.empty())
      throw UsageError("--character and --rep are exclusive");
    std::ifstream in(c.rep_path);
    if (!in)
      throw InputError("cannot open representation file " + c.rep_path);
    Json j;
    try {
      j = Json::parse(in);
    } catch (const Json::parse_error& e) {
      throw InputError(std::string("representation file is not JSON: ") + e.what());
    }
    IngestedRepresentation rep = parse_representation(j, sys, &table);
    if (auto* r = std::get_if<Representation<Rational>>(&rep))
      results.push_back(corollary_entry(c.rep_path, *r, r->q().get_str(), table, order, pass));
    else
      results.push_back(corollary_entry(c.rep_path, std::get<Representation<QPoly>>(rep), "formal", table, order, pass));
  } else {
    bool matched = false;
    for (const Character& chi : characters(sys)) {
      if (!c.character.empty() && chi.label() != c.character)
        continue;
      matched = true;
      if (c.q.empty()) {
        results.push_back(
          corollary_entry(chi.label(), character_representation(sys, chi, &table), "formal", table, order, pass));
      } else {
        const Rational q = parse_q(c.q);
        std::vector<Matrix<Rational>> gens;
        for (auto v : chi.values)
          gens.push_back(Matrix<Rational>::scalar(1, v == CharacterValue::Q ? q : Rational(-1)));
        auto rho = Representation<Rational>::validate(sys, std::move(gens), q, &table);
        results.push_back(corollary_entry(chi.label(), rho, q.get_str(), table, order, pass));
      }
    }
    if (!matched)
      throw UsageError("no character labelled '" + c.character + "' for " + sys.type_tag());
  }
  if (c.format == "json") {
    Json j;
    j["type"] = sys.type_tag();
    j["L"] = order;
    j["results"] = results;
    j["pass"] = pass;
    return {dump(j), pass};
  }
  std::ostringstream o;
  for (const auto& r : results)
    o << sys.type_tag() << " rho=" << r["representation"].get<std::string>() << " dim=" << r["dim"].get<std::size_t>()
      << " q=" << r["q"].get<std::string>() << ": det H1 det H2 = " << r["strips"].get<std::string>() << "  "
      << (r["pass"].get<bool>() ? "PASS" : "FAIL") << "\n";
  return {o.str(), pass};
}

Outcome run_macdonald(const Config& c)
{
  std::vector<CartanType> types;
  if (c.type.empty()) {
    types = exponent_table_types(c.rank > 0 ? c.rank : 8);
  } else {
    CartanType t = parse_cartan_type(resolve_tag(c));
    if (t.affine)
      throw UsageError("macdonald-table takes a finite type; the affine group is implied");
    types.push_back(t);
  }
  if (c.format == "json") {
    Json rows = Json::array();
    for (const auto& t : types) {
      const RootSystem rs = positive_roots(t.family, t.rank);
      Json r;
      r["type"] = std::string(1, t.family);
      r["rank"] = t.rank;
      r["h"] = rs.coxeter_number;
      r["exponents"] = exponent_table(rs);
      rows.push_back(r);
    }
    Json j;
    j["rows"] = rows;
    return {dump(j)};
  }
  std::ostringstream o;
  if (c.format == "csv")
    o << "type,rank,h,d_1..d_n\n";
  for (const auto& t : types)
    o << exponent_csv_row(positive_roots(t.family, t.rank)) << "\n";
  return {o.str()};
}

Outcome run_ihara(const Config& c)
{
  if (c.graph_path.empty())
    throw UsageError("--graph is required");
  const Graph g = Graph::from_file(c.graph_path);
  const IharaZeta z = ihara_zeta(g, c.trunc);
  std::optional<IharaFormulaReport> check;
  if (!c.q.empty()) {
    const Rational q = parse_q(c.q);
    if (!is_integral(q) || sgn(q) < 0 || !q.get_num().fits_slong_p())
      throw UsageError("--q for ihara must be a nonnegative integer");
    check = ihara_formula_check(g, q.get_num().get_si());
  }
  const bool pass = !check || check->pass;
  if (c.format == "json") {
    Json j = zeta_json(z);
    j["vertices"] = g.vertex_count();
    j["edges"] = g.edge_count();
    if (check) {
      Json f;
      f["q"] = check->q;
      f["euler_characteristic"] = check->euler_characteristic;
      f["pass"] = check->pass;
      j["formula_check"] = f;
    } else {
      j["formula_check"] = nullptr;
    }
    return {dump(j), pass};
  }
  std::ostringstream o;
  o << "Z(u)^-1 = " << z.zeta_inverse.to_string("u") << "\n";
  o << "N: " << join(z.traces, 1) << "\n";
  o << "primitive: " << join(z.primitive_counts, 1) << "\n";
  if (check)
    o << "det(I-Bu) = (1-u^2)^" << -check->euler_characteristic << " det(I-Au+" << check->q
      << "u^2): " << (check->pass ? "PASS" : "FAIL") << "\n";
  return {o.str(), pass};
}

Outcome run_torus(const Config& c)
{
  const CoxeterSystem sys = build_system(resolve_tag(c));
  const auto specs = strip_generators(sys);
  const TorusQuotient torus(sys, c.scale);
  const ElementTable table = enumerate(sys, std::max(c.trunc, parabolic_depth(sys)));
  const MainTheorem2Report r = verify_maintheorem2(torus, table, c.trunc);

  // traces against direct counts of closed strips, n <= 6
  bool geometric = true;
  for (const StripSpec* s : {&specs.first, &specs.second}) {
    const auto& traces = s == &specs.first ? r.zeta1.traces : r.zeta2.traces;
    for (std::size_t n = 0; n <= std::min<std::size_t>(6, c.trunc); ++n)
      geometric = geometric && traces[n] == Integer(static_cast<unsigned long>(torus.closed_strip_count(s->word, n)));
  }
  const bool pass = r.pass && geometric;
  const RationalFunctionQ alt = reduced(r.alt);
  if (c.format == "json") {
    Json j;
    j["type"] = sys.type_tag();
    j["scale"] = c.scale;
    j["chambers"] = torus.chamber_count();
    j["L"] = c.trunc;
    j["alt_det"] = factored(alt);
    j["zeta"] = Json::array({zeta_json(r.zeta1), zeta_json(r.zeta2)});
    j["corollary_pass"] = r.corollary_pass;
    j["geometric_counts_match"] = geometric;
    j["pass"] = pass;
    return {dump(j), pass};
  }
  std::ostringstream o;
  o << sys.type_tag() << " k=" << c.scale << ": " << torus.chamber_count() << " chambers\n";
  o << "det Alt(W)(pi,u) = " << factored(alt) << "\n";
  for (const auto* z : {&r.zeta1, &r.zeta2})
    o << "Z_w" << (z == &r.zeta1 ? 1 : 2) << "(u)^-1 = " << z->zeta_inverse.to_string("u") << "  (l = " << z->length
      << ")\n";
  o << "corollary: " << (r.corollary_pass ? "PASS" : "FAIL") << "\n";
  o << "det Alt = Z_w1(u^l1) Z_w2(u^l2): " << (r.pass ? "PASS" : "FAIL") << "\n";
  o << "traces match strip counts: " << (geometric ? "PASS" : "FAIL") << "\n";
  return {o.str(), pass};
}

Outcome run_table(const Config& c)
{
  const CoxeterSystem sys = build_system(resolve_tag(c));
  std::ostringstream o;
  export_table(enumerate(sys, c.trunc), o);
  return {o.str()};
}

void check_format(const Config& c)
{
  const bool csv_ok = c.command == "macdonald-table";
  const bool json_ok = c.command != "table";
  if (c.format == "text" || (c.format == "csv" && csv_ok) || (c.format == "json" && json_ok))
    return;
  throw UsageError("--format " + c.format + " is not available for " + c.command);
}

int report_error(const Config& c, const std::string& kind, const std::string& message, int status, Json extra = {})
{
  Json j = error_json(kind, message);
  j["command"] = c.command;
  for (auto it = extra.begin(); it != extra.end(); ++it)
    j[it.key()] = it.value();
  std::cerr << j.dump() << "\n";
  return status;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Exact Coxeter/Hecke series, strip factorizations and zeta functions"};
  app.require_subcommand(1);
  Config c;

  auto add_type = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--type", c.type, "type tag, e.g. A2t, C2t, G2t, E8");
    if (required)
      opt->required();
    sub->add_option("--rank", c.rank, "rank, when --type is a bare family letter");
  };
  auto add_common = [&](CLI::App* sub, std::vector<std::string> formats) {
    sub->add_option("--trunc", c.trunc, "truncation order L")->capture_default_str();
    sub->add_option("--format", c.format, "output format")->check(CLI::IsMember(formats))->capture_default_str();
    sub->add_option("--out", c.out_path, "write output to this file");
  };

  auto* poincare = app.add_subcommand("poincare", "Poincare series of a Coxeter group");
  add_type(poincare, true);
  add_common(poincare, {"text", "json"});

  auto* alt = app.add_subcommand("alt", "inverse alternating product Alt(W)(u)^-1");
  add_type(alt, true);
  add_common(alt, {"text", "json"});

  auto* factorize = app.add_subcommand("factorize", "census of the strip factorization of a rank-2 affine group");
  add_type(factorize, true);
  add_common(factorize, {"text", "json"});

  auto* corollary = app.add_subcommand("corollary1", "det H1 det H2 = det Alt(W) for characters or a given representation");
  add_type(corollary, true);
  add_common(corollary, {"text", "json"});
  corollary->add_option("--q", c.q, "rational value of q for characters (default: formal)");
  corollary->add_option("--character", c.character, "one character, e.g. q,-1,q (default: all)");
  corollary->add_option("--rep", c.rep_path, "representation JSON file");

  auto* macdonald = app.add_subcommand("macdonald-table", "exponents d_i of Alt(W~)(u)^-1 as CSV");
  add_type(macdonald, false);
  add_common(macdonald, {"text", "csv", "json"});

  auto* ihara = app.add_subcommand("ihara", "Ihara zeta function of a graph");
  ihara->add_option("--graph", c.graph_path, "edge list, one 'u v' per line")->required();
  ihara->add_option("--q", c.q, "check the regular-graph formula for this q");
  add_common(ihara, {"text", "json"});

  auto* torus = app.add_subcommand("torus", "q = 1 torus quotient and its strip zeta functions");
  add_type(torus, true);
  torus->add_option("--scale", c.scale, "k in Gamma = k Q^v")->capture_default_str();
  add_common(torus, {"text", "json"});

  auto* table = app.add_subcommand("table", "export the element table up to length L");
  add_type(table, true);
  add_common(table, {"text"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  c.command = app.get_subcommands().front()->get_name();

  try {
    check_format(c);
    Outcome out;
    if (c.command == "poincare")
      out = run_poincare(c);
    else if (c.command == "alt")
      out = run_alt(c);
    else if (c.command == "factorize")
      out = run_factorize(c);
    else if (c.command == "corollary1")
      out = run_corollary1(c);
    else if (c.command == "macdonald-table")
      out = run_macdonald(c);
    else if (c.command == "ihara")
      out = run_ihara(c);
    else if (c.command == "torus")
      out = run_torus(c);
    else
      out = run_table(c);

    if (c.out_path.empty()) {
      std::cout << out.text;
    } else {
      std::ofstream f(c.out_path);
      if (!f)
        return report_error(c, "io", "cannot write " + c.out_path, 2);
      f << out.text;
    }
    if (!out.pass)
      return report_error(c, "verification", "a requested verification failed", 1);
    return 0;
  } catch (const RepresentationError& e) {
    Json extra;
    extra["relation"] = e.relation();
    extra["generators"] = Json::array({e.first(), e.second()});
    return report_error(c, "representation", e.what(), 2, extra);
  } catch (const ResourceLimitExceeded& e) {
    return report_error(c, "resource", e.what(), 3);
  } catch (const FreeActionError& e) {
    return report_error(c, "free-action", e.what(), 1);
  } catch (const std::invalid_argument& e) {
    return report_error(c, "input", e.what(), 2);
  } catch (const std::exception& e) {
    return report_error(c, "internal", e.what(), 1);
  }
}
