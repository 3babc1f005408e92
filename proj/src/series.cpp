#include "weylzeta/series.hpp"

#include "weylzeta/rootsys.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace weylzeta {

std::vector<GeneratorSet> generator_subsets(std::size_t rank)
{
  std::vector<GeneratorSet> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << rank); ++mask) {
    GeneratorSet s;
    for (std::size_t b = 0; b < rank; ++b)
      if (mask & (std::size_t{1} << b))
        s.push_back(static_cast<int>(b));
    out.push_back(std::move(s));
  }
  std::stable_sort(out.begin(), out.end(), [](const GeneratorSet& a, const GeneratorSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

ZPoly poincare_parabolic(const ElementTable& table, const GeneratorSet& subset)
{
  std::vector<Integer> c;
  for (ElementId id : parabolic_elements(table, subset)) {
    std::size_t l = table.element(id).length;
    if (c.size() <= l)
      c.resize(l + 1, Integer(0));
    c[l] += 1;
  }
  return ZPoly(std::move(c));
}

namespace {

PowerSeries<Integer> series_of(const ZPoly& p, std::size_t order)
{
  return PowerSeries<Integer>::from_polynomial(p, order);
}

class SolomonCache
{
public:
  explicit SolomonCache(const CoxeterSystem& system)
  : system_(system)
  {}

  const ZPoly& get(const GeneratorSet& subset)
  {
    auto it = cache_.find(subset);
    if (it != cache_.end())
      return it->second;
    ZPoly p = compute(subset);
    return cache_.emplace(subset, std::move(p)).first->second;
  }

private:
  ZPoly compute(const GeneratorSet& subset)
  {
    if (subset.empty())
      return ZPoly(Integer(1));
    IntMatrix sub(subset.size(), std::vector<std::int64_t>(subset.size()));
    for (std::size_t i = 0; i < subset.size(); ++i)
      for (std::size_t j = 0; j < subset.size(); ++j)
        sub[i][j] = system_.cartan()[static_cast<std::size_t>(subset[i])][static_cast<std::size_t>(subset[j])];
    const std::size_t n = positive_roots_from_cartan(sub).size();
    // W_I(u) * sum_{J proper} (-1)^|J| / W_J(u) = u^N - (-1)^|I|; W_I has
    // degree N so the series to order N is the whole polynomial.
    PowerSeries<Integer> sum = PowerSeries<Integer>::zero(n, Integer(0));
    for (const auto& j : generator_subsets(subset.size())) {
      if (j.size() == subset.size())
        continue;
      GeneratorSet js;
      for (int b : j)
        js.push_back(subset[static_cast<std::size_t>(b)]);
      PowerSeries<Integer> term = series_of(get(js), n).inverse();
      sum = j.size() % 2 == 0 ? sum + term : sum - term;
    }
    ZPoly rhs = ZPoly::monomial(Integer(1), n) - ZPoly(Integer(subset.size() % 2 == 0 ? 1 : -1));
    PowerSeries<Integer> w = series_of(rhs, n) * sum.inverse();
    return ZPoly(w.coefficients());
  }

  const CoxeterSystem& system_;
  std::map<GeneratorSet, ZPoly> cache_;
};

RationalFunctionQ rational_of(const ZPoly& p) { return RationalFunctionQ(to_rational(p)); }

ZPoly cyclotomic_poly(std::size_t m, std::map<std::size_t, ZPoly>& memo)
{
  auto it = memo.find(m);
  if (it != memo.end())
    return it->second;
  // u^m - 1 = prod_{d | m} Phi_d
  ZPoly p = ZPoly::monomial(Integer(1), m) - ZPoly(Integer(1));
  for (std::size_t d = 1; d < m; ++d)
    if (m % d == 0)
      p = *divide_exact(-p, -cyclotomic_poly(d, memo));
  memo.emplace(m, p);
  return p;
}

// Multiplicity of each Phi_m (m >= 2) in a product of q-integers [d]_u.
std::optional<std::map<std::size_t, long>> cyclotomic_factors(const ZPoly& w, std::size_t rank)
{
  ZPoly scaled = w * one_minus_power<Integer>(1, rank);
  auto exps = cyclotomic_exponents(RationalFunction<Integer>(scaled));
  if (!exps)
    return std::nullopt;
  std::map<std::size_t, long> out;
  for (const auto& [d, e] : *exps)
    for (std::size_t m = 2; m <= d; ++m)
      if (d % m == 0)
        out[m] += e;
  return out;
}

} // namespace

ZPoly parabolic_poincare_polynomial(const CoxeterSystem& system, const GeneratorSet& subset)
{
  if (!system.parabolic_is_finite(subset))
    throw std::invalid_argument("parabolic subgroup is infinite");
  SolomonCache cache(system);
  return cache.get(subset);
}

PowerSeries<Integer> to_integer_series(const PowerSeries<Rational>& s)
{
  return s.map([](const Rational& c) {
    if (!is_integral(c))
      throw ArithmeticError("series coefficient " + c.get_str() + " is not an integer");
    return Integer(c.get_num());
  });
}

AffinePoincare poincare_affine(const CoxeterSystem& system, std::size_t order)
{
  const std::size_t k = system.rank();
  if (system.parabolic_is_finite(system.all_generators()))
    throw std::invalid_argument(system.type_tag() + " is finite, not affine");
  SolomonCache cache(system);
  std::vector<std::pair<GeneratorSet, ZPoly>> parts;
  for (const auto& subset : generator_subsets(k)) {
    if (subset.size() == k)
      continue;
    if (!system.parabolic_is_finite(subset))
      throw std::invalid_argument("proper parabolic subgroup " + format_word(subset) + " is infinite");
    parts.emplace_back(subset, cache.get(subset));
  }
  // Sum the fractions over the lcm of the W_I, assembled from cyclotomic
  // factors; the generic gcd route is the fallback.
  std::map<std::size_t, long> lcm;
  bool factored = true;
  for (const auto& [subset, w] : parts) {
    auto f = cyclotomic_factors(w, subset.size());
    if (!f) {
      factored = false;
      break;
    }
    for (const auto& [m, e] : *f)
      lcm[m] = std::max(lcm[m], e);
  }
  RationalFunctionQ inv(QPoly(Rational(0)));
  if (factored) {
    std::map<std::size_t, ZPoly> memo;
    ZPoly den(Integer(1));
    for (const auto& [m, e] : lcm)
      for (long i = 0; i < e; ++i)
        den *= cyclotomic_poly(m, memo);
    ZPoly num;
    for (const auto& [subset, w] : parts) {
      ZPoly term = *divide_exact(den, w);
      num = (subset.size() + k + 1) % 2 == 0 ? num + term : num - term;
    }
    inv = RationalFunctionQ(to_rational(num), to_rational(den));
  } else {
    for (const auto& [subset, w] : parts) {
      RationalFunctionQ term = rational_of(w).inverse();
      inv = reduced((subset.size() + k + 1) % 2 == 0 ? inv + term : inv - term);
    }
  }
  AffinePoincare out{reduced(inv.inverse()), PowerSeries<Integer>::zero(0, Integer(0))};
  out.series = to_integer_series(out.rational.expand(order));
  return out;
}

RationalFunctionQ alt_product_rational(const CoxeterSystem& system)
{
  const std::size_t k = system.rank();
  SolomonCache cache(system);
  QPoly num(Rational(1));
  QPoly den(Rational(1));
  for (const auto& subset : generator_subsets(k)) {
    if (subset.size() == k)
      continue;
    QPoly w = to_rational(cache.get(subset));
    if ((subset.size() + k) % 2 == 0)
      num *= w;
    else
      den *= w;
  }
  RationalFunctionQ whole = system.affine()
                              ? poincare_affine(system, 0).rational
                              : RationalFunctionQ(to_rational(cache.get(system.all_generators())));
  return reduced(RationalFunctionQ(num, den) * whole);
}

} // namespace weylzeta
