// Straight-strip combinatorics of the rank-2 affine Weyl groups: the strip
// generators w_1, w_2, the length property l(w^k) = k l(w), the ordered
// factorizations W = D_1 x ... x D_m and the determinant identities built
// on them.
#pragma once

#include "weylzeta/coxeter.hpp"
#include "weylzeta/hecke.hpp"
#include "weylzeta/series.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace weylzeta {

struct StripSpec
{
  std::string type_tag;
  int index = 1;
  Word word;
  std::size_t length = 0;
};

/// w_1, w_2 for A2t, C2t or G2t (for G2t, w_1 is the shortened s3 s1 s2).
/// Lengths are verified against a table; throws for other types.
std::pair<StripSpec, StripSpec> strip_generators(const CoxeterSystem& system);

/// s3 s1 s2 s3 s1, the G2t strip generator before shortening; its square is
/// not length additive.
Word g2_unreplaced_w1();

struct PowerLengthReport
{
  Word word;
  std::size_t k_max = 0;
  /// l(w^k) for k = 0..k_max.
  std::vector<std::size_t> lengths;
  bool pass = true;
  std::optional<std::size_t> first_failure;
};

/// Checks l(w^k) = k l(w) for 0 <= k <= k_max by table lookup; needs
/// k_max l(w) <= table bound.
PowerLengthReport check_power_lengths(const ElementTable& table, const Word& word, std::size_t k_max);

struct FactorDescriptor
{
  enum class Kind
  {
    RightCosets, ///< W_{J/I}
    LeftCosets,  ///< W_{I\J}
    Parabolic,   ///< W_J
    Cyclic,      ///< H_i = {w_i^k}
  };

  Kind kind = Kind::Parabolic;
  GeneratorSet i_set;
  GeneratorSet j_set;
  int strip = 0;

  std::string label() const;
};

struct FactorizationScheme
{
  std::string type_tag;
  std::vector<FactorDescriptor> factors;

  std::string label() const;
};

/// (W_{12/2}, H_1, W_{23/3}, H_2, W_{1\13}) for A2t and C2t,
/// (W_{12/1}, H_2, H_1, W_{13}) for G2t.
FactorizationScheme factorization_scheme(const std::string& type_tag);

/// Elements of a factor: all of a finite factor, and w^k with
/// k l(w) <= max_length for a cyclic one.
std::vector<ElementId> factor_elements(const ElementTable& table, const FactorDescriptor& factor,
                                       std::size_t max_length);

struct CensusReport
{
  std::string type_tag;
  std::string scheme;
  std::size_t order = 0;
  std::vector<Integer> slice_counts;
  std::vector<Integer> expected;
  bool lengths_add = true;
  bool distinct = true;
  bool counts_match = true;
  bool pass = true;
  /// Offending tuple as words, when a check fails.
  std::optional<std::vector<Word>> witness;
};

/// Enumerates every tuple (d_1, ..., d_m) with total length <= order and
/// checks (a) l(d_1...d_m) = sum l(d_j), (b) the products are distinct and
/// (c) the tuple counts per length equal the coefficients of W(u).
CensusReport factorization_census(const ElementTable& table, const FactorizationScheme& scheme, std::size_t order);

/// D_j(rho,u) for one factor.
template<typename R>
TwistedSeries<R> factor_series(const ElementTable& table, const FactorDescriptor& factor, const Representation<R>& rho)
{
  if (factor.kind == FactorDescriptor::Kind::Cyclic) {
    auto specs = strip_generators(table.system());
    return twisted_cyclic((factor.strip == 1 ? specs.first : specs.second).word, rho);
  }
  return twisted_series(table, factor_elements(table, factor, 0), rho);
}

template<typename R>
struct TwistedComparison
{
  bool pass = true;
  std::optional<std::size_t> first_mismatch;
};

/// sum_{l(w) <= order} rho(e_w) u^l(w) against D_1(rho,u) ... D_m(rho,u),
/// coefficient by coefficient.
template<typename R>
TwistedComparison<R> verify_maintheorem1(const ElementTable& table, const FactorizationScheme& scheme,
                                         const Representation<R>& rho, std::size_t order)
{
  if (order > table.bound())
    throw std::invalid_argument("order exceeds the table bound");
  const std::size_t d = rho.dim();
  std::vector<Matrix<R>> whole(order + 1, Matrix<R>::zero(d));
  for (std::size_t l = 0; l <= order && l < table.layers().size(); ++l)
    for (ElementId w : table.layers()[l])
      whole[l] += rho.image(w);
  PowerSeries<Matrix<R>> lhs(std::move(whole));
  PowerSeries<Matrix<R>> rhs = PowerSeries<Matrix<R>>::one(order, Matrix<R>::identity(d));
  for (const auto& f : scheme.factors)
    rhs = rhs * factor_series(table, f, rho).truncate(order);
  TwistedComparison<R> out;
  for (std::size_t n = 0; n <= order; ++n)
    if (!(lhs[n] == rhs[n])) {
      out.pass = false;
      out.first_mismatch = n;
      break;
    }
  return out;
}

template<typename R>
struct Corollary1Result
{
  /// det H_1(rho,u) det H_2(rho,u) = 1 / (det(I - rho(w_1)u^l1) det(I - rho(w_2)u^l2)).
  RationalFunction<R> strips;
  /// det W(rho,u) as the product of the factor determinants.
  RationalFunction<R> whole;
  /// det Alt(W)(rho,u).
  RationalFunction<R> alt;
  /// Trace-log series of the truncated W(rho,u) agrees with `whole`.
  bool series_agree = true;
  std::size_t series_order = 0;
  bool pass = false;
};

/// det H_1(rho,u) det H_2(rho,u) = det Alt(W)(rho,u) as rational functions.
/// The I = S factor of Alt comes from the factorization and is cross-checked
/// against the trace-log determinant of sum_{l(w) <= series_order} rho(e_w)
/// u^l(w). The table must reach series_order and the longest element of
/// each proper parabolic, and rho must carry a cache for it.
template<typename R>
Corollary1Result<R> verify_corollary1(const ElementTable& table, const Representation<R>& rho,
                                      std::size_t series_order)
{
  const CoxeterSystem& system = table.system();
  const FactorizationScheme scheme = factorization_scheme(system.type_tag());
  const auto specs = strip_generators(system);
  using Poly = Polynomial<R>;
  const Poly one(RingTraits<R>::one());

  Corollary1Result<R> out;
  out.strips = RationalFunction<R>(one);
  for (const StripSpec* spec : {&specs.first, &specs.second})
    out.strips = out.strips * twisted_cyclic(spec->word, rho).det();

  out.whole = RationalFunction<R>(one);
  for (const auto& f : scheme.factors)
    out.whole = out.whole * factor_series(table, f, rho).det();

  if (series_order > table.bound())
    throw std::invalid_argument("series order exceeds the table bound");
  const std::size_t d = rho.dim();
  std::vector<Matrix<R>> truncated(series_order + 1, Matrix<R>::zero(d));
  for (std::size_t l = 0; l <= series_order && l < table.layers().size(); ++l)
    for (ElementId w : table.layers()[l])
      truncated[l] += rho.image(w);
  PowerSeries<R> det_trunc = det_series(PowerSeries<Matrix<R>>(std::move(truncated)));
  PowerSeries<R> det_exact = out.whole.expand(series_order);
  out.series_order = series_order;
  out.series_agree = det_trunc == det_exact;

  const std::size_t k = system.rank();
  out.alt = out.whole;
  for (const auto& subset : generator_subsets(k)) {
    if (subset.size() == k)
      continue;
    RationalFunction<R> det_i = twisted_series(table, parabolic_elements(table, subset), rho).det();
    out.alt = (subset.size() + k) % 2 == 0 ? out.alt * det_i : out.alt / det_i;
  }
  out.pass = out.series_agree && out.strips == out.alt;
  return out;
}

} // namespace weylzeta
