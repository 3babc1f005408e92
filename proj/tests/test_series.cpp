#include "weylzeta/series.hpp"

#include <doctest.h>

using namespace weylzeta;

namespace {

// prod (1 - u^d) / (1 - u) over the degrees of the basic invariants
ZPoly degree_product(std::initializer_list<std::size_t> degrees)
{
  ZPoly out(Integer(1));
  for (std::size_t d : degrees)
    out *= *divide_exact(one_minus_power<Integer>(d), one_minus_power<Integer>(1));
  return out;
}

RationalFunctionQ cyclo(std::initializer_list<std::pair<std::size_t, long>> factors)
{
  RationalFunctionQ out(QPoly(Rational(1)));
  for (auto [d, e] : factors)
    out = out * RationalFunctionQ(one_minus_power<Rational>(d)).pow(e);
  return out;
}

} // namespace

TEST_CASE("generator subsets are ordered by size")
{
  auto s = generator_subsets(3);
  REQUIRE(s.size() == 8);
  CHECK(s[0].empty());
  CHECK(s[1] == GeneratorSet{0});
  CHECK(s[3] == GeneratorSet{2});
  CHECK(s[4] == GeneratorSet{0, 1});
  CHECK(s[7] == GeneratorSet{0, 1, 2});
}

TEST_CASE("finite Poincare polynomials against invariant degrees")
{
  CHECK(parabolic_poincare_polynomial(build_system("A3"), {0, 1, 2}) == degree_product({2, 3, 4}));
  CHECK(parabolic_poincare_polynomial(build_system("B3"), {0, 1, 2}) == degree_product({2, 4, 6}));
  CHECK(parabolic_poincare_polynomial(build_system("G2"), {0, 1}) == degree_product({2, 6}));
  CHECK(parabolic_poincare_polynomial(build_system("F4"), {0, 1, 2, 3}) == degree_product({2, 6, 8, 12}));
  CHECK(parabolic_poincare_polynomial(build_system("E8"), {0, 1, 2, 3, 4, 5, 6, 7}) ==
        degree_product({2, 8, 12, 14, 18, 20, 24, 30}));
}

TEST_CASE("Solomon recursion agrees with breadth-first search on every parabolic")
{
  for (std::string tag : {"A3", "B3", "D4", "G2t", "C2t", "A2t", "B3t"}) {
    auto sys = build_system(tag);
    auto table = enumerate(sys, 30);
    for (const auto& subset : generator_subsets(sys.rank())) {
      if (!sys.parabolic_is_finite(subset))
        continue;
      CHECK_MESSAGE(poincare_parabolic(table, subset) == parabolic_poincare_polynomial(sys, subset), tag);
    }
  }
}

TEST_CASE("affine Poincare series against table layers")
{
  for (std::string tag : {"A1t", "A2t", "C2t", "G2t", "A3t", "B3t"}) {
    auto sys = build_system(tag);
    const std::size_t order = 12;
    auto table = enumerate(sys, order);
    auto p = poincare_affine(sys, order);
    auto layers = table.layer_sizes();
    for (std::size_t n = 0; n <= order; ++n)
      CHECK_MESSAGE(p.series[n] == Integer(static_cast<unsigned long>(layers[n])), tag << " u^" << n);
  }
}

TEST_CASE("affine Poincare series in closed form")
{
  // Bott: W~(u) = W(u) / prod (1 - u^{d_i - 1})
  auto a2 = poincare_affine(build_system("A2t"), 0).rational;
  CHECK(a2 == RationalFunctionQ(to_rational(degree_product({2, 3}))) * cyclo({{1, -1}, {2, -1}}));
  auto g2 = poincare_affine(build_system("G2t"), 0).rational;
  CHECK(g2 == RationalFunctionQ(to_rational(degree_product({2, 6}))) * cyclo({{1, -1}, {5, -1}}));
  auto a1 = poincare_affine(build_system("A1t"), 0).rational;
  CHECK(a1 == RationalFunctionQ(to_rational(ZPoly({Integer(1), Integer(1)}))) * cyclo({{1, -1}}));
  CHECK(a2.denominator().coeff(0) == 1);
}

TEST_CASE("inverse alternating products of the rank-2 affine groups")
{
  CHECK(alt_product_rational(build_system("A2t")).inverse() == cyclo({{3, 2}}));
  CHECK(alt_product_rational(build_system("C2t")).inverse() == cyclo({{4, 1}, {3, 1}}));
  CHECK(alt_product_rational(build_system("G2t")).inverse() == cyclo({{5, 1}, {3, 1}}));
  CHECK(alt_product_rational(build_system("A1t")).inverse() == cyclo({{2, 1}}));
}

TEST_CASE("inverse alternating products of finite groups")
{
  // W_{12} / (W_1 W_2) directly from the dihedral polynomials
  CHECK(alt_product_rational(build_system("A2")).inverse() == cyclo({{2, 1}, {3, -1}}));
  CHECK(alt_product_rational(build_system("G2")).inverse() == cyclo({{2, 1}, {6, -1}}));
  CHECK(alt_product_rational(build_system("B2")).inverse() == cyclo({{2, 1}, {4, -1}}));
}

TEST_CASE("integer series conversion")
{
  auto s = RationalFunctionQ(QPoly(Rational(1)), one_minus_power<Rational>(2)).expand(5);
  CHECK(to_integer_series(s).coefficients() == std::vector<Integer>{1, 0, 1, 0, 1, 0});
  CHECK_THROWS(to_integer_series(PowerSeries<Rational>({Rational(1, 2)})));
}
