#include "weylzeta/rootsys.hpp"
#include "weylzeta/series.hpp"

#include <doctest.h>

#include <algorithm>
#include <fstream>

using namespace weylzeta;

namespace {

struct Known
{
  char family;
  int rank;
  std::size_t roots;
  int h;
};

const std::vector<Known> kKnown = {
  {'A', 1, 1, 2},  {'A', 4, 10, 5},  {'A', 7, 28, 8}, {'B', 2, 4, 4},   {'B', 5, 25, 10},
  {'C', 3, 9, 6},  {'C', 6, 36, 12}, {'D', 4, 12, 6}, {'D', 7, 42, 12}, {'E', 6, 36, 12},
  {'E', 7, 63, 18}, {'E', 8, 120, 30}, {'F', 4, 24, 12}, {'G', 2, 6, 6},
};

std::string tag(char family, int rank) { return std::string(1, family) + std::to_string(rank); }

} // namespace

TEST_CASE("positive root counts and Coxeter numbers")
{
  for (const auto& k : kKnown) {
    auto rs = positive_roots(k.family, k.rank);
    CHECK_MESSAGE(rs.positive.size() == k.roots, tag(k.family, k.rank));
    CHECK(rs.coxeter_number == k.h);
    CHECK(height(rs.highest) == k.h - 1);
    // |R+| = n h / 2
    CHECK(2 * rs.positive.size() == static_cast<std::size_t>(k.rank * k.h));
    for (std::size_t i = 1; i < rs.positive.size(); ++i)
      CHECK(height(rs.positive[i - 1]) <= height(rs.positive[i]));
  }
}

TEST_CASE("positive roots of G2")
{
  auto rs = positive_roots('G', 2);
  std::vector<RootCoords> sorted = rs.positive;
  std::sort(sorted.begin(), sorted.end());
  std::vector<RootCoords> expected{{0, 1}, {1, 0}, {1, 1}, {2, 1}, {3, 1}, {3, 2}};
  std::sort(expected.begin(), expected.end());
  CHECK(sorted == expected);
}

TEST_CASE("root product formulas against Coxeter group counts")
{
  for (std::string t : {"A2", "A3", "B3", "C3", "D4", "G2", "F4", "E6", "B4"}) {
    auto type = parse_cartan_type(t);
    auto rs = positive_roots(type.family, type.rank);
    auto m = macdonald_series(rs);
    auto sys = build_system(t);
    CHECK_MESSAGE(m.finite == RationalFunctionQ(to_rational(parabolic_poincare_polynomial(sys, sys.all_generators()))), t);
    CHECK_MESSAGE(m.affine == poincare_affine(build_system(t + "t"), 0).rational, t);
  }
}

TEST_CASE("affine product formula against breadth-first layers")
{
  for (std::string t : {"A2", "B2", "G2", "A3"}) {
    auto type = parse_cartan_type(t);
    auto m = macdonald_series(positive_roots(type.family, type.rank));
    auto table = enumerate(build_system(t + "t"), 14);
    auto layers = table.layer_sizes();
    auto s = m.affine.expand(14);
    for (std::size_t n = 0; n <= 14; ++n)
      CHECK_MESSAGE(s[n] == Rational(static_cast<unsigned long>(layers[n])), t << " u^" << n);
  }
}

TEST_CASE("sincere heights")
{
  auto a2 = sincere_heights(positive_roots('A', 2));
  CHECK(a2.in_positive == std::vector<int>{2});

  // G2: a1 + a2, 2a1 + a2, 3a1 + a2, 3a1 + 2a2
  auto g2 = sincere_heights(positive_roots('G', 2));
  CHECK(g2.in_positive == std::vector<int>{2, 3, 4, 5});

  auto b3 = sincere_heights(positive_roots('B', 3));
  CHECK(b3.in_positive == std::vector<int>{3, 4, 5});
}

TEST_CASE("window heights are symmetric about h/2")
{
  for (const auto& k : kKnown) {
    auto rs = positive_roots(k.family, k.rank);
    auto hs = window_heights(rs);
    CHECK(hs.size() == 2 * rs.positive.size());
    std::vector<int> mirrored;
    for (int x : hs)
      mirrored.push_back(k.h - x);
    std::sort(hs.begin(), hs.end());
    std::sort(mirrored.begin(), mirrored.end());
    CHECK_MESSAGE(hs == mirrored, tag(k.family, k.rank));
  }
}

TEST_CASE("alternating products from sincere roots")
{
  for (std::string t : {"A2", "B2", "G2", "A3", "B3", "C3", "D4", "F4"}) {
    auto type = parse_cartan_type(t);
    auto alt = alt_via_sincere(positive_roots(type.family, type.rank));
    CHECK_MESSAGE(alt.finite == alt_product_rational(build_system(t)), t);
    CHECK_MESSAGE(alt.affine == alt_product_rational(build_system(t + "t")), t);
  }
}

TEST_CASE("exponent table")
{
  CHECK(exponent_table(positive_roots('A', 2)) == std::vector<int>{3, 3});
  CHECK(exponent_table(positive_roots('G', 2)) == std::vector<int>{3, 5});
  CHECK(exponent_table(positive_roots('B', 2)) == std::vector<int>{3, 4});
  CHECK(exponent_csv_row(positive_roots('E', 8)) == "E,8,30,9,11,13,14,17,19,23,29");
  for (const auto& type : exponent_table_types()) {
    auto rs = positive_roots(type.family, type.rank);
    auto d = exponent_table(rs);
    CHECK(d.front() == type.rank + 1);
    CHECK(d.back() <= rs.coxeter_number);
  }
}

TEST_CASE("exponent table matches the golden CSV")
{
  std::ifstream in(std::string(WEYLZETA_GOLDEN_DIR) + "/macdonald_table.csv");
  REQUIRE(in);
  std::string line;
  std::getline(in, line);
  CHECK(line == "type,rank,h,d_1..d_n");
  std::vector<std::string> golden;
  while (std::getline(in, line))
    if (!line.empty())
      golden.push_back(line);
  auto types = exponent_table_types();
  REQUIRE(golden.size() == types.size());
  for (std::size_t i = 0; i < types.size(); ++i)
    CHECK(exponent_csv_row(positive_roots(types[i].family, types[i].rank)) == golden[i]);
}

TEST_CASE("affine Cartan matrix")
{
  auto ac = affine_cartan(positive_roots('G', 2), {0, 1});
  REQUIRE(ac.cartan.size() == 3);
  CHECK(ac.null_root.back() == 1);
  for (std::size_t i = 0; i < 3; ++i) {
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < 3; ++j)
      acc += ac.cartan[i][j] * ac.null_root[j];
    CHECK(acc == 0); // delta spans the kernel
  }
}
