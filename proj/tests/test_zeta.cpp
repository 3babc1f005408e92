#include "weylzeta/strips.hpp"
#include "weylzeta/torus.hpp"
#include "weylzeta/zeta.hpp"

#include <doctest.h>

#include <sstream>

using namespace weylzeta;

namespace {

std::string data(const std::string& name) { return std::string(WEYLZETA_TEST_DATA) + "/" + name; }

// exp(sum N_n u^n / n) by n g_n = sum_k N_k g_{n-k}, over Q
std::vector<Rational> exp_of_traces(const std::vector<Integer>& traces, std::size_t order)
{
  std::vector<Rational> g(order + 1, Rational(0));
  g[0] = 1;
  for (std::size_t n = 1; n <= order; ++n) {
    Rational acc = 0;
    for (std::size_t k = 1; k <= n; ++k)
      acc += Rational(traces[k]) * g[n - k];
    g[n] = acc / Rational(static_cast<long>(n));
  }
  return g;
}

} // namespace

TEST_CASE("graph parsing")
{
  std::istringstream in("# comment\nvertices 5\n0 1\n1 2 # trailing\n\n2 0\n");
  auto g = Graph::parse(in);
  CHECK(g.vertex_count() == 5);
  CHECK(g.edge_count() == 3);
  CHECK(g.euler_characteristic() == 2);

  std::istringstream bad("0 x\n");
  CHECK_THROWS_AS(Graph::parse(bad), GraphError);
  CHECK_THROWS_AS(Graph::from_file(data("missing.txt")), GraphError);
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), GraphError);
}

TEST_CASE("standard graphs")
{
  CHECK(complete_graph(4).regular_degree() == 3u);
  CHECK(complete_bipartite_graph(3, 3).edge_count() == 9);
  CHECK(cycle_graph(5).regular_degree() == 2u);
  auto p = petersen_graph();
  CHECK(p.vertex_count() == 10);
  CHECK(p.edge_count() == 15);
  CHECK(p.regular_degree() == 3u);
  CHECK_FALSE(Graph::from_file(data("tree.txt")).regular_degree());
  CHECK(Graph::from_file(data("petersen.txt")).edge_count() == 15);
}

TEST_CASE("Hashimoto matrix row sums are deg(target) - 1")
{
  for (const auto& g : {complete_graph(4), petersen_graph(), Graph::from_file(data("tree.txt")),
                        Graph::from_file(data("theta2.txt"))}) {
    auto b = hashimoto_matrix(g);
    auto deg = g.degrees();
    const auto& de = g.directed_edges();
    REQUIRE(b.dim() == 2 * g.edge_count());
    for (std::size_t i = 0; i < de.size(); ++i) {
      Integer row = 0;
      for (std::size_t j = 0; j < de.size(); ++j)
        row += b(i, j);
      CHECK(row == Integer(static_cast<unsigned long>(deg[de[i].target] - 1)));
    }
  }
}

TEST_CASE("Ihara zeta of small graphs")
{
  // each triangle is traversed from 3 starts in 2 directions
  auto k3 = ihara_zeta(complete_graph(3), 12);
  CHECK(k3.zeta_inverse == ZPoly{1, 0, 0, -2, 0, 0, 1});
  CHECK(k3.traces[3] == 6);
  CHECK(k3.traces[6] == 6);
  CHECK(k3.primitive_counts[3] == 2);
  CHECK(k3.primitive_counts[6] == 0);

  auto k4 = ihara_zeta(complete_graph(4), 8);
  CHECK(k4.traces[3] == 24);
  CHECK(k4.zeta_inverse.degree() == 12);

  auto c4 = ihara_zeta(cycle_graph(4), 8);
  CHECK(c4.zeta_inverse == ZPoly{1, 0, 0, 0, -2, 0, 0, 0, 1});

  // girth 5, twelve pentagons
  auto pet = ihara_zeta(petersen_graph(), 6);
  for (std::size_t n = 1; n <= 4; ++n)
    CHECK(pet.traces[n] == 0);
  CHECK(pet.traces[5] == 120);
  CHECK(pet.primitive_counts[5] == 24);

  // no cycles at all
  auto tree = ihara_zeta(Graph::from_file(data("tree.txt")), 6);
  CHECK(tree.zeta_inverse == ZPoly(1));
}

TEST_CASE("Ihara determinant formula for regular graphs")
{
  CHECK(ihara_formula_check(complete_graph(3), 1).pass);
  CHECK(ihara_formula_check(complete_graph(4), 2).pass);
  CHECK(ihara_formula_check(complete_bipartite_graph(3, 3), 2).pass);
  CHECK(ihara_formula_check(petersen_graph(), 2).pass);
  CHECK(ihara_formula_check(complete_graph(5), 3).pass);
  CHECK_THROWS_AS(ihara_formula_check(complete_graph(4), 3), GraphError);
  CHECK_THROWS_AS(ihara_formula_check(Graph::from_file(data("tree.txt")), 1), GraphError);
}

TEST_CASE("traces count closed geodesics")
{
  for (const auto& g : {complete_graph(4), complete_bipartite_graph(3, 3), petersen_graph(),
                        Graph::from_file(data("theta2.txt")), Graph::from_file(data("tree.txt"))}) {
    auto z = ihara_zeta(g, 10);
    auto oracle = geodesic_oracle(g, 10);
    for (std::size_t n = 1; n <= 10; ++n)
      CHECK(z.traces[n] == oracle[n]);
  }
}

TEST_CASE("log Z is the trace generating function")
{
  auto z = ihara_zeta(complete_bipartite_graph(3, 3), 14);
  auto g = exp_of_traces(z.traces, 14);
  for (std::size_t n = 0; n <= 14; ++n)
    CHECK(g[n] == Rational(z.series[n]));
}

TEST_CASE("parallel edges and self-loops")
{
  // B swaps the two copies, two 2-cycles
  auto theta = ihara_zeta(Graph::from_file(data("theta2.txt")), 6);
  CHECK(theta.zeta_inverse == ZPoly{1, 0, -2, 0, 1});
  CHECK(theta.traces[2] == 4);
  CHECK(theta.primitive_counts[2] == 2); // one class per orientation

  CHECK_THROWS_AS(
    {
      auto g = Graph::from_file(data("loop.txt"));
      hashimoto_matrix(g);
    },
    GraphError);
  CHECK_THROWS_AS(hashimoto_matrix(Graph(3, {{0, 1}})), GraphError);
}

TEST_CASE("Moebius function and primitive counts")
{
  std::vector<int> mu{0, 1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0};
  for (std::size_t n = 1; n < mu.size(); ++n)
    CHECK(moebius(n) == mu[n]);
  // N_n = sum_{d | n} d P_d with P = (0, 1, 1, 2)
  CHECK(primitive_counts({0, 1, 3, 7}) == std::vector<Integer>{0, 1, 1, 2});
  CHECK_THROWS_AS(primitive_counts({0, 1, 2}), ArithmeticError);
}

TEST_CASE("strip zeta of a permutation")
{
  Matrix<Integer> a(3);
  a(0, 1) = 1;
  a(1, 2) = 1;
  a(2, 0) = 1;
  auto z = strip_zeta(a, 2, 9);
  CHECK(z.zeta_inverse == ZPoly{1, 0, 0, -1});
  for (std::size_t n = 0; n <= 9; ++n)
    CHECK(z.traces[n] == (n % 3 == 0 ? 3 : 0));
  auto expected = RationalFunction<Integer>(ZPoly(1), one_minus_power<Integer>(6));
  CHECK(z.zeta_in_length() == expected);
  auto g = exp_of_traces(z.traces, 9);
  for (std::size_t n = 0; n <= 9; ++n)
    CHECK(g[n] == Rational(z.series[n]));
}

TEST_CASE("torus quotients")
{
  struct Case
  {
    std::string tag;
    int k;
    std::size_t chambers;
  };
  for (const auto& c : {Case{"A2t", 2, 24}, Case{"A2t", 3, 54}, Case{"C2t", 2, 32}, Case{"C2t", 3, 72},
                        Case{"G2t", 2, 48}, Case{"G2t", 3, 108}}) {
    auto sys = build_system(c.tag);
    TorusQuotient torus(sys, c.k);
    CHECK_MESSAGE(torus.chamber_count() == c.chambers, c.tag << " k=" << c.k);
    CHECK(torus.in_lattice(torus.representative(0)));

    auto [w1, w2] = strip_generators(sys);
    for (const auto& spec : {w1, w2}) {
      auto a = torus.matrix(spec.word);
      auto z = strip_zeta(a, spec.length, 6);
      for (std::size_t n = 1; n <= 6; ++n)
        CHECK(z.traces[n] == Integer(static_cast<unsigned long>(torus.closed_strip_count(spec.word, n))));
    }

    auto table = enumerate(sys, 12);
    auto report = verify_maintheorem2(torus, table, 12);
    CHECK(report.corollary_pass);
    CHECK_MESSAGE(report.pass, c.tag << " k=" << c.k);
  }
  CHECK_THROWS_AS(TorusQuotient(build_system("A2"), 2), std::invalid_argument);
  CHECK_THROWS_AS(TorusQuotient(build_system("A2t"), 1), std::invalid_argument);
}

TEST_CASE("the torus action is a permutation representation")
{
  auto sys = build_system("C2t");
  TorusQuotient torus(sys, 2);
  for (std::size_t s = 0; s < 3; ++s) {
    auto p = torus.permutation({static_cast<int>(s)});
    std::vector<bool> hit(p.size(), false);
    for (auto j : p)
      hit[j] = true;
    CHECK(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }));
    // involution without fixed chambers
    auto pp = torus.permutation({static_cast<int>(s), static_cast<int>(s)});
    for (std::size_t i = 0; i < pp.size(); ++i) {
      CHECK(pp[i] == i);
      CHECK(p[i] != i);
    }
  }
}
