// Ihara zeta functions of finite graphs and straight-strip zeta functions
// det(I - A u)^{-1} of operators, with their closed-path counts
// N_n = tr(A^n) and the primitive counts recovered from them.
#pragma once

#include "weylzeta/matrix.hpp"
#include "weylzeta/polynomial.hpp"
#include "weylzeta/power_series.hpp"
#include "weylzeta/rational_function.hpp"

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace weylzeta {

class GraphError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/// Undirected multigraph on vertices 0..n-1 without self-loops.
class Graph
{
public:
  struct DirectedEdge
  {
    std::size_t source;
    std::size_t target;
    /// index of the undirected edge it comes from
    std::size_t edge;
    /// rank among the parallel copies of (source, target)
    std::size_t multiplicity;
  };

  Graph(std::size_t vertices, std::vector<std::pair<std::size_t, std::size_t>> edges);

  /// "u v" per line, 0-indexed; '#' starts a comment. The vertex count is
  /// one more than the largest label unless a "vertices N" line says more.
  static Graph parse(std::istream& in);
  static Graph from_file(const std::string& path);

  std::size_t vertex_count() const { return vertices_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
  long euler_characteristic() const { return static_cast<long>(vertices_) - static_cast<long>(edges_.size()); }

  std::vector<std::size_t> degrees() const;
  /// Common degree, if the graph is regular.
  std::optional<std::size_t> regular_degree() const;
  Matrix<Integer> adjacency() const;

  /// Each edge in both directions, sorted by (source, target, multiplicity).
  const std::vector<DirectedEdge>& directed_edges() const { return directed_; }

private:
  std::size_t vertices_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<DirectedEdge> directed_;
};

Graph complete_graph(std::size_t n);
Graph complete_bipartite_graph(std::size_t a, std::size_t b);
Graph cycle_graph(std::size_t n);
Graph petersen_graph();

/// B[e][f] = 1 iff e ends where f starts and f is not e reversed along the
/// same edge. Rows and columns follow Graph::directed_edges().
Matrix<Integer> hashimoto_matrix(const Graph& g);

struct IharaZeta
{
  /// det(I - B u)
  ZPoly zeta_inverse;
  /// Z(u) to order L
  PowerSeries<Integer> series;
  /// N_1..N_L, N_n = tr(B^n) (index 0 holds N_0 = number of directed edges)
  std::vector<Integer> traces;
  std::vector<Integer> primitive_counts;

  RationalFunction<Integer> zeta() const { return RationalFunction<Integer>(ZPoly(Integer(1)), zeta_inverse); }
};

IharaZeta ihara_zeta(const Graph& g, std::size_t order);

struct IharaFormulaReport
{
  long q = 0;
  long euler_characteristic = 0;
  /// det(I - B u)
  ZPoly lhs;
  /// (1 - u^2)^{-chi} det(I - A u + q u^2 I)
  RationalFunction<Integer> rhs;
  bool pass = false;
};

/// Throws GraphError unless g is (q+1)-regular.
IharaFormulaReport ihara_formula_check(const Graph& g, long q);

/// Closed non-backtracking tailless walks of each length 1..n_max, by
/// exhaustive search (index 0 unused and zero).
std::vector<Integer> geodesic_oracle(const Graph& g, std::size_t n_max);

/// Number of primitive classes P_d with N_n = sum_{d | n} d P_d, by Moebius
/// inversion; throws ArithmeticError when a count is not integral.
/// traces[0] is ignored.
std::vector<Integer> primitive_counts(const std::vector<Integer>& traces);

int moebius(std::size_t n);

template<typename R>
struct StripZeta
{
  /// det(I - A u)
  Polynomial<R> zeta_inverse;
  /// length of the strip generator; the zeta function in the length
  /// variable is Z(u^l)
  std::size_t length = 1;
  PowerSeries<R> series;
  /// N_0..N_L, N_n = tr(A^n)
  std::vector<R> traces;

  RationalFunction<R> zeta() const
  { return RationalFunction<R>(Polynomial<R>(RingTraits<R>::one()), zeta_inverse); }
  RationalFunction<R> zeta_in_length() const { return zeta().substitute_power(length); }
};

template<typename R>
StripZeta<R> strip_zeta(const Matrix<R>& a, std::size_t length, std::size_t order)
{
  StripZeta<R> out;
  out.zeta_inverse = det_one_minus(a);
  out.length = length;
  out.series = out.zeta().expand(order);
  out.traces.reserve(order + 1);
  Matrix<R> power = Matrix<R>::identity(a.dim());
  for (std::size_t n = 0; n <= order; ++n) {
    out.traces.push_back(power.trace());
    power *= a;
  }
  return out;
}

} // namespace weylzeta
