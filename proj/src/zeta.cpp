#include "weylzeta/zeta.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <tuple>

namespace weylzeta {

Graph::Graph(std::size_t vertices, std::vector<std::pair<std::size_t, std::size_t>> edges)
: vertices_(vertices), edges_(std::move(edges))
{
  for (const auto& [u, v] : edges_) {
    if (u >= vertices_ || v >= vertices_)
      throw GraphError("edge " + std::to_string(u) + " " + std::to_string(v) + " names a missing vertex");
    if (u == v)
      throw GraphError("self-loop at vertex " + std::to_string(u) + " is not supported");
  }
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    directed_.push_back({edges_[e].first, edges_[e].second, e, 0});
    directed_.push_back({edges_[e].second, edges_[e].first, e, 0});
  }
  // ties between parallel copies are broken by edge index
  std::sort(directed_.begin(), directed_.end(), [](const DirectedEdge& a, const DirectedEdge& b) {
    return std::tie(a.source, a.target, a.edge) < std::tie(b.source, b.target, b.edge);
  });
  for (std::size_t i = 1; i < directed_.size(); ++i)
    if (directed_[i].source == directed_[i - 1].source && directed_[i].target == directed_[i - 1].target)
      directed_[i].multiplicity = directed_[i - 1].multiplicity + 1;
}

Graph Graph::parse(std::istream& in)
{
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::size_t vertices = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream row(line);
    std::string first;
    if (!(row >> first))
      continue;
    auto bad = [&]() { return GraphError("edge list line " + std::to_string(lineno) + ": expected 'u v'"); };
    if (first == "vertices") {
      long n = -1;
      if (!(row >> n) || n < 0)
        throw bad();
      vertices = std::max(vertices, static_cast<std::size_t>(n));
      continue;
    }
    long u = -1;
    long v = -1;
    std::string rest;
    try {
      std::size_t used = 0;
      u = std::stol(first, &used);
      if (used != first.size())
        throw bad();
    } catch (const std::logic_error&) {
      throw bad();
    }
    if (!(row >> v) || (row >> rest) || u < 0 || v < 0)
      throw bad();
    edges.emplace_back(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
    vertices = std::max({vertices, static_cast<std::size_t>(u) + 1, static_cast<std::size_t>(v) + 1});
  }
  return Graph(vertices, std::move(edges));
}

Graph Graph::from_file(const std::string& path)
{
  std::ifstream in(path);
  if (!in)
    throw GraphError("cannot open graph file " + path);
  return parse(in);
}

std::vector<std::size_t> Graph::degrees() const
{
  std::vector<std::size_t> deg(vertices_, 0);
  for (const auto& [u, v] : edges_) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

std::optional<std::size_t> Graph::regular_degree() const
{
  auto deg = degrees();
  if (deg.empty() || std::adjacent_find(deg.begin(), deg.end(), std::not_equal_to<>()) != deg.end())
    return std::nullopt;
  return deg.front();
}

Matrix<Integer> Graph::adjacency() const
{
  Matrix<Integer> a(vertices_);
  for (const auto& [u, v] : edges_) {
    a(u, v) += 1;
    a(v, u) += 1;
  }
  return a;
}

Graph complete_graph(std::size_t n)
{
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      e.emplace_back(i, j);
  return Graph(n, std::move(e));
}

Graph complete_bipartite_graph(std::size_t a, std::size_t b)
{
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j)
      e.emplace_back(i, a + j);
  return Graph(a + b, std::move(e));
}

Graph cycle_graph(std::size_t n)
{
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < n; ++i)
    e.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(e));
}

Graph petersen_graph()
{
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, std::move(e));
}

Matrix<Integer> hashimoto_matrix(const Graph& g)
{
  auto deg = g.degrees();
  for (std::size_t v = 0; v < deg.size(); ++v)
    if (deg[v] == 0)
      throw GraphError("vertex " + std::to_string(v) + " is isolated");
  const auto& de = g.directed_edges();
  Matrix<Integer> b(de.size());
  for (std::size_t i = 0; i < de.size(); ++i)
    for (std::size_t j = 0; j < de.size(); ++j)
      if (de[i].target == de[j].source && de[i].edge != de[j].edge)
        b(i, j) = 1;
  return b;
}

int moebius(std::size_t n)
{
  if (n == 0)
    throw std::invalid_argument("moebius(0)");
  int mu = 1;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p != 0)
      continue;
    n /= p;
    if (n % p == 0)
      return 0;
    mu = -mu;
  }
  return n > 1 ? -mu : mu;
}

std::vector<Integer> primitive_counts(const std::vector<Integer>& traces)
{
  std::vector<Integer> out(traces.size(), Integer(0));
  for (std::size_t n = 1; n < traces.size(); ++n) {
    Integer acc = 0;
    for (std::size_t d = 1; d <= n; ++d)
      if (n % d == 0)
        acc += moebius(n / d) * traces[d];
    out[n] = RingTraits<Integer>::divide_exact(acc, static_cast<long>(n));
  }
  return out;
}

IharaZeta ihara_zeta(const Graph& g, std::size_t order)
{
  const Matrix<Integer> b = hashimoto_matrix(g);
  StripZeta<Integer> z = strip_zeta(b, 1, order);
  IharaZeta out;
  out.zeta_inverse = std::move(z.zeta_inverse);
  out.series = std::move(z.series);
  out.traces = std::move(z.traces);
  out.primitive_counts = primitive_counts(out.traces);
  return out;
}

IharaFormulaReport ihara_formula_check(const Graph& g, long q)
{
  auto deg = g.regular_degree();
  if (!deg || static_cast<long>(*deg) != q + 1)
    throw GraphError("the graph is not " + std::to_string(q + 1) + "-regular");
  IharaFormulaReport out;
  out.q = q;
  out.euler_characteristic = g.euler_characteristic();
  out.lhs = det_one_minus(hashimoto_matrix(g));

  const Matrix<Integer> a = g.adjacency();
  const std::size_t n = a.dim();
  Matrix<ZPoly> m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Integer> c{Integer(i == j ? 1 : 0), Integer(-a(i, j)), Integer(i == j ? q : 0)};
      m(i, j) = ZPoly(std::move(c));
    }
  const RationalFunction<Integer> one_minus_u2(one_minus_power<Integer>(2));
  out.rhs = one_minus_u2.pow(-out.euler_characteristic) * RationalFunction<Integer>(polynomial_determinant(m));
  out.pass = RationalFunction<Integer>(out.lhs) == out.rhs;
  return out;
}

std::vector<Integer> geodesic_oracle(const Graph& g, std::size_t n_max)
{
  const auto& de = g.directed_edges();
  std::vector<std::vector<std::size_t>> leaving(g.vertex_count());
  for (std::size_t i = 0; i < de.size(); ++i)
    leaving[de[i].source].push_back(i);

  std::vector<Integer> counts(n_max + 1, Integer(0));
  std::vector<long> found(n_max + 1, 0);
  std::size_t start = 0;
  std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t last, std::size_t len) {
    // closed and tailless: back at the start vertex without undoing the first step
    if (de[last].target == de[start].source && de[last].edge != de[start].edge)
      ++found[len];
    if (len == n_max)
      return;
    for (std::size_t next : leaving[de[last].target])
      if (de[next].edge != de[last].edge)
        extend(next, len + 1);
  };
  for (start = 0; start < de.size(); ++start)
    extend(start, 1);
  for (std::size_t n = 1; n <= n_max; ++n)
    counts[n] = found[n];
  return counts;
}

} // namespace weylzeta
