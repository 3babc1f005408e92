#include "weylzeta/rootsys.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace weylzeta {

namespace {

using Exponents = std::map<std::size_t, long>;

// (1 - u^{t+1}) / (1 - u^t)
void add_height_factor(Exponents& e, int t, long sign = 1)
{
  e[static_cast<std::size_t>(t) + 1] += sign;
  e[static_cast<std::size_t>(t)] -= sign;
}

RationalFunctionQ from_exponents(const Exponents& e)
{
  QPoly num(Rational(1));
  QPoly den(Rational(1));
  for (const auto& [d, k] : e) {
    if (k > 0)
      num *= one_minus_power<Rational>(d, static_cast<std::size_t>(k));
    else if (k < 0)
      den *= one_minus_power<Rational>(d, static_cast<std::size_t>(-k));
  }
  return RationalFunctionQ(num, den);
}

bool is_sincere(const RootCoords& r)
{
  return std::all_of(r.begin(), r.end(), [](int c) { return c != 0; });
}

// Support of 1 - a is every affine node iff a_i < theta_i for all i.
bool window_root_is_sincere(const RootCoords& a, const RootCoords& highest)
{
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] >= highest[i])
      return false;
  return true;
}

} // namespace

int height(const RootCoords& root) { return std::accumulate(root.begin(), root.end(), 0); }

std::vector<RootCoords> positive_roots_from_cartan(const IntMatrix& cartan, std::size_t max_roots)
{
  const std::size_t n = cartan.size();
  std::set<RootCoords> known;
  std::vector<RootCoords> frontier;
  for (std::size_t i = 0; i < n; ++i) {
    RootCoords r(n, 0);
    r[i] = 1;
    known.insert(r);
    frontier.push_back(r);
  }
  // Roots of height k+1 arise as a + alpha_i from roots a of height k; the
  // alpha_i-string through a is a - p alpha_i, ..., a + q alpha_i with
  // p - q = <alpha_i^vee, a>.
  while (!frontier.empty()) {
    std::set<RootCoords> next;
    for (const auto& a : frontier) {
      for (std::size_t i = 0; i < n; ++i) {
        int p = 0;
        RootCoords down = a;
        while (true) {
          --down[i];
          if (down[i] < 0 || !known.count(down))
            break;
          ++p;
        }
        std::int64_t pairing = 0;
        for (std::size_t j = 0; j < n; ++j)
          pairing += cartan[i][j] * a[j];
        if (p - pairing > 0) {
          RootCoords up = a;
          ++up[i];
          next.insert(up);
        }
      }
    }
    frontier.assign(next.begin(), next.end());
    known.insert(next.begin(), next.end());
    if (known.size() > max_roots)
      throw std::invalid_argument("Cartan matrix is not of finite type");
  }
  std::vector<RootCoords> out(known.begin(), known.end());
  std::stable_sort(out.begin(), out.end(), [](const RootCoords& a, const RootCoords& b) { return height(a) < height(b); });
  return out;
}

RootSystem positive_roots(char family, int rank)
{
  RootSystem rs;
  rs.type = CartanType{family, rank, false};
  rs.gram = gram_matrix(family, rank);
  rs.cartan = cartan_from_gram(rs.gram);
  rs.positive = positive_roots_from_cartan(rs.cartan);
  rs.highest = rs.positive.back();
  if (rs.positive.size() > 1 && height(rs.positive[rs.positive.size() - 2]) == height(rs.highest))
    throw std::logic_error("root system has no unique highest root");
  rs.coxeter_number = height(rs.highest) + 1;
  return rs;
}

std::vector<int> window_heights(const RootSystem& rs)
{
  std::vector<int> hs;
  for (const auto& a : rs.positive) {
    hs.push_back(height(a));
    hs.push_back(rs.coxeter_number - height(a));
  }
  std::sort(hs.begin(), hs.end());
  return hs;
}

MacdonaldSeries macdonald_series(const RootSystem& rs)
{
  Exponents fin;
  for (const auto& a : rs.positive)
    add_height_factor(fin, height(a));
  Exponents aff;
  for (int t : window_heights(rs))
    add_height_factor(aff, t);
  aff[static_cast<std::size_t>(rs.coxeter_number)] -= rs.rank();

  RationalFunctionQ finite = from_exponents(fin);
  auto poly = finite.as_polynomial();
  if (!poly)
    throw std::logic_error("finite Poincare product is not a polynomial");
  return {RationalFunctionQ(*poly), from_exponents(aff)};
}

SincereHeights sincere_heights(const RootSystem& rs)
{
  SincereHeights out;
  for (const auto& a : rs.positive) {
    if (is_sincere(a))
      out.in_positive.push_back(height(a));
    if (window_root_is_sincere(a, rs.highest))
      out.in_window.push_back(rs.coxeter_number - height(a));
  }
  std::sort(out.in_positive.begin(), out.in_positive.end());
  std::sort(out.in_window.begin(), out.in_window.end());
  return out;
}

namespace {

std::pair<Exponents, Exponents> sincere_exponents(const RootSystem& rs)
{
  SincereHeights sh = sincere_heights(rs);
  Exponents fin;
  for (int t : sh.in_positive)
    add_height_factor(fin, t);
  Exponents aff;
  for (int t : sh.in_window)
    add_height_factor(aff, t);
  aff[static_cast<std::size_t>(rs.coxeter_number)] -= rs.rank();
  return {fin, aff};
}

} // namespace

AltSeries alt_via_sincere(const RootSystem& rs)
{
  auto [fin, aff] = sincere_exponents(rs);
  return {from_exponents(fin), from_exponents(aff)};
}

std::vector<int> exponent_table(const RootSystem& rs)
{
  RationalFunctionQ inv = alt_via_sincere(rs).affine.inverse();
  auto poly = inv.as_polynomial();
  if (!poly)
    throw std::logic_error("Alt(W~)(u)^-1 is not a polynomial for " + rs.type.tag());
  auto exps = cyclotomic_exponents(RationalFunctionQ(*poly));
  if (!exps)
    throw std::logic_error("Alt(W~)(u)^-1 is not a product of (1-u^d) for " + rs.type.tag());
  std::vector<int> d;
  for (const auto& [deg, mult] : *exps) {
    if (mult < 0)
      throw std::logic_error("Alt(W~)(u)^-1 has a (1-u^d) factor in the denominator");
    for (long i = 0; i < mult; ++i)
      d.push_back(static_cast<int>(deg));
  }
  if (static_cast<int>(d.size()) != rs.rank())
    throw std::logic_error("wrong number of exponents for " + rs.type.tag());
  if (d.front() != rs.rank() + 1 || d.back() > rs.coxeter_number)
    throw std::logic_error("exponent bounds n+1 = d_1, d_n <= h violated for " + rs.type.tag());
  return d;
}

std::vector<CartanType> exponent_table_types(int max_rank)
{
  std::vector<CartanType> out;
  auto add = [&](char family, int from, int to) {
    for (int n = from; n <= std::min(to, max_rank); ++n)
      out.push_back(CartanType{family, n, false});
  };
  add('A', 1, max_rank);
  add('B', 2, max_rank);
  add('C', 2, max_rank);
  add('D', 4, max_rank);
  add('E', 6, 8);
  add('F', 4, 4);
  add('G', 2, 2);
  return out;
}

std::string exponent_csv_row(const RootSystem& rs)
{
  std::ostringstream out;
  out << rs.type.family << ',' << rs.rank() << ',' << rs.coxeter_number;
  for (int d : exponent_table(rs))
    out << ',' << d;
  return out.str();
}

AffineCartan affine_cartan(const RootSystem& rs, const std::vector<std::size_t>& finite_order)
{
  const std::size_t n = static_cast<std::size_t>(rs.rank());
  if (finite_order.size() != n)
    throw std::invalid_argument("finite node order has the wrong size");
  // Gram matrix over (alpha_1..alpha_n, alpha_0) with alpha_0 = delta - theta.
  IntMatrix g(n + 1, std::vector<std::int64_t>(n + 1, 0));
  std::vector<std::int64_t> theta_dot(n, 0);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      theta_dot[j] += rs.highest[i] * rs.gram[i][j];
  std::int64_t theta_norm = 0;
  for (std::size_t j = 0; j < n; ++j)
    theta_norm += rs.highest[j] * theta_dot[j];
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b)
      g[a][b] = rs.gram[finite_order[a]][finite_order[b]];
    g[a][n] = g[n][a] = -theta_dot[finite_order[a]];
  }
  g[n][n] = theta_norm;

  AffineCartan out;
  out.cartan = cartan_from_gram(g);
  out.null_root.resize(n + 1);
  for (std::size_t a = 0; a < n; ++a)
    out.null_root[a] = rs.highest[finite_order[a]];
  out.null_root[n] = 1;
  return out;
}

} // namespace weylzeta
