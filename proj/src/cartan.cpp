#include "weylzeta/cartan.hpp"

#include <cctype>

namespace weylzeta {

std::string CartanType::tag() const
{
  return std::string(1, family) + std::to_string(rank) + (affine ? "t" : "");
}

std::string CartanType::display() const
{
  return std::string(1, family) + std::to_string(rank) + (affine ? "~" : "");
}

void validate_finite_type(char family, int rank)
{
  bool ok = false;
  switch (family) {
  case 'A': ok = rank >= 1; break;
  case 'B': ok = rank >= 2; break;
  case 'C': ok = rank >= 2; break;
  case 'D': ok = rank >= 4; break;
  case 'E': ok = rank >= 6 && rank <= 8; break;
  case 'F': ok = rank == 4; break;
  case 'G': ok = rank == 2; break;
  default: break;
  }
  if (!ok)
    throw UnsupportedType("unsupported Cartan type " + std::string(1, family) + std::to_string(rank));
}

CartanType parse_cartan_type(const std::string& tag)
{
  if (tag.size() < 2)
    throw UnsupportedType("bad type tag '" + tag + "'");
  CartanType t;
  t.family = static_cast<char>(std::toupper(static_cast<unsigned char>(tag[0])));
  std::string rest = tag.substr(1);
  if (!rest.empty() && (rest.back() == 't' || rest.back() == '~')) {
    t.affine = true;
    rest.pop_back();
  }
  if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos)
    throw UnsupportedType("bad type tag '" + tag + "'");
  t.rank = std::stoi(rest);
  validate_finite_type(t.family, t.rank);
  return t;
}

IntMatrix gram_matrix(char family, int rank)
{
  validate_finite_type(family, rank);
  const auto n = static_cast<std::size_t>(rank);
  IntMatrix g(n, std::vector<std::int64_t>(n, 0));
  auto link = [&](std::size_t i, std::size_t j, std::int64_t v) {
    g[i][j] = v;
    g[j][i] = v;
  };
  switch (family) {
  case 'A':
    for (std::size_t i = 0; i < n; ++i)
      g[i][i] = 2;
    for (std::size_t i = 0; i + 1 < n; ++i)
      link(i, i + 1, -1);
    break;
  case 'B':
    // alpha_n short
    for (std::size_t i = 0; i < n; ++i)
      g[i][i] = 4;
    g[n - 1][n - 1] = 2;
    for (std::size_t i = 0; i + 1 < n; ++i)
      link(i, i + 1, -2);
    break;
  case 'C':
    // alpha_n long
    for (std::size_t i = 0; i < n; ++i)
      g[i][i] = 2;
    g[n - 1][n - 1] = 4;
    for (std::size_t i = 0; i + 2 < n; ++i)
      link(i, i + 1, -1);
    link(n - 2, n - 1, -2);
    break;
  case 'D':
    for (std::size_t i = 0; i < n; ++i)
      g[i][i] = 2;
    for (std::size_t i = 0; i + 2 < n; ++i)
      link(i, i + 1, -1);
    link(n - 3, n - 1, -1);
    break;
  case 'E':
    // 1-3-4-5-6-7-8 with 2 attached to 4
    for (std::size_t i = 0; i < n; ++i)
      g[i][i] = 2;
    link(0, 2, -1);
    link(1, 3, -1);
    for (std::size_t i = 2; i + 1 < n; ++i)
      link(i, i + 1, -1);
    break;
  case 'F':
    // alpha_1, alpha_2 long; alpha_3, alpha_4 short
    g[0][0] = g[1][1] = 4;
    g[2][2] = g[3][3] = 2;
    link(0, 1, -2);
    link(1, 2, -2);
    link(2, 3, -1);
    break;
  case 'G':
    // alpha_1 short, alpha_2 long
    g[0][0] = 2;
    g[1][1] = 6;
    link(0, 1, -3);
    break;
  default:
    break;
  }
  return g;
}

IntMatrix cartan_from_gram(const IntMatrix& gram)
{
  const std::size_t n = gram.size();
  IntMatrix a(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::int64_t num = 2 * gram[i][j];
      if (num % gram[i][i] != 0)
        throw std::invalid_argument("Gram matrix is not crystallographic");
      a[i][j] = num / gram[i][i];
    }
  return a;
}

int coxeter_order(std::int64_t aij, std::int64_t aji)
{
  switch (aij * aji) {
  case 0: return 2;
  case 1: return 3;
  case 2: return 4;
  case 3: return 6;
  default: return 0;
  }
}

} // namespace weylzeta
