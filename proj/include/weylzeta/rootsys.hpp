// Crystallographic root systems, heights, and the Poincare/alternating
// product formulas that can be read off from the positive roots.
#pragma once

#include "weylzeta/cartan.hpp"
#include "weylzeta/rational_function.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace weylzeta {

using RootCoords = std::vector<int>;

struct RootSystem
{
  CartanType type;
  IntMatrix gram;
  IntMatrix cartan;
  /// Positive roots in simple-root coordinates, ordered by height and then
  /// lexicographically.
  std::vector<RootCoords> positive;
  RootCoords highest;
  int coxeter_number = 0;

  int rank() const { return type.rank; }
};

int height(const RootCoords& root);

/// Positive roots of a finite-type Cartan matrix in simple-root coordinates,
/// sorted by height. Throws when more than max_roots appear (the matrix is
/// then not of finite type).
std::vector<RootCoords> positive_roots_from_cartan(const IntMatrix& cartan, std::size_t max_roots = 100000);

/// Generates R+ by closure under root strings starting from the simple roots.
RootSystem positive_roots(char family, int rank);

/// (W(u), W~(u)): the finite and affine Poincare series as products over
/// positive roots. W(u) is a polynomial; W~(u) has denominator (1-u^h)^n.
struct MacdonaldSeries
{
  RationalFunctionQ finite;
  RationalFunctionQ affine;
};

MacdonaldSeries macdonald_series(const RootSystem& rs);

/// Heights of sincere roots: roots of R+ whose support is every simple
/// root, and affine roots 1 - a in P whose support is every affine simple
/// root (heights h - ht(a)). Both sorted ascending.
struct SincereHeights
{
  std::vector<int> in_positive;
  std::vector<int> in_window;
};

SincereHeights sincere_heights(const RootSystem& rs);

/// Heights of every element of P = R+ u {1 - a : a in R+}.
std::vector<int> window_heights(const RootSystem& rs);

/// Alt(W)(u) and Alt(W~)(u) as products over sincere roots.
struct AltSeries
{
  RationalFunctionQ finite;
  RationalFunctionQ affine;
};

AltSeries alt_via_sincere(const RootSystem& rs);

/// d_1 <= ... <= d_n with Alt(W~)(u)^{-1} = prod (1 - u^{d_i}). Throws if the
/// inverse alternating product is not of that form or violates
/// n + 1 = d_1, d_n <= h.
std::vector<int> exponent_table(const RootSystem& rs);

/// A1..An, B2..Bn, C2..Cn, D4..Dn, E6..E8, F4, G2 for n = max_rank, in
/// that order (exceptional types capped by max_rank as well).
std::vector<CartanType> exponent_table_types(int max_rank = 8);

/// CSV line "type,rank,h,d_1,...,d_n" for one root system.
std::string exponent_csv_row(const RootSystem& rs);

/// Affine Cartan matrix with the affine node appended last, optionally
/// permuting the finite nodes first (finite_order[i] = Bourbaki index of the
/// i-th generator, 0-based). Also returns the null root delta in the
/// resulting simple-root coordinates.
struct AffineCartan
{
  IntMatrix cartan;
  std::vector<std::int64_t> null_root;
};

AffineCartan affine_cartan(const RootSystem& rs, const std::vector<std::size_t>& finite_order);

} // namespace weylzeta
