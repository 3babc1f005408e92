// Poincare series of parabolic subgroups and affine Coxeter groups, the
// alternating product over parabolic subgroups, and determinants of
// matrix-valued power series.
#pragma once

#include "weylzeta/coxeter.hpp"
#include "weylzeta/matrix.hpp"
#include "weylzeta/power_series.hpp"
#include "weylzeta/rational_function.hpp"

#include <cstddef>
#include <vector>

namespace weylzeta {

/// All subsets of {0, ..., rank-1}, ordered by size and then
/// lexicographically.
std::vector<GeneratorSet> generator_subsets(std::size_t rank);

/// Sum of u^l(w) over W_I, read off an element table (W_I must be finite and
/// fit inside the table bound).
ZPoly poincare_parabolic(const ElementTable& table, const GeneratorSet& subset);

/// Same polynomial without enumerating W_I: Solomon's identity
/// sum_{J subset I} (-1)^|J| W_I(u)/W_J(u) = u^N, N = |R_I^+|, solved for
/// W_I recursively. Works for parabolics far too large to list.
ZPoly parabolic_poincare_polynomial(const CoxeterSystem& system, const GeneratorSet& subset);

struct AffinePoincare
{
  /// W(u) in lowest terms with den(0) = 1.
  RationalFunctionQ rational;
  PowerSeries<Integer> series;
};

/// W(u) of an affine system from 1/W(u) = sum over proper subsets I of
/// (-1)^{|I|+|S|+1} / W_I(u), plus its expansion to the given order.
AffinePoincare poincare_affine(const CoxeterSystem& system, std::size_t order);

/// Alt(W)(u) = prod_{I subset S} W_I(u)^{(-1)^{|I|+|S|}}, with the I = S
/// factor from poincare_affine (or the finite W(u) for finite types).
/// Lowest terms.
RationalFunctionQ alt_product_rational(const CoxeterSystem& system);

/// det M(u) for a series of square matrices with M(0) = I, by
/// det M = exp tr log M: with s_n = sum_j j tr(M_j (M^{-1})_{n-j}) the
/// coefficients g of det M satisfy n g_n = sum_k s_k g_{n-k}. Needs
/// characteristic zero (every ring here qualifies); over Z the divisions are
/// exact because det M has integer coefficients.
template<typename R>
PowerSeries<R> det_series(const PowerSeries<Matrix<R>>& m)
{
  if (!m[0].is_identity())
    throw ArithmeticError("det_series needs the identity as constant term");
  const std::size_t order = m.order();
  const std::size_t d = m[0].dim();
  PowerSeries<Matrix<R>> inv = m.inverse();
  std::vector<R> s(order + 1, RingTraits<R>::zero());
  for (std::size_t n = 1; n <= order; ++n) {
    R acc = RingTraits<R>::zero();
    for (std::size_t j = 1; j <= n; ++j) {
      const Matrix<R>& a = m[j];
      if (a.is_zero())
        continue;
      const Matrix<R>& b = inv[n - j];
      // tr(A B) without forming A B
      R t = RingTraits<R>::zero();
      for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y)
          if (!RingTraits<R>::is_zero(a(x, y)) && !RingTraits<R>::is_zero(b(y, x)))
            t += a(x, y) * b(y, x);
      if (!RingTraits<R>::is_zero(t))
        acc += R(static_cast<long>(j)) * t;
    }
    s[n] = acc;
  }
  return series_exp_from_derivative(s, order);
}

/// Exact determinant of the matrix polynomial sum_k coeffs[k] u^k.
template<typename R>
Polynomial<R> det_polynomial(const std::vector<Matrix<R>>& coeffs)
{
  if (coeffs.empty())
    throw std::invalid_argument("matrix polynomial needs at least one coefficient");
  const std::size_t d = coeffs[0].dim();
  Matrix<Polynomial<R>> m(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      std::vector<R> c;
      c.reserve(coeffs.size());
      for (const auto& k : coeffs)
        c.push_back(k(i, j));
      m(i, j) = Polynomial<R>(std::move(c));
    }
  return determinant(m);
}

/// Matrix polynomial as a series of the given order.
template<typename R>
PowerSeries<Matrix<R>> to_series(const std::vector<Matrix<R>>& coeffs, std::size_t order)
{
  std::vector<Matrix<R>> v(order + 1, Matrix<R>::zero(coeffs.at(0).dim()));
  for (std::size_t k = 0; k < coeffs.size() && k <= order; ++k)
    v[k] = coeffs[k];
  return PowerSeries<Matrix<R>>(std::move(v));
}

/// det of a matrix polynomial both ways; throws ArithmeticError if the
/// trace-log series and the exact determinant disagree up to the given order.
template<typename R>
Polynomial<R> det_polynomial_checked(const std::vector<Matrix<R>>& coeffs, std::size_t order)
{
  Polynomial<R> exact = det_polynomial(coeffs);
  PowerSeries<R> series = det_series(to_series(coeffs, order));
  for (std::size_t n = 0; n <= order; ++n)
    if (!(series[n] == exact.coeff(n)))
      throw ArithmeticError("trace-log determinant disagrees with the exact determinant at u^" + std::to_string(n));
  return exact;
}

/// Integer coefficients of a rational power series; throws if one is not
/// integral.
PowerSeries<Integer> to_integer_series(const PowerSeries<Rational>& s);

} // namespace weylzeta
