// Truncated power series c_0 + c_1 u + ... + c_L u^L over a coefficient ring
// that may be non-commutative (square matrices).
#pragma once

#include "weylzeta/arith.hpp"
#include "weylzeta/matrix.hpp"
#include "weylzeta/polynomial.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace weylzeta {

template<typename C>
struct CoefficientOps
{
  static C zero_like(const C&) { return RingTraits<C>::zero(); }
  static C one_like(const C&) { return RingTraits<C>::one(); }
  static bool is_zero(const C& c) { return RingTraits<C>::is_zero(c); }
  static std::optional<C> inverse(const C& c) { return RingTraits<C>::unit_inverse(c); }
};

template<typename R>
struct CoefficientOps<Matrix<R>>
{
  static Matrix<R> zero_like(const Matrix<R>& m) { return Matrix<R>::zero(m.dim()); }
  static Matrix<R> one_like(const Matrix<R>& m) { return Matrix<R>::identity(m.dim()); }
  static bool is_zero(const Matrix<R>& m) { return m.is_zero(); }
  static std::optional<Matrix<R>> inverse(const Matrix<R>& m)
  {
    // Only identity-led series are inverted; that is the case for every
    // twisted series of a set containing the identity.
    if (m.is_identity())
      return m;
    return std::nullopt;
  }
};

template<typename C>
class PowerSeries
{
public:
  using Coefficient = C;

  PowerSeries() = default;

  /// Series with the given coefficients; the order is coeffs.size() - 1.
  explicit PowerSeries(std::vector<C> coeffs)
  : coeffs_(std::move(coeffs))
  {
    if (coeffs_.empty())
      throw std::invalid_argument("power series needs at least one coefficient");
  }

  /// Zero series of the given order whose coefficients look like proto.
  static PowerSeries zero(std::size_t order, const C& proto)
  { return PowerSeries(std::vector<C>(order + 1, CoefficientOps<C>::zero_like(proto))); }

  static PowerSeries one(std::size_t order, const C& proto)
  {
    auto s = zero(order, proto);
    s.coeffs_[0] = CoefficientOps<C>::one_like(proto);
    return s;
  }

  /// Truncation of a polynomial (scalar coefficients only).
  template<typename R>
  static PowerSeries from_polynomial(const Polynomial<R>& p, std::size_t order)
  {
    std::vector<C> v(order + 1, RingTraits<C>::zero());
    for (std::size_t i = 0; i <= order && i < p.size(); ++i)
      v[i] = C(p.coeff(i));
    return PowerSeries(std::move(v));
  }

  std::size_t order() const { return coeffs_.size() - 1; }

  const C& operator[](std::size_t k) const { return coeffs_.at(k); }
  C& operator[](std::size_t k) { return coeffs_.at(k); }

  const std::vector<C>& coefficients() const { return coeffs_; }

  PowerSeries truncate(std::size_t order) const
  {
    if (order >= this->order())
      return *this;
    return PowerSeries(std::vector<C>(coeffs_.begin(), coeffs_.begin() + order + 1));
  }

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b)
  {
    std::size_t n = std::min(a.order(), b.order());
    std::vector<C> v;
    v.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
      v.push_back(a.coeffs_[i] + b.coeffs_[i]);
    return PowerSeries(std::move(v));
  }

  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b)
  {
    std::size_t n = std::min(a.order(), b.order());
    std::vector<C> v;
    v.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
      v.push_back(a.coeffs_[i] - b.coeffs_[i]);
    return PowerSeries(std::move(v));
  }

  /// Cauchy product, in the order a * b, truncated to the smaller order.
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b)
  {
    std::size_t n = std::min(a.order(), b.order());
    std::vector<C> v(n + 1, CoefficientOps<C>::zero_like(a.coeffs_[0]));
    for (std::size_t i = 0; i <= n; ++i) {
      if (CoefficientOps<C>::is_zero(a.coeffs_[i]))
        continue;
      for (std::size_t j = 0; i + j <= n; ++j)
        if (!CoefficientOps<C>::is_zero(b.coeffs_[j]))
          v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return PowerSeries(std::move(v));
  }

  friend bool operator==(const PowerSeries& a, const PowerSeries& b)
  { return a.coeffs_ == b.coeffs_; }

  /// Multiplicative inverse to the same order; the constant term must be a
  /// unit (the identity, for matrix coefficients).
  PowerSeries inverse() const
  {
    auto inv0 = CoefficientOps<C>::inverse(coeffs_[0]);
    if (!inv0)
      throw ArithmeticError("power series constant term is not invertible");
    std::vector<C> v(coeffs_.size(), CoefficientOps<C>::zero_like(coeffs_[0]));
    v[0] = *inv0;
    for (std::size_t n = 1; n < coeffs_.size(); ++n) {
      C acc = CoefficientOps<C>::zero_like(coeffs_[0]);
      for (std::size_t j = 1; j <= n; ++j)
        if (!CoefficientOps<C>::is_zero(coeffs_[j]))
          acc += coeffs_[j] * v[n - j];
      v[n] = -(*inv0 * acc);
    }
    return PowerSeries(std::move(v));
  }

  /// f(c u^k) truncated to the same order; used for u -> q u and u -> u^l.
  PowerSeries substitute_power(std::size_t k) const
  {
    std::vector<C> v(coeffs_.size(), CoefficientOps<C>::zero_like(coeffs_[0]));
    for (std::size_t i = 0; i * k < coeffs_.size(); ++i)
      v[i * k] = coeffs_[i];
    return PowerSeries(std::move(v));
  }

  template<typename F>
  auto map(F&& f) const
  {
    using S = std::decay_t<decltype(f(std::declval<const C&>()))>;
    std::vector<S> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_)
      out.push_back(f(c));
    return PowerSeries<S>(std::move(out));
  }

private:
  std::vector<C> coeffs_;
};

/// log f for a scalar series with f(0) = 1, over a ring where division by
/// positive integers is available (RingTraits::divide_exact).
template<typename R>
PowerSeries<R> series_log(const PowerSeries<R>& f)
{
  if (!(f[0] == RingTraits<R>::one()))
    throw ArithmeticError("logarithm needs constant term 1");
  // (log f)' = f' / f
  PowerSeries<R> inv = f.inverse();
  std::vector<R> out(f.order() + 1, RingTraits<R>::zero());
  for (std::size_t n = 1; n <= f.order(); ++n) {
    R acc = RingTraits<R>::zero();
    for (std::size_t j = 1; j <= n; ++j)
      acc += R(static_cast<long>(j)) * f[j] * inv[n - j];
    out[n] = RingTraits<R>::divide_exact(acc, static_cast<long>(n));
  }
  return PowerSeries<R>(std::move(out));
}

/// exp of a series given through s_k = k * g_k (g(0) = 0), i.e. the
/// coefficients of u g'(u). Only divisions by positive integers occur.
template<typename R>
PowerSeries<R> series_exp_from_derivative(const std::vector<R>& s, std::size_t order)
{
  std::vector<R> out(order + 1, RingTraits<R>::zero());
  out[0] = RingTraits<R>::one();
  for (std::size_t n = 1; n <= order; ++n) {
    R acc = RingTraits<R>::zero();
    for (std::size_t k = 1; k <= n; ++k)
      if (k < s.size() && !RingTraits<R>::is_zero(s[k]))
        acc += s[k] * out[n - k];
    out[n] = RingTraits<R>::divide_exact(acc, static_cast<long>(n));
  }
  return PowerSeries<R>(std::move(out));
}

template<typename R>
PowerSeries<R> series_exp(const PowerSeries<R>& g)
{
  if (!RingTraits<R>::is_zero(g[0]))
    throw ArithmeticError("exponential needs zero constant term");
  std::vector<R> s(g.order() + 1, RingTraits<R>::zero());
  for (std::size_t k = 1; k <= g.order(); ++k)
    s[k] = R(static_cast<long>(k)) * g[k];
  return series_exp_from_derivative(s, g.order());
}

} // namespace weylzeta
