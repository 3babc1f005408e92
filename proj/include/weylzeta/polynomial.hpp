// Dense univariate polynomials over an exact commutative ring.
#pragma once

#include "weylzeta/arith.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace weylzeta {

template<typename R>
class Polynomial
{
public:
  using Coefficient = R;

  Polynomial() = default;

  Polynomial(std::initializer_list<R> coeffs)
  : coeffs_(coeffs)
  { trim(); }

  explicit Polynomial(std::vector<R> coeffs)
  : coeffs_(std::move(coeffs))
  { trim(); }

  // Constant polynomial. Implicit so that scalars mix freely in expressions.
  Polynomial(const R& c)
  {
    if (!RingTraits<R>::is_zero(c))
      coeffs_.push_back(c);
  }

  Polynomial(long c)
  : Polynomial(R(c))
  {}

  static Polynomial monomial(const R& c, std::size_t degree)
  {
    if (RingTraits<R>::is_zero(c))
      return {};
    std::vector<R> v(degree + 1, RingTraits<R>::zero());
    v[degree] = c;
    return Polynomial(std::move(v));
  }

  static Polynomial variable() { return monomial(RingTraits<R>::one(), 1); }

  /// Degree of the polynomial, -1 for zero.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::size_t size() const { return coeffs_.size(); }

  R coeff(std::size_t i) const
  { return i < coeffs_.size() ? coeffs_[i] : RingTraits<R>::zero(); }

  const std::vector<R>& coefficients() const { return coeffs_; }

  R leading() const
  { return coeffs_.empty() ? RingTraits<R>::zero() : coeffs_.back(); }

  Polynomial& operator+=(const Polynomial& other)
  {
    if (other.coeffs_.size() > coeffs_.size())
      coeffs_.resize(other.coeffs_.size(), RingTraits<R>::zero());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
      coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& other)
  {
    if (other.coeffs_.size() > coeffs_.size())
      coeffs_.resize(other.coeffs_.size(), RingTraits<R>::zero());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
      coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator*=(const Polynomial& other)
  {
    *this = *this * other;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator-(Polynomial a)
  {
    for (auto& c : a.coeffs_)
      c = -c;
    return a;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
  {
    if (a.is_zero() || b.is_zero())
      return {};
    std::vector<R> out(a.coeffs_.size() + b.coeffs_.size() - 1, RingTraits<R>::zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (RingTraits<R>::is_zero(a.coeffs_[i]))
        continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b)
  { return a.coeffs_ == b.coeffs_; }

  /// p(x) by Horner's rule, for x in any ring the coefficients embed into.
  template<typename X>
  X evaluate(const X& x) const
  {
    X acc = X(RingTraits<R>::zero());
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      acc = acc * x + X(*it);
    return acc;
  }

  R evaluate(const R& x) const { return evaluate<R>(x); }

  /// p(u^k).
  Polynomial substitute_power(std::size_t k) const
  {
    if (is_zero() || k == 1)
      return *this;
    if (k == 0)
      return Polynomial(evaluate(RingTraits<R>::one()));
    std::vector<R> out((coeffs_.size() - 1) * k + 1, RingTraits<R>::zero());
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      out[i * k] = coeffs_[i];
    return Polynomial(std::move(out));
  }

  /// p(c u).
  Polynomial scale_variable(const R& c) const
  {
    std::vector<R> out = coeffs_;
    R power = RingTraits<R>::one();
    for (auto& x : out) {
      x *= power;
      power *= c;
    }
    return Polynomial(std::move(out));
  }

  /// Drops all terms of degree > order.
  Polynomial truncate(std::size_t order) const
  {
    if (coeffs_.size() <= order + 1)
      return *this;
    return Polynomial(std::vector<R>(coeffs_.begin(), coeffs_.begin() + order + 1));
  }

  /// u^k p(u).
  Polynomial shift(std::size_t k) const
  {
    if (is_zero())
      return {};
    std::vector<R> out(k, RingTraits<R>::zero());
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(std::move(out));
  }

  template<typename F>
  auto map_coefficients(F&& f) const
  {
    using S = std::decay_t<decltype(f(std::declval<const R&>()))>;
    std::vector<S> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_)
      out.push_back(f(c));
    return Polynomial<S>(std::move(out));
  }

  std::string to_string(const std::string& var = "u") const;

private:
  void trim()
  {
    while (!coeffs_.empty() && RingTraits<R>::is_zero(coeffs_.back()))
      coeffs_.pop_back();
  }

  std::vector<R> coeffs_;
};

template<typename R>
struct RingTraits<Polynomial<R>>
{
  static Polynomial<R> zero() { return {}; }
  static Polynomial<R> one() { return Polynomial<R>(RingTraits<R>::one()); }
  static bool is_zero(const Polynomial<R>& x) { return x.is_zero(); }
  static std::optional<Polynomial<R>> unit_inverse(const Polynomial<R>& x)
  {
    if (x.degree() != 0)
      return std::nullopt;
    auto inv = RingTraits<R>::unit_inverse(x.coeff(0));
    if (!inv)
      return std::nullopt;
    return Polynomial<R>(*inv);
  }
  static Polynomial<R> divide_exact(const Polynomial<R>& x, long n)
  {
    return x.map_coefficients([n](const R& c) { return RingTraits<R>::divide_exact(c, n); });
  }
  static std::string to_string(const Polynomial<R>& x) { return x.to_string("q"); }
};

/// Polynomials in the Hecke parameter q.
using ZPoly = Polynomial<Integer>;
using QPoly = Polynomial<Rational>;

namespace detail {

inline bool needs_parens(const std::string& s)
{
  return s.find_first_of("+ ", 1) != std::string::npos;
}

} // namespace detail

template<typename R>
std::string Polynomial<R>::to_string(const std::string& var) const
{
  if (is_zero())
    return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (RingTraits<R>::is_zero(coeffs_[i]))
      continue;
    std::string c = RingTraits<R>::to_string(coeffs_[i]);
    bool negative = false;
    if (!detail::needs_parens(c) && c.front() == '-') {
      negative = true;
      c.erase(0, 1);
    }
    if (detail::needs_parens(c))
      c = "(" + c + ")";
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    first = false;
    if (i == 0) {
      out << c;
      continue;
    }
    if (c != "1") {
      out << c;
      if (c.find_first_of("abcdefghijklmnopqrstuvwxyz") != std::string::npos)
        out << '*';
    }
    out << var;
    if (i > 1)
      out << '^' << i;
  }
  return out.str();
}

/// Quotient a / b when b has an invertible constant term and the division is
/// exact; std::nullopt otherwise.
template<typename R>
std::optional<Polynomial<R>> divide_exact(const Polynomial<R>& a, const Polynomial<R>& b)
{
  if (b.is_zero())
    throw ArithmeticError("division by the zero polynomial");
  if (a.is_zero())
    return Polynomial<R>();
  if (a.degree() < b.degree())
    return std::nullopt;
  auto inv0 = RingTraits<R>::unit_inverse(b.coeff(0));
  if (!inv0)
    throw ArithmeticError("divisor constant term is not a unit");
  std::vector<R> rem = a.coefficients();
  std::size_t qdeg = static_cast<std::size_t>(a.degree() - b.degree());
  std::vector<R> quot(qdeg + 1, RingTraits<R>::zero());
  const auto& bc = b.coefficients();
  for (std::size_t i = 0; i <= qdeg; ++i) {
    R c = rem[i] * *inv0;
    quot[i] = c;
    if (RingTraits<R>::is_zero(c))
      continue;
    for (std::size_t j = 0; j < bc.size(); ++j)
      rem[i + j] -= c * bc[j];
  }
  for (const auto& r : rem)
    if (!RingTraits<R>::is_zero(r))
      return std::nullopt;
  return Polynomial<R>(std::move(quot));
}

/// Euclidean division over Q.
inline std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b)
{
  if (b.is_zero())
    throw ArithmeticError("division by the zero polynomial");
  std::vector<Rational> rem = a.coefficients();
  if (a.degree() < b.degree())
    return {QPoly(), a};
  std::size_t qdeg = static_cast<std::size_t>(a.degree() - b.degree());
  std::vector<Rational> quot(qdeg + 1);
  Rational lead = b.leading();
  const auto& bc = b.coefficients();
  for (std::size_t k = qdeg + 1; k-- > 0;) {
    Rational c = rem[k + bc.size() - 1] / lead;
    quot[k] = c;
    if (sgn(c) == 0)
      continue;
    for (std::size_t j = 0; j < bc.size(); ++j)
      rem[k + j] -= c * bc[j];
  }
  rem.resize(bc.size() - 1);
  return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

/// Greatest common divisor over Q, normalized to constant term 1 when that
/// term is nonzero and to a monic polynomial otherwise.
inline QPoly gcd(QPoly a, QPoly b)
{
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero())
    return a;
  Rational scale = sgn(a.coeff(0)) != 0 ? a.coeff(0) : a.leading();
  return a.map_coefficients([&](const Rational& c) { return Rational(c / scale); });
}

inline QPoly to_rational(const ZPoly& p)
{
  return p.map_coefficients([](const Integer& c) { return Rational(c); });
}

/// Converts a polynomial with integral rational coefficients back to Z[u].
inline ZPoly to_integer(const QPoly& p)
{
  return p.map_coefficients([](const Rational& c) {
    if (!is_integral(c))
      throw ArithmeticError("polynomial has non-integral coefficient " + c.get_str());
    return Integer(c.get_num());
  });
}

/// (1 - u^d)^e for e >= 0.
template<typename R>
Polynomial<R> one_minus_power(std::size_t d, std::size_t e = 1)
{
  Polynomial<R> base = Polynomial<R>(RingTraits<R>::one()) - Polynomial<R>::monomial(RingTraits<R>::one(), d);
  Polynomial<R> out(RingTraits<R>::one());
  for (std::size_t i = 0; i < e; ++i)
    out *= base;
  return out;
}

} // namespace weylzeta
