// Rational functions num(u)/den(u) whose denominator has a unit constant
// term, so that every value has a power series expansion at u = 0.
#pragma once

#include "weylzeta/polynomial.hpp"
#include "weylzeta/power_series.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>

namespace weylzeta {

template<typename R>
class RationalFunction
{
public:
  using Poly = Polynomial<R>;

  RationalFunction()
  : num_(), den_(RingTraits<R>::one())
  {}

  RationalFunction(Poly num)
  : num_(std::move(num)), den_(RingTraits<R>::one())
  {}

  RationalFunction(Poly num, Poly den)
  : num_(std::move(num)), den_(std::move(den))
  {
    if (!RingTraits<R>::unit_inverse(den_.coeff(0)))
      throw ArithmeticError("rational function denominator must have a unit constant term");
  }

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }

  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b)
  { return RationalFunction(a.num_ * b.num_, a.den_ * b.den_); }

  /// a / b; b's numerator must have a unit constant term.
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b)
  { return RationalFunction(a.num_ * b.den_, a.den_ * b.num_); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b)
  {
    if (a.den_ == b.den_)
      return RationalFunction(a.num_ + b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }

  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b)
  {
    if (a.den_ == b.den_)
      return RationalFunction(a.num_ - b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }

  RationalFunction inverse() const { return RationalFunction(den_, num_); }

  /// f^e for any integer e (negative powers need a unit constant term).
  RationalFunction pow(long e) const
  {
    RationalFunction base = e < 0 ? inverse() : *this;
    RationalFunction out;
    out.num_ = Poly(RingTraits<R>::one());
    for (long i = 0; i < (e < 0 ? -e : e); ++i)
      out = out * base;
    return out;
  }

  /// Equality as rational functions (cross multiplication).
  friend bool operator==(const RationalFunction& a, const RationalFunction& b)
  { return a.num_ * b.den_ == b.num_ * a.den_; }

  /// Power series expansion to the given order.
  PowerSeries<R> expand(std::size_t order) const
  {
    auto n = PowerSeries<R>::from_polynomial(num_, order);
    auto d = PowerSeries<R>::from_polynomial(den_, order);
    return n * d.inverse();
  }

  /// The polynomial this function equals, if it is one.
  std::optional<Poly> as_polynomial() const { return divide_exact(num_, den_); }

  /// f(u^k).
  RationalFunction substitute_power(std::size_t k) const
  { return RationalFunction(num_.substitute_power(k), den_.substitute_power(k)); }

  std::string to_string(const std::string& var = "u") const
  {
    if (den_ == Poly(RingTraits<R>::one()))
      return num_.to_string(var);
    const std::string n = num_.to_string(var);
    return (detail::needs_parens(n) ? "(" + n + ")" : n) + "/(" + den_.to_string(var) + ")";
  }

private:
  Poly num_;
  Poly den_;
};

using RationalFunctionQ = RationalFunction<Rational>;

/// Reduces a rational function over Q to lowest terms with den(0) = 1.
inline RationalFunctionQ reduced(const RationalFunctionQ& f)
{
  QPoly g = gcd(f.numerator(), f.denominator());
  QPoly num = divmod(f.numerator(), g).first;
  QPoly den = divmod(f.denominator(), g).first;
  Rational c = den.coeff(0);
  auto scale = [&](const Rational& x) { return Rational(x / c); };
  return RationalFunctionQ(num.map_coefficients(scale), den.map_coefficients(scale));
}

inline RationalFunctionQ to_rational(const RationalFunction<Integer>& f)
{ return RationalFunctionQ(to_rational(f.numerator()), to_rational(f.denominator())); }

/// Exponents e_d with f = prod_d (1 - u^d)^{e_d}, when f has that form.
template<typename R>
std::optional<std::map<std::size_t, long>> cyclotomic_exponents(const RationalFunction<R>& f)
{
  if (!(f.numerator().coeff(0) == f.denominator().coeff(0)))
    return std::nullopt;
  // cancellation can hide factors: (1-u^2)/(1-u^6) reduces to degree 4
  const std::size_t bound = 2 * static_cast<std::size_t>(std::max<long>(0, f.numerator().degree()) +
                                                         std::max<long>(0, f.denominator().degree())) + 2;
  PowerSeries<R> s = f.expand(bound);
  std::map<std::size_t, long> exps;
  for (std::size_t d = 1; d <= bound; ++d) {
    const R c = s[d];
    if (RingTraits<R>::is_zero(c))
      continue;
    // the lowest surviving term of s is -e u^d
    long e = 0;
    if constexpr (std::is_same_v<R, Integer>) {
      if (!c.fits_slong_p())
        return std::nullopt;
      e = -c.get_si();
    } else if constexpr (std::is_same_v<R, Rational>) {
      if (!is_integral(c) || !c.get_num().fits_slong_p())
        return std::nullopt;
      e = -c.get_num().get_si();
    } else {
      return std::nullopt;
    }
    exps[d] = e;
    // divide out (1 - u^d)^e
    auto factor = PowerSeries<R>::from_polynomial(one_minus_power<R>(d), bound);
    if (e > 0)
      factor = factor.inverse();
    for (long i = 0; i < (e < 0 ? -e : e); ++i)
      s = s * factor;
  }
  RationalFunction<R> rebuilt(Polynomial<R>(RingTraits<R>::one()));
  for (const auto& [d, e] : exps)
    rebuilt = rebuilt * RationalFunction<R>(one_minus_power<R>(d)).pow(e);
  if (!(rebuilt == f))
    return std::nullopt;
  return exps;
}

/// Renders prod (1-u^d)^e as e.g. "(1-u^3)^2" or "(1-u^5)/(1-u^2)".
inline std::string format_cyclotomic(const std::map<std::size_t, long>& exps, const std::string& var = "u")
{
  auto factor = [&](std::size_t d, long e) {
    std::ostringstream o;
    o << "(1-" << var;
    if (d > 1)
      o << '^' << d;
    o << ')';
    if (e > 1)
      o << '^' << e;
    return o.str();
  };
  std::string num;
  std::string den;
  // larger degrees first, matching the usual way these products are written
  for (auto it = exps.rbegin(); it != exps.rend(); ++it) {
    if (it->second > 0)
      num += factor(it->first, it->second);
    else if (it->second < 0)
      den += factor(it->first, -it->second);
  }
  if (num.empty())
    num = "1";
  if (den.empty())
    return num;
  bool single = den.find(")(") == std::string::npos && den.back() == ')';
  return num + "/" + (single ? den : "(" + den + ")");
}

} // namespace weylzeta
