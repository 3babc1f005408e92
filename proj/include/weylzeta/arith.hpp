// Exact scalar types and the small trait layer the generic containers use.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace weylzeta {

using Integer = mpz_class;
using Rational = mpq_class;

class ArithmeticError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Ring operations needed by Polynomial, Matrix and PowerSeries beyond the
/// arithmetic operators. Specialized for each supported coefficient ring.
template<typename R>
struct RingTraits;

template<>
struct RingTraits<Integer>
{
  static Integer zero() { return Integer(0); }
  static Integer one() { return Integer(1); }
  static bool is_zero(const Integer& x) { return sgn(x) == 0; }
  static std::optional<Integer> unit_inverse(const Integer& x)
  {
    if (x == 1 || x == -1)
      return x;
    return std::nullopt;
  }
  static Integer divide_exact(const Integer& x, long n)
  {
    Integer d(n);
    if (!mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()))
      throw ArithmeticError("integer division is not exact");
    Integer r;
    mpz_divexact(r.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
    return r;
  }
  static std::string to_string(const Integer& x) { return x.get_str(); }
};

template<>
struct RingTraits<Rational>
{
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static std::optional<Rational> unit_inverse(const Rational& x)
  {
    if (sgn(x) == 0)
      return std::nullopt;
    return Rational(1) / x;
  }
  static Rational divide_exact(const Rational& x, long n) { return x / Rational(n); }
  static std::string to_string(const Rational& x) { return x.get_str(); }
};

/// Parses "a", "-a" or "a/b" into a canonical rational.
inline Rational parse_rational(const std::string& text)
{
  Rational r;
  if (r.set_str(text, 10) != 0)
    throw ArithmeticError("not a rational number: '" + text + "'");
  r.canonicalize();
  return r;
}

inline bool is_integral(const Rational& x) { return x.get_den() == 1; }

} // namespace weylzeta
