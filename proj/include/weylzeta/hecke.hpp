// The Hecke algebra H_q(W,S): basis arithmetic, one-dimensional characters,
// validated matrix representations and twisted Poincare series
// D(rho,u) = sum_{w in D} rho(e_w) u^l(w).
#pragma once

#include "weylzeta/coxeter.hpp"
#include "weylzeta/matrix.hpp"
#include "weylzeta/power_series.hpp"
#include "weylzeta/rational_function.hpp"
#include "weylzeta/series.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace weylzeta {

/// Finite combination sum c_w e_w with c_w in Z[q]; zero terms are pruned.
class HeckeElement
{
public:
  HeckeElement() = default;

  static HeckeElement basis(ElementId w, ZPoly c = ZPoly(Integer(1)));

  void add(ElementId w, const ZPoly& c);
  const std::map<ElementId, ZPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  ZPoly coeff(ElementId w) const;

  friend HeckeElement operator+(const HeckeElement& a, const HeckeElement& b);
  friend HeckeElement operator*(const ZPoly& c, const HeckeElement& a);
  friend bool operator==(const HeckeElement& a, const HeckeElement& b) { return a.terms_ == b.terms_; }

  std::string to_string(const ElementTable& table) const;

private:
  std::map<ElementId, ZPoly> terms_;
};

/// x e_s: e_w e_s = e_{ws} when l(ws) > l(w), else (q-1) e_w + q e_{ws}.
/// Throws OutOfTableBound when the support leaves the table.
HeckeElement hecke_mul_generator(const ElementTable& table, const HeckeElement& x, std::size_t s);

/// x y, expanding each e_v of y along its reduced word.
HeckeElement hecke_mul(const ElementTable& table, const HeckeElement& x, const HeckeElement& y);

/// Coefficients evaluated at q = value.
std::map<ElementId, Integer> specialize(const HeckeElement& x, const Integer& value);

enum class CharacterValue
{
  Q,
  MinusOne,
};

/// A one-dimensional character e_s -> q or -1, constant on classes of
/// generators joined by odd bonds.
struct Character
{
  std::vector<CharacterValue> values;

  /// "q,-1,q" style label.
  std::string label() const;
  bool is_trivial() const;
};

/// Every character, starting with rho_1 (all q) and ending with the sign
/// character (all -1).
std::vector<Character> characters(const CoxeterSystem& system);

/// Which relation a candidate representation breaks.
class RepresentationError : public std::runtime_error
{
public:
  RepresentationError(std::string relation, int s, int t, const std::string& what)
  : std::runtime_error(what), relation_(std::move(relation)), s_(s), t_(t)
  {}

  /// "dimension", "quadratic", "braid" or "path".
  const std::string& relation() const { return relation_; }
  /// 1-based generator numbers involved (0 when not applicable).
  int first() const { return s_; }
  int second() const { return t_; }

private:
  std::string relation_;
  int s_;
  int t_;
};

/// Matrix images rho(e_s) satisfying the Hecke relations for a given value
/// of q in the scalar ring R. Immutable once validated.
template<typename R>
class Representation
{
public:
  /// Checks (rho(e_s)+1)(rho(e_s)-q) = 0 and the braid relations for every
  /// finite m_st. When a table is given, rho(e_w) is cached for all of its
  /// elements and path independence is checked on every element with a
  /// left descent (up to path_checks of them).
  static Representation validate(const CoxeterSystem& system, std::vector<Matrix<R>> generators, R q,
                                 const ElementTable* table = nullptr, std::size_t path_checks = 2000);

  std::size_t dim() const { return generators_.front().dim(); }
  std::size_t rank() const { return generators_.size(); }
  const R& q() const { return q_; }
  const Matrix<R>& generator(std::size_t s) const { return generators_.at(s); }

  /// rho(e_w) for a reduced word (the product of generator images).
  Matrix<R> image(const Word& word) const;

  bool has_cache() const { return !cache_.empty(); }
  /// Cached rho(e_w); throws if no table was supplied.
  const Matrix<R>& image(ElementId w) const;

private:
  Representation() = default;

  std::vector<Matrix<R>> generators_;
  R q_;
  std::vector<Matrix<R>> cache_;
};

/// rho_chi as 1x1 matrices over Z[q] with q formal.
Representation<ZPoly> character_representation(const CoxeterSystem& system, const Character& chi,
                                               const ElementTable* table = nullptr);

/// Twisted series of a finite set (an exact matrix polynomial) or of a
/// cyclic set {w^k : k >= 0} with l(w^k) = k l(w), kept in the closed form
/// (I - rho(e_w) u^l)^{-1}.
template<typename R>
class TwistedSeries
{
public:
  struct Finite
  {
    std::vector<Matrix<R>> coeffs;
  };
  struct Cyclic
  {
    Matrix<R> generator;
    std::size_t length;
  };

  explicit TwistedSeries(Finite f)
  : data_(std::move(f))
  {}
  explicit TwistedSeries(Cyclic c)
  : data_(std::move(c))
  {}

  bool is_finite() const { return std::holds_alternative<Finite>(data_); }
  const Finite& finite() const { return std::get<Finite>(data_); }
  const Cyclic& cyclic() const { return std::get<Cyclic>(data_); }

  PowerSeries<Matrix<R>> truncate(std::size_t order) const;

  /// det D(rho,u) exactly: a polynomial for finite sets, 1/det(I - A u^l)
  /// for cyclic ones.
  RationalFunction<R> det() const;

private:
  std::variant<Finite, Cyclic> data_;
};

/// sum_{w in set} rho(e_w) u^l(w) using the representation's cache.
template<typename R>
TwistedSeries<R> twisted_series(const ElementTable& table, const std::vector<ElementId>& set,
                                const Representation<R>& rho);

/// Closed form for {w^k}, w given by a reduced word of length l.
template<typename R>
TwistedSeries<R> twisted_cyclic(const Word& word, const Representation<R>& rho);

// ---------------------------------------------------------------------------

template<typename R>
Representation<R> Representation<R>::validate(const CoxeterSystem& system, std::vector<Matrix<R>> generators, R q,
                                              const ElementTable* table, std::size_t path_checks)
{
  if (generators.size() != system.rank())
    throw RepresentationError("dimension", 0, 0,
                              "expected " + std::to_string(system.rank()) + " generator matrices, got " +
                                std::to_string(generators.size()));
  if (generators.empty() || generators.front().dim() == 0)
    throw RepresentationError("dimension", 0, 0, "representation needs positive dimension");
  const std::size_t d = generators.front().dim();
  for (std::size_t s = 0; s < generators.size(); ++s)
    if (generators[s].dim() != d)
      throw RepresentationError("dimension", static_cast<int>(s + 1), 0,
                                "generator s" + std::to_string(s + 1) + " has the wrong dimension");

  const Matrix<R> id = Matrix<R>::identity(d);
  for (std::size_t s = 0; s < generators.size(); ++s) {
    const Matrix<R>& g = generators[s];
    if (!((g + id) * (g - Matrix<R>::scalar(d, q))).is_zero())
      throw RepresentationError("quadratic", static_cast<int>(s + 1), 0,
                                "(rho(e_s)+1)(rho(e_s)-q) != 0 for s" + std::to_string(s + 1));
  }
  for (std::size_t s = 0; s < generators.size(); ++s)
    for (std::size_t t = s + 1; t < generators.size(); ++t) {
      const int m = system.coxeter_entry(s, t);
      if (m == kInfiniteOrder)
        continue;
      Matrix<R> a = id;
      Matrix<R> b = id;
      for (int i = 0; i < m; ++i) {
        a *= generators[i % 2 == 0 ? s : t];
        b *= generators[i % 2 == 0 ? t : s];
      }
      if (!(a == b))
        throw RepresentationError("braid", static_cast<int>(s + 1), static_cast<int>(t + 1),
                                  "braid relation of length " + std::to_string(m) + " fails for s" +
                                    std::to_string(s + 1) + ", s" + std::to_string(t + 1));
    }

  Representation rep;
  rep.generators_ = std::move(generators);
  rep.q_ = std::move(q);
  if (!table)
    return rep;

  // rho(e_{ws}) = rho(e_w) rho(e_s) along the first edge reaching ws
  const std::size_t n = table->size();
  std::vector<bool> done(n, false);
  rep.cache_.assign(n, Matrix<R>());
  rep.cache_[table->identity()] = id;
  done[table->identity()] = true;
  for (const auto& layer : table->layers())
    for (ElementId w : layer)
      for (int s : table->generators()) {
        ElementId ws = table->right_multiple(w, static_cast<std::size_t>(s));
        if (ws == kNoElement || done[ws] || table->element(ws).length != table->element(w).length + 1)
          continue;
        rep.cache_[ws] = rep.cache_[w] * rep.generators_[static_cast<std::size_t>(s)];
        done[ws] = true;
      }
  // path independence: rho(e_s) rho(e_{sw}) must give the same matrix
  std::size_t checked = 0;
  for (ElementId w = 0; w < n && checked < path_checks; ++w)
    for (int s : table->generators()) {
      if (!table->has_left_descent(w, static_cast<std::size_t>(s)))
        continue;
      ElementId sw = table->left_multiple(w, static_cast<std::size_t>(s));
      if (!(rep.generators_[static_cast<std::size_t>(s)] * rep.cache_[sw] == rep.cache_[w]))
        throw RepresentationError("path", s + 1, 0,
                                  "rho(e_w) depends on the reduced word for w = " +
                                    format_word(table->element(w).word));
      ++checked;
      break;
    }
  return rep;
}

template<typename R>
Matrix<R> Representation<R>::image(const Word& word) const
{
  Matrix<R> m = Matrix<R>::identity(dim());
  for (int s : word)
    m *= generators_.at(static_cast<std::size_t>(s));
  return m;
}

template<typename R>
const Matrix<R>& Representation<R>::image(ElementId w) const
{
  if (cache_.empty())
    throw std::logic_error("representation was validated without an element table");
  return cache_.at(w);
}

template<typename R>
PowerSeries<Matrix<R>> TwistedSeries<R>::truncate(std::size_t order) const
{
  if (is_finite())
    return to_series(finite().coeffs, order);
  const Cyclic& c = cyclic();
  if (c.length == 0)
    throw std::logic_error("cyclic twisted series needs a nontrivial generator");
  const std::size_t d = c.generator.dim();
  std::vector<Matrix<R>> v(order + 1, Matrix<R>::zero(d));
  Matrix<R> power = Matrix<R>::identity(d);
  for (std::size_t k = 0; k * c.length <= order; ++k) {
    v[k * c.length] = power;
    power *= c.generator;
  }
  return PowerSeries<Matrix<R>>(std::move(v));
}

template<typename R>
RationalFunction<R> TwistedSeries<R>::det() const
{
  using Poly = Polynomial<R>;
  if (is_finite())
    return RationalFunction<R>(det_polynomial(finite().coeffs));
  const Cyclic& c = cyclic();
  return RationalFunction<R>(Poly(RingTraits<R>::one()), det_one_minus(c.generator).substitute_power(c.length));
}

template<typename R>
TwistedSeries<R> twisted_series(const ElementTable& table, const std::vector<ElementId>& set, const Representation<R>& rho)
{
  const std::size_t d = rho.dim();
  std::vector<Matrix<R>> coeffs(1, Matrix<R>::zero(d));
  for (ElementId w : set) {
    const std::size_t l = table.element(w).length;
    if (coeffs.size() <= l)
      coeffs.resize(l + 1, Matrix<R>::zero(d));
    coeffs[l] += rho.image(w);
  }
  return TwistedSeries<R>(typename TwistedSeries<R>::Finite{std::move(coeffs)});
}

template<typename R>
TwistedSeries<R> twisted_cyclic(const Word& word, const Representation<R>& rho)
{
  return TwistedSeries<R>(typename TwistedSeries<R>::Cyclic{rho.image(word), word.size()});
}

} // namespace weylzeta
