#include "weylzeta/hecke.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace weylzeta {

HeckeElement HeckeElement::basis(ElementId w, ZPoly c)
{
  HeckeElement x;
  x.add(w, c);
  return x;
}

void HeckeElement::add(ElementId w, const ZPoly& c)
{
  if (c.is_zero())
    return;
  auto [it, fresh] = terms_.emplace(w, c);
  if (fresh)
    return;
  it->second += c;
  if (it->second.is_zero())
    terms_.erase(it);
}

ZPoly HeckeElement::coeff(ElementId w) const
{
  auto it = terms_.find(w);
  return it == terms_.end() ? ZPoly() : it->second;
}

HeckeElement operator+(const HeckeElement& a, const HeckeElement& b)
{
  HeckeElement out = a;
  for (const auto& [w, c] : b.terms_)
    out.add(w, c);
  return out;
}

HeckeElement operator*(const ZPoly& c, const HeckeElement& a)
{
  HeckeElement out;
  for (const auto& [w, x] : a.terms_)
    out.add(w, c * x);
  return out;
}

std::string HeckeElement::to_string(const ElementTable& table) const
{
  if (terms_.empty())
    return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    out << (first ? "" : " + ") << '(' << c.to_string("q") << ")*e[" << format_word(table.element(w).word) << ']';
    first = false;
  }
  return out.str();
}

HeckeElement hecke_mul_generator(const ElementTable& table, const HeckeElement& x, std::size_t s)
{
  const ZPoly q = ZPoly::variable();
  const ZPoly q_minus_one = q - ZPoly(Integer(1));
  HeckeElement out;
  for (const auto& [w, c] : x.terms()) {
    ElementId ws = table.right_multiple(w, s);
    if (ws == kNoElement)
      throw OutOfTableBound("Hecke product leaves the element table (bound " + std::to_string(table.bound()) + ")");
    if (table.element(ws).length > table.element(w).length) {
      out.add(ws, c);
    } else {
      out.add(w, q_minus_one * c);
      out.add(ws, q * c);
    }
  }
  return out;
}

HeckeElement hecke_mul(const ElementTable& table, const HeckeElement& x, const HeckeElement& y)
{
  HeckeElement out;
  for (const auto& [v, c] : y.terms()) {
    HeckeElement part = x;
    for (int s : table.element(v).word)
      part = hecke_mul_generator(table, part, static_cast<std::size_t>(s));
    out = out + c * part;
  }
  return out;
}

std::map<ElementId, Integer> specialize(const HeckeElement& x, const Integer& value)
{
  std::map<ElementId, Integer> out;
  for (const auto& [w, c] : x.terms()) {
    Integer v = c.evaluate(value);
    if (sgn(v) != 0)
      out.emplace(w, v);
  }
  return out;
}

std::string Character::label() const
{
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i)
    out += (i ? "," : "") + std::string(values[i] == CharacterValue::Q ? "q" : "-1");
  return out;
}

bool Character::is_trivial() const
{
  for (auto v : values)
    if (v != CharacterValue::Q)
      return false;
  return true;
}

std::vector<Character> characters(const CoxeterSystem& system)
{
  const std::size_t k = system.rank();
  // e_s and e_t are conjugate when m_st is odd, so they take the same value
  std::vector<std::size_t> parent(k);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t s = 0; s < k; ++s)
    for (std::size_t t = s + 1; t < k; ++t) {
      int m = system.coxeter_entry(s, t);
      if (m != kInfiniteOrder && m % 2 == 1)
        parent[find(s)] = find(t);
    }
  std::vector<std::size_t> roots;
  std::vector<std::size_t> cls(k);
  for (std::size_t s = 0; s < k; ++s) {
    std::size_t r = find(s);
    auto it = std::find(roots.begin(), roots.end(), r);
    cls[s] = static_cast<std::size_t>(it - roots.begin());
    if (it == roots.end())
      roots.push_back(r);
  }
  std::vector<Character> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << roots.size()); ++mask) {
    Character chi;
    for (std::size_t s = 0; s < k; ++s)
      chi.values.push_back(mask & (std::size_t{1} << cls[s]) ? CharacterValue::MinusOne : CharacterValue::Q);
    out.push_back(std::move(chi));
  }
  return out;
}

Representation<ZPoly> character_representation(const CoxeterSystem& system, const Character& chi,
                                               const ElementTable* table)
{
  if (chi.values.size() != system.rank())
    throw std::invalid_argument("character has the wrong number of values");
  std::vector<Matrix<ZPoly>> gens;
  for (auto v : chi.values)
    gens.push_back(Matrix<ZPoly>::scalar(1, v == CharacterValue::Q ? ZPoly::variable() : ZPoly(Integer(-1))));
  return Representation<ZPoly>::validate(system, std::move(gens), ZPoly::variable(), table);
}

} // namespace weylzeta
