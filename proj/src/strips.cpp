#include "weylzeta/strips.hpp"

#include <functional>
#include <unordered_set>

namespace weylzeta {

namespace {

// 1-based generator numbers as used in the rank-2 tables below
Word w(std::initializer_list<int> one_based)
{
  Word out;
  for (int s : one_based)
    out.push_back(s - 1);
  return out;
}

GeneratorSet gens(std::initializer_list<int> one_based) { return w(one_based); }

std::string set_label(const GeneratorSet& set)
{
  std::string out;
  for (int s : set)
    out += std::to_string(s + 1);
  return out.empty() ? "{}" : out;
}

void require_rank2_affine(const std::string& tag)
{
  if (tag != "A2t" && tag != "C2t" && tag != "G2t")
    throw std::invalid_argument("strip data exists for A2t, C2t and G2t only, not " + tag);
}

} // namespace

std::pair<StripSpec, StripSpec> strip_generators(const CoxeterSystem& system)
{
  const std::string& tag = system.type_tag();
  require_rank2_affine(tag);
  Word w1;
  Word w2;
  if (tag == "A2t") {
    w1 = w({3, 2, 1});
    w2 = w({3, 1, 2});
  } else if (tag == "C2t") {
    w1 = w({3, 1, 2, 1});
    w2 = w({3, 1, 2});
  } else {
    // s1 (s3 s1 s2 s3 s1) s1 shortens to s3 s1 s2
    w1 = w({3, 1, 2});
    w2 = w({3, 1, 2, 1, 2});
  }
  StripSpec a{tag, 1, w1, word_length(system, w1)};
  StripSpec b{tag, 2, w2, word_length(system, w2)};
  if (a.length != w1.size() || b.length != w2.size())
    throw std::logic_error("strip generator word is not reduced for " + tag);
  return {a, b};
}

Word g2_unreplaced_w1() { return w({3, 1, 2, 3, 1}); }

PowerLengthReport check_power_lengths(const ElementTable& table, const Word& word, std::size_t k_max)
{
  const CoxeterSystem& sys = table.system();
  const std::size_t l = word_length(sys, word);
  if (k_max * l > table.bound())
    throw std::invalid_argument("k_max * l(w) exceeds the table bound");
  PowerLengthReport out;
  out.word = word;
  out.k_max = k_max;
  const ElementMatrix step = sys.evaluate(word);
  ElementMatrix power = sys.identity();
  for (std::size_t k = 0; k <= k_max; ++k) {
    auto id = table.find(power);
    // l(w^k) <= k l(w) <= bound, so w^k is always in the table
    if (!id)
      throw std::logic_error("power of w missing from the table");
    const std::size_t lk = table.element(*id).length;
    out.lengths.push_back(lk);
    if (lk != k * l && out.pass) {
      out.pass = false;
      out.first_failure = k;
    }
    power = sys.multiply(power, step);
  }
  return out;
}

std::string FactorDescriptor::label() const
{
  switch (kind) {
  case Kind::RightCosets: return "W_{" + set_label(j_set) + "/" + set_label(i_set) + "}";
  case Kind::LeftCosets: return "W_{" + set_label(i_set) + "\\" + set_label(j_set) + "}";
  case Kind::Parabolic: return "W_{" + set_label(j_set) + "}";
  case Kind::Cyclic: return "H" + std::to_string(strip);
  }
  return {};
}

std::string FactorizationScheme::label() const
{
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i)
    out += (i ? " " : "") + factors[i].label();
  return out;
}

FactorizationScheme factorization_scheme(const std::string& type_tag)
{
  require_rank2_affine(type_tag);
  using K = FactorDescriptor::Kind;
  FactorizationScheme s;
  s.type_tag = type_tag;
  if (type_tag == "G2t") {
    // H_2 before H_1: with H_1 first, w_1 w_2 s_1 has length 7, not 9
    s.factors = {
      {K::RightCosets, gens({1}), gens({1, 2}), 0},
      {K::Cyclic, {}, {}, 2},
      {K::Cyclic, {}, {}, 1},
      {K::Parabolic, {}, gens({1, 3}), 0},
    };
  } else {
    // W_{1\13} is taken inside W_{13}
    s.factors = {
      {K::RightCosets, gens({2}), gens({1, 2}), 0},
      {K::Cyclic, {}, {}, 1},
      {K::RightCosets, gens({3}), gens({2, 3}), 0},
      {K::Cyclic, {}, {}, 2},
      {K::LeftCosets, gens({1}), gens({1, 3}), 0},
    };
  }
  return s;
}

std::vector<ElementId> factor_elements(const ElementTable& table, const FactorDescriptor& factor, std::size_t max_length)
{
  using K = FactorDescriptor::Kind;
  switch (factor.kind) {
  case K::RightCosets: return min_coset_reps(table, factor.i_set, factor.j_set, CosetSide::RightDescentFree);
  case K::LeftCosets: return min_coset_reps(table, factor.i_set, factor.j_set, CosetSide::LeftDescentFree);
  case K::Parabolic: return parabolic_elements(table, factor.j_set);
  case K::Cyclic: {
    auto specs = strip_generators(table.system());
    const StripSpec& spec = factor.strip == 1 ? specs.first : specs.second;
    const CoxeterSystem& sys = table.system();
    const ElementMatrix step = sys.evaluate(spec.word);
    ElementMatrix power = sys.identity();
    std::vector<ElementId> out;
    for (std::size_t k = 0; k * spec.length <= max_length; ++k) {
      auto id = table.find(power);
      if (!id)
        throw OutOfTableBound("strip power beyond the table bound");
      out.push_back(*id);
      power = sys.multiply(power, step);
    }
    return out;
  }
  }
  return {};
}

CensusReport factorization_census(const ElementTable& table, const FactorizationScheme& scheme, std::size_t order)
{
  const CoxeterSystem& sys = table.system();
  if (sys.type_tag() != scheme.type_tag)
    throw std::invalid_argument("scheme is for " + scheme.type_tag + ", table for " + sys.type_tag());
  if (order > table.bound())
    throw std::invalid_argument("census order exceeds the table bound");

  std::vector<std::vector<ElementId>> sets;
  for (const auto& f : scheme.factors)
    sets.push_back(factor_elements(table, f, order));

  CensusReport out;
  out.type_tag = sys.type_tag();
  out.scheme = scheme.label();
  out.order = order;
  out.slice_counts.assign(order + 1, Integer(0));
  out.expected = poincare_affine(sys, order).series.coefficients();

  std::unordered_set<ElementId> seen;
  std::vector<ElementId> chosen(sets.size());
  auto fail = [&](bool& flag) {
    flag = false;
    if (!out.witness) {
      std::vector<Word> words;
      for (ElementId id : chosen)
        words.push_back(table.element(id).word);
      out.witness = words;
    }
  };
  std::function<void(std::size_t, const ElementMatrix&, std::size_t)> walk =
    [&](std::size_t depth, const ElementMatrix& prefix, std::size_t total) {
      if (depth == sets.size()) {
        auto id = table.find(prefix);
        if (!id || table.element(*id).length != total) {
          fail(out.lengths_add);
          return;
        }
        if (!seen.insert(*id).second)
          fail(out.distinct);
        out.slice_counts[total] += 1;
        return;
      }
      for (ElementId d : sets[depth]) {
        const std::size_t l = table.element(d).length;
        if (total + l > order)
          continue;
        chosen[depth] = d;
        walk(depth + 1, sys.multiply(prefix, table.element(d).matrix), total + l);
      }
    };
  walk(0, sys.identity(), 0);

  out.counts_match = out.slice_counts == out.expected;
  out.pass = out.lengths_add && out.distinct && out.counts_match;
  return out;
}

} // namespace weylzeta
