#include "weylzeta/coxeter.hpp"

#include "weylzeta/matrix.hpp"
#include "weylzeta/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

namespace weylzeta {

namespace {

bool contains(const GeneratorSet& set, int s) { return std::find(set.begin(), set.end(), s) != set.end(); }

void check_generators(const GeneratorSet& set, std::size_t rank)
{
  for (int s : set)
    if (s < 0 || static_cast<std::size_t>(s) >= rank)
      throw std::invalid_argument("generator index out of range: " + std::to_string(s + 1));
}

// Column s of the element matrix is w(alpha_s) in simple-root coordinates.
bool column_is_negative(const ElementMatrix& m, std::size_t k, std::size_t s)
{
  for (std::size_t r = 0; r < k; ++r)
    if (m[r * k + s] > 0)
      return false;
  return true;
}

} // namespace

CoxeterSystem::CoxeterSystem(std::string type_tag, IntMatrix cartan, std::vector<std::int64_t> null_root)
: type_tag_(std::move(type_tag)), cartan_(std::move(cartan)), null_root_(std::move(null_root))
{
  const std::size_t k = cartan_.size();
  if (k == 0)
    throw std::invalid_argument("Coxeter system needs at least one generator");
  coxeter_.assign(k, std::vector<int>(k, 1));
  for (std::size_t i = 0; i < k; ++i) {
    if (cartan_[i].size() != k || cartan_[i][i] != 2)
      throw std::invalid_argument("malformed Cartan matrix");
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j)
        continue;
      if (cartan_[i][j] > 0 || (cartan_[i][j] == 0) != (cartan_[j][i] == 0))
        throw std::invalid_argument("malformed Cartan matrix");
      coxeter_[i][j] = coxeter_order(cartan_[i][j], cartan_[j][i]);
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    labels_.push_back("s" + std::to_string(i + 1));
    ElementMatrix g = identity();
    for (std::size_t c = 0; c < k; ++c)
      g[i * k + c] -= cartan_[i][c];
    generators_.push_back(std::move(g));
  }
}

ElementMatrix CoxeterSystem::identity() const
{
  const std::size_t k = rank();
  ElementMatrix m(k * k, 0);
  for (std::size_t i = 0; i < k; ++i)
    m[i * k + i] = 1;
  return m;
}

ElementMatrix CoxeterSystem::multiply(const ElementMatrix& a, const ElementMatrix& b) const
{
  const std::size_t k = rank();
  ElementMatrix c(k * k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      const std::int64_t x = a[i * k + l];
      if (x == 0)
        continue;
      for (std::size_t j = 0; j < k; ++j)
        c[i * k + j] += x * b[l * k + j];
    }
  return c;
}

ElementMatrix CoxeterSystem::evaluate(const Word& word) const
{
  ElementMatrix m = identity();
  for (int s : word) {
    if (s < 0 || static_cast<std::size_t>(s) >= rank())
      throw std::invalid_argument("generator index out of range: " + std::to_string(s + 1));
    m = multiply(m, generators_[static_cast<std::size_t>(s)]);
  }
  return m;
}

bool CoxeterSystem::parabolic_is_finite(const GeneratorSet& subset) const
{
  check_generators(subset, rank());
  // A Cartan matrix is of finite type iff all its principal minors are
  // positive.
  const std::size_t n = subset.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<int> idx;
    for (std::size_t b = 0; b < n; ++b)
      if (mask & (std::size_t{1} << b))
        idx.push_back(subset[b]);
    Matrix<Integer> m(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < idx.size(); ++j)
        m(i, j) = Integer(static_cast<long>(cartan_[static_cast<std::size_t>(idx[i])][static_cast<std::size_t>(idx[j])]));
    if (sgn(determinant(m)) <= 0)
      return false;
  }
  return true;
}

GeneratorSet CoxeterSystem::all_generators() const
{
  GeneratorSet g(rank());
  for (std::size_t i = 0; i < rank(); ++i)
    g[i] = static_cast<int>(i);
  return g;
}

CoxeterSystem build_system(char family, int rank, bool affine)
{
  CartanType t{family, rank, affine};
  validate_finite_type(family, rank);
  if (!affine)
    return CoxeterSystem(t.tag(), cartan_from_gram(gram_matrix(family, rank)));
  if (family == 'A' && rank == 1)
    return CoxeterSystem(t.tag(), IntMatrix{{2, -2}, {-2, 2}}, {1, 1});
  RootSystem rs = positive_roots(family, rank);
  std::vector<std::size_t> order(static_cast<std::size_t>(rank));
  for (std::size_t i = 0; i < order.size(); ++i)
    order[i] = i;
  // s1 must be the long simple root so that s3 s1 has order 3
  if (family == 'G')
    order = {1, 0};
  AffineCartan ac = affine_cartan(rs, order);
  return CoxeterSystem(t.tag(), ac.cartan, ac.null_root);
}

CoxeterSystem build_system(const std::string& type_tag)
{
  CartanType t = parse_cartan_type(type_tag);
  return build_system(t.family, t.rank, t.affine);
}

std::size_t default_max_elements()
{
  if (const char* env = std::getenv("WEYLZETA_MAX_ELEMENTS")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0)
      return static_cast<std::size_t>(v);
  }
  return 2'000'000;
}

std::vector<std::size_t> ElementTable::layer_sizes() const
{
  std::vector<std::size_t> out;
  out.reserve(layers_.size());
  for (const auto& layer : layers_)
    out.push_back(layer.size());
  return out;
}

std::optional<ElementId> ElementTable::find(const ElementMatrix& m) const
{
  auto it = index_.find(m);
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

ElementId ElementTable::lookup(const Word& word) const
{
  auto id = find(system_.evaluate(word));
  if (!id)
    throw OutOfTableBound("word " + format_word(word) + " is longer than the table bound " + std::to_string(bound_));
  return *id;
}

ElementId ElementTable::left_multiple(ElementId w, std::size_t s) const
{
  auto id = find(system_.multiply(system_.generator(s), elements_.at(w).matrix));
  return id ? *id : kNoElement;
}

bool ElementTable::has_right_descent(ElementId w, std::size_t s) const
{
  return column_is_negative(elements_.at(w).matrix, system_.rank(), s);
}

bool ElementTable::has_left_descent(ElementId w, std::size_t s) const
{
  // s w is either one shorter (then it is in the table) or one longer.
  ElementId sw = left_multiple(w, s);
  return sw != kNoElement && elements_[sw].length < elements_[w].length;
}

bool ElementTable::in_parabolic(ElementId w, const GeneratorSet& subset) const
{
  for (int s : elements_.at(w).word)
    if (!contains(subset, s))
      return false;
  return true;
}

ElementId ElementTable::insert(GroupElement e)
{
  ElementId id = elements_.size();
  auto [it, fresh] = index_.emplace(e.matrix, id);
  if (!fresh)
    return it->second;
  if (layers_.size() <= e.length)
    layers_.resize(e.length + 1);
  layers_[e.length].push_back(id);
  elements_.push_back(std::move(e));
  return id;
}

void ElementTable::grow(std::size_t bound, std::size_t max_elements)
{
  const std::size_t k = system_.rank();
  insert(GroupElement{system_.identity(), 0, {}});
  bound_ = 0;
  while (bound_ < bound) {
    const std::vector<ElementId> frontier = layers_[bound_];
    std::size_t before = elements_.size();
    for (ElementId w : frontier) {
      for (int s : gens_) {
        const auto su = static_cast<std::size_t>(s);
        if (column_is_negative(elements_[w].matrix, k, su))
          continue;
        GroupElement next{system_.multiply(elements_[w].matrix, system_.generator(su)), bound_ + 1, elements_[w].word};
        next.word.push_back(s);
        insert(std::move(next));
        if (elements_.size() > max_elements)
          throw ResourceLimitExceeded("element table exceeds " + std::to_string(max_elements) +
                                      " elements (set WEYLZETA_MAX_ELEMENTS to raise the cap)");
      }
    }
    if (elements_.size() == before)
      break;
    ++bound_;
  }
  layers_.resize(bound_ + 1);
}

void ElementTable::link_right()
{
  const std::size_t k = system_.rank();
  right_.assign(elements_.size(), std::vector<ElementId>(k, kNoElement));
  for (ElementId w = 0; w < elements_.size(); ++w)
    for (int s : gens_) {
      const auto su = static_cast<std::size_t>(s);
      auto id = find(system_.multiply(elements_[w].matrix, system_.generator(su)));
      if (id)
        right_[w][su] = *id;
    }
}

ElementTable enumerate(const CoxeterSystem& system, std::size_t bound, const EnumerateOptions& opts)
{
  ElementTable t(system);
  t.gens_ = opts.generators.empty() ? system.all_generators() : opts.generators;
  check_generators(t.gens_, system.rank());
  t.grow(bound, opts.max_elements ? opts.max_elements : default_max_elements());
  // A finite group exhausted early still counts as enumerated to the bound.
  t.bound_ = std::max(t.bound_, bound);
  t.link_right();
  return t;
}

ElementTable enumerate_finite_parabolic(const CoxeterSystem& system, const GeneratorSet& subset, std::size_t max_elements)
{
  if (!system.parabolic_is_finite(subset))
    throw std::invalid_argument("parabolic subgroup is infinite");
  ElementTable t(system);
  t.gens_ = subset;
  t.grow(std::numeric_limits<std::size_t>::max(), max_elements ? max_elements : default_max_elements());
  t.link_right();
  return t;
}

Product multiply(const ElementTable& table, ElementId w, ElementId v)
{
  const auto& sys = table.system();
  auto id = table.find(sys.multiply(table.element(w).matrix, table.element(v).matrix));
  if (!id)
    throw OutOfTableBound("product " + format_word(table.element(w).word) + " * " + format_word(table.element(v).word) +
                          " lies beyond the table bound " + std::to_string(table.bound()));
  return {*id, table.element(*id).length == table.element(w).length + table.element(v).length};
}

std::vector<ElementId> parabolic_elements(const ElementTable& table, const GeneratorSet& j_set)
{
  check_generators(j_set, table.system().rank());
  for (int s : j_set)
    if (!contains(table.generators(), s))
      throw std::invalid_argument("table was not built with generator s" + std::to_string(s + 1));
  if (!table.system().parabolic_is_finite(j_set))
    throw std::invalid_argument("parabolic subgroup is infinite");
  std::vector<ElementId> out;
  bool closed = false;
  for (const auto& layer : table.layers()) {
    std::size_t count = 0;
    for (ElementId id : layer)
      if (table.in_parabolic(id, j_set)) {
        out.push_back(id);
        ++count;
      }
    if (count == 0) {
      closed = true;
      break;
    }
  }
  if (!closed && table.layers().size() <= table.bound())
    closed = true; // the whole table is a finite group exhausted early
  if (!closed)
    throw OutOfTableBound("parabolic subgroup does not fit inside the table bound");
  return out;
}

std::vector<ElementId> min_coset_reps(const ElementTable& table, const GeneratorSet& i_set, const GeneratorSet& j_set,
                                      CosetSide side)
{
  for (int s : i_set)
    if (!contains(j_set, s))
      throw std::invalid_argument("coset representatives need I contained in J");
  std::vector<ElementId> out;
  for (ElementId w : parabolic_elements(table, j_set)) {
    bool minimal = true;
    for (int s : i_set) {
      const auto su = static_cast<std::size_t>(s);
      bool descent = side == CosetSide::RightDescentFree ? table.has_right_descent(w, su) : table.has_left_descent(w, su);
      if (descent) {
        minimal = false;
        break;
      }
    }
    if (minimal)
      out.push_back(w);
  }
  return out;
}

std::size_t word_length(const CoxeterSystem& system, const Word& word)
{
  ElementMatrix m = system.identity();
  std::size_t length = 0;
  for (int s : word) {
    const auto su = static_cast<std::size_t>(s);
    if (s < 0 || su >= system.rank())
      throw std::invalid_argument("generator index out of range: " + std::to_string(s + 1));
    if (column_is_negative(m, system.rank(), su))
      --length;
    else
      ++length;
    m = system.multiply(m, system.generator(su));
  }
  return length;
}

std::string format_word(const Word& word)
{
  if (word.empty())
    return "e";
  std::ostringstream out;
  for (std::size_t i = 0; i < word.size(); ++i)
    out << (i ? " " : "") << word[i] + 1;
  return out.str();
}

Word parse_word(const std::string& text)
{
  auto is_delim = [](char c) { return c == 's' || c == ',' || std::isspace(static_cast<unsigned char>(c)); };
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      t.push_back(c);
  Word w;
  if (t.empty() || t == "e")
    return w;
  // in "s1s2", "1 2" and "1,2" forms each index is delimited; in the compact
  // digit form "123" every digit is one generator
  const bool delimited = std::any_of(text.begin(), text.end(), is_delim);
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_delim(text[i])) {
      ++i;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument("bad word '" + text + "'");
    std::size_t j = i;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
      ++j;
    if (delimited) {
      w.push_back(std::stoi(text.substr(i, j - i)) - 1);
    } else {
      for (std::size_t p = i; p < j; ++p)
        w.push_back(text[p] - '1');
    }
    i = j;
  }
  for (int s : w)
    if (s < 0)
      throw std::invalid_argument("generator indices start at 1 in '" + text + "'");
  return w;
}

void export_table(const ElementTable& table, std::ostream& out)
{
  out << "# type=" << table.system().type_tag() << " bound=" << table.bound() << '\n';
  for (const auto& e : table.elements()) {
    out << e.length << '\t' << format_word(e.word) << '\t';
    for (std::size_t i = 0; i < e.matrix.size(); ++i)
      out << (i ? " " : "") << e.matrix[i];
    out << '\n';
  }
}

ElementTable import_table(const CoxeterSystem& system, std::istream& in)
{
  ElementTable t(system);
  t.gens_ = system.all_generators();
  std::string line;
  std::size_t bound = 0;
  bool header = false;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& why) {
    throw std::runtime_error("table line " + std::to_string(lineno) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty())
      continue;
    if (line[0] == '#') {
      std::istringstream h(line.substr(1));
      std::string field;
      while (h >> field) {
        if (field.rfind("type=", 0) == 0 && field.substr(5) != system.type_tag())
          fail("table is for type " + field.substr(5) + ", not " + system.type_tag());
        if (field.rfind("bound=", 0) == 0) {
          bound = std::stoul(field.substr(6));
          header = true;
        }
      }
      continue;
    }
    std::istringstream row(line);
    std::string len_text, word_text, matrix_text;
    if (!std::getline(row, len_text, '\t') || !std::getline(row, word_text, '\t') || !std::getline(row, matrix_text))
      fail("expected three tab separated fields");
    GroupElement e;
    e.length = std::stoul(len_text);
    e.word = parse_word(word_text);
    std::istringstream ms(matrix_text);
    std::int64_t x = 0;
    while (ms >> x)
      e.matrix.push_back(x);
    if (e.word.size() != e.length)
      fail("length does not match the word");
    if (e.matrix != system.evaluate(e.word))
      fail("matrix does not match the word");
    if (t.find(e.matrix))
      fail("duplicate element");
    if (e.length == 0 && !t.elements_.empty())
      fail("identity must come first");
    if (t.elements_.empty() && e.length != 0)
      fail("identity must come first");
    t.insert(std::move(e));
  }
  if (!header)
    throw std::runtime_error("table header with bound= is missing");
  if (t.elements_.empty())
    throw std::runtime_error("table is empty");
  t.bound_ = bound;
  t.layers_.resize(bound + 1);
  t.link_right();
  // every stored length must be the true length: the table is closed under
  // right multiplication below the bound and lengths change by exactly one
  for (ElementId w = 0; w < t.elements_.size(); ++w) {
    const auto& e = t.elements_[w];
    for (std::size_t s = 0; s < system.rank(); ++s) {
      ElementId ws = t.right_[w][s];
      if (ws == kNoElement) {
        if (e.length < bound)
          throw std::runtime_error("table is not closed below its bound");
        continue;
      }
      std::size_t expect = t.has_right_descent(w, s) ? e.length - 1 : e.length + 1;
      if (t.elements_[ws].length != expect)
        throw std::runtime_error("table lengths are inconsistent at word " + format_word(e.word));
    }
  }
  return t;
}

} // namespace weylzeta
