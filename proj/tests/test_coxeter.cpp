#include "weylzeta/coxeter.hpp"

#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

using namespace weylzeta;

namespace {

// s_i acts on {0..n} by swapping i and i+1; the length of a permutation in
// S_{n+1} is its number of inversions
std::vector<int> as_permutation(const Word& word, int n)
{
  std::vector<int> p(static_cast<std::size_t>(n + 1));
  std::iota(p.begin(), p.end(), 0);
  for (int s : word)
    std::swap(p[static_cast<std::size_t>(s)], p[static_cast<std::size_t>(s + 1)]);
  return p;
}

std::size_t inversions(const std::vector<int>& p)
{
  std::size_t c = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      c += p[i] > p[j];
  return c;
}

} // namespace

TEST_CASE("Coxeter matrices of the rank-2 affine types")
{
  auto a2 = build_system("A2t");
  CHECK(a2.coxeter_entry(0, 1) == 3);
  CHECK(a2.coxeter_entry(1, 2) == 3);
  CHECK(a2.coxeter_entry(0, 2) == 3);
  auto c2 = build_system("C2t");
  CHECK(c2.coxeter_entry(0, 1) == 4);
  CHECK(c2.coxeter_entry(1, 2) == 2);
  CHECK(c2.coxeter_entry(0, 2) == 4);
  auto g2 = build_system("G2t");
  CHECK(g2.coxeter_entry(0, 1) == 6);
  CHECK(g2.coxeter_entry(1, 2) == 2);
  CHECK(g2.coxeter_entry(0, 2) == 3);
  auto a1 = build_system("A1t");
  CHECK(a1.coxeter_entry(0, 1) == kInfiniteOrder);
  CHECK(g2.affine());
  CHECK_FALSE(build_system("G2").affine());
  CHECK_THROWS(build_system("Q3"));
}

TEST_CASE("finite group orders")
{
  for (auto [tag, order] : std::vector<std::pair<std::string, std::size_t>>{
         {"A1", 2}, {"A2", 6}, {"A3", 24}, {"B3", 48}, {"D4", 192}, {"G2", 12}, {"F4", 1152}, {"B4", 384}}) {
    auto sys = build_system(tag);
    auto t = enumerate(sys, 100);
    CHECK_MESSAGE(t.size() == order, tag);
  }
}

TEST_CASE("type A lengths equal inversion counts")
{
  for (int n = 2; n <= 4; ++n) {
    auto t = enumerate(build_system("A" + std::to_string(n)), 50);
    std::set<std::vector<int>> perms;
    for (const auto& e : t.elements()) {
      auto p = as_permutation(e.word, n);
      CHECK(inversions(p) == e.length);
      perms.insert(p);
    }
    CHECK(perms.size() == t.size());
  }
}

TEST_CASE("affine layer sizes")
{
  // A1t: 1, 2, 2, 2, ...
  auto a1 = enumerate(build_system("A1t"), 6);
  CHECK(a1.layer_sizes() == std::vector<std::size_t>{1, 2, 2, 2, 2, 2, 2});
  auto a2 = enumerate(build_system("A2t"), 5);
  CHECK(a2.layer_sizes() == std::vector<std::size_t>{1, 3, 6, 9, 12, 15});
}

TEST_CASE("table lookups and products")
{
  auto sys = build_system("A2t");
  auto t = enumerate(sys, 6);
  ElementId s1 = t.lookup({0});
  ElementId s2 = t.lookup({1});
  CHECK(t.element(s1).length == 1);
  Product p = multiply(t, s1, s2);
  CHECK(p.length_additive);
  CHECK(t.element(p.id).length == 2);
  Product q = multiply(t, s1, s1);
  CHECK(q.id == t.identity());
  CHECK_FALSE(q.length_additive);
  CHECK(t.lookup({0, 1, 0}) == t.lookup({1, 0, 1}));
  CHECK(t.has_right_descent(p.id, 1));
  CHECK(t.has_left_descent(p.id, 0));
  CHECK_FALSE(t.has_left_descent(p.id, 1));
  CHECK_THROWS_AS(t.lookup({0, 1, 2, 0, 1, 2, 0}), OutOfTableBound);
}

TEST_CASE("word_length agrees with the table")
{
  auto sys = build_system("C2t");
  auto t = enumerate(sys, 7);
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> gen(0, 2);
  for (int trial = 0; trial < 300; ++trial) {
    Word w;
    for (int i = 0; i < 7; ++i)
      w.push_back(gen(rng));
    CHECK(word_length(sys, w) == t.element(t.lookup(w)).length);
  }
  CHECK(word_length(sys, {}) == 0);
  CHECK(word_length(sys, {0, 0}) == 0);
}

TEST_CASE("coset representatives")
{
  auto sys = build_system("A2t");
  auto t = enumerate(sys, 6);
  // |W_{12}| / |W_{2}| = 3
  auto right = min_coset_reps(t, {1}, {0, 1}, CosetSide::RightDescentFree);
  CHECK(right.size() == 3);
  for (ElementId w : right)
    CHECK_FALSE(t.has_right_descent(w, 1));
  auto left = min_coset_reps(t, {0}, {0, 2}, CosetSide::LeftDescentFree);
  CHECK(left.size() == 3);
  // W_{I\J} taken inside W_J
  for (ElementId w : left)
    CHECK(t.in_parabolic(w, {0, 2}));
  CHECK(parabolic_elements(t, {0, 1}).size() == 6);
  CHECK(parabolic_elements(t, {}).size() == 1);
  CHECK_THROWS(min_coset_reps(t, {2}, {0, 1}, CosetSide::RightDescentFree));
  // W is infinite
  CHECK_THROWS(parabolic_elements(t, {0, 1, 2}));
}

TEST_CASE("finite parabolic of an affine system")
{
  auto sys = build_system("G2t");
  auto t = enumerate_finite_parabolic(sys, {0, 1});
  CHECK(t.size() == 12);
  CHECK(enumerate_finite_parabolic(sys, {0, 2}).size() == 6);
  CHECK_THROWS(enumerate_finite_parabolic(sys, {0, 1, 2}, 500));
}

TEST_CASE("element cap")
{
  auto sys = build_system("A2t");
  EnumerateOptions opts;
  opts.max_elements = 20;
  CHECK_THROWS_AS(enumerate(sys, 10, opts), ResourceLimitExceeded);
}

TEST_CASE("export and import round trip")
{
  auto sys = build_system("G2t");
  auto t = enumerate(sys, 5);
  std::stringstream buf;
  export_table(t, buf);
  const std::string text = buf.str();
  CHECK(text.rfind("# type=G2t bound=5", 0) == 0);
  auto back = import_table(sys, buf);
  REQUIRE(back.size() == t.size());
  for (ElementId i = 0; i < t.size(); ++i)
    CHECK(back.element(i).matrix == t.element(i).matrix);

  std::stringstream bad(text + "2\t1 1\t1 0 0 0 1 0 0 0 1\n");
  CHECK_THROWS(import_table(sys, bad));
}

TEST_CASE("word parsing")
{
  CHECK(parse_word("1 2 3") == Word{0, 1, 2});
  CHECK(parse_word("s3s1s2") == Word{2, 0, 1});
  CHECK(parse_word("3,2,1") == Word{2, 1, 0});
  CHECK(parse_word("312") == Word{2, 0, 1});
  CHECK(parse_word("e").empty());
  CHECK(format_word({2, 0, 1}) == "3 1 2");
  CHECK(format_word({}) == "e");
  CHECK_THROWS(parse_word("s0"));
  CHECK_THROWS(parse_word("x"));
}
