#include "weylzeta/strips.hpp"
#include "weylzeta/torus.hpp"

#include <doctest.h>

#include <set>

using namespace weylzeta;

TEST_CASE("strip generator lengths")
{
  auto check = [](const std::string& tag, std::size_t l1, std::size_t l2) {
    auto [a, b] = strip_generators(build_system(tag));
    CHECK(a.length == l1);
    CHECK(b.length == l2);
    CHECK(a.index == 1);
    CHECK(b.index == 2);
  };
  check("A2t", 3, 3);
  check("C2t", 4, 3);
  check("G2t", 3, 5);
  CHECK_THROWS_AS(strip_generators(build_system("A3t")), std::invalid_argument);
}

TEST_CASE("powers of strip generators are length additive")
{
  for (std::string tag : {"A2t", "C2t", "G2t"}) {
    auto sys = build_system(tag);
    auto t = enumerate(sys, 40);
    auto [a, b] = strip_generators(sys);
    for (const auto& spec : {a, b}) {
      auto r = check_power_lengths(t, spec.word, 8);
      CHECK_MESSAGE(r.pass, tag << " w" << spec.index);
      REQUIRE(r.lengths.size() == 9);
      for (std::size_t k = 0; k <= 8; ++k)
        CHECK(r.lengths[k] == k * spec.length);
      // independent of the table: reduce the concatenated word
      Word power;
      for (int k = 0; k < 8; ++k)
        power.insert(power.end(), spec.word.begin(), spec.word.end());
      CHECK(word_length(sys, power) == 8 * spec.length);
    }
  }
}

TEST_CASE("the unshortened G2t generator fails at k = 2")
{
  auto sys = build_system("G2t");
  auto t = enumerate(sys, 10);
  auto r = check_power_lengths(t, g2_unreplaced_w1(), 2);
  CHECK_FALSE(r.pass);
  REQUIRE(r.first_failure);
  CHECK(*r.first_failure == 2);
  CHECK(r.lengths[1] == 5);
  CHECK(r.lengths[2] < 10);
}

TEST_CASE("scheme labels")
{
  CHECK(factorization_scheme("A2t").label() == "W_{12/2} H1 W_{23/3} H2 W_{1\\13}");
  CHECK(factorization_scheme("G2t").label() == "W_{12/1} H2 H1 W_{13}");
  CHECK_THROWS(factorization_scheme("B3t"));
}

TEST_CASE("factorization census up to length 20")
{
  for (std::string tag : {"A2t", "C2t", "G2t"}) {
    auto sys = build_system(tag);
    auto t = enumerate(sys, 20);
    auto r = factorization_census(t, factorization_scheme(tag), 20);
    CHECK_MESSAGE(r.lengths_add, tag);
    CHECK_MESSAGE(r.distinct, tag);
    CHECK_MESSAGE(r.counts_match, tag);
    CHECK(r.pass);
    CHECK_FALSE(r.witness);
    // the expected counts are the table layers themselves
    auto layers = t.layer_sizes();
    for (std::size_t n = 0; n <= 20; ++n)
      CHECK(r.slice_counts[n] == Integer(static_cast<unsigned long>(layers[n])));
  }
}

TEST_CASE("G2t with H1 before H2 is not length additive")
{
  auto sys = build_system("G2t");
  auto t = enumerate(sys, 12);
  auto scheme = factorization_scheme("G2t");
  std::swap(scheme.factors[1], scheme.factors[2]);
  auto r = factorization_census(t, scheme, 12);
  CHECK_FALSE(r.pass);
  CHECK_FALSE(r.lengths_add);
  REQUIRE(r.witness);

  // w1 w2 s1 = s1 s3 s2 s1 s2 s1 s2 has length 7
  Word prod = parse_word("3 1 2 3 1 2 1 2 1");
  CHECK(word_length(sys, prod) == 7);
}

TEST_CASE("twisted factorization for characters")
{
  for (std::string tag : {"A2t", "C2t", "G2t"}) {
    auto sys = build_system(tag);
    auto t = enumerate(sys, 14);
    auto scheme = factorization_scheme(tag);
    for (const auto& chi : characters(sys)) {
      auto rho = character_representation(sys, chi, &t);
      auto r = verify_maintheorem1(t, scheme, rho, 14);
      CHECK_MESSAGE(r.pass, tag << " " << chi.label());
    }
  }
}

TEST_CASE("twisted factorization for the torus representation")
{
  for (std::string tag : {"A2t", "C2t", "G2t"}) {
    auto sys = build_system(tag);
    auto t = enumerate(sys, 12);
    TorusQuotient torus(sys, 2);
    auto rho = torus_quotient_rep(torus, t);
    CHECK_MESSAGE(verify_maintheorem1(t, factorization_scheme(tag), rho, 12).pass, tag);
  }
}

TEST_CASE("strip determinants equal the alternating product")
{
  for (std::string tag : {"A2t", "C2t", "G2t"}) {
    auto sys = build_system(tag);
    auto t = enumerate(sys, 14);
    for (const auto& chi : characters(sys)) {
      auto rho = character_representation(sys, chi, &t);
      auto r = verify_corollary1(t, rho, 14);
      CHECK_MESSAGE(r.series_agree, tag << " " << chi.label());
      CHECK_MESSAGE(r.pass, tag << " " << chi.label());
    }
  }
}

TEST_CASE("trivial character recovers the alternating product")
{
  // at q = 1 the trivial character gives det Alt = Alt(W)(u)
  for (std::string tag : {"A2t", "C2t", "G2t"}) {
    auto sys = build_system(tag);
    auto t = enumerate(sys, 12);
    std::vector<Matrix<Integer>> gens(3, Matrix<Integer>::identity(1));
    auto rho = Representation<Integer>::validate(sys, gens, Integer(1), &t);
    auto r = verify_corollary1(t, rho, 12);
    CHECK(r.pass);
    CHECK(reduced(to_rational(r.alt)) == alt_product_rational(sys));
  }
}
