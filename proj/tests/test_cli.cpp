#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run
{
  int status = -1;
  std::string out;
};

// stdout only; stderr is folded in when err is set
Run run(const std::string& args, bool err = false)
{
  std::string cmd = std::string("'") + WEYLZETA_CLI + "' " + args + (err ? " 2>&1" : " 2>/dev/null");
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0)
    r.out.append(buf.data(), n);
  int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(WEYLZETA_TEST_DATA) + "/" + name; }

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

} // namespace

TEST_CASE("alt prints the factored inverse")
{
  auto a = run("alt --type A2t");
  CHECK(a.status == 0);
  CHECK(contains(a.out, "(1-u^3)^2"));
  CHECK(contains(run("alt --type C2t").out, "(1-u^4)(1-u^3)"));
  CHECK(contains(run("alt --type G2t").out, "(1-u^5)(1-u^3)"));
  CHECK(contains(run("alt --type G2").out, "(1-u^2)/(1-u^6)"));

  auto j = nlohmann::json::parse(run("alt --type G2t --format json").out);
  CHECK(j["type"] == "G2t");
  CHECK(j["alt_inverse"]["num"] == nlohmann::json::parse("[1,0,0,-1,0,-1,0,0,1]"));
}

TEST_CASE("poincare coefficients")
{
  auto j = nlohmann::json::parse(run("poincare --type C2t --trunc 5 --format json").out);
  CHECK(j["series"]["coeffs"] == nlohmann::json::parse("[1,3,5,8,11,13]"));
  auto t = run("poincare --type A2t --trunc 6");
  CHECK(contains(t.out, "1 3 6 9 12 15 18"));
}

TEST_CASE("factorize census")
{
  for (std::string tag : {"A2t", "C2t", "G2t"}) {
    auto r = run("factorize --type " + tag + " --trunc 14 --format json");
    CHECK(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["pass"] == true);
    CHECK(j["witness"].is_null());
  }
  CHECK(run("factorize --type B3t").status == 2);
  // the table must still cover the finite factors
  CHECK(run("factorize --type G2t --trunc 2").status == 0);
  CHECK(run("torus --type G2t --trunc 2").status == 0);
}

TEST_CASE("corollary1 for characters and ingested representations")
{
  auto chars = run("corollary1 --type G2t --trunc 12");
  CHECK(chars.status == 0);
  CHECK(contains(chars.out, "PASS"));
  CHECK_FALSE(contains(chars.out, "FAIL"));

  CHECK(run("corollary1 --type A2t --trunc 10 --q 3").status == 0);
  CHECK(run("corollary1 --type A2t --trunc 10 --rep " + data("a2t_rho1_qpoly.json")).status == 0);
  CHECK(run("corollary1 --type A2t --trunc 10 --rep " + data("a2t_sign_rational.json")).status == 0);
  CHECK(run("corollary1 --type A2t --trunc 10 --rep " + data("a2t_geometric_q1.json")).status == 0);

  auto zero = run("corollary1 --type A2t --rep " + data("a2t_zero.json"), true);
  CHECK(zero.status == 2);
  auto err = nlohmann::json::parse(zero.out);
  CHECK(err["error"] == "representation");
  CHECK(err["relation"] == "quadratic");

  auto c2 = run("corollary1 --type A2t --rep " + data("a2t_char2.json"), true);
  CHECK(c2.status == 2);
  CHECK(contains(c2.out, "characteristic"));
}

TEST_CASE("macdonald table")
{
  auto r = run("macdonald-table --format csv");
  CHECK(r.status == 0);
  std::ifstream in(std::string(WEYLZETA_GOLDEN_DIR) + "/macdonald_table.csv");
  std::stringstream golden;
  golden << in.rdbuf();
  CHECK(r.out == golden.str());
  CHECK(contains(run("macdonald-table --type E8").out, "E,8,30,9,11,13,14,17,19,23,29"));
}

TEST_CASE("ihara")
{
  auto r = run("ihara --graph " + data("k4.txt") + " --q 2 --trunc 6 --format json");
  CHECK(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["N"][2] == 24);
  CHECK(j["formula_check"]["pass"] == true);

  auto loop = run("ihara --graph " + data("loop.txt"), true);
  CHECK(loop.status == 2);
  CHECK(contains(loop.out, "self-loop"));
  CHECK(run("ihara --graph " + data("tree.txt") + " --q 2").status == 2);
}

TEST_CASE("torus")
{
  auto r = run("torus --type C2t --scale 2 --trunc 8");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "32 chambers"));
  CHECK_FALSE(contains(r.out, "FAIL"));
}

TEST_CASE("table export")
{
  auto r = run("table --type A2t --trunc 2");
  CHECK(r.status == 0);
  CHECK(contains(r.out, "# type=A2t bound=2"));
  std::size_t rows = 0;
  std::istringstream in(r.out);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty() && line[0] != '#')
      ++rows;
  CHECK(rows == 10);
}

TEST_CASE("errors")
{
  auto bad = run("alt --type Z9", true);
  CHECK(bad.status == 2);
  auto j = nlohmann::json::parse(bad.out);
  CHECK(j["error"] == "input");
  CHECK(j["command"] == "alt");
  CHECK(run("poincare --type A2t --trunc -3").status != 0);
  CHECK(run("frobnicate").status != 0);
}

TEST_CASE("resource cap")
{
  auto r = run("factorize --type G2t --trunc 20");
  CHECK(r.status == 0);
  setenv("WEYLZETA_MAX_ELEMENTS", "50", 1);
  auto capped = run("factorize --type G2t --trunc 20", true);
  unsetenv("WEYLZETA_MAX_ELEMENTS");
  CHECK(capped.status == 3);
}
