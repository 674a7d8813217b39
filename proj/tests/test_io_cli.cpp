#include "printers.hpp"

#include <json.hpp>
#include <random>
#include <sstream>

#include "hyperoct/cli.hpp"
#include "hyperoct/error.hpp"
#include "hyperoct/io.hpp"

using namespace hyperoct;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "hyperoct");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {code, out.str(), err.str()};
}

const char* kWorked = "0 0 1 2 2 6 8 9 9\n0 0 5 6 6 4 0 5 9\n";

}  // namespace

TEST_CASE("two-line parsing") {
  const auto cells = io::parse_two_line("# comment\n1 4\n3 4\n");
  CHECK(cells == std::vector<Cell>{{1, 3}, {4, 4}});
  CHECK_THROWS_AS(io::parse_two_line("1 2\n3\n"), Error);
  CHECK_THROWS_AS(io::parse_two_line("1 x\n3 4\n"), Error);
  CHECK_THROWS_AS(io::parse_two_line("1 2\n"), Error);
}

TEST_CASE("json round trips") {
  const Partition p{3, 1};
  CHECK(io::partition_from_json(io::to_json(p)) == p);
  const SignedPermutation b = SignedPermutation::parse("-2 1 3");
  CHECK(io::permutation_from_json(io::to_json(b)) == b);
  QTSeries s(6);
  s.add_term(1, 2, Rational(3, 4));
  s.add_term(0, 0, -2);
  CHECK(io::series_from_json(io::to_json(s), 6) == s);
  const EDiagram d = EDiagram::from_rows({1, 4}, {3, 4});
  CHECK(io::cells_from_json(io::to_json(d)) == d.cells());
  const DiagPoly m = monomial_invariant(d);
  CHECK(io::poly_from_json(io::to_json(m), 2) == m);
  const io::Json big = io::integer_json(Integer("123456789012345678901234567890"));
  CHECK(io::integer_from_json(big) == Integer("123456789012345678901234567890"));
  CHECK(io::rational_json(Rational(1, 2)) == "1/2");
  CHECK_THROWS_AS(io::partition_from_json(io::Json::parse("[1, -2]")), Error);
}

TEST_CASE("cli stats") {
  const Outcome o = run({"stats", "--n", "2", "--format", "json"});
  CHECK(o.code == kExitOk);
  const auto j = nlohmann::json::parse(o.out);
  CHECK(j["rows"].size() == 8);
  CHECK(run({"stats", "--n", "3", "--format", "csv"}).out.find("window,des") == 0);
  CHECK(run({"stats", "--n", "0"}).code == kExitUsage);
  CHECK(run({"stats", "--n", "9"}).code == kExitUsage);
}

TEST_CASE("cli compactify") {
  const Outcome o = run({"compactify", "--self-check", "--format", "json"}, kWorked);
  CHECK(o.code == kExitOk);
  const auto j = nlohmann::json::parse(o.out);
  CHECK(j["beta"] == nlohmann::json::parse("[-1,-2,5,-7,-8,-4,-3,6,9]"));
  CHECK(j["lam"] == nlohmann::json::parse("[4]"));
  CHECK(j["mu"] == nlohmann::json::parse("[6,1]"));
  CHECK(j["self_check"] == true);
  CHECK(j["weight"]["holds"] == true);
  const Outcome compact = run({"compactify", "--format", "json"}, "1 3\n3 1\n");
  CHECK(nlohmann::json::parse(compact.out)["lam"].empty());
  const Outcome json_in =
      run({"compactify", "--format", "json"}, R"({"cells": [[1, 3], [3, 1]]})");
  CHECK(json_in.code == kExitOk);
  CHECK(run({"compactify", "--kind", "o", "--self-check"}, "1 3\n0 4\n").code == kExitOk);
  CHECK(run({"compactify"}, "1 2\n2 2\n").code == kExitUsage);
  CHECK(run({"compactify"}, "garbage\n").code == kExitUsage);
  CHECK(run({"compactify", "--n", "3"}, "1 3\n3 1\n").code == kExitUsage);
  CHECK(run({"compactify", "/nonexistent/file"}).code == kExitUsage);
}

TEST_CASE("cli straighten") {
  const Outcome o = run({"straighten"}, "1 4\n3 4\n");
  CHECK(o.code == kExitOk);
  CHECK(o.out.find("certificate: exact") != std::string::npos);
  CHECK(o.out.find("M[-2 1]") != std::string::npos);
  const auto j = nlohmann::json::parse(run({"straighten", "--format", "json"}, "1 4\n3 4\n").out);
  CHECK(j["terms"].size() == 2);
  CHECK(j["certificate"] == true);
  CHECK(run({"straighten", "--format", "latex"}, "1 4\n3 4\n").out.find("\\bar{2}") !=
        std::string::npos);
  CHECK(run({"straighten"}, "1 4\n4 4\n").code == kExitUsage);
}

TEST_CASE("cli verify") {
  const Outcome t = run({"verify", "table3"});
  CHECK(t.code == kExitOk);
  CHECK(t.out.find("PASS table3") == 0);
  CHECK(t.out.find("10 checks") != std::string::npos);
  const Outcome g = run({"verify", "genfunction", "--n", "1", "--format", "json"});
  CHECK(g.code == kExitOk);
  CHECK(nlohmann::json::parse(g.out)[0]["status"] == "PASS");
  CHECK(run({"verify", "all", "--n", "2"}).code == kExitOk);
  CHECK(run({"verify", "table3", "--format", "latex"}).out.find("q^{7}") != std::string::npos);
  CHECK(run({"verify", "bogus"}).code == kExitUsage);
  CHECK(run({"verify", "genfunction", "--n", "2", "--trunc", "2"}).code == kExitUsage);
  CHECK(run({"verify"}).code == kExitUsage);
}

TEST_CASE("cli enumerate and usage") {
  const Outcome e = run({"enumerate", "--kind", "e", "--n", "1", "--max-entry", "2", "--format", "json"});
  CHECK(e.code == kExitOk);
  CHECK(nlohmann::json::parse(e.out).size() == 5);
  CHECK(run({"enumerate", "--n", "2", "--format", "csv"}).out ==
        "window\n1 2\n1 -2\n-1 2\n-1 -2\n2 1\n2 -1\n-2 1\n-2 -1\n");
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"stats", "--format", "yaml"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("cli stats agrees with the fmaj product") {
  const auto one = nlohmann::json::parse(run({"stats", "--n", "1", "--format", "json"}).out);
  REQUIRE(one["rows"].size() == 2);
  CHECK(one["rows"][0]["fmaj"] == 0);
  CHECK(one["rows"][1]["fmaj"] == 1);
  const auto two = nlohmann::json::parse(run({"stats", "--n", "2", "--format", "json"}).out);
  CHECK(two["rows"][4]["window"] == nlohmann::json::parse("[2,1]"));
  CHECK(two["rows"][4]["g"] == nlohmann::json::parse("[1,3]"));
  for (int n = 1; n <= 4; ++n) {
    const auto j = nlohmann::json::parse(
        run({"stats", "--n", std::to_string(n), "--format", "json"}).out);
    std::vector<int> dist(n * n + 1, 0);
    for (const auto& row : j["rows"]) ++dist[row["fmaj"].get<int>()];
    std::vector<int> product{1};
    for (int i = 1; i <= n; ++i) {
      std::vector<int> next(product.size() + 2 * i - 1, 0);
      for (std::size_t a = 0; a < product.size(); ++a)
        for (int b = 0; b < 2 * i; ++b) next[a + b] += product[a];
      product = next;
    }
    CHECK(dist == product);
  }
}

TEST_CASE("cli on random diagrams") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> entry(0, 8);
  for (int trial = 0; trial < 50; ++trial) {
    std::string top, bottom;
    for (int i = 0; i < 3; ++i) {
      const int a = entry(rng);
      int b = entry(rng);
      if ((a + b) % 2) ++b;
      top += std::to_string(a) + " ";
      bottom += std::to_string(b) + " ";
    }
    const std::string input = top + "\n" + bottom + "\n";
    const auto s = nlohmann::json::parse(run({"straighten", "--format", "json"}, input).out);
    CHECK(s["certificate"] == true);
    const Outcome c = run({"compactify", "--self-check", "--seed", "7", "--format", "json"}, input);
    CHECK(c.code == kExitOk);
    CHECK(nlohmann::json::parse(c.out)["self_check"] == true);
  }
}

TEST_CASE("cli output is deterministic") {
  const std::vector<std::string> args{"compactify", "--self-check", "--seed", "5"};
  CHECK(run(args, kWorked).out == run(args, kWorked).out);
  CHECK(run({"verify", "all", "--n", "2", "--format", "json"}).out ==
        run({"verify", "all", "--n", "2", "--format", "json"}).out);
}
