#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "lagfe/cli.hpp"
#include "lagfe/json_io.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "lagfe");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = lagfe::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const std::string path = std::string(P_tmpdir) + "/lagfe_test_" + name;
  std::ofstream(path) << content;
  return path;
}

lagfe::Json indices_of(const std::string& out) { return lagfe::Json::parse(out)["indices"]; }

}  // namespace

TEST_CASE("indices") {
  const auto r = run({"indices", "--dim", "2", "--degree", "3", "--set", "A", "--order", "grsymlex", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = lagfe::Json::parse(r.out);
  CHECK(j["cardinal"] == 10);
  CHECK(j["indices"].dump() == "[[0,0],[1,0],[0,1],[2,0],[1,1],[0,2],[3,0],[2,1],[1,2],[0,3]]");
  const auto c = run({"indices", "--dim", "3", "--degree", "3", "--set", "C", "--order", "grevlex", "--format", "json"});
  CHECK(indices_of(c.out).dump() == "[[0,0,3],[0,1,2],[1,0,2],[0,2,1],[1,1,1],[2,0,1],[0,3,0],[1,2,0],[2,1,0],[3,0,0]]");
  const auto t = run({"indices", "--dim", "1", "--degree", "2"});
  CHECK(t.out == "# A d=1 k=2 order=grsymlex cardinal=3\n(0)\n(1)\n(2)\n");
  const auto z = run({"indices", "--dim", "2", "--degree", "2", "--set", "Azero", "--zero-index", "1", "--format", "csv"});
  CHECK(z.out == "alpha_1,alpha_2\n0,0\n0,1\n0,2\n");
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({"indices", "--dim", "2", "--degree", "3", "--set", "Azero", "--zero-index", "0"}).code == 2);
  CHECK(run({"indices", "--dim", "2", "--degree", "3", "--order", "bogus"}).code == 2);
  CHECK(run({"indices", "--dim", "0", "--degree", "3"}).code == 2);
  CHECK(run({"indices", "--dim", "2", "--degree", "3", "--format", "xml"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"nodes", "--degree", "2"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("nodes") {
  const auto r = run({"nodes", "--dim", "2", "--degree", "3", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = lagfe::Json::parse(r.out);
  REQUIRE(j["nodes"].size() == 10);
  for (const auto& n : j["nodes"]) {
    for (std::size_t i = 0; i < 2; ++i) {
      CHECK(lagfe::rational_from_json(n["point"][i]) == lagfe::Rational::make(n["alpha"][i].get<int>(), 3));
    }
  }
  const auto v = temp_file("seg.json", R"({"d": 1, "vertices": [["2"], ["6"]]})");
  const auto s = run({"nodes", "--dim", "1", "--degree", "0", "--vertices", v, "--format", "csv"});
  CHECK(s.code == 0);
  CHECK(s.out == "alpha_1,x_1\n0,4\n");
  CHECK(run({"nodes", "--dim", "2", "--degree", "0", "--vertices", v}).code == 3);
  const auto bad = temp_file("bad.json", "{\"vertices\": [[1], ");
  CHECK(run({"nodes", "--dim", "1", "--degree", "1", "--vertices", bad}).code == 2);
  CHECK(run({"nodes", "--dim", "1", "--degree", "1", "--vertices", "/nonexistent/v.json"}).code == 2);
  const auto wrong = temp_file("wrong.json", R"({"vertices": [[0, 0], [1, 0]]})");
  CHECK(run({"nodes", "--degree", "1", "--vertices", wrong}).code == 2);
}

TEST_CASE("shape") {
  const auto r = run({"shape", "--dim", "1", "--degree", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "# shape functions d=1 k=1 count=2\ntheta(0) = -X1 + 1\ntheta(1) = X1\n");
  const auto t = run({"shape", "--dim", "2", "--degree", "1", "--format", "json"});
  const auto j = lagfe::Json::parse(t.out);
  const auto p0 = lagfe::polynomial_from_json(j["shape_functions"][0]);
  const auto x1 = lagfe::Polynomial::variable(2, 1), x2 = lagfe::Polynomial::variable(2, 2);
  CHECK(p0 == lagfe::Polynomial::constant(2, 1) - x1 - x2);
  CHECK(lagfe::polynomial_from_json(j["shape_functions"][1]) == x1);
  CHECK(lagfe::polynomial_from_json(j["shape_functions"][2]) == x2);
  const auto flat = temp_file("flat.json", R"({"vertices": [["0", "0"], ["1", "1"], ["2", "2"]]})");
  const auto f = run({"shape", "--degree", "2", "--vertices", flat});
  CHECK(f.code == 3);
  CHECK(f.err.find("affinely independent") != std::string::npos);
}

TEST_CASE("verify") {
  const auto r = run({"verify", "--dmax", "2", "--kmax", "3", "--seed", "7", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = lagfe::Json::parse(r.out);
  CHECK(j["seed"] == 7);
  CHECK(j["totals"]["failed"] == 0);
  const auto one = lagfe::Json::parse(run({"verify", "--lemma", "1607", "--format", "json"}).out);
  REQUIRE(one["checks"].size() == 1);
  CHECK(one["checks"][0]["id"] == "1607");
  CHECK(run({"verify", "--lemma", "9999"}).code == 2);
  CHECK(run({"verify", "--dmax", "0"}).code == 2);
}

TEST_CASE("orders") {
  const auto r = run({"orders", "--dim", "3", "--degree", "3", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = lagfe::Json::parse(r.out);
  bool found = false;
  for (const auto& row : j["orders"]) {
    if (row["order"] == "grsymlex") {
      CHECK(row["i"]["holds"] == true);
      CHECK(row["ii"]["holds"] == true);
      CHECK(row["iii"]["holds"] == true);
    }
    if (row["order"] == "grlex") {
      CHECK(row["ii"]["holds"] == false);
      for (const auto& w : row["ii"]["f_head"]["witnesses"]) {
        found = found || (w["a"].dump() == "[1,0]" && w["b"].dump() == "[0,2]" && w["f_b"].dump() == "[1,0,2]");
      }
    }
  }
  CHECK(found);
  const auto t = run({"orders", "--dim", "2", "--degree", "3"});
  CHECK(t.out.find("grevlex (iii) (3,0) should precede (0,3)") != std::string::npos);
}
