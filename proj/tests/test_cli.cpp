#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sys/wait.h>

namespace {

using Json = nlohmann::json;

struct Run {
  int code = -1;
  std::string out;
};

Run tropcli(const std::string& args) {
  std::string cmd = std::string(TROPCLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Json json_of(const Run& r) {
  REQUIRE(r.code == 0);
  return Json::parse(r.out);
}

std::string data(const std::string& name) { return std::string(DATA_DIR) + "/" + name; }

std::filesystem::path temp(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "tropcli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::set<std::vector<std::string>> vertex_set(const Json& j) {
  std::set<std::vector<std::string>> out;
  for (const auto& v : j["vertices"]) out.insert(v.get<std::vector<std::string>>());
  return out;
}

}  // namespace

TEST_CASE("tropicalize") {
  auto j = json_of(tropcli("--json tropicalize " + data("plane_curves.json")));
  CHECK(j["convention"] == "max");
  std::map<std::vector<long>, std::string> coeff;
  for (const auto& t : j["terms"]) coeff[t["monomial"].get<std::vector<long>>()] = t["coeff"];
  CHECK(coeff == std::map<std::vector<long>, std::string>{
                     {{0, 0}, "-3"}, {{1, 0}, "0"}, {{0, 1}, "-2"}, {{3, 0}, "0"}, {{1, 2}, "0"}});
  auto path = temp("constant.json");
  std::ofstream(path) << R"({"field": "Q", "variables": ["x"], "polynomials": [[{"coeff": "5", "monomial": [0]}]]})";
  CHECK(json_of(tropcli("--json tropicalize " + path.string()))["terms"].size() == 1);
  std::ofstream(path) << R"({"field": "Q", "variables": ["x"], "polynomials": [[{"coeff": "t^", "monomial": [0]}]]})";
  CHECK(tropcli("tropicalize " + path.string()).code == 2);
  CHECK(tropcli("tropicalize /nonexistent.json").code == 2);
}

TEST_CASE("hypersurface") {
  auto svg = temp("f.svg");
  std::filesystem::remove(svg);
  auto f = json_of(tropcli("--json hypersurface " + data("plane_curves.json") + " --svg " + svg.string()));
  CHECK(vertex_set(f) == std::set<std::vector<std::string>>{{"0", "0"}, {"-2", "0"}, {"-3", "-1"}});
  CHECK(f["maximal_cells"].size() == 7);
  CHECK(f["balanced"] == true);
  CHECK(std::filesystem::file_size(svg) > 100);
  auto g = json_of(tropcli("--json hypersurface --index 1 " + data("plane_curves.json")));
  CHECK(vertex_set(g) == std::set<std::vector<std::string>>{{"-1", "-1"}, {"-1", "-2"}, {"0", "-4"}});

  auto line = json_of(tropcli("--json hypersurface " + data("line.json")));
  CHECK(line["vertices"] == Json::parse(R"([["0", "0"]])"));
  CHECK(line["rays"] == Json::parse(R"([["-1", "-1"], ["0", "1"], ["1", "0"]])"));

  CHECK(tropcli("hypersurface " + data("linear_system.json")).code == 3);
  auto plane = temp("plane.json");
  std::ofstream(plane) << R"({"field": "Q", "variables": ["x", "y", "z"], "polynomials": [[
    {"coeff": "1", "monomial": [1, 0, 0]}, {"coeff": "1", "monomial": [0, 1, 0]}, {"coeff": "1", "monomial": [0, 0, 1]}]]})";
  CHECK(tropcli("hypersurface " + plane.string()).code == 0);
  CHECK(tropcli("hypersurface " + plane.string() + " --svg " + temp("plane.svg").string()).code == 3);
}

TEST_CASE("stable-intersection") {
  std::set<std::string> outputs;
  for (int seed : {1, 2, 3}) {
    auto r = tropcli("--json --seed " + std::to_string(seed) + " stable-intersection " + data("plane_curves.json"));
    auto j = json_of(r);
    CHECK(j["cells"].size() == 4);
    CHECK(j["total_multiplicity"] == "9");
    outputs.insert(r.out);
  }
  CHECK(outputs.size() == 1);
  auto lines = json_of(tropcli("--json stable-intersection " + data("line.json")));
  REQUIRE(lines["cells"].size() == 1);
  CHECK(lines["cells"][0]["weight"] == "1");
  // two files, index 0 in each
  auto two = json_of(tropcli("--json stable-intersection " + data("line.json") + " " + data("line.json")));
  CHECK(two["total_multiplicity"] == "1");
}

TEST_CASE("transversal") {
  CHECK(json_of(tropcli("--json transversal " + data("transverse_lines.json")))["transverse"] == true);
  for (const char* f : {"concurrent_lines.json", "ray_sharing_lines.json"}) {
    auto j = json_of(tropcli("--json transversal " + data(f)));
    CHECK(j["transverse"] == false);
    CHECK(j.contains("witness"));
    CHECK(j["witness"]["deficit"].get<int>() >= 1);
  }
  auto empty = temp("empty_base.json");
  std::ofstream(empty) << R"({"field": "Q", "variables": ["x"], "polynomials": []})";
  CHECK(tropcli("transversal " + empty.string()).code != 0);
}

TEST_CASE("oscillator and root-count") {
  auto osc = temp("osc.json");
  REQUIRE(tropcli("oscillator --n 2 --m 3 --out " + osc.string()).code == 0);
  auto r = tropcli("root-count " + osc.string());
  CHECK(r.code == 0);
  CHECK(r.out == "13\n");
  CHECK(tropcli("root-count --simplify off " + osc.string()).out == "13\n");
  auto j = json_of(tropcli("--json root-count --check-intersection " + osc.string()));
  CHECK(j["root_count"] == "13");
  CHECK(j["intersection_number"] == "13");
  CHECK(tropcli("root-count " + data("linear_system.json")).out == "1\n");

  // the generated file verifies its own support
  auto doc = Json::parse(tropcli("oscillator --n 1 --m 2").out);
  CHECK(doc["support"].size() == 5);
  CHECK(doc["variables"] == Json::parse(R"(["x1", "x2"])"));

  CHECK(tropcli("oscillator --n 0 --m 2").code == 3);
  CHECK(tropcli("root-count --simplify maybe " + osc.string()).code == 3);
  CHECK(tropcli("").code == 3);
  CHECK(tropcli("--help").code == 0);
}

TEST_CASE("root-count exit codes") {
  auto nt = temp("not_transverse.json");
  auto lines = Json::parse(std::ifstream(data("concurrent_lines.json")));
  lines["base"] = lines["polynomials"];
  lines.erase("polynomials");
  lines["beta"] = Json::parse("[[0, 0, 0], [1, 0, 0], [0, 1, 1]]");
  lines["partition"] = Json::parse("[0, 0, 1]");
  std::ofstream(nt) << lines.dump();
  CHECK(tropcli("root-count " + nt.string()).code == 4);
  auto j = Json::parse(tropcli("--json root-count " + nt.string()).out);
  CHECK(j["error"] == "NOT_TRANSVERSE");
  CHECK(j["certificate"]["transverse"] == false);

  auto square = temp("non_square.json");
  auto lin = Json::parse(std::ifstream(data("linear_system.json")));
  lin["partition"] = Json::parse("[[0, 1], [2, 3]]");
  lin.erase("parameters");
  std::ofstream(square) << lin.dump();
  CHECK(tropcli("root-count " + square.string()).code == 3);
  CHECK(tropcli("root-count " + data("line.json")).code == 3);
}

TEST_CASE("global overrides") {
  // flags take precedence over the document; over Q the coefficient t is rejected
  CHECK(json_of(tropcli("--json --field 'Q(t)' transversal " + data("transverse_lines.json")))["transverse"] == true);
  auto j = json_of(tropcli("--json --convention max tropicalize " + data("transverse_lines.json")));
  CHECK(j["convention"] == "max");
  CHECK(tropcli("--field Q transversal " + data("transverse_lines.json")).code == 2);
  CHECK(tropcli("--field Qp:4 transversal " + data("transverse_lines.json")).code == 2);
}
