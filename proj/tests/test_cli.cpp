#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"
#include "qpcc/sampling.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = qpcc::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("qpcc_cli_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

}  // namespace

TEST_CASE("certify exit codes") {
  auto r = run({"certify", "--family", "isotropic", "--d", "3", "--param", "0.5"});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["pccSum"] == "1.75");
  CHECK(j["inferredNegativity"] == "0.25");
  CHECK(j["basisSetKind"] == "qutrit-noncommuting");

  CHECK(run({"certify", "--family", "werner", "--d", "5", "--param", "0.5"}).code == 3);
  CHECK(run({"certify", "--family", "coloured-a", "--d", "4", "--param", "0"}).code == 3);
  CHECK(run({"certify", "--family", "pure", "--d", "3", "--coeffs", "0.6,0.6,0.529150262213"}).code == 0);
}

TEST_CASE("usage errors exit with 1") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"certify", "--family", "isotropic", "--d", "3"}).code == 1);
  CHECK(run({"certify", "--family", "isotropic", "--d", "3", "--param", "1.5"}).code == 1);
  CHECK(run({"certify", "--family", "nope", "--d", "3", "--param", "0.5"}).code == 1);
  CHECK(run({"certify", "--family", "isotropic", "--d", "3", "--param", "0.5", "--bases", "d4-mub"}).code == 1);
  CHECK(run({"sweep", "--family", "werner", "--d", "3", "--steps", "1"}).code == 1);
  CHECK(run({"scan-mubs", "--resolution", "4"}).code == 1);
  CHECK(run({"state", "--from", "/nonexistent/qpcc.json"}).code == 1);
}

TEST_CASE("help exits cleanly") {
  const auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("certify") != std::string::npos);
}

TEST_CASE("sweep output is deterministic and serial matches parallel") {
  const std::vector<std::string> a{"sweep", "--family", "isotropic", "--d", "4", "--steps", "11"};
  const auto r1 = run(a), r2 = run(a);
  auto b = a;
  b.push_back("--serial");
  const auto r3 = run(b);
  CHECK(r1.code == 0);
  CHECK(r1.out == r2.out);
  CHECK(r1.out == r3.out);
  CHECK(r1.out.rfind("param,negativity_closed", 0) == 0);
  CHECK(r1.out.find("\n1,1.5,1.5,5,1.5\n") != std::string::npos);

  const fs::path dir = scratch("sweep");
  b.push_back("--output");
  b.push_back((dir / "s.csv").string());
  CHECK(run(b).code == 0);
  std::ifstream f(dir / "s.csv");
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str() == r1.out);
}

TEST_CASE("sample writes reproducible counts") {
  const fs::path dir = scratch("sample");
  const std::vector<std::string> a{"sample", "--family", "isotropic", "--d", "3", "--param", "0.5", "--seed", "3",
                                   "--output-dir", dir.string()};
  const auto r1 = run(a), r2 = run(a);
  REQUIRE(r1.code == 0);
  CHECK(r1.out == r2.out);
  CHECK(r1.out.find("# pcc_sum=") != std::string::npos);

  std::uint64_t total = 0;
  int files = 0;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.path().extension() != ".csv") continue;
    ++files;
    std::ifstream f(e.path());
    std::stringstream ss;
    ss << f.rdbuf();
    std::ifstream g(fs::path(e.path()).replace_extension(".json"));
    std::stringstream sj;
    sj << g.rdbuf();
    const json side = json::parse(sj.str());
    const auto counts = qpcc::counts_from_csv(ss.str(), sj.str());
    for (auto c : counts.counts) total += c;
    CHECK(side["seed"].is_number_unsigned());
  }
  CHECK(files == 4);
  CHECK(total == 4 * 100000u);

  auto b = a;
  b[8] = "4";
  CHECK(run(b).out != r1.out);
}

TEST_CASE("state dump round trips through --from") {
  const auto r = run({"state", "--family", "werner", "--d", "3", "--param", "0.25"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  REQUIRE(j["matrix"].size() == 9);
  double trace = 0;
  for (int i = 0; i < 9; ++i) {
    CHECK(j["matrix"][i].size() == 9);
    trace += std::stod(j["matrix"][i][i][0].get<std::string>());
  }
  CHECK(trace == doctest::Approx(1.0));

  const fs::path dir = scratch("state");
  std::ofstream(dir / "w.json") << r.out;
  const auto back = run({"state", "--from", (dir / "w.json").string()});
  CHECK(back.code == 0);
  CHECK(back.out == r.out);
}

TEST_CASE("config files") {
  const fs::path dir = scratch("config");
  std::ofstream(dir / "ok.json") << R"({"family": "isotropic", "d": 3, "param": 0.5})";
  const auto r = run({"certify", "--config", (dir / "ok.json").string()});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["pccSum"] == "1.75");

  std::ofstream(dir / "bad.json") << R"({"family": "isotropic", "d": 3, "param": 0.5, "colour": "red"})";
  CHECK(run({"certify", "--config", (dir / "bad.json").string()}).code == 1);
}

TEST_CASE("table1 and catalog") {
  const auto t = run({"table1", "--json"});
  REQUIRE(t.code == 0);
  const json j = json::parse(t.out);
  CHECK(j[1]["d"] == 4);
  CHECK(j[1]["entangledAbove"] == "0.2");
  CHECK(j[1]["certifiedAbove"] == "0.6");

  const auto c = run({"catalog", "--bases", "two-mub", "--d", "6"});
  REQUIRE(c.code == 0);
  CHECK(json::parse(c.out)["bases"].size() == 2);
}

TEST_CASE("MUB scan reports a residual above the floor") {
  const auto r = run({"scan-mubs"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["exceedsFloor"] == true);
  CHECK(j["seed"] == 7);
}
