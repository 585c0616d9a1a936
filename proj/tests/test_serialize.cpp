#include <doctest.h>

#include <cmath>

#include "oracle.hpp"
#include "qpcc/errors.hpp"
#include "qpcc/serialize.hpp"

using namespace qpcc;

TEST_CASE("number formatting") {
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(1.75) == "1.75");
  CHECK(format_number(1.0 / 3) == "0.333333333333");
  CHECK(format_number(-2.0 / 3) == "-0.666666666667");
  CHECK(format_number(1e-20) == "1e-20");
  CHECK(format_number(123456789012345.0) == "1.23456789012e+14");
  CHECK(parse_number(nlohmann::json("0.25")) == 0.25);
  CHECK(parse_number(nlohmann::json(3)) == 3.0);
  CHECK_THROWS_AS(parse_number(nlohmann::json("0.25x")), ParameterError);
  CHECK_THROWS_AS(parse_number(nlohmann::json("")), ParameterError);
  CHECK_THROWS_AS(parse_number(nlohmann::json::array()), ParameterError);
}

TEST_CASE("certification report fields") {
  const auto j = to_json(certify(isotropic(3, 0.5), qutrit_noncommuting_catalog()));
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"family", "d", "basisSetKind", "pccs", "pccSum", "threshold", "certified",
                                         "verdictStrength", "inferredNegativity", "entangledRange"});
  CHECK(j["family"]["name"] == "isotropic");
  CHECK(j["family"]["params"][0] == "0.5");
  CHECK(j["d"] == 3);
  CHECK(j["pccSum"] == "1.75");
  CHECK(j["certified"] == true);
  CHECK(j["verdictStrength"] == "necessary-and-sufficient");
  CHECK(j["inferredNegativity"] == "0.25");

  const auto n = to_json(certify(werner(3, 0.3), qutrit_noncommuting_catalog()));
  CHECK(n["inferredNegativity"].is_null());
  CHECK(n["certified"] == false);
}

TEST_CASE("state dumps round trip") {
  for (const auto& rho : {werner(3, 1.0), isotropic(4, 0.3), coloured_noise_b(5, 0.7)}) {
    const auto j = to_json(rho);
    CHECK(j["matrix"].size() == rho.matrix().dim());
    const DensityMatrix back = state_from_json(nlohmann::json::parse(j.dump()));
    CHECK(back.matrix() == rho.matrix());
    CHECK(back.tag()->family == rho.tag()->family);
  }
}

TEST_CASE("untagged dumps are re-validated") {
  std::mt19937_64 gen(5);
  const DensityMatrix rho(oracle::random_density(9, gen), 3, 3);
  const auto back = state_from_json(nlohmann::json::parse(to_json(rho).dump()));
  CHECK(max_abs_diff(back.matrix(), rho.matrix()) < 1e-11);
  CHECK_FALSE(back.tag());

  auto j = nlohmann::json::parse(to_json(rho).dump());
  j["matrix"][0][0][0] = "5";
  CHECK_THROWS_AS(state_from_json(j), InvalidStateError);
}

TEST_CASE("a dump that disagrees with its tag is rejected") {
  auto j = nlohmann::json::parse(to_json(werner(3, 0.5)).dump());
  j["family"]["params"][0] = "0.6";
  CHECK_THROWS_AS(state_from_json(j), ParameterError);
  auto k = nlohmann::json::parse(to_json(werner(3, 0.5)).dump());
  k.erase("matrix");
  CHECK_THROWS_AS(state_from_json(k), ParameterError);
}

TEST_CASE("catalog export") {
  const auto j = to_json(d4_mub_catalog());
  CHECK(j["kind"] == "d4-mub");
  CHECK(j["d"] == 4);
  REQUIRE(j["bases"].size() == 5);
  CHECK(j["bases"][1]["label"] == "d4-mub/b");
  CHECK(j["bases"][1]["spectrum"] == nlohmann::json({"2", "1", "-1", "-2"}));
  CHECK(j["bases"][1]["vectors"][0][0] == nlohmann::json({"0.5", "0"}));
}

TEST_CASE("scan and table exports") {
  ScanReport r;
  r.resolution = 8;
  r.samples = 20;
  r.gridPoints = 512;
  r.best.maxResidual = 0.03;
  r.exceedsFloor = true;
  const auto j = to_json(r);
  CHECK(j["minMaxResidual"] == "0.03");
  CHECK(j["gridPoints"] == 512);
  const auto t = to_json(werner_threshold_table());
  CHECK(t[1]["certifiedAbove"] == "0.6");
  CHECK(t[2]["derivedCertifiedAbove"] == "0.666666666667");
}
