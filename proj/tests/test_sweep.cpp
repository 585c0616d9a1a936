#include <doctest.h>

#include <cmath>
#include <sstream>

#include "qpcc/certify.hpp"
#include "qpcc/errors.hpp"
#include "qpcc/sweep.hpp"

using namespace qpcc;

namespace {

SweepSpec spec(Family f, std::size_t d, std::size_t steps = 21) {
  SweepSpec s;
  s.family = f;
  s.d = d;
  const ParamRange r = family_param_range(f, d);
  s.start = r.lo;
  s.stop = r.hi;
  s.steps = steps;
  s.basisSetKind = designated_set(f, d);
  return s;
}

}  // namespace

TEST_CASE("parallel sweep reproduces the serial reference") {
  for (Family f : {Family::Isotropic, Family::Werner, Family::ColouredB})
    for (std::size_t d : {3u, 5u}) {
      const auto s = spec(f, d, 17);
      CHECK(sweep_to_csv(run_sweep(s)) == sweep_to_csv(run_sweep_serial(s)));
    }
}

TEST_CASE("grid endpoints and spacing") {
  SweepSpec s = spec(Family::Isotropic, 3, 5);
  const auto g = sweep_grid(s);
  CHECK(g == std::vector<double>{0, 0.25, 0.5, 0.75, 1});
}

TEST_CASE("sweep validation") {
  SweepSpec s = spec(Family::Isotropic, 3);
  s.steps = 1;
  CHECK_THROWS_AS(validate(s), ParameterError);
  s = spec(Family::Isotropic, 3);
  s.start = 0.6;
  s.stop = 0.4;
  CHECK_THROWS_AS(validate(s), ParameterError);
  s = spec(Family::Werner, 3);
  s.start = -0.6;
  CHECK_THROWS_AS(validate(s), ParameterError);
  s = spec(Family::Isotropic, 3);
  s.family = Family::PureSchmidt;
  CHECK_THROWS_AS(validate(s), ParameterError);
}

TEST_CASE("isotropic d = 3 sweep endpoints") {
  const auto rows = run_sweep(spec(Family::Isotropic, 3));
  CHECK(rows.front().pccSum == doctest::Approx(0.5));
  CHECK(rows.back().negativityOracle == doctest::Approx(1.0));
  CHECK(rows.back().pccSum == doctest::Approx(4.0));
  CHECK(*rows.back().inferredNegativity == doctest::Approx(1.0));
  // F = 1/3 is the entanglement threshold: N = 0, sum = 1.
  SweepSpec s = spec(Family::Isotropic, 3, 4);
  s.start = 1.0 / 3;
  const auto t = run_sweep(s);
  CHECK(t.front().negativityOracle < 1e-10);
  CHECK(t.front().pccSum == doctest::Approx(1.0));
  CHECK_FALSE(t.front().inferredNegativity);
}

TEST_CASE("coloured-A d = 4 sweep lies on sum - 1 = (2/3) N") {
  for (const auto& r : run_sweep(spec(Family::ColouredA, 4))) CHECK(r.pccSum - 1 == doctest::Approx(2.0 / 3 * r.negativityOracle).scale(1));
}

TEST_CASE("Werner d = 5 sweep at p = 1") {
  const auto rows = run_sweep(spec(Family::Werner, 5));
  CHECK(rows.back().param == 1.0);
  CHECK(rows.back().negativityOracle == doctest::Approx(0.2));
  CHECK(rows.back().pccSum == doctest::Approx(1.5));
  CHECK_FALSE(rows.front().inferredNegativity);
}

TEST_CASE("figure lines hold row by row on the entangled rows") {
  for (Family f : {Family::Isotropic, Family::ColouredA, Family::ColouredB, Family::Werner, Family::WernerPopescu})
    for (std::size_t d : {3u, 4u, 5u}) {
      const auto map = linear_map(f, d, designated_set(f, d));
      REQUIRE(map);
      for (const auto& r : run_sweep(spec(f, d))) {
        if (r.negativityOracle <= 1e-10) continue;
        CAPTURE(family_name(f));
        CAPTURE(d);
        CAPTURE(r.param);
        CHECK(std::abs(r.pccSum - (map->intercept + map->slope * r.negativityOracle)) < 1e-9);
      }
    }
}

TEST_CASE("CSV layout") {
  SweepSpec s;
  s.family = Family::WernerPopescu;
  s.d = 6;
  s.start = 0;
  s.stop = 1;
  s.steps = 3;
  s.basisSetKind = BasisSetKind::TwoMUB;
  const std::string csv = sweep_to_csv(run_sweep(s));
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "param,negativity_closed,negativity_oracle,pcc_sum,inferred_negativity");
  std::getline(in, line);
  // No closed form for d = 6 and no linear map: both columns stay empty.
  CHECK(line.rfind("0,,0,", 0) == 0);
  CHECK(line.back() == ',');
  std::getline(in, line);
  CHECK(line.rfind("0.5,,", 0) == 0);

  const std::string w = sweep_to_csv(run_sweep(spec(Family::Werner, 3, 4)));
  CHECK(w.find("\n-0.5,0,0,1,\n") != std::string::npos);
  CHECK(w.find("\n1,0.333333333333,0.333333333333,2,0.333333333333\n") != std::string::npos);
}
