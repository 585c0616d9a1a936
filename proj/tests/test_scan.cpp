#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracle.hpp"
#include "qpcc/correlation.hpp"
#include "qpcc/errors.hpp"
#include "qpcc/scan.hpp"
#include "qpcc/tolerances.hpp"

using namespace qpcc;

namespace {

std::vector<std::vector<double>> samples(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::vector<std::vector<double>> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(oracle::random_schmidt(4, gen, 0.05));
  return out;
}

}  // namespace

TEST_CASE("scan sum matches the density-matrix path") {
  std::mt19937_64 gen(4);
  for (int trial = 0; trial < 5; ++trial) {
    const auto c = oracle::random_schmidt(4, gen, 0.05);
    const double phi[] = {0.3, 1.7, 4.4};
    const BasisSet set = make_basis_set(
        4, {computational_basis(4, default_spectrum(4)), parametrized_d4_mub(phi[0], phi[1], phi[2], default_spectrum(4))},
        BasisSetKind::Custom);
    CHECK(scan_pcc_sum(c, phi[0], phi[1], phi[2]) == doctest::Approx(pcc_sum(pure_schmidt(c), set)).epsilon(1e-12));
  }
}

TEST_CASE("serial and parallel scans agree exactly") {
  const auto s = samples(12, 3);
  const ScanReport a = scan_d4_mubs(s, 8);
  const ScanReport b = scan_d4_mubs_serial(s, 8);
  CHECK(a.best.maxResidual == b.best.maxResidual);
  CHECK(a.best.phi == b.best.phi);
  CHECK(a.best.slope == b.best.slope);
  CHECK(a.gridPoints == 512);
}

TEST_CASE("no parametrized basis gives a linear relation") {
  const ScanReport r = scan_d4_mubs(samples(20, 7), 8);
  CHECK(r.best.maxResidual > tol::kScanReportingFloor);
  CHECK(r.exceedsFloor);
  CHECK(r.samples == 20);
}

TEST_CASE("the generalized sigma_y grid point reproduces the two-MUB pure-state sum") {
  const auto s = samples(20, 5);
  const double q = std::numbers::pi / 4;
  for (const auto& c : s) {
    const double expect =
        1 + (9 * c[2] * c[3] + c[1] * (9 * c[2] + 2 * c[3]) + c[0] * (9 * c[1] + 2 * c[2] + 9 * c[3])) / 10;
    CHECK(scan_pcc_sum(c, q, q, q) == doctest::Approx(expect).epsilon(1e-12));
  }
}

TEST_CASE("scan preconditions") {
  CHECK_THROWS_AS(scan_d4_mubs(samples(10, 1), 7), ParameterError);
  const std::vector<std::vector<double>> same(5, {0.5, 0.5, 0.5, 0.5});
  CHECK_THROWS_AS(scan_d4_mubs(same, 8), ParameterError);
  CHECK_THROWS_AS(scan_d4_mubs({{1, 0, 0, 0}, {0.6, 0.8, 0, 0}, {0.5, 0.5, 0.5, 0.5}}, 8), UndefinedPccError);
  CHECK_THROWS_AS(scan_d4_mubs({{0.6, 0.8, 0}, {0.6, 0.8, 0}, {0.6, 0.8, 0}}, 8), ParameterError);
  CHECK_THROWS_AS(scan_d4_mubs({{0.6, 0.8, 0.1, 0}, {0.6, 0.8, 0, 0}, {0.5, 0.5, 0.5, 0.5}}, 8), ParameterError);
}
