#pragma once

#include <array>
#include <vector>

namespace qpcc {

struct ScanPoint {
  std::array<double, 3> phi{};
  double intercept = 0.0;
  double slope = 0.0;
  double maxResidual = 0.0;
};

struct ScanReport {
  int resolution = 0;
  std::size_t samples = 0;
  std::size_t gridPoints = 0;
  ScanPoint best;  // grid point with the smallest max residual
  bool exceedsFloor = false;  // best.maxResidual > tol::kScanReportingFloor
};

// For every (phi_x, phi_y, phi_z) on the grid 2 pi i / resolution, pairs the
// computational basis with parametrized_d4_mub(phi) (spectrum 2,1,-1,-2),
// fits sum = intercept + slope * N over the Schmidt samples by least squares
// and records the largest residual. Samples must be normalized 4-vectors
// with at least two nonzero coefficients and must not all share the same
// Negativity. Ties are broken by the lowest grid index.
ScanReport scan_d4_mubs(const std::vector<std::vector<double>>& samples, int resolution);
// Single-threaded reference with the same result.
ScanReport scan_d4_mubs_serial(const std::vector<std::vector<double>>& samples, int resolution);

// Two-MUB PCC sum of a d = 4 Schmidt state for one parametrized basis.
double scan_pcc_sum(const std::vector<double>& coeffs, double phi_x, double phi_y, double phi_z);

}  // namespace qpcc
