#include "qpcc/scan.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "qpcc/correlation.hpp"
#include "qpcc/errors.hpp"
#include "qpcc/negativity.hpp"
#include "qpcc/observables.hpp"
#include "qpcc/tolerances.hpp"

namespace qpcc {

namespace {

constexpr std::size_t kD = 4;

// Outcome table of the Schmidt state sum_i c_i |ii> measured in b on both sides.
JointTable schmidt_table(const std::vector<double>& c, const ObservableBasis& b) {
  JointTable t{kD, kD, std::vector<double>(kD * kD)};
  for (std::size_t j = 0; j < kD; ++j)
    for (std::size_t k = 0; k < kD; ++k) {
      Complex amp = 0.0;
      for (std::size_t i = 0; i < kD; ++i) amp += c[i] * std::conj(b.vector(j)[i] * b.vector(k)[i]);
      t.p[j * kD + k] = std::norm(amp);
    }
  return t;
}

struct Prepared {
  std::vector<std::vector<double>> coeffs;
  std::vector<double> negativity;
  std::vector<double> computational;  // |C| in the computational basis
};

Prepared prepare(const std::vector<std::vector<double>>& samples, int resolution) {
  if (resolution < 8) throw ParameterError(fmt::format("resolution must be at least 8, got {}", resolution));
  if (samples.size() < 3) throw ParameterError("need at least three state samples");
  Prepared p;
  const auto comp = computational_basis(kD, default_spectrum(kD));
  for (const auto& c : samples) {
    if (c.size() != kD) throw ParameterError("scan samples must have four Schmidt coefficients");
    p.negativity.push_back(pure_negativity(c));
    p.computational.push_back(std::abs(pcc_from_table(schmidt_table(c, comp), comp.spectrum(), comp.spectrum()).value));
    p.coeffs.push_back(c);
  }
  const auto [lo, hi] = std::minmax_element(p.negativity.begin(), p.negativity.end());
  if (*hi - *lo <= tol::kDefault) throw ParameterError("degenerate sample set: all states have the same Negativity");
  return p;
}

std::array<double, 3> grid_phi(std::size_t index, int resolution) {
  const auto r = static_cast<std::size_t>(resolution);
  const double step = 2.0 * std::numbers::pi / resolution;
  return {static_cast<double>(index / (r * r)) * step, static_cast<double>((index / r) % r) * step,
          static_cast<double>(index % r) * step};
}

ScanPoint evaluate(const Prepared& prep, const std::array<double, 3>& phi) {
  const auto basis = parametrized_d4_mub(phi[0], phi[1], phi[2], default_spectrum(kD));
  const std::size_t n = prep.coeffs.size();
  std::vector<double> sums(n);
  for (std::size_t s = 0; s < n; ++s) {
    const auto t = schmidt_table(prep.coeffs[s], basis);
    sums[s] = prep.computational[s] + std::abs(pcc_from_table(t, basis.spectrum(), basis.spectrum()).value);
  }
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t s = 0; s < n; ++s) {
    mx += prep.negativity[s];
    my += sums[s];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t s = 0; s < n; ++s) {
    sxx += (prep.negativity[s] - mx) * (prep.negativity[s] - mx);
    sxy += (prep.negativity[s] - mx) * (sums[s] - my);
  }
  ScanPoint pt;
  pt.phi = phi;
  pt.slope = sxy / sxx;
  pt.intercept = my - pt.slope * mx;
  for (std::size_t s = 0; s < n; ++s)
    pt.maxResidual = std::max(pt.maxResidual, std::abs(sums[s] - pt.intercept - pt.slope * prep.negativity[s]));
  return pt;
}

ScanReport reduce(const std::vector<ScanPoint>& points, int resolution, std::size_t samples) {
  ScanReport r;
  r.resolution = resolution;
  r.samples = samples;
  r.gridPoints = points.size();
  r.best = points.front();
  for (const auto& pt : points)
    if (pt.maxResidual < r.best.maxResidual) r.best = pt;
  r.exceedsFloor = r.best.maxResidual > tol::kScanReportingFloor;
  return r;
}

std::size_t grid_size(int resolution) {
  const auto r = static_cast<std::size_t>(resolution);
  return r * r * r;
}

}  // namespace

double scan_pcc_sum(const std::vector<double>& coeffs, double phi_x, double phi_y, double phi_z) {
  const auto comp = computational_basis(kD, default_spectrum(kD));
  const auto basis = parametrized_d4_mub(phi_x, phi_y, phi_z, default_spectrum(kD));
  return std::abs(pcc_from_table(schmidt_table(coeffs, comp), comp.spectrum(), comp.spectrum()).value) +
         std::abs(pcc_from_table(schmidt_table(coeffs, basis), basis.spectrum(), basis.spectrum()).value);
}

ScanReport scan_d4_mubs_serial(const std::vector<std::vector<double>>& samples, int resolution) {
  const Prepared prep = prepare(samples, resolution);
  std::vector<ScanPoint> points(grid_size(resolution));
  for (std::size_t i = 0; i < points.size(); ++i) points[i] = evaluate(prep, grid_phi(i, resolution));
  return reduce(points, resolution, samples.size());
}

ScanReport scan_d4_mubs(const std::vector<std::vector<double>>& samples, int resolution) {
  const Prepared prep = prepare(samples, resolution);
  std::vector<ScanPoint> points(grid_size(resolution));
  const auto n = static_cast<std::ptrdiff_t>(points.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto u = static_cast<std::size_t>(i);
    points[u] = evaluate(prep, grid_phi(u, resolution));
  }
  return reduce(points, resolution, samples.size());
}

}  // namespace qpcc
