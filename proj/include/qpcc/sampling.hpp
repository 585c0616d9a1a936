#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qpcc/correlation.hpp"

namespace qpcc {

struct MeasurementCounts {
  std::size_t d = 0;
  std::vector<std::uint64_t> counts;  // row-major, counts[j * d + k]
  std::uint64_t shots = 0;
  std::string basisLabelA;
  std::string basisLabelB;
  std::uint64_t seed = 0;

  std::uint64_t operator()(std::size_t j, std::size_t k) const { return counts[j * d + k]; }
};

// Born-rule outcome table; identical to joint_probabilities.
JointTable joint_distribution(const DensityMatrix& rho, const ObservableBasis& a, const ObservableBasis& b);

// Multinomial draw by sequential binomial conditionals on std::mt19937_64
// seeded with `seed`. Deterministic for a given seed and standard library.
MeasurementCounts sample_counts(const JointTable& dist, std::uint64_t shots, std::uint64_t seed);

// Stream seed for one basis, derived from the master seed, the basis label and
// its position in the set (FNV-1a of the label mixed with splitmix64).
std::uint64_t derive_seed(std::uint64_t master, std::string_view label, std::size_t index);

struct PccEstimate {
  double estimate;
  // Approximate large-sample error (1 - r^2) / sqrt(shots - 3).
  double standardError;
};

// Plug-in sample PCC. Throws UndefinedPccError when a sample margin has zero
// variance and ParameterError for fewer than four shots.
PccEstimate estimate_pcc(const MeasurementCounts& counts, std::span<const double> spectrumA,
                         std::span<const double> spectrumB);

struct SampledSet {
  std::vector<MeasurementCounts> counts;
  std::vector<PccEstimate> estimates;
  double sum = 0.0;
  double sumStderr = 0.0;  // sqrt of the summed squared errors
};

// Samples every basis of the set (Alice and Bob in the same basis) with its
// own derived stream, then estimates the PCC sum.
SampledSet sample_basis_set(const DensityMatrix& rho, const BasisSet& set, std::uint64_t shots,
                            std::uint64_t master_seed);

// `j,k,count` CSV, one row per cell.
std::string counts_to_csv(const MeasurementCounts& counts);
// JSON sidecar with d, shots, seed and the basis labels.
std::string counts_sidecar_json(const MeasurementCounts& counts);
// Inverse of the two writers. Throws ParameterError on malformed input or
// when the cell counts do not add up to the sidecar's shots.
MeasurementCounts counts_from_csv(std::string_view csv, std::string_view sidecar_json);

}  // namespace qpcc
