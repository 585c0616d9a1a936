#pragma once

#include <span>
#include <vector>

#include "qpcc/observables.hpp"
#include "qpcc/states.hpp"

namespace qpcc {

// Outcome probabilities p(j, k) for Alice's outcome j and Bob's outcome k,
// stored row-major.
struct JointTable {
  std::size_t dA = 0;
  std::size_t dB = 0;
  std::vector<double> p;

  double operator()(std::size_t j, std::size_t k) const { return p[j * dB + k]; }
};

struct PccResult {
  double value = 0.0;
  double meanA = 0.0;
  double meanB = 0.0;
  double secondMomentA = 0.0;
  double secondMomentB = 0.0;
  double covariance = 0.0;

  double varianceA() const { return secondMomentA - meanA * meanA; }
  double varianceB() const { return secondMomentB - meanB * meanB; }
};

// p(j,k) = Tr[rho (P_j (x) P_k)]. Negative entries above tol::kProbabilityInvalid
// are set to zero and the table is renormalized; anything more negative
// throws InvalidStateError.
JointTable joint_probabilities(const DensityMatrix& rho, const ObservableBasis& a, const ObservableBasis& b);

// Pearson coefficient of the outcome table with the given outcome values.
// Throws UndefinedPccError when either marginal variance is <= tol::kVariance.
PccResult pcc_from_table(const JointTable& table, std::span<const double> spectrumA,
                         std::span<const double> spectrumB);

// <A (x) B> = sum_jk a_j b_k p(j,k)
double joint_expectation(const DensityMatrix& rho, const ObservableBasis& a, const ObservableBasis& b);

PccResult pcc(const DensityMatrix& rho, const ObservableBasis& a, const ObservableBasis& b);

// One PccResult per basis, Alice and Bob measuring the same basis.
std::vector<PccResult> pcc_values(const DensityMatrix& rho, const BasisSet& set);

// sum_i |C(A_i, B_i)|
double pcc_sum(const DensityMatrix& rho, const BasisSet& set);

}  // namespace qpcc
