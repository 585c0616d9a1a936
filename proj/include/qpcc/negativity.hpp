#pragma once

#include <span>
#include <vector>

#include "qpcc/states.hpp"

namespace qpcc {

enum class NegativityMethod { Oracle, ClosedForm };

struct NegativityResult {
  double value = 0.0;
  NegativityMethod method = NegativityMethod::Oracle;
  std::vector<double> negativeEigenvalues;  // oracle only
};

// |sum of eigenvalues of rho^{T_B} below tol::kNegativeEigenvalue|
NegativityResult negativity_oracle(const DensityMatrix& rho);

// Closed-form Negativity. WernerPopescu is only available for d in {3,4,5};
// PureSchmidt takes the Schmidt coefficients as params. Other combinations
// throw UnsupportedError (use the oracle instead).
NegativityResult negativity_closed(Family family, std::size_t d, std::span<const double> params);
NegativityResult negativity_closed(const FamilyTag& tag, std::size_t d);

// Closed-form PCC sum over the family's designated basis set for d in {3,4,5}
// (PureSchmidt: d in {4,5} with the two-MUB set). Coloured-B is returned in
// its piecewise form |dp - 1|/(d - 1) + dp.
double predicted_pcc_sum(Family family, std::size_t d, std::span<const double> params);

// sum_{p > q} c_p c_q
double pure_negativity(std::span<const double> coeffs);

}  // namespace qpcc
