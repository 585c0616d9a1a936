#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qpcc/observables.hpp"
#include "qpcc/states.hpp"

namespace qpcc {

struct SweepSpec {
  Family family = Family::Isotropic;
  std::size_t d = 3;
  double start = 0.0;
  double stop = 1.0;
  std::size_t steps = 21;
  BasisSetKind basisSetKind = BasisSetKind::QutritNonMUB4;
};

struct SweepRow {
  double param = 0.0;
  std::optional<double> negativityClosed;  // empty without a closed form
  double negativityOracle = 0.0;
  double pccSum = 0.0;
  std::optional<double> inferredNegativity;  // only when certified and a linear map exists
};

// Throws ParameterError unless steps >= 2, start < stop and the range lies in
// the family's domain. PureSchmidt has no scalar parameter and is rejected.
void validate(const SweepSpec& spec);

// Evenly spaced grid from start to stop inclusive.
std::vector<double> sweep_grid(const SweepSpec& spec);

// Grid points are evaluated in parallel; row order follows the grid.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);
std::vector<SweepRow> run_sweep_serial(const SweepSpec& spec);

// Header `param,negativity_closed,negativity_oracle,pcc_sum,inferred_negativity`;
// missing values are left empty.
std::string sweep_to_csv(const std::vector<SweepRow>& rows);

}  // namespace qpcc
