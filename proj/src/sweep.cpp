#include "qpcc/sweep.hpp"

#include <exception>

#include <fmt/format.h>

#include "qpcc/certify.hpp"
#include "qpcc/correlation.hpp"
#include "qpcc/errors.hpp"
#include "qpcc/negativity.hpp"
#include "qpcc/serialize.hpp"
#include "qpcc/tolerances.hpp"

namespace qpcc {

namespace {

SweepRow evaluate(const SweepSpec& spec, const BasisSet& set, double param) {
  const double params[] = {param};
  const DensityMatrix rho = make_state(spec.family, spec.d, params);
  SweepRow row;
  row.param = param;
  try {
    row.negativityClosed = negativity_closed(spec.family, spec.d, params).value;
  } catch (const UnsupportedError&) {
  }
  row.negativityOracle = negativity_oracle(rho).value;
  row.pccSum = pcc_sum(rho, set);
  if (row.pccSum > 1.0 + tol::kDefault && linear_map(spec.family, spec.d, spec.basisSetKind)) {
    row.inferredNegativity = negativity_from_pcc_sum(spec.family, spec.d, spec.basisSetKind, row.pccSum);
  }
  return row;
}

}  // namespace

void validate(const SweepSpec& spec) {
  if (spec.family == Family::PureSchmidt) throw ParameterError("pure states cannot be swept over a scalar parameter");
  if (spec.steps < 2) throw ParameterError(fmt::format("steps must be at least 2, got {}", spec.steps));
  if (!(spec.start < spec.stop)) throw ParameterError("sweep start must be below stop");
  const ParamRange range = family_param_range(spec.family, spec.d);
  if (spec.start < range.lo || spec.stop > range.hi) {
    throw ParameterError(fmt::format("range [{}, {}] leaves the {} domain [{}, {}]", spec.start, spec.stop,
                                     family_name(spec.family), range.lo, range.hi));
  }
}

std::vector<double> sweep_grid(const SweepSpec& spec) {
  validate(spec);
  std::vector<double> grid(spec.steps);
  const double span = spec.stop - spec.start;
  for (std::size_t i = 0; i < spec.steps; ++i)
    grid[i] = spec.start + span * static_cast<double>(i) / static_cast<double>(spec.steps - 1);
  grid.back() = spec.stop;
  return grid;
}

std::vector<SweepRow> run_sweep_serial(const SweepSpec& spec) {
  const auto grid = sweep_grid(spec);
  const BasisSet set = basis_set(spec.basisSetKind, spec.d);
  std::vector<SweepRow> rows;
  rows.reserve(grid.size());
  for (double p : grid) rows.push_back(evaluate(spec, set, p));
  return rows;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  const auto grid = sweep_grid(spec);
  const BasisSet set = basis_set(spec.basisSetKind, spec.d);
  std::vector<SweepRow> rows(grid.size());
  std::vector<std::exception_ptr> errors(grid.size());
  const auto n = static_cast<std::ptrdiff_t>(grid.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto u = static_cast<std::size_t>(i);
    try {
      rows[u] = evaluate(spec, set, grid[u]);
    } catch (...) {
      errors[u] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return rows;
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
  std::string s = "param,negativity_closed,negativity_oracle,pcc_sum,inferred_negativity\n";
  auto opt = [](const std::optional<double>& v) { return v ? format_number(*v) : std::string(); };
  for (const auto& r : rows) {
    s += fmt::format("{},{},{},{},{}\n", format_number(r.param), opt(r.negativityClosed),
                     format_number(r.negativityOracle), format_number(r.pccSum), opt(r.inferredNegativity));
  }
  return s;
}

}  // namespace qpcc
