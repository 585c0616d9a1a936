#include "qpcc/negativity.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "qpcc/errors.hpp"
#include "qpcc/tolerances.hpp"

namespace qpcc {

namespace {

double single_param(Family family, std::span<const double> params) {
  if (params.size() != 1) {
    throw ParameterError(fmt::format("{} takes one parameter, got {}", family_name(family), params.size()));
  }
  return params[0];
}

void check_supported_d(Family family, std::size_t d, std::size_t lo, std::size_t hi) {
  if (d < lo || d > hi) {
    throw UnsupportedError(fmt::format("no closed form for {} at d = {}; use the oracle", family_name(family), d));
  }
}

void check_normalized(std::span<const double> c) {
  double s = 0.0;
  for (double x : c) {
    if (!(x >= 0.0 && x <= 1.0)) throw ParameterError("Schmidt coefficients must lie in [0, 1]");
    s += x * x;
  }
  if (std::abs(s - 1.0) > tol::kNormalization) {
    throw ParameterError(fmt::format("Schmidt coefficients have squared norm {:.12g}", s));
  }
}

}  // namespace

NegativityResult negativity_oracle(const DensityMatrix& rho) {
  const auto values = hermitian_eigenvalues(partial_transpose(rho.matrix(), rho.dA(), rho.dB()));
  NegativityResult r;
  for (double v : values) {
    if (v < tol::kNegativeEigenvalue) {
      r.negativeEigenvalues.push_back(v);
      r.value -= v;
    }
  }
  return r;
}

double pure_negativity(std::span<const double> coeffs) {
  check_normalized(coeffs);
  double s = 0.0;
  for (std::size_t p = 0; p < coeffs.size(); ++p)
    for (std::size_t q = 0; q < p; ++q) s += coeffs[p] * coeffs[q];
  return s;
}

NegativityResult negativity_closed(Family family, std::size_t d, std::span<const double> params) {
  NegativityResult r;
  r.method = NegativityMethod::ClosedForm;
  if (d < kMinLocalDim) throw ParameterError("d must be at least 2");
  const double dd = static_cast<double>(d);

  switch (family) {
    case Family::PureSchmidt:
      if (params.size() != d) throw ParameterError("need one Schmidt coefficient per level");
      r.value = pure_negativity(params);
      return r;
    case Family::Isotropic:
      r.value = std::max((dd * single_param(family, params) - 1.0) / 2.0, 0.0);
      return r;
    case Family::ColouredA:
      r.value = (dd - 1.0) * single_param(family, params) / 2.0;
      return r;
    case Family::ColouredB:
      r.value = std::max((dd * single_param(family, params) - 1.0) / 2.0, 0.0);
      return r;
    case Family::Werner:
      r.value = std::max(((dd + 1.0) * single_param(family, params) - 1.0) / (dd * dd), 0.0);
      return r;
    case Family::WernerPopescu: {
      check_supported_d(family, d, 3, 5);
      const double p = single_param(family, params);
      if (d == 3) r.value = std::max((4.0 * p - 1.0) / 3.0, 0.0);
      if (d == 4) r.value = std::max(3.0 * (5.0 * p - 1.0) / 8.0, 0.0);
      if (d == 5) r.value = std::max(2.0 * (6.0 * p - 1.0) / 5.0, 0.0);
      return r;
    }
  }
  throw UnsupportedError("unrecognized family");
}

NegativityResult negativity_closed(const FamilyTag& tag, std::size_t d) {
  return negativity_closed(tag.family, d, tag.params);
}

double predicted_pcc_sum(Family family, std::size_t d, std::span<const double> params) {
  const double dd = static_cast<double>(d);
  switch (family) {
    case Family::PureSchmidt: {
      check_supported_d(family, d, 4, 5);
      if (params.size() != d) throw ParameterError("need one Schmidt coefficient per level");
      check_normalized(params);
      // Pair weight depends on the cyclic distance between Schmidt indices.
      const double s5 = std::sqrt(5.0);
      const double near = d == 4 ? 0.9 : (5.0 + s5) / 10.0;
      const double far = d == 4 ? 0.2 : (5.0 - s5) / 10.0;
      double s = 1.0;
      for (std::size_t p = 0; p < d; ++p)
        for (std::size_t q = p + 1; q < d; ++q) {
          const std::size_t gap = std::min(q - p, d - (q - p));
          s += (gap == 1 ? near : far) * params[p] * params[q];
        }
      return s;
    }
    case Family::Isotropic:
      check_supported_d(family, d, 3, 5);
      return std::abs(dd * dd * single_param(family, params) - 1.0) / (dd - 1.0);
    case Family::ColouredA:
      check_supported_d(family, d, 3, 5);
      return 1.0 + single_param(family, params);
    case Family::ColouredB: {
      check_supported_d(family, d, 3, 5);
      const double p = single_param(family, params);
      return std::abs(dd * p - 1.0) / (dd - 1.0) + dd * p;
    }
    case Family::Werner:
      check_supported_d(family, d, 3, 5);
      return (dd + 1.0) / (dd - 1.0) * std::abs(single_param(family, params));
    case Family::WernerPopescu:
      check_supported_d(family, d, 3, 5);
      return (dd + 1.0) * single_param(family, params);
  }
  throw UnsupportedError("unrecognized family");
}

}  // namespace qpcc
