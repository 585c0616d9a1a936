#include "qpcc/states.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include <fmt/format.h>

#include "qpcc/errors.hpp"
#include "qpcc/tolerances.hpp"

namespace qpcc {

std::string_view family_name(Family f) {
  switch (f) {
    case Family::PureSchmidt: return "pure";
    case Family::Isotropic: return "isotropic";
    case Family::ColouredA: return "coloured-a";
    case Family::ColouredB: return "coloured-b";
    case Family::Werner: return "werner";
    case Family::WernerPopescu: return "werner-popescu";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  if (name == "pure" || name == "pure-schmidt") return Family::PureSchmidt;
  if (name == "isotropic") return Family::Isotropic;
  if (name == "coloured-a" || name == "colored-a") return Family::ColouredA;
  if (name == "coloured-b" || name == "colored-b") return Family::ColouredB;
  if (name == "werner") return Family::Werner;
  if (name == "werner-popescu") return Family::WernerPopescu;
  throw ParameterError(fmt::format("unknown state family '{}'", name));
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix, std::size_t dA, std::size_t dB,
                             std::optional<FamilyTag> tag)
    : matrix_(std::move(matrix)), dA_(dA), dB_(dB), tag_(std::move(tag)) {
  if (dA_ * dB_ != matrix_.dim()) {
    throw DimensionError(
        fmt::format("density matrix of dim {} cannot be split as {}x{}", matrix_.dim(), dA_, dB_));
  }
  if (!matrix_.all_finite()) throw InvalidStateError("density matrix has non-finite entries");
  const double defect = hermiticity_defect(matrix_);
  if (defect > tol::kHermitian) {
    throw InvalidStateError(fmt::format("density matrix not Hermitian (defect {:.3g})", defect));
  }
  const Complex tr = matrix_.trace();
  if (std::abs(tr - Complex{1.0}) > tol::kTrace) {
    throw InvalidStateError(fmt::format("density matrix trace {:.15g} != 1", tr.real()));
  }
  const auto eig = hermitian_eigenvalues(matrix_);
  if (eig.front() < tol::kPsd) {
    throw InvalidStateError(
        fmt::format("density matrix not positive (min eigenvalue {:.3g})", eig.front()));
  }
}

namespace {

void check_local_dim(std::size_t d) {
  if (d < kMinLocalDim || d > kMaxLocalDim) {
    throw ParameterError(
        fmt::format("local dimension d={} outside [{}, {}]", d, kMinLocalDim, kMaxLocalDim));
  }
}

void check_param(std::string_view what, double value, double lo, double hi) {
  if (!std::isfinite(value) || value < lo || value > hi) {
    throw ParameterError(fmt::format("{} = {} outside [{}, {}]", what, value, lo, hi));
  }
}

ComplexMatrix phi_projector(std::size_t d) {
  const auto v = maximally_entangled_vector(d);
  return ComplexMatrix::outer(v);
}

}  // namespace

std::vector<Complex> maximally_entangled_vector(std::size_t d) {
  check_local_dim(d);
  std::vector<Complex> v(d * d);
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t i = 0; i < d; ++i) v[i * d + i] = amp;
  return v;
}

DensityMatrix maximally_entangled(std::size_t d) {
  return DensityMatrix(phi_projector(d), d, d, FamilyTag{Family::Isotropic, {1.0}});
}

DensityMatrix pure_schmidt(std::span<const double> coeffs) {
  const std::size_t d = coeffs.size();
  check_local_dim(d);
  double norm2 = 0.0;
  for (double c : coeffs) {
    check_param("Schmidt coefficient", c, 0.0, 1.0);
    norm2 += c * c;
  }
  if (std::abs(norm2 - 1.0) > tol::kNormalization) {
    throw ParameterError(fmt::format("Schmidt coefficients not normalized: sum c^2 = {:.15g}", norm2));
  }
  std::vector<Complex> v(d * d);
  for (std::size_t i = 0; i < d; ++i) v[i * d + i] = coeffs[i];
  return DensityMatrix(ComplexMatrix::outer(v), d, d,
                       FamilyTag{Family::PureSchmidt, {coeffs.begin(), coeffs.end()}});
}

DensityMatrix isotropic(std::size_t d, double fidelity) {
  check_local_dim(d);
  check_param("fidelity F", fidelity, 0.0, 1.0);
  const auto phi = phi_projector(d);
  const double dd = static_cast<double>(d * d);
  ComplexMatrix rho = ((1.0 - fidelity) / (dd - 1.0)) * (ComplexMatrix::identity(d * d) - phi) +
                      fidelity * phi;
  return DensityMatrix(std::move(rho), d, d, FamilyTag{Family::Isotropic, {fidelity}});
}

DensityMatrix coloured_noise_a(std::size_t d, double p) {
  check_local_dim(d);
  check_param("p", p, 0.0, 1.0);
  ComplexMatrix rho = p * phi_projector(d);
  const double w = (1.0 - p) / static_cast<double>(d);
  for (std::size_t i = 0; i < d; ++i) rho(i * d + i, i * d + i) += w;
  return DensityMatrix(std::move(rho), d, d, FamilyTag{Family::ColouredA, {p}});
}

DensityMatrix coloured_noise_b(std::size_t d, double p) {
  check_local_dim(d);
  check_param("p", p, 0.0, 1.0);
  ComplexMatrix rho = p * phi_projector(d);
  const double w = (1.0 - p) / static_cast<double>(d * (d - 1));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (i != j) rho(i * d + j, i * d + j) += w;
  return DensityMatrix(std::move(rho), d, d, FamilyTag{Family::ColouredB, {p}});
}

double werner_min_param(std::size_t d) {
  const double dd = static_cast<double>(d);
  return 1.0 - 2.0 * dd / (dd + 1.0);
}

DensityMatrix werner(std::size_t d, double p) {
  check_local_dim(d);
  check_param("p", p, werner_min_param(d), 1.0);
  const std::size_t n = d * d;
  // P_anti = (I - SWAP) / 2
  ComplexMatrix anti = ComplexMatrix::identity(n);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) anti(i * d + j, j * d + i) -= 1.0;
  anti *= 0.5;
  const double dd = static_cast<double>(d);
  ComplexMatrix rho = (2.0 * p / (dd * (dd - 1.0))) * anti +
                      ((1.0 - p) / (dd * dd)) * ComplexMatrix::identity(n);
  return DensityMatrix(std::move(rho), d, d, FamilyTag{Family::Werner, {p}});
}

DensityMatrix werner_popescu(std::size_t d, double p) {
  check_local_dim(d);
  check_param("p", p, 0.0, 1.0);
  const double dd = static_cast<double>(d);
  ComplexMatrix rho = ((1.0 - p) / (dd * dd)) * ComplexMatrix::identity(d * d) + p * phi_projector(d);
  return DensityMatrix(std::move(rho), d, d, FamilyTag{Family::WernerPopescu, {p}});
}

ParamRange family_param_range(Family f, std::size_t d) {
  switch (f) {
    case Family::Werner: return {werner_min_param(d), 1.0};
    case Family::PureSchmidt:
      throw ParameterError("pure Schmidt states are parameterized by coefficients, not a range");
    default: return {0.0, 1.0};
  }
}

DensityMatrix make_state(Family f, std::size_t d, std::span<const double> params) {
  if (f == Family::PureSchmidt) {
    if (params.size() != d) {
      throw ParameterError(fmt::format("pure state needs {} Schmidt coefficients, got {}", d, params.size()));
    }
    return pure_schmidt(params);
  }
  if (params.size() != 1) {
    throw ParameterError(fmt::format("family {} takes one parameter, got {}", family_name(f), params.size()));
  }
  const double x = params[0];
  switch (f) {
    case Family::Isotropic: return isotropic(d, x);
    case Family::ColouredA: return coloured_noise_a(d, x);
    case Family::ColouredB: return coloured_noise_b(d, x);
    case Family::Werner: return werner(d, x);
    case Family::WernerPopescu: return werner_popescu(d, x);
    case Family::PureSchmidt: break;
  }
  throw ParameterError("unreachable family");
}

DensityMatrix make_state(const FamilyTag& tag, std::size_t d) { return make_state(tag.family, d, tag.params); }

}  // namespace qpcc
