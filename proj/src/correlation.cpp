#include "qpcc/correlation.hpp"

#include <cmath>

#include <fmt/format.h>

#include "qpcc/errors.hpp"
#include "qpcc/tolerances.hpp"

namespace qpcc {

namespace {

void check_dims(const DensityMatrix& rho, const ObservableBasis& a, const ObservableBasis& b) {
  if (a.dim() != rho.dA() || b.dim() != rho.dB()) {
    throw DimensionError(fmt::format("bases of dimension {} and {} do not fit a {}x{} state", a.dim(),
                                     b.dim(), rho.dA(), rho.dB()));
  }
}

}  // namespace

JointTable joint_probabilities(const DensityMatrix& rho, const ObservableBasis& a, const ObservableBasis& b) {
  check_dims(rho, a, b);
  const std::size_t dA = a.dim();
  const std::size_t dB = b.dim();
  const std::size_t n = dA * dB;
  const ComplexMatrix& m = rho.matrix();

  JointTable t{dA, dB, std::vector<double>(n)};
  std::vector<Complex> w(n);
  std::vector<Complex> mw(n);
  double total = 0.0;
  for (std::size_t j = 0; j < dA; ++j) {
    const auto& u = a.vector(j);
    for (std::size_t k = 0; k < dB; ++k) {
      const auto& v = b.vector(k);
      for (std::size_t x = 0; x < dA; ++x)
        for (std::size_t y = 0; y < dB; ++y) w[x * dB + y] = u[x] * v[y];
      Complex s = 0.0;
      for (std::size_t r = 0; r < n; ++r) {
        Complex row = 0.0;
        for (std::size_t c = 0; c < n; ++c) row += m(r, c) * w[c];
        s += std::conj(w[r]) * row;
      }
      if (std::abs(s.imag()) > tol::kImaginaryResidue) {
        throw NumericError(fmt::format("probability ({}, {}) has imaginary part {:.3g}", j, k, s.imag()));
      }
      double p = s.real();
      if (p < tol::kProbabilityInvalid) {
        throw InvalidStateError(fmt::format("probability ({}, {}) is {:.3g}", j, k, p));
      }
      if (p < 0.0) p = 0.0;
      t.p[j * dB + k] = p;
      total += p;
    }
  }
  if (!(total > 0.0)) throw InvalidStateError("outcome probabilities sum to zero");
  for (auto& p : t.p) p /= total;
  return t;
}

PccResult pcc_from_table(const JointTable& table, std::span<const double> spectrumA,
                         std::span<const double> spectrumB) {
  if (spectrumA.size() != table.dA || spectrumB.size() != table.dB) {
    throw DimensionError("spectrum length does not match the outcome table");
  }
  PccResult r;
  double ab = 0.0;
  for (std::size_t j = 0; j < table.dA; ++j)
    for (std::size_t k = 0; k < table.dB; ++k) {
      const double p = table(j, k);
      const double a = spectrumA[j];
      const double b = spectrumB[k];
      r.meanA += p * a;
      r.meanB += p * b;
      r.secondMomentA += p * a * a;
      r.secondMomentB += p * b * b;
      ab += p * a * b;
    }
  r.covariance = ab - r.meanA * r.meanB;
  const double va = r.varianceA();
  const double vb = r.varianceB();
  if (va <= tol::kVariance) throw UndefinedPccError(fmt::format("Alice's variance vanishes ({:.3g})", va));
  if (vb <= tol::kVariance) throw UndefinedPccError(fmt::format("Bob's variance vanishes ({:.3g})", vb));
  r.value = r.covariance / std::sqrt(va * vb);
  return r;
}

double joint_expectation(const DensityMatrix& rho, const ObservableBasis& a, const ObservableBasis& b) {
  const JointTable t = joint_probabilities(rho, a, b);
  double s = 0.0;
  for (std::size_t j = 0; j < t.dA; ++j)
    for (std::size_t k = 0; k < t.dB; ++k) s += a.spectrum()[j] * b.spectrum()[k] * t(j, k);
  return s;
}

PccResult pcc(const DensityMatrix& rho, const ObservableBasis& a, const ObservableBasis& b) {
  return pcc_from_table(joint_probabilities(rho, a, b), a.spectrum(), b.spectrum());
}

std::vector<PccResult> pcc_values(const DensityMatrix& rho, const BasisSet& set) {
  std::vector<PccResult> out;
  out.reserve(set.bases.size());
  for (const auto& basis : set.bases) out.push_back(pcc(rho, basis, basis));
  return out;
}

double pcc_sum(const DensityMatrix& rho, const BasisSet& set) {
  double s = 0.0;
  for (const auto& r : pcc_values(rho, set)) s += std::abs(r.value);
  return s;
}

}  // namespace qpcc
