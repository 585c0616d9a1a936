#include "qpcc/observables.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "qpcc/errors.hpp"
#include "qpcc/tolerances.hpp"

namespace qpcc {

namespace {

constexpr double kPi = std::numbers::pi;

Complex expi(double angle) { return std::polar(1.0, angle); }

double vector_norm(const StateVector& v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return std::sqrt(s);
}

Complex inner(const StateVector& u, const StateVector& v) {
  Complex s = 0.0;
  for (std::size_t k = 0; k < u.size(); ++k) s += std::conj(u[k]) * v[k];
  return s;
}

void check_spectrum(const std::vector<double>& spectrum, std::size_t d) {
  if (spectrum.size() != d) {
    throw ParameterError(fmt::format("spectrum has {} values, basis dimension is {}", spectrum.size(), d));
  }
  for (double s : spectrum)
    if (!std::isfinite(s)) throw ParameterError("spectrum values must be finite");
  const auto [lo, hi] = std::minmax_element(spectrum.begin(), spectrum.end());
  if (*lo == *hi) throw DegenerateSpectrumError("spectrum has a single distinct value");
}

StateVector scaled(std::initializer_list<Complex> comps, double scale) {
  StateVector v(comps);
  for (auto& z : v) z *= scale;
  return v;
}

}  // namespace

ObservableBasis::ObservableBasis(std::vector<StateVector> vectors, std::vector<double> spectrum,
                                 std::string label)
    : vectors_(std::move(vectors)), spectrum_(std::move(spectrum)), label_(std::move(label)) {
  const std::size_t d = vectors_.size();
  if (d < 2) throw DimensionError("observable basis needs at least two vectors");
  for (auto& v : vectors_) {
    if (v.size() != d) {
      throw DimensionError(fmt::format("basis '{}': vector of length {} in dimension {}", label_, v.size(), d));
    }
    const double n = vector_norm(v);
    if (!std::isfinite(n) || std::abs(n - 1.0) > tol::kPreNormalized) {
      throw ParameterError(fmt::format("basis '{}': vector norm {:.12g} is not 1", label_, n));
    }
    for (auto& z : v) z /= n;
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Complex g = inner(vectors_[i], vectors_[j]);
      const double expect = (i == j) ? 1.0 : 0.0;
      if (std::abs(g - expect) > tol::kOrthonormal) {
        throw ParameterError(fmt::format("basis '{}': not orthonormal at ({}, {}), |<v|w>| = {:.6g}",
                                         label_, i, j, std::abs(g)));
      }
    }
  check_spectrum(spectrum_, d);
}

ComplexMatrix ObservableBasis::projector(std::size_t j) const { return ComplexMatrix::outer(vectors_.at(j)); }

ComplexMatrix ObservableBasis::observable() const {
  ComplexMatrix a(dim());
  for (std::size_t j = 0; j < dim(); ++j) a += spectrum_[j] * projector(j);
  return a;
}

ObservableBasis ObservableBasis::with_spectrum(std::vector<double> spectrum) const {
  return ObservableBasis(vectors_, std::move(spectrum), label_);
}

std::string_view basis_set_name(BasisSetKind kind) {
  switch (kind) {
    case BasisSetKind::TwoMUB: return "two-mub";
    case BasisSetKind::QutritNonMUB4: return "qutrit-noncommuting";
    case BasisSetKind::QutritMUB4: return "qutrit-mub";
    case BasisSetKind::D4MUB5: return "d4-mub";
    case BasisSetKind::D5NonMUB6: return "d5-noncommuting";
    case BasisSetKind::D5MUB6: return "d5-mub";
    case BasisSetKind::Custom: return "custom";
  }
  return "unknown";
}

BasisSetKind parse_basis_set(std::string_view name) {
  for (auto k : {BasisSetKind::TwoMUB, BasisSetKind::QutritNonMUB4, BasisSetKind::QutritMUB4,
                 BasisSetKind::D4MUB5, BasisSetKind::D5NonMUB6, BasisSetKind::D5MUB6}) {
    if (basis_set_name(k) == name) return k;
  }
  throw ParameterError(fmt::format("unknown basis set '{}'", name));
}

BasisSet make_basis_set(std::size_t d, std::vector<ObservableBasis> bases, BasisSetKind kind) {
  if (bases.empty()) throw ParameterError("basis set is empty");
  for (const auto& b : bases) {
    if (b.dim() != d) {
      throw DimensionError(fmt::format("basis '{}' has dimension {}, set dimension is {}", b.label(), b.dim(), d));
    }
  }
  return BasisSet{d, std::move(bases), kind};
}

std::vector<double> default_spectrum(std::size_t d) {
  if (d < 2) throw ParameterError("default_spectrum needs d >= 2");
  std::vector<double> s;
  const int half = static_cast<int>(d / 2);
  for (int v = half; v >= 1; --v) s.push_back(v);
  if (d % 2 == 1) s.push_back(0.0);
  for (int v = 1; v <= half; ++v) s.push_back(-v);
  return s;
}

ObservableBasis computational_basis(std::size_t d, std::vector<double> spectrum) {
  std::vector<StateVector> vecs(d, StateVector(d));
  for (std::size_t j = 0; j < d; ++j) vecs[j][j] = 1.0;
  return ObservableBasis(std::move(vecs), std::move(spectrum), "computational");
}

ObservableBasis generalized_basis(std::size_t d, double phi, std::vector<double> spectrum) {
  if (d < 2) throw ParameterError("generalized_basis needs d >= 2");
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  const double dd = static_cast<double>(d);
  std::vector<StateVector> vecs(d, StateVector(d));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t k = 0; k < d; ++k) {
      const double ak = static_cast<double>(a * k);
      const double kk = static_cast<double>(k);
      vecs[a][k] = amp * expi(2.0 * kPi * ak / dd + kk * phi);
    }
  return ObservableBasis(std::move(vecs), std::move(spectrum), fmt::format("generalized(phi={:.6g})", phi));
}

ObservableBasis parametrized_d4_mub(double phi_x, double phi_y, double phi_z, std::vector<double> spectrum) {
  for (double phi : {phi_x, phi_y, phi_z}) {
    if (!std::isfinite(phi) || phi < 0.0 || phi > 2.0 * kPi) {
      throw ParameterError(fmt::format("phase {} outside [0, 2pi]", phi));
    }
  }
  const std::array<double, 4> offsets{0.0, phi_x, 2.0 * phi_y, 3.0 * phi_z};
  std::vector<StateVector> vecs(4, StateVector(4));
  for (std::size_t j = 0; j < 4; ++j)
    for (std::size_t k = 0; k < 4; ++k)
      vecs[j][k] = 0.5 * expi(2.0 * kPi * static_cast<double>(j * k) / 4.0 + offsets[k]);
  return ObservableBasis(std::move(vecs), std::move(spectrum),
                         fmt::format("d4-mub({:.6g},{:.6g},{:.6g})", phi_x, phi_y, phi_z));
}

BasisSet two_mub_set(std::size_t d) {
  std::vector<ObservableBasis> bases;
  bases.push_back(computational_basis(d, default_spectrum(d)));
  bases.push_back(generalized_basis(d, kPi / static_cast<double>(d), default_spectrum(d)));
  return make_basis_set(d, std::move(bases), BasisSetKind::TwoMUB);
}

BasisSet qutrit_noncommuting_catalog() {
  const double r = 1.0 / std::sqrt(3.0);
  const Complex w = expi(2.0 * kPi / 3.0);
  const Complex w2 = w * w;
  const Complex e1 = expi(kPi / 3.0);
  const Complex e2 = expi(2.0 * kPi / 3.0);
  const std::vector<double> pm{1.0, 0.0, -1.0};
  // b_0 = 0, b_1 = +-1, b_2 = -+1: the upper sign is used.
  const std::vector<double> zpm{0.0, 1.0, -1.0};
  const std::string p = "qutrit-noncommuting/";

  std::vector<ObservableBasis> bases;
  bases.push_back(ObservableBasis(computational_basis(3, pm).vectors(), pm, p + "a"));
  bases.push_back(ObservableBasis(
      {scaled({1.0, 1.0, 1.0}, r), scaled({1.0, w, w2}, r), scaled({1.0, w2, w}, r)}, zpm, p + "b"));
  bases.push_back(ObservableBasis(
      {scaled({1.0, e1, e2}, r), scaled({1.0, -1.0, 1.0}, r), scaled({1.0, w2 * e1, w * e2}, r)}, pm,
      p + "e"));
  bases.push_back(ObservableBasis(
      {scaled({w2, w, -1.0}, r), scaled({1.0, 1.0, -1.0}, r), scaled({w, w2, -1.0}, r)}, pm, p + "g"));
  return make_basis_set(3, std::move(bases), BasisSetKind::QutritNonMUB4);
}

BasisSet qutrit_mub_catalog() {
  const double r = 1.0 / std::sqrt(3.0);
  const Complex w = expi(2.0 * kPi / 3.0);
  const Complex w2 = w * w;
  const std::vector<double> pm{1.0, 0.0, -1.0};
  const std::vector<double> zpm{0.0, 1.0, -1.0};
  const std::string p = "qutrit-mub/";

  std::vector<ObservableBasis> bases;
  bases.push_back(ObservableBasis(computational_basis(3, pm).vectors(), pm, p + "a"));
  bases.push_back(ObservableBasis(
      {scaled({1.0, w, w2}, r), scaled({1.0, 1.0, 1.0}, r), scaled({1.0, w2, w}, r)}, zpm, p + "b"));
  bases.push_back(ObservableBasis(
      {scaled({1.0, w, w}, r), scaled({1.0, 1.0, w2}, r), scaled({1.0, w2, 1.0}, r)}, pm, p + "e"));
  bases.push_back(ObservableBasis(
      {scaled({1.0, w2, w2}, r), scaled({1.0, 1.0, w}, r), scaled({1.0, w, 1.0}, r)}, pm, p + "g"));
  return make_basis_set(3, std::move(bases), BasisSetKind::QutritMUB4);
}

BasisSet d4_mub_catalog() {
  const Complex i{0.0, 1.0};
  const auto s = default_spectrum(4);
  const std::string p = "d4-mub/";
  auto v = [](std::initializer_list<Complex> c) { return scaled(c, 0.5); };

  std::vector<ObservableBasis> bases;
  bases.push_back(ObservableBasis(computational_basis(4, s).vectors(), s, p + "a"));
  bases.push_back(ObservableBasis({v({1.0, 1.0, 1.0, 1.0}), v({1.0, 1.0, -1.0, -1.0}),
                                   v({1.0, -1.0, -1.0, 1.0}), v({1.0, -1.0, 1.0, -1.0})},
                                  s, p + "b"));
  bases.push_back(ObservableBasis({v({1.0, 1.0, i, -i}), v({1.0, -1.0, i, i}), v({1.0, -1.0, -i, -i}),
                                   v({1.0, 1.0, -i, i})},
                                  s, p + "e"));
  bases.push_back(ObservableBasis({v({1.0, -i, -1.0, -i}), v({1.0, i, 1.0, -i}), v({1.0, -i, 1.0, i}),
                                   v({1.0, i, -1.0, i})},
                                  s, p + "g"));
  // Listed order is k0, k1, k2, k3 = (1,i,-i,1), (1,-i,i,1), (1,i,i,-1),
  // (1,-i,-i,-1). Stored as k0, k2, k3, k1 so that complex conjugation maps
  // outcome +2 <-> -2 and +1 <-> -1, as it does for the other four bases.
  bases.push_back(ObservableBasis({v({1.0, i, -i, 1.0}), v({1.0, i, i, -1.0}), v({1.0, -i, -i, -1.0}),
                                   v({1.0, -i, i, 1.0})},
                                  s, p + "k"));
  return make_basis_set(4, std::move(bases), BasisSetKind::D4MUB5);
}

namespace detail {

namespace {

// One component of a d = 5 catalog vector: sign * omega^w * e^{i e pi / 5}.
struct Phase5 {
  int w;
  int e = 0;
  double sign = 1.0;
};

StateVector vec5(Complex omega, std::array<Phase5, 5> comps) {
  const double r = 1.0 / std::sqrt(5.0);
  StateVector v(5);
  for (std::size_t k = 0; k < 5; ++k)
    v[k] = r * comps[k].sign * std::pow(omega, comps[k].w) * expi(comps[k].e * kPi / 5.0);
  return v;
}

StateVector omega_powers(Complex omega, std::array<int, 5> exps) {
  std::array<Phase5, 5> comps;
  for (std::size_t k = 0; k < 5; ++k) comps[k] = {exps[k]};
  return vec5(omega, comps);
}

ObservableBasis b5(Complex omega, const std::string& label) {
  return ObservableBasis({omega_powers(omega, {0, 3, 1, 4, 2}), omega_powers(omega, {0, 4, 3, 2, 1}),
                          omega_powers(omega, {0, 0, 0, 0, 0}), omega_powers(omega, {0, 1, 2, 3, 4}),
                          omega_powers(omega, {0, 2, 4, 1, 3})},
                         default_spectrum(5), label);
}

}  // namespace

BasisSet d5_noncommuting_catalog(Complex omega) {
  const auto s = default_spectrum(5);
  const std::string p = "d5-noncommuting/";
  std::vector<ObservableBasis> bases;
  bases.push_back(ObservableBasis(computational_basis(5, s).vectors(), s, p + "a"));
  bases.push_back(b5(omega, p + "b"));

  std::vector<StateVector> e;
  for (int m = 0; m < 5; ++m)
    e.push_back(vec5(omega, {Phase5{0}, {m % 5, 1}, {(2 * m) % 5, 2}, {(3 * m) % 5, 3}, {(4 * m) % 5, 4}}));
  bases.push_back(ObservableBasis(std::move(e), s, p + "e"));

  bases.push_back(ObservableBasis({omega_powers(omega, {2, 3, 1, 4, 0}), omega_powers(omega, {1, 4, 3, 2, 0}),
                                   omega_powers(omega, {0, 0, 0, 0, 0}), omega_powers(omega, {4, 1, 2, 3, 0}),
                                   omega_powers(omega, {3, 2, 4, 1, 0})},
                                  s, p + "g"));

  bases.push_back(ObservableBasis({vec5(omega, {Phase5{0, 4}, {0, 1}, {0, 2}, {0, 3}, {0}}),
                                   vec5(omega, {Phase5{4, 4}, {1, 1}, {2, 2}, {3, 3}, {0}}),
                                   vec5(omega, {Phase5{3, 4}, {2, 1}, {4, 2}, {1, 3}, {0}}),
                                   vec5(omega, {Phase5{2, 4}, {3, 1}, {1, 2}, {4, 3}, {0}}),
                                   vec5(omega, {Phase5{1, 4}, {4, 1}, {3, 2}, {2, 3}, {0}})},
                                  s, p + "k"));

  auto lvec = [&](std::array<int, 4> w) {
    return vec5(omega, {Phase5{w[0]}, {w[1]}, {w[2]}, {w[3]}, {0, 0, -1.0}});
  };
  bases.push_back(ObservableBasis({lvec({3, 1, 4, 2}), lvec({4, 3, 2, 1}), lvec({0, 0, 0, 0}), lvec({1, 2, 3, 4}),
                                   lvec({2, 4, 1, 3})},
                                  s, p + "l"));
  return make_basis_set(5, std::move(bases), BasisSetKind::D5NonMUB6);
}

BasisSet d5_mub_catalog(Complex omega) {
  const auto s = default_spectrum(5);
  const std::string p = "d5-mub/";
  auto basis = [&](std::array<std::array<int, 5>, 5> rows, const std::string& name) {
    std::vector<StateVector> vecs;
    for (const auto& r : rows) vecs.push_back(omega_powers(omega, r));
    return ObservableBasis(std::move(vecs), s, p + name);
  };
  std::vector<ObservableBasis> bases;
  bases.push_back(ObservableBasis(computational_basis(5, s).vectors(), s, p + "a"));
  bases.push_back(b5(omega, p + "b"));
  bases.push_back(basis({{{0, 3, 3, 0, 4}, {0, 4, 0, 3, 3}, {0, 0, 2, 1, 2}, {0, 1, 4, 4, 1}, {0, 2, 1, 2, 0}}}, "e"));
  // Every vector is omega^(a k^2 + b k). Six printed exponents read 4 where the
  // quadratic form (and orthonormality) requires 3: g4[1], k0[3], k1[2],
  // k3[1], k3[4], l2[3]. They are corrected below.
  bases.push_back(basis({{{0, 4, 2, 4, 0}, {0, 0, 4, 2, 4}, {0, 1, 1, 0, 3}, {0, 2, 3, 3, 2}, {0, 3, 0, 1, 1}}}, "g"));
  bases.push_back(basis({{{0, 0, 1, 3, 1}, {0, 1, 3, 1, 0}, {0, 2, 0, 4, 4}, {0, 3, 2, 2, 3}, {0, 4, 4, 0, 2}}}, "k"));
  bases.push_back(basis({{{0, 1, 0, 2, 2}, {0, 2, 2, 0, 1}, {0, 3, 4, 3, 0}, {0, 4, 1, 1, 4}, {0, 0, 3, 4, 3}}}, "l"));
  return make_basis_set(5, std::move(bases), BasisSetKind::D5MUB6);
}

}  // namespace detail

BasisSet d5_noncommuting_catalog() { return detail::d5_noncommuting_catalog(expi(2.0 * kPi / 5.0)); }
BasisSet d5_mub_catalog() { return detail::d5_mub_catalog(expi(2.0 * kPi / 5.0)); }

BasisSet basis_set(BasisSetKind kind, std::size_t d) {
  switch (kind) {
    case BasisSetKind::TwoMUB: return two_mub_set(d);
    case BasisSetKind::QutritNonMUB4: return qutrit_noncommuting_catalog();
    case BasisSetKind::QutritMUB4: return qutrit_mub_catalog();
    case BasisSetKind::D4MUB5: return d4_mub_catalog();
    case BasisSetKind::D5NonMUB6: return d5_noncommuting_catalog();
    case BasisSetKind::D5MUB6: return d5_mub_catalog();
    case BasisSetKind::Custom: break;
  }
  throw ParameterError("custom basis sets have no catalog");
}

std::vector<std::vector<double>> overlap_table(const ObservableBasis& u, const ObservableBasis& v) {
  if (u.dim() != v.dim()) {
    throw DimensionError(fmt::format("overlap of bases with dimensions {} and {}", u.dim(), v.dim()));
  }
  std::vector<std::vector<double>> t(u.dim(), std::vector<double>(v.dim()));
  for (std::size_t i = 0; i < u.dim(); ++i)
    for (std::size_t j = 0; j < v.dim(); ++j) t[i][j] = std::norm(inner(u.vector(i), v.vector(j)));
  return t;
}

bool mub_check(const ObservableBasis& u, const ObservableBasis& v) {
  const double target = 1.0 / static_cast<double>(u.dim());
  for (const auto& row : overlap_table(u, v))
    for (double x : row)
      if (std::abs(x - target) > tol::kMub) return false;
  return true;
}

}  // namespace qpcc
