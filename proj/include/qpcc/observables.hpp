#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qpcc/linalg.hpp"

namespace qpcc {

using StateVector = std::vector<Complex>;

// Local observable A = sum_j spectrum[j] |v_j><v_j| given by an orthonormal
// basis of C^d and one real outcome value per basis vector.
class ObservableBasis {
 public:
  // Vectors must have unit norm within tol::kPreNormalized; they are then
  // renormalized and checked for orthonormality within tol::kOrthonormal.
  ObservableBasis(std::vector<StateVector> vectors, std::vector<double> spectrum, std::string label);

  std::size_t dim() const noexcept { return vectors_.size(); }
  const std::vector<StateVector>& vectors() const noexcept { return vectors_; }
  const StateVector& vector(std::size_t j) const { return vectors_.at(j); }
  const std::vector<double>& spectrum() const noexcept { return spectrum_; }
  const std::string& label() const noexcept { return label_; }

  ComplexMatrix projector(std::size_t j) const;
  ComplexMatrix observable() const;
  // Same vectors, different outcome values.
  ObservableBasis with_spectrum(std::vector<double> spectrum) const;

 private:
  std::vector<StateVector> vectors_;
  std::vector<double> spectrum_;
  std::string label_;
};

enum class BasisSetKind { TwoMUB, QutritNonMUB4, QutritMUB4, D4MUB5, D5NonMUB6, D5MUB6, Custom };

std::string_view basis_set_name(BasisSetKind kind);
BasisSetKind parse_basis_set(std::string_view name);

struct BasisSet {
  std::size_t d;
  std::vector<ObservableBasis> bases;
  BasisSetKind kind;
};

BasisSet make_basis_set(std::size_t d, std::vector<ObservableBasis> bases, BasisSetKind kind);

// Symmetric integer outcomes: (1,0,-1), (2,1,-1,-2), (2,1,0,-1,-2), ...
std::vector<double> default_spectrum(std::size_t d);

ObservableBasis computational_basis(std::size_t d, std::vector<double> spectrum);
// Vector a has components e^{i 2 pi a k / d} e^{i k phi} / sqrt(d). phi = 0 is
// the generalized sigma_x basis and phi = pi/d the generalized sigma_y basis.
ObservableBasis generalized_basis(std::size_t d, double phi, std::vector<double> spectrum);
// |b_j> ~ |0> + e^{i 2pi j/4} e^{i phi_x}|1> + e^{i 4pi j/4} e^{2i phi_y}|2>
//        + e^{i 6pi j/4} e^{3i phi_z}|3>, all phases in [0, 2pi].
ObservableBasis parametrized_d4_mub(double phi_x, double phi_y, double phi_z,
                                    std::vector<double> spectrum);

// {computational, generalized sigma_y} with default_spectrum(d).
BasisSet two_mub_set(std::size_t d);
BasisSet qutrit_noncommuting_catalog();
BasisSet qutrit_mub_catalog();
BasisSet d4_mub_catalog();
BasisSet d5_noncommuting_catalog();
BasisSet d5_mub_catalog();
// Catalog lookup by kind; d is only consulted for TwoMUB.
BasisSet basis_set(BasisSetKind kind, std::size_t d);

// |<u_i|v_j>|^2
std::vector<std::vector<double>> overlap_table(const ObservableBasis& u, const ObservableBasis& v);
bool mub_check(const ObservableBasis& u, const ObservableBasis& v);

namespace detail {
// Catalog builders with an explicit omega, so the literal reading of the
// printed "omega = 2 i pi / 5" can be exercised in tests.
BasisSet d5_noncommuting_catalog(Complex omega);
BasisSet d5_mub_catalog(Complex omega);
}  // namespace detail

}  // namespace qpcc
