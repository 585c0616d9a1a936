#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qpcc {

using Complex = std::complex<double>;

// Dense square complex matrix. Storage is row-major: entry (i, j) lives at
// index i * dim + j. Dimensions are capped at tol::kMaxDim.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim);
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const double> values);
  // |v><v|
  static ComplexMatrix outer(std::span<const Complex> v);

  std::size_t dim() const noexcept { return dim_; }
  std::span<const Complex> entries() const noexcept { return data_; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  Complex trace() const;
  bool all_finite() const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex s);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(ComplexMatrix a, Complex s);
ComplexMatrix operator*(Complex s, ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

// Largest entrywise modulus of a - b.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double frobenius_norm(const ComplexMatrix& a);
// max |h - h^dagger| entrywise.
double hermiticity_defect(const ComplexMatrix& h);
bool is_hermitian(const ComplexMatrix& h, double tolerance);

// Tr[a b] without forming the product.
Complex trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Transposes the second tensor factor of a (dA*dB)-dimensional operator.
ComplexMatrix partial_transpose(const ComplexMatrix& rho, std::size_t dA, std::size_t dB);
// Tr_B of a (dA*dB)-dimensional operator; result is dA x dA.
ComplexMatrix partial_trace_b(const ComplexMatrix& rho, std::size_t dA, std::size_t dB);
// Tr_A of a (dA*dB)-dimensional operator; result is dB x dB.
ComplexMatrix partial_trace_a(const ComplexMatrix& rho, std::size_t dA, std::size_t dB);

struct HermitianEigen {
  std::vector<double> values;     // ascending
  ComplexMatrix vectors;          // column k is the eigenvector of values[k]
  int sweeps = 0;
};

// Cyclic complex Jacobi. Throws ContractViolation when h is not Hermitian
// within tol::kHermitian and NumericError when it fails to converge within
// tol::kJacobiMaxSweeps sweeps.
HermitianEigen hermitian_eigen(const ComplexMatrix& h);
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h);

}  // namespace qpcc
