#include <doctest.h>

#include <cmath>

#include "oracle.hpp"
#include "qpcc/errors.hpp"
#include "qpcc/negativity.hpp"
#include "qpcc/states.hpp"

using namespace qpcc;

namespace {

double purity(const DensityMatrix& rho) { return trace_of_product(rho.matrix(), rho.matrix()).real(); }

double fidelity(const DensityMatrix& rho) {
  const auto phi = maximally_entangled_vector(rho.dA());
  Complex s = 0.0;
  for (std::size_t i = 0; i < phi.size(); ++i)
    for (std::size_t j = 0; j < phi.size(); ++j) s += std::conj(phi[i]) * rho.matrix()(i, j) * phi[j];
  return s.real();
}

ComplexMatrix maximally_mixed(std::size_t d) {
  ComplexMatrix m = ComplexMatrix::identity(d * d);
  m *= Complex{1.0 / static_cast<double>(d * d)};
  return m;
}

}  // namespace

TEST_CASE("maximally entangled states") {
  CHECK(purity(maximally_entangled(2)) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(max_abs_diff(partial_trace_b(maximally_entangled(3).matrix(), 3, 3),
                     ComplexMatrix::identity(3) * Complex{1.0 / 3}) < 1e-15);
  CHECK(negativity_oracle(maximally_entangled(3)).value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(maximally_entangled(1), ParameterError);
  CHECK(maximally_entangled(4).tag()->family == Family::Isotropic);
}

TEST_CASE("pure Schmidt states") {
  const double product[] = {1, 0, 0, 0};
  CHECK(negativity_oracle(pure_schmidt(product)).value == 0.0);
  const double half[] = {0.5, 0.5, 0.5, 0.5};
  CHECK(max_abs_diff(pure_schmidt(half).matrix(), maximally_entangled(4).matrix()) < 1e-15);
  const double two[] = {std::sqrt(0.7), std::sqrt(0.3), 0, 0};
  CHECK(negativity_oracle(pure_schmidt(two)).value == doctest::Approx(std::sqrt(0.21)).epsilon(1e-12));
  CHECK(std::abs(oracle::negativity(pure_schmidt(two)) - std::sqrt(0.21)) < 1e-12);

  const double unnormalized[] = {0.5, 0.5, 0.5};
  CHECK_THROWS_AS(pure_schmidt(unnormalized), ParameterError);
  const double negative[] = {-0.6, 0.8};
  CHECK_THROWS_AS(pure_schmidt(negative), ParameterError);
}

TEST_CASE("isotropic states") {
  CHECK(max_abs_diff(isotropic(3, 1.0).matrix(), maximally_entangled(3).matrix()) < 1e-15);
  CHECK(max_abs_diff(isotropic(3, 1.0 / 9).matrix(), maximally_mixed(3)) < 1e-15);
  CHECK(negativity_oracle(isotropic(3, 1.0 / 3)).value < 1e-10);
  for (double f : {0.0, 0.2, 0.5, 0.9}) CHECK(fidelity(isotropic(4, f)) == doctest::Approx(f).epsilon(1e-14));
  CHECK_THROWS_AS(isotropic(3, -0.01), ParameterError);
  CHECK_THROWS_AS(isotropic(3, 1.01), ParameterError);
}

TEST_CASE("coloured-noise states") {
  CHECK(negativity_oracle(coloured_noise_a(3, 0.0)).value == 0.0);
  CHECK(max_abs_diff(coloured_noise_a(4, 1.0).matrix(), maximally_entangled(4).matrix()) < 1e-15);
  CHECK(negativity_oracle(coloured_noise_a(3, 0.5)).value == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(negativity_oracle(coloured_noise_b(3, 1.0 / 3)).value < 1e-10);
  CHECK(max_abs_diff(coloured_noise_b(5, 1.0).matrix(), maximally_entangled(5).matrix()) < 1e-15);
  CHECK(negativity_oracle(coloured_noise_b(4, 0.5)).value == doctest::Approx(0.5).epsilon(1e-12));
  CHECK_THROWS_AS(coloured_noise_a(3, 1.5), ParameterError);
  CHECK_THROWS_AS(coloured_noise_b(3, -0.5), ParameterError);
}

TEST_CASE("coloured-noise B is diagonal off the maximally entangled part") {
  const auto rho = coloured_noise_b(3, 0.0).matrix();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      const double expect = i == j ? 0.0 : 1.0 / 6.0;
      CHECK(rho(i * 3 + j, i * 3 + j).real() == doctest::Approx(expect));
    }
}

TEST_CASE("Werner states") {
  CHECK(max_abs_diff(werner(3, 0.0).matrix(), maximally_mixed(3)) < 1e-15);
  CHECK(negativity_oracle(werner(3, 0.25)).value < 1e-10);
  CHECK(negativity_oracle(werner(5, 1.0)).value == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(werner_min_param(3) == doctest::Approx(-0.5));
  CHECK_NOTHROW(werner(3, -0.5));
  CHECK_THROWS_AS(werner(3, -0.51), ParameterError);
  CHECK_THROWS_AS(werner(3, 1.01), ParameterError);
}

TEST_CASE("Werner-Popescu states") {
  CHECK(negativity_oracle(werner_popescu(3, 0.25)).value < 1e-10);
  CHECK(max_abs_diff(werner_popescu(4, 0.0).matrix(), maximally_mixed(4)) < 1e-15);
  CHECK(negativity_oracle(werner_popescu(4, 0.6)).value == doctest::Approx(0.75).epsilon(1e-12));
  CHECK_THROWS_AS(werner_popescu(4, 1.2), ParameterError);
}

TEST_CASE("Werner-Popescu equals isotropic with F = ((d^2-1)p + 1)/d^2") {
  for (std::size_t d : {3u, 4u, 5u})
    for (double p : oracle::grid(0, 1)) {
      const double dd = static_cast<double>(d);
      const double f = ((dd * dd - 1) * p + 1) / (dd * dd);
      CHECK(max_abs_diff(werner_popescu(d, p).matrix(), isotropic(d, f).matrix()) < 1e-12);
    }
}

TEST_CASE("every family satisfies the density-matrix invariants on a 21-point grid") {
  for (std::size_t d = 2; d <= 5; ++d) {
    for (Family f : {Family::Isotropic, Family::ColouredA, Family::ColouredB, Family::Werner, Family::WernerPopescu}) {
      const ParamRange r = family_param_range(f, d);
      for (double x : oracle::grid(r.lo, r.hi)) {
        CAPTURE(d);
        CAPTURE(x);
        const double params[] = {x};
        const DensityMatrix rho = make_state(f, d, params);
        CHECK(std::abs(rho.matrix().trace() - Complex{1.0}) < 1e-12);
        CHECK(hermiticity_defect(rho.matrix()) < 1e-12);
        CHECK(oracle::eigenvalues(rho.matrix()).front() >= -1e-10);
        CHECK(rho.tag()->family == f);
        CHECK(rho.tag()->params.at(0) == x);
      }
    }
  }
}

TEST_CASE("coloured-noise states at p = 1 coincide with the maximally entangled state") {
  for (std::size_t d : {3u, 4u, 5u}) {
    CHECK(max_abs_diff(coloured_noise_a(d, 1).matrix(), coloured_noise_b(d, 1).matrix()) < 1e-15);
    CHECK(max_abs_diff(coloured_noise_a(d, 1).matrix(), maximally_entangled(d).matrix()) < 1e-15);
  }
}

TEST_CASE("density matrix validation") {
  CHECK_THROWS_AS(DensityMatrix(ComplexMatrix::identity(4), 2, 2), InvalidStateError);
  ComplexMatrix neg = ComplexMatrix::diagonal(std::vector<double>{1.5, -0.5, 0, 0});
  CHECK_THROWS_AS(DensityMatrix(neg, 2, 2), InvalidStateError);
  ComplexMatrix nh = ComplexMatrix::identity(4) * Complex{0.25};
  nh(0, 1) = 0.1;
  CHECK_THROWS_AS(DensityMatrix(nh, 2, 2), InvalidStateError);
  CHECK_THROWS_AS(DensityMatrix(ComplexMatrix::identity(4) * Complex{0.25}, 2, 3), DimensionError);
  CHECK_THROWS_AS(isotropic(9, 0.5), ParameterError);
}

TEST_CASE("family names") {
  for (Family f : {Family::PureSchmidt, Family::Isotropic, Family::ColouredA, Family::ColouredB, Family::Werner,
                   Family::WernerPopescu})
    CHECK(parse_family(family_name(f)) == f);
  CHECK(parse_family("colored-b") == Family::ColouredB);
  CHECK_THROWS_AS(parse_family("ghz"), ParameterError);
}

TEST_CASE("make_state dispatch") {
  const double p[] = {0.3};
  CHECK(make_state(Family::Werner, 3, p).matrix() == werner(3, 0.3).matrix());
  const double two[] = {0.3, 0.4};
  CHECK_THROWS_AS(make_state(Family::Werner, 3, two), ParameterError);
  CHECK(make_state(FamilyTag{Family::ColouredB, {0.2}}, 4).matrix() == coloured_noise_b(4, 0.2).matrix());
}
