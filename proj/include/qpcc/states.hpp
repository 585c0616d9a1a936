#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qpcc/linalg.hpp"

namespace qpcc {

enum class Family { PureSchmidt, Isotropic, ColouredA, ColouredB, Werner, WernerPopescu };

std::string_view family_name(Family f);
// Accepts the CLI spellings ("isotropic", "coloured-a", "werner-popescu", ...).
Family parse_family(std::string_view name);

// Which state family a density matrix was built from, with its parameters.
// Single-parameter families carry one value (F or p); PureSchmidt carries the
// Schmidt coefficients.
struct FamilyTag {
  Family family;
  std::vector<double> params;
};

// Bipartite state on C^dA (x) C^dB. Construction validates unit trace,
// Hermiticity and positivity.
class DensityMatrix {
 public:
  DensityMatrix(ComplexMatrix matrix, std::size_t dA, std::size_t dB,
                std::optional<FamilyTag> tag = std::nullopt);

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  std::size_t dA() const noexcept { return dA_; }
  std::size_t dB() const noexcept { return dB_; }
  const std::optional<FamilyTag>& tag() const noexcept { return tag_; }

 private:
  ComplexMatrix matrix_;
  std::size_t dA_;
  std::size_t dB_;
  std::optional<FamilyTag> tag_;
};

inline constexpr std::size_t kMinLocalDim = 2;
inline constexpr std::size_t kMaxLocalDim = 8;

// (1/sqrt d) sum_i |ii>
std::vector<Complex> maximally_entangled_vector(std::size_t d);

DensityMatrix maximally_entangled(std::size_t d);
DensityMatrix pure_schmidt(std::span<const double> coeffs);
DensityMatrix isotropic(std::size_t d, double fidelity);
DensityMatrix coloured_noise_a(std::size_t d, double p);
DensityMatrix coloured_noise_b(std::size_t d, double p);
DensityMatrix werner(std::size_t d, double p);
DensityMatrix werner_popescu(std::size_t d, double p);

// Lower end of the Werner parameter range, 1 - 2d/(d+1).
double werner_min_param(std::size_t d);

// Valid parameter interval for a single-parameter family.
struct ParamRange {
  double lo;
  double hi;
};
ParamRange family_param_range(Family f, std::size_t d);

// Dispatch on the family; PureSchmidt takes the coefficients as params.
DensityMatrix make_state(Family f, std::size_t d, std::span<const double> params);
DensityMatrix make_state(const FamilyTag& tag, std::size_t d);

}  // namespace qpcc
