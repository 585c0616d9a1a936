#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qpcc/observables.hpp"
#include "qpcc/states.hpp"

namespace qpcc {

enum class VerdictStrength { NecessaryAndSufficient, SufficientOnly, IffNegativityNonzero };

std::string_view verdict_name(VerdictStrength v);

struct CertificationReport {
  std::optional<FamilyTag> family;
  std::size_t d = 0;
  BasisSetKind basisSetKind = BasisSetKind::Custom;
  std::vector<double> pccs;  // signed C(A_i, B_i), one per basis
  double pccSum = 0.0;
  double threshold = 1.0;
  bool certified = false;  // pccSum > threshold + tol::kDefault
  VerdictStrength verdictStrength = VerdictStrength::SufficientOnly;
  std::optional<double> inferredNegativity;
  std::optional<std::string> entangledRange;
};

// sum = intercept + slope * N
struct LinearMap {
  double intercept;
  double slope;
};

// Basis set the family's closed forms refer to.
BasisSetKind designated_set(Family family, std::size_t d);
bool is_designated(Family family, std::size_t d, BasisSetKind kind);

std::optional<LinearMap> linear_map(Family family, std::size_t d, BasisSetKind kind);

// Known entanglement condition of the family, e.g. "F > 1/3".
std::string entangled_range(Family family, std::size_t d);

VerdictStrength verdict_strength(const std::optional<FamilyTag>& tag, std::size_t d, BasisSetKind kind);

CertificationReport certify(const DensityMatrix& rho, const BasisSet& set);

// Inverse of the linear map. Throws UnsupportedError when no map exists and
// RegimeError when the sum lies below the image of the entanglement threshold.
double negativity_from_pcc_sum(Family family, std::size_t d, BasisSetKind kind, double sum);

struct PureStateRelation {
  double sum;
  double negativity;
  double chi;
};

// Numeric two-MUB sum for a Schmidt state with d in {4, 5}, its Negativity and
// chi; throws NumericError if the chi identity fails by more than 1e-9. For a
// product state the undefined computational coefficient is taken at its limit 1.
PureStateRelation pure_state_relation(std::span<const double> coeffs, std::size_t d);
double pure_chi(std::span<const double> coeffs);

struct WernerThresholdRow {
  std::size_t d;
  double entangledAbove;
  double certifiedAbove;
  double derivedCertifiedAbove;  // root of predicted_pcc_sum(p) = 1
};

// Throws NumericError if a derived threshold misses the listed one by > 1e-12.
std::vector<WernerThresholdRow> werner_threshold_table();

}  // namespace qpcc
