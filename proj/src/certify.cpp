#include "qpcc/certify.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "qpcc/correlation.hpp"
#include "qpcc/errors.hpp"
#include "qpcc/negativity.hpp"
#include "qpcc/tolerances.hpp"

namespace qpcc {

namespace {

bool designated_dim(std::size_t d) { return d >= 3 && d <= 5; }

constexpr double kRelationTolerance = 1e-9;
constexpr double kTableTolerance = 1e-12;

}  // namespace

std::string_view verdict_name(VerdictStrength v) {
  switch (v) {
    case VerdictStrength::NecessaryAndSufficient: return "necessary-and-sufficient";
    case VerdictStrength::SufficientOnly: return "sufficient-only";
    case VerdictStrength::IffNegativityNonzero: return "iff-negativity-nonzero";
  }
  return "unknown";
}

BasisSetKind designated_set(Family family, std::size_t d) {
  if (family == Family::ColouredA || family == Family::PureSchmidt) return BasisSetKind::TwoMUB;
  switch (d) {
    case 3: return BasisSetKind::QutritNonMUB4;
    case 4: return BasisSetKind::D4MUB5;
    case 5: return BasisSetKind::D5NonMUB6;
    default: break;
  }
  throw UnsupportedError(fmt::format("no designated basis set for {} at d = {}", family_name(family), d));
}

bool is_designated(Family family, std::size_t d, BasisSetKind kind) {
  if (!designated_dim(d)) return false;
  if (family == Family::PureSchmidt && d == 3) return false;
  if (kind == designated_set(family, d)) return true;
  // The Werner sums are unchanged with the qutrit and d = 5 MUB sets.
  return family == Family::Werner &&
         ((d == 3 && kind == BasisSetKind::QutritMUB4) || (d == 5 && kind == BasisSetKind::D5MUB6));
}

std::optional<LinearMap> linear_map(Family family, std::size_t d, BasisSetKind kind) {
  if (family == Family::PureSchmidt || !is_designated(family, d, kind)) return std::nullopt;
  const double dd = static_cast<double>(d);
  switch (family) {
    case Family::Isotropic:
    case Family::ColouredB:
    case Family::WernerPopescu:
      return LinearMap{1.0, 2.0 * dd / (dd - 1.0)};
    case Family::ColouredA:
      return LinearMap{1.0, 2.0 / (dd - 1.0)};
    case Family::Werner:
      return LinearMap{1.0 / (dd - 1.0), dd * dd / (dd - 1.0)};
    case Family::PureSchmidt:
      break;
  }
  return std::nullopt;
}

std::string entangled_range(Family family, std::size_t d) {
  switch (family) {
    case Family::PureSchmidt: return "at least two nonzero Schmidt coefficients";
    case Family::Isotropic: return fmt::format("F > 1/{}", d);
    case Family::ColouredA: return "p > 0";
    case Family::ColouredB: return fmt::format("p > 1/{}", d);
    case Family::Werner:
    case Family::WernerPopescu: return fmt::format("p > 1/{}", d + 1);
  }
  return {};
}

VerdictStrength verdict_strength(const std::optional<FamilyTag>& tag, std::size_t d, BasisSetKind kind) {
  if (!tag || !is_designated(tag->family, d, kind)) return VerdictStrength::SufficientOnly;
  switch (tag->family) {
    case Family::Isotropic:
    case Family::WernerPopescu:
    case Family::ColouredA:
    case Family::PureSchmidt:
      return VerdictStrength::NecessaryAndSufficient;
    case Family::ColouredB:
      return VerdictStrength::IffNegativityNonzero;
    case Family::Werner:
      return VerdictStrength::SufficientOnly;
  }
  return VerdictStrength::SufficientOnly;
}

CertificationReport certify(const DensityMatrix& rho, const BasisSet& set) {
  if (set.d != rho.dA() || set.d != rho.dB()) {
    throw DimensionError(fmt::format("basis set of dimension {} for a {}x{} state", set.d, rho.dA(), rho.dB()));
  }
  CertificationReport r;
  r.family = rho.tag();
  r.d = set.d;
  r.basisSetKind = set.kind;
  for (const auto& c : pcc_values(rho, set)) {
    r.pccs.push_back(c.value);
    r.pccSum += std::abs(c.value);
  }
  r.certified = r.pccSum > r.threshold + tol::kDefault;
  r.verdictStrength = verdict_strength(r.family, r.d, r.basisSetKind);
  if (r.family) {
    r.entangledRange = entangled_range(r.family->family, r.d);
    if (r.certified && linear_map(r.family->family, r.d, r.basisSetKind)) {
      r.inferredNegativity = negativity_from_pcc_sum(r.family->family, r.d, r.basisSetKind, r.pccSum);
    }
  }
  return r;
}

double negativity_from_pcc_sum(Family family, std::size_t d, BasisSetKind kind, double sum) {
  const auto map = linear_map(family, d, kind);
  if (!map) {
    throw UnsupportedError(fmt::format("no linear PCC-Negativity map for {} at d = {} with {}", family_name(family),
                                       d, basis_set_name(kind)));
  }
  if (!std::isfinite(sum) || sum < map->intercept - tol::kDefault) {
    throw RegimeError(fmt::format("sum {:.12g} is below the linear regime (starts at {:.12g})", sum, map->intercept));
  }
  return std::max((sum - map->intercept) / map->slope, 0.0);
}

double pure_chi(std::span<const double> c) {
  if (c.size() == 4) return c[0] * c[2] + c[1] * c[3];
  if (c.size() == 5) return c[0] * c[2] + c[0] * c[3] + c[1] * c[3] + c[1] * c[4] + c[2] * c[4];
  throw UnsupportedError(fmt::format("chi is defined for d = 4 and 5, got {}", c.size()));
}

PureStateRelation pure_state_relation(std::span<const double> coeffs, std::size_t d) {
  if (d != 4 && d != 5) throw UnsupportedError(fmt::format("pure-state relation needs d = 4 or 5, got {}", d));
  if (coeffs.size() != d) throw ParameterError("need one Schmidt coefficient per level");
  const DensityMatrix rho = pure_schmidt(coeffs);
  const BasisSet set = two_mub_set(d);
  const auto nonzero = std::count_if(coeffs.begin(), coeffs.end(), [](double c) { return c > 0.0; });

  PureStateRelation r{};
  for (const auto& basis : set.bases) {
    try {
      r.sum += std::abs(pcc(rho, basis, basis).value);
    } catch (const UndefinedPccError&) {
      if (nonzero != 1) throw;
      r.sum += 1.0;
    }
  }
  r.negativity = pure_negativity(coeffs);
  r.chi = pure_chi(coeffs);

  const double dd = static_cast<double>(d);
  const double expected = d == 4 ? 1.0 + (9.0 * r.negativity - 7.0 * r.chi) / 10.0
                                 : 1.0 + ((5.0 + std::sqrt(5.0)) * r.negativity - 2.0 * std::sqrt(dd) * r.chi) / 10.0;
  if (std::abs(expected - r.sum) > kRelationTolerance) {
    throw NumericError(fmt::format("chi identity fails: sum {:.12g}, expected {:.12g}", r.sum, expected));
  }
  return r;
}

std::vector<WernerThresholdRow> werner_threshold_table() {
  const std::vector<WernerThresholdRow> listed{
      {3, 1.0 / 4.0, 1.0 / 2.0, 0.0},
      {4, 1.0 / 5.0, 3.0 / 5.0, 0.0},
      {5, 1.0 / 6.0, 2.0 / 3.0, 0.0},
  };
  std::vector<WernerThresholdRow> rows;
  for (auto row : listed) {
    const double one = 1.0;
    const double slope = predicted_pcc_sum(Family::Werner, row.d, std::span(&one, 1));
    row.derivedCertifiedAbove = 1.0 / slope;
    if (std::abs(row.derivedCertifiedAbove - row.certifiedAbove) > kTableTolerance) {
      throw NumericError(fmt::format("d = {}: derived threshold {:.15g} differs from {:.15g}", row.d,
                                     row.derivedCertifiedAbove, row.certifiedAbove));
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace qpcc
