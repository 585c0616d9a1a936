#include "qpcc/serialize.hpp"

#include <cmath>

#include <fmt/format.h>

#include "qpcc/errors.hpp"
#include "qpcc/tolerances.hpp"

namespace qpcc {

namespace {

using ojson = nlohmann::ordered_json;

ojson numbers(std::span<const double> xs) {
  ojson a = ojson::array();
  for (double x : xs) a.push_back(format_number(x));
  return a;
}

ojson complex_pair(Complex z) { return ojson::array({format_number(z.real()), format_number(z.imag())}); }

ojson tag_json(const std::optional<FamilyTag>& tag) {
  if (!tag) return nullptr;
  return ojson{{"name", family_name(tag->family)}, {"params", numbers(tag->params)}};
}

}  // namespace

std::string format_number(double x) {
  if (x == 0.0) return "0";
  return fmt::format("{:.12g}", x);
}

double parse_number(const nlohmann::json& j) {
  if (j.is_number()) return j.get<double>();
  if (!j.is_string()) throw ParameterError("expected a number or numeric string");
  const auto& s = j.get_ref<const std::string&>();
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw ParameterError(fmt::format("'{}' is not a number", s));
  return x;
}

ojson to_json(const CertificationReport& r) {
  ojson j;
  j["family"] = tag_json(r.family);
  j["d"] = r.d;
  j["basisSetKind"] = basis_set_name(r.basisSetKind);
  j["pccs"] = numbers(r.pccs);
  j["pccSum"] = format_number(r.pccSum);
  j["threshold"] = format_number(r.threshold);
  j["certified"] = r.certified;
  j["verdictStrength"] = verdict_name(r.verdictStrength);
  j["inferredNegativity"] = r.inferredNegativity ? ojson(format_number(*r.inferredNegativity)) : ojson(nullptr);
  j["entangledRange"] = r.entangledRange ? ojson(*r.entangledRange) : ojson(nullptr);
  return j;
}

ojson to_json(const DensityMatrix& rho) {
  ojson j;
  j["dA"] = rho.dA();
  j["dB"] = rho.dB();
  j["family"] = tag_json(rho.tag());
  ojson rows = ojson::array();
  const auto& m = rho.matrix();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    ojson row = ojson::array();
    for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(complex_pair(m(r, c)));
    rows.push_back(std::move(row));
  }
  j["matrix"] = std::move(rows);
  return j;
}

ojson to_json(const BasisSet& set) {
  ojson j;
  j["kind"] = basis_set_name(set.kind);
  j["d"] = set.d;
  ojson bases = ojson::array();
  for (const auto& b : set.bases) {
    ojson vecs = ojson::array();
    for (const auto& v : b.vectors()) {
      ojson comps = ojson::array();
      for (const auto& z : v) comps.push_back(complex_pair(z));
      vecs.push_back(std::move(comps));
    }
    bases.push_back(ojson{{"label", b.label()}, {"spectrum", numbers(b.spectrum())}, {"vectors", std::move(vecs)}});
  }
  j["bases"] = std::move(bases);
  return j;
}

ojson to_json(const ScanReport& r) {
  ojson j;
  j["resolution"] = r.resolution;
  j["samples"] = r.samples;
  j["gridPoints"] = r.gridPoints;
  j["bestPhi"] = numbers(r.best.phi);
  j["bestIntercept"] = format_number(r.best.intercept);
  j["bestSlope"] = format_number(r.best.slope);
  j["minMaxResidual"] = format_number(r.best.maxResidual);
  j["reportingFloor"] = format_number(tol::kScanReportingFloor);
  j["exceedsFloor"] = r.exceedsFloor;
  return j;
}

ojson to_json(const std::vector<WernerThresholdRow>& table) {
  ojson rows = ojson::array();
  for (const auto& r : table) {
    rows.push_back(ojson{{"d", r.d},
                         {"entangledAbove", format_number(r.entangledAbove)},
                         {"certifiedAbove", format_number(r.certifiedAbove)},
                         {"derivedCertifiedAbove", format_number(r.derivedCertifiedAbove)}});
  }
  return rows;
}

DensityMatrix state_from_json(const nlohmann::json& j) {
  try {
    const auto dA = j.at("dA").get<std::size_t>();
    const auto dB = j.at("dB").get<std::size_t>();
    const auto& rows = j.at("matrix");
    const std::size_t n = dA * dB;
    if (!rows.is_array() || rows.size() != n) throw ParameterError("matrix must have dA*dB rows");
    ComplexMatrix m(n);
    for (std::size_t r = 0; r < n; ++r) {
      if (!rows[r].is_array() || rows[r].size() != n) throw ParameterError("matrix rows must have dA*dB entries");
      for (std::size_t c = 0; c < n; ++c) {
        const auto& z = rows[r][c];
        if (!z.is_array() || z.size() != 2) throw ParameterError("matrix entries must be [re, im] pairs");
        m(r, c) = Complex(parse_number(z[0]), parse_number(z[1]));
      }
    }

    const auto& fam = j.contains("family") ? j.at("family") : nlohmann::json(nullptr);
    if (!fam.is_null()) {
      if (dA != dB) throw ParameterError("tagged states must have dA = dB");
      std::vector<double> params;
      for (const auto& p : fam.at("params")) params.push_back(parse_number(p));
      DensityMatrix rebuilt = make_state(parse_family(fam.at("name").get<std::string>()), dA, params);
      const double diff = max_abs_diff(rebuilt.matrix(), m);
      if (diff > tol::kDefault) {
        throw ParameterError(fmt::format("stored matrix differs from its family tag by {:.3g}", diff));
      }
      return rebuilt;
    }

    const Complex tr = m.trace();
    if (std::abs(tr - Complex{1.0}) > tol::kPreNormalized) {
      throw InvalidStateError(fmt::format("stored matrix has trace {:.12g}", tr.real()));
    }
    m *= Complex{1.0 / tr.real()};
    return DensityMatrix(std::move(m), dA, dB);
  } catch (const nlohmann::json::exception& e) {
    throw ParameterError(fmt::format("bad state JSON: {}", e.what()));
  }
}

}  // namespace qpcc
