#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "qpcc/certify.hpp"
#include "qpcc/observables.hpp"
#include "qpcc/sampling.hpp"
#include "qpcc/scan.hpp"
#include "qpcc/states.hpp"

namespace qpcc {

// 12 significant digits, shortest form ("{:.12g}"); negative zero prints as 0.
std::string format_number(double x);
// Parses a number written by format_number. Throws ParameterError.
double parse_number(const nlohmann::json& j);

// Reals are written as decimal strings, counts and dimensions as integers.
nlohmann::ordered_json to_json(const CertificationReport& report);
nlohmann::ordered_json to_json(const DensityMatrix& rho);
nlohmann::ordered_json to_json(const BasisSet& set);
nlohmann::ordered_json to_json(const ScanReport& report);
nlohmann::ordered_json to_json(const std::vector<WernerThresholdRow>& table);

// Reads a state written by to_json. A tagged state is rebuilt from its family
// parameters and must match the stored matrix within 1e-10; an untagged one
// is rescaled to unit trace (undoing the 12-digit rounding) and validated.
DensityMatrix state_from_json(const nlohmann::json& j);

}  // namespace qpcc
