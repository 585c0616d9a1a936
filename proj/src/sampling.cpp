#include "qpcc/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <cstdio>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "qpcc/errors.hpp"

namespace qpcc {

JointTable joint_distribution(const DensityMatrix& rho, const ObservableBasis& a, const ObservableBasis& b) {
  return joint_probabilities(rho, a, b);
}

MeasurementCounts sample_counts(const JointTable& dist, std::uint64_t shots, std::uint64_t seed) {
  if (shots == 0) throw ParameterError("shots must be at least 1");
  if (dist.dA != dist.dB || dist.p.size() != dist.dA * dist.dB) throw DimensionError("outcome table must be d x d");
  for (double p : dist.p)
    if (!(p >= 0.0)) throw ParameterError("probabilities must be non-negative");

  MeasurementCounts c;
  c.d = dist.dA;
  c.counts.assign(dist.p.size(), 0);
  c.shots = shots;
  c.seed = seed;

  std::mt19937_64 gen(seed);
  std::uint64_t left = shots;
  double mass = 0.0;
  for (double p : dist.p) mass += p;
  for (std::size_t i = 0; i + 1 < dist.p.size() && left > 0; ++i) {
    const double q = mass > 0.0 ? std::clamp(dist.p[i] / mass, 0.0, 1.0) : 0.0;
    std::uint64_t k = 0;
    if (q >= 1.0) {
      k = left;
    } else if (q > 0.0) {
      std::binomial_distribution<std::uint64_t> draw(left, q);
      k = draw(gen);
    }
    c.counts[i] = k;
    left -= k;
    mass -= dist.p[i];
  }
  c.counts.back() += left;
  return c;
}

std::uint64_t derive_seed(std::uint64_t master, std::string_view label, std::size_t index) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : label) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  std::uint64_t z = master ^ h ^ (static_cast<std::uint64_t>(index) * 0x9e3779b97f4a7c15ULL);
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

PccEstimate estimate_pcc(const MeasurementCounts& counts, std::span<const double> spectrumA,
                         std::span<const double> spectrumB) {
  if (counts.shots < 4) throw ParameterError("at least four shots are needed for an error estimate");
  JointTable t{counts.d, counts.d, std::vector<double>(counts.counts.size())};
  const double n = static_cast<double>(counts.shots);
  for (std::size_t i = 0; i < t.p.size(); ++i) t.p[i] = static_cast<double>(counts.counts[i]) / n;
  const double r = std::clamp(pcc_from_table(t, spectrumA, spectrumB).value, -1.0, 1.0);
  return {r, (1.0 - r * r) / std::sqrt(n - 3.0)};
}

SampledSet sample_basis_set(const DensityMatrix& rho, const BasisSet& set, std::uint64_t shots,
                            std::uint64_t master_seed) {
  SampledSet out;
  double var = 0.0;
  for (std::size_t i = 0; i < set.bases.size(); ++i) {
    const auto& b = set.bases[i];
    auto c = sample_counts(joint_distribution(rho, b, b), shots, derive_seed(master_seed, b.label(), i));
    c.basisLabelA = b.label();
    c.basisLabelB = b.label();
    const auto e = estimate_pcc(c, b.spectrum(), b.spectrum());
    out.sum += std::abs(e.estimate);
    var += e.standardError * e.standardError;
    out.counts.push_back(std::move(c));
    out.estimates.push_back(e);
  }
  out.sumStderr = std::sqrt(var);
  return out;
}

std::string counts_to_csv(const MeasurementCounts& counts) {
  std::string s = "j,k,count\n";
  for (std::size_t j = 0; j < counts.d; ++j)
    for (std::size_t k = 0; k < counts.d; ++k) s += fmt::format("{},{},{}\n", j, k, counts(j, k));
  return s;
}

std::string counts_sidecar_json(const MeasurementCounts& counts) {
  nlohmann::ordered_json j;
  j["d"] = counts.d;
  j["shots"] = counts.shots;
  j["seed"] = counts.seed;
  j["basisLabelA"] = counts.basisLabelA;
  j["basisLabelB"] = counts.basisLabelB;
  return j.dump(2) + "\n";
}

MeasurementCounts counts_from_csv(std::string_view csv, std::string_view sidecar_json) {
  MeasurementCounts c;
  try {
    const auto j = nlohmann::json::parse(sidecar_json);
    c.d = j.at("d").get<std::size_t>();
    c.shots = j.at("shots").get<std::uint64_t>();
    c.seed = j.at("seed").get<std::uint64_t>();
    c.basisLabelA = j.at("basisLabelA").get<std::string>();
    c.basisLabelB = j.at("basisLabelB").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw ParameterError(fmt::format("bad counts sidecar: {}", e.what()));
  }
  if (c.d < 2) throw ParameterError("counts sidecar: d must be at least 2");
  c.counts.assign(c.d * c.d, 0);
  std::vector<bool> seen(c.d * c.d, false);

  std::istringstream in{std::string(csv)};
  std::string line;
  auto next_line = [&] {
    if (!std::getline(in, line)) return false;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
  };
  if (!next_line() || line != "j,k,count") throw ParameterError("counts CSV must start with 'j,k,count'");
  std::uint64_t total = 0;
  while (next_line()) {
    if (line.empty()) continue;
    std::size_t j = 0;
    std::size_t k = 0;
    unsigned long long n = 0;
    char tail = 0;
    if (line.find('-') != std::string::npos ||
        std::sscanf(line.c_str(), "%zu,%zu,%llu%c", &j, &k, &n, &tail) != 3 || j >= c.d || k >= c.d) {
      throw ParameterError(fmt::format("bad counts CSV row '{}'", line));
    }
    if (seen[j * c.d + k]) throw ParameterError(fmt::format("duplicate counts cell ({}, {})", j, k));
    seen[j * c.d + k] = true;
    c.counts[j * c.d + k] = n;
    total += n;
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) throw ParameterError("counts CSV is missing cells");
  if (total != c.shots) {
    throw ParameterError(fmt::format("counts add up to {}, sidecar says {} shots", total, c.shots));
  }
  return c;
}

}  // namespace qpcc
