#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "qpcc/certify.hpp"
#include "qpcc/errors.hpp"
#include "qpcc/negativity.hpp"
#include "qpcc/sampling.hpp"
#include "qpcc/scan.hpp"
#include "qpcc/serialize.hpp"
#include "qpcc/sweep.hpp"

namespace qpcc::cli {

namespace {

// --config <file.json>: a flat object whose keys are the subcommand's long
// flag names, e.g. {"family": "werner", "d": 5, "steps": 41}.
std::string config_scalar(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number()) return v.dump();
  throw CLI::ConfigError("config values must be strings, numbers, booleans or arrays of those");
}

// CLI11 only reads config files for the top-level app, so the subcommand's
// --config is expanded into ordinary flags before parsing. Flags given on the
// command line win over the file.
std::vector<std::string> expand_config(const CLI::App& app, std::vector<std::string> args) {
  if (args.empty()) return args;
  const CLI::App* sub = nullptr;
  try {
    sub = app.get_subcommand(args.front());
  } catch (const CLI::OptionNotFound&) {
    return args;
  }
  std::optional<std::string> path;
  std::vector<std::string> rest;
  for (std::size_t i = 1; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 == args.size()) throw CLI::ArgumentMismatch("--config needs a file name");
      path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    } else {
      rest.push_back(args[i]);
    }
  }
  if (!path) return args;

  std::ifstream in(*path);
  if (!in) throw CLI::FileError::Missing(*path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw CLI::ConfigError(fmt::format("config is not valid JSON: {}", e.what()));
  }
  if (!j.is_object()) throw CLI::ConfigError("config must be a JSON object");

  std::vector<std::string> out{args.front()};
  for (const auto& [key, value] : j.items()) {
    const std::string flag = "--" + key;
    const CLI::Option* opt = sub->get_option_no_throw(flag);
    if (opt == nullptr || key == "config" || key == "help")
      throw CLI::ConfigError(fmt::format("unknown key '{}' in {}", key, *path));
    const bool given = std::any_of(rest.begin(), rest.end(), [&](const std::string& a) {
      return a == flag || a.rfind(flag + "=", 0) == 0;
    });
    if (given) continue;
    if (opt->get_type_size() == 0) {
      if (config_scalar(value) == "true") out.push_back(flag);
      continue;
    }
    std::string v;
    if (value.is_array()) {
      for (const auto& x : value) v += (v.empty() ? "" : ",") + config_scalar(x);
    } else {
      v = config_scalar(value);
    }
    out.push_back(flag + "=" + v);
  }
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

struct StateArgs {
  std::string family;
  std::size_t d = 3;
  std::optional<double> param;
  std::vector<double> coeffs;
  std::string bases;
};

void add_config(CLI::App* sub) {
  sub->set_config("--config", "", "JSON file with the same keys as the flags");
}

void add_state_flags(CLI::App* sub, StateArgs& a, bool with_bases) {
  sub->add_option("--family", a.family, "isotropic, coloured-a, coloured-b, werner, werner-popescu, pure")->required();
  sub->add_option("--d", a.d, "local dimension")->required()->check(CLI::Range(2, 8));
  sub->add_option("--param", a.param, "family parameter (F or p)");
  sub->add_option("--coeffs", a.coeffs, "Schmidt coefficients for --family pure")->delimiter(',');
  if (with_bases) {
    sub->add_option("--bases", a.bases,
                    "two-mub, qutrit-noncommuting, qutrit-mub, d4-mub, d5-noncommuting, d5-mub "
                    "(default: the family's designated set)");
  }
}

DensityMatrix build_state(const StateArgs& a) {
  const Family f = parse_family(a.family);
  if (f == Family::PureSchmidt) {
    if (a.coeffs.empty()) throw ParameterError("--family pure needs --coeffs");
    if (a.coeffs.size() != a.d) throw ParameterError(fmt::format("--coeffs needs {} values", a.d));
    return pure_schmidt(a.coeffs);
  }
  if (!a.param) throw ParameterError(fmt::format("--family {} needs --param", a.family));
  const double p[] = {*a.param};
  return make_state(f, a.d, p);
}

BasisSet choose_bases(const StateArgs& a) {
  if (!a.bases.empty()) {
    const BasisSetKind kind = parse_basis_set(a.bases);
    const BasisSet set = basis_set(kind, a.d);
    if (set.d != a.d) {
      throw DimensionError(fmt::format("basis set {} is for d = {}, not {}", a.bases, set.d, a.d));
    }
    return set;
  }
  const Family f = parse_family(a.family);
  if (a.d >= 3 && a.d <= 5) return basis_set(designated_set(f, a.d), a.d);
  return two_mub_set(a.d);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError(fmt::format("cannot open '{}'", path));
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw ParameterError(fmt::format("cannot write '{}'", path.string()));
  f << text;
}

// Diverse d = 4 Schmidt vectors with every coefficient bounded away from 0.
std::vector<std::vector<double>> scan_samples(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> u(0.05, 1.0);
  std::vector<std::vector<double>> out;
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<double> c(4);
    double norm = 0.0;
    for (auto& x : c) {
      x = u(gen);
      norm += x * x;
    }
    for (auto& x : c) x /= std::sqrt(norm);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entanglement certification from sums of Pearson correlation coefficients", "qpcc"};
  app.require_subcommand(1);

  StateArgs cert;
  auto* c_certify = app.add_subcommand("certify", "PCC sum, verdict and inferred Negativity as JSON");
  add_state_flags(c_certify, cert, true);
  add_config(c_certify);

  StateArgs sw;
  double sw_start = 0.0;
  double sw_stop = 1.0;
  std::size_t sw_steps = 21;
  bool sw_serial = false;
  std::string sw_output;
  auto* c_sweep = app.add_subcommand("sweep", "CSV of Negativity and PCC sum over a parameter grid");
  c_sweep->add_option("--family", sw.family)->required();
  c_sweep->add_option("--d", sw.d)->required()->check(CLI::Range(2, 8));
  c_sweep->add_option("--bases", sw.bases);
  auto* o_start = c_sweep->add_option("--start", sw_start, "default: lower end of the family's domain");
  auto* o_stop = c_sweep->add_option("--stop", sw_stop, "default: 1");
  c_sweep->add_option("--steps", sw_steps)->capture_default_str();
  c_sweep->add_flag("--serial", sw_serial, "single-threaded reference path");
  c_sweep->add_option("--output", sw_output, "write the CSV here instead of stdout");
  add_config(c_sweep);

  bool t1_json = false;
  auto* c_table1 = app.add_subcommand("table1", "Werner entanglement and certification thresholds");
  c_table1->add_flag("--json", t1_json);
  add_config(c_table1);

  int sc_resolution = 8;
  std::size_t sc_samples = 20;
  std::uint64_t sc_seed = 7;
  bool sc_serial = false;
  auto* c_scan = app.add_subcommand("scan-mubs", "search d = 4 MUB pairs for a linear PCC-Negativity relation");
  c_scan->add_option("--resolution", sc_resolution)->capture_default_str()->check(CLI::Range(8, 64));
  c_scan->add_option("--samples", sc_samples)->capture_default_str()->check(CLI::Range(3, 100000));
  c_scan->add_option("--seed", sc_seed)->capture_default_str();
  c_scan->add_flag("--serial", sc_serial);
  add_config(c_scan);

  StateArgs sa;
  std::uint64_t sa_shots = 100000;
  std::uint64_t sa_seed = 1;
  std::string sa_dir;
  auto* c_sample = app.add_subcommand("sample", "simulated counts, one CSV block per basis");
  add_state_flags(c_sample, sa, true);
  c_sample->add_option("--shots", sa_shots)->capture_default_str()->check(CLI::PositiveNumber);
  c_sample->add_option("--seed", sa_seed)->capture_default_str();
  c_sample->add_option("--output-dir", sa_dir, "also write <label>.csv and <label>.json per basis");
  add_config(c_sample);

  StateArgs st;
  std::string st_from;
  auto* c_state = app.add_subcommand("state", "density matrix as JSON");
  c_state->add_option("--family", st.family);
  c_state->add_option("--d", st.d)->check(CLI::Range(2, 8));
  c_state->add_option("--param", st.param);
  c_state->add_option("--coeffs", st.coeffs)->delimiter(',');
  c_state->add_option("--from", st_from, "re-read a dump written by this command");
  add_config(c_state);

  std::string cat_bases;
  std::size_t cat_d = 3;
  auto* c_catalog = app.add_subcommand("catalog", "basis catalog as JSON");
  c_catalog->add_option("--bases", cat_bases)->required();
  c_catalog->add_option("--d", cat_d, "only used by two-mub")->check(CLI::Range(2, 8));
  add_config(c_catalog);

  try {
    const std::vector<std::string> expanded = expand_config(app, args);
    std::vector<std::string> argv(expanded.rbegin(), expanded.rend());
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (c_certify->parsed()) {
      const DensityMatrix rho = build_state(cert);
      const CertificationReport r = certify(rho, choose_bases(cert));
      out << to_json(r).dump(2) << "\n";
      return r.certified ? kCertified : kNotCertified;
    }

    if (c_sweep->parsed()) {
      SweepSpec spec;
      spec.family = parse_family(sw.family);
      spec.d = sw.d;
      const ParamRange range = family_param_range(spec.family, spec.d);
      spec.start = o_start->count() > 0 ? sw_start : range.lo;
      spec.stop = o_stop->count() > 0 ? sw_stop : range.hi;
      spec.steps = sw_steps;
      spec.basisSetKind = choose_bases(sw).kind;
      const auto rows = sw_serial ? run_sweep_serial(spec) : run_sweep(spec);
      const std::string csv = sweep_to_csv(rows);
      if (sw_output.empty()) {
        out << csv;
      } else {
        write_file(sw_output, csv);
      }
      return 0;
    }

    if (c_table1->parsed()) {
      const auto table = werner_threshold_table();
      if (t1_json) {
        out << to_json(table).dump(2) << "\n";
        return 0;
      }
      out << fmt::format("{:>2}  {:>14}  {:>14}  {:>14}\n", "d", "entangled p >", "certified p >", "derived p >");
      for (const auto& row : table) {
        out << fmt::format("{:>2}  {:>14}  {:>14}  {:>14}\n", row.d, format_number(row.entangledAbove),
                           format_number(row.certifiedAbove), format_number(row.derivedCertifiedAbove));
      }
      return 0;
    }

    if (c_scan->parsed()) {
      const auto samples = scan_samples(sc_samples, sc_seed);
      const ScanReport r = sc_serial ? scan_d4_mubs_serial(samples, sc_resolution) : scan_d4_mubs(samples, sc_resolution);
      auto j = to_json(r);
      j["seed"] = sc_seed;
      out << j.dump(2) << "\n";
      return 0;
    }

    if (c_sample->parsed()) {
      const DensityMatrix rho = build_state(sa);
      const BasisSet set = choose_bases(sa);
      const SampledSet s = sample_basis_set(rho, set, sa_shots, sa_seed);
      for (std::size_t i = 0; i < s.counts.size(); ++i) {
        const auto& c = s.counts[i];
        out << fmt::format("# basis {} shots={} seed={} pcc={} stderr={}\n", c.basisLabelA, c.shots, c.seed,
                           format_number(s.estimates[i].estimate), format_number(s.estimates[i].standardError));
        out << counts_to_csv(c);
        if (!sa_dir.empty()) {
          std::string stem = c.basisLabelA;
          std::replace_if(stem.begin(), stem.end(), [](char ch) { return !std::isalnum(static_cast<unsigned char>(ch)); }, '_');
          const std::filesystem::path dir(sa_dir);
          std::filesystem::create_directories(dir);
          write_file(dir / fmt::format("{:02}_{}.csv", i, stem), counts_to_csv(c));
          write_file(dir / fmt::format("{:02}_{}.json", i, stem), counts_sidecar_json(c));
        }
      }
      out << fmt::format("# pcc_sum={} stderr={}\n", format_number(s.sum), format_number(s.sumStderr));
      return 0;
    }

    if (c_state->parsed()) {
      if (!st_from.empty()) {
        out << to_json(state_from_json(nlohmann::json::parse(slurp(st_from)))).dump(2) << "\n";
        return 0;
      }
      if (st.family.empty()) throw ParameterError("state needs --family or --from");
      out << to_json(build_state(st)).dump(2) << "\n";
      return 0;
    }

    if (c_catalog->parsed()) {
      out << to_json(basis_set(parse_basis_set(cat_bases), cat_d)).dump(2) << "\n";
      return 0;
    }
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const UnsupportedError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const RegimeError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "numeric error: " << e.what() << "\n";
    return kNumericError;
  }
  return kUsageError;
}

}  // namespace qpcc::cli
