// torusq: finite-dimensional canonical quantization on a torus phase space.
//
// Subcommands cover the full pipeline: spectra and moduli scans, closed-form
// characteristic polynomials checked against an independent oracle, vacuum
// and factorization analysis, classical trajectories and limit Hamiltonians,
// and duality certificates for pairs of moduli points.
//
// Exit codes: 0 success, 1 computational failure (e.g. --check --strict
// mismatch), 2 usage error. Data goes to --out (default stdout), diagnostics
// to stderr. Output is byte-deterministic for identical inputs.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "torusq/io.hpp"
#include "torusq/torusq.hpp"

namespace {

using torusq::Json;

void write_output(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw torusq::DomainError("cannot open output file: " + path);
  out << content;
}

Json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw torusq::DomainError("cannot open config file: " + path);
  Json cfg;
  in >> cfg;
  return cfg;
}

// --config supplies defaults for options not given on the command line
void apply_config(const Json& cfg, const char* key, const CLI::Option* opt, double& var) {
  if (opt->count() == 0 && cfg.contains(key)) var = cfg.at(key).get<double>();
}
void apply_config(const Json& cfg, const char* key, const CLI::Option* opt, int& var) {
  if (opt->count() == 0 && cfg.contains(key)) var = cfg.at(key).get<int>();
}
void apply_config(const Json& cfg, const char* key, const CLI::Option* opt, bool& var) {
  if (opt->count() == 0 && cfg.contains(key)) var = cfg.at(key).get<bool>();
}
void apply_config(const Json& cfg, const char* key, const CLI::Option* opt, std::string& var) {
  if (opt->count() == 0 && cfg.contains(key)) var = cfg.at(key).get<std::string>();
}
void apply_config(const Json& cfg, const char* key, const CLI::Option* opt,
                  std::vector<int>& var) {
  if (opt->count() == 0 && cfg.contains(key)) var = cfg.at(key).get<std::vector<int>>();
}

std::optional<int> dim_or_none(int dim) {
  return dim > 0 ? std::optional<int>(dim) : std::nullopt;
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

using torusq::format_real;

// ---- per-command document builders -----------------------------------------

std::string spectrum_csv(const torusq::Spectrumd& s) {
  std::string out = "k,E\n";
  for (int k = 0; k < s.size(); ++k)
    out += std::to_string(k) + ',' + format_real(s.eigenvalues[k]) + '\n';
  return out;
}

Json spectrum_json(const torusq::ModuliPointd& m, const torusq::Spectrumd& s) {
  Json j;
  j["schema_version"] = torusq::schema_version;
  j["moduli"] = torusq::to_json(m);
  j["n"] = s.size();
  j["eigenvalues"] = torusq::to_json(s.eigenvalues);
  j["E0"] = s.ground_energy();
  j["gap"] = s.gap();
  return j;
}

Json charpoly_json(const torusq::ModuliPointd& m, const torusq::Polynomiald& closed,
                   const torusq::Polynomiald* oracle,
                   const torusq::VerificationReport* check) {
  Json j;
  j["schema_version"] = torusq::schema_version;
  j["moduli"] = torusq::to_json(m);
  j["n"] = torusq::hilbert_dim(m);
  j["coefficients"] = closed.coefficients();
  if (oracle && check) {
    j["oracle_coefficients"] = oracle->coefficients();
    j["max_coeff_diff"] = check->max_coeff_diff;
    j["pass"] = check->pass;
  }
  return j;
}

std::string charpoly_csv(const torusq::Polynomiald& closed, const torusq::Polynomiald* oracle) {
  std::string out = oracle ? "degree,closed,oracle\n" : "degree,coefficient\n";
  for (int k = 0; k <= closed.degree(); ++k) {
    out += std::to_string(k) + ',' + format_real(closed[k]);
    if (oracle) out += ',' + format_real((*oracle)[k]);
    out += '\n';
  }
  return out;
}

std::string vacuum_csv(const torusq::ModuliPointd& m, const torusq::VacuumReportd& r) {
  std::string out = "beta,delta,n,E0,gap,nondegenerate,localization_index\n";
  out += format_real(m.beta()) + ',' + format_real(m.delta()) + ',' +
         std::to_string(static_cast<int>(r.eigenvalues.size())) + ',' +
         format_real(r.vacuum_energy) + ',' + format_real(r.gap) + ',' +
         bool_str(r.nondegenerate) + ',' + std::to_string(r.localization_index) + '\n';
  return out;
}

std::string pairing_csv(const torusq::PairingReportd& r) {
  std::string out = "index,energy,cluster\n";
  std::vector<int> cluster_of(r.energies.size(), 0);
  for (std::size_t c = 0; c < r.clusters.size(); ++c)
    for (int idx : r.clusters[c]) cluster_of[static_cast<std::size_t>(idx)] = static_cast<int>(c);
  for (std::size_t j = 0; j < r.energies.size(); ++j)
    out += std::to_string(j) + ',' + format_real(r.energies[j]) + ',' +
           std::to_string(cluster_of[j]) + '\n';
  return out;
}

std::string limits_csv(const torusq::ClassicalStated& s, const torusq::LimitEnergiesd& e) {
  std::string out = "q,p,H_full,H_sg,H_2\n";
  out += format_real(s.q) + ',' + format_real(s.p) + ',' + format_real(e.full) + ',' +
         format_real(e.sine_gordon) + ',' + format_real(e.harmonic) + '\n';
  return out;
}

std::string certificate_csv(const torusq::DualityCertificated& cert) {
  std::string out =
      "beta1,delta1,n1,beta2,delta2,n2,classically_canonical,spectra_equal,is_duality\n";
  out += format_real(cert.first.beta()) + ',' + format_real(cert.first.delta()) + ',' +
         std::to_string(torusq::hilbert_dim(cert.first)) + ',' +
         format_real(cert.second.beta()) + ',' + format_real(cert.second.delta()) + ',' +
         std::to_string(torusq::hilbert_dim(cert.second)) + ',' +
         bool_str(cert.classically_canonical) + ',' + bool_str(cert.spectra_equal) + ',' +
         bool_str(cert.is_duality) + '\n';
  return out;
}

std::string trajectory_json(const torusq::ModuliPointd& m, const torusq::Trajectoryd& traj) {
  Json j;
  j["schema_version"] = torusq::schema_version;
  j["moduli"] = torusq::to_json(m);
  j["dt"] = traj.dt;
  j["method"] = traj.method;
  Json samples = Json::array();
  for (const auto& s : traj.samples)
    samples.push_back(Json::array({s.t, s.q, s.p, s.energy}));
  j["samples"] = samples;
  return dump(j);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"canonical quantization on a torus phase space"};
  app.require_subcommand(1);

  // shared option storage; each subcommand registers the subset it uses
  // required values start as NaN so a --config file may supply them
  const double unset = std::numeric_limits<double>::quiet_NaN();
  double beta = unset, delta = 0, delta2 = unset;
  double beta2 = unset;  // "same as --beta"
  double q0 = 0, p0 = 0, total_time = unset, dt = 1e-3;
  int dim = 0, dim2 = -1, delta_steps = 64;  // dim2 = -1: "same as --dim"
  bool check = false, strict = false, kinetic_off = false;
  std::vector<int> n_list;
  std::string out_path = "-", format, config_path;

  struct Registered {
    CLI::Option* beta = nullptr;
    CLI::Option* delta = nullptr;
    CLI::Option* dim = nullptr;
    CLI::Option* out = nullptr;
    CLI::Option* format = nullptr;
    CLI::Option* check = nullptr;
    CLI::Option* strict = nullptr;
    CLI::Option* kinetic_off = nullptr;
    CLI::Option* n_list = nullptr;
    CLI::Option* q0 = nullptr;
    CLI::Option* p0 = nullptr;
    CLI::Option* t = nullptr;
    CLI::Option* dt = nullptr;
    CLI::Option* delta_steps = nullptr;
    CLI::Option* delta2 = nullptr;
    CLI::Option* beta2 = nullptr;
    CLI::Option* dim2 = nullptr;
  };
  std::map<std::string, Registered> reg;

  auto add_common = [&](CLI::App* cmd) {
    auto& r = reg[cmd->get_name()];
    r.beta = cmd->add_option("--beta", beta, "axis-length ratio (modulus of tau), required");
    r.delta = cmd->add_option("--delta", delta, "phase offset in radians (argument of tau)");
    r.dim = cmd->add_option("--dim", dim, "explicit Hilbert dimension override");
    r.out = cmd->add_option("--out", out_path, "output path, '-' for stdout");
    r.format = cmd->add_option("--format", format, "csv or json")
                   ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--config", config_path, "JSON file with defaults for these flags");
  };

  CLI::App* c_spectrum = app.add_subcommand("spectrum", "eigenvalues of the quantum Hamiltonian");
  add_common(c_spectrum);

  CLI::App* c_charpoly =
      app.add_subcommand("charpoly", "closed-form characteristic polynomial");
  add_common(c_charpoly);
  reg["charpoly"].check =
      c_charpoly->add_flag("--check", check, "compare against the Faddeev-LeVerrier oracle");
  reg["charpoly"].strict =
      c_charpoly->add_flag("--strict", strict, "exit 1 if the --check comparison fails");

  CLI::App* c_vacuum = app.add_subcommand("vacuum", "ground-state report");
  add_common(c_vacuum);
  reg["vacuum"].kinetic_off = c_vacuum->add_flag(
      "--kinetic-off", kinetic_off, "degeneracy pairing of the bare potential (delta = 0)");

  CLI::App* c_factorize =
      app.add_subcommand("factorize", "corner-block factorization study");
  add_common(c_factorize);
  reg["factorize"].n_list = c_factorize->add_option("--n-list", n_list,
                                                    "comma-separated dimensions to sweep")
                                ->delimiter(',');

  CLI::App* c_classical = app.add_subcommand("classical", "symplectic trajectory");
  add_common(c_classical);
  reg["classical"].q0 = c_classical->add_option("--q0", q0, "initial position");
  reg["classical"].p0 = c_classical->add_option("--p0", p0, "initial momentum");
  reg["classical"].t = c_classical->add_option("--t", total_time, "total time, required");
  reg["classical"].dt = c_classical->add_option("--dt", dt, "time step (default 1e-3)");

  CLI::App* c_limits =
      app.add_subcommand("limits", "torus vs sine-Gordon vs harmonic energies");
  reg["limits"].q0 = c_limits->add_option("--q0", q0, "position");
  reg["limits"].p0 = c_limits->add_option("--p0", p0, "momentum");
  reg["limits"].out = c_limits->add_option("--out", out_path, "output path, '-' for stdout");
  reg["limits"].format = c_limits->add_option("--format", format, "csv or json")
                             ->check(CLI::IsMember({"csv", "json"}));
  c_limits->add_option("--config", config_path, "JSON file with defaults for these flags");

  CLI::App* c_scan = app.add_subcommand("scan", "spectra over a delta grid");
  add_common(c_scan);
  reg["scan"].delta_steps =
      c_scan->add_option("--delta-steps", delta_steps, "grid points over [0, 2*pi)");

  CLI::App* c_certify = app.add_subcommand("certify", "duality certificate for two moduli");
  add_common(c_certify);
  reg["certify"].delta2 =
      c_certify->add_option("--delta2", delta2, "second phase offset, required");
  reg["certify"].beta2 = c_certify->add_option("--beta2", beta2, "second beta (default --beta)");
  reg["certify"].dim2 = c_certify->add_option("--dim2", dim2, "second dimension override");

  try {
    app.parse(argc, argv);

    CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    const Registered& r = reg[name];

    if (!config_path.empty()) {
      const Json cfg = load_config(config_path);
      if (r.beta) apply_config(cfg, "beta", r.beta, beta);
      if (r.delta) apply_config(cfg, "delta", r.delta, delta);
      if (r.dim) apply_config(cfg, "dim", r.dim, dim);
      if (r.out) apply_config(cfg, "out", r.out, out_path);
      if (r.format) apply_config(cfg, "format", r.format, format);
      if (r.check) apply_config(cfg, "check", r.check, check);
      if (r.strict) apply_config(cfg, "strict", r.strict, strict);
      if (r.kinetic_off) apply_config(cfg, "kinetic-off", r.kinetic_off, kinetic_off);
      if (r.n_list) apply_config(cfg, "n-list", r.n_list, n_list);
      if (r.q0) apply_config(cfg, "q0", r.q0, q0);
      if (r.p0) apply_config(cfg, "p0", r.p0, p0);
      if (r.t) apply_config(cfg, "t", r.t, total_time);
      if (r.dt) apply_config(cfg, "dt", r.dt, dt);
      if (r.delta_steps) apply_config(cfg, "delta-steps", r.delta_steps, delta_steps);
      if (r.delta2) apply_config(cfg, "delta2", r.delta2, delta2);
      if (r.beta2) apply_config(cfg, "beta2", r.beta2, beta2);
      if (r.dim2) apply_config(cfg, "dim2", r.dim2, dim2);
    }

    if (name != "limits" && std::isnan(beta))
      throw torusq::DomainError("--beta is required (flag or config) and must be finite");
    if (name == "classical" && std::isnan(total_time))
      throw torusq::DomainError("--t is required (flag or config) and must be finite");
    if (name == "certify" && std::isnan(delta2))
      throw torusq::DomainError("--delta2 is required (flag or config) and must be finite");

    const bool csv = format.empty() ? (name == "spectrum" || name == "scan" ||
                                       name == "classical" || name == "limits")
                                    : format == "csv";

    if (name == "spectrum") {
      const auto m = torusq::make_moduli(beta, delta, dim_or_none(dim));
      const auto s = torusq::eigh(torusq::build_hamiltonian(m));
      write_output(out_path, csv ? spectrum_csv(s) : dump(spectrum_json(m, s)));
    } else if (name == "charpoly") {
      const auto m = torusq::make_moduli(beta, delta, dim_or_none(dim));
      const auto closed = torusq::charpoly_closed(m);
      std::optional<torusq::Polynomiald> oracle;
      std::optional<torusq::VerificationReport> report;
      if (check) {
        oracle = torusq::charpoly_oracle(torusq::build_hamiltonian(m));
        report = torusq::verify_charpoly(m);
      }
      write_output(out_path,
                   csv ? charpoly_csv(closed, oracle ? &*oracle : nullptr)
                       : dump(charpoly_json(m, closed, oracle ? &*oracle : nullptr,
                                            report ? &*report : nullptr)));
      if (check && strict && !report->pass) {
        std::cerr << "charpoly check failed: max coefficient difference "
                  << format_real(report->max_coeff_diff) << "\n";
        return 1;
      }
    } else if (name == "vacuum") {
      const auto m = torusq::make_moduli(beta, delta, dim_or_none(dim));
      if (kinetic_off) {
        const auto r = torusq::degeneracy_pairing(m, true);
        write_output(out_path, csv ? pairing_csv(r) : dump(torusq::to_json(m, r)));
      } else {
        const auto r = torusq::vacuum_report(m);
        write_output(out_path, csv ? vacuum_csv(m, r) : dump(torusq::to_json(m, r)));
      }
    } else if (name == "factorize") {
      std::vector<int> dims = n_list;
      if (dims.empty() && dim > 0) dims.push_back(dim);
      if (dims.empty())
        throw torusq::DomainError("factorize needs --dim or --n-list");
      std::string table = "beta,delta,n,defect,corner_energy,corner_vs_full\n";
      Json rows = Json::array();
      for (int n : dims) {
        const auto m = torusq::make_moduli(beta, delta, n);
        const auto rep = torusq::factorization_defect(m);
        rows.push_back(torusq::to_json(m, rep));
        table += format_real(m.beta()) + ',' + format_real(m.delta()) + ',' +
                 std::to_string(n) + ',' + format_real(rep.defect) + ',' +
                 format_real(rep.corner_energy) + ',' + format_real(rep.corner_vs_full) + '\n';
      }
      Json j;
      j["schema_version"] = torusq::schema_version;
      j["beta"] = beta;
      j["delta"] = delta;
      j["rows"] = rows;
      write_output(out_path, csv ? table : dump(j));
    } else if (name == "classical") {
      const auto m = torusq::make_moduli(beta, delta, dim_or_none(dim));
      const auto traj =
          torusq::flow(torusq::ClassicalStated(q0, p0), m, total_time, dt);
      write_output(out_path,
                   csv ? torusq::trajectory_to_csv(traj) : trajectory_json(m, traj));
    } else if (name == "limits") {
      const torusq::ClassicalStated s(q0, p0);
      const auto e = torusq::limit_energies(s);
      if (csv) {
        write_output(out_path, limits_csv(s, e));
      } else {
        Json j;
        j["schema_version"] = torusq::schema_version;
        j["q"] = s.q;
        j["p"] = s.p;
        j["H_full"] = e.full;
        j["H_sg"] = e.sine_gordon;
        j["H_2"] = e.harmonic;
        write_output(out_path, dump(j));
      }
    } else if (name == "scan") {
      if (delta_steps < 1) throw torusq::DomainError("scan needs --delta-steps >= 1");
      std::vector<double> deltas(static_cast<std::size_t>(delta_steps));
      for (int k = 0; k < delta_steps; ++k)
        deltas[static_cast<std::size_t>(k)] = 2 * torusq::pi * k / delta_steps;
      const auto report = torusq::moduli_scan(beta, deltas, dim_or_none(dim));
      if (csv) {
        write_output(out_path, torusq::scan_to_csv(report));
      } else {
        Json rows = Json::array();
        for (const auto& row : report.rows) rows.push_back(torusq::to_json(row));
        Json j;
        j["schema_version"] = torusq::schema_version;
        j["rows"] = rows;
        write_output(out_path, dump(j));
      }
    } else if (name == "certify") {
      const auto m1 = torusq::make_moduli(beta, delta, dim_or_none(dim));
      const double b2 = std::isnan(beta2) ? beta : beta2;
      const int d2 = dim2 < 0 ? dim : dim2;
      const auto m2 = torusq::make_moduli(b2, delta2, dim_or_none(d2));
      const auto cert = torusq::duality_certificate(m1, m2);
      write_output(out_path, csv ? certificate_csv(cert) : dump(torusq::to_json(cert)));
    }
    return 0;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const torusq::DomainError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const torusq::DimensionMismatch& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const torusq::ConvergenceError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
