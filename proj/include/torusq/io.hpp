#pragma once

#include <json.hpp>

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "torusq/charpoly.hpp"
#include "torusq/classical.hpp"
#include "torusq/duality.hpp"
#include "torusq/moduli.hpp"
#include "torusq/types.hpp"
#include "torusq/vacuum.hpp"

namespace torusq {

using Json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;

// ---- ModuliPoint <-> flat {"beta", "delta", "dim"} record ------------------

inline Json to_json(const ModuliPointd& m) {
  Json j;
  j["beta"] = m.beta();
  j["delta"] = m.delta();
  j["dim"] = m.dim_override() ? Json(*m.dim_override()) : Json(nullptr);
  return j;
}

inline ModuliPointd moduli_from_json(const Json& j) {
  std::optional<int> dim;
  if (j.contains("dim") && !j.at("dim").is_null()) dim = j.at("dim").get<int>();
  return ModuliPointd(j.at("beta").get<double>(), j.at("delta").get<double>(), dim);
}

// ---- complex matrices as row-major (re, im) pair lists ---------------------

inline Json to_json(const MatrixCd& a) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    for (Eigen::Index c = 0; c < a.cols(); ++c)
      rows.push_back(Json::array({a(r, c).real(), a(r, c).imag()}));
  return rows;
}

inline MatrixCd matrix_from_json(const Json& j, Eigen::Index rows, Eigen::Index cols) {
  if (static_cast<Eigen::Index>(j.size()) != rows * cols)
    throw DimensionMismatch("matrix entry count does not match its shape");
  MatrixCd a(rows, cols);
  Eigen::Index k = 0;
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < cols; ++c, ++k)
      a(r, c) = {j[k][0].get<double>(), j[k][1].get<double>()};
  return a;
}

inline Json to_json(const VectorRd& v) {
  Json arr = Json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) arr.push_back(v[k]);
  return arr;
}

inline VectorRd real_vector_from_json(const Json& j) {
  VectorRd v(static_cast<Eigen::Index>(j.size()));
  for (Eigen::Index k = 0; k < v.size(); ++k) v[k] = j[k].get<double>();
  return v;
}

// ---- reports ----------------------------------------------------------------

inline Json to_json(const ModuliPointd& m, const VacuumReportd& r) {
  Json j;
  j["schema_version"] = schema_version;
  j["moduli"] = to_json(m);
  j["n"] = static_cast<int>(r.eigenvalues.size());
  j["vacuum_energy"] = r.vacuum_energy;
  j["gap"] = r.gap;
  j["nondegenerate"] = r.nondegenerate;
  j["localization_index"] = r.localization_index;
  j["vacuum_vector"] = to_json(MatrixCd(r.vacuum_vector));
  j["eigenvalues"] = to_json(r.eigenvalues);
  return j;
}

inline VacuumReportd vacuum_from_json(const Json& j) {
  VacuumReportd r;
  r.vacuum_energy = j.at("vacuum_energy").get<double>();
  r.gap = j.at("gap").get<double>();
  r.nondegenerate = j.at("nondegenerate").get<bool>();
  r.localization_index = j.at("localization_index").get<int>();
  const auto n = j.at("n").get<Eigen::Index>();
  r.vacuum_vector = matrix_from_json(j.at("vacuum_vector"), n, 1);
  r.eigenvalues = real_vector_from_json(j.at("eigenvalues"));
  return r;
}

inline Json to_json(const ModuliPointd& m, const FactorizationReportd& r) {
  Json j;
  j["n"] = hilbert_dim(m);
  j["defect"] = r.defect;
  j["corner_energy"] = r.corner_energy;
  j["corner_vs_full"] = r.corner_vs_full;
  return j;
}

inline Json to_json(const ModuliPointd& m, const PairingReportd& r) {
  Json j;
  j["schema_version"] = schema_version;
  j["moduli"] = to_json(m);
  j["kinetic_off"] = r.kinetic_off;
  j["energies"] = r.energies;
  j["clusters"] = r.clusters;
  Json pairs = Json::array();
  for (const auto& [a, b] : degenerate_pairs(r)) pairs.push_back(Json::array({a, b}));
  j["pairs"] = pairs;
  j["singletons"] = unpaired_states(r);
  return j;
}

inline Json to_json(const DualityCertificated& cert) {
  Json j;
  j["schema_version"] = schema_version;
  j["first"] = to_json(cert.first);
  j["second"] = to_json(cert.second);
  j["classically_canonical"] = cert.classically_canonical;
  j["spectra_equal"] = cert.spectra_equal;
  j["is_duality"] = cert.is_duality;
  return j;
}

inline DualityCertificated certificate_from_json(const Json& j) {
  DualityCertificated cert{moduli_from_json(j.at("first")), moduli_from_json(j.at("second")),
                           j.at("classically_canonical").get<bool>(),
                           j.at("spectra_equal").get<bool>(), j.at("is_duality").get<bool>()};
  return cert;
}

inline Json to_json(const ScanRowd& row) {
  Json j;
  j["beta"] = row.beta;
  j["delta"] = row.delta;
  j["n"] = row.n;
  j["E0"] = row.vacuum_energy;
  j["gap"] = row.gap;
  j["eigenvalues"] = to_json(row.eigenvalues);
  return j;
}

// ---- CSV --------------------------------------------------------------------

/// Scan table: beta,delta,n,E0,gap,E_1..E_n with the variable-width tail
/// described in a leading comment line.
inline std::string scan_to_csv(const ScanReportd& report) {
  std::ostringstream out;
  out << "# columns: beta,delta,n,E0,gap,E_1..E_n (tail width = n)\n";
  out << "beta,delta,n,E0,gap";
  const int n = report.rows.empty() ? 0 : report.rows.front().n;
  for (int k = 1; k <= n; ++k) out << ",E_" << k;
  out << "\n";
  for (const auto& row : report.rows) {
    out << format_real(row.beta) << ',' << format_real(row.delta) << ',' << row.n << ','
        << format_real(row.vacuum_energy) << ',' << format_real(row.gap);
    for (Eigen::Index k = 0; k < row.eigenvalues.size(); ++k)
      out << ',' << format_real(row.eigenvalues[k]);
    out << "\n";
  }
  return out.str();
}

/// Trajectory table: t,q,p,H at full double precision.
inline std::string trajectory_to_csv(const Trajectoryd& traj) {
  std::ostringstream out;
  out << "t,q,p,H\n";
  for (const auto& s : traj.samples)
    out << format_real(s.t) << ',' << format_real(s.q) << ',' << format_real(s.p) << ','
        << format_real(s.energy) << "\n";
  return out.str();
}

}  // namespace torusq
