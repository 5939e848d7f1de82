#include "qkt/csvio.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "qkt/errors.hpp"

namespace qkt {

std::string format_sig12(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.11e", v);
  return buf;
}

std::string trajectory_csv(const std::vector<TrajectoryRecord>& traj) {
  std::string out =
      "kick,jx,jy,jz,fid_A,fid_Ap,corr_A,corr_Ap,corr_E,corr_Ep,purity\n";
  for (const TrajectoryRecord& r : traj) {
    out += std::to_string(r.kick);
    for (double v : {r.jx, r.jy, r.jz, r.fid_A, r.fid_Ap, r.corr_A, r.corr_Ap,
                     r.corr_E, r.corr_Ep, r.purity}) {
      out += ',';
      out += format_sig12(v);
    }
    out += '\n';
  }
  return out;
}

namespace {

const char* representation_name(Representation rep) {
  return rep == Representation::spin_j ? "spin_j" : "multiqubit";
}

}  // namespace

std::string trajectory_json(const RunConfig& config,
                            const std::vector<TrajectoryRecord>& traj) {
  std::string out = "{\n  \"config\": {";
  out += "\"representation\": \"";
  out += representation_name(config.representation);
  out += "\", \"two_j\": " + std::to_string(config.two_j);
  out += ", \"k\": " + format_sig12(config.k);
  out += ", \"theta\": " + format_sig12(config.initial.theta);
  out += ", \"phi\": " + format_sig12(config.initial.phi);
  out += ", \"kicks\": " + std::to_string(config.n_kicks);
  out += ", \"epsilon\": " + format_sig12(config.epsilon);
  if (config.noise) {
    out += ", \"noise_model\": \"";
    out += config.noise->model == DephasingModel::per_qubit
               ? "per_qubit"
               : "coherence_order";
    out += "\", \"noise_strength\": " + format_sig12(config.noise->strength);
  }
  out += "},\n  \"trajectory\": [\n";
  for (std::size_t i = 0; i < traj.size(); ++i) {
    const TrajectoryRecord& r = traj[i];
    out += "    {\"kick\": " + std::to_string(r.kick);
    out += ", \"jx\": " + format_sig12(r.jx);
    out += ", \"jy\": " + format_sig12(r.jy);
    out += ", \"jz\": " + format_sig12(r.jz);
    out += ", \"fid_A\": " + format_sig12(r.fid_A);
    out += ", \"fid_Ap\": " + format_sig12(r.fid_Ap);
    out += ", \"corr_A\": " + format_sig12(r.corr_A);
    out += ", \"corr_Ap\": " + format_sig12(r.corr_Ap);
    out += ", \"corr_E\": " + format_sig12(r.corr_E);
    out += ", \"corr_Ep\": " + format_sig12(r.corr_Ep);
    out += ", \"purity\": " + format_sig12(r.purity);
    out += i + 1 < traj.size() ? "},\n" : "}\n";
  }
  out += "  ]\n}\n";
  return out;
}

std::string portrait_csv(const PhasePortrait& portrait) {
  std::string out = "traj_id,iter,theta,phi\n";
  for (const PhasePortrait::Point& p : portrait.points) {
    out += std::to_string(p.traj_id);
    out += ',';
    out += std::to_string(p.iter);
    out += ',';
    out += format_sig12(p.theta);
    out += ',';
    out += format_sig12(p.phi);
    out += '\n';
  }
  return out;
}

std::string spectrum_csv(const Spectrum& s) {
  std::string out = "freq,amplitude\n";
  for (std::size_t i = 0; i < s.frequency.size(); ++i) {
    out += format_sig12(s.frequency[i]);
    out += ',';
    out += format_sig12(s.amplitude[i]);
    out += '\n';
  }
  return out;
}

void write_file(const std::filesystem::path& path, const std::string& body) {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    throw UsageError("cannot open output file: " + path.string());
  }
  f << body;
}

std::vector<double> CsvTable::column(const std::string& name) const {
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c] == name) {
      std::vector<double> out;
      out.reserve(rows.size());
      for (const auto& row : rows) out.push_back(row[c]);
      return out;
    }
  }
  std::string known;
  for (const auto& c : columns) {
    if (!known.empty()) known += ", ";
    known += c;
  }
  throw UsageError("column '" + name + "' not found; available: " + known);
}

CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) {
    throw UsageError("cannot open input file: " + path.string());
  }
  CsvTable table;
  std::string line;
  if (!std::getline(f, line)) {
    throw UsageError("empty CSV file: " + path.string());
  }
  std::stringstream header(line);
  std::string cell;
  while (std::getline(header, cell, ',')) table.columns.push_back(cell);

  while (std::getline(f, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::vector<double> row;
    while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
    if (row.size() != table.columns.size()) {
      throw UsageError("ragged CSV row in " + path.string());
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace qkt
