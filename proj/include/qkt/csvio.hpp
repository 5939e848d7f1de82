#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "qkt/classical.hpp"
#include "qkt/observables.hpp"
#include "qkt/trajectory.hpp"

namespace qkt {

/// 12 significant digits, scientific notation, '.' decimal separator.
/// All file output goes through this so repeat runs are byte-identical.
std::string format_sig12(double v);

std::string trajectory_csv(const std::vector<TrajectoryRecord>& traj);
std::string trajectory_json(const RunConfig& config,
                            const std::vector<TrajectoryRecord>& traj);
std::string portrait_csv(const PhasePortrait& portrait);
std::string spectrum_csv(const Spectrum& s);

void write_file(const std::filesystem::path& path, const std::string& body);

struct CsvTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  /// Column values by header name; throws UsageError if absent.
  std::vector<double> column(const std::string& name) const;
};

CsvTable read_csv(const std::filesystem::path& path);

}  // namespace qkt
