// Command-line front end: single runs, parameter sweeps, classical phase
// portraits and spectrum analysis, all writing deterministic CSV/JSON.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qkt/csvio.hpp"
#include "qkt/errors.hpp"
#include "qkt/trajectory.hpp"

namespace {

using json = nlohmann::json;

constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitResource = 4;

struct RunFlags {
  std::string rep = "spin_j";
  int two_j = 2;
  double k = 3.0;
  std::string initial = "A";
  double theta = std::numeric_limits<double>::quiet_NaN();
  double phi = std::numeric_limits<double>::quiet_NaN();
  int kicks = 25;
  std::string noise_model;
  double noise_strength = 0.0;
  double epsilon = 1.0;
  std::string corr_mode = "state_overlap";
  std::string out = "qkt_run.csv";
  std::string format = "csv";
};

// --config FILE supplies defaults for the flags below; explicit flags win.
// The file is a flat JSON object keyed by long flag names.
json load_config_json(int argc, char** argv) {
  std::string path;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--config" && i + 1 < argc) {
      path = argv[i + 1];
    } else if (arg.rfind("--config=", 0) == 0) {
      path = arg.substr(9);
    }
  }
  if (path.empty()) return json::object();
  std::ifstream f(path);
  if (!f) throw qkt::UsageError("cannot open config file: " + path);
  json cfg;
  try {
    f >> cfg;
  } catch (const json::parse_error& e) {
    throw qkt::UsageError("config file is not valid JSON: " +
                          std::string(e.what()));
  }
  if (!cfg.is_object()) throw qkt::UsageError("config file must be an object");
  return cfg;
}

template <typename T>
void from_config(const json& cfg, const char* key, T& value) {
  if (cfg.contains(key)) value = cfg.at(key).get<T>();
}

qkt::SphericalCoord resolve_initial(const RunFlags& f) {
  const bool has_theta = !std::isnan(f.theta);
  const bool has_phi = !std::isnan(f.phi);
  if (has_theta != has_phi) {
    throw qkt::UsageError("--theta and --phi must be given together");
  }
  if (has_theta) return {f.theta, f.phi};
  const auto p = qkt::parse_named_point(f.initial);
  if (!p) {
    throw qkt::UsageError("unknown initial state '" + f.initial +
                          "' (expected A, Ap, B, C, E or Ep, "
                          "or explicit --theta/--phi)");
  }
  return qkt::named_point_coord(*p);
}

qkt::RunConfig to_run_config(const RunFlags& f) {
  qkt::RunConfig cfg;
  if (f.rep == "spin_j") {
    cfg.representation = qkt::Representation::spin_j;
  } else if (f.rep == "multiqubit") {
    cfg.representation = qkt::Representation::multiqubit;
  } else {
    throw qkt::UsageError("--rep must be spin_j or multiqubit");
  }
  cfg.two_j = f.two_j;
  cfg.k = f.k;
  cfg.initial = resolve_initial(f);
  cfg.n_kicks = f.kicks;
  cfg.epsilon = f.epsilon;
  if (!f.noise_model.empty()) {
    qkt::DephasingSpec spec;
    if (f.noise_model == "coherence_order") {
      spec.model = qkt::DephasingModel::coherence_order;
    } else if (f.noise_model == "per_qubit") {
      spec.model = qkt::DephasingModel::per_qubit;
    } else {
      throw qkt::UsageError(
          "--noise-model must be coherence_order or per_qubit");
    }
    spec.strength = f.noise_strength;
    cfg.noise = spec;
  }
  if (f.corr_mode == "state_overlap") {
    cfg.corr_mode = qkt::CorrelationMode::state_overlap;
  } else if (f.corr_mode == "vector") {
    cfg.corr_mode = qkt::CorrelationMode::vector;
  } else {
    throw qkt::UsageError("--corr-mode must be state_overlap or vector");
  }
  return cfg;
}

void add_run_flags(CLI::App* cmd, RunFlags& f) {
  cmd->add_option("--rep", f.rep, "representation: spin_j or multiqubit");
  cmd->add_option("--two-j", f.two_j, "spin size as the integer 2j");
  cmd->add_option("--k", f.k, "chaoticity parameter");
  cmd->add_option("--initial", f.initial,
                  "named initial state: A, Ap, B, C, E, Ep");
  cmd->add_option("--theta", f.theta, "explicit initial theta (with --phi)");
  cmd->add_option("--phi", f.phi, "explicit initial phi (with --theta)");
  cmd->add_option("--kicks", f.kicks, "number of kicks");
  cmd->add_option("--noise-model", f.noise_model,
                  "dephasing model: coherence_order or per_qubit");
  cmd->add_option("--noise-strength", f.noise_strength,
                  "lambda (coherence_order) or p (per_qubit)");
  cmd->add_option("--epsilon", f.epsilon, "pseudo-pure purity factor");
  cmd->add_option("--corr-mode", f.corr_mode,
                  "correlation mode: state_overlap or vector");
}

std::vector<double> parse_values(const std::string& text) {
  // "1,2,3" or "lo:hi[:step]" (inclusive)
  std::vector<double> out;
  if (text.find(':') != std::string::npos) {
    double lo = 0, hi = 0, step = 1;
    const int got =
        std::sscanf(text.c_str(), "%lf:%lf:%lf", &lo, &hi, &step);
    if (got < 2 || step <= 0) {
      throw qkt::UsageError("bad range '" + text + "' (want lo:hi[:step])");
    }
    for (double v = lo; v <= hi + 1e-12; v += step) out.push_back(v);
  } else {
    std::size_t pos = 0;
    while (pos < text.size()) {
      std::size_t next = text.find(',', pos);
      if (next == std::string::npos) next = text.size();
      try {
        out.push_back(std::stod(text.substr(pos, next - pos)));
      } catch (const std::exception&) {
        throw qkt::UsageError("bad value list '" + text + "'");
      }
      pos = next + 1;
    }
  }
  if (out.empty()) throw qkt::UsageError("empty value list");
  return out;
}

std::string value_tag(double v) {
  // filename-safe tag: integers stay integers, otherwise %g with p for '.'
  char buf[32];
  if (std::abs(v - std::lround(v)) < 1e-9) {
    std::snprintf(buf, sizeof(buf), "%ld", std::lround(v));
  } else {
    std::snprintf(buf, sizeof(buf), "%g", v);
    for (char* c = buf; *c; ++c) {
      if (*c == '.') *c = 'p';
    }
  }
  return buf;
}

int cmd_run(const RunFlags& flags) {
  const qkt::RunConfig cfg = to_run_config(flags);
  const auto traj = qkt::simulate(cfg);

  if (flags.format == "csv") {
    qkt::write_file(flags.out, qkt::trajectory_csv(traj));
  } else if (flags.format == "json") {
    qkt::write_file(flags.out, qkt::trajectory_json(cfg, traj));
  } else {
    throw qkt::UsageError("--format must be csv or json");
  }

  std::cout << "wrote " << flags.out << " (" << traj.size() << " records)\n";
  if (traj.size() >= 8) {
    const qkt::PeriodEstimate pe = qkt::tunneling_period(traj, 'z');
    if (pe.aperiodic) {
      std::cout << "jz series: aperiodic\n";
    } else {
      std::cout << "jz series: period " << qkt::format_sig12(pe.period_kicks)
                << " kicks (peak " << qkt::format_sig12(pe.peak_frequency)
                << " cycles/kick)\n";
    }
  }
  return 0;
}

int cmd_sweep(const RunFlags& flags, const std::string& axis,
              const std::string& values_text, const std::string& mode,
              int parallelism, const std::string& out_prefix,
              const std::string& component) {
  qkt::SweepConfig cfg;
  cfg.base = to_run_config(flags);
  cfg.values = parse_values(values_text);
  cfg.parallelism = parallelism;
  if (axis == "two_j") {
    cfg.axis = qkt::SweepAxis::two_j;
  } else if (axis == "k") {
    cfg.axis = qkt::SweepAxis::k;
  } else if (axis == "noise_strength") {
    cfg.axis = qkt::SweepAxis::noise_strength;
  } else {
    throw qkt::UsageError("--axis must be two_j, k or noise_strength");
  }
  if (mode == "trajectory") {
    cfg.mode = qkt::SweepMode::trajectory;
  } else if (mode == "overlap") {
    cfg.mode = qkt::SweepMode::overlap;
    if (axis != "two_j") {
      throw qkt::UsageError("overlap sweeps scan two_j");
    }
  } else {
    throw qkt::UsageError("--mode must be trajectory or overlap");
  }
  if (component.size() != 1 ||
      (component[0] != 'x' && component[0] != 'z')) {
    throw qkt::UsageError("--component must be x or z");
  }
  cfg.component = component[0];

  const auto points = qkt::run_sweep(cfg);

  std::string summary;
  bool any_failed = false;
  if (cfg.mode == qkt::SweepMode::overlap) {
    summary = "two_j,overlap_AAp\n";
    for (const auto& pt : points) {
      if (pt.failed) {
        any_failed = true;
        std::cerr << "point " << pt.value << " failed: " << pt.error << "\n";
        continue;
      }
      summary += std::to_string(static_cast<long>(std::lround(pt.value)));
      summary += ',';
      summary += qkt::format_sig12(pt.overlap_AAp);
      summary += '\n';
    }
  } else {
    summary = "value,period_kicks,max_fid_Ap,aperiodic_flag\n";
    for (const auto& pt : points) {
      if (pt.failed) {
        any_failed = true;
        std::cerr << "point " << pt.value << " failed: " << pt.error << "\n";
        summary += qkt::format_sig12(pt.value) + ",nan,nan,error\n";
        continue;
      }
      const std::filesystem::path traj_path =
          out_prefix + "_" + value_tag(pt.value) + ".csv";
      qkt::write_file(traj_path, qkt::trajectory_csv(pt.trajectory));
      summary += qkt::format_sig12(pt.value);
      summary += ',';
      summary += qkt::format_sig12(pt.period.period_kicks);
      summary += ',';
      summary += qkt::format_sig12(pt.max_fid_Ap);
      summary += ',';
      summary += pt.period.aperiodic ? "1" : "0";
      summary += '\n';
    }
  }
  const std::filesystem::path summary_path = out_prefix + "_summary.csv";
  qkt::write_file(summary_path, summary);
  std::cout << "wrote " << summary_path.string() << " (" << points.size()
            << " points)\n";
  return any_failed ? 1 : 0;
}

int cmd_portrait(double k, int grid, int iters, const std::string& out) {
  const qkt::PhasePortrait portrait = qkt::generate_portrait(k, grid, iters);
  qkt::write_file(out, qkt::portrait_csv(portrait));
  std::cout << "wrote " << out << " (" << portrait.points.size()
            << " points)\n";
  return 0;
}

int cmd_spectrum(const std::string& in, const std::string& column,
                 const std::string& out, int pad, const std::string& window) {
  qkt::SpectrumWindow w;
  if (window == "none") {
    w = qkt::SpectrumWindow::none;
  } else if (window == "hann") {
    w = qkt::SpectrumWindow::hann;
  } else {
    throw qkt::UsageError("--window must be none or hann");
  }
  const qkt::CsvTable table = qkt::read_csv(in);
  const std::vector<double> series = table.column(column);
  const qkt::Spectrum spec = qkt::spectrum(series, pad, w);
  qkt::write_file(out, qkt::spectrum_csv(spec));

  const qkt::PeriodEstimate pe = qkt::estimate_period(series, pad);
  std::cout << "wrote " << out << "\n";
  std::cout << "peak frequency " << qkt::format_sig12(spec.peak_frequency)
            << " cycles/kick, period " << qkt::format_sig12(spec.period_kicks)
            << " kicks" << (pe.aperiodic ? " (aperiodic)" : "") << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum kicked top simulator"};
  app.require_subcommand(1);

  std::string config_path;  // consumed here; values applied as defaults below

  RunFlags run_flags;
  std::string sweep_axis = "two_j";
  std::string sweep_values;
  std::string sweep_mode = "trajectory";
  int sweep_parallelism = 1;
  std::string sweep_prefix = "qkt_sweep";
  std::string sweep_component = "z";

  double portrait_k = 3.0;
  int portrait_grid = 24;
  int portrait_iters = 300;
  std::string portrait_out = "qkt_portrait.csv";

  std::string spectrum_in;
  std::string spectrum_column = "jz";
  std::string spectrum_out = "qkt_spectrum.csv";
  int spectrum_pad = 256;
  std::string spectrum_window = "none";

  try {
    const json cfg = load_config_json(argc, argv);
    from_config(cfg, "rep", run_flags.rep);
    from_config(cfg, "two-j", run_flags.two_j);
    from_config(cfg, "k", run_flags.k);
    from_config(cfg, "initial", run_flags.initial);
    from_config(cfg, "theta", run_flags.theta);
    from_config(cfg, "phi", run_flags.phi);
    from_config(cfg, "kicks", run_flags.kicks);
    from_config(cfg, "noise-model", run_flags.noise_model);
    from_config(cfg, "noise-strength", run_flags.noise_strength);
    from_config(cfg, "epsilon", run_flags.epsilon);
    from_config(cfg, "corr-mode", run_flags.corr_mode);
    from_config(cfg, "out", run_flags.out);
    from_config(cfg, "format", run_flags.format);
    from_config(cfg, "axis", sweep_axis);
    from_config(cfg, "values", sweep_values);
    from_config(cfg, "mode", sweep_mode);
    from_config(cfg, "parallelism", sweep_parallelism);
    from_config(cfg, "out-prefix", sweep_prefix);
    from_config(cfg, "component", sweep_component);

    CLI::App* run = app.add_subcommand("run", "single trajectory run");
    add_run_flags(run, run_flags);
    run->add_option("--out", run_flags.out, "output file");
    run->add_option("--format", run_flags.format, "csv or json");
    run->add_option("--config", config_path, "JSON config file");

    CLI::App* sweep =
        app.add_subcommand("sweep", "parameter sweep with summary CSV");
    add_run_flags(sweep, run_flags);
    sweep->add_option("--axis", sweep_axis, "two_j, k or noise_strength");
    sweep->add_option("--values", sweep_values,
                      "comma list or lo:hi[:step] range")
        ->required();
    sweep->add_option("--mode", sweep_mode, "trajectory or overlap");
    sweep->add_option("--parallelism", sweep_parallelism,
                      "concurrent sweep points");
    sweep->add_option("--out-prefix", sweep_prefix,
                      "prefix for per-point and summary files");
    sweep->add_option("--component", sweep_component,
                      "expectation component for the period estimate");
    sweep->add_option("--config", config_path, "JSON config file");

    CLI::App* portrait =
        app.add_subcommand("portrait", "classical phase portrait CSV");
    portrait->add_option("--k", portrait_k, "chaoticity parameter");
    portrait->add_option("--grid", portrait_grid, "seed grid size");
    portrait->add_option("--iters", portrait_iters, "iterations per seed");
    portrait->add_option("--out", portrait_out, "output file");
    portrait->add_option("--config", config_path, "JSON config file");

    CLI::App* spectrum_cmd =
        app.add_subcommand("spectrum", "DFT of a trajectory CSV column");
    spectrum_cmd->add_option("--in", spectrum_in, "input trajectory CSV")
        ->required();
    spectrum_cmd->add_option("--column", spectrum_column, "column name");
    spectrum_cmd->add_option("--out", spectrum_out, "output file");
    spectrum_cmd->add_option("--pad", spectrum_pad, "zero-pad length");
    spectrum_cmd->add_option("--window", spectrum_window, "none or hann");
    spectrum_cmd->add_option("--config", config_path, "JSON config file");

    try {
      app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
      return app.exit(e) == 0 ? 0 : kExitUsage;
    }

    if (run->parsed()) return cmd_run(run_flags);
    if (sweep->parsed()) {
      return cmd_sweep(run_flags, sweep_axis, sweep_values, sweep_mode,
                       sweep_parallelism, sweep_prefix, sweep_component);
    }
    if (portrait->parsed()) {
      return cmd_portrait(portrait_k, portrait_grid, portrait_iters,
                          portrait_out);
    }
    if (spectrum_cmd->parsed()) {
      return cmd_spectrum(spectrum_in, spectrum_column, spectrum_out,
                          spectrum_pad, spectrum_window);
    }
    return kExitUsage;
  } catch (const qkt::ResourceCapError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return kExitResource;
  } catch (const qkt::NumericalIntegrityError& e) {
    std::cerr << "numerical integrity error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const qkt::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
