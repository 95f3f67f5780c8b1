// glfem: convergence and stability studies for the generalized
// Ginzburg-Landau solver.
//
//   glfem convergence --sizes 10,20,40,80 --out table.csv
//   glfem stability --sizes 80 --k 1,5,10,20
//   glfem convergence --config study.conf --quad 4
//
// Exit codes: 0 success, 2 config error, 3 solver failure, 4 I/O error.

#include <CLI11.hpp>
#include <iostream>
#include <map>
#include <string>

#include "glfem/config.hpp"
#include "glfem/csv.hpp"
#include "glfem/exceptions.hpp"
#include "glfem/study.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitSolver = 3;
constexpr int kExitIo = 4;

struct Flags {
  std::string config_file;
  std::map<std::string, std::string> values;
};

void add_study_flags(CLI::App* cmd, Flags& flags) {
  cmd->add_option("--config", flags.config_file, "Flat 'key = value' config file");
  const std::map<std::string, std::string> help = {
      {"problem", "Problem to solve (example1)"},
      {"sizes", "Mesh sizes M, comma separated"},
      {"tau-rule", "Time step rule: h or kh"},
      {"k", "Time step multiplier(s) for tau = k h"},
      {"t-final", "Final time"},
      {"snapshots", "Report times, comma separated"},
      {"out", "Output CSV path (default: standard output)"},
      {"solver-tol", "Relative residual tolerance per solve"},
      {"solver", "Linear solver: direct or bicgstab"},
      {"quad", "Gauss points per axis for loads and norms"},
      {"postprocess", "Compute the postprocessed error (true/false)"},
      {"source-timing", "Source time level: midpoint or average"},
      {"off-grid", "Snapshot times off the tau grid: error or skip"},
  };
  for (const std::string& key : glfem::config_keys()) {
    cmd->add_option("--" + key, flags.values[key], help.at(key));
  }
}

glfem::StudyConfig resolve(const CLI::App* cmd, const Flags& flags, glfem::StudyConfig config) {
  if (!flags.config_file.empty()) {
    config = glfem::load_config_file(flags.config_file, config);
  }
  // Flags override the file.
  for (const auto& [key, value] : flags.values) {
    if (cmd->count("--" + key) > 0) {
      glfem::apply_setting(config, key, value);
    }
  }
  return config;
}

void write_report(const glfem::ErrorReport& report, const glfem::StudyConfig& config) {
  if (config.out.empty()) {
    std::cout << glfem::format_csv(report);
    std::cout.flush();
    if (!std::cout) {
      throw glfem::IoError("write failed", "<stdout>");
    }
  } else {
    glfem::emit_csv(report, config.out);
    std::cerr << "[glfem] wrote " << report.rows.size() << " rows to " << config.out << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linearized Crank-Nicolson Galerkin solver for the generalized Ginzburg-Landau "
               "equation: convergence and stability studies"};
  app.require_subcommand(1);

  Flags convergence_flags;
  CLI::App* convergence =
      app.add_subcommand("convergence", "Error table over mesh sizes with tau = h or k h");
  add_study_flags(convergence, convergence_flags);

  Flags stability_flags;
  CLI::App* stability =
      app.add_subcommand("stability", "Error table over time-step multipliers on one mesh");
  add_study_flags(stability, stability_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*convergence) {
      const glfem::StudyConfig config = resolve(convergence, convergence_flags, {});
      write_report(glfem::run_convergence_study(config, &std::cerr), config);
    } else {
      glfem::StudyConfig defaults;
      defaults.sizes = {80};
      defaults.k = {1, 5, 10, 20};
      const glfem::StudyConfig config = resolve(stability, stability_flags, defaults);
      write_report(glfem::run_stability_study(config, &std::cerr), config);
    }
  } catch (const glfem::ConfigError& e) {
    std::cerr << "glfem: configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const glfem::InvalidArgument& e) {
    std::cerr << "glfem: configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const glfem::Unsupported& e) {
    std::cerr << "glfem: configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const glfem::SolverFailure& e) {
    std::cerr << "glfem: " << e.what() << '\n';
    return kExitSolver;
  } catch (const glfem::IoError& e) {
    std::cerr << "glfem: I/O error: " << e.what() << '\n';
    return kExitIo;
  }
  return 0;
}
