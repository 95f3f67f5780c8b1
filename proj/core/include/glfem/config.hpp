#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "glfem/solver.hpp"
#include "glfem/stepper.hpp"

namespace glfem {

enum class TauRule {
  /// tau = h
  h,
  /// tau = k * h
  kh,
};

/// What a study does with snapshot times that are not multiples of tau.
enum class OffGridPolicy {
  error,
  skip,
};

/// Settings for a convergence or stability study.
///
/// Every field has a `key = value` spelling (see apply_setting) shared by the
/// config file and the command-line flags.
struct StudyConfig {
  std::string problem = "example1";
  std::vector<int> sizes = {10, 20, 40, 80};
  TauRule tau_rule = TauRule::h;
  /// Time-step multipliers. Convergence studies use k.front() with
  /// tau-rule kh; stability studies sweep the whole list.
  std::vector<int> k = {1};
  double t_final = 1.0;
  std::vector<double> snapshots = {0.25, 0.5, 0.75, 1.0};
  /// Empty means standard output.
  std::string out;
  double solver_tol = 1e-10;
  SolverKind solver = SolverKind::direct;
  /// Gauss points per axis for load and error integrals.
  int quad = 3;
  bool postprocess = true;
  SourceTiming source_timing = SourceTiming::midpoint;
  OffGridPolicy off_grid = OffGridPolicy::error;
};

/// Sets one field from its textual form. Throws ConfigError for unknown keys
/// or unparsable values.
void apply_setting(StudyConfig& config, std::string_view key, std::string_view value);

/// Parses flat `key = value` lines; `#` starts a comment, blank lines are
/// ignored. Throws ConfigError naming the offending line.
StudyConfig parse_config_text(std::string_view text, StudyConfig base = {});

/// Throws IoError if the file cannot be read.
StudyConfig load_config_file(const std::filesystem::path& path, StudyConfig base = {});

/// Structural checks independent of the study kind (positive sizes, times in
/// range, known problem). Throws ConfigError.
void validate(const StudyConfig& config);

/// Keys accepted by apply_setting, in documentation order.
const std::vector<std::string>& config_keys();

}  // namespace glfem
