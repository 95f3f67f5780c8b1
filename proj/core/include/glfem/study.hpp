#pragma once

#include <optional>
#include <ostream>
#include <vector>

#include "glfem/config.hpp"

namespace glfem {

/// Errors for one (time, mesh size, time step) combination.
struct ErrorRow {
  double time = 0.0;
  int m = 0;
  double tau = 0.0;
  double h1_error = 0.0;
  std::optional<double> h1_order;
  double superclose = 0.0;
  std::optional<double> superclose_order;
  /// Absent when postprocessing is disabled.
  std::optional<double> postprocessed;
  std::optional<double> post_order;

  bool operator==(const ErrorRow&) const = default;
};

/// Rows ordered by (time, M, tau).
struct ErrorReport {
  std::vector<ErrorRow> rows;

  /// Row for (time, m), or nullptr.
  const ErrorRow* find(double time, int m) const;
  /// Row for (time, tau), or nullptr.
  const ErrorRow* find_tau(double time, double tau) const;

  bool operator==(const ErrorReport&) const = default;
};

/// Builds the problem named in config.problem. Throws ConfigError.
ProblemSpec make_problem(const StudyConfig& config);

/// One run per mesh size with tau = h (or k.front() * h); reports the plain,
/// superclose and postprocessed H1 errors at each snapshot time, and orders
/// against the previous size that has the same time. Progress lines go to
/// `log` when given. A solver failure is rethrown as SolverFailure naming the
/// mesh size and step.
ErrorReport run_convergence_study(const StudyConfig& config, std::ostream* log = nullptr);

/// Fixed mesh (config.sizes must hold one size), tau = k h for each k in
/// config.k. Throws ConfigError when a snapshot time is not a multiple of
/// some tau.
ErrorReport run_stability_study(const StudyConfig& config, std::ostream* log = nullptr);

}  // namespace glfem
