#include "glfem/study.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "glfem/exceptions.hpp"
#include "glfem/norms.hpp"
#include "glfem/projections.hpp"

namespace glfem {

namespace {

struct RunErrors {
  double time;
  double h1;
  double superclose;
  std::optional<double> post;
};

bool on_grid(double t, double tau) {
  const double r = t / tau;
  return std::abs(r - std::round(r)) <= 1e-9 * std::max(1.0, r);
}

int checked_steps(double t_final, double tau, int m) {
  if (!on_grid(t_final, tau)) {
    std::ostringstream os;
    os << "t-final " << t_final << " is not a multiple of tau = " << tau << " (M = " << m << ")";
    throw ConfigError(os.str());
  }
  return static_cast<int>(std::round(t_final / tau));
}

std::vector<double> grid_times(const StudyConfig& config, double tau, int m) {
  std::vector<double> times;
  for (const double t : config.snapshots) {
    if (on_grid(t, tau)) {
      times.push_back(t);
    } else if (config.off_grid == OffGridPolicy::error) {
      std::ostringstream os;
      os << "snapshot time " << t << " is not a multiple of tau = " << tau << " (M = " << m
         << "); use off-grid = skip to omit it";
      throw ConfigError(os.str());
    }
  }
  return times;
}

std::vector<RunErrors> run_one(const StudyConfig& config, int m, double tau,
                               const std::vector<double>& times, std::ostream* log) {
  // Fresh problem and mesh per run; nothing is shared between sizes.
  const ProblemSpec spec = make_problem(config);
  Mesh mesh = build_uniform_mesh(m, spec.domain);
  DofMap dofs = build_dof_map(mesh);
  std::optional<MacroPatchSet> patches;
  if (config.postprocess) {
    patches = build_macro_patches(mesh);
  }

  StepperConfig sc;
  sc.tau = tau;
  sc.n_steps = checked_steps(config.t_final, tau, m);
  sc.rule = gauss_legendre_square(config.quad);
  sc.solver.tolerance = config.solver_tol;
  sc.solver.kind = config.solver;
  sc.source_timing = config.source_timing;

  if (log) {
    *log << "[glfem] M=" << m << " tau=" << tau << " steps=" << sc.n_steps
         << " dofs=" << dofs.size() << '\n';
  }

  Stepper stepper(spec, mesh, dofs, sc);
  std::vector<FemField> snapshots;
  try {
    snapshots = stepper.run(times);
  } catch (const SolverFailure& e) {
    const auto solves = static_cast<int>(stepper.solve_reports().size());
    const int step = solves < 2 ? 1 : solves;
    std::ostringstream os;
    os << "solver failure at M = " << m << ", step " << step << ": " << e.what();
    throw SolverFailure(os.str(), e.residual());
  }

  const ExactSolution& exact = *spec.exact;
  std::vector<RunErrors> out;
  for (std::size_t i = 0; i < times.size(); ++i) {
    const double t = times[i];
    RunErrors r{t, h1_error(exact.value, exact.gradient, snapshots[i], mesh, dofs, t, sc.rule),
                superclose_error(exact.value, snapshots[i], mesh, dofs, t), std::nullopt};
    if (patches) {
      const Q2Reconstruction post = postprocess(snapshots[i], *patches, mesh, dofs);
      r.post = h1_error(exact.value, exact.gradient, post, mesh, t, sc.rule);
    }
    out.push_back(r);
  }
  return out;
}

void sort_rows(ErrorReport& report) {
  std::stable_sort(report.rows.begin(), report.rows.end(),
                   [](const ErrorRow& a, const ErrorRow& b) {
                     if (a.time != b.time) return a.time < b.time;
                     if (a.m != b.m) return a.m < b.m;
                     return a.tau < b.tau;
                   });
}

}  // namespace

const ErrorRow* ErrorReport::find(double time, int m) const {
  for (const ErrorRow& r : rows) {
    if (std::abs(r.time - time) < 1e-12 && r.m == m) return &r;
  }
  return nullptr;
}

const ErrorRow* ErrorReport::find_tau(double time, double tau) const {
  for (const ErrorRow& r : rows) {
    if (std::abs(r.time - time) < 1e-12 && std::abs(r.tau - tau) <= 1e-12 * tau) return &r;
  }
  return nullptr;
}

ProblemSpec make_problem(const StudyConfig& config) {
  if (config.problem == "example1") {
    return example1_spec();
  }
  throw ConfigError("unknown problem '" + config.problem + "'");
}

ErrorReport run_convergence_study(const StudyConfig& config, std::ostream* log) {
  validate(config);
  const ProblemSpec probe = make_problem(config);
  const int k = config.tau_rule == TauRule::kh ? config.k.front() : 1;

  std::vector<int> sizes = config.sizes;
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());

  ErrorReport report;
  for (const int m : sizes) {
    const double h = probe.domain.width() / m;
    const double tau = k * h;
    const std::vector<double> times = grid_times(config, tau, m);
    for (const RunErrors& e : run_one(config, m, tau, times, log)) {
      ErrorRow row;
      row.time = e.time;
      row.m = m;
      row.tau = tau;
      row.h1_error = e.h1;
      row.superclose = e.superclose;
      row.postprocessed = e.post;
      // Orders against the finest coarser size that reported this time.
      const ErrorRow* coarse = nullptr;
      for (const ErrorRow& r : report.rows) {
        if (std::abs(r.time - e.time) < 1e-12 && r.m < m && (!coarse || r.m > coarse->m)) {
          coarse = &r;
        }
      }
      if (coarse) {
        const double ratio = static_cast<double>(m) / coarse->m;
        row.h1_order = convergence_order(coarse->h1_error, row.h1_error, ratio);
        row.superclose_order = convergence_order(coarse->superclose, row.superclose, ratio);
        if (coarse->postprocessed && row.postprocessed) {
          row.post_order = convergence_order(*coarse->postprocessed, *row.postprocessed, ratio);
        }
      }
      report.rows.push_back(row);
    }
  }
  sort_rows(report);
  return report;
}

ErrorReport run_stability_study(const StudyConfig& config, std::ostream* log) {
  validate(config);
  if (config.sizes.size() != 1) {
    throw ConfigError("stability study needs exactly one mesh size");
  }
  const ProblemSpec probe = make_problem(config);
  const int m = config.sizes.front();
  const double h = probe.domain.width() / m;

  ErrorReport report;
  for (const int k : config.k) {
    const double tau = k * h;
    const std::vector<double> times = grid_times(config, tau, m);
    for (const RunErrors& e : run_one(config, m, tau, times, log)) {
      ErrorRow row;
      row.time = e.time;
      row.m = m;
      row.tau = tau;
      row.h1_error = e.h1;
      row.superclose = e.superclose;
      row.postprocessed = e.post;
      report.rows.push_back(row);
    }
  }
  sort_rows(report);
  return report;
}

}  // namespace glfem
