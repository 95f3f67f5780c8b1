#include "glfem/stepper.hpp"

#include <cmath>
#include <sstream>

#include "glfem/exceptions.hpp"

namespace glfem {

void StepperConfig::validate() const {
  if (!(tau > 0.0)) {
    throw InvalidArgument("StepperConfig: tau must be positive");
  }
  if (n_steps < 1) {
    throw InvalidArgument("StepperConfig: n_steps must be >= 1");
  }
}

int step_index(double t, double tau, int n_steps) {
  const double ratio = t / tau;
  const double n = std::round(ratio);
  if (std::abs(ratio - n) > 1e-9 * std::max(1.0, std::abs(ratio)) || n < 0.0 || n > n_steps) {
    std::ostringstream os;
    os << "snapshot time " << t << " is not a multiple of tau = " << tau << " within [0, "
       << n_steps * tau << "]";
    throw InvalidArgument(os.str());
  }
  return static_cast<int>(n);
}

Stepper::Stepper(ProblemSpec spec, Mesh mesh, DofMap dofs, StepperConfig config)
    : spec_(std::move(spec)),
      config_(std::move(config)),
      assembler_(std::move(mesh), std::move(dofs), config_.rule) {
  config_.validate();
  mass_ = assembler_.mass();
  stiffness_ = assembler_.stiffness();
  const Complex half_diffusion = 0.5 * Complex{spec_.nu, spec_.eta};
  const double inv_tau = 1.0 / config_.tau;
  lhs_base_ = axpy_matrix(inv_tau - 0.5 * spec_.gamma, mass_, half_diffusion, stiffness_);
  rhs_base_ = axpy_matrix(inv_tau + 0.5 * spec_.gamma, mass_, -half_diffusion, stiffness_);
}

FemField Stepper::initial_field() const {
  const Mesh& mesh = assembler_.mesh();
  const DofMap& dofs = assembler_.dofs();
  FemField field{ComplexVector(dofs.size()), 0.0};
  for (std::size_t i = 0; i < dofs.size(); ++i) {
    const Point& p = mesh.nodes()[static_cast<std::size_t>(dofs.dof_to_node[i])];
    field.coefficients[i] = spec_.u0(p.x, p.y);
  }
  return field;
}

ComplexVector Stepper::source_load(double t_prev) const {
  if (!spec_.source) {
    return ComplexVector(assembler_.dof_count());
  }
  const double tau = config_.tau;
  const SpaceTimeFunction& g = spec_.source;
  if (config_.source_timing == SourceTiming::midpoint) {
    const double t = t_prev + 0.5 * tau;
    return assembler_.function_load([&g, t](double x, double y) { return g(x, y, t); });
  }
  const double t0 = t_prev;
  const double t1 = t_prev + tau;
  return assembler_.function_load(
      [&g, t0, t1](double x, double y) { return 0.5 * (g(x, y, t0) + g(x, y, t1)); });
}

FemField Stepper::advance(const FemField& prev, std::span<const Complex> state) {
  if (prev.size() != assembler_.dof_count()) {
    throw InvalidArgument("Stepper: field has wrong length");
  }
  ComplexVector rhs = matvec(rhs_base_, prev.coefficients);
  const ComplexVector g = source_load(prev.time);
  for (std::size_t i = 0; i < rhs.size(); ++i) {
    rhs[i] += g[i];
  }

  std::pair<ComplexVector, SolveReport> result;
  if (spec_.is_linear()) {
    if (!linear_solver_ || config_.refactorize_each_step) {
      linear_solver_.emplace(lhs_base_, config_.solver);
      ++factorizations_;
    }
    result = linear_solver_->solve(rhs);
  } else {
    const Complex half_reaction = 0.5 * Complex{spec_.kappa, spec_.zeta};
    const SparseMatrix weighted =
        assembler_.weighted_mass(assembler_.nonlinearity_weights(spec_.f, state));
    const ComplexVector coupling = matvec(weighted, prev.coefficients);
    for (std::size_t i = 0; i < rhs.size(); ++i) {
      rhs[i] -= half_reaction * coupling[i];
    }
    const SparseMatrix lhs = axpy_matrix(1.0, lhs_base_, half_reaction, weighted);
    const LinearSolver solver(lhs, config_.solver);
    ++factorizations_;
    result = solver.solve(rhs);
  }
  reports_.push_back(result.second);
  return FemField{std::move(result.first), prev.time + config_.tau};
}

FemField Stepper::predictor_step(const FemField& u0) {
  return advance(u0, u0.coefficients);
}

FemField Stepper::corrector_step(const FemField& u0, const FemField& u10) {
  if (u10.size() != u0.size()) {
    throw InvalidArgument("corrector_step: predictor field has wrong length");
  }
  ComplexVector mid(u0.size());
  for (std::size_t i = 0; i < mid.size(); ++i) {
    mid[i] = 0.5 * (u10.coefficients[i] + u0.coefficients[i]);
  }
  return advance(u0, mid);
}

FemField Stepper::cn_step(const FemField& prev, const FemField& prev2, int n) {
  if (n < 2) {
    throw InvalidArgument("cn_step: step index must be >= 2");
  }
  if (prev2.size() != prev.size()) {
    throw InvalidArgument("cn_step: fields have different lengths");
  }
  ComplexVector extrapolated(prev.size());
  for (std::size_t i = 0; i < extrapolated.size(); ++i) {
    extrapolated[i] = 1.5 * prev.coefficients[i] - 0.5 * prev2.coefficients[i];
  }
  FemField next = advance(prev, extrapolated);
  next.time = n * config_.tau;
  return next;
}

std::vector<FemField> Stepper::run(std::span<const double> snapshot_times,
                                   const StepObserver& observer) {
  std::vector<int> wanted;
  wanted.reserve(snapshot_times.size());
  for (const double t : snapshot_times) {
    wanted.push_back(step_index(t, config_.tau, config_.n_steps));
  }
  std::vector<FemField> snapshots(snapshot_times.size());
  auto record = [&](const FemField& field, int n) {
    for (std::size_t k = 0; k < wanted.size(); ++k) {
      if (wanted[k] == n) {
        snapshots[k] = field;
      }
    }
    if (observer) {
      observer(field);
    }
  };

  FemField prev2 = initial_field();
  record(prev2, 0);
  const FemField predicted = predictor_step(prev2);
  FemField prev = corrector_step(prev2, predicted);
  prev.time = config_.tau;
  record(prev, 1);
  for (int n = 2; n <= config_.n_steps; ++n) {
    FemField next = cn_step(prev, prev2, n);
    record(next, n);
    prev2 = std::move(prev);
    prev = std::move(next);
  }
  return snapshots;
}

}  // namespace glfem
