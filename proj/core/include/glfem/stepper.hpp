#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "glfem/assembly.hpp"
#include "glfem/field.hpp"
#include "glfem/problem.hpp"
#include "glfem/quadrature.hpp"
#include "glfem/solver.hpp"

namespace glfem {

/// Time level at which the source enters each step.
enum class SourceTiming {
  /// g(., t_{n-1/2})
  midpoint,
  /// (g(., t_n) + g(., t_{n-1})) / 2
  average,
};

struct StepperConfig {
  double tau = 0.0;
  int n_steps = 0;
  QuadratureRule rule = gauss_legendre_square(3);
  SolverOptions solver;
  SourceTiming source_timing = SourceTiming::midpoint;
  /// Only affects linear problems, whose left-hand matrix is otherwise
  /// factorized once and reused.
  bool refactorize_each_step = false;

  /// Throws InvalidArgument unless tau > 0 and n_steps >= 1.
  void validate() const;
};

/// Linearized Crank-Nicolson Galerkin scheme for the generalized
/// Ginzburg-Landau equation with bilinear elements.
///
/// Every step solves
///   [M/tau + (nu+i eta)/2 K - gamma/2 M + (kappa+i zeta)/2 W] U^n
///     = [M/tau - (nu+i eta)/2 K + gamma/2 M - (kappa+i zeta)/2 W] U^{n-1} + G,
/// where W is the mass matrix weighted by f(|V_h|^2) for a linearization
/// state V_h and G is the source load. The state V_h is
///   U^0                      for the predictor,
///   (U^{1,0} + U^0) / 2      for the corrector,
///   3/2 U^{n-1} - 1/2 U^{n-2} for n >= 2.
/// For linear problems W vanishes and one factorization serves all steps.
class Stepper {
 public:
  Stepper(ProblemSpec spec, Mesh mesh, DofMap dofs, StepperConfig config);

  /// Nodal interpolant of u0.
  FemField initial_field() const;

  /// U^{1,0}: nonlinearity frozen at U^0.
  FemField predictor_step(const FemField& u0);
  /// U^1: nonlinearity evaluated at (U^{1,0} + U^0) / 2.
  FemField corrector_step(const FemField& u0, const FemField& u10);
  /// U^n for n >= 2 from U^{n-1} (prev) and U^{n-2} (prev2).
  FemField cn_step(const FemField& prev, const FemField& prev2, int n);

  using StepObserver = std::function<void(const FemField&)>;

  /// Advances from U^0 to t = n_steps * tau and returns the states at the
  /// requested times, in request order. Each time must be a grid multiple of
  /// tau in [0, T]; otherwise InvalidArgument. The observer, if set, sees
  /// U^0 and then every computed U^n.
  std::vector<FemField> run(std::span<const double> snapshot_times,
                            const StepObserver& observer = {});

  const Assembler& assembler() const { return assembler_; }
  const SparseMatrix& mass() const { return mass_; }
  const SparseMatrix& stiffness() const { return stiffness_; }
  const StepperConfig& config() const { return config_; }
  const ProblemSpec& spec() const { return spec_; }

  /// One report per linear solve performed so far.
  const std::vector<SolveReport>& solve_reports() const { return reports_; }
  int factorizations() const { return factorizations_; }

 private:
  /// Solves one Crank-Nicolson step from prev to t_prev + tau with the
  /// nonlinearity linearized at `state`.
  FemField advance(const FemField& prev, std::span<const Complex> state);
  ComplexVector source_load(double t_prev) const;

  ProblemSpec spec_;
  StepperConfig config_;
  Assembler assembler_;
  SparseMatrix mass_;
  SparseMatrix stiffness_;
  /// (1/tau - gamma/2) M + (nu + i eta)/2 K
  SparseMatrix lhs_base_;
  /// (1/tau + gamma/2) M - (nu + i eta)/2 K
  SparseMatrix rhs_base_;
  std::optional<LinearSolver> linear_solver_;
  std::vector<SolveReport> reports_;
  int factorizations_ = 0;
};

/// Index n with n * tau == t (to round-off), or InvalidArgument.
int step_index(double t, double tau, int n_steps);

}  // namespace glfem
