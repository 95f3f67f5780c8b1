#pragma once

#include <memory>
#include <span>
#include <utility>

#include "glfem/sparse.hpp"

namespace glfem {

enum class SolverKind {
  /// Sparse LU, factorized once per matrix.
  direct,
  /// Unpreconditioned BiCGSTAB; no factorization memory.
  bicgstab,
};

struct SolverOptions {
  SolverKind kind = SolverKind::direct;
  /// Required relative residual ||Ax - b|| / ||b||.
  double tolerance = 1e-10;
  /// Iteration cap for the iterative path.
  int max_iterations = 10000;
};

struct SolveReport {
  int iterations = 0;
  double relative_residual = 0.0;
  double seconds = 0.0;
};

/// Prepared solver for one matrix. The direct path factorizes in the
/// constructor; solve() is const and may be called concurrently.
class LinearSolver {
 public:
  /// Throws SolverFailure if the matrix is structurally or numerically singular.
  explicit LinearSolver(const SparseMatrix& a, SolverOptions options = {});
  ~LinearSolver();
  LinearSolver(LinearSolver&&) noexcept;
  LinearSolver& operator=(LinearSolver&&) noexcept;

  /// Throws SolverFailure carrying the achieved residual when it exceeds the
  /// tolerance.
  std::pair<ComplexVector, SolveReport> solve(std::span<const Complex> b) const;

  const SolverOptions& options() const { return options_; }
  int size() const { return n_; }

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  SolverOptions options_;
  int n_ = 0;
};

/// One-shot convenience wrapper around LinearSolver.
std::pair<ComplexVector, SolveReport> solve(const SparseMatrix& a, std::span<const Complex> b,
                                            SolverOptions options = {});

}  // namespace glfem
