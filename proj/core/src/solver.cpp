#include "glfem/solver.hpp"

#include <Eigen/IterativeLinearSolvers>
#include <Eigen/SparseCore>
#include <Eigen/SparseLU>
#include <chrono>
#include <limits>
#include <sstream>
#include <string>

#include "glfem/exceptions.hpp"

namespace glfem {

namespace {

using EigenMatrix = Eigen::SparseMatrix<Complex, Eigen::ColMajor, int>;
using EigenVector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;

EigenMatrix to_eigen(const SparseMatrix& a) {
  // A row-major map of the CSR arrays, converted to the column-major layout
  // SparseLU expects.
  const Eigen::Map<const Eigen::SparseMatrix<Complex, Eigen::RowMajor, int>> view(
      a.rows(), a.rows(), static_cast<Eigen::Index>(a.nonzeros()), a.row_offsets().data(),
      a.columns().data(), a.values().data());
  EigenMatrix out(view);
  out.makeCompressed();
  return out;
}

double relative_residual(const SparseMatrix& a, std::span<const Complex> x,
                         std::span<const Complex> b) {
  ComplexVector r = matvec(a, x);
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] -= b[i];
  }
  const double bn = norm2(b);
  const double rn = norm2(r);
  return bn > 0.0 ? rn / bn : rn;
}

std::string describe(const char* what, double residual, double tol) {
  std::ostringstream os;
  os << what << " (relative residual " << residual << ", tolerance " << tol << ")";
  return os.str();
}

}  // namespace

struct LinearSolver::Impl {
  SparseMatrix matrix;
  EigenMatrix eigen_matrix;
  Eigen::SparseLU<EigenMatrix, Eigen::COLAMDOrdering<int>> lu;
};

LinearSolver::LinearSolver(const SparseMatrix& a, SolverOptions options)
    : impl_(std::make_unique<Impl>()), options_(options), n_(a.rows()) {
  impl_->matrix = a;
  impl_->eigen_matrix = to_eigen(a);
  if (options_.kind == SolverKind::direct) {
    impl_->lu.analyzePattern(impl_->eigen_matrix);
    impl_->lu.factorize(impl_->eigen_matrix);
    if (impl_->lu.info() != Eigen::Success) {
      throw SolverFailure("LinearSolver: sparse LU factorization failed: " +
                              impl_->lu.lastErrorMessage(),
                          std::numeric_limits<double>::infinity());
    }
  }
}

LinearSolver::~LinearSolver() = default;
LinearSolver::LinearSolver(LinearSolver&&) noexcept = default;
LinearSolver& LinearSolver::operator=(LinearSolver&&) noexcept = default;

std::pair<ComplexVector, SolveReport> LinearSolver::solve(std::span<const Complex> b) const {
  if (b.size() != static_cast<std::size_t>(n_)) {
    throw InvalidArgument("LinearSolver::solve: right-hand side has length " +
                          std::to_string(b.size()) + ", expected " + std::to_string(n_));
  }
  const auto start = std::chrono::steady_clock::now();
  const Eigen::Map<const EigenVector> rhs(b.data(), n_);
  ComplexVector x(b.size());
  Eigen::Map<EigenVector> sol(x.data(), n_);

  SolveReport report;
  if (options_.kind == SolverKind::direct) {
    sol = impl_->lu.solve(rhs);
  } else {
    Eigen::BiCGSTAB<EigenMatrix, Eigen::IdentityPreconditioner> it;
    it.setTolerance(options_.tolerance * 0.5);
    it.setMaxIterations(options_.max_iterations);
    it.compute(impl_->eigen_matrix);
    sol = it.solve(rhs);
    report.iterations = static_cast<int>(it.iterations());
  }
  report.relative_residual = relative_residual(impl_->matrix, x, b);
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!(report.relative_residual <= options_.tolerance)) {
    throw SolverFailure(describe("LinearSolver: residual above tolerance",
                                 report.relative_residual, options_.tolerance),
                        report.relative_residual);
  }
  return {std::move(x), report};
}

std::pair<ComplexVector, SolveReport> solve(const SparseMatrix& a, std::span<const Complex> b,
                                            SolverOptions options) {
  return LinearSolver(a, options).solve(b);
}

}  // namespace glfem
