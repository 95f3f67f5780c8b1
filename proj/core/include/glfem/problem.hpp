#pragma once

#include <array>
#include <functional>
#include <optional>

#include "glfem/assembly.hpp"
#include "glfem/mesh.hpp"
#include "glfem/sparse.hpp"

namespace glfem {

/// Complex-valued function of (x, y, t).
using SpaceTimeFunction = std::function<Complex(double x, double y, double t)>;
using SpaceTimeGradient = std::function<std::array<Complex, 2>(double x, double y, double t)>;

/// Closed-form exact solution with the derivatives needed for a manufactured
/// source and for error norms.
struct ExactSolution {
  SpaceTimeFunction value;
  SpaceTimeGradient gradient;
  SpaceTimeFunction time_derivative;
  SpaceTimeFunction laplacian;
};

/// u_t - (nu + i eta) Lap u + (kappa + i zeta) f(|u|^2) u - gamma u = g
/// on a rectangle, homogeneous Dirichlet data, u(., 0) = u0.
struct ProblemSpec {
  double nu = 1.0;
  double eta = 0.0;
  double kappa = 1.0;
  double zeta = 0.0;
  double gamma = 0.0;
  RealFunction f = [](double s) { return s; };
  std::optional<ExactSolution> exact;
  PointFunction u0 = [](double, double) { return Complex{}; };
  /// Absent means g = 0.
  SpaceTimeFunction source;
  Rectangle domain;
  double t_final = 1.0;

  /// True when the nonlinear term drops out of the equation.
  bool is_linear() const { return kappa == 0.0 && zeta == 0.0; }
};

/// Plane-wave test problem on the unit square:
/// u = exp(i(t - 2x - 2y)) x y (1-x)(1-y), nu = eta = kappa = zeta = gamma = 1,
/// f(s) = s, source manufactured from u.
ProblemSpec example1_spec();

/// g = u_t - (nu + i eta) Lap u + (kappa + i zeta) f(|u|^2) u - gamma u for the
/// spec's exact solution. Throws Unsupported when no exact solution is set.
SpaceTimeFunction manufactured_source(const ProblemSpec& spec);

Complex eval_exact(const ProblemSpec& spec, double x, double y, double t);
std::array<Complex, 2> eval_exact_gradient(const ProblemSpec& spec, double x, double y, double t);

}  // namespace glfem
