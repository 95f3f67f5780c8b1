#include "glfem/problem.hpp"

#include <cmath>

#include "glfem/exceptions.hpp"

namespace glfem {

namespace {

constexpr Complex kI{0.0, 1.0};

// Plane wave exp(i(t - 2x - 2y)) times the bubble p = x y (1-x)(1-y).
Complex phase(double x, double y, double t) {
  return std::exp(kI * (t - 2.0 * x - 2.0 * y));
}

double bubble(double x, double y) { return x * y * (1.0 - x) * (1.0 - y); }

const ExactSolution& plane_wave() {
  static const ExactSolution solution{
      [](double x, double y, double t) { return phase(x, y, t) * bubble(x, y); },
      [](double x, double y, double t) -> std::array<Complex, 2> {
        const Complex e = phase(x, y, t);
        const double p = bubble(x, y);
        const double px = y * (1.0 - y) * (1.0 - 2.0 * x);
        const double py = x * (1.0 - x) * (1.0 - 2.0 * y);
        return {e * (px - 2.0 * kI * p), e * (py - 2.0 * kI * p)};
      },
      [](double x, double y, double t) { return kI * phase(x, y, t) * bubble(x, y); },
      [](double x, double y, double t) {
        // u_xx = e (p_xx - 4i p_x - 4p), likewise in y.
        const Complex e = phase(x, y, t);
        const double p = bubble(x, y);
        const double px = y * (1.0 - y) * (1.0 - 2.0 * x);
        const double py = x * (1.0 - x) * (1.0 - 2.0 * y);
        const double pxx = -2.0 * y * (1.0 - y);
        const double pyy = -2.0 * x * (1.0 - x);
        return e * (pxx + pyy - 4.0 * kI * (px + py) - 8.0 * p);
      },
  };
  return solution;
}

const ExactSolution& require_exact(const ProblemSpec& spec, const char* caller) {
  if (!spec.exact) {
    throw Unsupported(std::string(caller) + ": problem has no exact solution");
  }
  return *spec.exact;
}

}  // namespace

ProblemSpec example1_spec() {
  ProblemSpec spec;
  spec.nu = 1.0;
  spec.eta = 1.0;
  spec.kappa = 1.0;
  spec.zeta = 1.0;
  spec.gamma = 1.0;
  spec.f = [](double s) { return s; };
  spec.exact = plane_wave();
  spec.u0 = [](double x, double y) { return phase(x, y, 0.0) * bubble(x, y); };
  spec.domain = Rectangle{0.0, 1.0, 0.0, 1.0};
  spec.t_final = 1.0;
  spec.source = manufactured_source(spec);
  return spec;
}

SpaceTimeFunction manufactured_source(const ProblemSpec& spec) {
  const ExactSolution exact = require_exact(spec, "manufactured_source");
  const Complex diffusion{spec.nu, spec.eta};
  const Complex reaction{spec.kappa, spec.zeta};
  const double gamma = spec.gamma;
  const RealFunction f = spec.f;
  return [exact, diffusion, reaction, gamma, f](double x, double y, double t) {
    const Complex u = exact.value(x, y, t);
    return exact.time_derivative(x, y, t) - diffusion * exact.laplacian(x, y, t) +
           reaction * f(std::norm(u)) * u - gamma * u;
  };
}

Complex eval_exact(const ProblemSpec& spec, double x, double y, double t) {
  return require_exact(spec, "eval_exact").value(x, y, t);
}

std::array<Complex, 2> eval_exact_gradient(const ProblemSpec& spec, double x, double y, double t) {
  return require_exact(spec, "eval_exact_gradient").gradient(x, y, t);
}

}  // namespace glfem
