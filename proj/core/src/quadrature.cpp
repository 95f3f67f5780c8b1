#include "glfem/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "glfem/exceptions.hpp"

namespace glfem {

GaussLine gauss_legendre_line(int n) {
  if (n < 1) {
    throw InvalidArgument("gauss_legendre_line: need at least one point, got " + std::to_string(n));
  }
  GaussLine line;
  line.nodes.resize(static_cast<std::size_t>(n));
  line.weights.resize(static_cast<std::size_t>(n));

  // Newton iteration on P_n from the Chebyshev-like initial guess, on [-1,1].
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = 0.0;
      for (int k = 1; k <= n; ++k) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / k;
      }
      dp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) {
        break;
      }
    }
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    // Map to [0,1]: x = (1 + z) / 2, weight halves.
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(n - 1 - i);
    line.nodes[lo] = 0.5 * (1.0 - z);
    line.nodes[hi] = 0.5 * (1.0 + z);
    line.weights[lo] = 0.5 * w;
    line.weights[hi] = 0.5 * w;
  }
  if (n % 2 == 1) {
    line.nodes[static_cast<std::size_t>(n / 2)] = 0.5;
  }
  return line;
}

QuadratureRule gauss_legendre_square(int points_per_axis) {
  const GaussLine line = gauss_legendre_line(points_per_axis);
  QuadratureRule rule;
  rule.degree = 2 * points_per_axis - 1;
  const std::size_t n = line.nodes.size();
  rule.points.reserve(n * n);
  rule.weights.reserve(n * n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      rule.points.push_back({line.nodes[i], line.nodes[j]});
      rule.weights.push_back(line.weights[i] * line.weights[j]);
    }
  }
  return rule;
}

}  // namespace glfem
