#pragma once

#include <array>
#include <vector>

namespace glfem {

/// Tensor-product rule on the reference square [0,1]^2.
struct QuadratureRule {
  std::vector<std::array<double, 2>> points;
  std::vector<double> weights;
  /// Highest polynomial degree per axis integrated exactly (2n - 1).
  int degree = 0;

  std::size_t size() const { return weights.size(); }
};

/// n-point Gauss-Legendre nodes and weights on [0,1]; weights sum to 1.
struct GaussLine {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussLine gauss_legendre_line(int n);

/// n x n Gauss-Legendre rule on [0,1]^2. Throws InvalidArgument for n < 1.
QuadratureRule gauss_legendre_square(int points_per_axis);

}  // namespace glfem
