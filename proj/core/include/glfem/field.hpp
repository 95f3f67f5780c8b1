#pragma once

#include <array>

#include "glfem/mesh.hpp"
#include "glfem/sparse.hpp"

namespace glfem {

/// Member of the bilinear space with zero boundary values, stored as its
/// coefficients on the interior dofs, tagged with the time it represents.
struct FemField {
  ComplexVector coefficients;
  double time = 0.0;

  std::size_t size() const { return coefficients.size(); }
};

struct ValueGradient {
  Complex value;
  std::array<Complex, 2> gradient;
};

/// Value and physical gradient of a Q1 field at a point of element e given by
/// reference coordinates (xi, eta).
ValueGradient evaluate_in_element(const Mesh& mesh, const DofMap& dofs,
                                  std::span<const Complex> coefficients, int element, double xi,
                                  double eta);

/// Value and gradient at a physical point; see Mesh::locate for edge rules.
ValueGradient evaluate_field(const Mesh& mesh, const DofMap& dofs,
                             std::span<const Complex> coefficients, double x, double y);

}  // namespace glfem
