#pragma once

#include <array>
#include <functional>
#include <vector>

#include "glfem/assembly.hpp"
#include "glfem/field.hpp"
#include "glfem/mesh.hpp"
#include "glfem/quadrature.hpp"
#include "glfem/solver.hpp"

namespace glfem {

using PointGradient = std::function<std::array<Complex, 2>(double x, double y)>;

/// Nodal interpolant I_h u on the interior nodes.
FemField interpolate(const PointFunction& u, const Mesh& mesh, const DofMap& dofs,
                     double time = 0.0);

/// Ritz projection R_h u: solves K a = b with b_i the quadrature value of
/// (grad u, grad phi_i).
FemField ritz_project(const PointGradient& grad_u, const Mesh& mesh, const DofMap& dofs,
                      const QuadratureRule& rule, SolverOptions options = {});

/// Piecewise biquadratic interpolant of a Q1 field on 2x2 macro patches.
///
/// On each patch it is the tensor-product Q2 Lagrange polynomial through the
/// nine fine-mesh nodal values; it is smooth inside a patch and in general
/// only continuous across patch edges.
class Q2Reconstruction {
 public:
  Q2Reconstruction(const Mesh& mesh, const MacroPatchSet& patches,
                   std::vector<std::array<Complex, 9>> nodal_values);

  /// (s, r) are coordinates on the patch scaled to [0,1]^2.
  ValueGradient evaluate_in_patch(int patch, double s, double r) const;
  /// Fine element e at reference point (xi, eta).
  ValueGradient evaluate_in_element(int element, double xi, double eta) const;
  /// Physical point; patch chosen like Mesh::locate chooses elements.
  ValueGradient evaluate(double x, double y) const;

  std::size_t patch_count() const { return values_.size(); }

 private:
  Rectangle domain_;
  int per_axis_;
  double patch_width_;
  double patch_height_;
  std::vector<std::array<Complex, 9>> values_;
};

/// I_{2h}^2 U. Throws UnsupportedMesh for odd m.
Q2Reconstruction postprocess(const FemField& field, const MacroPatchSet& patches, const Mesh& mesh,
                             const DofMap& dofs);

}  // namespace glfem
