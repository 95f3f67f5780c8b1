#pragma once

#include <array>
#include <functional>
#include <span>
#include <vector>

#include "glfem/mesh.hpp"
#include "glfem/quadrature.hpp"
#include "glfem/sparse.hpp"

namespace glfem {

/// Complex-valued function of position.
using PointFunction = std::function<Complex(double x, double y)>;
/// Real scalar nonlinearity f(s).
using RealFunction = std::function<double(double)>;

struct ShapeValue {
  double value;
  /// Gradient with respect to reference coordinates (xi, eta).
  std::array<double, 2> gradient;
};

/// Q1 shape function N_i on [0,1]^2, nodes counterclockwise from (0,0):
/// N_0 = (1-xi)(1-eta), N_1 = xi(1-eta), N_2 = xi*eta, N_3 = (1-xi)eta.
ShapeValue basis_eval(int local_index, double xi, double eta);

using LocalMatrix = std::array<std::array<double, 4>, 4>;

struct ElementMatrices {
  LocalMatrix mass;
  LocalMatrix stiffness;
};

/// Analytically integrated Q1 mass and stiffness for an hx x hy rectangle.
ElementMatrices element_matrices(double hx, double hy);

/// Finite element operators on the interior dofs of a uniform mesh.
///
/// The sparsity pattern and the element-to-CSR scatter map are built once;
/// each assembly then sums element contributions in element order, so every
/// result is bit-for-bit reproducible.
class Assembler {
 public:
  Assembler(Mesh mesh, DofMap dofs, QuadratureRule rule);

  const Mesh& mesh() const { return mesh_; }
  const DofMap& dofs() const { return dofs_; }
  const QuadratureRule& rule() const { return rule_; }
  std::size_t dof_count() const { return dofs_.size(); }

  SparseMatrix mass() const;
  SparseMatrix stiffness() const;

  /// Matrix with entries sum_q w(e,q) phi_j phi_i |K| over quadrature points.
  /// weights holds one value per (element, point), element-major.
  SparseMatrix weighted_mass(std::span<const double> weights) const;

  /// f(|u_h|^2) at every quadrature point of every element, element-major.
  std::vector<double> nonlinearity_weights(const RealFunction& f,
                                           std::span<const Complex> coefficients) const;

  /// Entry i approximates the integral of w * phi_i.
  ComplexVector function_load(const PointFunction& w) const;

  /// Entry i approximates the integral of f(|u_hat|^2) u_tilde phi_i.
  ComplexVector nonlinear_load(const RealFunction& f, std::span<const Complex> u_hat,
                               std::span<const Complex> u_tilde) const;

  /// Nodal values of a dof vector on element e (zero at boundary nodes).
  std::array<Complex, 4> gather(std::span<const Complex> coefficients, int element) const;

  /// Physical coordinates of quadrature point q in element e.
  Point quadrature_point(int element, std::size_t q) const;

 private:
  SparseMatrix from_local(const LocalMatrix& local) const;
  void check_length(std::span<const Complex> v, const char* what) const;

  Mesh mesh_;
  DofMap dofs_;
  QuadratureRule rule_;
  SparseMatrix pattern_;
  /// For element e and local pair (a, b): index into pattern values, or -1.
  std::vector<std::array<int, 16>> scatter_;
  /// Shape values at each quadrature point: shape_[q][a].
  std::vector<std::array<double, 4>> shape_;
};

/// Convenience wrappers matching the assembler methods.
SparseMatrix assemble_mass(const Mesh& mesh, const DofMap& dofs);
SparseMatrix assemble_stiffness(const Mesh& mesh, const DofMap& dofs);
ComplexVector assemble_function_load(const Mesh& mesh, const DofMap& dofs, const PointFunction& w,
                                     const QuadratureRule& rule);
ComplexVector assemble_nonlinear_load(const Mesh& mesh, const DofMap& dofs, const RealFunction& f,
                                      std::span<const Complex> u_hat,
                                      std::span<const Complex> u_tilde,
                                      const QuadratureRule& rule);

}  // namespace glfem
