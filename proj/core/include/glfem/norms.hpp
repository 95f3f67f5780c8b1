#pragma once

#include <functional>

#include "glfem/field.hpp"
#include "glfem/mesh.hpp"
#include "glfem/problem.hpp"
#include "glfem/projections.hpp"
#include "glfem/quadrature.hpp"

namespace glfem {

/// Approximation evaluated on element e at reference point (xi, eta).
using ElementEvaluator = std::function<ValueGradient(int element, double xi, double eta)>;

struct ErrorNorms {
  double l2 = 0.0;
  double h1_seminorm = 0.0;

  /// sqrt(||e||_0^2 + ||grad e||_0^2)
  double h1() const;
};

/// L2 and H1-seminorm of u(., t) - v by elementwise quadrature.
ErrorNorms error_norms(const SpaceTimeFunction& u, const SpaceTimeGradient& grad_u, double t,
                       const Mesh& mesh, const ElementEvaluator& v, const QuadratureRule& rule);

/// Full H1 norm of u(., t) - U_h.
double h1_error(const SpaceTimeFunction& u, const SpaceTimeGradient& grad_u, const FemField& field,
                const Mesh& mesh, const DofMap& dofs, double t, const QuadratureRule& rule);

/// Full H1 norm of u(., t) - I_{2h}^2 U_h.
double h1_error(const SpaceTimeFunction& u, const SpaceTimeGradient& grad_u,
                const Q2Reconstruction& post, const Mesh& mesh, double t,
                const QuadratureRule& rule);

/// Full H1 norm of the difference of two fields in the same Q1 space,
/// integrated exactly with the element matrices.
double h1_distance(const Mesh& mesh, const DofMap& dofs, std::span<const Complex> a,
                   std::span<const Complex> b);

/// ||I_h u(., t) - U_h||_1, integrated exactly.
double superclose_error(const SpaceTimeFunction& u, const FemField& field, const Mesh& mesh,
                        const DofMap& dofs, double t);

/// log(e_coarse / e_fine) / log(refinement). Throws InvalidArgument for
/// nonpositive errors or refinement <= 1.
double convergence_order(double e_coarse, double e_fine, double refinement = 2.0);

}  // namespace glfem
