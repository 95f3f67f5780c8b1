#include "glfem/norms.hpp"

#include <cmath>

#include "glfem/assembly.hpp"
#include "glfem/exceptions.hpp"

namespace glfem {

double ErrorNorms::h1() const { return std::sqrt(l2 * l2 + h1_seminorm * h1_seminorm); }

ErrorNorms error_norms(const SpaceTimeFunction& u, const SpaceTimeGradient& grad_u, double t,
                       const Mesh& mesh, const ElementEvaluator& v, const QuadratureRule& rule) {
  const double area = mesh.hx() * mesh.hy();
  double l2 = 0.0;
  double semi = 0.0;
  for (std::size_t e = 0; e < mesh.element_count(); ++e) {
    const Point o = mesh.element_origin(static_cast<int>(e));
    double l2_local = 0.0;
    double semi_local = 0.0;
    for (std::size_t q = 0; q < rule.size(); ++q) {
      const double xi = rule.points[q][0];
      const double eta = rule.points[q][1];
      const double x = o.x + mesh.hx() * xi;
      const double y = o.y + mesh.hy() * eta;
      const ValueGradient approx = v(static_cast<int>(e), xi, eta);
      const auto g = grad_u(x, y, t);
      l2_local += rule.weights[q] * std::norm(u(x, y, t) - approx.value);
      semi_local += rule.weights[q] * (std::norm(g[0] - approx.gradient[0]) +
                                       std::norm(g[1] - approx.gradient[1]));
    }
    l2 += l2_local * area;
    semi += semi_local * area;
  }
  return {std::sqrt(l2), std::sqrt(semi)};
}

double h1_error(const SpaceTimeFunction& u, const SpaceTimeGradient& grad_u, const FemField& field,
                const Mesh& mesh, const DofMap& dofs, double t, const QuadratureRule& rule) {
  if (field.size() != dofs.size()) {
    throw InvalidArgument("h1_error: field has wrong length");
  }
  const ElementEvaluator v = [&](int e, double xi, double eta) {
    return evaluate_in_element(mesh, dofs, field.coefficients, e, xi, eta);
  };
  return error_norms(u, grad_u, t, mesh, v, rule).h1();
}

double h1_error(const SpaceTimeFunction& u, const SpaceTimeGradient& grad_u,
                const Q2Reconstruction& post, const Mesh& mesh, double t,
                const QuadratureRule& rule) {
  const ElementEvaluator v = [&](int e, double xi, double eta) {
    return post.evaluate_in_element(e, xi, eta);
  };
  return error_norms(u, grad_u, t, mesh, v, rule).h1();
}

double h1_distance(const Mesh& mesh, const DofMap& dofs, std::span<const Complex> a,
                   std::span<const Complex> b) {
  if (a.size() != dofs.size() || b.size() != dofs.size()) {
    throw InvalidArgument("h1_distance: fields have wrong length");
  }
  const ElementMatrices em = element_matrices(mesh.hx(), mesh.hy());
  double sum = 0.0;
  for (const auto& nodes : mesh.elements()) {
    std::array<Complex, 4> d{};
    for (std::size_t k = 0; k < 4; ++k) {
      const int dof = dofs.node_to_dof[static_cast<std::size_t>(nodes[k])];
      if (dof != DofMap::kNoDof) {
        d[k] = a[static_cast<std::size_t>(dof)] - b[static_cast<std::size_t>(dof)];
      }
    }
    double local = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        local += (em.mass[i][j] + em.stiffness[i][j]) * std::real(std::conj(d[i]) * d[j]);
      }
    }
    sum += local;
  }
  return std::sqrt(std::max(sum, 0.0));
}

double superclose_error(const SpaceTimeFunction& u, const FemField& field, const Mesh& mesh,
                        const DofMap& dofs, double t) {
  const FemField interpolant =
      interpolate([&u, t](double x, double y) { return u(x, y, t); }, mesh, dofs, t);
  return h1_distance(mesh, dofs, interpolant.coefficients, field.coefficients);
}

double convergence_order(double e_coarse, double e_fine, double refinement) {
  if (!(e_coarse > 0.0) || !(e_fine > 0.0)) {
    throw InvalidArgument("convergence_order: errors must be positive");
  }
  if (!(refinement > 1.0)) {
    throw InvalidArgument("convergence_order: refinement factor must exceed 1");
  }
  return std::log(e_coarse / e_fine) / std::log(refinement);
}

}  // namespace glfem
