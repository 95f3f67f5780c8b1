#include "glfem/projections.hpp"

#include <algorithm>
#include <cmath>

#include "glfem/exceptions.hpp"

namespace glfem {

namespace {

// Quadratic Lagrange basis on [0,1] with nodes 0, 1/2, 1.
std::array<double, 3> lagrange2(double s) {
  return {2.0 * (s - 0.5) * (s - 1.0), -4.0 * s * (s - 1.0), 2.0 * s * (s - 0.5)};
}

std::array<double, 3> lagrange2_derivative(double s) {
  return {4.0 * s - 3.0, 4.0 - 8.0 * s, 4.0 * s - 1.0};
}

}  // namespace

FemField interpolate(const PointFunction& u, const Mesh& mesh, const DofMap& dofs, double time) {
  FemField field{ComplexVector(dofs.size()), time};
  for (std::size_t i = 0; i < dofs.size(); ++i) {
    const Point& p = mesh.nodes()[static_cast<std::size_t>(dofs.dof_to_node[i])];
    field.coefficients[i] = u(p.x, p.y);
  }
  return field;
}

FemField ritz_project(const PointGradient& grad_u, const Mesh& mesh, const DofMap& dofs,
                      const QuadratureRule& rule, SolverOptions options) {
  const Assembler assembler(mesh, dofs, rule);
  const SparseMatrix stiffness = assembler.stiffness();

  ComplexVector load(dofs.size());
  const double area = mesh.hx() * mesh.hy();
  const auto& elements = mesh.elements();
  for (std::size_t e = 0; e < elements.size(); ++e) {
    std::array<Complex, 4> local{};
    for (std::size_t q = 0; q < rule.size(); ++q) {
      const Point p = assembler.quadrature_point(static_cast<int>(e), q);
      const auto g = grad_u(p.x, p.y);
      const double w = rule.weights[q] * area;
      for (int a = 0; a < 4; ++a) {
        const ShapeValue s = basis_eval(a, rule.points[q][0], rule.points[q][1]);
        local[static_cast<std::size_t>(a)] +=
            w * (g[0] * (s.gradient[0] / mesh.hx()) + g[1] * (s.gradient[1] / mesh.hy()));
      }
    }
    for (std::size_t a = 0; a < 4; ++a) {
      const int dof = dofs.node_to_dof[static_cast<std::size_t>(elements[e][a])];
      if (dof != DofMap::kNoDof) {
        load[static_cast<std::size_t>(dof)] += local[a];
      }
    }
  }
  if (dofs.size() == 0) {
    return FemField{};
  }
  auto [x, report] = solve(stiffness, load, options);
  return FemField{std::move(x), 0.0};
}

Q2Reconstruction::Q2Reconstruction(const Mesh& mesh, const MacroPatchSet& patches,
                                   std::vector<std::array<Complex, 9>> nodal_values)
    : domain_(mesh.domain()),
      per_axis_(patches.per_axis),
      patch_width_(2.0 * mesh.hx()),
      patch_height_(2.0 * mesh.hy()),
      values_(std::move(nodal_values)) {
  if (values_.size() != patches.patches.size()) {
    throw InvalidArgument("Q2Reconstruction: one value set per patch required");
  }
}

ValueGradient Q2Reconstruction::evaluate_in_patch(int patch, double s, double r) const {
  const auto& v = values_[static_cast<std::size_t>(patch)];
  const auto ls = lagrange2(s);
  const auto lr = lagrange2(r);
  const auto ds = lagrange2_derivative(s);
  const auto dr = lagrange2_derivative(r);
  ValueGradient out{};
  for (std::size_t b = 0; b < 3; ++b) {
    for (std::size_t a = 0; a < 3; ++a) {
      const Complex c = v[b * 3 + a];
      out.value += c * (ls[a] * lr[b]);
      out.gradient[0] += c * (ds[a] * lr[b] / patch_width_);
      out.gradient[1] += c * (ls[a] * dr[b] / patch_height_);
    }
  }
  return out;
}

ValueGradient Q2Reconstruction::evaluate_in_element(int element, double xi, double eta) const {
  const int m = 2 * per_axis_;
  const int i = element % m;
  const int j = element / m;
  const int patch = (j / 2) * per_axis_ + (i / 2);
  return evaluate_in_patch(patch, 0.5 * ((i % 2) + xi), 0.5 * ((j % 2) + eta));
}

ValueGradient Q2Reconstruction::evaluate(double x, double y) const {
  const double sx = (x - domain_.ax) / patch_width_;
  const double sy = (y - domain_.ay) / patch_height_;
  const int pi = std::clamp(static_cast<int>(std::floor(sx)), 0, per_axis_ - 1);
  const int pj = std::clamp(static_cast<int>(std::floor(sy)), 0, per_axis_ - 1);
  return evaluate_in_patch(pj * per_axis_ + pi, sx - pi, sy - pj);
}

Q2Reconstruction postprocess(const FemField& field, const MacroPatchSet& patches, const Mesh& mesh,
                             const DofMap& dofs) {
  if (mesh.subdivisions() % 2 != 0 || patches.per_axis * 2 != mesh.subdivisions()) {
    throw UnsupportedMesh("postprocess: requires an even mesh and its macro patches");
  }
  if (field.size() != dofs.size()) {
    throw InvalidArgument("postprocess: field has wrong length");
  }
  std::vector<std::array<Complex, 9>> values(patches.patches.size());
  for (std::size_t p = 0; p < patches.patches.size(); ++p) {
    for (std::size_t k = 0; k < 9; ++k) {
      const int dof = dofs.node_to_dof[static_cast<std::size_t>(patches.patches[p].nodes[k])];
      values[p][k] = dof == DofMap::kNoDof ? Complex{} : field.coefficients[static_cast<std::size_t>(dof)];
    }
  }
  return Q2Reconstruction(mesh, patches, std::move(values));
}

}  // namespace glfem
