#include "glfem/field.hpp"

#include "glfem/assembly.hpp"

namespace glfem {

ValueGradient evaluate_in_element(const Mesh& mesh, const DofMap& dofs,
                                  std::span<const Complex> coefficients, int element, double xi,
                                  double eta) {
  const auto& nodes = mesh.elements()[static_cast<std::size_t>(element)];
  ValueGradient out{};
  for (int a = 0; a < 4; ++a) {
    const int dof = dofs.node_to_dof[static_cast<std::size_t>(nodes[static_cast<std::size_t>(a)])];
    if (dof == DofMap::kNoDof) continue;
    const Complex c = coefficients[static_cast<std::size_t>(dof)];
    const ShapeValue s = basis_eval(a, xi, eta);
    out.value += c * s.value;
    out.gradient[0] += c * (s.gradient[0] / mesh.hx());
    out.gradient[1] += c * (s.gradient[1] / mesh.hy());
  }
  return out;
}

ValueGradient evaluate_field(const Mesh& mesh, const DofMap& dofs,
                             std::span<const Complex> coefficients, double x, double y) {
  const Mesh::Location loc = mesh.locate(x, y);
  return evaluate_in_element(mesh, dofs, coefficients, loc.element, loc.xi, loc.eta);
}

}  // namespace glfem
