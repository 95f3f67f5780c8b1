#include "glfem/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "glfem/exceptions.hpp"

namespace glfem {

std::size_t Mesh::interior_node_count() const {
  return m_ < 2 ? 0 : static_cast<std::size_t>(m_ - 1) * static_cast<std::size_t>(m_ - 1);
}

Point Mesh::element_origin(int e) const {
  const int i = e % m_;
  const int j = e / m_;
  return nodes_[static_cast<std::size_t>(node_index(i, j))];
}

Mesh::Location Mesh::locate(double x, double y) const {
  const double sx = (x - domain_.ax) / hx_;
  const double sy = (y - domain_.ay) / hy_;
  const int i = std::clamp(static_cast<int>(std::floor(sx)), 0, m_ - 1);
  const int j = std::clamp(static_cast<int>(std::floor(sy)), 0, m_ - 1);
  return {element_index(i, j), sx - i, sy - j};
}

Mesh build_uniform_mesh(int m, const Rectangle& domain) {
  if (m < 1) {
    throw InvalidArgument("build_uniform_mesh: m must be >= 1, got " + std::to_string(m));
  }
  if (!(domain.width() > 0.0) || !(domain.height() > 0.0)) {
    throw InvalidArgument("build_uniform_mesh: degenerate rectangle");
  }

  Mesh mesh;
  mesh.m_ = m;
  mesh.domain_ = domain;
  mesh.hx_ = domain.width() / m;
  mesh.hy_ = domain.height() / m;

  const int n1 = m + 1;
  mesh.nodes_.resize(static_cast<std::size_t>(n1) * n1);
  mesh.boundary_.resize(mesh.nodes_.size());
  for (int j = 0; j < n1; ++j) {
    for (int i = 0; i < n1; ++i) {
      const auto k = static_cast<std::size_t>(mesh.node_index(i, j));
      const double x = domain.ax + i * (domain.width() / m);
      const double y = domain.ay + j * (domain.height() / m);
      mesh.nodes_[k] = {x, y};
      mesh.boundary_[k] = i == 0 || i == m || j == 0 || j == m;
    }
  }

  mesh.elements_.resize(static_cast<std::size_t>(m) * m);
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < m; ++i) {
      mesh.elements_[static_cast<std::size_t>(mesh.element_index(i, j))] = {
          mesh.node_index(i, j), mesh.node_index(i + 1, j), mesh.node_index(i + 1, j + 1),
          mesh.node_index(i, j + 1)};
    }
  }
  return mesh;
}

DofMap build_dof_map(const Mesh& mesh) {
  DofMap dofs;
  dofs.node_to_dof.assign(mesh.node_count(), DofMap::kNoDof);
  dofs.dof_to_node.reserve(mesh.interior_node_count());
  const auto& boundary = mesh.boundary_mask();
  // Node numbering is already (y, x) lexicographic.
  for (std::size_t k = 0; k < mesh.node_count(); ++k) {
    if (!boundary[k]) {
      dofs.node_to_dof[k] = static_cast<int>(dofs.dof_to_node.size());
      dofs.dof_to_node.push_back(static_cast<int>(k));
    }
  }
  return dofs;
}

MacroPatchSet build_macro_patches(const Mesh& mesh) {
  const int m = mesh.subdivisions();
  if (m % 2 != 0) {
    throw UnsupportedMesh("build_macro_patches: m must be even, got " + std::to_string(m));
  }
  MacroPatchSet set;
  set.per_axis = m / 2;
  set.patches.reserve(static_cast<std::size_t>(set.per_axis) * set.per_axis);
  set.patch_of_element.assign(mesh.element_count(), -1);

  for (int pj = 0; pj < set.per_axis; ++pj) {
    for (int pi = 0; pi < set.per_axis; ++pi) {
      const int i0 = 2 * pi;
      const int j0 = 2 * pj;
      MacroPatch patch{};
      patch.elements = {mesh.element_index(i0, j0), mesh.element_index(i0 + 1, j0),
                        mesh.element_index(i0, j0 + 1), mesh.element_index(i0 + 1, j0 + 1)};
      for (int b = 0; b < 3; ++b) {
        for (int a = 0; a < 3; ++a) {
          patch.nodes[static_cast<std::size_t>(b * 3 + a)] = mesh.node_index(i0 + a, j0 + b);
        }
      }
      patch.origin = mesh.nodes()[static_cast<std::size_t>(mesh.node_index(i0, j0))];
      const int index = static_cast<int>(set.patches.size());
      for (const int e : patch.elements) {
        set.patch_of_element[static_cast<std::size_t>(e)] = index;
      }
      set.patches.push_back(patch);
    }
  }
  return set;
}

}  // namespace glfem
