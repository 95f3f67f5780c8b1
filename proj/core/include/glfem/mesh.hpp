#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace glfem {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

/// Axis-aligned rectangle [ax,bx] x [ay,by].
struct Rectangle {
  double ax = 0.0;
  double bx = 1.0;
  double ay = 0.0;
  double by = 1.0;

  double width() const { return bx - ax; }
  double height() const { return by - ay; }
};

/// Element nodes, counterclockwise from the lower-left corner.
using ElementNodes = std::array<int, 4>;

/// Uniform m x m partition of a rectangle into congruent rectangular cells.
///
/// Nodes are numbered lexicographically, x fastest: node (i, j) has index
/// j * (m + 1) + i and coordinates (ax + i * hx, ay + j * hy). Element (i, j)
/// has index j * m + i.
class Mesh {
 public:
  int subdivisions() const { return m_; }
  const Rectangle& domain() const { return domain_; }

  double hx() const { return hx_; }
  double hy() const { return hy_; }
  /// Mesh size h: the longer side length divided by m.
  double h() const { return hx_ > hy_ ? hx_ : hy_; }

  const std::vector<Point>& nodes() const { return nodes_; }
  const std::vector<ElementNodes>& elements() const { return elements_; }
  const std::vector<bool>& boundary_mask() const { return boundary_; }

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t element_count() const { return elements_.size(); }
  std::size_t interior_node_count() const;

  int node_index(int i, int j) const { return j * (m_ + 1) + i; }
  int element_index(int i, int j) const { return j * m_ + i; }

  /// Lower-left corner of element e.
  Point element_origin(int e) const;

  /// Element containing (x, y) together with its reference coordinates in
  /// [0,1]^2. Points on shared edges go to the element above/right; points
  /// outside the domain are clamped to the nearest element.
  struct Location {
    int element;
    double xi;
    double eta;
  };
  Location locate(double x, double y) const;

 private:
  friend Mesh build_uniform_mesh(int m, const Rectangle& domain);

  int m_ = 0;
  Rectangle domain_;
  double hx_ = 0.0;
  double hy_ = 0.0;
  std::vector<Point> nodes_;
  std::vector<ElementNodes> elements_;
  std::vector<bool> boundary_;
};

/// Throws InvalidArgument for m < 1 or a rectangle with a nonpositive side.
Mesh build_uniform_mesh(int m, const Rectangle& domain = {});

/// Interior-node numbering; boundary nodes carry no degree of freedom.
struct DofMap {
  static constexpr int kNoDof = -1;

  std::vector<int> node_to_dof;
  std::vector<int> dof_to_node;

  std::size_t size() const { return dof_to_node.size(); }
};

/// Dofs ordered lexicographically by (y, x) over interior nodes.
DofMap build_dof_map(const Mesh& mesh);

/// One 2x2 block of elements. Lattice node (a, b), a, b in {0,1,2}, sits at
/// nodes[b * 3 + a]: corners, edge midpoints and center of the patch.
struct MacroPatch {
  std::array<int, 4> elements;
  std::array<int, 9> nodes;
  Point origin;
};

struct MacroPatchSet {
  std::vector<MacroPatch> patches;
  /// patch_of_element[e] is the patch containing element e.
  std::vector<int> patch_of_element;
  /// Patches per axis (m / 2).
  int per_axis = 0;
};

/// Throws UnsupportedMesh when m is odd.
MacroPatchSet build_macro_patches(const Mesh& mesh);

}  // namespace glfem
