#include "glfem/assembly.hpp"

#include <cmath>
#include <string>

#include "glfem/exceptions.hpp"

namespace glfem {

namespace {

// Reference corner of each local node.
constexpr std::array<std::array<int, 2>, 4> kCorner = {{{0, 0}, {1, 0}, {1, 1}, {0, 1}}};

}  // namespace

ShapeValue basis_eval(int local_index, double xi, double eta) {
  if (local_index < 0 || local_index > 3) {
    throw InvalidArgument("basis_eval: local index must be in 0..3, got " +
                          std::to_string(local_index));
  }
  const auto& c = kCorner[static_cast<std::size_t>(local_index)];
  // 1D factors: l0(s) = 1 - s, l1(s) = s.
  const double fx = c[0] == 0 ? 1.0 - xi : xi;
  const double fy = c[1] == 0 ? 1.0 - eta : eta;
  const double dx = c[0] == 0 ? -1.0 : 1.0;
  const double dy = c[1] == 0 ? -1.0 : 1.0;
  return {fx * fy, {dx * fy, fx * dy}};
}

ElementMatrices element_matrices(double hx, double hy) {
  if (!(hx > 0.0) || !(hy > 0.0)) {
    throw InvalidArgument("element_matrices: element sizes must be positive");
  }
  // Tensor products of the 1D P1 matrices: mass h/6 [2 1; 1 2],
  // stiffness 1/h [1 -1; -1 1].
  constexpr double m1[2][2] = {{2.0 / 6.0, 1.0 / 6.0}, {1.0 / 6.0, 2.0 / 6.0}};
  constexpr double k1[2][2] = {{1.0, -1.0}, {-1.0, 1.0}};
  ElementMatrices em{};
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) {
      const auto ax = static_cast<std::size_t>(kCorner[a][0]);
      const auto ay = static_cast<std::size_t>(kCorner[a][1]);
      const auto bx = static_cast<std::size_t>(kCorner[b][0]);
      const auto by = static_cast<std::size_t>(kCorner[b][1]);
      em.mass[a][b] = hx * hy * m1[ax][bx] * m1[ay][by];
      em.stiffness[a][b] = (hy / hx) * k1[ax][bx] * m1[ay][by] + (hx / hy) * m1[ax][bx] * k1[ay][by];
    }
  }
  return em;
}

Assembler::Assembler(Mesh mesh, DofMap dofs, QuadratureRule rule)
    : mesh_(std::move(mesh)), dofs_(std::move(dofs)), rule_(std::move(rule)) {
  const int n = static_cast<int>(dofs_.size());
  const auto& elements = mesh_.elements();

  TripletBuilder builder(n);
  builder.reserve(elements.size() * 16);
  for (const auto& nodes : elements) {
    for (const int na : nodes) {
      const int ia = dofs_.node_to_dof[static_cast<std::size_t>(na)];
      if (ia == DofMap::kNoDof) continue;
      for (const int nb : nodes) {
        const int ib = dofs_.node_to_dof[static_cast<std::size_t>(nb)];
        if (ib == DofMap::kNoDof) continue;
        builder.add(ia, ib, Complex{});
      }
    }
  }
  pattern_ = builder.build();

  scatter_.resize(elements.size());
  for (std::size_t e = 0; e < elements.size(); ++e) {
    for (std::size_t a = 0; a < 4; ++a) {
      const int ia = dofs_.node_to_dof[static_cast<std::size_t>(elements[e][a])];
      for (std::size_t b = 0; b < 4; ++b) {
        const int ib = dofs_.node_to_dof[static_cast<std::size_t>(elements[e][b])];
        scatter_[e][a * 4 + b] =
            (ia == DofMap::kNoDof || ib == DofMap::kNoDof) ? -1 : pattern_.find(ia, ib);
      }
    }
  }

  shape_.resize(rule_.size());
  for (std::size_t q = 0; q < rule_.size(); ++q) {
    for (int a = 0; a < 4; ++a) {
      shape_[q][static_cast<std::size_t>(a)] =
          basis_eval(a, rule_.points[q][0], rule_.points[q][1]).value;
    }
  }
}

SparseMatrix Assembler::from_local(const LocalMatrix& local) const {
  SparseMatrix out = pattern_;
  auto values = out.values();
  for (const auto& map : scatter_) {
    for (std::size_t ab = 0; ab < 16; ++ab) {
      if (map[ab] >= 0) {
        values[static_cast<std::size_t>(map[ab])] += local[ab / 4][ab % 4];
      }
    }
  }
  return out;
}

SparseMatrix Assembler::mass() const {
  return from_local(element_matrices(mesh_.hx(), mesh_.hy()).mass);
}

SparseMatrix Assembler::stiffness() const {
  return from_local(element_matrices(mesh_.hx(), mesh_.hy()).stiffness);
}

SparseMatrix Assembler::weighted_mass(std::span<const double> weights) const {
  const std::size_t nq = rule_.size();
  if (weights.size() != scatter_.size() * nq) {
    throw InvalidArgument("weighted_mass: expected one weight per element quadrature point");
  }
  const double area = mesh_.hx() * mesh_.hy();
  SparseMatrix out = pattern_;
  auto values = out.values();
  for (std::size_t e = 0; e < scatter_.size(); ++e) {
    LocalMatrix local{};
    for (std::size_t q = 0; q < nq; ++q) {
      const double w = weights[e * nq + q] * rule_.weights[q] * area;
      const auto& s = shape_[q];
      for (std::size_t a = 0; a < 4; ++a) {
        for (std::size_t b = 0; b < 4; ++b) {
          local[a][b] += w * s[a] * s[b];
        }
      }
    }
    for (std::size_t ab = 0; ab < 16; ++ab) {
      if (scatter_[e][ab] >= 0) {
        values[static_cast<std::size_t>(scatter_[e][ab])] += local[ab / 4][ab % 4];
      }
    }
  }
  return out;
}

void Assembler::check_length(std::span<const Complex> v, const char* what) const {
  if (v.size() != dofs_.size()) {
    throw InvalidArgument(std::string(what) + ": coefficient list has length " +
                          std::to_string(v.size()) + ", expected " +
                          std::to_string(dofs_.size()));
  }
}

std::array<Complex, 4> Assembler::gather(std::span<const Complex> coefficients,
                                         int element) const {
  std::array<Complex, 4> local{};
  const auto& nodes = mesh_.elements()[static_cast<std::size_t>(element)];
  for (std::size_t a = 0; a < 4; ++a) {
    const int dof = dofs_.node_to_dof[static_cast<std::size_t>(nodes[a])];
    if (dof != DofMap::kNoDof) {
      local[a] = coefficients[static_cast<std::size_t>(dof)];
    }
  }
  return local;
}

Point Assembler::quadrature_point(int element, std::size_t q) const {
  const Point o = mesh_.element_origin(element);
  return {o.x + mesh_.hx() * rule_.points[q][0], o.y + mesh_.hy() * rule_.points[q][1]};
}

std::vector<double> Assembler::nonlinearity_weights(const RealFunction& f,
                                                    std::span<const Complex> coefficients) const {
  check_length(coefficients, "nonlinearity_weights");
  const std::size_t nq = rule_.size();
  std::vector<double> weights(scatter_.size() * nq);
  for (std::size_t e = 0; e < scatter_.size(); ++e) {
    const auto local = gather(coefficients, static_cast<int>(e));
    for (std::size_t q = 0; q < nq; ++q) {
      Complex u{};
      for (std::size_t a = 0; a < 4; ++a) {
        u += shape_[q][a] * local[a];
      }
      weights[e * nq + q] = f(std::norm(u));
    }
  }
  return weights;
}

ComplexVector Assembler::function_load(const PointFunction& w) const {
  ComplexVector load(dofs_.size());
  const double area = mesh_.hx() * mesh_.hy();
  const auto& elements = mesh_.elements();
  for (std::size_t e = 0; e < elements.size(); ++e) {
    std::array<Complex, 4> local{};
    for (std::size_t q = 0; q < rule_.size(); ++q) {
      const Point p = quadrature_point(static_cast<int>(e), q);
      const Complex wq = w(p.x, p.y) * (rule_.weights[q] * area);
      for (std::size_t a = 0; a < 4; ++a) {
        local[a] += wq * shape_[q][a];
      }
    }
    for (std::size_t a = 0; a < 4; ++a) {
      const int dof = dofs_.node_to_dof[static_cast<std::size_t>(elements[e][a])];
      if (dof != DofMap::kNoDof) {
        load[static_cast<std::size_t>(dof)] += local[a];
      }
    }
  }
  return load;
}

ComplexVector Assembler::nonlinear_load(const RealFunction& f, std::span<const Complex> u_hat,
                                        std::span<const Complex> u_tilde) const {
  check_length(u_hat, "nonlinear_load");
  check_length(u_tilde, "nonlinear_load");
  ComplexVector load(dofs_.size());
  const double area = mesh_.hx() * mesh_.hy();
  const auto& elements = mesh_.elements();
  for (std::size_t e = 0; e < elements.size(); ++e) {
    const auto hat = gather(u_hat, static_cast<int>(e));
    const auto tilde = gather(u_tilde, static_cast<int>(e));
    std::array<Complex, 4> local{};
    for (std::size_t q = 0; q < rule_.size(); ++q) {
      Complex uh{};
      Complex ut{};
      for (std::size_t a = 0; a < 4; ++a) {
        uh += shape_[q][a] * hat[a];
        ut += shape_[q][a] * tilde[a];
      }
      const Complex wq = f(std::norm(uh)) * ut * (rule_.weights[q] * area);
      for (std::size_t a = 0; a < 4; ++a) {
        local[a] += wq * shape_[q][a];
      }
    }
    for (std::size_t a = 0; a < 4; ++a) {
      const int dof = dofs_.node_to_dof[static_cast<std::size_t>(elements[e][a])];
      if (dof != DofMap::kNoDof) {
        load[static_cast<std::size_t>(dof)] += local[a];
      }
    }
  }
  return load;
}

SparseMatrix assemble_mass(const Mesh& mesh, const DofMap& dofs) {
  return Assembler(mesh, dofs, gauss_legendre_square(1)).mass();
}

SparseMatrix assemble_stiffness(const Mesh& mesh, const DofMap& dofs) {
  return Assembler(mesh, dofs, gauss_legendre_square(1)).stiffness();
}

ComplexVector assemble_function_load(const Mesh& mesh, const DofMap& dofs, const PointFunction& w,
                                     const QuadratureRule& rule) {
  return Assembler(mesh, dofs, rule).function_load(w);
}

ComplexVector assemble_nonlinear_load(const Mesh& mesh, const DofMap& dofs, const RealFunction& f,
                                      std::span<const Complex> u_hat,
                                      std::span<const Complex> u_tilde,
                                      const QuadratureRule& rule) {
  return Assembler(mesh, dofs, rule).nonlinear_load(f, u_hat, u_tilde);
}

}  // namespace glfem
