#include <benchmark/benchmark.h>

#include "glfem/assembly.hpp"
#include "glfem/norms.hpp"
#include "glfem/projections.hpp"
#include "glfem/solver.hpp"
#include "glfem/stepper.hpp"

namespace {

using namespace glfem;

void BM_WeightedMass(benchmark::State& state) {
  const Mesh mesh = build_uniform_mesh(static_cast<int>(state.range(0)));
  const DofMap dofs = build_dof_map(mesh);
  const Assembler asmb(mesh, dofs, gauss_legendre_square(3));
  const ProblemSpec spec = example1_spec();
  const FemField u = interpolate(spec.u0, mesh, dofs);
  for (auto _ : state) {
    const auto w = asmb.nonlinearity_weights(spec.f, u.coefficients);
    benchmark::DoNotOptimize(asmb.weighted_mass(w));
  }
}
BENCHMARK(BM_WeightedMass)->Arg(20)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);

void BM_FactorizeAndSolve(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const Mesh mesh = build_uniform_mesh(m);
  const DofMap dofs = build_dof_map(mesh);
  const SparseMatrix a = axpy_matrix(m - 0.5, assemble_mass(mesh, dofs), Complex{0.5, 0.5},
                                     assemble_stiffness(mesh, dofs));
  const ComplexVector b(dofs.size(), Complex{1.0, -1.0});
  for (auto _ : state) {
    const LinearSolver solver(a);
    benchmark::DoNotOptimize(solver.solve(b));
  }
}
BENCHMARK(BM_FactorizeAndSolve)->Arg(20)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);

void BM_NonlinearStep(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const Mesh mesh = build_uniform_mesh(m);
  StepperConfig cfg;
  cfg.tau = 1.0 / m;
  cfg.n_steps = m;
  Stepper st(example1_spec(), mesh, build_dof_map(mesh), cfg);
  const FemField u0 = st.initial_field();
  const FemField u1 = st.corrector_step(u0, st.predictor_step(u0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(st.cn_step(u1, u0, 2));
  }
}
BENCHMARK(BM_NonlinearStep)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);

void BM_PostprocessedError(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const Mesh mesh = build_uniform_mesh(m);
  const DofMap dofs = build_dof_map(mesh);
  const MacroPatchSet patches = build_macro_patches(mesh);
  const ProblemSpec spec = example1_spec();
  const FemField u = interpolate(spec.u0, mesh, dofs);
  const QuadratureRule rule = gauss_legendre_square(3);
  for (auto _ : state) {
    const Q2Reconstruction q = postprocess(u, patches, mesh, dofs);
    benchmark::DoNotOptimize(h1_error(spec.exact->value, spec.exact->gradient, q, mesh, 0.0, rule));
  }
}
BENCHMARK(BM_PostprocessedError)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
