// Acceptance suite: one [PASS]/[FAIL] line per criterion.
//
//   glfem_acceptance                 run every criterion
//   glfem_acceptance --criterion N   run criterion N only

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "glfem/assembly.hpp"
#include "glfem/config.hpp"
#include "glfem/csv.hpp"
#include "glfem/norms.hpp"
#include "glfem/problem.hpp"
#include "glfem/projections.hpp"
#include "glfem/stepper.hpp"
#include "glfem/study.hpp"

using namespace glfem;

namespace {

struct Reference {
  double h1;
  double superclose;
  double post;
  // Orders are NaN for the coarsest size.
  double h1_order;
  double superclose_order;
  double post_order;
};

constexpr double kNone = std::numeric_limits<double>::quiet_NaN();
constexpr int kSizes[4] = {10, 20, 40, 80};
constexpr double kTimes[4] = {0.25, 0.5, 0.75, 1.0};

// Reference values indexed [time][size].
const Reference kReference[4][4] = {
    {{5.2551e-02, 8.4988e-03, 1.0060e-01, kNone, kNone, kNone},
     {2.6409e-02, 2.8420e-03, 3.8516e-02, 0.9927, 1.5803, 1.3852},
     {1.3189e-02, 5.8402e-04, 9.9039e-03, 1.0016, 2.2828, 1.9594},
     {6.5963e-03, 1.4682e-04, 2.4934e-03, 0.9997, 1.9920, 1.9899}},
    {{5.2622e-02, 8.8880e-03, 1.0004e-01, kNone, kNone, kNone},
     {2.6354e-02, 2.2875e-03, 3.8475e-02, 0.9976, 1.9581, 1.3785},
     {1.3189e-02, 5.8464e-04, 9.9050e-03, 0.9986, 1.9682, 1.9577},
     {6.5963e-03, 1.4696e-04, 2.4934e-03, 0.9997, 1.9922, 1.9900}},
    {{5.2750e-02, 9.5904e-03, 1.0008e-01, kNone, kNone, kNone},
     {2.6408e-02, 2.8374e-03, 3.8498e-02, 0.9982, 1.7570, 1.3783},
     {1.3189e-02, 5.8462e-04, 9.9045e-03, 1.0016, 2.2790, 1.9586},
     {6.5963e-03, 1.4695e-04, 2.4934e-03, 0.9997, 1.9921, 1.9900}},
    {{5.2530e-02, 8.3490e-03, 9.9952e-02, kNone, kNone, kNone},
     {2.6354e-02, 2.2877e-03, 3.8481e-02, 0.9951, 1.8677, 1.3771},
     {1.3189e-02, 5.8462e-04, 9.9047e-03, 0.9986, 1.9683, 1.9580},
     {6.5963e-03, 1.4695e-04, 2.4934e-03, 0.9997, 1.9921, 1.9900}},
};

constexpr int kStabilityK[4] = {1, 5, 10, 20};
// [time][k]
constexpr double kStability[4][4] = {
    {6.5963e-03, 6.5969e-03, 9.5227e-03, 3.4159e-02},
    {6.5963e-03, 6.5968e-03, 7.3813e-03, 2.6816e-02},
    {6.5963e-03, 6.5969e-03, 6.8870e-03, 2.1424e-02},
    {6.5963e-03, 6.5968e-03, 6.7265e-03, 1.8086e-02},
};

constexpr double kValueTol = 0.05;
constexpr double kOrderTol = 0.1;
constexpr double kStabilityTol = 0.10;
constexpr double kAgreementTol = 1e-3;

/// Tallies checks and prints the failing ones.
class Checker {
 public:
  void value(const std::string& what, std::optional<double> got, double want, double rel_tol) {
    ++total_;
    if (!got) {
      fail(what + ": not computed (time not on the step grid), reference " + fmt(want));
      return;
    }
    const double rel = std::abs(*got - want) / std::abs(want);
    if (!(rel <= rel_tol)) {
      fail(what + ": got " + fmt(*got) + ", reference " + fmt(want) + ", relative deviation " +
           fmt(rel));
    }
  }

  void order(const std::string& what, std::optional<double> got, double want, double abs_tol) {
    ++total_;
    if (!got) {
      fail(what + ": no order (no coarser size at this time), reference " + fmt(want));
      return;
    }
    if (!(std::abs(*got - want) <= abs_tol)) {
      fail(what + ": got " + fmt(*got) + ", reference " + fmt(want));
    }
  }

  void require(const std::string& what, bool ok, const std::string& detail = {}) {
    ++total_;
    if (!ok) fail(what + (detail.empty() ? "" : ": " + detail));
  }

  void note(const std::string& line) { lines_.push_back("    " + line); }

  bool passed() const { return failed_ == 0; }
  const std::vector<std::string>& lines() const { return lines_; }
  std::string summary() const {
    return std::to_string(total_ - failed_) + "/" + std::to_string(total_) + " checks";
  }

  static std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4e", v);
    return buf;
  }

 private:
  void fail(const std::string& line) {
    ++failed_;
    lines_.push_back("  x " + line);
  }

  int total_ = 0;
  int failed_ = 0;
  std::vector<std::string> lines_;
};

StudyConfig table_config() {
  StudyConfig c;
  c.sizes = {10, 20, 40, 80};
  c.snapshots = {0.25, 0.5, 0.75, 1.0};
  // tau = 1/10 cannot reach t = 0.25 or 0.75; those cells are reported missing.
  c.off_grid = OffGridPolicy::skip;
  return c;
}

const ErrorReport& table_report() {
  static const ErrorReport report = run_convergence_study(table_config());
  return report;
}

std::optional<double> cell(const ErrorRow* row, std::optional<double> ErrorRow::*member) {
  return row ? row->*member : std::nullopt;
}

void check_table(Checker& c, int ti) {
  const ErrorReport& r = table_report();
  char label[64];
  for (int si = 0; si < 4; ++si) {
    const ErrorRow* row = r.find(kTimes[ti], kSizes[si]);
    const Reference& ref = kReference[ti][si];
    std::snprintf(label, sizeof label, "t=%.2f M=%d", kTimes[ti], kSizes[si]);
    const std::string at = label;
    c.value(at + " h1", row ? std::optional(row->h1_error) : std::nullopt, ref.h1, kValueTol);
    c.value(at + " superclose", row ? std::optional(row->superclose) : std::nullopt,
            ref.superclose, kValueTol);
    c.value(at + " postprocessed", row ? row->postprocessed : std::nullopt, ref.post, kValueTol);
    if (si > 0) {
      c.order(at + " h1 order", cell(row, &ErrorRow::h1_order), ref.h1_order, kOrderTol);
      c.order(at + " superclose order", cell(row, &ErrorRow::superclose_order),
              ref.superclose_order, kOrderTol);
      c.order(at + " postprocessed order", cell(row, &ErrorRow::post_order), ref.post_order,
              kOrderTol);
    }
  }
}

bool criterion_first_time(Checker& c) {
  check_table(c, 0);
  return c.passed();
}

bool criterion_later_times(Checker& c) {
  for (int ti = 1; ti < 4; ++ti) check_table(c, ti);
  return c.passed();
}

bool criterion_stability(Checker& c) {
  StudyConfig cfg;
  cfg.sizes = {80};
  cfg.tau_rule = TauRule::kh;
  cfg.k = {1, 5, 10, 20};
  cfg.snapshots = {0.25, 0.5, 0.75, 1.0};
  const ErrorReport r = run_stability_study(cfg);
  char label[64];
  for (int ti = 0; ti < 4; ++ti) {
    std::optional<double> got[4];
    for (int ki = 0; ki < 4; ++ki) {
      const ErrorRow* row = r.find_tau(kTimes[ti], kStabilityK[ki] / 80.0);
      if (row) got[ki] = row->h1_error;
      std::snprintf(label, sizeof label, "t=%.2f k=%d", kTimes[ti], kStabilityK[ki]);
      c.value(label, got[ki], kStability[ti][ki], kStabilityTol);
    }
    std::snprintf(label, sizeof label, "t=%.2f k=1 vs k=5", kTimes[ti]);
    const double rel = got[0] && got[1] ? std::abs(*got[0] - *got[1]) / *got[0] : kNone;
    c.require(label, rel <= kAgreementTol, "relative difference " + Checker::fmt(rel));
    if (rel <= kAgreementTol) {
      c.note(std::string(label) + " agree: relative difference " + Checker::fmt(rel));
    }
  }
  return c.passed();
}

bool criterion_superconvergence(Checker& c) {
  const ErrorReport& r = table_report();
  char label[64];
  for (const double t : kTimes) {
    const ErrorRow* row = r.find(t, 80);
    std::snprintf(label, sizeof label, "t=%.2f", t);
    const auto sc = cell(row, &ErrorRow::superclose_order);
    const auto po = cell(row, &ErrorRow::post_order);
    c.require(std::string(label) + " superclose order 40->80 >= 1.9", sc && *sc >= 1.9,
              sc ? Checker::fmt(*sc) : "missing");
    c.require(std::string(label) + " postprocessed order 40->80 >= 1.9", po && *po >= 1.9,
              po ? Checker::fmt(*po) : "missing");
    if (sc && po) {
      c.note(std::string(label) + ": superclose order " + Checker::fmt(*sc) +
             ", postprocessed order " + Checker::fmt(*po));
    }
  }
  return c.passed();
}

bool criterion_projection_rates(Checker& c) {
  const ProblemSpec spec = example1_spec();
  const QuadratureRule rule = gauss_legendre_square(3);
  const auto u = [&](double x, double y) { return eval_exact(spec, x, y, 0.0); };
  const PointGradient grad = [&](double x, double y) { return eval_exact_gradient(spec, x, y, 0.0); };
  std::vector<double> l2;
  std::vector<double> super;
  const int sizes[] = {8, 16, 32, 64};
  for (const int m : sizes) {
    const Mesh mesh = build_uniform_mesh(m);
    const DofMap dofs = build_dof_map(mesh);
    const FemField ritz = ritz_project(grad, mesh, dofs, rule);
    const FemField interp = interpolate(u, mesh, dofs);
    const ErrorNorms n = error_norms(
        spec.exact->value, spec.exact->gradient, 0.0, mesh,
        [&](int e, double xi, double eta) {
          return evaluate_in_element(mesh, dofs, ritz.coefficients, e, xi, eta);
        },
        rule);
    l2.push_back(n.l2);
    super.push_back(h1_distance(mesh, dofs, interp.coefficients, ritz.coefficients));
  }
  char label[96];
  for (std::size_t i = 1; i < l2.size(); ++i) {
    const double o1 = convergence_order(l2[i - 1], l2[i]);
    const double o2 = convergence_order(super[i - 1], super[i]);
    std::snprintf(label, sizeof label, "m=%d->%d ||u-R_h u||_0 order %.4f", sizes[i - 1], sizes[i], o1);
    c.require(label, std::abs(o1 - 2.0) <= 0.1);
    c.note(label);
    std::snprintf(label, sizeof label, "m=%d->%d ||I_h u-R_h u||_1 order %.4f", sizes[i - 1],
                  sizes[i], o2);
    c.require(label, std::abs(o2 - 2.0) <= 0.15);
    c.note(label);
  }
  return c.passed();
}

double dense_fd_source_residual(const ProblemSpec& spec) {
  const double d = 1e-4;
  const Complex nu{spec.nu, spec.eta};
  const Complex ka{spec.kappa, spec.zeta};
  const auto u = [](double x, double y, double t) {
    return std::exp(Complex{0.0, t - 2 * x - 2 * y}) * x * y * (1 - x) * (1 - y);
  };
  double worst = 0.0;
  for (int k = 0; k < 3; ++k) {
    for (int i = 1; i <= 5; ++i) {
      for (int j = 1; j <= 5; ++j) {
        const double t = 0.5 * k;
        const double x = i / 6.0;
        const double y = j / 6.0;
        const Complex v = u(x, y, t);
        const Complex ut = (u(x, y, t + d) - u(x, y, t - d)) / (2 * d);
        const Complex lap =
            (u(x + d, y, t) + u(x - d, y, t) + u(x, y + d, t) + u(x, y - d, t) - 4.0 * v) / (d * d);
        const Complex g = ut - nu * lap + ka * spec.f(std::norm(v)) * v - spec.gamma * v;
        worst = std::max(worst, std::abs(spec.source(x, y, t) - g));
      }
    }
  }
  return worst;
}

bool criterion_oracle_suite(Checker& c) {
  const auto start = std::chrono::steady_clock::now();

  // Element matrices against a 3x3 Gauss evaluation of the shape products.
  {
    double worst = 0.0;
    const GaussLine g = gauss_legendre_line(3);
    for (const auto& [hx, hy] : {std::pair{0.1, 0.1}, std::pair{0.3, 0.05}, std::pair{1.0, 2.0}}) {
      const ElementMatrices em = element_matrices(hx, hy);
      for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
          double m = 0.0;
          double k = 0.0;
          for (int p = 0; p < 3; ++p) {
            for (int q = 0; q < 3; ++q) {
              const double xi = g.nodes[static_cast<std::size_t>(p)];
              const double eta = g.nodes[static_cast<std::size_t>(q)];
              const double w =
                  g.weights[static_cast<std::size_t>(p)] * g.weights[static_cast<std::size_t>(q)] * hx * hy;
              const ShapeValue sa = basis_eval(a, xi, eta);
              const ShapeValue sb = basis_eval(b, xi, eta);
              m += w * sa.value * sb.value;
              k += w * (sa.gradient[0] * sb.gradient[0] / (hx * hx) +
                        sa.gradient[1] * sb.gradient[1] / (hy * hy));
            }
          }
          worst = std::max({worst, std::abs(m - em.mass[a][b]), std::abs(k - em.stiffness[a][b])});
        }
      }
    }
    const ElementMatrices sq = element_matrices(0.1, 0.1);
    worst = std::max({worst, std::abs(sq.mass[0][0] - 0.01 / 9), std::abs(sq.mass[0][1] - 0.01 / 18),
                      std::abs(sq.mass[0][2] - 0.01 / 36), std::abs(sq.stiffness[0][0] - 2.0 / 3),
                      std::abs(sq.stiffness[0][1] + 1.0 / 6), std::abs(sq.stiffness[0][2] + 1.0 / 3)});
    c.require("element matrices vs analytic", worst <= 1e-13, Checker::fmt(worst));
    c.note("element matrices: max deviation " + Checker::fmt(worst));
  }

  ProblemSpec heat;
  heat.nu = 1.0;
  heat.eta = 0.0;
  heat.kappa = 0.0;
  heat.zeta = 0.0;
  heat.gamma = 0.0;
  heat.u0 = [](double, double) { return Complex{1.0, 0.0}; };

  // Scalar linear step.
  {
    const Mesh mesh = build_uniform_mesh(2);
    StepperConfig cfg;
    cfg.tau = 0.5;
    cfg.n_steps = 1;
    Stepper st(heat, mesh, build_dof_map(mesh), cfg);
    const FemField u0 = st.initial_field();
    const FemField u1 = st.corrector_step(u0, st.predictor_step(u0));
    const double dev = std::abs(u1.coefficients[0] - Complex(-5.0 / 7.0));
    c.require("m=2 linear step equals -5/7", dev <= 1e-12, Checker::fmt(dev));
    c.note("m=2 linear step: deviation from -5/7 " + Checker::fmt(dev));
  }

  // Manufactured source against finite differences.
  {
    const double res = dense_fd_source_residual(example1_spec());
    c.require("manufactured source vs finite differences", res < 1e-6, Checker::fmt(res));
    c.note("manufactured source: max residual " + Checker::fmt(res));
  }

  // Mass-norm decay in the homogeneous linear case.
  {
    int violations = 0;
    int steps = 0;
    for (const double eta : {0.0, 2.0}) {
      ProblemSpec spec = heat;
      spec.eta = eta;
      spec.u0 = [](double x, double y) { return Complex{std::sin(5 * x) * y, x * (1 - y)}; };
      const Mesh mesh = build_uniform_mesh(10);
      StepperConfig cfg;
      cfg.tau = 0.05;
      cfg.n_steps = 20;
      Stepper st(spec, mesh, build_dof_map(mesh), cfg);
      double last = std::numeric_limits<double>::infinity();
      st.run({}, [&](const FemField& f) {
        const ComplexVector mu = matvec(st.mass(), f.coefficients);
        Complex s{};
        for (std::size_t i = 0; i < mu.size(); ++i) s += std::conj(f.coefficients[i]) * mu[i];
        const double norm = std::sqrt(s.real());
        if (norm > last * (1.0 + 1e-14)) ++violations;
        last = norm;
        ++steps;
      });
    }
    c.require("mass norm non-increasing", violations == 0,
              std::to_string(violations) + " increases");
    c.note("mass norm: " + std::to_string(steps) + " states, " + std::to_string(violations) +
           " increases");
  }

  // Biquadratic reproduction by the macro-patch postprocessing.
  {
    const auto q = [](double x, double y) {
      return Complex{x * x * y - 3 * x * y * y + 0.5, x * x * y * y - y};
    };
    const Mesh mesh = build_uniform_mesh(8);
    const DofMap dofs = build_dof_map(mesh);
    const MacroPatchSet patches = build_macro_patches(mesh);
    // Boundary values are not stored in a field, so build the patch data directly.
    std::vector<std::array<Complex, 9>> values(patches.patches.size());
    for (std::size_t p = 0; p < values.size(); ++p) {
      for (std::size_t k = 0; k < 9; ++k) {
        const Point pt = mesh.nodes()[static_cast<std::size_t>(patches.patches[p].nodes[k])];
        values[p][k] = q(pt.x, pt.y);
      }
    }
    const Q2Reconstruction rec(mesh, patches, std::move(values));
    double worst = 0.0;
    for (int i = 0; i <= 20; ++i) {
      for (int j = 0; j <= 20; ++j) {
        const double x = i / 20.0;
        const double y = j / 20.0;
        worst = std::max(worst, std::abs(rec.evaluate(x, y).value - q(x, y)));
      }
    }
    c.require("postprocessing reproduces biquadratics", worst <= 1e-12, Checker::fmt(worst));
    c.note("biquadratic reproduction: max deviation " + Checker::fmt(worst));
  }

  // Solver residual at every step of a nonlinear run.
  {
    const ProblemSpec spec = example1_spec();
    const Mesh mesh = build_uniform_mesh(40);
    StepperConfig cfg;
    cfg.tau = 1.0 / 40;
    cfg.n_steps = 40;
    Stepper st(spec, mesh, build_dof_map(mesh), cfg);
    st.run({});
    double worst = 0.0;
    for (const SolveReport& r : st.solve_reports()) worst = std::max(worst, r.relative_residual);
    c.require("solver residual <= 1e-10 every step", worst <= 1e-10, Checker::fmt(worst));
    c.note("solver residual: worst " + Checker::fmt(worst) + " over " +
           std::to_string(st.solve_reports().size()) + " solves");
  }

  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.require("oracle suite under 10 s", seconds < 10.0, Checker::fmt(seconds) + " s");
  c.note("elapsed " + Checker::fmt(seconds) + " s");
  return c.passed();
}

bool criterion_determinism(Checker& c) {
  StudyConfig cfg = table_config();
  cfg.snapshots = {0.25};
  const std::string a = format_csv(run_convergence_study(cfg));
  const std::string b = format_csv(run_convergence_study(cfg));
  c.require("identical CSV across runs", a == b);
  c.note(std::to_string(a.size()) + " bytes per run");
  return c.passed();
}

struct Criterion {
  int id;
  const char* name;
  std::function<bool(Checker&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "Reference errors at t=0.25, tau=h", criterion_first_time},
      {2, "Reference errors at t=0.5, 0.75, 1.0, tau=h", criterion_later_times},
      {3, "Reference stability sweep (h=1/80, k=1,5,10,20)", criterion_stability},
      {4, "Superconvergence orders >= 1.9 on 40->80", criterion_superconvergence},
      {5, "Ritz projection rates", criterion_projection_rates},
      {6, "Oracle suite", criterion_oracle_suite},
      {7, "Byte-identical CSV", criterion_determinism},
  };

  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
      return 2;
    }
  }

  bool all = true;
  bool ran = false;
  for (const Criterion& cr : criteria) {
    if (only != 0 && cr.id != only) continue;
    ran = true;
    Checker checker;
    bool ok = false;
    std::string error;
    try {
      ok = cr.run(checker);
    } catch (const std::exception& e) {
      error = e.what();
    }
    std::printf("[%s] C%d %s (%s)%s%s\n", ok ? "PASS" : "FAIL", cr.id, cr.name,
                checker.summary().c_str(), error.empty() ? "" : ": ", error.c_str());
    for (const std::string& line : checker.lines()) std::printf("%s\n", line.c_str());
    std::fflush(stdout);
    all = all && ok;
  }
  if (!ran) {
    std::fprintf(stderr, "no criterion %d\n", only);
    return 2;
  }
  return all ? 0 : 1;
}
