#include "swgf/cases.hpp"

#include <cmath>

namespace swgf {

namespace {

ScalarFn sine_bump(double scale) {
  return [scale](double x) {
    double s = x - 12.5;
    return scale * std::sin(s) * std::exp(1.0 - s * s);
  };
}

ScalarFn sine_bump_slope(double scale) {
  return [scale](double x) {
    double s = x - 12.5;
    return scale * std::exp(1.0 - s * s) * (std::cos(s) - 2.0 * s * std::sin(s));
  };
}

double trans_bump(double x) {
  double z = (x - 10.0) / 5.0;
  double w = 1.0 - z * z;
  if (w <= 0.0) return 0.0;
  return 0.2 * std::exp(1.0 - 1.0 / w);
}

double trans_bump_slope(double x) {
  double z = (x - 10.0) / 5.0;
  double w = 1.0 - z * z;
  if (w <= 0.0) return 0.0;
  return 0.2 * std::exp(1.0 - 1.0 / w) * (-2.0 * z / (5.0 * w * w));
}

double step_bottom(double x) { return (x > 8.0 && x < 12.0) ? 0.2 : 0.0; }

// Boundary-determined invariants of the frictionless steady flows: the
// Bernoulli head from the Dirichlet data at a flat-bottom boundary and the
// momentum global-flux value there (where the source integral vanishes).
void set_steady_invariants(CaseSpec& cs, double h_b, double q_b) {
  const double g = cs.params.g;
  cs.q0 = q_b;
  cs.upsilon0 = q_b * q_b / (2.0 * h_b * h_b) + g * h_b;
  cs.K0 = q_b * q_b / h_b + 0.5 * g * h_b * h_b;
}

std::vector<CaseSpec> build_catalog() {
  std::vector<CaseSpec> list;

  {
    CaseSpec c;
    c.name = "lake_at_rest";
    c.description = "still water over a damped sinusoidal bump";
    c.params.g = 1.0;
    c.t_end = 1.0;
    c.b_fn = sine_bump(0.05);
    c.db_fn = sine_bump_slope(0.05);
    c.eta0 = 1.0;
    c.bc_left = {BcKind::equilibrium, 0, 0};
    c.bc_right = {BcKind::equilibrium, 0, 0};
    c.reference = ReferenceKind::lake_at_rest;
    c.branch = FlowBranch::still;
    list.push_back(c);
  }
  {
    CaseSpec c;
    c.name = "lar_perturbed";
    c.description = "small surface bump over still water, taller bottom";
    c.params.g = 9.8;
    c.t_end = 1.5;
    c.b_fn = sine_bump(0.5);
    c.db_fn = sine_bump_slope(0.5);
    c.eta0 = 1.0;
    c.pert_alpha = 1e-4;
    c.eta_perturbation = [](double x) { return 1e-4 * perturbation_profile(x); };
    c.bc_left = {BcKind::equilibrium, 0, 0};
    c.bc_right = {BcKind::equilibrium, 0, 0};
    c.reference = ReferenceKind::lake_at_rest;
    c.branch = FlowBranch::still;
    list.push_back(c);
  }
  {
    CaseSpec c;
    c.name = "subcritical";
    c.description = "smooth subcritical steady flow";
    c.params.g = 9.812;
    c.t_end = 200.0;
    c.steady_run = true;
    c.b_fn = sine_bump(0.05);
    c.db_fn = sine_bump_slope(0.05);
    c.eta0 = 2.0;
    c.bc_left = {BcKind::inflow_q, 0, 4.42};
    c.bc_right = {BcKind::outflow_h, 2.0, 0};
    c.reference = ReferenceKind::moving_steady;
    c.branch = FlowBranch::subcritical;
    set_steady_invariants(c, 2.0, 4.42);
    list.push_back(c);
  }
  {
    CaseSpec c;
    c.name = "supercritical";
    c.description = "smooth supercritical steady flow";
    c.params.g = 9.812;
    c.t_end = 50.0;
    c.steady_run = true;
    c.b_fn = sine_bump(0.05);
    c.db_fn = sine_bump_slope(0.05);
    c.eta0 = 2.0;
    c.bc_left = {BcKind::inflow_hq, 2.0, 24.0};
    c.bc_right = {BcKind::extrapolate, 0, 0};
    c.reference = ReferenceKind::moving_steady;
    c.branch = FlowBranch::supercritical;
    set_steady_invariants(c, 2.0, 24.0);
    list.push_back(c);
  }
  {
    CaseSpec c;
    c.name = "transcritical";
    c.description = "transcritical flow with a standing shock over a bump";
    c.params.g = 9.812;
    c.t_end = 200.0;
    c.steady_run = true;
    c.b_fn = trans_bump;
    c.db_fn = trans_bump_slope;
    c.eta0 = 0.33;
    c.bc_left = {BcKind::inflow_q, 0, 0.18};
    c.bc_right = {BcKind::outflow_h, 0.33, 0};
    c.reference = ReferenceKind::none;
    c.branch = FlowBranch::transcritical;
    c.q0 = 0.18;
    list.push_back(c);
  }
  {
    CaseSpec c;
    c.name = "perturbed_subcritical";
    c.description = "surface bump on the converged subcritical steady state";
    c.params.g = 9.812;
    c.t_end = 1.5;
    c.b_fn = sine_bump(0.05);
    c.db_fn = sine_bump_slope(0.05);
    c.eta0 = 2.0;
    c.pert_alpha = 1e-3;
    c.eta_perturbation = [](double x) { return 1e-3 * perturbation_profile(x); };
    c.steady_twin = "subcritical";
    c.bc_left = {BcKind::inflow_q, 0, 4.42};
    c.bc_right = {BcKind::outflow_h, 2.0, 0};
    c.reference = ReferenceKind::none;
    c.branch = FlowBranch::subcritical;
    set_steady_invariants(c, 2.0, 4.42);
    list.push_back(c);
  }
  {
    CaseSpec c;
    c.name = "perturbed_supercritical";
    c.description = "surface bump on the converged supercritical steady state";
    c.params.g = 9.812;
    c.t_end = 1.0;
    c.b_fn = sine_bump(0.05);
    c.db_fn = sine_bump_slope(0.05);
    c.eta0 = 2.0;
    c.pert_alpha = 1e-4;
    c.eta_perturbation = [](double x) { return 1e-4 * perturbation_profile(x); };
    c.steady_twin = "supercritical";
    c.bc_left = {BcKind::inflow_hq, 2.0, 24.0};
    c.bc_right = {BcKind::extrapolate, 0, 0};
    c.reference = ReferenceKind::none;
    c.branch = FlowBranch::supercritical;
    set_steady_invariants(c, 2.0, 24.0);
    list.push_back(c);
  }
  {
    CaseSpec c;
    c.name = "step_subcritical";
    c.description = "subcritical steady flow over a discontinuous step";
    c.params.g = 9.812;
    c.t_end = 500.0;
    c.steady_run = true;
    c.b_fn = step_bottom;
    c.db_fn = [](double) { return 0.0; };
    c.b_discontinuous = true;
    c.eta0 = 2.0;
    c.bc_left = {BcKind::inflow_q, 0, 4.42};
    c.bc_right = {BcKind::outflow_h, 2.0, 0};
    c.reference = ReferenceKind::none;
    c.branch = FlowBranch::subcritical;
    set_steady_invariants(c, 2.0, 4.42);
    list.push_back(c);
  }
  {
    CaseSpec c;
    c.name = "step_supercritical";
    c.description = "supercritical steady flow over a discontinuous step";
    c.params.g = 9.812;
    c.t_end = 50.0;
    c.steady_run = true;
    c.b_fn = step_bottom;
    c.db_fn = [](double) { return 0.0; };
    c.b_discontinuous = true;
    c.eta0 = 2.0;
    c.bc_left = {BcKind::inflow_hq, 2.0, 24.0};
    c.bc_right = {BcKind::extrapolate, 0, 0};
    c.reference = ReferenceKind::none;
    c.branch = FlowBranch::supercritical;
    set_steady_invariants(c, 2.0, 24.0);
    list.push_back(c);
  }
  {
    CaseSpec c;
    c.name = "friction_subcritical";
    c.description = "subcritical steady flow with Manning friction";
    c.params.g = 9.812;
    c.params.n_manning = 0.05;
    c.t_end = 200.0;
    c.steady_run = true;
    c.b_fn = sine_bump(0.05);
    c.db_fn = sine_bump_slope(0.05);
    c.eta0 = 2.0;
    c.bc_left = {BcKind::inflow_q, 0, 4.42};
    c.bc_right = {BcKind::outflow_h, 2.0, 0};
    c.reference = ReferenceKind::none;
    c.branch = FlowBranch::subcritical;
    c.q0 = 4.42;
    list.push_back(c);
  }
  {
    CaseSpec c;
    c.name = "friction_supercritical";
    c.description = "supercritical steady flow with Manning friction";
    c.params.g = 9.812;
    c.params.n_manning = 0.05;
    c.t_end = 50.0;
    c.steady_run = true;
    c.b_fn = sine_bump(0.05);
    c.db_fn = sine_bump_slope(0.05);
    c.eta0 = 2.0;
    c.bc_left = {BcKind::inflow_hq, 2.0, 24.0};
    c.bc_right = {BcKind::extrapolate, 0, 0};
    c.reference = ReferenceKind::none;
    c.branch = FlowBranch::supercritical;
    set_steady_invariants(c, 2.0, 24.0);
    list.push_back(c);
  }

  return list;
}

} // namespace

double perturbation_profile(double x) {
  double r = 4.0 * (x - 9.5) * (x - 9.5);
  if (r >= 1.0) return 0.0;
  double d = 1.0 - r;
  return std::exp(1.0 - 1.0 / (d * d));
}

const std::vector<CaseSpec>& catalog() {
  static const std::vector<CaseSpec> list = build_catalog();
  return list;
}

const CaseSpec& find_case(const std::string& name) {
  for (const auto& c : catalog())
    if (c.name == name) return c;
  throw SolverError("unknown case: " + name);
}

std::pair<double, double> steady_reference(const CaseSpec& cs, double x) {
  if (cs.reference != ReferenceKind::moving_steady)
    throw SolverError("steady_reference: case has no moving steady solution");
  const double g = cs.params.g;
  const double b = cs.b_fn(x);
  const double q = cs.q0;
  auto f = [&](double h) {
    return g * h * h * h + (g * b - cs.upsilon0) * h * h + 0.5 * q * q;
  };
  double h_star = 2.0 * (cs.upsilon0 - g * b) / (3.0 * g);
  if (h_star <= 0.0 || f(h_star) >= 0.0)
    throw SolverError("steady_reference: no positive root");

  double lo, hi;
  if (cs.branch == FlowBranch::subcritical) {
    lo = h_star;
    hi = 2.0 * (cs.upsilon0 - g * b) / g + 1.0;
    while (f(hi) <= 0.0) hi *= 2.0;
  } else {
    lo = 0.0;
    hi = h_star;
  }
  // Root is bracketed with f(lo) and f(hi) of opposite sign on each branch.
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    double fm = f(mid);
    bool left_of_root = (cs.branch == FlowBranch::subcritical) ? (fm <= 0.0)
                                                               : (fm >= 0.0);
    if (left_of_root)
      lo = mid;
    else
      hi = mid;
    if (hi - lo < 1e-16 * std::max(1.0, hi)) break;
  }
  double h = 0.5 * (lo + hi);
  for (int it = 0; it < 3; ++it) {
    double df = 3.0 * g * h * h + 2.0 * (g * b - cs.upsilon0) * h;
    if (std::abs(df) < 1e-30) break;
    h -= f(h) / df;
  }
  return {h, q};
}

ArrayXd reference_depth_averages(const CaseSpec& cs, const Grid& grid,
                                 const QuadratureRule& rule) {
  ArrayXd avg(grid.n_interior);
  for (int i = 0; i < grid.n_interior; ++i) {
    int j = grid.interior_begin() + i;
    double xl = grid.cell_left(j);
    double acc = 0.0;
    for (int t = 0; t < rule.n(); ++t)
      acc += rule.weights[t] * steady_reference(cs, xl + rule.nodes[t] * grid.dx).first;
    avg[i] = acc;
  }
  return avg;
}

void apply_boundary(State& s, const Grid& grid, const CaseSpec& cs,
                    const ArrayXd& b_avg) {
  const int ng = grid.n_ghost;
  const int ib = grid.interior_begin();
  const int ie = grid.interior_end();

  auto fill = [&](const BcSide& bc, bool left) {
    int g0 = left ? 0 : ie;
    int inner = left ? ib : ie - 1;
    for (int k = 0; k < ng; ++k) {
      int j = g0 + k;
      switch (bc.kind) {
        case BcKind::equilibrium:
          s.h[j] = cs.eta0 - b_avg[j];
          s.q[j] = 0.0;
          break;
        case BcKind::inflow_q:
          s.h[j] = s.h[inner];
          s.q[j] = bc.q;
          break;
        case BcKind::inflow_hq:
          s.h[j] = bc.h;
          s.q[j] = bc.q;
          break;
        case BcKind::outflow_h:
          s.h[j] = bc.h;
          s.q[j] = s.q[inner];
          break;
        case BcKind::extrapolate:
          s.h[j] = s.h[inner];
          s.q[j] = s.q[inner];
          break;
      }
    }
  };
  fill(cs.bc_left, true);
  fill(cs.bc_right, false);
}

ErrorReport compute_errors(const ArrayXd& h, const ArrayXd& q,
                           const ArrayXd& h_ref, const ArrayXd& q_ref,
                           const Grid& grid) {
  if (h.size() != h_ref.size() || q.size() != q_ref.size() ||
      h.size() != grid.n_interior)
    throw SolverError("compute_errors: size mismatch");
  ErrorReport r;
  r.l2_h = std::sqrt((grid.dx * (h - h_ref).square()).sum());
  r.l2_q = std::sqrt((grid.dx * (q - q_ref).square()).sum());
  return r;
}

double estimated_order(double err_coarse, double err_fine, int n_coarse,
                       int n_fine) {
  if (n_fine == n_coarse || err_coarse <= 0.0 || err_fine <= 0.0) return -1.0;
  return std::log(err_coarse / err_fine) /
         std::log(static_cast<double>(n_fine) / n_coarse);
}

} // namespace swgf
