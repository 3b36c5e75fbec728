#include "swgf/driver.hpp"

#include "swgf/io.hpp"

#include "json.hpp"

#include <cmath>
#include <string>

namespace swgf {

namespace {

SnapshotColumns build_columns(const SemiDiscrete& sd, const ArrayXd& y,
                              const ArrayXd& h_eq) {
  const Grid& g = sd.grid();
  const int N = g.n_interior;
  SnapshotColumns c;
  c.x.resize(N);
  for (int i = 0; i < N; ++i) c.x[i] = g.cell_center(g.interior_begin() + i);
  c.h = y.head(N);
  c.q = y.tail(N);
  c.u = c.q / c.h;
  c.b = sd.bathymetry_averages().segment(g.interior_begin(), N);
  c.eta = c.h + c.b;
  if (h_eq.size() == N)
    c.pert = c.h - h_eq;
  else
    c.pert = ArrayXd::Zero(N);
  if (sd.kind() != SchemeKind::classical) c.K = sd.flux_averages(y).Kbar;
  return c;
}

} // namespace

RunResult run_case(const RunConfig& config) {
  CaseSpec cs = find_case(config.case_name);
  if (config.t_end >= 0.0) cs.t_end = config.t_end;
  const SchemeKind kind = parse_scheme(config.scheme);
  const DecScheme dec =
      dec_scheme_for_order(config.order, parse_dec_nodes(config.dec_nodes));

  SemiDiscrete sd(cs, config.cells, kind, config.order, config.epsilon);
  const Grid& grid = sd.grid();
  const int N = grid.n_interior;
  const int ib = grid.interior_begin();

  ArrayXd y;
  ArrayXd h_eq;
  if (!cs.steady_twin.empty()) {
    // Start from the converged unperturbed state plus the surface bump.
    RunConfig twin_cfg = config;
    twin_cfg.case_name = cs.steady_twin;
    twin_cfg.t_end = -1.0;
    twin_cfg.out_prefix.clear();
    twin_cfg.snapshot_times.clear();
    RunResult twin = run_case(twin_cfg);
    h_eq = twin.h;
    QuadratureRule rule = gauss_lobatto((config.order + 1) / 2 + 1);
    ArrayXd pert = sample_cell_averages(grid, rule, cs.eta_perturbation);
    State s(grid.n_total());
    s.h.segment(ib, N) = twin.h + pert.segment(ib, N);
    s.q.segment(ib, N) = twin.q;
    y = sd.pack(s);
  } else {
    y = sd.initial_state();
    if (cs.pert_alpha > 0.0 && cs.reference == ReferenceKind::lake_at_rest)
      h_eq = cs.eta0 - sd.bathymetry_averages().segment(ib, N);
  }

  const RhsFn f = [&](const ArrayXd& yy, double tt) { return sd.rhs(yy, tt); };
  const auto dt_of = [&](const ArrayXd& yy) {
    return config.cfl * grid.dx / sd.max_wave_speed(yy);
  };

  IntegrateOptions opt;
  opt.t_end = cs.t_end;
  opt.cfl = config.cfl;
  opt.dx = grid.dx;
  opt.steady_tol = cs.steady_run ? 1e-13 : 0.0;
  opt.snapshot_times = config.snapshot_times;
  const std::string& prefix = config.out_prefix;
  if (!prefix.empty() && !config.snapshot_times.empty())
    opt.on_snapshot = [&](int k, double, const ArrayXd& yy) {
      write_snapshot(prefix + "_snap" + std::to_string(k) + ".dat",
                     build_columns(sd, yy, h_eq));
    };
  double max_dev = -1.0;
  if (h_eq.size() == N) {
    max_dev = (y.head(N) - h_eq).abs().maxCoeff();
    opt.on_step = [&](double, const ArrayXd& yy) {
      max_dev = std::max(max_dev, (yy.head(N) - h_eq).abs().maxCoeff());
    };
  }

  const IntegrateResult ir = integrate(y, dec, f, dt_of, opt);

  RunResult res;
  res.t_final = ir.t;
  res.steps = ir.steps;
  res.reached_steady = ir.reached_steady;
  res.h = y.head(N);
  res.q = y.tail(N);
  res.h_eq = h_eq;
  res.max_dev_heq = max_dev;
  SemiDiscrete::FluxAverages fa = sd.flux_averages(y);
  res.qbar_flux = fa.qbar;
  if (kind != SchemeKind::classical) res.Kbar = fa.Kbar;

  if (cs.reference == ReferenceKind::lake_at_rest) {
    ArrayXd h_ref = cs.eta0 - sd.bathymetry_averages().segment(ib, N);
    res.errors = compute_errors(res.h, res.q, h_ref, ArrayXd::Zero(N), grid);
  } else if (cs.reference == ReferenceKind::moving_steady) {
    ArrayXd h_ref = reference_depth_averages(cs, grid, gauss_legendre(5));
    res.errors = compute_errors(res.h, res.q, h_ref,
                                ArrayXd::Constant(N, cs.q0), grid);
  }

  if (cs.branch != FlowBranch::still) {
    res.drift_q = (res.qbar_flux - cs.q0).abs().maxCoeff();
    if (res.Kbar && cs.K0 != 0.0)
      res.drift_K = (*res.Kbar - cs.K0).abs().maxCoeff();
  }

  if (!prefix.empty()) {
    write_snapshot(prefix + "_final.dat", build_columns(sd, y, h_eq));
    nlohmann::json js;
    js["case"] = cs.name;
    js["scheme"] = scheme_name(kind);
    js["order"] = config.order;
    js["cells"] = N;
    js["cfl"] = config.cfl;
    js["dec_nodes"] = config.dec_nodes;
    js["t_final"] = res.t_final;
    js["steps"] = res.steps;
    js["reached_steady"] = res.reached_steady;
    js["snapshot_times"] = config.snapshot_times;
    if (res.errors) {
      js["l2_h"] = res.errors->l2_h;
      js["l2_q"] = res.errors->l2_q;
    }
    if (res.drift_q >= 0.0) {
      js["q0"] = cs.q0;
      js["max_drift_q"] = res.drift_q;
    }
    if (res.drift_K >= 0.0) {
      js["K0"] = cs.K0;
      js["max_drift_K"] = res.drift_K;
    }
    if (res.max_dev_heq >= 0.0) js["max_dev_heq"] = res.max_dev_heq;
    write_text_file(prefix + "_summary.json", js.dump(2) + "\n");
  }
  return res;
}

ConvergenceResult run_convergence(const RunConfig& base,
                                  const std::vector<int>& meshes) {
  const CaseSpec& cs = find_case(base.case_name);
  if (cs.reference == ReferenceKind::none)
    throw SolverError("convergence study needs a case with a reference");
  if (meshes.empty()) throw SolverError("convergence study needs meshes");

  ConvergenceResult out;
  for (int n : meshes) {
    RunConfig cfg = base;
    cfg.cells = n;
    cfg.out_prefix.clear();
    cfg.snapshot_times.clear();
    RunResult r = run_case(cfg);
    out.meshes.push_back(n);
    out.errors.push_back(*r.errors);
  }
  out.eoa_h.assign(out.meshes.size(), -1.0);
  out.eoa_q.assign(out.meshes.size(), -1.0);
  for (size_t i = 1; i < out.meshes.size(); ++i) {
    out.eoa_h[i] = estimated_order(out.errors[i - 1].l2_h, out.errors[i].l2_h,
                                   out.meshes[i - 1], out.meshes[i]);
    out.eoa_q[i] = estimated_order(out.errors[i - 1].l2_q, out.errors[i].l2_q,
                                   out.meshes[i - 1], out.meshes[i]);
  }

  if (!base.out_prefix.empty()) {
    std::vector<ConvergenceRow> rows;
    for (size_t i = 0; i < out.meshes.size(); ++i)
      rows.push_back({out.meshes[i], out.errors[i].l2_h, out.errors[i].l2_q,
                      out.eoa_h[i], out.eoa_q[i]});
    write_convergence_table(base.out_prefix + "_convergence.dat", rows);
  }
  return out;
}

} // namespace swgf
