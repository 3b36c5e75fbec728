#include "swgf/dec_time.hpp"

#include "swgf/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

namespace swgf {

DecNodes parse_dec_nodes(const std::string& name) {
  if (name == "equispaced") return DecNodes::equispaced;
  if (name == "lobatto") return DecNodes::lobatto;
  throw SolverError("unknown subnode family: " + name);
}

MatrixXd theta_coefficients(const ArrayXd& nodes) {
  return interpolatory_rule(nodes).tableau;
}

DecScheme make_dec_scheme(int M, int K, DecNodes nodes) {
  if (M < 1 || K < 1) throw SolverError("dec scheme needs M >= 1 and K >= 1");
  DecScheme sc;
  sc.M = M;
  sc.K = K;
  sc.nodes = nodes;
  if (nodes == DecNodes::equispaced) {
    sc.node_pos = ArrayXd::LinSpaced(M + 1, 0.0, 1.0);
    sc.theta = theta_coefficients(sc.node_pos);
  } else {
    QuadratureRule rule = gauss_lobatto(M + 1);
    sc.node_pos = rule.nodes;
    sc.theta = rule.tableau;
  }
  return sc;
}

DecScheme dec_scheme_for_order(int order, DecNodes nodes) {
  if (order < 1) throw SolverError("time order must be positive");
  if (order == 1) return make_dec_scheme(1, 1, nodes);
  int M = nodes == DecNodes::equispaced ? order - 1 : (order + 1) / 2;
  return make_dec_scheme(M, order, nodes);
}

ArrayXd dec_step(const ArrayXd& y0, double t, double dt, const DecScheme& sc,
                 const RhsFn& f) {
  const int M = sc.M;
  std::vector<ArrayXd> Y(M + 1);
  std::vector<ArrayXd> F(M + 1);
  F[0] = f(y0, t);
  for (int m = 1; m <= M; ++m) Y[m] = y0 + dt * sc.node_pos[m] * F[0];
  for (int k = 2; k <= sc.K; ++k) {
    for (int m = 1; m <= M; ++m) F[m] = f(Y[m], t + dt * sc.node_pos[m]);
    for (int m = 1; m <= M; ++m) {
      ArrayXd acc = sc.theta(m, 0) * F[0];
      for (int s = 1; s <= M; ++s) acc += sc.theta(m, s) * F[s];
      Y[m] = y0 + dt * acc;
    }
  }
  return Y[M];
}

double cfl_timestep(const ArrayXd& h, const ArrayXd& q, double g, double dx,
                    double cfl) {
  double smax = 0.0;
  for (Eigen::Index i = 0; i < h.size(); ++i) {
    if (!(h[i] > 0.0)) throw SolverError("nonpositive depth in time step bound");
    smax = std::max(smax, std::abs(q[i] / h[i]) + std::sqrt(g * h[i]));
  }
  if (!(smax > 0.0)) throw SolverError("zero wave speed in time step bound");
  return cfl * dx / smax;
}

IntegrateResult integrate(ArrayXd& y, const DecScheme& sc, const RhsFn& f,
                          const std::function<double(const ArrayXd&)>& dt_of,
                          const IntegrateOptions& opt) {
  IntegrateResult res;
  res.t = opt.t_begin;

  std::vector<std::pair<double, int>> events;
  for (size_t i = 0; i < opt.snapshot_times.size(); ++i)
    events.emplace_back(opt.snapshot_times[i], static_cast<int>(i));
  events.emplace_back(opt.t_end, -1);
  std::sort(events.begin(), events.end());

  double t = opt.t_begin;
  long steps = 0;
  bool steady = false;
  double last_rate = 0.0;

  for (auto& [target, idx] : events) {
    if (target < t - 1e-12) continue;
    const double close = 1e-12 * std::max(1.0, std::abs(target));
    while (!steady && t < target - close) {
      double dt = dt_of(y);
      if (!(dt > 0.0) || !std::isfinite(dt))
        throw SolverError("invalid time step size");
      if (t + dt > target) dt = target - t;
      ArrayXd ynew = dec_step(y, t, dt, sc, f);
      if (opt.steady_tol > 0.0) {
        last_rate = std::sqrt(opt.dx * (ynew - y).square().sum()) / dt;
        if (last_rate <= opt.steady_tol) steady = true;
      }
      y = std::move(ynew);
      t += dt;
      if (opt.on_step) opt.on_step(t, y);
      if (++steps > opt.max_steps) throw SolverError("time step limit exceeded");
    }
    if (!steady) t = target;
    if (idx >= 0 && opt.on_snapshot) opt.on_snapshot(idx, target, y);
  }

  res.t = steady ? t : opt.t_end;
  res.steps = steps;
  res.reached_steady = steady;
  res.last_rate = last_rate;
  return res;
}

} // namespace swgf
