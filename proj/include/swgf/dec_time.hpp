#pragma once

#include "swgf/types.hpp"

#include <functional>
#include <string>
#include <vector>

namespace swgf {

enum class DecNodes { equispaced, lobatto };

DecNodes parse_dec_nodes(const std::string& name);

/// Deferred-correction one-step integrator data: M+1 subnodes of [0,1] and
/// the running-integral coefficients theta(m, s) = integral over [0, node m]
/// of the s-th cardinal basis. K is the number of correction sweeps; the
/// attainable order is min(K, M+1) for equispaced nodes and min(K, 2M) for
/// Lobatto nodes.
struct DecScheme {
  int M = 1;
  int K = 1;
  DecNodes nodes = DecNodes::equispaced;
  ArrayXd node_pos; // M+1 entries, node_pos[0] = 0, node_pos[M] = 1
  MatrixXd theta;   // (M+1) x (M+1)
};

/// Running-integral coefficients for an arbitrary ascending node set.
MatrixXd theta_coefficients(const ArrayXd& nodes);

DecScheme make_dec_scheme(int M, int K, DecNodes nodes);

/// Scheme matching a target accuracy order with the conventional choices:
/// equispaced M = order-1, K = order; Lobatto M = ceil(order/2), K = order.
DecScheme dec_scheme_for_order(int order, DecNodes nodes);

using RhsFn = std::function<ArrayXd(const ArrayXd&, double)>;

/// One deferred-correction step. Evaluates the rhs once at the step start
/// and M times per correction sweep after the first: 1 + (K-1) M calls.
ArrayXd dec_step(const ArrayXd& y0, double t, double dt, const DecScheme& sc,
                 const RhsFn& f);

/// CFL time step dx * cfl / max(|u| + sqrt(g h)).
double cfl_timestep(const ArrayXd& h, const ArrayXd& q, double g, double dx,
                    double cfl);

struct IntegrateOptions {
  double t_begin = 0.0;
  double t_end = 0.0;
  double cfl = 0.4;
  double dx = 1.0;                    // for the steady-stop norm
  double steady_tol = 0.0;            // 0 disables the early stop
  long max_steps = 100000000L;
  std::vector<double> snapshot_times; // strictly inside (t_begin, t_end)
  std::function<void(int, double, const ArrayXd&)> on_snapshot;
  std::function<void(double, const ArrayXd&)> on_step; // after each accepted step
};

struct IntegrateResult {
  double t = 0.0;
  long steps = 0;
  bool reached_steady = false;
  double last_rate = 0.0; // ||y_new - y_old||_L2 / dt of the final step
};

/// Advances y with dec_step and CFL-limited steps, clamping to snapshot
/// times and t_end exactly. Stops early once the update rate falls below
/// steady_tol.
IntegrateResult integrate(ArrayXd& y, const DecScheme& sc, const RhsFn& f,
                          const std::function<double(const ArrayXd&)>& dt_of,
                          const IntegrateOptions& opt);

} // namespace swgf
