#include "swgf/grid.hpp"

#include <algorithm>

namespace swgf {

Grid build_grid(double x0, double x1, int n_cells, int n_ghost) {
  if (n_cells < 1 || x1 <= x0) throw SolverError("build_grid: bad domain");
  Grid g;
  g.x0 = x0;
  g.x1 = x1;
  g.n_interior = n_cells;
  g.n_ghost = n_ghost;
  g.dx = (x1 - x0) / n_cells;
  return g;
}

BathymetryData sample_bathymetry(const Grid& grid, const QuadratureRule& rule,
                                 const ScalarFn& b, bool discontinuous) {
  const int n = rule.n();
  const int nt = grid.n_total();
  BathymetryData out;
  out.node_vals.resize(n, nt);
  out.cell_avg.resize(nt);
  const double nudge = discontinuous ? 1e-9 : 0.0;
  for (int j = 0; j < nt; ++j) {
    double xl = grid.cell_left(j);
    for (int t = 0; t < n; ++t) {
      double xi = std::min(std::max(rule.nodes[t], nudge), 1.0 - nudge);
      out.node_vals(t, j) = b(xl + xi * grid.dx);
    }
    out.cell_avg[j] = (rule.weights * out.node_vals.col(j)).sum();
  }
  return out;
}

ArrayXd sample_cell_averages(const Grid& grid, const QuadratureRule& rule,
                             const ScalarFn& f) {
  const int nt = grid.n_total();
  ArrayXd avg(nt);
  for (int j = 0; j < nt; ++j) {
    double xl = grid.cell_left(j);
    double acc = 0.0;
    for (int t = 0; t < rule.n(); ++t)
      acc += rule.weights[t] * f(xl + rule.nodes[t] * grid.dx);
    avg[j] = acc;
  }
  return avg;
}

} // namespace swgf
