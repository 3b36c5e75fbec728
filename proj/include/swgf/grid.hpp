#pragma once

#include "swgf/quadrature.hpp"
#include "swgf/types.hpp"

#include <functional>

namespace swgf {

struct PhysicalParams {
  double g = 9.812;
  double n_manning = 0.0;
};

/// Uniform cell layout with ghost halos on both sides. Indices used across
/// the code base are total indices; the interior occupies
/// [interior_begin(), interior_end()).
struct Grid {
  double x0 = 0.0, x1 = 1.0;
  int n_interior = 0;
  int n_ghost = 0;
  double dx = 0.0;

  int n_total() const { return n_interior + 2 * n_ghost; }
  int interior_begin() const { return n_ghost; }
  int interior_end() const { return n_ghost + n_interior; }
  double cell_left(int j) const { return x0 + (j - n_ghost) * dx; }
  double cell_center(int j) const { return cell_left(j) + 0.5 * dx; }
};

Grid build_grid(double x0, double x1, int n_cells, int n_ghost);

/// Conserved cell averages including ghost cells.
struct State {
  ArrayXd h;
  ArrayXd q;

  State() = default;
  explicit State(int n) : h(ArrayXd::Zero(n)), q(ArrayXd::Zero(n)) {}
  int size() const { return static_cast<int>(h.size()); }
};

using ScalarFn = std::function<double(double)>;

/// Bottom elevation sampled once on the grid. Node values are evaluated at
/// the quadrature nodes of every cell (ghosts included) and cell averages
/// are the quadrature of those samples, so averages and node values are
/// consistent by construction. For bottoms with jumps aligned to cell
/// interfaces, edge nodes are nudged inward so each cell sees its one-sided
/// limit.
struct BathymetryData {
  ArrayXd cell_avg;    // n_total
  ArrayXXd node_vals;  // rule.n() x n_total
};

BathymetryData sample_bathymetry(const Grid& grid, const QuadratureRule& rule,
                                 const ScalarFn& b, bool discontinuous = false);

/// Cell averages of an arbitrary profile using the rule's nodes.
ArrayXd sample_cell_averages(const Grid& grid, const QuadratureRule& rule,
                             const ScalarFn& f);

} // namespace swgf
