#include "swgf/global_flux.hpp"

#include <cmath>
#include <string>

namespace swgf {

double interface_jump(double eta_L, double eta_R, double b_L, double b_R,
                      double g) {
  return g * 0.5 * (eta_R + eta_L) * (b_R - b_L) -
         g * 0.5 * (b_R * b_R - b_L * b_L);
}

GlobalFluxAssembler::GlobalFluxAssembler(const Grid& grid,
                                         const PhysicalParams& params,
                                         int order, bool well_balanced,
                                         double epsilon,
                                         BathymetryData bathymetry,
                                         ScalarFn bottom_slope,
                                         bool anchor_right)
    : grid_(grid), params_(params), order_(order), wb_(well_balanced),
      anchor_right_(anchor_right), eps_(epsilon),
      rule_(gauss_lobatto((order + 1) / 2 + 1)),
      recon_(order, rule_.nodes, rule_.weights),
      bathymetry_(std::move(bathymetry)) {
  if (bathymetry_.node_vals.rows() != rule_.n() ||
      bathymetry_.node_vals.cols() != grid_.n_total())
    throw SolverError("GlobalFluxAssembler: bathymetry sampled on a different rule");
  if (!bottom_slope)
    throw SolverError("GlobalFluxAssembler: missing bottom slope function");

  // Per-cell running integrals of the cardinal basis against the bottom
  // slope, by a dense sub-rule on every [left edge, node m] segment. The
  // basis values at the sub-points do not depend on the cell, so they are
  // tabulated once.
  const int n = rule_.n();
  const QuadratureRule sub = gauss_legendre(12);
  const int nsub = sub.n();
  std::vector<ArrayXd> basis_at(n); // (m) -> nsub x n values, flattened
  for (int m = 0; m < n; ++m) {
    basis_at[m].resize(nsub * n);
    for (int k = 0; k < nsub; ++k) {
      ArrayXd ell = cardinal_values(rule_.nodes, rule_.nodes[m] * sub.nodes[k]);
      for (int s = 0; s < n; ++s) basis_at[m][k * n + s] = ell[s];
    }
  }

  slope_tab_.resize(grid_.n_total());
  for (int j = 0; j < grid_.n_total(); ++j) {
    const double xl = grid_.cell_left(j);
    MatrixXd tab = MatrixXd::Zero(n, n);
    for (int m = 1; m < n; ++m) {
      const double tm = rule_.nodes[m];
      for (int k = 0; k < nsub; ++k) {
        const double t = tm * sub.nodes[k];
        const double w = grid_.dx * tm * sub.weights[k] *
                         bottom_slope(xl + t * grid_.dx);
        for (int s = 0; s < n; ++s) tab(m, s) += w * basis_at[m][k * n + s];
      }
      // Pin the row sum to the exact bottom increment between the nodes so
      // constant-surface states telescope without quadrature residue.
      const double target =
          bathymetry_.node_vals(m, j) - bathymetry_.node_vals(0, j);
      int imax = 0;
      double best = -1.0, sum = 0.0;
      for (int s = 0; s < n; ++s) {
        sum += tab(m, s);
        if (std::abs(tab(m, s)) > best) {
          best = std::abs(tab(m, s));
          imax = s;
        }
      }
      tab(m, imax) += target - sum;
    }
    slope_tab_[j] = std::move(tab);
  }
}

ArrayXd GlobalFluxAssembler::source_integral_reconstruct(
    double R_in, const ArrayXd& eta, const ArrayXd& b, const ArrayXd& h,
    const ArrayXd& q, const MatrixXd& slope_tab) const {
  const int n = rule_.n();
  const double g = params_.g;
  const double n2 = params_.n_manning * params_.n_manning;

  ArrayXd friction = ArrayXd::Zero(n);
  if (n2 > 0.0)
    friction = grid_.dx * g * n2 * q * q.abs() / h.pow(7.0 / 3.0);

  ArrayXd R(n);
  for (int m = 0; m < n; ++m) {
    double acc = R_in;
    if (wb_) {
      // g h b_x rewritten as g eta b_x - (g b^2 / 2)_x: the first part via
      // the slope table, the second telescopes exactly between the nodes.
      for (int s = 0; s < n; ++s) acc += g * slope_tab(m, s) * eta[s];
      acc -= g * 0.5 * (b[m] * b[m] - b[0] * b[0]);
    } else {
      for (int s = 0; s < n; ++s) acc += g * slope_tab(m, s) * h[s];
    }
    if (n2 > 0.0)
      for (int s = 0; s < n; ++s) acc += rule_.tableau(m, s) * friction[s];
    R[m] = acc;
  }
  return R;
}

Eigen::Vector2d GlobalFluxAssembler::hyperbolic_flux_average(
    const ArrayXd& h, const ArrayXd& q) const {
  Eigen::Vector2d F;
  F[0] = (rule_.weights * q).sum();
  F[1] = (rule_.weights * (q * q / h + 0.5 * params_.g * h * h)).sum();
  return F;
}

void GlobalFluxAssembler::assemble_global_flux_averages(
    const State& s, double t, GlobalFluxFields& f) const {
  const int nt = grid_.n_total();
  const int n = rule_.n();
  const int r = (order_ + 1) / 2;
  const int j0 = r - 1;      // first cell with a full reconstruction window
  const int j1 = nt - r;     // last one
  const double g = params_.g;

  f.eta_n.setZero(n, nt);
  f.b_n.setZero(n, nt);
  f.h_n.setZero(n, nt);
  f.q_n.setZero(n, nt);
  f.R_n.setZero(n, nt);
  f.Fbar_q.setZero(nt);
  f.Rbar.setZero(nt);
  f.Kbar.setZero(nt);
  f.R_left.setZero(nt + 1);
  f.R_right.setZero(nt + 1);
  f.jumps.setZero(nt + 1);

  ArrayXd eta_avg;
  if (wb_) eta_avg = s.h + bathymetry_.cell_avg;

  for (int j = j0; j <= j1; ++j) {
    const int w0 = j - (r - 1);
    ArrayXd q_win = s.q.segment(w0, order_);
    f.b_n.col(j) = bathymetry_.node_vals.col(j);
    if (wb_) {
      // Surface-driven mode: the free surface is the reconstructed
      // variable, depth follows from the sampled bottom underneath it.
      ArrayXd eta_win = eta_avg.segment(w0, order_);
      f.eta_n.col(j) = recon_.reconstruct(eta_win, eps_);
      f.h_n.col(j) = f.eta_n.col(j) - f.b_n.col(j);
    } else {
      ArrayXd h_win = s.h.segment(w0, order_);
      f.h_n.col(j) = recon_.reconstruct(h_win, eps_);
      f.eta_n.col(j) = f.h_n.col(j) + f.b_n.col(j);
    }
    f.q_n.col(j) = recon_.reconstruct(q_win, eps_);
    for (int m = 0; m < n; ++m)
      if (!(f.h_n(m, j) > 0.0))
        throw SolverError("dry reconstruction at cell " +
                          std::to_string(j - grid_.n_ghost) + ", node " +
                          std::to_string(m) + ", t = " + std::to_string(t));
  }

  // Left-to-right sweep of the source integral, jumps applied at interfaces.
  f.R_right[j0] = 0.0;
  for (int j = j0; j <= j1; ++j) {
    f.R_n.col(j) = source_integral_reconstruct(f.R_right[j], f.eta_n.col(j),
                                               f.b_n.col(j), f.h_n.col(j),
                                               f.q_n.col(j), slope_tab_[j]);
    f.R_left[j + 1] = f.R_n(n - 1, j);
    double jump = 0.0;
    if (j < j1)
      jump = interface_jump(f.eta_n(n - 1, j), f.eta_n(0, j + 1),
                            f.b_n(n - 1, j), f.b_n(0, j + 1), g);
    f.jumps[j + 1] = jump;
    f.R_right[j + 1] = f.R_left[j + 1] + jump;
  }

  // Pin the source integral to zero at one domain boundary (a constant
  // shift of R; the interface flux differences do not see it).
  const double off = anchor_right_ ? f.R_left[grid_.interior_end()]
                                   : f.R_right[grid_.interior_begin()];
  if (off != 0.0) {
    for (int j = j0; j <= j1; ++j) f.R_n.col(j) -= off;
    f.R_left.segment(j0 + 1, j1 - j0 + 1) -= off;
    f.R_right.segment(j0, j1 - j0 + 2) -= off;
  }

  for (int j = j0; j <= j1; ++j) {
    Eigen::Vector2d F = hyperbolic_flux_average(f.h_n.col(j), f.q_n.col(j));
    f.Fbar_q[j] = F[0];
    f.Rbar[j] = (rule_.weights * f.R_n.col(j)).sum();
    f.Kbar[j] = F[1] + f.Rbar[j];
  }
}

} // namespace swgf
