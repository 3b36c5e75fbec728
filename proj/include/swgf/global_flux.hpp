#pragma once

#include "swgf/grid.hpp"
#include "swgf/quadrature.hpp"
#include "swgf/types.hpp"
#include "swgf/weno.hpp"

#include <vector>

namespace swgf {

/// Everything the interface flux needs, assembled over the full grid
/// (ghosts included). Interface index e separates cells e-1 and e, so there
/// are n_total + 1 interfaces.
struct GlobalFluxFields {
  ArrayXXd eta_n, b_n, h_n, q_n; // nodal reconstructions, nodes x cells
  ArrayXXd R_n;                  // source integral at nodes
  ArrayXd Fbar_q;                // quadrature cell average of q
  ArrayXd Rbar;                  // quadrature cell average of R
  ArrayXd Kbar;                  // momentum component of the global flux
  ArrayXd R_left, R_right;       // source integral traces per interface
  ArrayXd jumps;                 // source integral jumps per interface
};

/// Jump of the source integral across an interface from the surface and
/// bottom traces on both sides (segment path, bathymetry terms only).
double interface_jump(double eta_L, double eta_R, double b_L, double b_R,
                      double g);

/// Assembles nodal reconstructions, the source integral sweep and the
/// global-flux cell averages for the flux-globalization schemes.
class GlobalFluxAssembler {
public:
  // `anchor_right` pins the source integral to zero at the right domain
  // boundary instead of the left one; the sweep itself always runs left to
  // right and the choice only shifts R (and hence the K diagnostic) by a
  // constant. Runs anchor where the boundary data prescribes the depth so
  // the preserved K matches the value forced there.
  GlobalFluxAssembler(const Grid& grid, const PhysicalParams& params,
                      int order, bool well_balanced, double epsilon,
                      BathymetryData bathymetry, ScalarFn bottom_slope,
                      bool anchor_right = false);

  const QuadratureRule& rule() const { return rule_; }
  const BathymetryData& bathymetry() const { return bathymetry_; }
  bool well_balanced() const { return wb_; }

  // Running integrals of the cardinal basis against the bottom slope for
  // one cell: slope_tab(m,s) = integral from the left edge to node m of
  // l_s(x) b'(x) dx. Row sums telescope to the exact bottom increments, so
  // a constant surface reproduces the bottom profile's primitive exactly.
  const MatrixXd& slope_table(int cell) const { return slope_tab_[cell]; }

  // Nodal source integral of one cell: R at every node given the incoming
  // trace R_in, the cell's nodal surface/bottom/discharge/depth values and
  // its slope table.
  ArrayXd source_integral_reconstruct(double R_in, const ArrayXd& eta,
                                      const ArrayXd& b, const ArrayXd& h,
                                      const ArrayXd& q,
                                      const MatrixXd& slope_tab) const;

  // Quadrature average of the physical flux from nodal depth/discharge.
  Eigen::Vector2d hyperbolic_flux_average(const ArrayXd& h,
                                          const ArrayXd& q) const;

  // Full assembly: nodal reconstructions for every cell, left-to-right
  // source integral sweep with interface jumps, offset normalization to
  // R = 0 at the anchored domain boundary, and global-flux cell averages.
  void assemble_global_flux_averages(const State& s, double t,
                                     GlobalFluxFields& f) const;

private:
  Grid grid_;
  PhysicalParams params_;
  int order_;
  bool wb_;
  bool anchor_right_;
  double eps_;
  QuadratureRule rule_;
  WenoReconstructor recon_;
  BathymetryData bathymetry_;
  std::vector<MatrixXd> slope_tab_; // one per cell, ghosts included
};

} // namespace swgf
