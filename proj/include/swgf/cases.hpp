#pragma once

#include "swgf/grid.hpp"
#include "swgf/types.hpp"

#include <string>
#include <vector>

namespace swgf {

enum class BcKind {
  equilibrium,  // ghost surface level eta0, q = 0
  inflow_q,     // impose q, extrapolate h
  inflow_hq,    // impose both
  outflow_h,    // impose h, extrapolate q
  extrapolate   // extrapolate both
};

struct BcSide {
  BcKind kind = BcKind::extrapolate;
  double h = 0.0;
  double q = 0.0;
};

enum class ReferenceKind { lake_at_rest, moving_steady, none };
enum class FlowBranch { subcritical, supercritical, transcritical, still };

struct CaseSpec {
  std::string name;
  std::string description;
  double x0 = 0.0, x1 = 25.0;
  PhysicalParams params;
  double t_end = 1.0;

  ScalarFn b_fn;
  ScalarFn db_fn; // analytic slope, used by the non-WB and classical sources
  bool b_discontinuous = false;
  bool steady_run = false; // relax-to-steady run: stop early on a small rate

  // All catalog cases start from a flat surface eta0 with q = 0, optionally
  // with an additive surface perturbation. Cases marked with a steady twin
  // instead start from that case's converged steady state plus the
  // perturbation.
  double eta0 = 1.0;
  ScalarFn eta_perturbation; // optional, added to the initial surface
  std::string steady_twin;   // unperturbed companion case, empty if none
  double pert_alpha = 0.0;

  BcSide bc_left, bc_right;

  ReferenceKind reference = ReferenceKind::none;
  FlowBranch branch = FlowBranch::still;
  double q0 = 0.0;       // steady discharge fixed by the boundary data
  double upsilon0 = 0.0; // Bernoulli head fixed by the boundary data
  double K0 = 0.0;       // global flux momentum component at the boundary
};

const std::vector<CaseSpec>& catalog();
const CaseSpec& find_case(const std::string& name);

/// Compactly supported surface bump used by the perturbation cases.
double perturbation_profile(double x);

/// Exact frictionless steady state (h, q) at a point, from the invariants
/// q = q0 and u^2/2 + g(h + b) = Upsilon0. The depth solves
/// g h^3 + (g b - Upsilon0) h^2 + q0^2/2 = 0; the branch picks the largest
/// (subcritical) or smallest (supercritical) positive root.
std::pair<double, double> steady_reference(const CaseSpec& cs, double x);

/// Reference depth as cell averages on the grid, using the rule's nodes.
ArrayXd reference_depth_averages(const CaseSpec& cs, const Grid& grid,
                                 const QuadratureRule& rule);

/// Ghost-cell fill. `b_avg` are bathymetry cell averages on the full grid.
void apply_boundary(State& s, const Grid& grid, const CaseSpec& cs,
                    const ArrayXd& b_avg);

struct ErrorReport {
  double l2_h = 0.0;
  double l2_q = 0.0;
};

/// Discrete L2 errors sqrt(sum dx e^2) over the interior cells.
ErrorReport compute_errors(const ArrayXd& h, const ArrayXd& q,
                           const ArrayXd& h_ref, const ArrayXd& q_ref,
                           const Grid& grid);

/// Estimated order of accuracy between two meshes.
double estimated_order(double err_coarse, double err_fine, int n_coarse,
                       int n_fine);

} // namespace swgf
