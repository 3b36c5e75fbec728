#pragma once

#include "swgf/types.hpp"

#include <Eigen/Dense>

namespace swgf {

/// Physical shallow water flux (q, q^2/h + g h^2/2).
Eigen::Vector2d physical_flux(double h, double q, double g);

/// Depth from the momentum component of the global flux: solves
/// (g/2) h^3 - (K - R) h + q^2 = 0. When three real roots exist the two
/// positive ones are the sub- and supercritical depths and the one closer
/// to h_hint is returned; otherwise falls back to h_hint.
double recover_depth(double q, double K, double R, double h_hint, double g);

/// Upwind flux for the global flux components: splits G^L and G^R with the
/// sign structure of the local flux Jacobian in the Roe-averaged state
/// (arithmetic mean depth, sqrt-weighted velocity). A zero eigenvalue
/// upwinds from the left.
Eigen::Vector2d upwind_global_flux(const Eigen::Vector2d& G_L,
                                   const Eigen::Vector2d& G_R, double h_L,
                                   double h_R, double g);

/// Rusanov flux of the physical system, for the classical baseline.
Eigen::Vector2d rusanov_flux(double h_L, double q_L, double h_R, double q_R,
                             double g);

} // namespace swgf
