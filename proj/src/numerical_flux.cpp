#include "swgf/numerical_flux.hpp"

#include <algorithm>
#include <cmath>

namespace swgf {

Eigen::Vector2d physical_flux(double h, double q, double g) {
  return {q, q * q / h + 0.5 * g * h * h};
}

double recover_depth(double q, double K, double R, double h_hint, double g) {
  const double A = K - R;
  if (!(h_hint > 0.0)) throw SolverError("recover_depth: nonpositive depth hint");
  if (A <= 0.0) return h_hint;

  // (g/2) h^3 - A h + q^2 = 0; three real roots iff q^4 < 8 A^3 / (27 g).
  const double q2 = q * q;
  if (q2 * q2 >= 8.0 * A * A * A / (27.0 * g)) return h_hint;

  const double P = 2.0 * A / (3.0 * g);
  double c = -q2 / (g * P * std::sqrt(P));
  c = std::clamp(c, -1.0, 1.0);
  const double theta = std::acos(c);
  const double two_sqrtP = 2.0 * std::sqrt(P);
  const double h_sub = two_sqrtP * std::cos(theta / 3.0);
  const double h_sup = two_sqrtP * std::cos((theta + 4.0 * M_PI) / 3.0);

  double h = (std::abs(h_sub - h_hint) <= std::abs(h_sup - h_hint)) ? h_sub
                                                                    : h_sup;
  // One Newton polish, skipped near the double-root configuration.
  const double df = 1.5 * g * h * h - A;
  if (std::abs(df) > 1e-8 * std::max(1.0, A)) {
    const double fval = 0.5 * g * h * h * h - A * h + q2;
    h -= fval / df;
  }
  if (!(h > 0.0)) return h_hint;
  return h;
}

Eigen::Vector2d upwind_global_flux(const Eigen::Vector2d& G_L,
                                   const Eigen::Vector2d& G_R, double h_L,
                                   double h_R, double g) {
  const double u_L = G_L[0] / h_L;
  const double u_R = G_R[0] / h_R;
  const double sL = std::sqrt(h_L), sR = std::sqrt(h_R);
  const double h_star = 0.5 * (h_L + h_R);
  const double u_star = (sL * u_L + sR * u_R) / (sL + sR);
  const double c_star = std::sqrt(g * h_star);
  const double l1 = u_star - c_star;
  const double l2 = u_star + c_star;

  // Right eigenvectors (1, l1), (1, l2); project, upwind, recompose.
  // A zero eigenvalue takes the left state.
  const double det = l2 - l1; // = 2 c_star > 0
  auto pick = [](double lambda, double wL, double wR) {
    return lambda >= 0.0 ? wL : wR;
  };
  // Characteristic components w_k of G: G = w1 (1,l1) + w2 (1,l2).
  const double wL1 = (l2 * G_L[0] - G_L[1]) / det;
  const double wL2 = (G_L[1] - l1 * G_L[0]) / det;
  const double wR1 = (l2 * G_R[0] - G_R[1]) / det;
  const double wR2 = (G_R[1] - l1 * G_R[0]) / det;
  const double w1 = pick(l1, wL1, wR1);
  const double w2 = pick(l2, wL2, wR2);
  return {w1 + w2, w1 * l1 + w2 * l2};
}

Eigen::Vector2d rusanov_flux(double h_L, double q_L, double h_R, double q_R,
                             double g) {
  const double s = std::max(std::abs(q_L / h_L) + std::sqrt(g * h_L),
                            std::abs(q_R / h_R) + std::sqrt(g * h_R));
  Eigen::Vector2d FL = physical_flux(h_L, q_L, g);
  Eigen::Vector2d FR = physical_flux(h_R, q_R, g);
  Eigen::Vector2d dU(h_R - h_L, q_R - q_L);
  return 0.5 * (FL + FR) - 0.5 * s * dU;
}

} // namespace swgf
