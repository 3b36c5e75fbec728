#pragma once

#include "swgf/types.hpp"

#include <cstdint>
#include <vector>

namespace swgf {

/// How the linear combination of candidate stencils behaves at one
/// evaluation point.
enum class WeightKind : uint8_t {
  positive,  // all optimal weights nonnegative: standard nonlinear blend
  split,     // mixed-sign optimal weights: positive/negative group treatment
  completed  // no optimal weights exist: value recovered from the cell
             // average and the remaining evaluation points
};

struct PointWeights {
  WeightKind kind = WeightKind::positive;
  ArrayXd d;         // optimal weights, one per candidate stencil
  ArrayXd gamma_pos; // normalized positive-part weights (split only)
  ArrayXd gamma_neg; // normalized negative-part weights (split only)
  double sigma_pos = 1.0;
  double sigma_neg = 0.0;
};

/// Nonlinear blend coefficients produced by one reconstruction. Feeding them
/// back as imposed weights reconstructs another quantity with the identical
/// stencil combination, which keeps sums of reconstructed quantities exact.
struct WenoWeights {
  ArrayXd beta;                   // smoothness indicators of the window
  MatrixXd omega;                 // points x stencils effective coefficients
  std::vector<uint8_t> completed; // rows obtained by completion instead
};

/// Reconstruction operator of fixed order with a fixed set of evaluation
/// points in reference coordinates. All stencil polynomials interpolate the
/// primitive of the cell averages, so every candidate conserves the focal
/// cell average.
class WenoReconstructor {
public:
  // completion_weights: full-cell quadrature weights attached to the
  // evaluation points, needed when a point has no optimal weights (at most
  // one such point is supported per operator).
  WenoReconstructor(int order, ArrayXd eval_points,
                    ArrayXd completion_weights = ArrayXd());

  int order() const { return p_; }
  int stencils() const { return r_; }
  int points() const { return static_cast<int>(eval_points_.size()); }
  const ArrayXd& eval_points() const { return eval_points_; }
  const PointWeights& point_weights(int e) const { return lin_[e]; }

  // Candidate polynomial values: stencil m at point e is
  // stencil_coeff(e)(m,j) contracted with window[m+j], j = 0..r-1.
  const MatrixXd& stencil_coeff(int e) const { return coeff_[e]; }

  // Reconstruct point values from a window of `order` consecutive cell
  // averages whose middle entry is the focal cell. When `imposed` is given
  // its coefficients are reused verbatim and epsilon is ignored; otherwise
  // fresh coefficients are computed (and stored in weights_out if non-null).
  ArrayXd reconstruct(const ArrayXd& window, double epsilon,
                      const WenoWeights* imposed = nullptr,
                      WenoWeights* weights_out = nullptr) const;

private:
  int p_ = 0, r_ = 0;
  ArrayXd eval_points_;
  ArrayXd completion_weights_;
  std::vector<MatrixXd> coeff_;
  std::vector<PointWeights> lin_;
  int completed_point_ = -1;
};

/// Optimal linear stencil weights at one evaluation point, classified as
/// positive, split (mixed sign) or nonexistent (kind == completed).
PointWeights linear_weights(int order, double eval_point);

/// Jiang-Shu smoothness indicators of a window of `order` cell averages.
ArrayXd smoothness_indicators(const ArrayXd& window, int order);

} // namespace swgf
