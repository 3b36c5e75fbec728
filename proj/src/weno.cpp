#include "swgf/weno.hpp"

#include <cmath>

namespace swgf {

namespace {

using ld = long double;

// Derivative at x of the Lagrange cardinal basis through the given points,
// one value per basis function.
std::vector<ld> cardinal_derivatives(const std::vector<ld>& t, ld x) {
  int n = static_cast<int>(t.size());
  std::vector<ld> out(n, 0.0L);
  for (int s = 0; s < n; ++s) {
    ld denom = 1.0L;
    for (int j = 0; j < n; ++j)
      if (j != s) denom *= t[s] - t[j];
    ld acc = 0.0L;
    for (int k = 0; k < n; ++k) {
      if (k == s) continue;
      ld prod = 1.0L;
      for (int j = 0; j < n; ++j)
        if (j != s && j != k) prod *= x - t[j];
      acc += prod;
    }
    out[s] = acc / denom;
  }
  return out;
}

// Reconstruction coefficients at reference point xi for a block of `cells`
// consecutive cells whose left-most interface sits at `left` (focal-cell
// coordinates, unit cell width). Built by interpolating the primitive at the
// interfaces and differentiating: coefficient of average j is the sum of the
// cardinal derivatives over interfaces right of cell j.
std::vector<ld> block_coefficients(int cells, ld left, ld xi) {
  std::vector<ld> ifaces(cells + 1);
  for (int k = 0; k <= cells; ++k) ifaces[k] = left + k;
  auto dl = cardinal_derivatives(ifaces, xi);
  std::vector<ld> c(cells, 0.0L);
  for (int j = 0; j < cells; ++j) {
    ld acc = 0.0L;
    for (int k = j + 1; k <= cells; ++k) acc += dl[k];
    c[j] = acc;
  }
  return c;
}

struct PointSystem {
  MatrixXd A; // p x r, column m holds stencil m's coefficients padded
  VectorXd c; // p, coefficients of the order-p reconstruction
  MatrixXd stencil; // r x r, row m = stencil m coefficients
};

// Adjust the largest entry so the coefficients reproduce constants exactly.
void pin_unit_sum(std::vector<double>& v) {
  size_t imax = 0;
  double best = -1.0, sum = 0.0;
  for (size_t i = 0; i < v.size(); ++i) {
    sum += v[i];
    if (std::abs(v[i]) > best) {
      best = std::abs(v[i]);
      imax = i;
    }
  }
  v[imax] += 1.0 - sum;
}

PointSystem point_system(int p, int r, double xi) {
  PointSystem s;
  s.A = MatrixXd::Zero(p, r);
  s.c.resize(p);
  s.stencil.resize(r, r);
  for (int m = 0; m < r; ++m) {
    auto cm = block_coefficients(r, static_cast<ld>(m - (r - 1)), xi);
    std::vector<double> row(cm.begin(), cm.end());
    pin_unit_sum(row);
    for (int j = 0; j < r; ++j) {
      s.stencil(m, j) = row[j];
      s.A(m + j, m) = row[j];
    }
  }
  auto cp = block_coefficients(p, static_cast<ld>(-(r - 1)), xi);
  std::vector<double> crow(cp.begin(), cp.end());
  pin_unit_sum(crow);
  for (int j = 0; j < p; ++j) s.c[j] = crow[j];
  return s;
}

PointWeights classify(const PointSystem& sys) {
  PointWeights w;
  VectorXd d = sys.A.colPivHouseholderQr().solve(sys.c);
  double resid = (sys.A * d - sys.c).lpNorm<Eigen::Infinity>();
  double scale = std::max(1.0, sys.c.lpNorm<Eigen::Infinity>());
  if (resid > 1e-7 * scale) {
    w.kind = WeightKind::completed;
    return w;
  }
  w.d = d.array();
  if ((w.d < -1e-12).any()) {
    w.kind = WeightKind::split;
    ArrayXd gp = (w.d + 3.0 * w.d.abs()) / 2.0;
    ArrayXd gn = gp - w.d;
    w.sigma_pos = gp.sum();
    w.sigma_neg = gn.sum();
    w.gamma_pos = gp / w.sigma_pos;
    w.gamma_neg = gn / w.sigma_neg;
  } else {
    w.kind = WeightKind::positive;
    w.d = w.d.max(0.0);
    w.d /= w.d.sum();
  }
  return w;
}

ArrayXd nonlinear_blend(const PointWeights& pw, const ArrayXd& beta, double eps) {
  auto weigh = [&](const ArrayXd& g) {
    ArrayXd a = g / (eps + beta).square();
    return ArrayXd(a / a.sum());
  };
  if (pw.kind == WeightKind::positive) return weigh(pw.d);
  return pw.sigma_pos * weigh(pw.gamma_pos) - pw.sigma_neg * weigh(pw.gamma_neg);
}

} // namespace

PointWeights linear_weights(int order, double eval_point) {
  if (order != 3 && order != 5)
    throw SolverError("linear_weights: order must be 3 or 5");
  int r = (order + 1) / 2;
  return classify(point_system(order, r, eval_point));
}

ArrayXd smoothness_indicators(const ArrayXd& window, int order) {
  if (order == 3) {
    if (window.size() != 3) throw SolverError("smoothness_indicators: window size");
    ArrayXd b(2);
    b[0] = (window[1] - window[0]) * (window[1] - window[0]);
    b[1] = (window[2] - window[1]) * (window[2] - window[1]);
    return b;
  }
  if (order == 5) {
    if (window.size() != 5) throw SolverError("smoothness_indicators: window size");
    ArrayXd b(3);
    auto sq = [](double v) { return v * v; };
    b[0] = 13.0 / 12.0 * sq(window[0] - 2 * window[1] + window[2]) +
           0.25 * sq(window[0] - 4 * window[1] + 3 * window[2]);
    b[1] = 13.0 / 12.0 * sq(window[1] - 2 * window[2] + window[3]) +
           0.25 * sq(window[1] - window[3]);
    b[2] = 13.0 / 12.0 * sq(window[2] - 2 * window[3] + window[4]) +
           0.25 * sq(3 * window[2] - 4 * window[3] + window[4]);
    return b;
  }
  throw SolverError("smoothness_indicators: order must be 3 or 5");
}

WenoReconstructor::WenoReconstructor(int order, ArrayXd eval_points,
                                     ArrayXd completion_weights)
    : p_(order), r_((order + 1) / 2), eval_points_(std::move(eval_points)),
      completion_weights_(std::move(completion_weights)) {
  if (order != 3 && order != 5)
    throw SolverError("WenoReconstructor: order must be 3 or 5");
  int np = points();
  coeff_.reserve(np);
  lin_.reserve(np);
  for (int e = 0; e < np; ++e) {
    auto sys = point_system(p_, r_, eval_points_[e]);
    coeff_.push_back(sys.stencil);
    lin_.push_back(classify(sys));
    if (lin_.back().kind == WeightKind::completed) {
      if (completed_point_ >= 0)
        throw SolverError("WenoReconstructor: more than one point needs completion");
      completed_point_ = e;
    }
  }
  if (completed_point_ >= 0) {
    if (completion_weights_.size() != np)
      throw SolverError("WenoReconstructor: completion weights required");
    if (std::abs(completion_weights_[completed_point_]) < 1e-14)
      throw SolverError("WenoReconstructor: zero completion weight at singular point");
  }
}

ArrayXd WenoReconstructor::reconstruct(const ArrayXd& window, double epsilon,
                                       const WenoWeights* imposed,
                                       WenoWeights* weights_out) const {
  if (window.size() != p_) throw SolverError("reconstruct: window size");
  int np = points();
  ArrayXd values(np);
  ArrayXd beta;
  if (!imposed) beta = smoothness_indicators(window, p_);

  WenoWeights fresh;
  if (weights_out) {
    fresh.beta = beta;
    fresh.omega = MatrixXd::Zero(np, r_);
    fresh.completed.assign(np, 0);
  }

  for (int e = 0; e < np; ++e) {
    bool is_completed = imposed ? (imposed->completed[e] != 0)
                                : (lin_[e].kind == WeightKind::completed);
    if (is_completed) {
      values[e] = 0.0;
      if (weights_out) fresh.completed[e] = 1;
      continue;
    }
    ArrayXd omega = imposed
                        ? ArrayXd(imposed->omega.row(e).transpose().array())
                        : nonlinear_blend(lin_[e], beta, epsilon);
    double v = 0.0;
    for (int m = 0; m < r_; ++m) {
      double pm = 0.0;
      for (int j = 0; j < r_; ++j) pm += coeff_[e](m, j) * window[m + j];
      v += omega[m] * pm;
    }
    values[e] = v;
    if (weights_out) fresh.omega.row(e) = omega.matrix().transpose();
  }

  int cp = completed_point_;
  if (imposed) {
    cp = -1;
    for (int e = 0; e < np; ++e)
      if (imposed->completed[e]) cp = e;
  }
  if (cp >= 0) {
    double rest = 0.0;
    for (int e = 0; e < np; ++e)
      if (e != cp) rest += completion_weights_[e] * values[e];
    values[cp] = (window[r_ - 1] - rest) / completion_weights_[cp];
  }

  if (weights_out) *weights_out = std::move(fresh);
  return values;
}

} // namespace swgf
