#include "swgf/scheme.hpp"

#include "swgf/numerical_flux.hpp"

#include <cmath>
#include <string>

namespace swgf {

SchemeKind parse_scheme(const std::string& name) {
  if (name == "gf_wb") return SchemeKind::gf_wb;
  if (name == "gf_nonwb") return SchemeKind::gf_nonwb;
  if (name == "classical") return SchemeKind::classical;
  throw SolverError("unknown scheme: " + name);
}

std::string scheme_name(SchemeKind kind) {
  switch (kind) {
    case SchemeKind::gf_wb: return "gf_wb";
    case SchemeKind::gf_nonwb: return "gf_nonwb";
    case SchemeKind::classical: return "classical";
  }
  return "?";
}

SemiDiscrete::SemiDiscrete(const CaseSpec& cs, int n_cells, SchemeKind kind,
                           int order, double epsilon)
    : case_(cs), grid_(build_grid(cs.x0, cs.x1, n_cells, order)), kind_(kind),
      order_(order), eps_(epsilon),
      sample_rule_(gauss_lobatto((order + 1) / 2 + 1)),
      bath_(sample_bathymetry(grid_, sample_rule_, cs.b_fn, cs.b_discontinuous)) {
  if (order != 3 && order != 5) throw SolverError("order must be 3 or 5");
  if (kind_ == SchemeKind::classical) {
    source_rule_ = gauss_legendre(5);
    const int ns = source_rule_.n();
    ArrayXd pts(ns + 2), cw(ns + 2);
    pts[0] = 0.0;
    pts[ns + 1] = 1.0;
    cw[0] = 0.0;
    cw[ns + 1] = 0.0;
    pts.segment(1, ns) = source_rule_.nodes;
    cw.segment(1, ns) = source_rule_.weights;
    recon_classic_ = std::make_unique<WenoReconstructor>(order, pts, cw);
    bslope_src_.resize(ns, grid_.n_total());
    for (int j = 0; j < grid_.n_total(); ++j) {
      double xl = grid_.cell_left(j);
      for (int s = 0; s < ns; ++s)
        bslope_src_(s, j) = case_.db_fn(xl + source_rule_.nodes[s] * grid_.dx);
    }
  } else {
    auto pins_h = [](BcKind k) {
      return k == BcKind::inflow_hq || k == BcKind::outflow_h ||
             k == BcKind::equilibrium;
    };
    const bool anchor_right =
        !pins_h(case_.bc_left.kind) && pins_h(case_.bc_right.kind);
    gf_ = std::make_unique<GlobalFluxAssembler>(
        grid_, case_.params, order, kind_ == SchemeKind::gf_wb, eps_, bath_,
        case_.db_fn, anchor_right);
    ArrayXd edges(2);
    edges << 0.0, 1.0;
    recon_iface_ = std::make_unique<WenoReconstructor>(order, edges);
  }
}

const ArrayXd& SemiDiscrete::bathymetry_averages() const {
  return bath_.cell_avg;
}

ArrayXd SemiDiscrete::pack(const State& s) const {
  const int N = grid_.n_interior;
  ArrayXd y(2 * N);
  y.head(N) = s.h.segment(grid_.interior_begin(), N);
  y.tail(N) = s.q.segment(grid_.interior_begin(), N);
  return y;
}

State SemiDiscrete::unpack(const ArrayXd& y) const {
  const int N = grid_.n_interior;
  State s(grid_.n_total());
  s.h.segment(grid_.interior_begin(), N) = y.head(N);
  s.q.segment(grid_.interior_begin(), N) = y.tail(N);
  return s;
}

ArrayXd SemiDiscrete::initial_state() const {
  State s(grid_.n_total());
  const int ib = grid_.interior_begin();
  for (int i = 0; i < grid_.n_interior; ++i) {
    int j = ib + i;
    double h = case_.eta0 - bath_.cell_avg[j];
    if (case_.eta_perturbation) {
      double xl = grid_.cell_left(j);
      double acc = 0.0;
      for (int t = 0; t < sample_rule_.n(); ++t)
        acc += sample_rule_.weights[t] *
               case_.eta_perturbation(xl + sample_rule_.nodes[t] * grid_.dx);
      h += acc;
    }
    s.h[j] = h;
    s.q[j] = 0.0;
  }
  return pack(s);
}

State SemiDiscrete::padded(const ArrayXd& y, double t) const {
  State s = unpack(y);
  apply_boundary(s, grid_, case_, bath_.cell_avg);
  for (int j = 0; j < grid_.n_total(); ++j)
    if (!(s.h[j] > 0.0))
      throw SolverError("dry cell average at cell " +
                        std::to_string(j - grid_.n_ghost) +
                        ", t = " + std::to_string(t));
  return s;
}

ArrayXd SemiDiscrete::rhs(const ArrayXd& y, double t) const {
  State s = padded(y, t);
  if (kind_ == SchemeKind::classical) return rhs_classical(s, t);
  return rhs_global_flux(s, t);
}

ArrayXd SemiDiscrete::rhs_global_flux(const State& s, double t) const {
  gf_->assemble_global_flux_averages(s, t, fields_);
  const int r = (order_ + 1) / 2;
  const int nG = grid_.n_ghost;
  const int N = grid_.n_interior;
  const int n = gf_->rule().n();
  const double g = case_.params.g;

  ArrayXd qL(N + 1), qR(N + 1), KL(N + 1), KR(N + 1);
  for (int j = nG - 1; j <= nG + N; ++j) {
    const int w0 = j - (r - 1);
    ArrayXd qv = recon_iface_->reconstruct(fields_.Fbar_q.segment(w0, order_), eps_);
    ArrayXd Kv = recon_iface_->reconstruct(fields_.Kbar.segment(w0, order_), eps_);
    if (j >= nG) {
      qR[j - nG] = qv[0];
      KR[j - nG] = Kv[0];
    }
    if (j + 1 <= nG + N) {
      qL[j + 1 - nG] = qv[1];
      KL[j + 1 - nG] = Kv[1];
    }
  }

  ArrayXd Hq(N + 1), HK(N + 1);
  for (int k = 0; k <= N; ++k) {
    const int e = nG + k;
    const double RL = fields_.R_left[e];
    const double RR = fields_.R_right[e];
    const double hintL = fields_.h_n(n - 1, e - 1);
    const double hintR = fields_.h_n(0, e);
    const double hL = recover_depth(qL[k], KL[k], RL, hintL, g);
    const double hR = recover_depth(qR[k], KR[k], RR, hintR, g);
    Eigen::Vector2d H = upwind_global_flux({qL[k], KL[k]}, {qR[k], KR[k]},
                                           hL, hR, g);
    Hq[k] = H[0];
    HK[k] = H[1];
  }

  ArrayXd out(2 * N);
  const double inv_dx = 1.0 / grid_.dx;
  for (int i = 0; i < N; ++i) {
    out[i] = -(Hq[i + 1] - Hq[i]) * inv_dx;
    out[N + i] = -(HK[i + 1] - HK[i]) * inv_dx;
  }
  return out;
}

ArrayXd SemiDiscrete::rhs_classical(const State& s, double t) const {
  const int r = (order_ + 1) / 2;
  const int nG = grid_.n_ghost;
  const int N = grid_.n_interior;
  const int ns = source_rule_.n();
  const double g = case_.params.g;
  const double n2 = case_.params.n_manning * case_.params.n_manning;

  const int ncells = N + 2;           // nG-1 .. nG+N
  ArrayXXd hv(ns + 2, ncells), qv(ns + 2, ncells);
  for (int j = nG - 1; j <= nG + N; ++j) {
    const int w0 = j - (r - 1);
    const int c = j - (nG - 1);
    hv.col(c) = recon_classic_->reconstruct(s.h.segment(w0, order_), eps_);
    qv.col(c) = recon_classic_->reconstruct(s.q.segment(w0, order_), eps_);
    for (int m = 0; m < ns + 2; ++m)
      if (!(hv(m, c) > 0.0))
        throw SolverError("dry reconstruction at cell " +
                          std::to_string(j - nG) + ", t = " + std::to_string(t));
  }

  ArrayXd Hh(N + 1), Hq2(N + 1);
  for (int k = 0; k <= N; ++k) {
    const int cl = k, cr = k + 1; // cells nG-1+k and nG+k
    Eigen::Vector2d H =
        rusanov_flux(hv(ns + 1, cl), qv(ns + 1, cl), hv(0, cr), qv(0, cr), g);
    Hh[k] = H[0];
    Hq2[k] = H[1];
  }

  ArrayXd out(2 * N);
  const double inv_dx = 1.0 / grid_.dx;
  for (int i = 0; i < N; ++i) {
    const int c = i + 1;
    const int j = nG + i;
    double src = 0.0;
    for (int sn = 0; sn < ns; ++sn) {
      double hq = hv(sn + 1, c), qq = qv(sn + 1, c);
      double term = g * hq * bslope_src_(sn, j);
      if (n2 > 0.0) term += g * n2 * qq * std::abs(qq) / std::pow(hq, 7.0 / 3.0);
      src -= source_rule_.weights[sn] * term;
    }
    out[i] = -(Hh[i + 1] - Hh[i]) * inv_dx;
    out[N + i] = -(Hq2[i + 1] - Hq2[i]) * inv_dx + src;
  }
  return out;
}

double SemiDiscrete::max_wave_speed(const ArrayXd& y) const {
  const int N = grid_.n_interior;
  double smax = 0.0;
  for (int i = 0; i < N; ++i) {
    double h = y[i], q = y[N + i];
    if (!(h > 0.0))
      throw SolverError("dry cell average at cell " + std::to_string(i));
    smax = std::max(smax, std::abs(q / h) + std::sqrt(case_.params.g * h));
  }
  return smax;
}

SemiDiscrete::FluxAverages SemiDiscrete::flux_averages(const ArrayXd& y) const {
  FluxAverages out;
  const int nG = grid_.n_ghost;
  const int N = grid_.n_interior;
  if (kind_ == SchemeKind::classical) {
    out.qbar = y.tail(N);
    return out;
  }
  State s = padded(y, case_.t_end);
  gf_->assemble_global_flux_averages(s, case_.t_end, fields_);
  out.qbar = fields_.Fbar_q.segment(nG, N);
  out.Kbar = fields_.Kbar.segment(nG, N);
  return out;
}

} // namespace swgf
