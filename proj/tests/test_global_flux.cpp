#include "doctest.h"

#include "swgf/global_flux.hpp"
#include "swgf/grid.hpp"

#include <cmath>

using namespace swgf;

namespace {

struct Setup {
  Grid grid;
  BathymetryData bath;
  PhysicalParams params;
};

Setup make_setup(double x0, double x1, int n, int order, ScalarFn b,
                 bool discontinuous, double g, double n_manning = 0.0) {
  Setup s;
  s.grid = build_grid(x0, x1, n, order);
  s.params.g = g;
  s.params.n_manning = n_manning;
  QuadratureRule rule = gauss_lobatto((order + 1) / 2 + 1);
  s.bath = sample_bathymetry(s.grid, rule, b, discontinuous);
  return s;
}

State lake_state(const Setup& s, double eta0) {
  State st(s.grid.n_total());
  st.h = eta0 - s.bath.cell_avg;
  st.q.setZero();
  return st;
}

} // namespace

TEST_CASE("interface jump value for a bottom step under a flat surface") {
  double j = interface_jump(2.0, 2.0, 0.0, 0.2, 9.812);
  CHECK(std::abs(j - 3.72856) <= 1e-14);
  // No bottom jump, no source jump.
  CHECK(interface_jump(1.3, 1.1, 0.4, 0.4, 9.812) == 0.0);
}

TEST_CASE("in-cell source integral on a linear ramp matches the hand value") {
  // One unit cell, bottom b(x) = x, flat surface eta = 2, g = 1. The
  // integrand of R is h = 2 - x, so R(1/2) = 7/8 and R(1) = 3/2.
  auto b = [](double x) { return x; };
  auto db = [](double) { return 1.0; };
  for (bool wb : {true, false}) {
    Setup s = make_setup(0.0, 1.0, 1, 3, b, false, 1.0);
    GlobalFluxAssembler gf(s.grid, s.params, 3, wb, 1e-8, s.bath, db);
    int j = s.grid.interior_begin();
    ArrayXd eta = ArrayXd::Constant(3, 2.0);
    ArrayXd bn = s.bath.node_vals.col(j);
    ArrayXd h = eta - bn;
    ArrayXd q = ArrayXd::Zero(3);
    ArrayXd R = gf.source_integral_reconstruct(0.0, eta, bn, h, q,
                                               gf.slope_table(j));
    CHECK(R[0] == 0.0);
    CHECK(std::abs(R[1] - 0.875) <= 5e-14);
    CHECK(std::abs(R[2] - 1.5) <= 5e-14);
  }
}

TEST_CASE("slope table rows sum to the exact bottom increments") {
  auto b = [](double x) {
    double t = x - 12.5;
    return 0.05 * std::sin(t) * std::exp(1.0 - t * t);
  };
  auto db = [](double x) {
    double t = x - 12.5;
    return 0.05 * std::exp(1.0 - t * t) * (std::cos(t) - 2.0 * t * std::sin(t));
  };
  Setup s = make_setup(0.0, 25.0, 40, 5, b, false, 9.812);
  GlobalFluxAssembler gf(s.grid, s.params, 5, true, 1e-8, s.bath, db);
  for (int j : {0, 13, 27, s.grid.n_total() - 1}) {
    const MatrixXd& tab = gf.slope_table(j);
    for (int m = 0; m < tab.rows(); ++m) {
      double target = s.bath.node_vals(m, j) - s.bath.node_vals(0, j);
      CHECK(std::abs(tab.row(m).sum() - target) <= 1e-15);
    }
  }
}

TEST_CASE("friction adds a positive increasing source for forward flow") {
  auto b = [](double) { return 0.0; };
  auto db = [](double) { return 0.0; };
  Setup s = make_setup(0.0, 1.0, 1, 3, b, false, 9.812, 0.05);
  GlobalFluxAssembler gf(s.grid, s.params, 3, true, 1e-8, s.bath, db);
  int j = s.grid.interior_begin();
  ArrayXd eta = ArrayXd::Constant(3, 1.0);
  ArrayXd bn = ArrayXd::Zero(3);
  ArrayXd h = ArrayXd::Constant(3, 1.0);
  ArrayXd q = ArrayXd::Constant(3, 2.0);
  ArrayXd R =
      gf.source_integral_reconstruct(0.0, eta, bn, h, q, gf.slope_table(j));
  CHECK(R[0] == 0.0);
  CHECK(R[1] > 0.0);
  CHECK(R[2] > R[1]);
  // Constant integrand g n^2 q|q| / h^(7/3) = 9.812 * 0.0025 * 4.
  CHECK(std::abs(R[2] - 0.09812) <= 1e-15);
  // Reversed flow drains instead.
  ArrayXd Rr = gf.source_integral_reconstruct(0.0, eta, bn, h, ArrayXd(-q),
                                              gf.slope_table(j));
  CHECK(Rr[2] < 0.0);
}

TEST_CASE("quadrature average of the physical flux on constant nodes") {
  auto b = [](double) { return 0.0; };
  auto db = [](double) { return 0.0; };
  Setup s = make_setup(0.0, 1.0, 1, 5, b, false, 9.812);
  GlobalFluxAssembler gf(s.grid, s.params, 5, true, 1e-8, s.bath, db);
  int n = gf.rule().n();
  Eigen::Vector2d F = gf.hyperbolic_flux_average(ArrayXd::Constant(n, 2.0),
                                                 ArrayXd::Constant(n, 4.42));
  CHECK(std::abs(F[0] - 4.42) <= 1e-14);
  CHECK(std::abs(F[1] - 29.3922) <= 1e-13);
}

TEST_CASE("still water gives node-constant momentum flux, smooth bottom") {
  auto b = [](double x) {
    double t = x - 12.5;
    return 0.05 * std::sin(t) * std::exp(1.0 - t * t);
  };
  auto db = [](double x) {
    double t = x - 12.5;
    return 0.05 * std::exp(1.0 - t * t) * (std::cos(t) - 2.0 * t * std::sin(t));
  };
  for (int order : {3, 5}) {
    Setup s = make_setup(0.0, 25.0, 50, order, b, false, 9.812);
    GlobalFluxAssembler gf(s.grid, s.params, order, true, 1e-8, s.bath, db);
    State st = lake_state(s, 1.0);
    GlobalFluxFields f;
    gf.assemble_global_flux_averages(st, 0.0, f);

    int r = (order + 1) / 2;
    int j0 = r - 1, j1 = s.grid.n_total() - r;
    double kmin = 1e300, kmax = -1e300;
    for (int j = j0; j <= j1; ++j)
      for (int m = 0; m < gf.rule().n(); ++m) {
        double K = 0.5 * s.params.g * f.h_n(m, j) * f.h_n(m, j) + f.R_n(m, j);
        kmin = std::min(kmin, K);
        kmax = std::max(kmax, K);
      }
    CHECK(kmax - kmin <= 1e-12);
    double kb = f.Kbar.segment(j0, j1 - j0 + 1).maxCoeff() -
                f.Kbar.segment(j0, j1 - j0 + 1).minCoeff();
    CHECK(kb <= 1e-12);
  }
}

TEST_CASE("still water gives node-constant momentum flux, bottom step") {
  auto b = [](double x) { return (x > 8.0 && x < 12.0) ? 0.2 : 0.0; };
  auto db = [](double) { return 0.0; };
  for (int order : {3, 5}) {
    Setup s = make_setup(0.0, 25.0, 100, order, b, true, 9.812);
    GlobalFluxAssembler gf(s.grid, s.params, order, true, 1e-8, s.bath, db);
    State st = lake_state(s, 2.0);
    GlobalFluxFields f;
    gf.assemble_global_flux_averages(st, 0.0, f);

    int r = (order + 1) / 2;
    int j0 = r - 1, j1 = s.grid.n_total() - r;
    double kmin = 1e300, kmax = -1e300;
    for (int j = j0; j <= j1; ++j)
      for (int m = 0; m < gf.rule().n(); ++m) {
        double K = 0.5 * s.params.g * f.h_n(m, j) * f.h_n(m, j) + f.R_n(m, j);
        kmin = std::min(kmin, K);
        kmax = std::max(kmax, K);
      }
    CHECK(kmax - kmin <= 1e-12);
    // The source trace jumps exactly where the bottom does.
    int e8 = s.grid.interior_begin() + 32;
    CHECK(std::abs(f.jumps[e8] - 3.72856) <= 1e-12);
    int e5 = s.grid.interior_begin() + 20;
    CHECK(f.jumps[e5] == 0.0);
  }
}

TEST_CASE("sweep bookkeeping: traces, jumps and anchors are consistent") {
  auto b = [](double x) {
    double t = x - 12.5;
    return 0.05 * std::sin(t) * std::exp(1.0 - t * t);
  };
  auto db = [](double x) {
    double t = x - 12.5;
    return 0.05 * std::exp(1.0 - t * t) * (std::cos(t) - 2.0 * t * std::sin(t));
  };
  Setup s = make_setup(0.0, 25.0, 30, 5, b, false, 9.812);
  GlobalFluxAssembler gf(s.grid, s.params, 5, true, 1e-8, s.bath, db);

  State st(s.grid.n_total());
  st.h = 2.0 - s.bath.cell_avg +
         0.05 * (0.3 * ArrayXd::LinSpaced(s.grid.n_total(), 0.0, 1.0)).sin();
  st.q = ArrayXd::Constant(s.grid.n_total(), 4.42);
  GlobalFluxFields f;
  gf.assemble_global_flux_averages(st, 0.0, f);

  int n = gf.rule().n();
  int j0 = 2, j1 = s.grid.n_total() - 3;
  for (int j = j0; j <= j1; ++j) {
    CHECK(f.R_n(0, j) == f.R_right[j]);
    CHECK(f.R_n(n - 1, j) == f.R_left[j + 1]);
    if (j < j1)
      CHECK(std::abs(f.R_right[j + 1] - f.R_left[j + 1] - f.jumps[j + 1]) <=
            1e-12);
  }
  // Left anchor: zero incoming source integral at the domain start.
  CHECK(f.R_right[s.grid.interior_begin()] == 0.0);

  GlobalFluxAssembler gfr(s.grid, s.params, 5, true, 1e-8, s.bath, db, true);
  GlobalFluxFields fr;
  gfr.assemble_global_flux_averages(st, 0.0, fr);
  CHECK(fr.R_left[s.grid.interior_end()] == 0.0);

  // The anchor choice is a pure gauge: reconstructions agree bitwise and
  // the source integral moves by one constant.
  for (int j = j0; j <= j1; ++j) {
    for (int m = 0; m < n; ++m) {
      CHECK(f.h_n(m, j) == fr.h_n(m, j));
      CHECK(f.q_n(m, j) == fr.q_n(m, j));
      CHECK(f.eta_n(m, j) == fr.eta_n(m, j));
    }
    CHECK(f.jumps[j] == fr.jumps[j]);
  }
  double shift = fr.R_n(0, j0) - f.R_n(0, j0);
  for (int j = j0; j <= j1; ++j) {
    for (int m = 0; m < n; ++m)
      CHECK(std::abs(fr.R_n(m, j) - f.R_n(m, j) - shift) <= 1e-12);
    CHECK(std::abs(fr.Kbar[j] - f.Kbar[j] - shift) <= 1e-12);
  }
}

TEST_CASE("drying surface is rejected with a diagnostic") {
  auto b = [](double x) {
    double t = x - 12.5;
    return std::sin(t) * std::exp(1.0 - t * t);  // amplitude ~0.74
  };
  auto db = [](double x) {
    double t = x - 12.5;
    return std::exp(1.0 - t * t) * (std::cos(t) - 2.0 * t * std::sin(t));
  };
  Setup s = make_setup(0.0, 25.0, 50, 5, b, false, 9.812);
  GlobalFluxAssembler gf(s.grid, s.params, 5, true, 1e-8, s.bath, db);
  State st = lake_state(s, 0.3);  // below the bump top
  GlobalFluxFields f;
  CHECK_THROWS_AS(gf.assemble_global_flux_averages(st, 0.0, f), SolverError);
}
