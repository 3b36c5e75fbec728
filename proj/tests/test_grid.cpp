#include "doctest.h"

#include "swgf/cases.hpp"
#include "swgf/grid.hpp"

#include <cmath>

using namespace swgf;

TEST_CASE("grid layout: spacing, halos and coordinates") {
  Grid g = build_grid(0.0, 25.0, 100, 5);
  CHECK(g.dx == 0.25);
  CHECK(g.n_total() == 110);
  CHECK(g.interior_begin() == 5);
  CHECK(g.interior_end() == 105);
  CHECK(g.cell_left(5) == 0.0);
  CHECK(std::abs(g.cell_center(5) - 0.125) <= 1e-15);
  CHECK(std::abs(g.cell_left(105) - 25.0) <= 1e-12);
  // First ghost cell sits left of the domain.
  CHECK(std::abs(g.cell_left(0) + 5 * 0.25) <= 1e-12);
}

TEST_CASE("cell averages of a quadratic are exact under a 3 node rule") {
  Grid g = build_grid(0.0, 1.0, 4, 0);
  ArrayXd avg =
      sample_cell_averages(g, gauss_lobatto(3), [](double x) { return x * x; });
  // First cell [0, 1/4]: mean of x^2 is (1/4)^2/3.
  CHECK(std::abs(avg[0] - 1.0 / 48.0) <= 1e-16);
  double exact3 = (std::pow(1.0, 3) - std::pow(0.75, 3)) / 3.0 / 0.25;
  CHECK(std::abs(avg[3] - exact3) <= 1e-15);
}

TEST_CASE("bathymetry sampling keeps node values and averages consistent") {
  Grid g = build_grid(0.0, 25.0, 40, 3);
  QuadratureRule rule = gauss_lobatto(4);
  auto b = [](double x) { return 0.3 * std::sin(0.5 * x) + 0.4; };
  BathymetryData bd = sample_bathymetry(g, rule, b);
  REQUIRE(bd.node_vals.rows() == 4);
  REQUIRE(bd.node_vals.cols() == g.n_total());
  for (int j : {0, 7, 25, g.n_total() - 1}) {
    double xl = g.cell_left(j);
    for (int m = 0; m < 4; ++m)
      CHECK(std::abs(bd.node_vals(m, j) - b(xl + rule.nodes[m] * g.dx)) <=
            1e-14);
    double acc = 0.0;
    for (int m = 0; m < 4; ++m) acc += rule.weights[m] * bd.node_vals(m, j);
    CHECK(std::abs(bd.cell_avg[j] - acc) <= 1e-15);
  }
}

TEST_CASE("interface-aligned bottom jumps resolve to one-sided samples") {
  // dx = 0.25 puts the jumps of the step profile exactly on interfaces.
  Grid g = build_grid(0.0, 25.0, 100, 5);
  QuadratureRule rule = gauss_lobatto(4);
  auto step = [](double x) { return (x > 8.0 && x < 12.0) ? 0.2 : 0.0; };
  BathymetryData bd = sample_bathymetry(g, rule, step, true);

  auto total = [&](double x) {
    return g.interior_begin() + static_cast<int>(std::lround(x / g.dx));
  };
  int left_of_8 = total(8.0) - 1, right_of_8 = total(8.0);
  CHECK(bd.cell_avg[left_of_8] == 0.0);
  CHECK(std::abs(bd.cell_avg[right_of_8] - 0.2) <= 1e-16);
  CHECK(bd.node_vals(3, left_of_8) == 0.0);  // edge node sees its own side
  CHECK(bd.node_vals(0, right_of_8) == 0.2);
  int left_of_12 = total(12.0) - 1, right_of_12 = total(12.0);
  CHECK(std::abs(bd.cell_avg[left_of_12] - 0.2) <= 1e-16);
  CHECK(bd.cell_avg[right_of_12] == 0.0);
}

TEST_CASE("ghost fills implement each boundary treatment") {
  Grid g = build_grid(0.0, 10.0, 10, 2);
  ArrayXd b_avg = ArrayXd::Zero(g.n_total());
  b_avg[0] = 0.1;
  b_avg[1] = 0.2;

  CaseSpec cs;
  cs.eta0 = 3.0;
  State s(g.n_total());
  s.h.segment(2, 10) = ArrayXd::LinSpaced(10, 1.0, 1.9);
  s.q.segment(2, 10) = ArrayXd::LinSpaced(10, -0.5, 0.4);

  cs.bc_left = {BcKind::equilibrium, 0, 0};
  cs.bc_right = {BcKind::extrapolate, 0, 0};
  apply_boundary(s, g, cs, b_avg);
  CHECK(s.h[0] == 3.0 - 0.1);
  CHECK(s.h[1] == 3.0 - 0.2);
  CHECK(s.q[0] == 0.0);
  CHECK(s.h[12] == s.h[11]);
  CHECK(s.q[13] == s.q[11]);

  cs.bc_left = {BcKind::inflow_q, 0, 4.42};
  cs.bc_right = {BcKind::outflow_h, 2.0, 0};
  apply_boundary(s, g, cs, b_avg);
  CHECK(s.q[0] == 4.42);
  CHECK(s.q[1] == 4.42);
  CHECK(s.h[1] == s.h[2]);  // depth extrapolated from the first interior cell
  CHECK(s.h[12] == 2.0);
  CHECK(s.h[13] == 2.0);
  CHECK(s.q[12] == s.q[11]);

  cs.bc_left = {BcKind::inflow_hq, 2.0, 24.0};
  apply_boundary(s, g, cs, b_avg);
  CHECK(s.h[0] == 2.0);
  CHECK(s.q[0] == 24.0);
}
