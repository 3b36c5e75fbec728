#include "swgf/quadrature.hpp"

#include <cmath>
#include <vector>

namespace swgf {

namespace {

using ld = long double;

// Legendre polynomial P_n and derivative at x, by recurrence.
void legendre_eval(int n, ld x, ld& p, ld& dp) {
  ld p0 = 1.0L, p1 = x;
  if (n == 0) { p = p0; dp = 0.0L; return; }
  for (int k = 2; k <= n; ++k) {
    ld p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  p = p1;
  dp = n * (x * p1 - p0) / (x * x - 1.0L);
}

// Roots of P_n on (-1,1) by Newton from Chebyshev initial guesses.
std::vector<ld> legendre_roots(int n) {
  std::vector<ld> r(n);
  for (int i = 0; i < n; ++i) {
    ld x = -std::cos(M_PI * (i + 0.75L) / (n + 0.5L));
    for (int it = 0; it < 100; ++it) {
      ld p, dp;
      legendre_eval(n, x, p, dp);
      ld step = p / dp;
      x -= step;
      if (std::abs(step) < 1e-19L) break;
    }
    r[i] = x;
  }
  return r;
}

// Interior Lobatto nodes are the roots of P'_{n-1}.
std::vector<ld> lobatto_nodes(int n) {
  std::vector<ld> x(n);
  x[0] = -1.0L;
  x[n - 1] = 1.0L;
  int m = n - 2;
  for (int i = 0; i < m; ++i) {
    ld t = -std::cos(M_PI * (i + 1.0L) / (n - 1.0L));
    for (int it = 0; it < 100; ++it) {
      ld p, dp;
      legendre_eval(n - 1, t, p, dp);
      // Newton on dp: need second derivative, from the ODE
      // (1-x^2) P'' = 2x P' - n(n+1) P.
      ld d2p = (2.0L * t * dp - (n - 1) * n * p) / (1.0L - t * t);
      ld step = dp / d2p;
      t -= step;
      if (std::abs(step) < 1e-19L) break;
    }
    x[i + 1] = t;
  }
  return x;
}

// Monomial coefficients of the Lagrange cardinal basis for the given nodes.
// basis[s][k] multiplies x^k.
std::vector<std::vector<ld>> lagrange_basis(const std::vector<ld>& t) {
  int n = static_cast<int>(t.size());
  std::vector<std::vector<ld>> basis(n);
  for (int s = 0; s < n; ++s) {
    std::vector<ld> c = {1.0L};
    ld denom = 1.0L;
    for (int j = 0; j < n; ++j) {
      if (j == s) continue;
      denom *= t[s] - t[j];
      std::vector<ld> next(c.size() + 1, 0.0L);
      for (size_t k = 0; k < c.size(); ++k) {
        next[k] -= t[j] * c[k];
        next[k + 1] += c[k];
      }
      c = std::move(next);
    }
    for (auto& v : c) v /= denom;
    basis[s] = std::move(c);
  }
  return basis;
}

ld poly_integral(const std::vector<ld>& c, ld a, ld b) {
  ld fa = 0.0L, fb = 0.0L;
  for (size_t k = c.size(); k-- > 0;) {
    fa = fa * a + c[k] / (k + 1.0L);
    fb = fb * b + c[k] / (k + 1.0L);
  }
  return fb * b - fa * a;
}

ld poly_deriv_eval(const std::vector<ld>& c, ld x) {
  ld acc = 0.0L;
  for (size_t k = c.size(); k-- > 1;) acc = acc * x + c[k] * static_cast<ld>(k);
  return acc;
}

// Nudge the largest-magnitude entry of a coefficient row so the row sum is
// exact; the O(eps) correction keeps constants reproduced bitwise.
void pin_sum(double* v, Eigen::Index n, Eigen::Index stride, double target) {
  Eigen::Index imax = 0;
  double best = -1.0, sum = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    double x = v[i * stride];
    sum += x;
    if (std::abs(x) > best) {
      best = std::abs(x);
      imax = i;
    }
  }
  v[imax * stride] += target - sum;
}

QuadratureRule assemble(const std::vector<ld>& nodes01) {
  int n = static_cast<int>(nodes01.size());
  auto basis = lagrange_basis(nodes01);
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  rule.tableau.resize(n, n);
  rule.deriv.resize(n, n);
  for (int q = 0; q < n; ++q) rule.nodes[q] = static_cast<double>(nodes01[q]);
  for (int s = 0; s < n; ++s) {
    rule.weights[s] = static_cast<double>(poly_integral(basis[s], 0.0L, 1.0L));
    for (int q = 0; q < n; ++q) {
      rule.tableau(q, s) =
          static_cast<double>(poly_integral(basis[s], 0.0L, nodes01[q]));
      rule.deriv(q, s) = static_cast<double>(poly_deriv_eval(basis[s], nodes01[q]));
    }
  }
  pin_sum(rule.weights.data(), n, 1, 1.0);
  for (int q = 0; q < n; ++q) {
    pin_sum(rule.tableau.data() + q, n, rule.tableau.outerStride(), rule.nodes[q]);
    pin_sum(rule.deriv.data() + q, n, rule.deriv.outerStride(), 0.0);
  }
  rule.has_edge_nodes = nodes01.front() == 0.0L && nodes01.back() == 1.0L;
  return rule;
}

} // namespace

double QuadratureRule::integrate_partial(const ArrayXd& values, int target) const {
  double acc = 0.0;
  for (int s = 0; s < n(); ++s) acc += tableau(target, s) * values[s];
  return acc;
}

double QuadratureRule::integrate(const ArrayXd& values) const {
  return (weights * values).sum();
}

QuadratureRule gauss_lobatto(int n) {
  if (n < 2) throw SolverError("gauss_lobatto: need at least 2 nodes");
  auto x = lobatto_nodes(n);
  for (auto& v : x) v = 0.5L * (v + 1.0L);
  x.front() = 0.0L;
  x.back() = 1.0L;
  return assemble(x);
}

QuadratureRule gauss_legendre(int n) {
  if (n < 1) throw SolverError("gauss_legendre: need at least 1 node");
  auto x = legendre_roots(n);
  for (auto& v : x) v = 0.5L * (v + 1.0L);
  return assemble(x);
}

QuadratureRule interpolatory_rule(const ArrayXd& nodes) {
  if (nodes.size() < 1) throw SolverError("interpolatory_rule: empty node set");
  std::vector<ld> x(nodes.size());
  for (int i = 0; i < nodes.size(); ++i) {
    x[i] = static_cast<ld>(nodes[i]);
    if (i > 0 && !(x[i] > x[i - 1]))
      throw SolverError("interpolatory_rule: nodes must ascend");
  }
  return assemble(x);
}

ArrayXd cardinal_values(const ArrayXd& nodes, double x) {
  const int n = static_cast<int>(nodes.size());
  ArrayXd out = ArrayXd::Zero(n);
  for (int s = 0; s < n; ++s) {
    if (x == nodes[s]) {
      out[s] = 1.0;
      return out;
    }
  }
  ArrayXd w(n);
  for (int s = 0; s < n; ++s) {
    double prod = 1.0;
    for (int j = 0; j < n; ++j)
      if (j != s) prod *= nodes[s] - nodes[j];
    w[s] = 1.0 / (prod * (x - nodes[s]));
  }
  return w / w.sum();
}

} // namespace swgf
