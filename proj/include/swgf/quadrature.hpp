#pragma once

#include "swgf/types.hpp"

namespace swgf {

/// Interpolatory quadrature rule on the reference cell [0,1].
///
/// Besides nodes and weights it carries the two Lagrange-derived operators
/// the solver needs at quadrature nodes:
///  - tableau(q,s)  = integral over [0, node(q)] of the s-th cardinal basis
///    function, so running integrals of nodal data are tableau * values;
///  - deriv(q,s)    = derivative of the s-th cardinal basis at node(q), so
///    nodal derivatives of nodal data are deriv * values.
/// All entries are computed in extended precision and rounded once.
struct QuadratureRule {
  ArrayXd nodes;    // ascending, inside [0,1]
  ArrayXd weights;  // sums to 1
  MatrixXd tableau; // n x n running-integral coefficients
  MatrixXd deriv;   // n x n differentiation matrix
  bool has_edge_nodes = false;

  int n() const { return static_cast<int>(nodes.size()); }

  // Integral of nodal data from the left cell edge up to nodes[target],
  // in reference coordinates (multiply by dx for physical integrals).
  double integrate_partial(const ArrayXd& values, int target) const;

  // Full-cell integral (the weights row).
  double integrate(const ArrayXd& values) const;
};

// Gauss-Lobatto rule with n >= 2 nodes (edges included), exact for
// polynomials of degree 2n-3.
QuadratureRule gauss_lobatto(int n);

// Gauss-Legendre rule with n >= 1 interior nodes, exact for degree 2n-1.
QuadratureRule gauss_legendre(int n);

// Interpolatory rule on an arbitrary ascending node set in [0,1].
QuadratureRule interpolatory_rule(const ArrayXd& nodes);

// Values of the cardinal (Lagrange) basis for `nodes` at point x, by the
// barycentric formula; exact unit vector when x hits a node.
ArrayXd cardinal_values(const ArrayXd& nodes, double x);

} // namespace swgf
