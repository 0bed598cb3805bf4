#pragma once

#include <functional>
#include <stdexcept>

#include "latval/lattice_geom.hpp"
#include "latval/stable_exp.hpp"
#include "latval/unimodular.hpp"

namespace latval {

/// Integral of e^{<x, y>} over the empty triangle E, via the closed form
/// for the base triangle, L(T)(u1, u2) = exp[0, u1, u2], transported by the
/// map carrying T onto E.
double laplace_triangle(const EmptyTriangle& E, Point2 x);

/// Integral of e^{<x, y>} over P: the sum of laplace_triangle over an empty
/// triangulation. Returns 0 for dim(P) < 2.
double laplace_polygon(const LatticePolygon& P, Point2 x);

struct QuadratureError : std::runtime_error {
  QuadratureError(const std::string& msg, double best)
      : std::runtime_error(msg), best_estimate(best) {}
  double best_estimate;
};

/// Fixed 36-point rule on the triangle (a, b, c), exact for total degree 10
/// (tensor Gauss-Legendre through the Duffy substitution). Exposed so its
/// exactness can be tested directly.
double triangle_rule_degree10(Point2 a, Point2 b, Point2 c,
                              const std::function<double(double, double)>& f);

/// Adaptive quadrature of e^{<x, y>} over P: fan triangulation from the
/// first vertex, recursive 4-way subdivision with the coarse/fine difference
/// as error estimate. Each leaf stops when its share of tol is met or the
/// estimate falls below the attainable floor of double precision; exceeding
/// depth 24 without convergence raises QuadratureError carrying the best
/// estimate. Fully independent of the closed forms above.
double quadrature_polygon(const LatticePolygon& P, Point2 x, double tol);

/// A built-in kernel satisfying the three classifying identities of simple
/// covariant valuations but different from the Laplace transform:
///   (phi(y) (x^4-4x^3y+x^2y^2+6xy^3-3y^4)
///    - phi(x) (y^4-4xy^3+x^2y^2+6x^3y-3x^4)) / (x - y),
/// evaluated in the divided-difference form that is stable through x = y.
/// Arguments are symmetrized on entry, so the x<->y symmetry is bit-exact.
double analytic_example_f2(double x, double y);

}  // namespace latval
