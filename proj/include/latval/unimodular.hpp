#pragma once

#include <functional>

#include "latval/lattice_geom.hpp"

namespace latval {

/// 2x2 integer matrix [[a, b], [c, d]] acting on column vectors.
struct Mat2 {
  std::int64_t a = 1, b = 0;
  std::int64_t c = 0, d = 1;
  std::int64_t det() const { return a * d - b * c; }
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

Mat2 operator*(const Mat2& l, const Mat2& r);
LatticePoint apply(const Mat2& m, LatticePoint p);
/// m^T x for a real point x.
Point2 apply_transpose(const Mat2& m, Point2 x);

/// An affine lattice automorphism x -> phi x + a with det(phi) = +-1.
struct UnimodularAffine {
  Mat2 phi;
  LatticePoint a;

  UnimodularAffine() = default;
  UnimodularAffine(Mat2 phi_, LatticePoint a_);

  LatticePoint operator()(LatticePoint p) const { return apply(phi, p) + a; }
  std::int64_t det() const { return phi.det(); }
  friend bool operator==(const UnimodularAffine&, const UnimodularAffine&) = default;
};

/// (A o B)(x) = A(B(x)).
UnimodularAffine compose(const UnimodularAffine& A, const UnimodularAffine& B);
UnimodularAffine invert(const UnimodularAffine& A);

/// A pointwise-evaluable function on R^2. A group action attaches an affine
/// prefix that stays symbolic: chains of actions compose the prefix, and the
/// exponential factor exp(<a, x>) is formed once, at evaluation time.
class ScalarField {
 public:
  ScalarField();  // the zero field
  explicit ScalarField(std::function<double(double, double)> f);
  static ScalarField constant(double c);

  double operator()(double x, double y) const;
  double operator()(Point2 p) const { return (*this)(p.x, p.y); }

 private:
  std::function<double(double, double)> base_;
  UnimodularAffine pre_;

  friend ScalarField act_on_field(const UnimodularAffine& A, const ScalarField& f);
};

/// (Xi . f)(x) = exp(<a, x>) f(phi^T x).
ScalarField act_on_field(const UnimodularAffine& A, const ScalarField& f);

/// The orientation-preserving affine map sending [o, e1] onto the primitive
/// segment s (o -> s.p, e1 -> s.q). The free second column is the Bezout
/// completion with minimal |s|+|t|, ties resolved toward larger t then
/// larger s. Throws std::invalid_argument if s is not primitive.
UnimodularAffine map_base_segment_to(const PrimitiveSegment& s);

/// The affine map with phi = [v1-v0 | v2-v0] and a = v0, so that the base
/// triangle [o, e1, e2] maps onto E. Requires det(phi) = +1.
UnimodularAffine map_base_triangle_to(const EmptyTriangle& E);

/// Image polygon A(P), re-canonicalized.
LatticePolygon transform(const UnimodularAffine& A, const LatticePolygon& P);

}  // namespace latval
