#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "latval/kernel_extend.hpp"
#include "latval/lattice_geom.hpp"
#include "latval/unimodular.hpp"

namespace latval {

/// The classification data of one valuation: a constant for points, a seed
/// on Omega~1 for the segment kernel f1, and a seed on Omega~2 for the
/// simple part's rho.
struct KernelSpec {
  double f0_const = 0.0;
  ScalarField f1_seed;  // on Omega~1
  ScalarField rho_seed;  // on Omega~2
};

/// An immutable, evaluatable valuation Z = Z1 + Z2. Z1 covers points and
/// primitive segments (kernels f0, f1); Z2 is the simple part driven by f2.
/// Z is simple iff f0_const == 0 and f1_seed == 0.
class ValuationHandle {
 public:
  explicit ValuationHandle(KernelSpec spec);

  /// Same Z1 machinery, but the simple part evaluates the given field
  /// directly instead of deriving f2 from a rho seed. The field must satisfy
  /// the classifying identities for the result to be a valuation.
  static ValuationHandle with_direct_f2(double f0_const, ScalarField f1_seed,
                                        ScalarField f2_field);

  /// Z(P)(x):
  ///   dim 0: e^{<x,z>} c
  ///   dim 1: sum over primitive segments of (Xi_s . f1)(x)
  ///          minus e^{<x,z>} c over relative-interior lattice points
  ///   dim 2: 1/2 the segment sum over the boundary, plus e^{<x,z>} c over
  ///          interior lattice points, plus (Xi_E . f2)(x) over an empty
  ///          triangulation.
  double evaluate(const LatticePolygon& P, Point2 x) const;

  /// 1/2 f1(x,y) + 1/2 f1(y,-x) + e^x/2 f1(-x+y,-x); cross-check companion
  /// of the generic boundary sum for the base triangle.
  double z1_of_triangle_closed_form(Point2 x) const;

  double f1(double x, double y) const { return f1_.eval(x, y); }
  double f2(double x, double y) const { return f2_fn_(x, y); }
  const KernelSpec& spec() const { return spec_; }
  const std::optional<F2Kernel>& f2_kernel() const { return f2_kernel_; }

 private:
  ValuationHandle() = default;
  KernelSpec spec_;
  F1Kernel f1_;
  std::optional<F2Kernel> f2_kernel_;
  std::function<double(double, double)> f2_fn_;
};

struct ResidualReport {
  double max_residual = 0.0;
  Point2 argmax_point;
  std::size_t samples = 0;
};

/// Largest relative defect of Z(P) + Z(Q) - Z(P u Q) - Z(P n Q) over the
/// sample points, normalized by 1 + |Z(P u Q)|. Throws std::invalid_argument
/// when P u Q is not convex (exact lattice test).
ResidualReport check_valuation(const ValuationHandle& h, const LatticePolygon& P,
                               const LatticePolygon& Q, std::span<const Point2> xs);

/// Largest relative defect of Z(AP)(x) - e^{<a,x>} Z(P)(phi^T x), normalized
/// by 1 + |Z(AP)(x)|.
ResidualReport check_covariance(const ValuationHandle& h, const LatticePolygon& P,
                                const UnimodularAffine& A, std::span<const Point2> xs);

/// Largest relative gap between the simple part summed over two different
/// empty triangulations of P. Throws DimensionError for dim < 2.
ResidualReport check_triangulation_independence(const ValuationHandle& h,
                                                const LatticePolygon& P,
                                                std::span<const Point2> xs);

/// Exact test that P u Q is convex (hull-equality through doubled areas and
/// lattice point counts). False also when the intersection is empty.
bool is_convex_union(const LatticePolygon& P, const LatticePolygon& Q);

/// P n Q for pairs with convex union; every vertex of the intersection is a
/// vertex of P or of Q, so the hull of the mutually-contained vertices is
/// the intersection. Throws std::invalid_argument when no vertex of either
/// polygon lies in the other.
LatticePolygon intersection_polytope(const LatticePolygon& P, const LatticePolygon& Q);

/// Halton points (bases 2 and 3, starting at index 1) scaled to [lo, hi]^2.
std::vector<Point2> halton_points(std::size_t n, double lo, double hi);

/// The default evaluation sample: 64 low-discrepancy points in [-3, 3]^2.
const std::vector<Point2>& default_sample_points();

}  // namespace latval
