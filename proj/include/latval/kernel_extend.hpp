#pragma once

#include <memory>
#include <vector>

#include "latval/stable_exp.hpp"
#include "latval/unimodular.hpp"

namespace latval {

/// Golden ratio (1 + sqrt 5)/2, correctly rounded.
inline constexpr double kGoldenRatio = 1.6180339887498948482;

/// Relative half-width of the numerical band around the ray x = tau * y.
inline constexpr double kRayBandRelTol = 1e-12;

/// Descent steps after which a point is treated as lying on the ray.
inline constexpr int kDescentCap = 96;

/// Location of a nonnegative point within the domain decomposition used to
/// extend seed functions from Omega~2 = {0 <= x <= y} u {(tau s, s): 1<=s<tau}
/// to the whole quadrant:
///   InOmega2      - 0 <= x <= y (seed domain),
///   OmegaIndex(n) - the n-th Fibonacci-ratio cone of {0 < y < x},
///   RaySegment(m) - on the ray x = tau y with tau^m <= y < tau^{m+1},
///   AxisX         - y = 0, x > 0,
///   Origin        - (0, 0).
struct RegionTag {
  enum class Kind { InOmega2, OmegaIndex, RaySegment, AxisX, Origin };
  Kind kind = Kind::Origin;
  int index = 0;  // n for OmegaIndex, m for RaySegment, otherwise 0
  friend bool operator==(const RegionTag&, const RegionTag&) = default;
};

/// Classifies (x, y), x, y >= 0. Points within the ray band
/// |x - tau y| <= 1e-12 (1 + |x|) are tagged RaySegment; all other points of
/// {0 < y < x} descend through (a, b) -> (b, a - b), the index being the
/// step count minus one, capped at kDescentCap (beyond which the ray rule
/// applies). Throws std::domain_error for negative or NaN input.
RegionTag region_tag(double x, double y);

/// The points visited by the descent from (x, y) down to the seed domain;
/// starts with (x, y) itself. Diagnostic companion of region_tag.
std::vector<Point2> region_descent_chain(double x, double y);

/// The unique extension of a seed rho~ on Omega~2 to [0, inf)^2 satisfying
///   (2x + y) rho(x, y) = (x + y) rho(x, x + y) + x rho(x + y, x).
/// Copies share the memo cache; eval is safe for concurrent callers.
class RhoKernel {
 public:
  explicit RhoKernel(ScalarField seed);
  double eval(double x, double y) const;
  const ScalarField& seed() const { return seed_; }

 private:
  ScalarField seed_;
  struct Memo;
  std::shared_ptr<Memo> memo_;

  double eval_impl(double x, double y) const;
  double descend(double x, double y) const;
  double ascend(double x, double y) const;
};

/// The extension of a seed f1~ on Omega~1 = {(0, y): y >= 0} u {0 <= y <= x/2}
/// to the plane satisfying
///   f1(x, y) = e^x f1(-x, -y),  f1(x, y) = f1(x, x + y),  f1(x, y) = f1(x, -y).
class F1Kernel {
 public:
  F1Kernel() = default;
  explicit F1Kernel(ScalarField seed) : seed_(std::move(seed)) {}
  double eval(double x, double y) const;
  const ScalarField& seed() const { return seed_; }

 private:
  ScalarField seed_;
};

/// The kernel f2 = Z(T) of the simple valuation classified by a rho~ seed.
/// Evaluation reduces the argument into the quadrant through
///   f2(a, b) = e^b f2(-b, a - b)
/// (at most twice), uses the symmetry f2(x, y) = f2(y, x) to land in
/// {0 <= x <= y}, and then evaluates
///   f2(x, y) = (e^x phi(y-x) rho(y-x, x) - phi(x) rho(x, y-x)) / y
/// for y > 0 and f2(0, 0) = rho(0, 0)/2. Arguments are symmetrized on entry,
/// so f2(x, y) == f2(y, x) holds bit-exactly. Exponential prefactors are
/// accumulated in log space and applied once.
class F2Kernel {
 public:
  explicit F2Kernel(ScalarField rho_seed) : rho_(std::move(rho_seed)) {}
  explicit F2Kernel(RhoKernel rho) : rho_(std::move(rho)) {}
  double eval(double x, double y) const;
  const RhoKernel& rho() const { return rho_; }

 private:
  RhoKernel rho_;
};

/// Inverse classification direction: from f~ on Omega~ = {y >= x >= 0} to the
/// rho it classifies, via
///   rho(x, y) = (f~(x, x+y) + e^x f~(y, x+y)) / (phi(x) phi(x+y)).
/// The result is defined on all of [0, inf)^2 and restricts to a seed on
/// Omega~2; rho(0, 0) = 2 f~(0, 0) comes out of the same formula.
ScalarField tildef_to_rho(const ScalarField& f_tilde);

/// Forward direction of the same bijection: f~ on Omega~ from an extended
/// rho, with f~(0, 0) = rho(0, 0)/2.
ScalarField rho_to_tildef(const RhoKernel& rho);

}  // namespace latval
