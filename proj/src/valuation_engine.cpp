#include "latval/valuation_engine.hpp"

#include <algorithm>
#include <cmath>

namespace latval {

ValuationHandle::ValuationHandle(KernelSpec spec)
    : spec_(std::move(spec)), f1_(spec_.f1_seed), f2_kernel_(F2Kernel(spec_.rho_seed)) {
  f2_fn_ = [k = *f2_kernel_](double x, double y) { return k.eval(x, y); };
}

ValuationHandle ValuationHandle::with_direct_f2(double f0_const, ScalarField f1_seed,
                                                ScalarField f2_field) {
  ValuationHandle h;
  h.spec_ = KernelSpec{f0_const, f1_seed, ScalarField()};
  h.f1_ = F1Kernel(std::move(f1_seed));
  h.f2_fn_ = [f = std::move(f2_field)](double x, double y) { return f(x, y); };
  return h;
}

namespace {

double dot(Point2 x, LatticePoint z) {
  return x.x * static_cast<double>(z.u) + x.y * static_cast<double>(z.v);
}

// Neumaier-compensated accumulator. The valuation sums mix exponential terms
// of very different magnitude whose exact cancellation is structural (the
// same term appears on both sides of the axiom); compensation keeps the
// summation error near eps * |result| instead of eps * max|term|.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = s_ + v;
    if (std::fabs(s_) >= std::fabs(v)) {
      c_ += (s_ - t) + v;
    } else {
      c_ += (v - t) + s_;
    }
    s_ = t;
  }
  double value() const { return s_ + c_; }

 private:
  double s_ = 0.0, c_ = 0.0;
};

}  // namespace

double ValuationHandle::evaluate(const LatticePolygon& P, Point2 x) const {
  const double c = spec_.f0_const;
  auto point_term = [&](LatticePoint z) { return std::exp(dot(x, z)) * c; };
  auto seg_term = [&](const PrimitiveSegment& s) {
    const UnimodularAffine xi = map_base_segment_to(s);
    const Point2 u = apply_transpose(xi.phi, x);
    return std::exp(dot(x, xi.a)) * f1_.eval(u.x, u.y);
  };
  auto tri_term = [&](const EmptyTriangle& e) {
    const UnimodularAffine xi = map_base_triangle_to(e);
    const Point2 u = apply_transpose(xi.phi, x);
    return std::exp(dot(x, xi.a)) * f2_fn_(u.x, u.y);
  };

  switch (P.dim()) {
    case 0:
      return point_term(P.vertices()[0]);
    case 1: {
      CompensatedSum s;
      for (const auto& seg : boundary_primitive_segments(P)) s.add(seg_term(seg));
      if (c != 0.0) {
        for (const auto& z : lattice_points(P).boundary) {
          if (z == P.vertices()[0] || z == P.vertices()[1]) continue;
          s.add(-point_term(z));
        }
      }
      return s.value();
    }
    default: {
      CompensatedSum s;
      for (const auto& seg : boundary_primitive_segments(P)) s.add(0.5 * seg_term(seg));
      if (c != 0.0) {
        for (const auto& z : lattice_points(P).interior) s.add(point_term(z));
      }
      for (const auto& e : empty_triangulation(P)) s.add(tri_term(e));
      return s.value();
    }
  }
}

double ValuationHandle::z1_of_triangle_closed_form(Point2 x) const {
  return 0.5 * f1_.eval(x.x, x.y) + 0.5 * f1_.eval(x.y, -x.x) +
         0.5 * std::exp(x.x) * f1_.eval(-x.x + x.y, -x.x);
}

namespace {

std::vector<LatticePoint> all_lattice_points(const LatticePolygon& P) {
  const LatticePointSet s = lattice_points(P);
  std::vector<LatticePoint> pts = s.boundary;
  pts.insert(pts.end(), s.interior.begin(), s.interior.end());
  std::sort(pts.begin(), pts.end(), lex_less);
  return pts;
}

}  // namespace

LatticePolygon intersection_polytope(const LatticePolygon& P, const LatticePolygon& Q) {
  std::vector<LatticePoint> cand;
  for (const auto& v : P.vertices())
    if (contains(Q, v)) cand.push_back(v);
  for (const auto& w : Q.vertices())
    if (contains(P, w)) cand.push_back(w);
  if (cand.empty())
    throw std::invalid_argument("intersection_polytope: empty intersection");
  return convex_hull(cand);
}

bool is_convex_union(const LatticePolygon& P, const LatticePolygon& Q) {
  std::vector<LatticePoint> pts = P.vertices();
  pts.insert(pts.end(), Q.vertices().begin(), Q.vertices().end());
  const LatticePolygon U = convex_hull(pts);

  LatticePolygon I;
  try {
    I = intersection_polytope(P, Q);
  } catch (const std::invalid_argument&) {
    return false;
  }
  if (doubled_area(U) != doubled_area(P) + doubled_area(Q) - doubled_area(I))
    return false;

  std::vector<LatticePoint> pq = all_lattice_points(P);
  const std::vector<LatticePoint> qq = all_lattice_points(Q);
  pq.insert(pq.end(), qq.begin(), qq.end());
  std::sort(pq.begin(), pq.end(), lex_less);
  pq.erase(std::unique(pq.begin(), pq.end()), pq.end());
  return all_lattice_points(U).size() == pq.size();
}

ResidualReport check_valuation(const ValuationHandle& h, const LatticePolygon& P,
                               const LatticePolygon& Q, std::span<const Point2> xs) {
  if (!is_convex_union(P, Q))
    throw std::invalid_argument("check_valuation: P u Q is not convex");

  std::vector<LatticePoint> pts = P.vertices();
  pts.insert(pts.end(), Q.vertices().begin(), Q.vertices().end());
  const LatticePolygon U = convex_hull(pts);
  const LatticePolygon I = intersection_polytope(P, Q);

  ResidualReport rep;
  rep.samples = xs.size();
  for (const Point2& x : xs) {
    const double zu = h.evaluate(U, x);
    const double r = h.evaluate(P, x) + h.evaluate(Q, x) - zu - h.evaluate(I, x);
    const double rel = std::fabs(r) / (1.0 + std::fabs(zu));
    if (rel >= rep.max_residual) {
      rep.max_residual = rel;
      rep.argmax_point = x;
    }
  }
  return rep;
}

ResidualReport check_covariance(const ValuationHandle& h, const LatticePolygon& P,
                                const UnimodularAffine& A, std::span<const Point2> xs) {
  const LatticePolygon AP = transform(A, P);
  ResidualReport rep;
  rep.samples = xs.size();
  for (const Point2& x : xs) {
    const double lhs = h.evaluate(AP, x);
    const double adot =
        static_cast<double>(A.a.u) * x.x + static_cast<double>(A.a.v) * x.y;
    const double rhs = std::exp(adot) * h.evaluate(P, apply_transpose(A.phi, x));
    const double rel =
        std::fabs(lhs - rhs) / (1.0 + std::max(std::fabs(lhs), std::fabs(rhs)));
    if (rel >= rep.max_residual) {
      rep.max_residual = rel;
      rep.argmax_point = x;
    }
  }
  return rep;
}

ResidualReport check_triangulation_independence(const ValuationHandle& h,
                                                const LatticePolygon& P,
                                                std::span<const Point2> xs) {
  if (P.dim() < 2)
    throw DimensionError("check_triangulation_independence: dim(P) must be 2");
  const auto t1 = empty_triangulation(P);
  const auto t2 = alternative_triangulation(P);
  auto z2_sum = [&h](const std::vector<EmptyTriangle>& tris, Point2 x) {
    CompensatedSum s;
    for (const auto& e : tris) {
      const UnimodularAffine xi = map_base_triangle_to(e);
      const Point2 u = apply_transpose(xi.phi, x);
      const double adot =
          static_cast<double>(xi.a.u) * x.x + static_cast<double>(xi.a.v) * x.y;
      s.add(std::exp(adot) * h.f2(u.x, u.y));
    }
    return s.value();
  };
  ResidualReport rep;
  rep.samples = xs.size();
  for (const Point2& x : xs) {
    const double a = z2_sum(t1, x), b = z2_sum(t2, x);
    const double rel = std::fabs(a - b) / (1.0 + std::fabs(a));
    if (rel >= rep.max_residual) {
      rep.max_residual = rel;
      rep.argmax_point = x;
    }
  }
  return rep;
}

namespace {

double radical_inverse(std::uint64_t i, std::uint32_t base) {
  double inv = 1.0 / base, f = inv, r = 0.0;
  while (i > 0) {
    r += f * static_cast<double>(i % base);
    i /= base;
    f *= inv;
  }
  return r;
}

}  // namespace

std::vector<Point2> halton_points(std::size_t n, double lo, double hi) {
  std::vector<Point2> pts;
  pts.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    pts.push_back({lo + (hi - lo) * radical_inverse(i, 2),
                   lo + (hi - lo) * radical_inverse(i, 3)});
  }
  return pts;
}

const std::vector<Point2>& default_sample_points() {
  static const std::vector<Point2> pts = halton_points(64, -3.0, 3.0);
  return pts;
}

}  // namespace latval
