#include "latval/unimodular.hpp"

#include <array>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <utility>

namespace latval {

Mat2 operator*(const Mat2& l, const Mat2& r) {
  return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d,
          l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
}

LatticePoint apply(const Mat2& m, LatticePoint p) {
  return {m.a * p.u + m.b * p.v, m.c * p.u + m.d * p.v};
}

Point2 apply_transpose(const Mat2& m, Point2 x) {
  return {static_cast<double>(m.a) * x.x + static_cast<double>(m.c) * x.y,
          static_cast<double>(m.b) * x.x + static_cast<double>(m.d) * x.y};
}

UnimodularAffine::UnimodularAffine(Mat2 phi_, LatticePoint a_) : phi(phi_), a(a_) {
  const std::int64_t d = phi.det();
  if (d != 1 && d != -1) throw std::invalid_argument("matrix is not unimodular");
}

UnimodularAffine compose(const UnimodularAffine& A, const UnimodularAffine& B) {
  return {A.phi * B.phi, apply(A.phi, B.a) + A.a};
}

UnimodularAffine invert(const UnimodularAffine& A) {
  const std::int64_t d = A.phi.det();  // +-1, so the inverse is d * adj
  const Mat2 inv{d * A.phi.d, -d * A.phi.b, -d * A.phi.c, d * A.phi.a};
  return {inv, LatticePoint{} - apply(inv, A.a)};
}

ScalarField::ScalarField() : base_([](double, double) { return 0.0; }) {}

ScalarField::ScalarField(std::function<double(double, double)> f) : base_(std::move(f)) {
  if (!base_) throw std::invalid_argument("ScalarField: empty function");
}

ScalarField ScalarField::constant(double c) {
  return ScalarField([c](double, double) { return c; });
}

double ScalarField::operator()(double x, double y) const {
  const Point2 u = apply_transpose(pre_.phi, {x, y});
  const double dot = static_cast<double>(pre_.a.u) * x + static_cast<double>(pre_.a.v) * y;
  const double v = base_(u.x, u.y);
  return dot == 0.0 ? v : std::exp(dot) * v;
}

ScalarField act_on_field(const UnimodularAffine& A, const ScalarField& f) {
  ScalarField g = f;
  g.pre_ = compose(A, f.pre_);
  return g;
}

namespace {

// g = a x + b y with g = gcd(|a|, |b|) >= 0.
struct Bezout {
  std::int64_t g, x, y;
};

Bezout ext_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b;
  std::int64_t old_s = 1, s = 0;
  std::int64_t old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - q * r};
    std::tie(old_s, s) = std::pair{s, old_s - q * s};
    std::tie(old_t, t) = std::pair{t, old_t - q * t};
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

}  // namespace

UnimodularAffine map_base_segment_to(const PrimitiveSegment& seg) {
  const LatticePoint d = seg.q - seg.p;
  if ((d.u == 0 && d.v == 0) || std::gcd(d.u, d.v) != 1)
    throw std::invalid_argument("map_base_segment_to: segment is not primitive");

  // Second column (s, t) with d.u * t - d.v * s = 1; the solution family is
  // t = t0 + k d.v, s = s0 + k d.u.
  const Bezout bz = ext_gcd(d.u, d.v);
  const std::int64_t t0 = bz.x, s0 = -bz.y;

  std::vector<std::int64_t> ks{0};
  auto push_near = [&ks](double kk) {
    const auto base = static_cast<std::int64_t>(std::llround(kk));
    for (std::int64_t off = -2; off <= 2; ++off) ks.push_back(base + off);
  };
  if (d.u != 0) push_near(-static_cast<double>(s0) / static_cast<double>(d.u));
  if (d.v != 0) push_near(-static_cast<double>(t0) / static_cast<double>(d.v));

  std::int64_t best_s = s0, best_t = t0;
  auto better = [](std::int64_t s, std::int64_t t, std::int64_t bs, std::int64_t bt) {
    const std::int64_t w = std::llabs(s) + std::llabs(t);
    const std::int64_t bw = std::llabs(bs) + std::llabs(bt);
    if (w != bw) return w < bw;
    if (t != bt) return t > bt;
    return s > bs;
  };
  for (const std::int64_t k : ks) {
    const std::int64_t s = s0 + k * d.u, t = t0 + k * d.v;
    if (better(s, t, best_s, best_t)) {
      best_s = s;
      best_t = t;
    }
  }
  return {Mat2{d.u, best_s, d.v, best_t}, seg.p};
}

UnimodularAffine map_base_triangle_to(const EmptyTriangle& E) {
  const LatticePoint c1 = E.v1 - E.v0, c2 = E.v2 - E.v0;
  const Mat2 phi{c1.u, c2.u, c1.v, c2.v};
  if (phi.det() != 1)
    throw std::invalid_argument("map_base_triangle_to: triangle is not positively empty");
  return {phi, E.v0};
}

LatticePolygon transform(const UnimodularAffine& A, const LatticePolygon& P) {
  std::vector<LatticePoint> vs;
  vs.reserve(P.vertices().size());
  for (const auto& v : P.vertices()) vs.push_back(A(v));
  return convex_hull(vs);
}

}  // namespace latval
