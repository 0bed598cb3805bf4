#include "latval/laplace_oracle.hpp"

#include <array>
#include <cmath>
#include <limits>

namespace latval {

double laplace_triangle(const EmptyTriangle& E, Point2 x) {
  const UnimodularAffine xi = map_base_triangle_to(E);
  const Point2 u = apply_transpose(xi.phi, x);
  const double dot =
      static_cast<double>(xi.a.u) * x.x + static_cast<double>(xi.a.v) * x.y;
  return std::exp(dot) * exp_divdiff2(0.0, u.x, u.y);
}

double laplace_polygon(const LatticePolygon& P, Point2 x) {
  if (P.dim() < 2) return 0.0;
  double s = 0.0;
  for (const EmptyTriangle& e : empty_triangulation(P)) s += laplace_triangle(e, x);
  return s;
}

namespace {

struct RulePoint {
  double xi, eta, w;
};

// 6x6 Gauss-Legendre points pushed through the Duffy substitution
// (xi, eta) = (u, (1 - u) v), weight w_u w_v (1 - u); exact for total
// degree 10 on the reference triangle.
const std::array<RulePoint, 36>& duffy_rule() {
  static const std::array<RulePoint, 36> rule = [] {
    constexpr double n[6] = {-0.9324695142031521, -0.6612093864662645,
                             -0.2386191860831969, 0.2386191860831969,
                             0.6612093864662645,  0.9324695142031521};
    constexpr double w[6] = {0.1713244923791704, 0.3607615730481386,
                             0.4679139345726910, 0.4679139345726910,
                             0.3607615730481386, 0.1713244923791704};
    std::array<RulePoint, 36> r{};
    int k = 0;
    for (int i = 0; i < 6; ++i) {
      const double u = 0.5 * (n[i] + 1.0), wu = 0.5 * w[i];
      for (int j = 0; j < 6; ++j) {
        const double v = 0.5 * (n[j] + 1.0), wv = 0.5 * w[j];
        r[k++] = {u, (1.0 - u) * v, wu * wv * (1.0 - u)};
      }
    }
    return r;
  }();
  return rule;
}

double rule_over(Point2 a, Point2 b, Point2 c,
                 const std::function<double(double, double)>& f) {
  const double jac = std::fabs((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x));
  double s = 0.0;
  for (const RulePoint& rp : duffy_rule()) {
    const double px = a.x + rp.xi * (b.x - a.x) + rp.eta * (c.x - a.x);
    const double py = a.y + rp.xi * (b.y - a.y) + rp.eta * (c.y - a.y);
    s += rp.w * f(px, py);
  }
  return jac * s;
}

struct AdaptState {
  const std::function<double(double, double)>& f;
  bool failed = false;
  double failed_err = 0.0;
};

double adapt(AdaptState& st, Point2 a, Point2 b, Point2 c, double tol, int depth) {
  const double coarse = rule_over(a, b, c, st.f);
  const Point2 mab{0.5 * (a.x + b.x), 0.5 * (a.y + b.y)};
  const Point2 mbc{0.5 * (b.x + c.x), 0.5 * (b.y + c.y)};
  const Point2 mca{0.5 * (c.x + a.x), 0.5 * (c.y + a.y)};
  const double fine = rule_over(a, mab, mca, st.f) + rule_over(mab, b, mbc, st.f) +
                      rule_over(mca, mbc, c, st.f) + rule_over(mab, mbc, mca, st.f);
  const double err = std::fabs(fine - coarse);
  const double floor = 32.0 * std::numeric_limits<double>::epsilon() * std::fabs(fine);
  if (err <= tol || err <= floor) return fine;
  if (depth >= 24) {
    st.failed = true;
    st.failed_err += err;
    return fine;
  }
  const double t4 = 0.25 * tol;
  return adapt(st, a, mab, mca, t4, depth + 1) + adapt(st, mab, b, mbc, t4, depth + 1) +
         adapt(st, mca, mbc, c, t4, depth + 1) + adapt(st, mab, mbc, mca, t4, depth + 1);
}

}  // namespace

double triangle_rule_degree10(Point2 a, Point2 b, Point2 c,
                              const std::function<double(double, double)>& f) {
  return rule_over(a, b, c, f);
}

double quadrature_polygon(const LatticePolygon& P, Point2 x, double tol) {
  if (P.dim() < 2) throw DimensionError("quadrature_polygon: dim(P) must be 2");
  if (!(tol > 0.0)) throw std::invalid_argument("quadrature_polygon: tol must be > 0");
  const std::function<double(double, double)> f = [x](double px, double py) {
    return std::exp(x.x * px + x.y * py);
  };
  const auto& v = P.vertices();
  const double total_area = 0.5 * static_cast<double>(doubled_area(P));
  AdaptState st{f};
  double sum = 0.0;
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    const Point2 a{static_cast<double>(v[0].u), static_cast<double>(v[0].v)};
    const Point2 b{static_cast<double>(v[i].u), static_cast<double>(v[i].v)};
    const Point2 c{static_cast<double>(v[i + 1].u), static_cast<double>(v[i + 1].v)};
    const double tri_area =
        0.5 * std::fabs((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x));
    sum += adapt(st, a, b, c, tol * tri_area / total_area, 0);
  }
  if (st.failed)
    throw QuadratureError("quadrature_polygon: no convergence at depth 24", sum);
  return sum;
}

double analytic_example_f2(double x, double y) {
  if (x > y) std::swap(x, y);
  // (p(x,y) - p(y,x)) / (x - y) for p(x,y) = x^4 - 4x^3y + x^2y^2 + 6xy^3 - 3y^4,
  // carried out exactly as a polynomial:
  const double q =
      4.0 * x * x * x - 6.0 * x * x * y - 6.0 * x * y * y + 4.0 * y * y * y;
  const double pyx =
      y * y * y * y - 4.0 * x * y * y * y + x * x * y * y + 6.0 * x * x * x * y -
      3.0 * x * x * x * x;
  // phi(y) q(x,y) - p(y,x) exp[0,x,y], since (phi(x) - phi(y))/(x - y) is the
  // divided difference exp[0, x, y].
  return phi_stable(y) * q - pyx * exp_divdiff2(0.0, x, y);
}

}  // namespace latval
