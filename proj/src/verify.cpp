#include "latval/verify.hpp"

#include <algorithm>
#include <cmath>

#include "latval/laplace_oracle.hpp"
#include "latval/seed_expr.hpp"

namespace latval {

double uniform_real(Rng& g, double lo, double hi) {
  const double u = static_cast<double>(g() >> 11) * 0x1.0p-53;  // [0, 1)
  return lo + (hi - lo) * u;
}

std::int64_t uniform_int(Rng& g, std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("uniform_int: empty range");
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<std::int64_t>(g() % span);
}

std::vector<Point2> generic_points(Rng& g, std::size_t n, double lo, double hi) {
  std::vector<Point2> pts(n);
  for (auto& p : pts) p = {uniform_real(g, lo, hi), uniform_real(g, lo, hi)};
  return pts;
}

LatticePolygon random_lattice_polygon(Rng& g, std::size_t max_points,
                                      std::int64_t coord_bound, int min_dim) {
  for (int tries = 0; tries < 1000; ++tries) {
    const std::size_t n = static_cast<std::size_t>(uniform_int(g, 3, max_points));
    std::vector<LatticePoint> pts(n);
    for (auto& p : pts)
      p = {uniform_int(g, -coord_bound, coord_bound),
           uniform_int(g, -coord_bound, coord_bound)};
    LatticePolygon P = convex_hull(pts);
    if (P.dim() >= min_dim) return P;
  }
  throw std::logic_error("random_lattice_polygon: generator exhausted");
}

UnimodularAffine random_unimodular_affine(Rng& g, std::int64_t entry_bound,
                                          std::int64_t t_bound) {
  while (true) {
    const Mat2 m{uniform_int(g, -entry_bound, entry_bound),
                 uniform_int(g, -entry_bound, entry_bound),
                 uniform_int(g, -entry_bound, entry_bound),
                 uniform_int(g, -entry_bound, entry_bound)};
    const std::int64_t d = m.det();
    if (d != 1 && d != -1) continue;
    return {m, {uniform_int(g, -t_bound, t_bound), uniform_int(g, -t_bound, t_bound)}};
  }
}

ScalarField random_polynomial_field(Rng& g, int max_degree, double coef_bound) {
  struct Term {
    int i, j;
    double c;
  };
  std::vector<Term> terms;
  for (int i = 0; i <= max_degree; ++i)
    for (int j = 0; i + j <= max_degree; ++j)
      terms.push_back({i, j, uniform_real(g, -coef_bound, coef_bound)});
  return ScalarField([terms](double x, double y) {
    double s = 0.0;
    for (const Term& t : terms) {
      double m = t.c;
      for (int k = 0; k < t.i; ++k) m *= x;
      for (int k = 0; k < t.j; ++k) m *= y;
      s += m;
    }
    return s;
  });
}

namespace {

// Short primitive directions only; exp(<x, z>) over a long segment spans too
// many orders of magnitude for the residual quotient to stay meaningful.
LatticePoint random_primitive_direction(Rng& g) {
  while (true) {
    const std::int64_t du = uniform_int(g, -1, 1), dv = uniform_int(g, -1, 1);
    if (du == 0 && dv == 0) continue;
    return {du, dv};
  }
}

LatticePolygon segment(LatticePoint a, LatticePoint b) {
  const std::vector<LatticePoint> vs{a, b};
  return convex_hull(vs);
}

}  // namespace

ConvexUnionPair random_segment_union_pair(Rng& g) {
  const LatticePoint a{uniform_int(g, -2, 2), uniform_int(g, -2, 2)};
  const LatticePoint d = random_primitive_direction(g);
  auto at = [&](std::int64_t k) { return LatticePoint{a.u + k * d.u, a.v + k * d.v}; };
  const std::int64_t m = uniform_int(g, 1, 2), n = uniform_int(g, 1, 2);
  if (uniform_int(g, 0, 1) == 0) {
    // touching at the shared endpoint a
    return {segment(at(-m), a), segment(a, at(n))};
  }
  const std::int64_t j = uniform_int(g, 0, 1);  // overlap length (0 = one point)
  return {segment(at(0), at(m + j)), segment(at(m), at(m + j + n))};
}

ConvexUnionPair random_polygon_union_pair(Rng& g) {
  for (int tries = 0; tries < 500; ++tries) {
    const LatticePolygon U = random_lattice_polygon(g, 10, 4, 2);
    const LatticePointSet ls = lattice_points(U);
    std::vector<LatticePoint> M = ls.boundary;
    M.insert(M.end(), ls.interior.begin(), ls.interior.end());

    LatticePolygon P, Q;
    if (uniform_int(g, 0, 1) == 0) {
      // chord split: sides of a line through two lattice points of U
      const LatticePoint b1 = M[static_cast<std::size_t>(
          uniform_int(g, 0, static_cast<std::int64_t>(M.size()) - 1))];
      const LatticePoint b2 = M[static_cast<std::size_t>(
          uniform_int(g, 0, static_cast<std::int64_t>(M.size()) - 1))];
      if (b1 == b2) continue;
      std::vector<LatticePoint> sp, sq;
      for (const auto& z : M) {
        const __int128 side = cross(b1, b2, z);
        if (side >= 0) sp.push_back(z);
        if (side <= 0) sq.push_back(z);
      }
      if (sp.size() < 3 || sq.size() < 3) continue;
      P = convex_hull(sp);
      Q = convex_hull(sq);
    } else {
      // band split: overlapping vertical slabs
      std::int64_t umin = M[0].u, umax = M[0].u;
      for (const auto& z : M) {
        umin = std::min(umin, z.u);
        umax = std::max(umax, z.u);
      }
      if (umax - umin < 2) continue;
      std::int64_t c1 = uniform_int(g, umin + 1, umax - 1);
      std::int64_t c2 = uniform_int(g, umin + 1, umax - 1);
      if (c1 > c2) std::swap(c1, c2);
      std::vector<LatticePoint> sp, sq;
      for (const auto& z : M) {
        if (z.u <= c2) sp.push_back(z);
        if (z.u >= c1) sq.push_back(z);
      }
      if (sp.empty() || sq.empty()) continue;
      P = convex_hull(sp);
      Q = convex_hull(sq);
      if (P.dim() < 2 || Q.dim() < 2) continue;
    }
    if (is_convex_union(P, Q)) return {P, Q};
  }
  // deterministic fallback: [0,2]^2 split along u = 1
  const std::vector<LatticePoint> left{{0, 0}, {1, 0}, {1, 2}, {0, 2}};
  const std::vector<LatticePoint> right{{1, 0}, {2, 0}, {2, 2}, {1, 2}};
  return {convex_hull(left), convex_hull(right)};
}

namespace {

KernelSpec kernel_laplace() { return {0.0, ScalarField(), ScalarField::constant(1.0)}; }

std::vector<KernelSpec> reference_kernels() {
  std::vector<KernelSpec> ks;
  ks.push_back(kernel_laplace());
  ks.push_back({1.0, ScalarField::constant(1.0), ScalarField::constant(1.0)});
  ks.push_back({0.5, ScalarField([](double x, double) { return phi_stable(x); }),
                ScalarField([](double x, double y) { return x * x + 1.0 + 0.0 * y; })});
  return ks;
}

void track(SuiteReport& rep, double residual) {
  rep.max_residual = std::max(rep.max_residual, residual);
}

}  // namespace

SuiteReport run_suite_laplace(std::uint64_t seed, std::size_t cases) {
  Rng g(seed ^ 0x1a91acell);
  const ValuationHandle h{kernel_laplace()};
  SuiteReport rep{"laplace", cases, 0.0, false};
  for (std::size_t i = 0; i < cases; ++i) {
    const LatticePolygon P = random_lattice_polygon(g, 12, 5, 2);
    for (int k = 0; k < 20; ++k) {
      const Point2 x{uniform_real(g, -3, 3), uniform_real(g, -3, 3)};
      const double quad = quadrature_polygon(P, x, tolerances::kQuadratureTol);
      const double z = h.evaluate(P, x);
      track(rep, std::fabs(z - quad) / (1.0 + std::fabs(quad)));
    }
  }
  rep.pass = rep.max_residual <= tolerances::kLaplaceRel;
  return rep;
}

SuiteReport run_suite_valuation(std::uint64_t seed, std::size_t cases) {
  Rng g(seed ^ 0x7a1adull);
  const auto kernels = reference_kernels();
  std::vector<ValuationHandle> hs;
  for (const auto& k : kernels) hs.emplace_back(k);
  const std::vector<Point2> xs = generic_points(g, 12, -3.0, 3.0);
  SuiteReport rep{"valuation", cases, 0.0, false};
  for (std::size_t i = 0; i < cases; ++i) {
    const ConvexUnionPair pair =
        (i % 2 == 0) ? random_segment_union_pair(g) : random_polygon_union_pair(g);
    for (const auto& h : hs)
      track(rep, check_valuation(h, pair.p, pair.q, xs).max_residual);
  }
  rep.pass = rep.max_residual <= tolerances::kValuationRel;
  return rep;
}

SuiteReport run_suite_covariance(std::uint64_t seed, std::size_t cases) {
  Rng g(seed ^ 0xc0a1ull);
  const auto kernels = reference_kernels();
  std::vector<ValuationHandle> hs;
  for (const auto& k : kernels) hs.emplace_back(k);

  std::vector<LatticePolygon> pool;
  for (int i = 0; i < 16; ++i) pool.push_back(random_lattice_polygon(g, 10, 2, 2));
  for (int i = 0; i < 2; ++i) {
    const LatticePoint a{uniform_int(g, -2, 2), uniform_int(g, -2, 2)};
    const LatticePoint d = random_primitive_direction(g);
    const std::int64_t len = uniform_int(g, 1, 2);
    pool.push_back(segment(a, {a.u + len * d.u, a.v + len * d.v}));
  }
  pool.push_back(LatticePolygon{{LatticePoint{0, 0}}});
  pool.push_back(LatticePolygon{{LatticePoint{2, -3}}});

  // The f2 summands grow like exp(|x| * |sheared edge|); a tighter sample box
  // keeps the identity check within the well-conditioned range of doubles.
  const std::vector<Point2> xs = generic_points(g, 12, -2.0, 2.0);
  SuiteReport rep{"covariance", cases, 0.0, false};
  for (std::size_t i = 0; i < cases; ++i) {
    const UnimodularAffine A = random_unimodular_affine(g, 3, 5);
    const LatticePolygon& P = pool[i % pool.size()];
    const ValuationHandle& h = hs[i % hs.size()];
    track(rep, check_covariance(h, P, A, xs).max_residual);
  }
  rep.pass = rep.max_residual <= tolerances::kCovarianceRel;
  return rep;
}

namespace {

double rel_gap(double lhs, double rhs) {
  return std::fabs(lhs - rhs) / (1.0 + std::max(std::fabs(lhs), std::fabs(rhs)));
}

// The four classifying identities at one point.
double equations_residual(const std::function<double(double, double)>& f2, double x,
                          double y) {
  double r = rel_gap(f2(-x + y, -x), std::exp(-x) * f2(x, y));
  r = std::max(r, rel_gap(f2(x, y) + std::exp(x + y) * f2(-x, -y),
                          f2(x, x + y) + f2(x + y, y)));
  r = std::max(r, rel_gap(f2(x, y), f2(y, x)));
  r = std::max(r, rel_gap(f2(x, y) + std::exp(x) * f2(y - x, y),
                          f2(x, x + y) + f2(y, x + y)));
  return r;
}

double rho_formula_residual(const RhoKernel& rho, double x, double y) {
  const double lhs = (2 * x + y) * rho.eval(x, y);
  const double rhs = (x + y) * rho.eval(x, x + y) + x * rho.eval(x + y, x);
  return std::fabs(lhs - rhs) / (1.0 + std::fabs(lhs));
}

}  // namespace

SuiteReport run_suite_equations(std::uint64_t seed, std::size_t cases,
                                const EquationsTarget& target) {
  Rng g(seed ^ 0xe9ull);
  SuiteReport rep{"equations", cases, 0.0, false};

  std::vector<std::optional<RhoKernel>> rhos;
  std::vector<std::function<double(double, double)>> fields;
  if (target.direct_f2) {
    rhos.emplace_back(std::nullopt);
    fields.emplace_back([f = *target.direct_f2](double x, double y) { return f(x, y); });
  } else if (target.rho_seed) {
    RhoKernel rho(*target.rho_seed);
    rhos.emplace_back(rho);
    fields.emplace_back([k = F2Kernel(rho)](double x, double y) { return k.eval(x, y); });
  } else {
    for (int i = 0; i < target.generated_seeds; ++i) {
      RhoKernel rho(random_polynomial_field(g, 3, 2.0));
      rhos.emplace_back(rho);
      fields.emplace_back(
          [k = F2Kernel(rho)](double x, double y) { return k.eval(x, y); });
    }
  }

  for (std::size_t t = 0; t < fields.size(); ++t) {
    for (std::size_t i = 0; i < cases; ++i) {
      const double x = uniform_real(g, -4, 4), y = uniform_real(g, -4, 4);
      track(rep, equations_residual(fields[t], x, y));
      if (rhos[t]) {
        const double rx = uniform_real(g, 0, 8), ry = uniform_real(g, 0, 8);
        track(rep, rho_formula_residual(*rhos[t], rx, ry));
      }
    }
  }
  rep.pass = rep.max_residual <= tolerances::kEquationsRel;
  return rep;
}

namespace {

// Independent oracle: literal iteration of (a, b) -> (b, a - b).
int brute_force_descent_steps(double a, double b) {
  int steps = 0;
  while (a > b && steps <= 2 * kDescentCap) {
    const double t = a - b;
    a = b;
    b = t;
    ++steps;
  }
  return steps;
}

}  // namespace

SuiteReport run_suite_fibonacci(std::uint64_t seed, std::size_t cases) {
  Rng g(seed ^ 0xf1b0ull);
  SuiteReport rep{"fibonacci", cases, 0.0, false};
  std::size_t mismatches = 0;
  const RhoKernel rho(ScalarField::constant(1.0));

  for (std::size_t i = 0; i < cases; ++i) {
    double x, y;
    do {
      y = uniform_real(g, 1e-3, 8.0);
      x = y * uniform_real(g, 1.0 + 1e-6, 40.0);
    } while (std::fabs(x - kGoldenRatio * y) <= kRayBandRelTol * (1.0 + std::fabs(x)));
    const RegionTag tag = region_tag(x, y);
    if (tag.kind != RegionTag::Kind::OmegaIndex ||
        tag.index != brute_force_descent_steps(x, y) - 1) {
      ++mismatches;
    }
  }

  // constructed ray points must hit the band and terminate
  for (int i = 0; i < 64; ++i) {
    const double y = uniform_real(g, 1e-3, 40.0);
    const double x = kGoldenRatio * y;
    const RegionTag tag = region_tag(x, y);
    if (tag.kind != RegionTag::Kind::RaySegment) ++mismatches;
    if (!std::isfinite(rho.eval(x, y))) ++mismatches;
  }

  rep.max_residual = static_cast<double>(mismatches);
  rep.pass = mismatches == 0;
  return rep;
}

}  // namespace latval
