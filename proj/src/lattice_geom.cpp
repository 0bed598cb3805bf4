#include "latval/lattice_geom.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace latval {

LatticePoint operator+(LatticePoint a, LatticePoint b) { return {a.u + b.u, a.v + b.v}; }
LatticePoint operator-(LatticePoint a, LatticePoint b) { return {a.u - b.u, a.v - b.v}; }

bool lex_less(LatticePoint a, LatticePoint b) {
  return a.u != b.u ? a.u < b.u : a.v < b.v;
}

__int128 cross(LatticePoint o, LatticePoint a, LatticePoint b) {
  return static_cast<__int128>(a.u - o.u) * (b.v - o.v) -
         static_cast<__int128>(a.v - o.v) * (b.u - o.u);
}

namespace {

// "lowest-then-leftmost": minimal v, ties by minimal u.
bool lowest_leftmost_less(LatticePoint a, LatticePoint b) {
  return a.v != b.v ? a.v < b.v : a.u < b.u;
}

std::int64_t checked_int64(__int128 v, const char* what) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error(what);
  }
  return static_cast<std::int64_t>(v);
}

}  // namespace

LatticePolygon::LatticePolygon(std::vector<LatticePoint> canonical_vertices)
    : verts_(std::move(canonical_vertices)) {
  if (verts_.empty()) throw std::invalid_argument("polygon needs at least one vertex");
  if (verts_.size() == 2 && verts_[0] == verts_[1])
    throw std::invalid_argument("degenerate segment");
  if (verts_.size() >= 3) {
    const std::size_t n = verts_.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (cross(verts_[i], verts_[(i + 1) % n], verts_[(i + 2) % n]) <= 0)
        throw std::invalid_argument("vertices are not in strictly convex CCW position");
    }
  }
}

LatticePolygon convex_hull(std::span<const LatticePoint> points) {
  if (points.empty()) throw std::invalid_argument("convex_hull: empty input");
  std::vector<LatticePoint> p(points.begin(), points.end());
  std::sort(p.begin(), p.end(), lex_less);
  p.erase(std::unique(p.begin(), p.end()), p.end());
  if (p.size() == 1) return LatticePolygon{{p[0]}};

  // Andrew's monotone chain with strict turns (collinear points dropped).
  std::vector<LatticePoint> h(2 * p.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p[i]) <= 0) --k;
    h[k++] = p[i];
  }
  const std::size_t lower_end = k + 1;
  for (std::size_t i = p.size() - 1; i-- > 0;) {
    while (k >= lower_end && cross(h[k - 2], h[k - 1], p[i]) <= 0) --k;
    h[k++] = p[i];
  }
  h.resize(k - 1);

  if (h.size() == 2) {
    if (lowest_leftmost_less(h[1], h[0])) std::swap(h[0], h[1]);
    return LatticePolygon{std::move(h)};
  }
  const auto first = std::min_element(h.begin(), h.end(), lowest_leftmost_less);
  std::rotate(h.begin(), first, h.end());
  return LatticePolygon{std::move(h)};
}

std::int64_t doubled_area(const LatticePolygon& P) {
  if (P.dim() < 2) return 0;
  const auto& v = P.vertices();
  __int128 s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const LatticePoint& a = v[i];
    const LatticePoint& b = v[(i + 1) % v.size()];
    s += static_cast<__int128>(a.u) * b.v - static_cast<__int128>(a.v) * b.u;
  }
  return checked_int64(s, "doubled_area overflow");
}

bool contains(const LatticePolygon& P, LatticePoint z) {
  const auto& v = P.vertices();
  switch (P.dim()) {
    case 0:
      return z == v[0];
    case 1: {
      if (cross(v[0], v[1], z) != 0) return false;
      const LatticePoint d = v[1] - v[0];
      const __int128 t = static_cast<__int128>(z.u - v[0].u) * d.u +
                         static_cast<__int128>(z.v - v[0].v) * d.v;
      const __int128 len2 = static_cast<__int128>(d.u) * d.u +
                            static_cast<__int128>(d.v) * d.v;
      return t >= 0 && t <= len2;
    }
    default: {
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (cross(v[i], v[(i + 1) % v.size()], z) < 0) return false;
      }
      return true;
    }
  }
}

LatticePointSet lattice_points(const LatticePolygon& P) {
  LatticePointSet out;
  const auto& v = P.vertices();
  switch (P.dim()) {
    case 0:
      out.boundary = {v[0]};
      return out;
    case 1: {
      const LatticePoint d = v[1] - v[0];
      const std::int64_t g = std::gcd(d.u, d.v);
      const LatticePoint step{d.u / g, d.v / g};
      for (std::int64_t i = 0; i <= g; ++i)
        out.boundary.push_back({v[0].u + i * step.u, v[0].v + i * step.v});
      std::sort(out.boundary.begin(), out.boundary.end(), lex_less);
      return out;
    }
    default: {
      std::int64_t umin = v[0].u, umax = v[0].u, vmin = v[0].v, vmax = v[0].v;
      for (const auto& p : v) {
        umin = std::min(umin, p.u);
        umax = std::max(umax, p.u);
        vmin = std::min(vmin, p.v);
        vmax = std::max(vmax, p.v);
      }
      for (std::int64_t uu = umin; uu <= umax; ++uu) {
        for (std::int64_t vv = vmin; vv <= vmax; ++vv) {
          const LatticePoint z{uu, vv};
          bool inside = true, on_edge = false;
          for (std::size_t i = 0; i < v.size() && inside; ++i) {
            const __int128 c = cross(v[i], v[(i + 1) % v.size()], z);
            if (c < 0) inside = false;
            if (c == 0) on_edge = true;
          }
          if (!inside) continue;
          (on_edge ? out.boundary : out.interior).push_back(z);
        }
      }
      return out;  // box scan emits in lex order already
    }
  }
}

namespace {

void split_primitive(LatticePoint a, LatticePoint b, std::vector<PrimitiveSegment>& out) {
  const LatticePoint d = b - a;
  const std::int64_t g = std::gcd(d.u, d.v);
  const LatticePoint step{d.u / g, d.v / g};
  LatticePoint cur = a;
  for (std::int64_t i = 0; i < g; ++i) {
    const LatticePoint nxt = cur + step;
    out.push_back({cur, nxt});
    cur = nxt;
  }
}

}  // namespace

std::vector<PrimitiveSegment> boundary_primitive_segments(const LatticePolygon& P) {
  if (P.dim() == 0) throw DimensionError("no boundary segments for a point");
  std::vector<PrimitiveSegment> out;
  const auto& v = P.vertices();
  if (P.dim() == 1) {
    split_primitive(v[0], v[1], out);
    return out;
  }
  for (std::size_t i = 0; i < v.size(); ++i)
    split_primitive(v[i], v[(i + 1) % v.size()], out);
  return out;
}

namespace {

// Incremental sweep over all lattice points of P in the given order. Every
// lattice point becomes a triangulation vertex, which forces each triangle
// to be empty. The current hull keeps collinear boundary nodes so that new
// triangles always attach to primitive boundary edges.
std::vector<EmptyTriangle> sweep_triangulation(std::vector<LatticePoint> pts) {
  std::vector<EmptyTriangle> tris;
  auto emit = [&tris](LatticePoint a, LatticePoint b, LatticePoint c) {
    if (cross(a, b, c) < 0) std::swap(b, c);
    tris.push_back({a, b, c});
  };

  std::size_t k = 2;
  while (k < pts.size() && cross(pts[0], pts[1], pts[k]) == 0) ++k;
  if (k >= pts.size()) throw DimensionError("sweep_triangulation: collinear input");

  LatticePoint p = pts[k];
  for (std::size_t i = 0; i + 1 < k; ++i) emit(pts[i], pts[i + 1], p);

  std::vector<LatticePoint> hull(pts.begin(), pts.begin() + k);
  if (cross(pts[0], pts[1], p) < 0) std::reverse(hull.begin(), hull.end());
  hull.push_back(p);

  for (std::size_t idx = k + 1; idx < pts.size(); ++idx) {
    p = pts[idx];
    const std::size_t n = hull.size();
    std::vector<char> vis(n);
    std::size_t nvis = 0;
    for (std::size_t e = 0; e < n; ++e) {
      vis[e] = cross(hull[e], hull[(e + 1) % n], p) < 0;
      nvis += vis[e];
    }
    std::size_t s = 0;
    while (s < n && !(vis[s] && !vis[(s + n - 1) % n])) ++s;
    if (nvis == 0 || s == n)
      throw std::logic_error("sweep_triangulation: no visible edge");
    std::size_t e = s;
    for (std::size_t c = 0; c < nvis; ++c, e = (e + 1) % n)
      emit(hull[e], hull[(e + 1) % n], p);

    std::vector<LatticePoint> next;
    next.reserve(n - nvis + 2);
    next.push_back(p);
    for (std::size_t vtx = (s + nvis) % n;; vtx = (vtx + 1) % n) {
      next.push_back(hull[vtx]);
      if (vtx == s) break;
    }
    hull = std::move(next);
  }
  return tris;
}

std::vector<LatticePoint> all_points_sorted(const LatticePolygon& P, bool reversed) {
  const LatticePointSet s = lattice_points(P);
  std::vector<LatticePoint> pts = s.boundary;
  pts.insert(pts.end(), s.interior.begin(), s.interior.end());
  std::sort(pts.begin(), pts.end(), [reversed](LatticePoint a, LatticePoint b) {
    return reversed ? lex_less(b, a) : lex_less(a, b);
  });
  return pts;
}

std::array<LatticePoint, 3> sorted_verts(const EmptyTriangle& t) {
  std::array<LatticePoint, 3> a{t.v0, t.v1, t.v2};
  std::sort(a.begin(), a.end(), lex_less);
  return a;
}

bool same_triangle_set(const std::vector<EmptyTriangle>& a,
                       const std::vector<EmptyTriangle>& b) {
  if (a.size() != b.size()) return false;
  std::vector<std::array<LatticePoint, 3>> ka, kb;
  for (const auto& t : a) ka.push_back(sorted_verts(t));
  for (const auto& t : b) kb.push_back(sorted_verts(t));
  auto key_less = [](const auto& x, const auto& y) {
    for (int i = 0; i < 3; ++i) {
      if (x[i] == y[i]) continue;
      return lex_less(x[i], y[i]);
    }
    return false;
  };
  std::sort(ka.begin(), ka.end(), key_less);
  std::sort(kb.begin(), kb.end(), key_less);
  return ka == kb;
}

// Flip the first pair of triangles whose union is an empty parallelogram
// (shared edge {a,b}, opposite vertices c,d with c + d == a + b).
bool flip_first_parallelogram(std::vector<EmptyTriangle>& tris) {
  for (std::size_t i = 0; i < tris.size(); ++i) {
    const auto vi = sorted_verts(tris[i]);
    for (std::size_t j = i + 1; j < tris.size(); ++j) {
      const auto vj = sorted_verts(tris[j]);
      std::vector<LatticePoint> shared;
      for (const auto& x : vi)
        for (const auto& y : vj)
          if (x == y) shared.push_back(x);
      if (shared.size() != 2) continue;
      auto third = [&shared](const std::array<LatticePoint, 3>& t) {
        for (const auto& x : t)
          if (!(x == shared[0]) && !(x == shared[1])) return x;
        throw std::logic_error("degenerate triangle pair");
      };
      const LatticePoint c = third(vi), d = third(vj);
      if (!(c + d == shared[0] + shared[1])) continue;
      auto make = [](LatticePoint a, LatticePoint b, LatticePoint cc) {
        if (cross(a, b, cc) < 0) std::swap(b, cc);
        return EmptyTriangle{a, b, cc};
      };
      tris[i] = make(c, d, shared[0]);
      tris[j] = make(c, d, shared[1]);
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<EmptyTriangle> empty_triangulation(const LatticePolygon& P) {
  if (P.dim() < 2) throw DimensionError("empty_triangulation: dim(P) must be 2");
  return sweep_triangulation(all_points_sorted(P, /*reversed=*/false));
}

std::vector<EmptyTriangle> alternative_triangulation(const LatticePolygon& P) {
  if (P.dim() < 2) throw DimensionError("alternative_triangulation: dim(P) must be 2");
  auto alt = sweep_triangulation(all_points_sorted(P, /*reversed=*/true));
  if (same_triangle_set(alt, empty_triangulation(P))) flip_first_parallelogram(alt);
  return alt;
}

}  // namespace latval
