#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace latval {

/// Thrown when an operation requires a polytope of higher dimension than the
/// one supplied (e.g. boundary segments of a single point). The CLI maps
/// this error class to exit code 3.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A point of the integer lattice Z^2. All geometric predicates on lattice
/// data are evaluated exactly in extended integer arithmetic; inputs with
/// |u|, |v| <= 2^31 are safe.
struct LatticePoint {
  std::int64_t u = 0;
  std::int64_t v = 0;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

LatticePoint operator+(LatticePoint a, LatticePoint b);
LatticePoint operator-(LatticePoint a, LatticePoint b);

/// Lexicographic order with u major.
bool lex_less(LatticePoint a, LatticePoint b);

/// Orientation of the triple (o, a, b): cross(a - o, b - o), exact.
__int128 cross(LatticePoint o, LatticePoint a, LatticePoint b);

/// A real point; the evaluation argument of all kernels and valuations.
struct Point2 {
  double x = 0;
  double y = 0;
};

/// A lattice segment whose only lattice points are its endpoints.
struct PrimitiveSegment {
  LatticePoint p;
  LatticePoint q;
};

/// A lattice triangle whose only lattice points are its vertices, stored in
/// positive orientation: det(v1 - v0, v2 - v0) == +1.
struct EmptyTriangle {
  LatticePoint v0;
  LatticePoint v1;
  LatticePoint v2;
};

/// Convex hull of finitely many lattice points, in canonical form:
///   dim 0 - a single vertex,
///   dim 1 - the two endpoints,
///   dim 2 - strictly convex vertices in counterclockwise order,
/// starting from the lowest-then-leftmost vertex (minimal (v, u)).
class LatticePolygon {
 public:
  LatticePolygon() = default;
  /// Accepts canonical vertex lists only; use convex_hull to build one from
  /// arbitrary points. Validates strict convexity for dim 2.
  explicit LatticePolygon(std::vector<LatticePoint> canonical_vertices);

  int dim() const {
    return verts_.size() == 1 ? 0 : verts_.size() == 2 ? 1 : 2;
  }
  const std::vector<LatticePoint>& vertices() const { return verts_; }

  friend bool operator==(const LatticePolygon&, const LatticePolygon&) = default;

 private:
  std::vector<LatticePoint> verts_{LatticePoint{}};
};

LatticePolygon convex_hull(std::span<const LatticePoint> points);

/// P intersected with Z^2, split into boundary and interior points, each
/// lex-sorted. For dim <= 1 every lattice point counts as boundary.
struct LatticePointSet {
  std::vector<LatticePoint> boundary;
  std::vector<LatticePoint> interior;
};
LatticePointSet lattice_points(const LatticePolygon& P);

/// The boundary of P (dim 2) or P itself (dim 1), subdivided at its lattice
/// points into primitive segments. Throws DimensionError for dim 0.
std::vector<PrimitiveSegment> boundary_primitive_segments(const LatticePolygon& P);

/// Triangulation of P into empty triangles whose vertex set is all of
/// P's lattice points (lexicographic sweep). Throws DimensionError for
/// dim < 2. The triangle count equals the doubled area of P.
std::vector<EmptyTriangle> empty_triangulation(const LatticePolygon& P);

/// A second empty triangulation, built by the reversed-order sweep; if that
/// coincides with empty_triangulation's result, the first flippable
/// parallelogram diagonal is flipped so the two outputs differ whenever a
/// flip exists.
std::vector<EmptyTriangle> alternative_triangulation(const LatticePolygon& P);

/// Twice the Euclidean area as an exact integer (0 for dim <= 1).
std::int64_t doubled_area(const LatticePolygon& P);

/// Exact point membership (boundary counts as inside).
bool contains(const LatticePolygon& P, LatticePoint z);

}  // namespace latval
