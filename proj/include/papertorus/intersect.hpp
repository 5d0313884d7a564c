#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "papertorus/configuration.hpp"
#include "papertorus/vec.hpp"

namespace papertorus {

namespace detail {

using Tri = std::array<Vec3D, 3>;

inline void axis_interval(const Tri& t, const Vec3D& ax, double& lo,
                          double& hi) {
  lo = hi = dot(t[0], ax);
  for (int i = 1; i < 3; ++i) {
    double d = dot(t[i], ax);
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
}

inline double tri_scale(const Tri& a, const Tri& b) {
  double s = 0;
  for (const auto& p : a) s = std::max({s, std::fabs(p.x), std::fabs(p.y), std::fabs(p.z)});
  for (const auto& p : b) s = std::max({s, std::fabs(p.x), std::fabs(p.y), std::fabs(p.z)});
  return std::max(s, 1e-30);
}

// 2D SAT in the plane spanned by (ex, ey) for coplanar pairs.
inline bool coplanar_overlap(const Tri& t1, const Tri& t2, const Vec3D& ex,
                             const Vec3D& ey, double tol) {
  auto proj = [&](const Vec3D& p) { return Vec2D{dot(p, ex), dot(p, ey)}; };
  std::array<Vec2D, 3> a{proj(t1[0]), proj(t1[1]), proj(t1[2])};
  std::array<Vec2D, 3> b{proj(t2[0]), proj(t2[1]), proj(t2[2])};
  auto separated_by_edges = [&](const std::array<Vec2D, 3>& u,
                                const std::array<Vec2D, 3>& v) {
    for (int i = 0; i < 3; ++i) {
      Vec2D e = u[(i + 1) % 3] - u[i];
      Vec2D n{-e.y, e.x};
      double lo1 = 1e300, hi1 = -1e300, lo2 = 1e300, hi2 = -1e300;
      for (const auto& p : u) {
        double d = dot(p, n);
        lo1 = std::min(lo1, d);
        hi1 = std::max(hi1, d);
      }
      for (const auto& p : v) {
        double d = dot(p, n);
        lo2 = std::min(lo2, d);
        hi2 = std::max(hi2, d);
      }
      double s = std::max({std::fabs(lo1), std::fabs(hi1), std::fabs(lo2),
                           std::fabs(hi2), 1e-30});
      if (hi1 < lo2 - tol * s || hi2 < lo1 - tol * s) return true;
    }
    return false;
  };
  return !separated_by_edges(a, b) && !separated_by_edges(b, a);
}

}  // namespace detail

// Closed-triangle intersection by the separating axis test: the two face
// normals and the 9 edge-cross-edge directions, with a coplanar fallback to
// 2D edge tests.
inline bool triangles_intersect(const detail::Tri& t1, const detail::Tri& t2,
                                double rel_tol = 1e-12) {
  const double scale = detail::tri_scale(t1, t2);
  const double tol = rel_tol;
  std::array<Vec3D, 3> e1{t1[1] - t1[0], t1[2] - t1[1], t1[0] - t1[2]};
  std::array<Vec3D, 3> e2{t2[1] - t2[0], t2[2] - t2[1], t2[0] - t2[2]};
  const Vec3D n1 = cross(e1[0], e1[1]);
  const Vec3D n2 = cross(e2[0], e2[1]);

  // coplanar pair: all candidate 3D axes degenerate parallel to the normal
  const double n1n = norm(n1), n2n = norm(n2);
  if (n1n > 0 && n2n > 0) {
    const double sin_normals = norm(cross(n1, n2)) / (n1n * n2n);
    const double off = std::fabs(dot(t2[0] - t1[0], n1)) / n1n;
    if (sin_normals < 1e-9 && off < 1e-9 * scale) {
      Vec3D ex = (1.0 / norm(e1[0])) * e1[0];
      Vec3D ey = cross((1.0 / n1n) * n1, ex);
      return detail::coplanar_overlap(t1, t2, ex, ey, tol);
    }
  }

  auto separated = [&](const Vec3D& ax) {
    const double n = norm(ax);
    if (n < 1e-14 * scale * scale) return false;  // degenerate axis
    double lo1, hi1, lo2, hi2;
    detail::axis_interval(t1, ax, lo1, hi1);
    detail::axis_interval(t2, ax, lo2, hi2);
    const double s = std::max({std::fabs(lo1), std::fabs(hi1), std::fabs(lo2),
                               std::fabs(hi2), 1e-30});
    return hi1 < lo2 - tol * s || hi2 < lo1 - tol * s;
  };

  if (separated(n1) || separated(n2)) return false;
  for (const auto& a : e1)
    for (const auto& b : e2)
      if (separated(cross(a, b))) return false;
  return true;
}

enum class PairKind { kDisjointVertices, kOneShared, kTwoShared };

struct PairRelation {
  PairKind kind;
  bool float_intersection;  // beyond allowed contact; two-shared exempt
};

namespace detail {

inline std::vector<int> shared_vertices(const FaceTriple& a,
                                        const FaceTriple& b) {
  std::vector<int> out;
  for (int u : a)
    for (int v : b)
      if (u == v) out.push_back(u);
  return out;
}

// Shrink the corner at vertex `v` toward the opposite edge midpoint; turns
// "intersect only at the shared vertex" into plain disjointness.
inline Tri shrink_at(const Tri& t, int corner, double factor = 1e-6) {
  Tri out = t;
  const Vec3D mid =
      0.5 * (t[(corner + 1) % 3] + t[(corner + 2) % 3]);
  out[corner] = t[corner] + factor * (mid - t[corner]);
  return out;
}

}  // namespace detail

// Relation of two faces: shared-vertex classification plus a double-precision
// intersection verdict. One-shared pairs are tested for contact beyond the
// shared vertex; two-shared pairs are exempt (an embedded neighborhood there
// follows from the other pairs).
inline PairRelation tri_pair_relation(const std::vector<Vec3D>& pts,
                                      const Triangulation& t, int f1, int f2) {
  const auto& a = t.faces()[f1];
  const auto& b = t.faces()[f2];
  const auto shared = detail::shared_vertices(a, b);
  detail::Tri t1{pts[a[0]], pts[a[1]], pts[a[2]]};
  detail::Tri t2{pts[b[0]], pts[b[1]], pts[b[2]]};
  switch (shared.size()) {
    case 0:
      return {PairKind::kDisjointVertices, triangles_intersect(t1, t2)};
    case 1: {
      int c1 = static_cast<int>(std::find(a.begin(), a.end(), shared[0]) -
                                a.begin());
      int c2 = static_cast<int>(std::find(b.begin(), b.end(), shared[0]) -
                                b.begin());
      bool hit = triangles_intersect(detail::shrink_at(t1, c1),
                                     detail::shrink_at(t2, c2));
      return {PairKind::kOneShared, hit};
    }
    default:
      return {PairKind::kTwoShared, false};
  }
}

inline PairRelation tri_pair_relation(const Configuration& c, int f1, int f2) {
  return tri_pair_relation(c.points_double(), c.triangulation, f1, f2);
}

// Embedded at double precision: no 0-shared pair intersects and every
// 1-shared pair meets only at its shared vertex. The certifier provides the
// rigorous version of this test.
inline bool is_embedded_float(const std::vector<Vec3D>& pts,
                              const Triangulation& t) {
  const int m = t.face_count();
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      auto rel = tri_pair_relation(pts, t, i, j);
      if (rel.kind != PairKind::kTwoShared && rel.float_intersection)
        return false;
    }
  return true;
}

inline bool is_embedded_float(const Configuration& c) {
  return is_embedded_float(c.points_double(), c.triangulation);
}

}  // namespace papertorus
