#pragma once

#include <algorithm>
#include <array>
#include <set>
#include <vector>

#include "papertorus/errors.hpp"
#include "papertorus/scaled.hpp"

namespace papertorus {

struct HullReport {
  std::vector<FaceTriple> facet_list;  // sorted triples, lexicographic
  std::vector<bool> on_hull;           // per vertex
  int hull_edge_count = 0;
  int face_number = 0;  // torus faces that are also hull facets
  std::vector<FaceTriple> hull_torus_faces;
};

// Exact orientation sign of d relative to the plane through (a,b,c).
inline int orient3d_sign(const Vec3I& a, const Vec3I& b, const Vec3I& c,
                         const Vec3I& d) {
  const Vec3I u = b - a, v = c - a, w = d - a;
  const BigInt det = dot(w, cross(u, v));
  return det == 0 ? 0 : det > 0 ? 1 : -1;
}

// Convex hull facets by exhaustive facet testing with exact integer
// predicates. Quadratic-by-triples, which is the right tool for the <= 8
// point configurations this project studies; a zero predicate anywhere is a
// general-position failure, never a guess.
inline HullReport convex_hull(const ScaledIntegerConfig& sc) {
  const auto& pts = sc.coordinates;
  const int n = static_cast<int>(pts.size());
  if (n < 4) throw GeneralPositionFailure("need at least 4 points");
  HullReport rep;
  rep.on_hull.assign(n, false);
  std::set<EdgeKey> hull_edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        int sign = 0;
        bool facet = true;
        for (int u = 0; u < n && facet; ++u) {
          if (u == i || u == j || u == k) continue;
          int s = orient3d_sign(pts[i], pts[j], pts[k], pts[u]);
          if (s == 0)
            throw GeneralPositionFailure(
                "four coplanar points under exact predicates");
          if (sign == 0)
            sign = s;
          else if (s != sign)
            facet = false;
        }
        if (facet) {
          rep.facet_list.push_back({i, j, k});
          rep.on_hull[i] = rep.on_hull[j] = rep.on_hull[k] = true;
          hull_edges.insert(edge_key(i, j));
          hull_edges.insert(edge_key(j, k));
          hull_edges.insert(edge_key(i, k));
        }
      }
  rep.hull_edge_count = static_cast<int>(hull_edges.size());
  std::set<FaceTriple> torus_faces;
  for (auto f : sc.triangulation.faces()) {
    std::sort(f.begin(), f.end());
    torus_faces.insert(f);
  }
  for (const auto& f : rep.facet_list)
    if (torus_faces.count(f)) {
      ++rep.face_number;
      rep.hull_torus_faces.push_back(f);
    }
  return rep;
}

inline HullReport convex_hull(const Configuration& c) {
  return convex_hull(scale_to_integers(c));
}

// Float hull for the search loop: same facet test in doubles with a relative
// tolerance; ties count as 'on the plane' rather than failing.
struct FloatHull {
  std::vector<FaceTriple> facets;
  bool all_on_hull = false;
  int face_number = 0;
};

inline FloatHull convex_hull_double(const std::vector<Vec3D>& pts,
                                    const Triangulation& t,
                                    double eps = 1e-12) {
  const int n = static_cast<int>(pts.size());
  FloatHull rep;
  std::vector<bool> on(n, false);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        const Vec3D u = pts[j] - pts[i], v = pts[k] - pts[i];
        const Vec3D nrm = cross(u, v);
        double pos = 0, neg = 0;
        for (int w = 0; w < n; ++w) {
          if (w == i || w == j || w == k) continue;
          double s = dot(nrm, pts[w] - pts[i]);
          pos = std::max(pos, s);
          neg = std::min(neg, s);
        }
        if (pos <= eps || neg >= -eps) {
          rep.facets.push_back({i, j, k});
          on[i] = on[j] = on[k] = true;
        }
      }
  rep.all_on_hull =
      std::all_of(on.begin(), on.end(), [](bool b) { return b; });
  std::set<FaceTriple> torus_faces;
  for (auto f : t.faces()) {
    std::sort(f.begin(), f.end());
    torus_faces.insert(f);
  }
  for (const auto& f : rep.facets)
    if (torus_faces.count(f)) ++rep.face_number;
  return rep;
}

}  // namespace papertorus
