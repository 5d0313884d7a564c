#pragma once

#include <algorithm>
#include <vector>

#include "papertorus/configuration.hpp"
#include "papertorus/errors.hpp"
#include "papertorus/real.hpp"
#include "papertorus/vec.hpp"

namespace papertorus {

// Angle at p0 between the edges to p1 and p2:
//   arccos( V1.V2 / sqrt((V1.V1)(V2.V2)) ),  V1 = p1-p0, V2 = p2-p0.
inline Real triangle_angle(const Vec3R& p0, const Vec3R& p1, const Vec3R& p2) {
  const Vec3R v1 = p1 - p0, v2 = p2 - p0;
  const Real n1 = norm2(v1), n2 = norm2(v2);
  const Real floor = pow10(-static_cast<long>(current_digits()) / 2);
  if (n1 < floor * floor || n2 < floor * floor)
    throw DegenerateTriangle("edge vector norm below working floor");
  Real u = dot(v1, v2) / sqrt(n1 * n2);
  if (u > 1) u = 1;
  if (u < -1) u = -1;
  return acos(u);
}

struct FlatnessReport {
  std::vector<Real> cone_angles;  // per vertex, radians
  Real max_deviation;             // max_k |theta_k - 2pi|
};

// Cone angle at each vertex: the sum of incident face angles with the vertex
// as apex. Terms are sorted before summation so the rounded sum is identical
// for symmetry-related vertices and independent of face order.
inline FlatnessReport cone_angles(const Configuration& c) {
  PrecisionGuard guard(c.precision);
  const auto pts = c.points();
  const auto& t = c.triangulation;
  FlatnessReport rep;
  rep.cone_angles.resize(t.vertex_count());
  const Real tau = two_pi();
  rep.max_deviation = 0;
  for (int v = 0; v < t.vertex_count(); ++v) {
    std::vector<Real> terms;
    for (int fi : t.faces_incident(v)) {
      const auto& f = t.faces()[fi];
      auto i = std::find(f.begin(), f.end(), v) - f.begin();
      terms.push_back(
          triangle_angle(pts[v], pts[f[(i + 1) % 3]], pts[f[(i + 2) % 3]]));
    }
    std::sort(terms.begin(), terms.end());
    Real sum = 0;
    for (const auto& x : terms) sum += x;
    rep.cone_angles[v] = sum;
    Real dev = abs(sum - tau);
    if (dev > rep.max_deviation) rep.max_deviation = dev;
  }
  return rep;
}

}  // namespace papertorus
