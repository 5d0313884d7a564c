#pragma once

#include <cstdint>
#include <vector>

#include "papertorus/angles.hpp"
#include "papertorus/configuration.hpp"
#include "papertorus/rng.hpp"
#include "papertorus/vec.hpp"

namespace papertorus {

// Monte Carlo length of a spherical polygon: pi times the mean number of
// intersections with random great circles. `chain` is a sequence of unit
// vectors; arcs run between consecutive entries (repeat the first entry at
// the end for a closed loop). Arcs must be shorter than pi.
inline double crofton_estimate(const std::vector<Vec3D>& chain, long samples,
                               std::uint64_t seed) {
  Rng rng(seed);
  long long crossings = 0;
  for (long s = 0; s < samples; ++s) {
    const Vec3D n = rng.sphere();
    double prev = dot(n, chain[0]);
    for (std::size_t i = 1; i < chain.size(); ++i) {
      const double cur = dot(n, chain[i]);
      if ((prev > 0) != (cur > 0)) ++crossings;
      prev = cur;
    }
  }
  return 3.14159265358979323846 * static_cast<double>(crossings) /
         static_cast<double>(samples);
}

// The spherical link of a vertex: unit directions from the vertex to its
// link, in cyclic order, closed. Its length is the cone angle.
inline std::vector<Vec3D> vertex_link_loop(const Configuration& c, int v) {
  const auto pts = c.points_double();
  std::vector<Vec3D> out;
  for (int u : c.triangulation.vertex_link(v)) {
    Vec3D d = pts[u] - pts[v];
    out.push_back((1.0 / norm(d)) * d);
  }
  out.push_back(out.front());
  return out;
}

}  // namespace papertorus
