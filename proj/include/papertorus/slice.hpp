#pragma once

#include <vector>

#include "papertorus/configuration.hpp"
#include "papertorus/errors.hpp"
#include "papertorus/real.hpp"
#include "papertorus/vec.hpp"

namespace papertorus {

struct SliceResult {
  Vec3R plane_point, plane_normal;  // as actually used (post perturbation)
  bool perturbed = false;
  std::vector<std::vector<Vec3R>> loops;        // closed polylines
  std::vector<std::vector<Vec3R>> open_chains;  // diagnostic; empty when sane
  std::vector<std::vector<Vec2R>> loops_2d;     // in-plane coordinates
};

// Cut the torus by a plane: per-face segments chained into closed loops by
// endpoint matching with tolerance 10^(-precision/2). A plane passing
// through a vertex is shifted along its normal by the same magnitude first.
inline SliceResult slice_plane(const Configuration& c, Vec3R point,
                               Vec3R normal, bool embedded_expected = false) {
  PrecisionGuard guard(c.precision);
  const auto pts = c.points();
  const auto& t = c.triangulation;
  const Real nn = norm(normal);
  if (nn == 0) throw Error("slice: zero normal");
  normal = (1 / nn) * normal;

  const Real tol = pow10(-static_cast<long>(c.precision) / 2);
  SliceResult res;
  res.plane_normal = normal;

  auto too_close = [&](const Vec3R& p) {
    for (const auto& q : pts)
      if (abs(dot(q - p, normal)) < tol) return true;
    return false;
  };
  for (int tries = 0; too_close(point); ++tries) {
    if (tries > 64)
      throw GeneralPositionFailure("slice plane cannot avoid vertices");
    point = point + tol * normal;
    res.perturbed = true;
  }
  res.plane_point = point;

  std::vector<Real> dist(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i)
    dist[i] = dot(pts[i] - point, normal);

  struct Seg {
    Vec3R a, b;
    bool used = false;
  };
  std::vector<Seg> segs;
  for (const auto& f : t.faces()) {
    std::vector<Vec3R> hits;
    for (int k = 0; k < 3; ++k) {
      const int u = f[k], v = f[(k + 1) % 3];
      if ((dist[u] > 0) != (dist[v] > 0)) {
        const Real s = dist[u] / (dist[u] - dist[v]);
        hits.push_back(pts[u] + s * (pts[v] - pts[u]));
      }
    }
    if (hits.size() == 2) segs.push_back({hits[0], hits[1]});
  }

  auto near = [&](const Vec3R& a, const Vec3R& b) {
    return norm(a - b) < tol;
  };
  for (std::size_t s0 = 0; s0 < segs.size(); ++s0) {
    if (segs[s0].used) continue;
    segs[s0].used = true;
    std::vector<Vec3R> chain{segs[s0].a, segs[s0].b};
    bool extended = true;
    while (extended) {
      extended = false;
      for (auto& s : segs) {
        if (s.used) continue;
        if (near(s.a, chain.back())) {
          chain.push_back(s.b);
        } else if (near(s.b, chain.back())) {
          chain.push_back(s.a);
        } else {
          continue;
        }
        s.used = true;
        extended = true;
      }
    }
    if (near(chain.front(), chain.back())) {
      chain.pop_back();
      res.loops.push_back(std::move(chain));
    } else {
      res.open_chains.push_back(std::move(chain));
    }
  }

  if (embedded_expected && !res.open_chains.empty())
    throw ChainingFailure("open chains on an embedded configuration: " +
                          std::to_string(res.open_chains.size()));

  // in-plane coordinates over a deterministic orthonormal basis
  Vec3R seed = abs(normal.x) < Real("0.9") ? Vec3R{Real(1), Real(0), Real(0)}
                                           : Vec3R{Real(0), Real(1), Real(0)};
  Vec3R e1 = cross(normal, seed);
  e1 = (1 / norm(e1)) * e1;
  const Vec3R e2 = cross(normal, e1);
  for (const auto& loop : res.loops) {
    std::vector<Vec2R> flat;
    flat.reserve(loop.size());
    for (const auto& p : loop)
      flat.push_back({dot(p - point, e1), dot(p - point, e2)});
    res.loops_2d.push_back(std::move(flat));
  }
  return res;
}

}  // namespace papertorus
