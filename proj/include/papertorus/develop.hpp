#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <vector>

#include "papertorus/angles.hpp"
#include "papertorus/configuration.hpp"
#include "papertorus/errors.hpp"
#include "papertorus/vec.hpp"

namespace papertorus {

// Isometric unfolding of a near-flat torus into the plane.
//
// Faces are laid out over a BFS spanning tree of the face adjacency graph;
// each non-tree adjacency then yields a planar isometry comparing the
// existing lift with the would-be unfold. Contractible loops give
// near-identity isometries (their rotation angle is the cone deficit);
// homologically nontrivial loops give the deck translations, from which a
// Lagrange-reduced lattice basis is extracted.
struct Development {
  int base_face = 0;
  std::vector<std::array<Vec2R, 3>> face_lifts;  // corner order = face order
  Vec2R lambda1, lambda2;                        // reduced lattice basis
  Real rotational_holonomy1, rotational_holonomy2;
  Real max_contractible_rotation;  // largest cone-deficit residue seen

  // Gram data of the lattice basis; |lambda1.lambda2| reported so the value
  // is insensitive to basis sign and orientation conventions.
  Real gram11() const { return norm2(lambda1); }
  Real gram22() const { return norm2(lambda2); }
  Real gram12_abs() const { return abs(dot(lambda1, lambda2)); }
};

namespace detail {

struct UnfoldIsometry {  // z -> R z + t
  Real c, s;
  Vec2R t;
};

// Lay vertex w given the lifted edge (U,V) and the three 3D side lengths,
// on the side of (U,V) selected by `side_sign` (+1 above, -1 below).
inline Vec2R lay_third(const Vec2R& U, const Vec2R& V, const Real& luv,
                       const Real& luw, const Real& lvw, int side_sign) {
  const Vec2R ex = (1 / luv) * (V - U);
  const Vec2R ey{-ex.y, ex.x};
  const Real x = (luv * luv + luw * luw - lvw * lvw) / (2 * luv);
  Real y2 = luw * luw - x * x;
  if (y2 < 0) y2 = 0;
  const Real y = sqrt(y2) * side_sign;
  return U + x * ex + y * ey;
}

}  // namespace detail

inline Development develop(const Configuration& c, int base_face = 0) {
  PrecisionGuard guard(c.precision);
  {
    auto flat = cone_angles(c);
    if (flat.max_deviation > Real("1e-6"))
      throw NotFlatEnough("development needs max cone deviation <= 1e-6, got " +
                          flat.max_deviation.str(6));
  }
  const auto pts = c.points();
  const auto& t = c.triangulation;
  const int nf = t.face_count();

  auto len = [&](int a, int b) { return norm(pts[b] - pts[a]); };
  auto third = [&](int fi, int u, int v) {
    for (int x : t.faces()[fi])
      if (x != u && x != v) return x;
    throw InternalInconsistency("face without third vertex");
  };
  auto corner_of = [&](int fi, int v) {
    const auto& f = t.faces()[fi];
    return static_cast<int>(std::find(f.begin(), f.end(), v) - f.begin());
  };

  std::vector<std::optional<std::array<Vec2R, 3>>> lift(nf);
  std::vector<int> parent(nf, -1);

  // base face: corner 0 at the origin, corner 1 on +x, corner 2 above
  {
    const auto& f = t.faces()[base_face];
    const Real lab = len(f[0], f[1]);
    const Vec2R A{Real(0), Real(0)}, B{lab, Real(0)};
    lift[base_face] = {A, B,
                       detail::lay_third(A, B, lab, len(f[0], f[2]),
                                         len(f[1], f[2]), +1)};
  }

  struct NonTree {
    int from, to, u, v;  // crossing directed edge (u,v) owned by `from`
  };
  std::vector<NonTree> nontree;

  std::deque<int> queue{base_face};
  while (!queue.empty()) {
    const int fi = queue.front();
    queue.pop_front();
    const auto& f = t.faces()[fi];
    for (int k = 0; k < 3; ++k) {
      const int u = f[k], v = f[(k + 1) % 3];
      const auto [left, right] = t.edge_faces(u, v);
      const int gj = right;  // the face with directed edge (v,u)
      if (gj < 0 || gj == fi) continue;
      if (lift[gj]) {
        if (parent[fi] != gj && parent[gj] != fi)
          nontree.push_back({fi, gj, u, v});
        continue;
      }
      const int w = third(gj, u, v);
      const Vec2R U = (*lift[fi])[corner_of(fi, u)];
      const Vec2R V = (*lift[fi])[corner_of(fi, v)];
      // the new face goes on the opposite side from fi's own third vertex
      const Vec2R T = (*lift[fi])[corner_of(fi, third(fi, u, v))];
      const Vec2R ex = V - U;
      const Real sideT = cross2(ex, T - U);
      std::array<Vec2R, 3> g{};
      const Vec2R W = detail::lay_third(U, V, len(u, v), len(u, w), len(v, w),
                                        sideT > 0 ? -1 : +1);
      g[corner_of(gj, u)] = U;
      g[corner_of(gj, v)] = V;
      g[corner_of(gj, w)] = W;
      lift[gj] = g;
      parent[gj] = fi;
      queue.push_back(gj);
    }
  }

  for (int i = 0; i < nf; ++i)
    if (!lift[i]) throw InternalInconsistency("face adjacency not connected");

  // Non-tree isometries: map the existing lift of `to` onto its unfold
  // across the crossing edge.
  std::vector<detail::UnfoldIsometry> isos;
  for (const auto& nt : nontree) {
    // All lifts are laid with consistent plane orientation, so the deck map
    // is the orientation-preserving isometry sending the existing lifted
    // edge (su,sv) of `to` onto the crossing edge (U,V) seen from `from`.
    const Vec2R U = (*lift[nt.from])[corner_of(nt.from, nt.u)];
    const Vec2R V = (*lift[nt.from])[corner_of(nt.from, nt.v)];
    const Vec2R su = (*lift[nt.to])[corner_of(nt.to, nt.u)];
    const Vec2R sv = (*lift[nt.to])[corner_of(nt.to, nt.v)];
    const Vec2R d1 = sv - su, d2 = V - U;
    const Real n1 = norm(d1), n2 = norm(d2);
    detail::UnfoldIsometry iso;
    iso.c = dot(d1, d2) / (n1 * n2);
    iso.s = cross2(d1, d2) / (n1 * n2);
    iso.t = Vec2R{U.x - (iso.c * su.x - iso.s * su.y),
                  U.y - (iso.s * su.x + iso.c * su.y)};
    isos.push_back(iso);
  }

  // Split isometries into holonomy residues and lattice translations.
  Real min_edge = norm(pts[t.edges()[0].second] - pts[t.edges()[0].first]);
  for (const auto& [a, b] : t.edges()) min_edge = std::min(min_edge, len(a, b));
  const Real split = min_edge / 4;

  Development dev;
  dev.base_face = base_face;
  dev.max_contractible_rotation = 0;
  std::vector<std::pair<Vec2R, Real>> lattice_obs;  // translation, |rotation|
  for (const auto& iso : isos) {
    const Real ang = abs(atan2(iso.s, iso.c));
    if (norm(iso.t) < split)
      dev.max_contractible_rotation =
          std::max(dev.max_contractible_rotation, ang);
    else
      lattice_obs.emplace_back(iso.t, ang);
  }
  if (lattice_obs.size() < 2)
    throw InternalInconsistency("unfolding saw fewer than two deck translations");

  std::sort(lattice_obs.begin(), lattice_obs.end(),
            [](const auto& a, const auto& b) {
              return norm2(a.first) < norm2(b.first);
            });
  Vec2R b1 = lattice_obs[0].first;
  Vec2R b2;
  bool found = false;
  for (std::size_t i = 1; i < lattice_obs.size() && !found; ++i) {
    const Vec2R w = lattice_obs[i].first;
    if (abs(cross2(b1, w)) > norm(b1) * norm(w) / 1000) {
      b2 = w;
      found = true;
    }
  }
  if (!found)
    throw InternalInconsistency("deck translations do not span a lattice");

  // Lagrange-Gauss reduction
  for (;;) {
    if (norm2(b2) < norm2(b1)) std::swap(b1, b2);
    const Real mu = dot(b1, b2) / norm2(b1);
    const Real k = round(mu);
    if (k == 0) break;
    b2 = b2 - k * b1;
  }
  // canonical signs
  auto canon = [](Vec2R v) {
    if (v.x < 0 || (v.x == 0 && v.y < 0)) return Vec2R{-v.x, -v.y};
    return v;
  };
  dev.lambda1 = canon(b1);
  dev.lambda2 = canon(b2);

  // holonomy of the generators: the observed isometries nearest +-b1, +-b2
  auto holonomy_near = [&](const Vec2R& gen) {
    Real best = -1, ang = 0;
    for (const auto& [tr, a] : lattice_obs) {
      Real d = std::min(norm(tr - gen), norm(tr + gen));
      if (best < 0 || d < best) {
        best = d;
        ang = a;
      }
    }
    return ang;
  };
  dev.rotational_holonomy1 = holonomy_near(dev.lambda1);
  dev.rotational_holonomy2 = holonomy_near(dev.lambda2);

  dev.face_lifts.reserve(nf);
  for (int i = 0; i < nf; ++i) dev.face_lifts.push_back(*lift[i]);
  return dev;
}

}  // namespace papertorus
