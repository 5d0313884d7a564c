#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "papertorus/errors.hpp"

namespace papertorus {

using FaceTriple = std::array<int, 3>;
using EdgeKey = std::pair<int, int>;  // normalized: first < second

inline EdgeKey edge_key(int a, int b) {
  return a < b ? EdgeKey{a, b} : EdgeKey{b, a};
}

// A closed oriented triangulated torus. The constructor enforces the torus
// invariants: Euler characteristic 0, every edge in exactly two faces with
// opposite induced orientations, and every vertex link a single cycle.
class Triangulation {
 public:
  Triangulation(int vertex_count, std::vector<FaceTriple> faces)
      : vertex_count_(vertex_count), faces_(std::move(faces)) {
    validate();
  }

  int vertex_count() const { return vertex_count_; }
  int face_count() const { return static_cast<int>(faces_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<FaceTriple>& faces() const { return faces_; }
  const std::vector<EdgeKey>& edges() const { return edges_; }

  bool has_edge(int a, int b) const {
    return std::binary_search(edges_.begin(), edges_.end(), edge_key(a, b));
  }

  // Neighbors of q in cyclic order around q (orientation-induced).
  std::vector<int> vertex_link(int q) const {
    std::map<int, int> next;
    for (const auto& f : faces_) {
      for (int i = 0; i < 3; ++i) {
        if (f[i] == q) next[f[(i + 1) % 3]] = f[(i + 2) % 3];
      }
    }
    std::vector<int> out;
    if (next.empty()) return out;
    int start = next.begin()->first;
    int v = start;
    do {
      out.push_back(v);
      v = next.at(v);
    } while (v != start && out.size() <= next.size());
    return out;
  }

  std::vector<int> faces_incident(int q) const {
    std::vector<int> out;
    for (int i = 0; i < face_count(); ++i) {
      const auto& f = faces_[i];
      if (f[0] == q || f[1] == q || f[2] == q) out.push_back(i);
    }
    return out;
  }

  // Face index for an unordered triple, or -1.
  int face_index(int a, int b, int c) const {
    std::array<int, 3> key{a, b, c};
    std::sort(key.begin(), key.end());
    for (int i = 0; i < face_count(); ++i) {
      std::array<int, 3> f = faces_[i];
      std::sort(f.begin(), f.end());
      if (f == key) return i;
    }
    return -1;
  }

  // The two faces containing an edge, in the order (left, right) where `left`
  // contains the directed edge (a,b).
  std::pair<int, int> edge_faces(int a, int b) const {
    int left = -1, right = -1;
    for (int i = 0; i < face_count(); ++i) {
      const auto& f = faces_[i];
      for (int k = 0; k < 3; ++k) {
        if (f[k] == a && f[(k + 1) % 3] == b) left = i;
        if (f[k] == b && f[(k + 1) % 3] == a) right = i;
      }
    }
    return {left, right};
  }

  // All vertex relabelings that map the face set onto itself. Brute force
  // over n! permutations; n <= 8 throughout this project.
  std::vector<std::vector<int>> automorphisms() const {
    std::set<std::array<int, 3>> fset;
    for (auto f : faces_) {
      std::sort(f.begin(), f.end());
      fset.insert(f);
    }
    std::vector<int> perm(vertex_count_);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> out;
    do {
      bool ok = true;
      for (const auto& f : fset) {
        std::array<int, 3> g{perm[f[0]], perm[f[1]], perm[f[2]]};
        std::sort(g.begin(), g.end());
        if (!fset.count(g)) {
          ok = false;
          break;
        }
      }
      if (ok) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
  }

 private:
  void validate() {
    if (vertex_count_ <= 0) throw Error("triangulation: no vertices");
    std::map<std::pair<int, int>, int> directed;
    for (const auto& f : faces_) {
      for (int v : f) {
        if (v < 0 || v >= vertex_count_)
          throw Error("triangulation: vertex index out of range");
      }
      if (f[0] == f[1] || f[1] == f[2] || f[0] == f[2])
        throw Error("triangulation: degenerate face");
      for (int i = 0; i < 3; ++i)
        ++directed[{f[i], f[(i + 1) % 3]}];
    }
    // closed + orientable: each directed edge exactly once, with its reverse
    for (const auto& [e, n] : directed) {
      if (n != 1)
        throw Error("triangulation: directed edge repeated (not oriented)");
      if (!directed.count({e.second, e.first}))
        throw Error("triangulation: boundary edge (not closed)");
    }
    std::set<EdgeKey> eset;
    for (const auto& [e, n] : directed) eset.insert(edge_key(e.first, e.second));
    edges_.assign(eset.begin(), eset.end());
    long euler = vertex_count_ - static_cast<long>(eset.size()) +
                 static_cast<long>(faces_.size());
    if (euler != 0)
      throw Error("triangulation: Euler characteristic " +
                  std::to_string(euler) + ", want 0 (torus)");
    for (int q = 0; q < vertex_count_; ++q) {
      std::map<int, int> next;
      std::size_t incident = 0;
      for (const auto& f : faces_) {
        for (int i = 0; i < 3; ++i) {
          if (f[i] == q) {
            next[f[(i + 1) % 3]] = f[(i + 2) % 3];
            ++incident;
          }
        }
      }
      if (next.size() != incident)
        throw Error("triangulation: pinched link at vertex " +
                    std::to_string(q));
      // walk the cycle
      std::size_t steps = 0;
      int start = next.begin()->first, v = start;
      do {
        v = next.at(v);
        ++steps;
      } while (v != start && steps <= next.size());
      if (steps != next.size())
        throw Error("triangulation: link of vertex " + std::to_string(q) +
                    " is not a single cycle");
    }
  }

  int vertex_count_;
  std::vector<FaceTriple> faces_;
  std::vector<EdgeKey> edges_;
};

// The unique 7-vertex torus triangulation (1-skeleton K7), in the cyclic
// presentation with faces {i,i+1,i+3} and {i,i+2,i+3} mod 7, oriented.
inline const Triangulation& moebius_triangulation() {
  static const Triangulation t(7, [] {
    std::vector<FaceTriple> f;
    for (int i = 0; i < 7; ++i)
      f.push_back({i, (i + 1) % 7, (i + 3) % 7});
    for (int i = 0; i < 7; ++i)
      f.push_back({i, (i + 3) % 7, (i + 2) % 7});
    return f;
  }());
  return t;
}

// The degree-6 vertex-transitive 8-vertex torus triangulation, labeled to
// match the pup tent coordinates: invariant under (04)(13)(26)(57), and the
// non-edges are the perfect matching {07, 16, 23, 45}. The face list was
// read off the planar development of the pup tent and is cross-checked by
// the geometry tests (near-2pi cone angles, symmetry).
inline const Triangulation& best8_triangulation() {
  static const Triangulation t(8, {{0, 1, 2},
                                   {0, 3, 1},
                                   {0, 2, 4},
                                   {0, 5, 3},
                                   {0, 4, 6},
                                   {0, 6, 5},
                                   {1, 5, 2},
                                   {1, 3, 4},
                                   {1, 4, 7},
                                   {1, 7, 5},
                                   {2, 7, 4},
                                   {2, 5, 6},
                                   {2, 6, 7},
                                   {3, 6, 4},
                                   {3, 5, 7},
                                   {3, 7, 6}});
  return t;
}

// The 2-fold symmetry (x,y,z) -> (-x,-y,z) of the pup tent as a vertex
// permutation.
inline const std::array<int, 8>& puptent_symmetry() {
  static const std::array<int, 8> sigma{4, 3, 6, 1, 0, 7, 2, 5};
  return sigma;
}

}  // namespace papertorus
