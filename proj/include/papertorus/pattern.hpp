#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "papertorus/errors.hpp"
#include "papertorus/triangulation.hpp"

namespace papertorus {

// ---------------------------------------------------------------------------
// Internal edge patterns on the Moebius triangulation.
//
// The 1-skeleton is K7, so the triangulation has 21 edges; a pattern picks
// the 6 of them that leave the convex hull boundary, normalized so that
// edge (0,1) is internal. Patterns are stored as 21-bit masks over the
// canonical K7 edge indexing below.
// ---------------------------------------------------------------------------

inline const std::vector<EdgeKey>& k7_edges() {
  static const std::vector<EdgeKey> e = [] {
    std::vector<EdgeKey> out;
    for (int a = 0; a < 7; ++a)
      for (int b = a + 1; b < 7; ++b) out.push_back({a, b});
    return out;
  }();
  return e;
}

inline int k7_edge_index(int a, int b) {
  auto key = edge_key(a, b);
  const auto& e = k7_edges();
  return static_cast<int>(std::lower_bound(e.begin(), e.end(), key) -
                          e.begin());
}

struct EdgePattern {
  std::uint32_t mask = 0;  // bit i set <=> k7_edges()[i] is internal

  bool contains(int a, int b) const {
    return mask >> k7_edge_index(a, b) & 1u;
  }
  int size() const { return __builtin_popcount(mask); }

  std::array<EdgeKey, 6> edges() const {
    std::array<EdgeKey, 6> out{};
    int n = 0;
    for (int i = 0; i < 21; ++i)
      if (mask >> i & 1u) out[n++] = k7_edges()[i];
    if (n != 6) throw InternalInconsistency("pattern is not a 6-edge set");
    return out;
  }

  int internal_degree(int v) const {
    int d = 0;
    for (int u = 0; u < 7; ++u)
      if (u != v && contains(u, v)) ++d;
    return d;
  }

  std::string str() const {
    std::ostringstream os;
    for (auto [a, b] : edges()) os << a << b << ' ';
    std::string s = os.str();
    s.pop_back();
    return s;
  }

  friend bool operator==(const EdgePattern&, const EdgePattern&) = default;
  friend auto operator<=>(const EdgePattern& a, const EdgePattern& b) {
    return a.mask <=> b.mask;
  }
};

// All C(20,5) = 15504 patterns containing edge (0,1), in lexicographic order
// of their sorted edge lists. Edge (0,1) is index 0, so lex order on the
// remaining 5 indices is mask order.
inline std::vector<EdgePattern> enumerate_patterns() {
  std::vector<EdgePattern> out;
  out.reserve(15504);
  std::array<int, 5> c{1, 2, 3, 4, 5};
  for (;;) {
    std::uint32_t m = 1u;  // edge (0,1)
    for (int i : c) m |= 1u << i;
    out.push_back({m});
    int k = 4;
    while (k >= 0 && c[k] == 16 + k) --k;
    if (k < 0) break;
    ++c[k];
    for (int j = k + 1; j < 5; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

// The degree filter: a hull vertex has degree >= 3 on the hull boundary, so
// at most 3 of the 6 edges at any vertex can be internal.
inline bool passes_degree_filter(const EdgePattern& p) {
  for (int v = 0; v < 7; ++v)
    if (p.internal_degree(v) > 3) return false;
  return true;
}

inline std::vector<EdgePattern> filter_internal_degree(
    const std::vector<EdgePattern>& patterns) {
  std::vector<EdgePattern> out;
  for (const auto& p : patterns)
    if (passes_degree_filter(p)) out.push_back(p);
  return out;
}

struct TriangleClassification {
  std::vector<int> internal_faces;
  std::vector<int> external_faces;
};

// A face is internal iff it contains an internal edge; it is external iff
// all 3 of its edges are external. The pattern determines the partition.
inline TriangleClassification classify_triangles(const Triangulation& t,
                                                 const EdgePattern& p) {
  TriangleClassification out;
  for (int i = 0; i < t.face_count(); ++i) {
    const auto& f = t.faces()[i];
    bool internal = p.contains(f[0], f[1]) || p.contains(f[1], f[2]) ||
                    p.contains(f[0], f[2]);
    (internal ? out.internal_faces : out.external_faces).push_back(i);
  }
  return out;
}

namespace detail {

// Cyclic sequences up to rotation and reflection, anchored at elems[0].
// (K-1)!/2 candidates for K >= 3.
inline std::vector<std::vector<int>> dihedral_classes(std::vector<int> elems) {
  std::vector<std::vector<int>> out;
  if (elems.size() < 3) {
    out.push_back(elems);
    return out;
  }
  std::vector<int> rest(elems.begin() + 1, elems.end());
  std::sort(rest.begin(), rest.end());
  do {
    // reflection fixing the anchor maps (a, r1..rk) to (a, rk..r1);
    // keep the lexicographically smaller representative.
    std::vector<int> rev(rest.rbegin(), rest.rend());
    if (rev < rest) continue;
    std::vector<int> cyc{elems[0]};
    cyc.insert(cyc.end(), rest.begin(), rest.end());
    out.push_back(cyc);
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

inline bool dihedral_equal(const std::vector<int>& a,
                           const std::vector<int>& b) {
  const std::size_t n = a.size();
  if (b.size() != n) return false;
  for (std::size_t s = 0; s < n; ++s) {
    bool fwd = true, bwd = true;
    for (std::size_t i = 0; i < n && (fwd || bwd); ++i) {
      if (a[i] != b[(s + i) % n]) fwd = false;
      if (a[i] != b[(s + n - i) % n]) bwd = false;
    }
    if (fwd || bwd) return true;
  }
  return false;
}

}  // namespace detail

// The Cycle Rule at vertex q: the link of q on the hull must be a cycle
// through q's external neighbors that (1) uses only external edges and
// (2) is a dihedral permutation of the external subsequence of q's link in
// the torus. Exhaustive over the (K-1)!/2 dihedral classes; K <= 6.
inline bool vertex_cycle_rule(const Triangulation& t, const EdgePattern& p,
                              int q) {
  std::vector<int> ext;
  for (int v : t.vertex_link(q))
    if (!p.contains(q, v)) ext.push_back(v);
  const std::size_t k = ext.size();
  if (k < 3) return false;  // hull links are polygons
  for (const auto& cand : detail::dihedral_classes(ext)) {
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) {
      int a = cand[i], b = cand[(i + 1) % k];
      if (p.contains(a, b)) ok = false;  // all K7 pairs are edges of t
    }
    if (ok && detail::dihedral_equal(cand, ext)) return true;
  }
  return false;
}

// A vertex all of whose 6 incident faces are external, if one exists.
inline std::optional<int> conclusion_check(const Triangulation& t,
                                           const EdgePattern& p) {
  for (int q = 0; q < t.vertex_count(); ++q) {
    bool all_external = true;
    for (int fi : t.faces_incident(q)) {
      const auto& f = t.faces()[fi];
      if (p.contains(f[0], f[1]) || p.contains(f[1], f[2]) ||
          p.contains(f[0], f[2])) {
        all_external = false;
        break;
      }
    }
    if (all_external) return q;
  }
  return std::nullopt;
}

enum class PatternStage { kDegreeFail, kCycleFail, kSurvivor };

struct HullLemmaReport {
  long total_patterns = 0;
  long after_degree_filter = 0;
  std::vector<EdgePattern> survivors;
  std::vector<int> survivor_witness;       // per survivor
  std::vector<PatternStage> stages;        // per pattern, enumeration order
};

// Full pipeline: enumerate -> degree filter -> Cycle Rule at all 7 vertices
// -> witness check on the survivors.
inline HullLemmaReport prove_hull_lemma() {
  const auto& t = moebius_triangulation();
  const auto patterns = enumerate_patterns();
  HullLemmaReport rep;
  rep.total_patterns = static_cast<long>(patterns.size());
  rep.stages.resize(patterns.size());
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    const auto& p = patterns[i];
    if (!passes_degree_filter(p)) {
      rep.stages[i] = PatternStage::kDegreeFail;
      continue;
    }
    ++rep.after_degree_filter;
    bool alive = true;
    for (int q = 0; q < 7 && alive; ++q) alive = vertex_cycle_rule(t, p, q);
    rep.stages[i] = alive ? PatternStage::kSurvivor : PatternStage::kCycleFail;
    if (alive) rep.survivors.push_back(p);
  }
  for (const auto& p : rep.survivors) {
    auto w = conclusion_check(t, p);
    if (!w)
      throw InternalInconsistency("survivor " + p.str() +
                                  " has no witness vertex");
    rep.survivor_witness.push_back(*w);
  }
  return rep;
}

// The proof log: one line per pattern, then a summary block. Canonical
// enumeration order, so the output is byte-identical across runs.
inline std::string proof_log(const HullLemmaReport& rep) {
  const auto patterns = enumerate_patterns();
  std::ostringstream os;
  std::size_t si = 0;
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    os << i << ' ' << patterns[i].str() << ' ';
    switch (rep.stages[i]) {
      case PatternStage::kDegreeFail:
        os << "degree-fail";
        break;
      case PatternStage::kCycleFail:
        os << "cycle-fail";
        break;
      case PatternStage::kSurvivor:
        os << "survivor " << rep.survivor_witness[si++];
        break;
    }
    os << '\n';
  }
  os << "total " << rep.total_patterns << '\n'
     << "after-degree-filter " << rep.after_degree_filter << '\n'
     << "survivors " << rep.survivors.size() << '\n';
  for (std::size_t s = 0; s < rep.survivors.size(); ++s)
    os << "survivor " << rep.survivors[s].str() << " witness "
       << rep.survivor_witness[s] << '\n';
  return os.str();
}

}  // namespace papertorus
