#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tbsym/graph.hpp"

namespace tbsym {

/// Vertex image list: p[v] is where v goes.
using Permutation = std::vector<int>;

inline constexpr int kMaxAutomorphismVertices = 20;

/// Complete automorphism group by backtracking over vertex images, pruning on
/// the (degree, sorted neighbor-degree multiset) vertex invariant. Contains
/// the identity; closed under composition and inverse by construction.
inline std::vector<Permutation> automorphism_group(const Graph& g) {
  const int n = g.vertex_count();
  if (n > kMaxAutomorphismVertices)
    throw std::invalid_argument(
        "automorphism_group: refused, graph exceeds the 20-vertex scope");
  std::vector<Permutation> group;
  if (n == 0) {
    group.push_back({});
    return group;
  }

  // Invariant classes: candidates for v are exactly the vertices with v's
  // invariant.
  std::vector<std::vector<int>> invariant(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    std::vector<int> key;
    key.push_back(g.degree(v));
    std::uint64_t nb = g.neighbor_mask(v);
    std::vector<int> neighbor_degrees;
    while (nb) {
      int w = std::countr_zero(nb);
      nb &= nb - 1;
      neighbor_degrees.push_back(g.degree(w));
    }
    std::sort(neighbor_degrees.begin(), neighbor_degrees.end());
    key.insert(key.end(), neighbor_degrees.begin(), neighbor_degrees.end());
    invariant[static_cast<std::size_t>(v)] = std::move(key);
  }
  std::vector<std::uint64_t> candidates(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w)
      if (invariant[static_cast<std::size_t>(v)] == invariant[static_cast<std::size_t>(w)])
        candidates[static_cast<std::size_t>(v)] |= std::uint64_t{1} << w;

  Permutation image(static_cast<std::size_t>(n), -1);
  std::uint64_t used = 0;
  auto extend = [&](auto&& self, int v) -> void {
    if (v == n) {
      group.push_back(image);
      return;
    }
    std::uint64_t cand = candidates[static_cast<std::size_t>(v)] & ~used;
    while (cand) {
      const int w = std::countr_zero(cand);
      cand &= cand - 1;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u)
        ok = g.adjacent(u, v) == g.adjacent(image[static_cast<std::size_t>(u)], w);
      if (!ok) continue;
      image[static_cast<std::size_t>(v)] = w;
      used |= std::uint64_t{1} << w;
      self(self, v + 1);
      used &= ~(std::uint64_t{1} << w);
      image[static_cast<std::size_t>(v)] = -1;
    }
  };
  extend(extend, 0);
  return group;
}

/// An s-arc: consecutive vertices adjacent, no immediate backtracking.
struct Arc {
  std::vector<int> vertices;

  bool operator==(const Arc& other) const { return vertices == other.vertices; }
  bool operator<(const Arc& other) const { return vertices < other.vertices; }
};

/// All s-arcs as ordered sequences, lexicographically sorted. 0-arcs are the
/// vertices, 1-arcs the ordered edges.
inline std::vector<Arc> enumerate_arcs(const Graph& g, int s) {
  if (s < 0) throw std::invalid_argument("enumerate_arcs: negative s");
  const int n = g.vertex_count();
  std::vector<Arc> out;
  std::vector<int> walk;
  auto extend = [&](auto&& self) -> void {
    if (static_cast<int>(walk.size()) == s + 1) {
      out.push_back(Arc{walk});
      return;
    }
    const int v = walk.back();
    const int prev = walk.size() >= 2 ? walk[walk.size() - 2] : -1;
    std::uint64_t nb = g.neighbor_mask(v);
    while (nb) {
      const int w = std::countr_zero(nb);
      nb &= nb - 1;
      if (w == prev) continue;
      walk.push_back(w);
      self(self);
      walk.pop_back();
    }
  };
  for (int v = 0; v < n; ++v) {
    walk.assign(1, v);
    extend(extend);
  }
  return out;
}

namespace detail {

inline Arc apply_permutation(const Permutation& p, const Arc& arc) {
  Arc out;
  out.vertices.reserve(arc.vertices.size());
  for (int v : arc.vertices) out.vertices.push_back(p[static_cast<std::size_t>(v)]);
  return out;
}

/// Orbit size of arcs[0] under the group, against the sorted arc list.
inline bool orbit_covers_all(const std::vector<Permutation>& group,
                             const std::vector<Arc>& arcs) {
  std::vector<bool> hit(arcs.size(), false);
  std::size_t hits = 0;
  for (const auto& p : group) {
    const Arc moved = apply_permutation(p, arcs.front());
    const auto it = std::lower_bound(arcs.begin(), arcs.end(), moved);
    const auto idx = static_cast<std::size_t>(it - arcs.begin());
    if (!hit[idx]) {
      hit[idx] = true;
      ++hits;
    }
  }
  return hits == arcs.size();
}

}  // namespace detail

/// True iff the automorphism group is transitive on s-arcs. Vacuously true
/// when the graph has no s-arcs (the profile flags that case).
inline bool is_s_arc_transitive(const Graph& g, int s) {
  const std::vector<Arc> arcs = enumerate_arcs(g, s);
  if (arcs.empty()) return true;
  return detail::orbit_covers_all(automorphism_group(g), arcs);
}

struct TransitivityProfile {
  struct Entry {
    int s = 0;
    bool transitive = false;
    bool vacuous = false;  // no s-arcs exist; transitive is the convention
  };
  bool vertex_transitive = false;
  bool edge_transitive = false;
  std::optional<int> max_arc_transitivity;
  std::vector<Entry> per_s;
  std::size_t group_order = 0;
};

/// Tests s-arc transitivity for 0 <= s <= s_cap, each s independently, plus
/// edge transitivity on unordered edges.
inline TransitivityProfile transitivity_profile(const Graph& g, int s_cap) {
  if (s_cap < 0) throw std::invalid_argument("transitivity_profile: negative cap");
  TransitivityProfile profile;
  const std::vector<Permutation> group = automorphism_group(g);
  profile.group_order = group.size();
  for (int s = 0; s <= s_cap; ++s) {
    const std::vector<Arc> arcs = enumerate_arcs(g, s);
    TransitivityProfile::Entry entry;
    entry.s = s;
    entry.vacuous = arcs.empty();
    entry.transitive = arcs.empty() || detail::orbit_covers_all(group, arcs);
    if (entry.transitive) profile.max_arc_transitivity = s;
    profile.per_s.push_back(entry);
  }
  profile.vertex_transitive = !profile.per_s.empty() && profile.per_s.front().transitive;
  if (g.edge_count() == 0) {
    profile.edge_transitive = true;
  } else {
    const auto& edges = g.edges();
    std::vector<bool> hit(edges.size(), false);
    std::size_t hits = 0;
    for (const auto& p : group) {
      const Edge moved = make_edge(p[static_cast<std::size_t>(edges.front().first)],
                                   p[static_cast<std::size_t>(edges.front().second)]);
      const auto it = std::lower_bound(edges.begin(), edges.end(), moved);
      const auto idx = static_cast<std::size_t>(it - edges.begin());
      if (!hit[idx]) {
        hit[idx] = true;
        ++hits;
      }
    }
    profile.edge_transitive = hits == edges.size();
  }
  return profile;
}

}  // namespace tbsym
