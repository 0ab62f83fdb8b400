#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tbsym/graph.hpp"

namespace tbsym {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out))
    throw std::overflow_error("64-bit count overflow");
  return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out))
    throw std::overflow_error("64-bit count overflow");
  return out;
}

/// A simple cycle in canonical form: v0 is the smallest vertex on the cycle
/// and v1 < v_{r-1}, which fixes rotation and reflection.
struct Cycle {
  std::vector<int> vertices;

  int length() const { return static_cast<int>(vertices.size()); }
  bool operator==(const Cycle& other) const { return vertices == other.vertices; }
  bool operator<(const Cycle& other) const { return vertices < other.vertices; }
};

/// Calls fn(span<const int>) once per simple cycle, in lexicographic order of
/// the canonical vertex sequences. Rooted backtracking: each cycle is found
/// from its smallest vertex, walking only larger vertices, and emitted only
/// when the second vertex is smaller than the last.
template <typename Fn>
void for_each_cycle(const Graph& g, Fn&& fn, int max_length = 0) {
  const int n = g.vertex_count();
  if (max_length <= 0 || max_length > n) max_length = n;
  if (max_length < 3) return;
  std::vector<int> path;
  path.reserve(static_cast<std::size_t>(n));
  std::uint64_t on_path = 0;

  auto dfs = [&](auto&& self, int root, int v) -> void {
    const std::uint64_t above_root = ~((std::uint64_t{2} << root) - 1);
    std::uint64_t cand = g.neighbor_mask(v) & ~on_path & above_root;
    while (cand) {
      const int w = std::countr_zero(cand);
      cand &= cand - 1;
      path.push_back(w);
      on_path |= std::uint64_t{1} << w;
      if (path.size() >= 3 && g.adjacent(w, root) && path[1] < w)
        fn(std::span<const int>(path));
      if (static_cast<int>(path.size()) < max_length) self(self, root, w);
      on_path &= ~(std::uint64_t{1} << w);
      path.pop_back();
    }
  };

  for (int root = 0; root + 2 < n; ++root) {
    path.assign(1, root);
    on_path = std::uint64_t{1} << root;
    dfs(dfs, root, root);
  }
}

inline std::vector<Cycle> enumerate_cycles(const Graph& g, int max_length = 0) {
  std::vector<Cycle> out;
  for_each_cycle(
      g, [&](std::span<const int> verts) { out.push_back(Cycle{{verts.begin(), verts.end()}}); },
      max_length);
  return out;
}

/// Map r -> c_r over lengths actually present.
inline std::map<int, std::int64_t> cycle_spectrum(const Graph& g) {
  std::map<int, std::int64_t> spectrum;
  for_each_cycle(g, [&](std::span<const int> verts) {
    auto& slot = spectrum[static_cast<int>(verts.size())];
    slot = checked_add(slot, 1);
  });
  return spectrum;
}

// ---------------------------------------------------------------------------
// Indexing of edges, corners (adjacent edge pairs) and non-adjacent edge
// pairs, shared by incidence counting and by front data.
// ---------------------------------------------------------------------------

class EdgePairIndex {
 public:
  EdgePairIndex() = default;

  explicit EdgePairIndex(const Graph& g) : n_(g.vertex_count()), edges_(g.edges()) {
    m_ = static_cast<int>(edges_.size());
    edge_at_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), -1);
    for (int e = 0; e < m_; ++e) {
      const auto& [a, b] = edges_[static_cast<std::size_t>(e)];
      edge_at_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + b] = e;
      edge_at_[static_cast<std::size_t>(b) * static_cast<std::size_t>(n_) + a] = e;
    }
    corner_at_.assign(static_cast<std::size_t>(m_) * static_cast<std::size_t>(m_), -1);
    cross_at_.assign(static_cast<std::size_t>(m_) * static_cast<std::size_t>(m_), -1);
    for (int e = 0; e < m_; ++e) {
      const auto& [a, b] = edges_[static_cast<std::size_t>(e)];
      for (int f = e + 1; f < m_; ++f) {
        const auto& [c, d] = edges_[static_cast<std::size_t>(f)];
        const bool shares = a == c || a == d || b == c || b == d;
        auto& table = shares ? corner_at_ : cross_at_;
        auto& list = shares ? corners_ : cross_pairs_;
        const int id = static_cast<int>(list.size());
        list.push_back({e, f});
        table[static_cast<std::size_t>(e) * static_cast<std::size_t>(m_) + f] = id;
        table[static_cast<std::size_t>(f) * static_cast<std::size_t>(m_) + e] = id;
      }
    }
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Pairs of edge indices (e < f), in canonical (lexicographic) order.
  const std::vector<std::pair<int, int>>& corners() const { return corners_; }
  const std::vector<std::pair<int, int>>& cross_pairs() const { return cross_pairs_; }

  int edge_index(int u, int v) const {
    return edge_at_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + v];
  }
  int corner_index(int e, int f) const {
    return corner_at_[static_cast<std::size_t>(e) * static_cast<std::size_t>(m_) + f];
  }
  int cross_index(int e, int f) const {
    return cross_at_[static_cast<std::size_t>(e) * static_cast<std::size_t>(m_) + f];
  }

  Edge corner_edges(int id, bool second) const {
    const auto& [e, f] = corners_[static_cast<std::size_t>(id)];
    return edges_[static_cast<std::size_t>(second ? f : e)];
  }
  Edge cross_edges(int id, bool second) const {
    const auto& [e, f] = cross_pairs_[static_cast<std::size_t>(id)];
    return edges_[static_cast<std::size_t>(second ? f : e)];
  }

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::pair<int, int>> corners_;
  std::vector<std::pair<int, int>> cross_pairs_;
  std::vector<int> edge_at_;
  std::vector<int> corner_at_;
  std::vector<int> cross_at_;
};

/// Orientation class of a cycle against a non-adjacent edge pair: +1 when the
/// cycle traverses both edges min-to-max or both max-to-min, -1 otherwise.
/// Reversing the cycle flips both traversals, so the value is well defined.
inline int sigma(const Graph& g, const Cycle& c, Edge e1, Edge e2) {
  e1 = make_edge(e1.first, e1.second);
  e2 = make_edge(e2.first, e2.second);
  if (!g.adjacent(e1.first, e1.second) || !g.adjacent(e2.first, e2.second))
    throw std::invalid_argument("sigma: pair member is not an edge");
  if (e1.first == e2.first || e1.first == e2.second || e1.second == e2.first ||
      e1.second == e2.second)
    throw std::invalid_argument("sigma: edges are adjacent");
  const int r = c.length();
  int direction1 = 0, direction2 = 0;
  for (int i = 0; i < r; ++i) {
    const int a = c.vertices[static_cast<std::size_t>(i)];
    const int b = c.vertices[static_cast<std::size_t>((i + 1) % r)];
    if (a == e1.first && b == e1.second) direction1 = 1;
    if (a == e1.second && b == e1.first) direction1 = -1;
    if (a == e2.first && b == e2.second) direction2 = 1;
    if (a == e2.second && b == e2.first) direction2 = -1;
  }
  if (direction1 == 0 || direction2 == 0)
    throw std::invalid_argument("sigma: pair does not lie on the cycle");
  return direction1 * direction2;
}

// ---------------------------------------------------------------------------
// Incidence profile: everything Definition-style symmetry checks quantify
// over, per cycle length. Oriented pair tables are the expensive part and can
// be deferred; the stored cycle list makes the second pass possible.
// ---------------------------------------------------------------------------

class IncidenceProfile {
 public:
  struct Oriented {
    std::int64_t plus = 0;
    std::int64_t minus = 0;
  };

  static IncidenceProfile build(const Graph& g, bool with_oriented = true) {
    IncidenceProfile p;
    p.graph_ = g;
    p.index_ = EdgePairIndex(g);
    const int n = g.vertex_count();
    const int m = p.index_.edge_count();
    p.cycle_counts_.assign(static_cast<std::size_t>(n) + 1, 0);
    p.edge_counts_.assign((static_cast<std::size_t>(n) + 1) * static_cast<std::size_t>(m), 0);
    p.corner_counts_.assign(
        (static_cast<std::size_t>(n) + 1) * p.index_.corners().size(), 0);
    for_each_cycle(g, [&](std::span<const int> verts) {
      const int r = static_cast<int>(verts.size());
      p.cycle_counts_[static_cast<std::size_t>(r)] =
          checked_add(p.cycle_counts_[static_cast<std::size_t>(r)], 1);
      p.cycle_data_.insert(p.cycle_data_.end(), verts.begin(), verts.end());
      p.cycle_starts_.push_back(static_cast<std::uint32_t>(p.cycle_data_.size()));
      p.tally_basic(verts);
    });
    for (int r = 3; r <= n; ++r)
      if (p.cycle_counts_[static_cast<std::size_t>(r)] > 0) p.lengths_.push_back(r);
    if (with_oriented) p.ensure_oriented();
    return p;
  }

  const Graph& graph() const { return graph_; }
  const EdgePairIndex& index() const { return index_; }

  /// Cycle lengths with c_r > 0, ascending.
  const std::vector<int>& lengths() const { return lengths_; }

  std::int64_t cycle_count(int r) const {
    if (r < 0 || r >= static_cast<int>(cycle_counts_.size())) return 0;
    return cycle_counts_[static_cast<std::size_t>(r)];
  }

  std::int64_t total_cycles() const { return static_cast<std::int64_t>(cycle_starts_.size()); }

  std::int64_t edge_count_for(int edge_id, int r) const {
    return edge_counts_[slot(r) * static_cast<std::size_t>(index_.edge_count()) +
                        static_cast<std::size_t>(edge_id)];
  }
  std::int64_t corner_count_for(int corner_id, int r) const {
    return corner_counts_[slot(r) * index_.corners().size() +
                          static_cast<std::size_t>(corner_id)];
  }
  Oriented oriented_count_for(int cross_id, int r) const {
    return oriented_counts_[slot(r) * index_.cross_pairs().size() +
                            static_cast<std::size_t>(cross_id)];
  }

  /// Spec-facing lookups keyed by edges. Unknown keys are errors.
  std::int64_t edge_cycle_count(Edge e, int r) const {
    return edge_count_for(require_edge(e), r);
  }
  std::int64_t corner_cycle_count(Edge e, Edge f, int r) const {
    const int id = index_.corner_index(require_edge(e), require_edge(f));
    if (id < 0) throw std::invalid_argument("corner key: edges are not adjacent");
    return corner_count_for(id, r);
  }
  Oriented oriented_pair_count(Edge e, Edge f, int r) const {
    ensure_oriented();
    const int id = index_.cross_index(require_edge(e), require_edge(f));
    if (id < 0) throw std::invalid_argument("pair key: edges are adjacent");
    return oriented_count_for(id, r);
  }

  bool has_oriented() const { return oriented_filled_; }

  /// Fills the oriented (sigma-classified) pair tables from the stored cycle
  /// list. Lazy because condition (3) is only needed for pairs that already
  /// pass the almost-level checks. Not safe to race from two threads.
  void ensure_oriented() const {
    if (oriented_filled_) return;
    oriented_counts_.assign(
        (static_cast<std::size_t>(graph_.vertex_count()) + 1) * index_.cross_pairs().size(),
        Oriented{});
    std::vector<int> edge_ids;
    std::vector<int> directions;
    std::uint32_t begin = 0;
    for (std::uint32_t end : cycle_starts_) {
      const int r = static_cast<int>(end - begin);
      edge_ids.assign(static_cast<std::size_t>(r), 0);
      directions.assign(static_cast<std::size_t>(r), 0);
      for (int i = 0; i < r; ++i) {
        const int a = cycle_data_[begin + static_cast<std::uint32_t>(i)];
        const int b = cycle_data_[begin + static_cast<std::uint32_t>((i + 1) % r)];
        edge_ids[static_cast<std::size_t>(i)] = index_.edge_index(a, b);
        directions[static_cast<std::size_t>(i)] = a < b ? 1 : -1;
      }
      const std::size_t base = static_cast<std::size_t>(r) * index_.cross_pairs().size();
      for (int i = 0; i < r; ++i) {
        for (int j = i + 2; j < r; ++j) {
          if (i == 0 && j == r - 1) continue;  // consecutive around the wrap
          const int id = index_.cross_index(edge_ids[static_cast<std::size_t>(i)],
                                            edge_ids[static_cast<std::size_t>(j)]);
          auto& cell = oriented_counts_[base + static_cast<std::size_t>(id)];
          if (directions[static_cast<std::size_t>(i)] ==
              directions[static_cast<std::size_t>(j)])
            cell.plus = checked_add(cell.plus, 1);
          else
            cell.minus = checked_add(cell.minus, 1);
        }
      }
      begin = end;
    }
    oriented_filled_ = true;
  }

  /// Stored canonical cycles, in enumeration (lexicographic) order.
  std::vector<Cycle> stored_cycles() const {
    std::vector<Cycle> out;
    out.reserve(cycle_starts_.size());
    std::uint32_t begin = 0;
    for (std::uint32_t end : cycle_starts_) {
      out.push_back(Cycle{{cycle_data_.begin() + begin, cycle_data_.begin() + end}});
      begin = end;
    }
    return out;
  }

 private:
  std::size_t slot(int r) const {
    if (r < 0 || r > graph_.vertex_count())
      throw std::invalid_argument("cycle length out of range");
    return static_cast<std::size_t>(r);
  }

  int require_edge(Edge e) const {
    e = make_edge(e.first, e.second);
    if (e.first < 0 || e.second >= graph_.vertex_count())
      throw std::invalid_argument("edge key out of range");
    const int id = index_.edge_index(e.first, e.second);
    if (id < 0) throw std::invalid_argument("edge key: not an edge of the graph");
    return id;
  }

  void tally_basic(std::span<const int> verts) {
    const int r = static_cast<int>(verts.size());
    const int m = index_.edge_count();
    const std::size_t edge_base = static_cast<std::size_t>(r) * static_cast<std::size_t>(m);
    const std::size_t corner_base = static_cast<std::size_t>(r) * index_.corners().size();
    int prev_edge = -1;
    int first_edge = -1;
    for (int i = 0; i < r; ++i) {
      const int a = verts[static_cast<std::size_t>(i)];
      const int b = verts[static_cast<std::size_t>((i + 1) % r)];
      const int e = index_.edge_index(a, b);
      auto& cell = edge_counts_[edge_base + static_cast<std::size_t>(e)];
      cell = checked_add(cell, 1);
      if (i == 0)
        first_edge = e;
      else {
        const int corner = index_.corner_index(prev_edge, e);
        auto& ccell = corner_counts_[corner_base + static_cast<std::size_t>(corner)];
        ccell = checked_add(ccell, 1);
      }
      prev_edge = e;
    }
    const int corner = index_.corner_index(prev_edge, first_edge);
    auto& ccell = corner_counts_[corner_base + static_cast<std::size_t>(corner)];
    ccell = checked_add(ccell, 1);
  }

  Graph graph_;
  EdgePairIndex index_;
  std::vector<int> lengths_;
  std::vector<std::int64_t> cycle_counts_;
  std::vector<std::int64_t> edge_counts_;
  std::vector<std::int64_t> corner_counts_;
  mutable std::vector<Oriented> oriented_counts_;
  mutable bool oriented_filled_ = false;
  std::vector<int> cycle_data_;
  std::vector<std::uint32_t> cycle_starts_;
};

inline IncidenceProfile incidence_profile(const Graph& g) {
  return IncidenceProfile::build(g, /*with_oriented=*/true);
}

}  // namespace tbsym
