#pragma once

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tbsym {

/// Size cap shared with the graph6 codec (single-byte size form).
inline constexpr int kMaxVertices = 62;

/// Undirected edge, always stored as (min, max).
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) {
  return u < v ? Edge{u, v} : Edge{v, u};
}

/// Finite simple undirected graph with vertex labels 0..n-1. Immutable after
/// construction; all operations below return fresh values.
class Graph {
 public:
  Graph() = default;

  Graph(int n, const std::vector<Edge>& edge_list) : n_(n) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    if (n > kMaxVertices)
      throw std::invalid_argument("graph: more than 62 vertices is unsupported");
    adj_.assign(static_cast<std::size_t>(n), 0);
    edges_.reserve(edge_list.size());
    for (const auto& [a, b] : edge_list) {
      if (a < 0 || a >= n || b < 0 || b >= n)
        throw std::invalid_argument("graph: edge endpoint out of range");
      if (a == b) throw std::invalid_argument("graph: self-loop rejected");
      edges_.push_back(make_edge(a, b));
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    for (const auto& [a, b] : edges_) {
      adj_[static_cast<std::size_t>(a)] |= std::uint64_t{1} << b;
      adj_[static_cast<std::size_t>(b)] |= std::uint64_t{1} << a;
    }
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  /// Sorted list of (min, max) pairs; this order is the canonical edge order
  /// used for witnesses and serialization.
  const std::vector<Edge>& edges() const { return edges_; }

  bool adjacent(int u, int v) const {
    return (adj_[static_cast<std::size_t>(u)] >> v) & 1;
  }

  std::uint64_t neighbor_mask(int v) const {
    return adj_[static_cast<std::size_t>(v)];
  }

  int degree(int v) const {
    return std::popcount(adj_[static_cast<std::size_t>(v)]);
  }

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> adj_;
};

inline Graph build_graph(int n, const std::vector<Edge>& edges) {
  return Graph(n, edges);
}

// ---------------------------------------------------------------------------
// Named constructions. Labelings are fixed so regression fixtures stay stable.
// ---------------------------------------------------------------------------

inline Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
  std::vector<Edge> e;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) e.push_back({a, b});
  return Graph(n, e);
}

/// K_{m,n} labeled so that 0 and 1 lie on opposite sides and form an edge:
/// side A = {0} u {2..m}, side B = {1} u {m+1..m+n-1}.
inline Graph complete_bipartite_graph(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("bipartite parts must be positive");
  std::vector<int> side_a = {0}, side_b = {1};
  for (int v = 2; v <= m; ++v) side_a.push_back(v);
  for (int v = m + 1; v < m + n; ++v) side_b.push_back(v);
  std::vector<Edge> e;
  for (int a : side_a)
    for (int b : side_b) e.push_back(make_edge(a, b));
  return Graph(m + n, e);
}

/// Parts take consecutive label blocks in the order given.
inline Graph complete_multipartite_graph(const std::vector<int>& parts) {
  if (parts.empty()) throw std::invalid_argument("multipartite: no parts");
  int n = 0;
  std::vector<int> part_of;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) throw std::invalid_argument("multipartite parts must be positive");
    for (int j = 0; j < parts[i]; ++j) part_of.push_back(static_cast<int>(i));
    n += parts[i];
  }
  std::vector<Edge> e;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (part_of[static_cast<std::size_t>(a)] != part_of[static_cast<std::size_t>(b)])
        e.push_back({a, b});
  return Graph(n, e);
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle graph needs n >= 3");
  std::vector<Edge> e;
  for (int v = 0; v < n; ++v) e.push_back(make_edge(v, (v + 1) % n));
  return Graph(n, e);
}

/// Outer pentagon 0..4, inner pentagram 5..9, spokes i -- i+5.
inline Graph petersen_graph() {
  std::vector<Edge> e = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4},
                         {5, 7}, {7, 9}, {6, 9}, {6, 8}, {5, 8},
                         {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}};
  return Graph(10, e);
}

/// 14-cycle 0..13 plus the chords {i, i+5 mod 14} for even i.
inline Graph heawood_graph() {
  std::vector<Edge> e;
  for (int v = 0; v < 14; ++v) e.push_back(make_edge(v, (v + 1) % 14));
  for (int v = 0; v < 14; v += 2) e.push_back(make_edge(v, (v + 5) % 14));
  return Graph(14, e);
}

/// Vertices are the d-bit strings; edges join strings at Hamming distance 1.
inline Graph hypercube_graph(int d) {
  if (d < 0) throw std::invalid_argument("hypercube dimension must be >= 0");
  if (d > 5) throw std::invalid_argument("hypercube 2^d exceeds the 62-vertex cap");
  int n = 1 << d;
  std::vector<Edge> e;
  for (int v = 0; v < n; ++v)
    for (int b = 0; b < d; ++b)
      if (!(v & (1 << b))) e.push_back({v, v | (1 << b)});
  return Graph(n, e);
}

/// Odd graph O_n: vertices are the (n-1)-subsets of {1..2n-1}, listed in
/// ascending bitmask order; edges join disjoint subsets. O_2 = K_3 and O_3 is
/// the Petersen graph (up to isomorphism).
inline Graph odd_graph(int n) {
  if (n < 2) throw std::invalid_argument("odd graph needs n >= 2");
  const int ground = 2 * n - 1;
  std::vector<std::uint32_t> subsets;
  for (std::uint32_t mask = 0; mask < (1u << ground); ++mask)
    if (std::popcount(mask) == n - 1) subsets.push_back(mask);
  const int count = static_cast<int>(subsets.size());
  if (count > kMaxVertices)
    throw std::invalid_argument("odd graph exceeds the 62-vertex cap");
  std::vector<Edge> e;
  for (int a = 0; a < count; ++a)
    for (int b = a + 1; b < count; ++b)
      if ((subsets[static_cast<std::size_t>(a)] & subsets[static_cast<std::size_t>(b)]) == 0)
        e.push_back({a, b});
  return Graph(count, e);
}

struct NamedGraphSpec {
  enum class Family {
    complete,
    complete_bipartite,
    complete_multipartite,
    cycle,
    petersen,
    heawood,
    hypercube,
    odd,
  };
  Family family;
  std::vector<int> params;

  /// Parses compact CLI names: "K5", "K3,3", "K2,2,2", "C7", "Q3", "O3",
  /// "petersen", "heawood".
  static NamedGraphSpec parse(const std::string& text);
};

inline Graph named_graph(const NamedGraphSpec& spec) {
  using F = NamedGraphSpec::Family;
  const auto& p = spec.params;
  auto need = [&](std::size_t k) {
    if (p.size() != k) throw std::invalid_argument("named graph: wrong parameter count");
  };
  switch (spec.family) {
    case F::complete: need(1); return complete_graph(p[0]);
    case F::complete_bipartite: need(2); return complete_bipartite_graph(p[0], p[1]);
    case F::complete_multipartite: return complete_multipartite_graph(p);
    case F::cycle: need(1); return cycle_graph(p[0]);
    case F::petersen: need(0); return petersen_graph();
    case F::heawood: need(0); return heawood_graph();
    case F::hypercube: need(1); return hypercube_graph(p[0]);
    case F::odd: need(1); return odd_graph(p[0]);
  }
  throw std::invalid_argument("named graph: unknown family");
}

inline NamedGraphSpec NamedGraphSpec::parse(const std::string& text) {
  if (text == "petersen") return {Family::petersen, {}};
  if (text == "heawood") return {Family::heawood, {}};
  if (text.size() >= 2) {
    char head = text[0];
    if (head == 'K' || head == 'Q' || head == 'O' || head == 'C') {
      std::vector<int> params;
      std::size_t i = 1;
      while (i < text.size()) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) break;
        long value = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
          value = value * 10 + (text[i] - '0');
          if (value > 1000) throw std::invalid_argument("graph spec: parameter too large");
          ++i;
        }
        params.push_back(static_cast<int>(value));
        if (i < text.size() && text[i] == ',') {
          ++i;
          if (i == text.size()) throw std::invalid_argument("graph spec: trailing comma");
          continue;
        }
        break;
      }
      if (i == text.size() && !params.empty()) {
        if (head == 'K') {
          if (params.size() == 1) return {Family::complete, params};
          if (params.size() == 2) return {Family::complete_bipartite, params};
          return {Family::complete_multipartite, params};
        }
        if (params.size() == 1) {
          if (head == 'Q') return {Family::hypercube, params};
          if (head == 'O') return {Family::odd, params};
          if (head == 'C') return {Family::cycle, params};
        }
      }
    }
  }
  throw std::invalid_argument("unrecognized graph spec '" + text + "'");
}

inline Graph named_graph(const std::string& spec_text) {
  return named_graph(NamedGraphSpec::parse(spec_text));
}

// ---------------------------------------------------------------------------
// Stats and the cycle-preserving operations.
// ---------------------------------------------------------------------------

struct GraphStats {
  bool connected = true;
  int min_degree = 0;
  int max_degree = 0;
  bool has_pendant = false;
};

/// The empty graph counts as connected by convention.
inline GraphStats graph_stats(const Graph& g) {
  GraphStats st;
  const int n = g.vertex_count();
  if (n == 0) return st;
  st.min_degree = st.max_degree = g.degree(0);
  for (int v = 0; v < n; ++v) {
    const int d = g.degree(v);
    st.min_degree = std::min(st.min_degree, d);
    st.max_degree = std::max(st.max_degree, d);
    st.has_pendant |= d == 1;
  }
  std::uint64_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint64_t next = 0;
    while (frontier) {
      int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      next |= g.neighbor_mask(v);
    }
    frontier = next & ~seen;
    seen |= next;
  }
  st.connected = std::popcount(seen) == n;
  return st;
}

inline bool is_connected(const Graph& g) { return graph_stats(g).connected; }

/// Attaches a fresh vertex (label n) to v by a single edge. No cycle is
/// created or destroyed.
inline Graph add_pendant(const Graph& g, int v) {
  const int n = g.vertex_count();
  if (v < 0 || v >= n) throw std::invalid_argument("add_pendant: vertex out of range");
  std::vector<Edge> e = g.edges();
  e.push_back({v, n});
  return Graph(n + 1, e);
}

/// Vertices of g2 are relabeled by +g1.n. Every cycle of the result lives in
/// exactly one summand.
inline Graph disjoint_union(const Graph& g1, const Graph& g2) {
  std::vector<Edge> e = g1.edges();
  const int off = g1.vertex_count();
  for (const auto& [a, b] : g2.edges()) e.push_back({a + off, b + off});
  return Graph(off + g2.vertex_count(), e);
}

/// One-vertex identification: v2 of g2 is merged into v1 of g1; the remaining
/// g2 vertices take labels g1.n.. in their original order.
inline Graph clique_sum_vertex(const Graph& g1, int v1, const Graph& g2, int v2) {
  if (v1 < 0 || v1 >= g1.vertex_count())
    throw std::invalid_argument("clique_sum_vertex: v1 out of range");
  if (v2 < 0 || v2 >= g2.vertex_count())
    throw std::invalid_argument("clique_sum_vertex: v2 out of range");
  std::vector<int> relabel(static_cast<std::size_t>(g2.vertex_count()));
  int next = g1.vertex_count();
  for (int v = 0; v < g2.vertex_count(); ++v)
    relabel[static_cast<std::size_t>(v)] = (v == v2) ? v1 : next++;
  std::vector<Edge> e = g1.edges();
  for (const auto& [a, b] : g2.edges())
    e.push_back(make_edge(relabel[static_cast<std::size_t>(a)],
                          relabel[static_cast<std::size_t>(b)]));
  return Graph(g1.vertex_count() + g2.vertex_count() - 1, e);
}

/// Joins v1 to v2 through k fresh intermediate vertices (k = 0 is a direct
/// bridge edge). None of the k+1 new edges lies on a cycle of the result.
inline Graph path_join(const Graph& g1, int v1, const Graph& g2, int v2, int k) {
  if (v1 < 0 || v1 >= g1.vertex_count())
    throw std::invalid_argument("path_join: v1 out of range");
  if (v2 < 0 || v2 >= g2.vertex_count())
    throw std::invalid_argument("path_join: v2 out of range");
  if (k < 0) throw std::invalid_argument("path_join: negative path length");
  const int off = g1.vertex_count();
  std::vector<Edge> e = g1.edges();
  for (const auto& [a, b] : g2.edges()) e.push_back({a + off, b + off});
  int prev = v1;
  for (int i = 0; i < k; ++i) {
    int fresh = off + g2.vertex_count() + i;
    e.push_back(make_edge(prev, fresh));
    prev = fresh;
  }
  e.push_back(make_edge(prev, v2 + off));
  return Graph(off + g2.vertex_count() + k, e);
}

}  // namespace tbsym
