#pragma once

#include <atomic>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "tbsym/cycles.hpp"
#include "tbsym/graph.hpp"
#include "tbsym/graph6.hpp"
#include "tbsym/rational.hpp"
#include "tbsym/tb_symmetry.hpp"

namespace tbsym {

// ---------------------------------------------------------------------------
// Canonical labeling. The canonical form maximizes the column-major
// upper-triangle bit string (the same bit order graph6 uses), found by
// branch and bound: within any fixed prefix only candidates with the maximal
// adjacency column can extend to the maximum, and interchangeable twins are
// explored once.
// ---------------------------------------------------------------------------

namespace detail {

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(&g), n_(g.vertex_count()) {
    chosen_.assign(static_cast<std::size_t>(n_), -1);
    current_.assign(static_cast<std::size_t>(n_), 0);
    best_cols_.assign(static_cast<std::size_t>(n_), 0);
    best_perm_.assign(static_cast<std::size_t>(n_), -1);
    ties_.assign(static_cast<std::size_t>(n_), {});
    for (auto& t : ties_) t.reserve(static_cast<std::size_t>(n_));
  }

  /// Returns the permutation placing vertices into canonical positions:
  /// perm[pos] = original vertex.
  std::vector<int> run() {
    if (n_ == 0) return {};
    greedy_seed();
    descend(0, /*strictly_better=*/false);
    return best_perm_;
  }

 private:
  std::uint64_t column_of(int candidate, int level) const {
    std::uint64_t col = 0;
    for (int i = 0; i < level; ++i)
      col = (col << 1) |
            (g_->adjacent(candidate, chosen_[static_cast<std::size_t>(i)]) ? 1u : 0u);
    return col;
  }

  void tied_candidates(int level, std::vector<int>& out, std::uint64_t* maxcol) const {
    out.clear();
    *maxcol = 0;
    bool first = true;
    for (int c = 0; c < n_; ++c) {
      if ((used_ >> c) & 1) continue;
      const std::uint64_t col = column_of(c, level);
      if (first || col > *maxcol) {
        *maxcol = col;
        out.clear();
        first = false;
      }
      if (col == *maxcol) out.push_back(c);
    }
    // Twin pruning: if swapping two tied candidates is an automorphism, the
    // two branches produce identical bit strings.
    std::size_t kept = 0;
    for (std::size_t i = 0; i < out.size(); ++i) {
      bool twin = false;
      for (std::size_t j = 0; j < kept && !twin; ++j) {
        const std::uint64_t mask =
            ~((std::uint64_t{1} << out[i]) | (std::uint64_t{1} << out[j]));
        twin = (g_->neighbor_mask(out[i]) & mask) == (g_->neighbor_mask(out[j]) & mask);
      }
      if (!twin) out[kept++] = out[i];
    }
    out.resize(kept);
  }

  void greedy_seed() {
    used_ = 0;
    for (int level = 0; level < n_; ++level) {
      std::uint64_t maxcol = 0;
      tied_candidates(level, ties_[static_cast<std::size_t>(level)], &maxcol);
      const int pick = ties_[static_cast<std::size_t>(level)].front();
      chosen_[static_cast<std::size_t>(level)] = pick;
      best_cols_[static_cast<std::size_t>(level)] = maxcol;
      used_ |= std::uint64_t{1} << pick;
    }
    best_perm_ = chosen_;
    used_ = 0;
  }

  void descend(int level, bool strictly_better) {
    if (level == n_) {
      if (strictly_better) {
        best_cols_ = current_;
        best_perm_ = chosen_;
        ++generation_;
      }
      return;
    }
    std::vector<int>& ties = ties_[static_cast<std::size_t>(level)];
    std::uint64_t maxcol = 0;
    tied_candidates(level, ties, &maxcol);
    current_[static_cast<std::size_t>(level)] = maxcol;
    for (std::size_t t = 0; t < ties.size(); ++t) {
      const int c = ties[t];
      bool child_better = strictly_better;
      if (!strictly_better) {
        if (maxcol < best_cols_[static_cast<std::size_t>(level)]) return;
        child_better = maxcol > best_cols_[static_cast<std::size_t>(level)];
      }
      chosen_[static_cast<std::size_t>(level)] = c;
      used_ |= std::uint64_t{1} << c;
      const std::uint64_t before = generation_;
      descend(level + 1, child_better);
      used_ &= ~(std::uint64_t{1} << c);
      // When a descendant improved the incumbent, the new best runs through
      // this node, so the current prefix now merely ties it.
      if (generation_ != before) strictly_better = false;
    }
  }

  const Graph* g_;
  int n_;
  std::uint64_t used_ = 0;
  std::uint64_t generation_ = 0;
  std::vector<int> chosen_;
  std::vector<std::uint64_t> current_;
  std::vector<std::uint64_t> best_cols_;
  std::vector<int> best_perm_;
  std::vector<std::vector<int>> ties_;  // per-level scratch
};

}  // namespace detail

/// Canonically relabeled copy: isomorphic graphs map to equal graphs.
inline Graph canonical_form(const Graph& g) {
  const std::vector<int> perm = detail::CanonicalSearch(g).run();
  std::vector<int> position(static_cast<std::size_t>(g.vertex_count()), -1);
  for (int pos = 0; pos < g.vertex_count(); ++pos)
    position[static_cast<std::size_t>(perm[static_cast<std::size_t>(pos)])] = pos;
  std::vector<Edge> edges;
  edges.reserve(g.edges().size());
  for (const auto& [u, v] : g.edges())
    edges.push_back(make_edge(position[static_cast<std::size_t>(u)],
                              position[static_cast<std::size_t>(v)]));
  return Graph(g.vertex_count(), edges);
}

inline std::string canonical_graph6(const Graph& g) {
  return encode_graph6(canonical_form(g));
}

inline bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
    return false;
  return canonical_graph6(a) == canonical_graph6(b);
}

// ---------------------------------------------------------------------------
// Isomorph-free generation of connected graphs by vertex augmentation: every
// connected graph on k+1 vertices arises from a connected graph on k
// vertices by attaching the new vertex to a nonempty neighborhood, and
// canonical-form deduplication keeps one representative per class.
// ---------------------------------------------------------------------------

inline std::vector<Graph> augment_connected(const std::vector<Graph>& reps) {
  std::set<std::string> seen;
  std::vector<Graph> out;
  for (const Graph& parent : reps) {
    const int k = parent.vertex_count();
    if (k + 1 > kMaxVertices) throw std::invalid_argument("augment: size cap exceeded");
    const std::uint64_t limit = std::uint64_t{1} << k;
    for (std::uint64_t mask = 1; mask < limit; ++mask) {
      std::vector<Edge> edges = parent.edges();
      std::uint64_t bits = mask;
      while (bits) {
        const int v = std::countr_zero(bits);
        bits &= bits - 1;
        edges.push_back({v, k});
      }
      Graph canon = canonical_form(Graph(k + 1, edges));
      std::string key = encode_graph6(canon);
      if (seen.insert(std::move(key)).second) out.push_back(std::move(canon));
    }
  }
  std::sort(out.begin(), out.end(), [](const Graph& a, const Graph& b) {
    if (a.edge_count() != b.edge_count()) return a.edge_count() < b.edge_count();
    return a.edges() < b.edges();
  });
  return out;
}

/// One canonical representative per isomorphism class of connected graphs on
/// n vertices. Scope-guarded at n <= 8; larger censuses stream graph6 input
/// instead (augment_connected remains available for building such files).
inline std::vector<Graph> generate_graphs(int n) {
  if (n < 1 || n > 8)
    throw std::invalid_argument("generate_graphs: supported range is 1 <= n <= 8");
  std::vector<Graph> reps = {Graph(1, {})};
  for (int k = 1; k < n; ++k) reps = augment_connected(reps);
  return reps;
}

// ---------------------------------------------------------------------------
// Census pipeline.
// ---------------------------------------------------------------------------

struct CensusOptions {
  bool require_connected = true;
  bool require_min_degree_2 = true;
  bool skip_single_cycle_length = true;
  bool full_check = true;
  int n_max = 9;
};

struct CensusRecord {
  bool parse_error = false;
  std::size_t line_number = 0;  // 1-based input line
  std::string input;            // offending text, parse errors only
  std::string error;
  std::string graph6;  // normalized re-encoding of the parsed graph
  int n = 0;
  int m = 0;
  std::vector<int> cycle_lengths;
  Overall status = Overall::trivial;
  std::vector<std::tuple<int, int, Rational>> rho_table;
  std::optional<std::string> matched_family;
};

struct CensusCounts {
  std::int64_t full = 0;
  std::int64_t almost_only = 0;
  std::int64_t trivial = 0;
  std::int64_t fail = 0;
  std::int64_t filtered = 0;
};

struct CensusSummary {
  std::map<int, CensusCounts> per_n;
  std::int64_t parse_errors = 0;
  std::int64_t lines = 0;
  std::vector<std::string> survivors;  // nontrivial, deduplicated, sorted
};

struct CensusResult {
  std::vector<CensusRecord> records;  // in input order
  CensusSummary summary;
};

namespace detail {

enum class CensusBucket { full, almost_only, trivial, fail, filtered, parse_error, blank };

struct CensusOutcome {
  CensusBucket bucket = CensusBucket::blank;
  int n = 0;
  std::optional<CensusRecord> record;
};

/// Family labels for survivors, matched by isomorphism against the named
/// constructions that fit the vertex and edge counts.
inline std::optional<std::string> match_family(const Graph& g, Overall status) {
  if (status == Overall::trivial) return "trivial";
  const int n = g.vertex_count();
  const int m = g.edge_count();
  if (n >= 1 && m == n * (n - 1) / 2) return "complete";
  for (int a = 1; a <= n / 2; ++a) {
    const int b = n - a;
    if (a * b != m) continue;
    if (is_isomorphic(g, complete_bipartite_graph(a, b))) return "complete-bipartite";
  }
  const Graph k4 = complete_graph(4);
  if (n == 7 && is_isomorphic(g, clique_sum_vertex(k4, 0, k4, 0))) return "join";
  if (n == 8 && is_isomorphic(g, path_join(k4, 0, k4, 0, 0))) return "join";
  if (n == 9 && is_isomorphic(g, path_join(k4, 0, k4, 0, 1))) return "join";
  if (n == 8 && m == 12 && is_isomorphic(g, hypercube_graph(3))) return "cube";
  return std::nullopt;
}

inline CensusOutcome process_census_line(const std::string& line, std::size_t line_number,
                                         const CensusOptions& opts) {
  CensusOutcome outcome;
  if (line.empty()) return outcome;
  Graph g;
  try {
    g = parse_graph6(line);
    if (g.vertex_count() > opts.n_max)
      throw std::invalid_argument("vertex count exceeds n_max");
  } catch (const std::exception& e) {
    outcome.bucket = CensusBucket::parse_error;
    CensusRecord record;
    record.parse_error = true;
    record.line_number = line_number;
    record.input = line;
    record.error = e.what();
    outcome.record = std::move(record);
    return outcome;
  }
  outcome.n = g.vertex_count();
  const GraphStats stats = graph_stats(g);
  if ((opts.require_connected && !stats.connected) ||
      (opts.require_min_degree_2 && (g.vertex_count() == 0 || stats.min_degree < 2))) {
    outcome.bucket = CensusBucket::filtered;
    return outcome;
  }
  const SymmetryReport report = classify(g, {opts.full_check});
  switch (report.overall) {
    case Overall::tb_symmetrical: outcome.bucket = CensusBucket::full; break;
    case Overall::almost_only: outcome.bucket = CensusBucket::almost_only; break;
    case Overall::trivial: outcome.bucket = CensusBucket::trivial; break;
    case Overall::neither: outcome.bucket = CensusBucket::fail; break;
  }
  const bool emit = outcome.bucket == CensusBucket::full ||
                    outcome.bucket == CensusBucket::almost_only ||
                    (outcome.bucket == CensusBucket::trivial && !opts.skip_single_cycle_length);
  if (!emit) return outcome;
  CensusRecord record;
  record.line_number = line_number;
  record.graph6 = report.graph6;
  record.n = g.vertex_count();
  record.m = g.edge_count();
  record.cycle_lengths = report.cycle_lengths;
  record.status = report.overall;
  for (const auto& st : report.pairs) {
    const auto rho = report.certified_rho(st.r, st.s);
    if (rho) record.rho_table.push_back({st.r, st.s, *rho});
  }
  record.matched_family = match_family(g, report.overall);
  outcome.record = std::move(record);
  return outcome;
}

}  // namespace detail

/// Aggregates a record list: per-n status counts plus the deduplicated,
/// sorted list of nontrivial survivors.
inline CensusSummary summarize(const std::vector<CensusRecord>& records) {
  CensusSummary summary;
  std::set<std::pair<int, std::string>> survivor_keys;
  for (const auto& record : records) {
    ++summary.lines;
    if (record.parse_error) {
      ++summary.parse_errors;
      continue;
    }
    auto& counts = summary.per_n[record.n];
    switch (record.status) {
      case Overall::tb_symmetrical: ++counts.full; break;
      case Overall::almost_only: ++counts.almost_only; break;
      case Overall::trivial: ++counts.trivial; break;
      case Overall::neither: ++counts.fail; break;
    }
    if (record.status == Overall::tb_symmetrical || record.status == Overall::almost_only)
      survivor_keys.insert({record.n, record.graph6});
  }
  for (const auto& [n, g6] : survivor_keys) summary.survivors.push_back(g6);
  return summary;
}

/// Streams graph6 lines through the rejection ladder (connectivity, minimum
/// degree, cycle spectrum, then the symmetry conditions), emitting a record
/// per surviving graph. Output order matches input order for any worker
/// count; blank lines are ignored.
inline CensusResult census_stream(const std::vector<std::string>& lines,
                                  const CensusOptions& opts = {}, int workers = 1) {
  const std::size_t count = lines.size();
  std::vector<detail::CensusOutcome> outcomes(count);
  auto process_range = [&](std::atomic<std::size_t>& next) {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) break;
      outcomes[i] = detail::process_census_line(lines[i], i + 1, opts);
    }
  };
  if (workers <= 1) {
    std::atomic<std::size_t> next{0};
    process_range(next);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back([&] { process_range(next); });
    for (auto& t : pool) t.join();
  }

  CensusResult result;
  std::set<std::pair<int, std::string>> survivor_keys;
  for (auto& outcome : outcomes) {
    using B = detail::CensusBucket;
    if (outcome.bucket == B::blank) continue;
    ++result.summary.lines;
    if (outcome.bucket == B::parse_error) {
      ++result.summary.parse_errors;
    } else {
      auto& counts = result.summary.per_n[outcome.n];
      switch (outcome.bucket) {
        case B::full: ++counts.full; break;
        case B::almost_only: ++counts.almost_only; break;
        case B::trivial: ++counts.trivial; break;
        case B::fail: ++counts.fail; break;
        case B::filtered: ++counts.filtered; break;
        default: break;
      }
      if (outcome.record &&
          (outcome.bucket == B::full || outcome.bucket == B::almost_only))
        survivor_keys.insert({outcome.n, outcome.record->graph6});
    }
    if (outcome.record) result.records.push_back(std::move(*outcome.record));
  }
  for (const auto& [n, g6] : survivor_keys) result.summary.survivors.push_back(g6);
  return result;
}

}  // namespace tbsym
