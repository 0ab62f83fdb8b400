#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tbsym/cycles.hpp"
#include "tbsym/graph.hpp"
#include "tbsym/rational.hpp"
#include "tbsym/tb_symmetry.hpp"

namespace tbsym {

// ---------------------------------------------------------------------------
// Abstract front data: signed crossing totals per edge, per corner and per
// non-adjacent pair (in the +1 orientation class; the -1 class contributes
// the negation), plus cusp counts on edges and corners. A cycle's tb is the
// sum of its crossing contributions minus half its cusp count.
// ---------------------------------------------------------------------------

template <typename Value>
struct FrontDataT {
  std::shared_ptr<const EdgePairIndex> index;
  std::vector<Value> w_self;    // per edge
  std::vector<Value> w_corner;  // per adjacent edge pair
  std::vector<Value> w_cross;   // per non-adjacent edge pair, +1 orientation
  std::vector<Value> c_edge;    // cusps on edge interiors
  std::vector<Value> c_corner;  // cusps at the shared vertex of a corner

  FrontDataT() = default;

  explicit FrontDataT(const Graph& g) : index(std::make_shared<EdgePairIndex>(g)) {
    w_self.assign(static_cast<std::size_t>(index->edge_count()), Value{});
    w_corner.assign(index->corners().size(), Value{});
    w_cross.assign(index->cross_pairs().size(), Value{});
    c_edge.assign(static_cast<std::size_t>(index->edge_count()), Value{});
    c_corner.assign(index->corners().size(), Value{});
  }

  Value& at_self(Edge e) { return w_self[edge_slot(e)]; }
  Value& at_corner(Edge e, Edge f) { return w_corner[corner_slot(e, f)]; }
  Value& at_cross(Edge e, Edge f) { return w_cross[cross_slot(e, f)]; }
  Value& cusp_edge(Edge e) { return c_edge[edge_slot(e)]; }
  Value& cusp_corner(Edge e, Edge f) { return c_corner[corner_slot(e, f)]; }

  std::size_t edge_slot(Edge e) const {
    e = make_edge(e.first, e.second);
    const int id = index->edge_index(e.first, e.second);
    if (id < 0) throw std::invalid_argument("front data: unknown edge key");
    return static_cast<std::size_t>(id);
  }
  std::size_t corner_slot(Edge e, Edge f) const {
    const int id = index->corner_index(static_cast<int>(edge_slot(e)),
                                       static_cast<int>(edge_slot(f)));
    if (id < 0) throw std::invalid_argument("front data: edges do not form a corner");
    return static_cast<std::size_t>(id);
  }
  std::size_t cross_slot(Edge e, Edge f) const {
    const int id = index->cross_index(static_cast<int>(edge_slot(e)),
                                      static_cast<int>(edge_slot(f)));
    if (id < 0) throw std::invalid_argument("front data: edges are not a non-adjacent pair");
    return static_cast<std::size_t>(id);
  }
};

using FrontData = FrontDataT<std::int64_t>;
using RationalFrontData = FrontDataT<Rational>;

namespace detail {

template <typename Value>
void require_keyed_to(const FrontDataT<Value>& d, const Graph& g) {
  if (!d.index || d.index->vertex_count() != g.vertex_count() ||
      d.index->edges() != g.edges())
    throw std::invalid_argument("front data is keyed to a different graph");
  if (d.w_self.size() != static_cast<std::size_t>(d.index->edge_count()) ||
      d.w_corner.size() != d.index->corners().size() ||
      d.w_cross.size() != d.index->cross_pairs().size() ||
      d.c_edge.size() != d.w_self.size() || d.c_corner.size() != d.w_corner.size())
    throw std::invalid_argument("front data: key sets do not match the graph");
  if constexpr (std::is_same_v<Value, std::int64_t>) {
    for (auto c : d.c_edge)
      if (c < 0) throw std::invalid_argument("front data: negative cusp count");
    for (auto c : d.c_corner)
      if (c < 0) throw std::invalid_argument("front data: negative cusp count");
  }
}

inline Rational to_rational_value(std::int64_t v) { return Rational(v); }
inline const Rational& to_rational_value(const Rational& v) { return v; }

/// Walks a vertex sequence once, handing each edge id with its traversal
/// sign to the callback; validates that the sequence is a cycle of g.
template <typename Fn>
void walk_cycle(const Graph& g, const std::vector<int>& verts, Fn&& fn) {
  const int r = static_cast<int>(verts.size());
  if (r < 3) throw std::invalid_argument("cycle has fewer than 3 vertices");
  std::uint64_t seen = 0;
  for (int v : verts) {
    if (v < 0 || v >= g.vertex_count())
      throw std::invalid_argument("cycle vertex out of range");
    if ((seen >> v) & 1) throw std::invalid_argument("cycle repeats a vertex");
    seen |= std::uint64_t{1} << v;
  }
  for (int i = 0; i < r; ++i) {
    const int a = verts[static_cast<std::size_t>(i)];
    const int b = verts[static_cast<std::size_t>((i + 1) % r)];
    if (!g.adjacent(a, b))
      throw std::invalid_argument("vertex sequence is not a cycle of the graph");
    fn(i, a, b);
  }
}

}  // namespace detail

/// tb of one cycle under the data: self and corner crossings plus
/// sigma-signed cross-pair crossings, minus half the cusps met along the way.
/// Any rotation or reflection of the cycle gives the same value.
template <typename Value>
Rational cycle_tb(const Graph& g, const FrontDataT<Value>& d, const std::vector<int>& verts) {
  detail::require_keyed_to(d, g);
  const auto& index = *d.index;
  const int r = static_cast<int>(verts.size());
  std::vector<int> edge_ids(static_cast<std::size_t>(r));
  std::vector<int> direction(static_cast<std::size_t>(r));
  detail::walk_cycle(g, verts, [&](int i, int a, int b) {
    edge_ids[static_cast<std::size_t>(i)] = index.edge_index(a, b);
    direction[static_cast<std::size_t>(i)] = a < b ? 1 : -1;
  });
  Rational crossings(0), cusps(0);
  for (int i = 0; i < r; ++i) {
    const int e = edge_ids[static_cast<std::size_t>(i)];
    crossings += detail::to_rational_value(d.w_self[static_cast<std::size_t>(e)]);
    cusps += detail::to_rational_value(d.c_edge[static_cast<std::size_t>(e)]);
    const int f = edge_ids[static_cast<std::size_t>((i + 1) % r)];
    const int corner = index.corner_index(e, f);
    crossings += detail::to_rational_value(d.w_corner[static_cast<std::size_t>(corner)]);
    cusps += detail::to_rational_value(d.c_corner[static_cast<std::size_t>(corner)]);
    for (int j = i + 2; j < r; ++j) {
      if (i == 0 && j == r - 1) continue;
      const int q = index.cross_index(e, edge_ids[static_cast<std::size_t>(j)]);
      const Rational w = detail::to_rational_value(d.w_cross[static_cast<std::size_t>(q)]);
      if (direction[static_cast<std::size_t>(i)] == direction[static_cast<std::size_t>(j)])
        crossings += w;
      else
        crossings -= w;
    }
  }
  return crossings - cusps / 2;
}

template <typename Value>
Rational cycle_tb(const Graph& g, const FrontDataT<Value>& d, const Cycle& c) {
  return cycle_tb(g, d, c.vertices);
}

struct TbSpectrum {
  std::map<int, Rational> per_length;
  Rational total = Rational(0);
};

/// TB_r for every present length r, summed over all r-cycles.
inline TbSpectrum tb_spectrum(const Graph& g, const FrontData& d) {
  detail::require_keyed_to(d, g);
  const auto& index = *d.index;
  // Accumulate twice the tb in integers per length: 2*crossings - cusps.
  std::map<int, std::int64_t> twice;
  std::vector<int> edge_ids;
  std::vector<int> direction;
  for_each_cycle(g, [&](std::span<const int> verts) {
    const int r = static_cast<int>(verts.size());
    edge_ids.assign(static_cast<std::size_t>(r), 0);
    direction.assign(static_cast<std::size_t>(r), 0);
    for (int i = 0; i < r; ++i) {
      const int a = verts[static_cast<std::size_t>(i)];
      const int b = verts[static_cast<std::size_t>((i + 1) % r)];
      edge_ids[static_cast<std::size_t>(i)] = index.edge_index(a, b);
      direction[static_cast<std::size_t>(i)] = a < b ? 1 : -1;
    }
    std::int64_t sum = 0;
    for (int i = 0; i < r; ++i) {
      const int e = edge_ids[static_cast<std::size_t>(i)];
      const int f = edge_ids[static_cast<std::size_t>((i + 1) % r)];
      const int corner = index.corner_index(e, f);
      sum = checked_add(sum, checked_mul(2, d.w_self[static_cast<std::size_t>(e)]));
      sum = checked_add(sum, checked_mul(2, d.w_corner[static_cast<std::size_t>(corner)]));
      sum = checked_add(sum, -d.c_edge[static_cast<std::size_t>(e)]);
      sum = checked_add(sum, -d.c_corner[static_cast<std::size_t>(corner)]);
      for (int j = i + 2; j < r; ++j) {
        if (i == 0 && j == r - 1) continue;
        const int q = index.cross_index(e, edge_ids[static_cast<std::size_t>(j)]);
        const std::int64_t w =
            checked_mul(2, d.w_cross[static_cast<std::size_t>(q)]);
        sum = checked_add(sum,
                          direction[static_cast<std::size_t>(i)] ==
                                  direction[static_cast<std::size_t>(j)]
                              ? w
                              : -w);
      }
    }
    auto& cell = twice[r];
    cell = checked_add(cell, sum);
  });
  TbSpectrum spectrum;
  for (const auto& [r, value] : twice) {
    spectrum.per_length[r] = make_rational(value, 2);
    spectrum.total += spectrum.per_length[r];
  }
  return spectrum;
}

/// Deterministic generator: crossings uniform in [-bound, bound], cusps in
/// [0, 2*bound]. Fill order is edges, corners, cross pairs, then the two cusp
/// tables, each in canonical order, from one RNG stream.
inline FrontData random_front_data(const Graph& g, std::uint64_t seed, std::int64_t bound) {
  if (bound < 0) throw std::invalid_argument("random_front_data: negative bound");
  FrontData d(g);
  std::mt19937_64 rng(seed);
  const std::uint64_t span = static_cast<std::uint64_t>(2 * bound + 1);
  auto crossing = [&]() { return static_cast<std::int64_t>(rng() % span) - bound; };
  auto cusp = [&]() { return static_cast<std::int64_t>(rng() % span); };
  for (auto& w : d.w_self) w = crossing();
  for (auto& w : d.w_corner) w = crossing();
  for (auto& w : d.w_cross) w = crossing();
  for (auto& c : d.c_edge) c = cusp();
  for (auto& c : d.c_corner) c = cusp();
  return d;
}

// ---------------------------------------------------------------------------
// Proportionality verification against a symmetry report.
// ---------------------------------------------------------------------------

struct ProportionalityCheck {
  int r = 0, s = 0;
  Rational rho, lhs, rhs;
  bool ok = false;
};

struct ProportionalityResult {
  std::vector<ProportionalityCheck> pair_checks;
  struct TotalCheck {
    int s = 0;
    Rational coefficient, tb_s, total, expected;
    bool ok = false;
  };
  std::optional<TotalCheck> total_check;
  bool all_ok = true;
};

/// For every pair certified full, compares TB_r against rho * TB_s exactly;
/// for a TB-symmetrical report also checks the total against the coefficient
/// formula at the smallest present length. Mismatches are recorded, never
/// thrown: on almost-only graphs they are expected and reportable.
inline ProportionalityResult verify_proportionality(const Graph& g, const FrontData& d,
                                                    const SymmetryReport& report) {
  ProportionalityResult result;
  const TbSpectrum spectrum = tb_spectrum(g, d);
  auto tb_of = [&](int r) {
    const auto it = spectrum.per_length.find(r);
    return it == spectrum.per_length.end() ? Rational(0) : it->second;
  };
  for (const auto& st : report.pairs) {
    if (st.level != PairLevel::full) continue;
    ProportionalityCheck check;
    check.r = st.r;
    check.s = st.s;
    check.rho = *st.rho;
    check.lhs = tb_of(st.r);
    check.rhs = check.rho * tb_of(st.s);
    check.ok = check.lhs == check.rhs;
    result.all_ok &= check.ok;
    result.pair_checks.push_back(std::move(check));
  }
  if (report.tb_symmetrical() && !report.cycle_lengths.empty()) {
    ProportionalityResult::TotalCheck total;
    total.s = report.cycle_lengths.front();
    total.coefficient = total_tb_coefficient(report, total.s);
    total.tb_s = tb_of(total.s);
    total.total = spectrum.total;
    total.expected = total.coefficient * total.tb_s;
    total.ok = total.total == total.expected;
    result.all_ok &= total.ok;
    result.total_check = total;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Exact feasibility solver: find front data hitting prescribed per-cycle tb
// values, or certify that the targets lie outside the decomposition's span.
// ---------------------------------------------------------------------------

struct FitResult {
  bool feasible = false;
  /// Rational witness over all decomposition variables (cusps relaxed).
  std::optional<RationalFrontData> solution;
  /// Present when the witness has integer crossings and nonnegative integer
  /// cusps, i.e. it is honest front data.
  std::optional<FrontData> integral_solution;
  bool nonneg_integer_cusps = false;
  /// Infeasibility certificate: multipliers y over the target cycles with
  /// y * coefficient-rows = 0 but y * targets != 0.
  struct Certificate {
    std::vector<std::pair<Cycle, Rational>> multipliers;
  };
  std::optional<Certificate> certificate;
};

inline FitResult fit_front_data(const Graph& g,
                                const std::vector<std::pair<Cycle, Rational>>& targets) {
  // Validate the target keys against the actual cycle set.
  const std::vector<Cycle> cycles = enumerate_cycles(g);
  const std::set<Cycle> cycle_set(cycles.begin(), cycles.end());
  for (const auto& [cycle, value] : targets)
    if (!cycle_set.count(cycle))
      throw std::invalid_argument("fit_front_data: unknown cycle key");

  const EdgePairIndex index(g);
  const std::size_t m = static_cast<std::size_t>(index.edge_count());
  const std::size_t nc = index.corners().size();
  const std::size_t np = index.cross_pairs().size();
  // Variable layout: w_self | w_corner | w_cross | c_edge | c_corner.
  const std::size_t vars = 2 * m + 2 * nc + np;
  const std::size_t rows = targets.size();

  // Augmented matrix: vars | rhs | multiplier tracking block (identity).
  const std::size_t width = vars + 1 + rows;
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(width, Rational(0)));
  const Rational minus_half(-1, 2);
  for (std::size_t row = 0; row < rows; ++row) {
    const auto& [cycle, value] = targets[row];
    const int r = cycle.length();
    std::vector<int> edge_ids(static_cast<std::size_t>(r));
    std::vector<int> direction(static_cast<std::size_t>(r));
    detail::walk_cycle(g, cycle.vertices, [&](int i, int u, int v) {
      edge_ids[static_cast<std::size_t>(i)] = index.edge_index(u, v);
      direction[static_cast<std::size_t>(i)] = u < v ? 1 : -1;
    });
    for (int i = 0; i < r; ++i) {
      const std::size_t e = static_cast<std::size_t>(edge_ids[static_cast<std::size_t>(i)]);
      const std::size_t f =
          static_cast<std::size_t>(edge_ids[static_cast<std::size_t>((i + 1) % r)]);
      const std::size_t corner =
          static_cast<std::size_t>(index.corner_index(static_cast<int>(e), static_cast<int>(f)));
      a[row][e] += 1;
      a[row][m + corner] += 1;
      a[row][m + nc + np + e] += minus_half;
      a[row][2 * m + nc + np + corner] += minus_half;
      for (int j = i + 2; j < r; ++j) {
        if (i == 0 && j == r - 1) continue;
        const std::size_t q = static_cast<std::size_t>(index.cross_index(
            static_cast<int>(e), edge_ids[static_cast<std::size_t>(j)]));
        a[row][m + nc + q] += direction[static_cast<std::size_t>(i)] ==
                                      direction[static_cast<std::size_t>(j)]
                                  ? 1
                                  : -1;
      }
    }
    a[row][vars] = value;
    a[row][vars + 1 + row] = 1;
  }

  // Gauss-Jordan elimination over the variable columns, exact rationals.
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (column, row)
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < vars && pivot_row < rows; ++col) {
    std::size_t found = rows;
    for (std::size_t row = pivot_row; row < rows; ++row)
      if (a[row][col] != 0) {
        found = row;
        break;
      }
    if (found == rows) continue;
    std::swap(a[pivot_row], a[found]);
    const Rational inv = Rational(1) / a[pivot_row][col];
    for (std::size_t j = col; j < width; ++j) a[pivot_row][j] *= inv;
    for (std::size_t row = 0; row < rows; ++row) {
      if (row == pivot_row || a[row][col] == 0) continue;
      const Rational factor = a[row][col];
      for (std::size_t j = col; j < width; ++j) a[row][j] -= factor * a[pivot_row][j];
    }
    pivots.push_back({col, pivot_row});
    ++pivot_row;
  }

  FitResult result;
  // Any remaining row is zero over the variables; a nonzero rhs there is an
  // exact witness that the targets leave the span.
  for (std::size_t row = pivot_row; row < rows; ++row) {
    if (a[row][vars] == 0) continue;
    FitResult::Certificate certificate;
    for (std::size_t t = 0; t < rows; ++t) {
      const Rational& mult = a[row][vars + 1 + t];
      if (mult != 0) certificate.multipliers.push_back({targets[t].first, mult});
    }
    result.feasible = false;
    result.certificate = std::move(certificate);
    return result;
  }

  // Particular solution: free variables set to zero.
  std::vector<Rational> x(vars, Rational(0));
  for (const auto& [col, row] : pivots) x[col] = a[row][vars];
  RationalFrontData solution;
  solution.index = std::make_shared<EdgePairIndex>(index);
  solution.w_self.assign(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(m));
  solution.w_corner.assign(x.begin() + static_cast<std::ptrdiff_t>(m),
                           x.begin() + static_cast<std::ptrdiff_t>(m + nc));
  solution.w_cross.assign(x.begin() + static_cast<std::ptrdiff_t>(m + nc),
                          x.begin() + static_cast<std::ptrdiff_t>(m + nc + np));
  solution.c_edge.assign(x.begin() + static_cast<std::ptrdiff_t>(m + nc + np),
                         x.begin() + static_cast<std::ptrdiff_t>(2 * m + nc + np));
  solution.c_corner.assign(x.begin() + static_cast<std::ptrdiff_t>(2 * m + nc + np), x.end());

  auto is_integer = [](const Rational& v) { return denominator(v) == 1; };
  bool cusps_ok = true;
  for (const auto& c : solution.c_edge) cusps_ok &= is_integer(c) && c >= 0;
  for (const auto& c : solution.c_corner) cusps_ok &= is_integer(c) && c >= 0;
  bool crossings_ok = true;
  for (const auto& w : solution.w_self) crossings_ok &= is_integer(w);
  for (const auto& w : solution.w_corner) crossings_ok &= is_integer(w);
  for (const auto& w : solution.w_cross) crossings_ok &= is_integer(w);

  result.feasible = true;
  result.nonneg_integer_cusps = cusps_ok;
  if (cusps_ok && crossings_ok) {
    FrontData integral(g);
    auto narrow = [](const Rational& v) {
      return numerator(v).convert_to<std::int64_t>();
    };
    for (std::size_t i = 0; i < m; ++i) integral.w_self[i] = narrow(solution.w_self[i]);
    for (std::size_t i = 0; i < nc; ++i) integral.w_corner[i] = narrow(solution.w_corner[i]);
    for (std::size_t i = 0; i < np; ++i) integral.w_cross[i] = narrow(solution.w_cross[i]);
    for (std::size_t i = 0; i < m; ++i) integral.c_edge[i] = narrow(solution.c_edge[i]);
    for (std::size_t i = 0; i < nc; ++i) integral.c_corner[i] = narrow(solution.c_corner[i]);
    result.integral_solution = std::move(integral);
  }
  result.solution = std::move(solution);
  return result;
}

}  // namespace tbsym
