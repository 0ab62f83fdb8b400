#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tbsym/cycles.hpp"
#include "tbsym/graph.hpp"
#include "tbsym/graph6.hpp"
#include "tbsym/rational.hpp"

namespace tbsym {

enum class PairLevel {
  trivial_no_cycles,
  almost,
  full,
  fail_condition_1,
  fail_condition_2,
  fail_condition_3,
};

inline const char* to_string(PairLevel level) {
  switch (level) {
    case PairLevel::trivial_no_cycles: return "trivial-no-cycles";
    case PairLevel::almost: return "almost";
    case PairLevel::full: return "full";
    case PairLevel::fail_condition_1: return "fail-condition-1";
    case PairLevel::fail_condition_2: return "fail-condition-2";
    case PairLevel::fail_condition_3: return "fail-condition-3";
  }
  return "?";
}

/// First offending object in canonical order, with the counts that broke the
/// proportionality. For condition (3) failures the determined almost-level
/// ratio is carried along.
struct PairWitness {
  enum class Kind { edge, corner, cross_pair };
  Kind kind = Kind::edge;
  Edge e1{0, 0};
  Edge e2{0, 0};  // second edge for corner / cross_pair witnesses
  std::int64_t r_count = 0;
  std::int64_t s_count = 0;
  std::int64_t u = 0, h = 0, v = 0, k = 0;  // oriented counts for condition (3)
  std::optional<Rational> rho;
};

struct PairStatus {
  int r = 0;
  int s = 0;
  PairLevel level = PairLevel::trivial_no_cycles;
  std::optional<Rational> rho;       // present iff level is not a failure
  std::optional<PairWitness> witness;  // present iff level is a failure

  bool certifies_full() const {
    return level == PairLevel::full || level == PairLevel::trivial_no_cycles;
  }
  bool certifies_almost() const {
    return certifies_full() || level == PairLevel::almost ||
           level == PairLevel::fail_condition_3;
  }
};

enum class Overall { tb_symmetrical, almost_only, neither, trivial };

inline const char* to_string(Overall overall) {
  switch (overall) {
    case Overall::tb_symmetrical: return "tb-symmetrical";
    case Overall::almost_only: return "almost-tb-symmetrical-only";
    case Overall::neither: return "neither";
    case Overall::trivial: return "trivial";
  }
  return "?";
}

struct SymmetryReport {
  std::string graph6;
  std::vector<int> cycle_lengths;
  std::vector<PairStatus> pairs;  // all ordered pairs of present lengths, sorted
  Overall overall = Overall::trivial;

  bool tb_symmetrical() const {
    return overall == Overall::tb_symmetrical || overall == Overall::trivial;
  }
  bool almost_tb_symmetrical() const {
    return tb_symmetrical() || overall == Overall::almost_only;
  }

  const PairStatus* pair(int r, int s) const {
    for (const auto& st : pairs)
      if (st.r == r && st.s == s) return &st;
    return nullptr;
  }

  /// The determined ratio for an ordered pair, when one exists: the status
  /// rho at levels almost/full, or the almost-level ratio recorded in a
  /// condition (3) witness.
  std::optional<Rational> certified_rho(int r, int s) const {
    const PairStatus* st = pair(r, s);
    if (!st) return std::nullopt;
    if (st->rho) return st->rho;
    if (st->level == PairLevel::fail_condition_3 && st->witness) return st->witness->rho;
    return std::nullopt;
  }
};

namespace detail {

/// Reduced nonnegative ratio on 64-bit parts; comparisons cross-multiply in
/// 128 bits so they are exact.
struct Ratio {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

inline Ratio reduce_ratio(std::int64_t num, std::int64_t den) {
  const std::int64_t g = std::gcd(num, den);
  if (g > 1) return {num / g, den / g};
  return {num, den};
}

inline bool ratio_matches(std::int64_t lhs, const Ratio& rho, std::int64_t rhs) {
  return static_cast<__int128>(lhs) * rho.den == static_cast<__int128>(rho.num) * rhs;
}

inline Rational to_rational(const Ratio& rho) { return make_rational(rho.num, rho.den); }

/// Conditions (1) and (2): determine the ratio from the first object with a
/// nonzero s-count and verify every edge and corner against it.
inline PairStatus check_almost_level(const IncidenceProfile& profile, int r, int s) {
  PairStatus st;
  st.r = r;
  st.s = s;
  const auto& index = profile.index();
  const int m = index.edge_count();
  const int corner_count = static_cast<int>(index.corners().size());

  bool determined = false;
  Ratio rho;
  for (int e = 0; e < m && !determined; ++e) {
    const std::int64_t cs = profile.edge_count_for(e, s);
    if (cs != 0) {
      rho = reduce_ratio(profile.edge_count_for(e, r), cs);
      determined = true;
    }
  }
  for (int c = 0; c < corner_count && !determined; ++c) {
    const std::int64_t cs = profile.corner_count_for(c, s);
    if (cs != 0) {
      rho = reduce_ratio(profile.corner_count_for(c, r), cs);
      determined = true;
    }
  }
  // All s-side counts are zero: the r-side must vanish everywhere too,
  // otherwise no ratio exists.
  if (!determined) rho = {0, 1};

  for (int e = 0; e < m; ++e) {
    const std::int64_t cr = profile.edge_count_for(e, r);
    const std::int64_t cs = profile.edge_count_for(e, s);
    if (!ratio_matches(cr, rho, cs)) {
      st.level = PairLevel::fail_condition_1;
      PairWitness w;
      w.kind = PairWitness::Kind::edge;
      w.e1 = index.edges()[static_cast<std::size_t>(e)];
      w.r_count = cr;
      w.s_count = cs;
      if (determined) w.rho = to_rational(rho);
      st.witness = w;
      return st;
    }
  }
  for (int c = 0; c < corner_count; ++c) {
    const std::int64_t cr = profile.corner_count_for(c, r);
    const std::int64_t cs = profile.corner_count_for(c, s);
    if (!ratio_matches(cr, rho, cs)) {
      st.level = PairLevel::fail_condition_2;
      PairWitness w;
      w.kind = PairWitness::Kind::corner;
      w.e1 = index.corner_edges(c, false);
      w.e2 = index.corner_edges(c, true);
      w.r_count = cr;
      w.s_count = cs;
      if (determined) w.rho = to_rational(rho);
      st.witness = w;
      return st;
    }
  }
  st.level = PairLevel::almost;
  st.rho = to_rational(rho);
  return st;
}

/// Condition (3) on a status that already certifies almost: for every
/// non-adjacent pair, v - k = rho (u - h) with u, h counting s-cycles and
/// v, k counting r-cycles in the two orientation classes.
inline void check_full_level(const IncidenceProfile& profile, PairStatus& st) {
  profile.ensure_oriented();
  const auto& index = profile.index();
  const Rational rho_value = *st.rho;
  const Ratio rho = {numerator(rho_value).convert_to<std::int64_t>(),
                     denominator(rho_value).convert_to<std::int64_t>()};
  const int cross_count = static_cast<int>(index.cross_pairs().size());
  for (int q = 0; q < cross_count; ++q) {
    const auto s_side = profile.oriented_count_for(q, st.s);
    const auto r_side = profile.oriented_count_for(q, st.r);
    if (!ratio_matches(r_side.plus - r_side.minus, rho, s_side.plus - s_side.minus)) {
      PairWitness w;
      w.kind = PairWitness::Kind::cross_pair;
      w.e1 = index.cross_edges(q, false);
      w.e2 = index.cross_edges(q, true);
      w.u = s_side.plus;
      w.h = s_side.minus;
      w.v = r_side.plus;
      w.k = r_side.minus;
      w.rho = st.rho;
      st.level = PairLevel::fail_condition_3;
      st.rho.reset();
      st.witness = w;
      return;
    }
  }
  st.level = PairLevel::full;
}

}  // namespace detail

/// Decides almost- or full (r,s)-proportionality against a profile. With
/// want_full the oriented tables are filled on demand.
inline PairStatus check_pair(const IncidenceProfile& profile, int r, int s, bool want_full) {
  if (r == s || r < 3 || s < 3)
    throw std::invalid_argument("check_pair: lengths must be distinct and >= 3");
  if (profile.cycle_count(r) == 0 && profile.cycle_count(s) == 0) {
    PairStatus st;
    st.r = r;
    st.s = s;
    st.level = PairLevel::trivial_no_cycles;
    st.rho = Rational(0);
    return st;
  }
  PairStatus st = detail::check_almost_level(profile, r, s);
  if (want_full && st.level == PairLevel::almost) detail::check_full_level(profile, st);
  return st;
}

struct ClassifyOptions {
  bool full_check = true;
};

/// Classifies a graph: fills the status table over all ordered pairs of
/// present cycle lengths and derives the overall flag. Graphs with at most
/// one distinct cycle length are trivial and count as TB-symmetrical.
inline SymmetryReport classify(const Graph& g, const ClassifyOptions& options = {}) {
  SymmetryReport report;
  report.graph6 = encode_graph6(g);
  IncidenceProfile profile = IncidenceProfile::build(g, /*with_oriented=*/false);
  report.cycle_lengths = profile.lengths();
  const auto& lengths = report.cycle_lengths;
  if (lengths.size() <= 1) {
    report.overall = Overall::trivial;
    return report;
  }
  for (int r : lengths)
    for (int s : lengths) {
      if (r == s) continue;
      PairStatus st = detail::check_almost_level(profile, r, s);
      if (options.full_check && st.level == PairLevel::almost)
        detail::check_full_level(profile, st);
      report.pairs.push_back(std::move(st));
    }
  bool all_full = true;
  bool all_almost = true;
  for (std::size_t i = 0; i < lengths.size(); ++i)
    for (std::size_t j = i + 1; j < lengths.size(); ++j) {
      const PairStatus* fwd = report.pair(lengths[j], lengths[i]);
      const PairStatus* rev = report.pair(lengths[i], lengths[j]);
      all_full &= fwd->certifies_full() || rev->certifies_full();
      all_almost &= fwd->certifies_almost() || rev->certifies_almost();
    }
  report.overall = all_full    ? Overall::tb_symmetrical
                   : all_almost ? Overall::almost_only
                                : Overall::neither;
  return report;
}

// ---------------------------------------------------------------------------
// Closed forms for the two classical families, and the total-TB coefficient.
// ---------------------------------------------------------------------------

/// rho_{r,s}(K_n) = (n-s)!/(n-r)! for 3 <= s < r <= n.
inline Rational rho_closed_form_complete(int n, int r, int s) {
  if (!(3 <= s && s < r && r <= n))
    throw std::invalid_argument("rho closed form: need 3 <= s < r <= n");
  return Rational(factorial_big(n - s), factorial_big(n - r));
}

/// rho for K_{m,n} on actual (even) cycle lengths len_s < len_r:
/// (n-s)!(m-s)!/((n-r)!(m-r)!) with r = len_r/2, s = len_s/2.
inline Rational rho_closed_form_bipartite(int m, int n, int len_r, int len_s) {
  if (len_r % 2 != 0 || len_s % 2 != 0)
    throw std::invalid_argument("rho closed form: bipartite cycle lengths are even");
  const int r = len_r / 2;
  const int s = len_s / 2;
  if (!(2 <= s && s < r && r <= std::min(m, n)))
    throw std::invalid_argument("rho closed form: need 2 <= s < r <= min(m,n)");
  return Rational(factorial_big(n - s) * factorial_big(m - s),
                  factorial_big(n - r) * factorial_big(m - r));
}

/// 1 + sum of rho_{r,s} over present lengths r != s, using the reciprocal
/// when only the (s,r) orientation was certified. Requires a TB-symmetrical
/// (or trivial) report and c_s > 0.
inline Rational total_tb_coefficient(const SymmetryReport& report, int s) {
  if (!report.tb_symmetrical())
    throw std::invalid_argument("total_tb_coefficient: report is not TB-symmetrical");
  bool s_present = false;
  for (int len : report.cycle_lengths) s_present |= len == s;
  if (!s_present)
    throw std::invalid_argument("total_tb_coefficient: graph has no s-cycle");
  Rational coefficient(1);
  for (int r : report.cycle_lengths) {
    if (r == s) continue;
    const PairStatus* fwd = report.pair(r, s);
    if (fwd && fwd->level == PairLevel::full) {
      coefficient += *fwd->rho;
      continue;
    }
    const PairStatus* rev = report.pair(s, r);
    if (rev && rev->level == PairLevel::full && *rev->rho != 0) {
      coefficient += Rational(1) / *rev->rho;
      continue;
    }
    throw std::logic_error("total_tb_coefficient: missing certified ratio");
  }
  return coefficient;
}

}  // namespace tbsym
