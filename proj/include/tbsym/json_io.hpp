#pragma once

#include <string>

#include <json.hpp>

#include "tbsym/census.hpp"
#include "tbsym/cycles.hpp"
#include "tbsym/graph.hpp"
#include "tbsym/graph6.hpp"
#include "tbsym/legendrian.hpp"
#include "tbsym/rational.hpp"
#include "tbsym/symmetry_group.hpp"
#include "tbsym/tb_symmetry.hpp"

namespace tbsym {

using json = nlohmann::json;

// Rationals always serialize as strings ("p" or "p/q"), never as floats.

inline json edge_to_json(const Edge& e) { return json::array({e.first, e.second}); }

inline json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back(edge_to_json(e));
  return json{{"n", g.vertex_count()},
              {"m", g.edge_count()},
              {"graph6", encode_graph6(g)},
              {"edges", edges}};
}

inline json witness_to_json(const PairWitness& w) {
  json out;
  switch (w.kind) {
    case PairWitness::Kind::edge:
      out["kind"] = "edge";
      out["edges"] = json::array({edge_to_json(w.e1)});
      out["r_count"] = w.r_count;
      out["s_count"] = w.s_count;
      break;
    case PairWitness::Kind::corner:
      out["kind"] = "corner";
      out["edges"] = json::array({edge_to_json(w.e1), edge_to_json(w.e2)});
      out["r_count"] = w.r_count;
      out["s_count"] = w.s_count;
      break;
    case PairWitness::Kind::cross_pair:
      out["kind"] = "pair";
      out["edges"] = json::array({edge_to_json(w.e1), edge_to_json(w.e2)});
      out["u"] = w.u;
      out["h"] = w.h;
      out["v"] = w.v;
      out["k"] = w.k;
      break;
  }
  if (w.rho) out["rho"] = rational_to_string(*w.rho);
  return out;
}

inline json report_to_json(const SymmetryReport& report) {
  json pairs = json::array();
  for (const auto& st : report.pairs) {
    json entry{{"r", st.r}, {"s", st.s}, {"level", to_string(st.level)}};
    if (st.rho) entry["rho"] = rational_to_string(*st.rho);
    if (st.witness) entry["witness"] = witness_to_json(*st.witness);
    pairs.push_back(std::move(entry));
  }
  // Condensed ratio list against the smallest present length.
  json rho_list = json::array();
  if (report.cycle_lengths.size() > 1) {
    const int base = report.cycle_lengths.front();
    for (int r : report.cycle_lengths) {
      if (r == base) continue;
      const auto rho = report.certified_rho(r, base);
      if (rho) rho_list.push_back(json::array({r, base, rational_to_string(*rho)}));
    }
  }
  return json{{"graph6", report.graph6},
              {"cycle_lengths", report.cycle_lengths},
              {"overall", to_string(report.overall)},
              {"pairs", std::move(pairs)},
              {"rho", std::move(rho_list)}};
}

inline json transitivity_to_json(const TransitivityProfile& profile) {
  json per_s = json::array();
  for (const auto& entry : profile.per_s)
    per_s.push_back(json{{"s", entry.s},
                         {"transitive", entry.transitive},
                         {"vacuous", entry.vacuous}});
  json out{{"group_order", profile.group_order},
           {"vertex_transitive", profile.vertex_transitive},
           {"edge_transitive", profile.edge_transitive},
           {"per_s", std::move(per_s)}};
  if (profile.max_arc_transitivity)
    out["max_arc_transitivity"] = *profile.max_arc_transitivity;
  else
    out["max_arc_transitivity"] = nullptr;
  return out;
}

// Front data serializes with every key listed, edges as sorted pairs:
//   {"w_self": [[edge, k], ...], "w_corner": [[e, e2, k], ...],
//    "w_cross": [[e, e2, k], ...], "c_edge": ..., "c_corner": ...}

inline json front_data_to_json(const FrontData& d) {
  const auto& index = *d.index;
  json out;
  json w_self = json::array(), c_edge = json::array();
  for (int e = 0; e < index.edge_count(); ++e) {
    const Edge edge = index.edges()[static_cast<std::size_t>(e)];
    w_self.push_back(json::array({edge_to_json(edge), d.w_self[static_cast<std::size_t>(e)]}));
    c_edge.push_back(json::array({edge_to_json(edge), d.c_edge[static_cast<std::size_t>(e)]}));
  }
  json w_corner = json::array(), c_corner = json::array();
  for (std::size_t c = 0; c < index.corners().size(); ++c) {
    const json key1 = edge_to_json(index.corner_edges(static_cast<int>(c), false));
    const json key2 = edge_to_json(index.corner_edges(static_cast<int>(c), true));
    w_corner.push_back(json::array({key1, key2, d.w_corner[c]}));
    c_corner.push_back(json::array({key1, key2, d.c_corner[c]}));
  }
  json w_cross = json::array();
  for (std::size_t q = 0; q < index.cross_pairs().size(); ++q)
    w_cross.push_back(json::array({edge_to_json(index.cross_edges(static_cast<int>(q), false)),
                                   edge_to_json(index.cross_edges(static_cast<int>(q), true)),
                                   d.w_cross[q]}));
  out["w_self"] = std::move(w_self);
  out["w_corner"] = std::move(w_corner);
  out["w_cross"] = std::move(w_cross);
  out["c_edge"] = std::move(c_edge);
  out["c_corner"] = std::move(c_corner);
  return out;
}

inline FrontData front_data_from_json(const Graph& g, const json& in) {
  FrontData d(g);
  auto parse_edge = [](const json& j) -> Edge {
    return make_edge(j.at(0).get<int>(), j.at(1).get<int>());
  };
  for (const auto& item : in.at("w_self"))
    d.at_self(parse_edge(item.at(0))) = item.at(1).get<std::int64_t>();
  for (const auto& item : in.at("w_corner"))
    d.at_corner(parse_edge(item.at(0)), parse_edge(item.at(1))) =
        item.at(2).get<std::int64_t>();
  for (const auto& item : in.at("w_cross"))
    d.at_cross(parse_edge(item.at(0)), parse_edge(item.at(1))) =
        item.at(2).get<std::int64_t>();
  for (const auto& item : in.at("c_edge")) {
    const std::int64_t value = item.at(1).get<std::int64_t>();
    if (value < 0) throw std::invalid_argument("front data: negative cusp count");
    d.cusp_edge(parse_edge(item.at(0))) = value;
  }
  for (const auto& item : in.at("c_corner")) {
    const std::int64_t value = item.at(2).get<std::int64_t>();
    if (value < 0) throw std::invalid_argument("front data: negative cusp count");
    d.cusp_corner(parse_edge(item.at(0)), parse_edge(item.at(1))) = value;
  }
  return d;
}

inline json rational_front_data_to_json(const RationalFrontData& d) {
  const auto& index = *d.index;
  json out;
  json w_self = json::array(), c_edge = json::array();
  for (int e = 0; e < index.edge_count(); ++e) {
    const Edge edge = index.edges()[static_cast<std::size_t>(e)];
    w_self.push_back(json::array(
        {edge_to_json(edge), rational_to_string(d.w_self[static_cast<std::size_t>(e)])}));
    c_edge.push_back(json::array(
        {edge_to_json(edge), rational_to_string(d.c_edge[static_cast<std::size_t>(e)])}));
  }
  json w_corner = json::array(), c_corner = json::array();
  for (std::size_t c = 0; c < index.corners().size(); ++c) {
    const json key1 = edge_to_json(index.corner_edges(static_cast<int>(c), false));
    const json key2 = edge_to_json(index.corner_edges(static_cast<int>(c), true));
    w_corner.push_back(json::array({key1, key2, rational_to_string(d.w_corner[c])}));
    c_corner.push_back(json::array({key1, key2, rational_to_string(d.c_corner[c])}));
  }
  json w_cross = json::array();
  for (std::size_t q = 0; q < index.cross_pairs().size(); ++q)
    w_cross.push_back(json::array({edge_to_json(index.cross_edges(static_cast<int>(q), false)),
                                   edge_to_json(index.cross_edges(static_cast<int>(q), true)),
                                   rational_to_string(d.w_cross[q])}));
  out["w_self"] = std::move(w_self);
  out["w_corner"] = std::move(w_corner);
  out["w_cross"] = std::move(w_cross);
  out["c_edge"] = std::move(c_edge);
  out["c_corner"] = std::move(c_corner);
  return out;
}

inline json tb_spectrum_to_json(const TbSpectrum& spectrum) {
  json per_length = json::object();
  for (const auto& [r, value] : spectrum.per_length)
    per_length[std::to_string(r)] = rational_to_string(value);
  return json{{"per_length", std::move(per_length)},
              {"total", rational_to_string(spectrum.total)}};
}

inline json proportionality_to_json(const ProportionalityResult& result) {
  json checks = json::array();
  for (const auto& check : result.pair_checks)
    checks.push_back(json{{"r", check.r},
                          {"s", check.s},
                          {"rho", rational_to_string(check.rho)},
                          {"lhs", rational_to_string(check.lhs)},
                          {"rhs", rational_to_string(check.rhs)},
                          {"ok", check.ok}});
  json out{{"pair_checks", std::move(checks)}, {"all_ok", result.all_ok}};
  if (result.total_check) {
    const auto& total = *result.total_check;
    out["total_check"] = json{{"s", total.s},
                              {"coefficient", rational_to_string(total.coefficient)},
                              {"tb_s", rational_to_string(total.tb_s)},
                              {"total", rational_to_string(total.total)},
                              {"expected", rational_to_string(total.expected)},
                              {"ok", total.ok}};
  } else {
    out["total_check"] = nullptr;
  }
  return out;
}

inline json fit_result_to_json(const FitResult& result) {
  json out{{"feasible", result.feasible}};
  if (result.feasible) {
    out["solution"] = rational_front_data_to_json(*result.solution);
    out["cusps_nonneg_integer"] = result.nonneg_integer_cusps;
    if (result.integral_solution)
      out["front_data"] = front_data_to_json(*result.integral_solution);
  }
  if (result.certificate) {
    json multipliers = json::array();
    for (const auto& [cycle, value] : result.certificate->multipliers)
      multipliers.push_back(json::array({cycle.vertices, rational_to_string(value)}));
    out["certificate"] = std::move(multipliers);
  }
  return out;
}

inline json census_record_to_json(const CensusRecord& record) {
  if (record.parse_error)
    return json{{"error", record.error},
                {"line", record.line_number},
                {"input", record.input}};
  json rho_table = json::array();
  for (const auto& [r, s, rho] : record.rho_table)
    rho_table.push_back(json::array({r, s, rational_to_string(rho)}));
  json out{{"graph6", record.graph6},
           {"n", record.n},
           {"m", record.m},
           {"cycle_lengths", record.cycle_lengths},
           {"status", to_string(record.status)},
           {"rho_table", std::move(rho_table)}};
  if (record.matched_family) out["matched_family"] = *record.matched_family;
  return out;
}

inline json census_summary_to_json(const CensusSummary& summary) {
  json per_n = json::object();
  for (const auto& [n, counts] : summary.per_n)
    per_n[std::to_string(n)] = json{{"full", counts.full},
                                    {"almost-only", counts.almost_only},
                                    {"trivial", counts.trivial},
                                    {"fail", counts.fail},
                                    {"filtered", counts.filtered}};
  return json{{"summary",
               json{{"lines", summary.lines},
                    {"parse_errors", summary.parse_errors},
                    {"per_n", std::move(per_n)},
                    {"survivors", summary.survivors}}}};
}

/// Targets file for the fit subcommand: {"targets": [[[v0,v1,...], "p/q"], ...]}.
inline std::vector<std::pair<Cycle, Rational>> fit_targets_from_json(const json& in) {
  std::vector<std::pair<Cycle, Rational>> targets;
  for (const auto& item : in.at("targets")) {
    Cycle cycle;
    for (const auto& v : item.at(0)) cycle.vertices.push_back(v.get<int>());
    const json& value = item.at(1);
    Rational tb = value.is_string() ? parse_rational(value.get<std::string>())
                                    : Rational(value.get<std::int64_t>());
    targets.push_back({std::move(cycle), std::move(tb)});
  }
  return targets;
}

}  // namespace tbsym
