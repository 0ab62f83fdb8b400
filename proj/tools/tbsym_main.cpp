// tbsym: decide TB-symmetricity of graphs, compute rho invariants, test
// arc transitivity, evaluate front data, and run the census pipeline.
//
// Exit codes: 0 success, 1 usage error, 2 data error (bad input, parse
// errors in a census run).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tbsym/census.hpp"
#include "tbsym/cycles.hpp"
#include "tbsym/graph.hpp"
#include "tbsym/graph6.hpp"
#include "tbsym/json_io.hpp"
#include "tbsym/legendrian.hpp"
#include "tbsym/rational.hpp"
#include "tbsym/symmetry_group.hpp"
#include "tbsym/tb_symmetry.hpp"

namespace {

using tbsym::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

tbsym::Graph graph_from_flags(const std::string& spec, const std::string& g6) {
  if (!spec.empty() && !g6.empty())
    throw UsageError("give either --graph or --g6, not both");
  if (!spec.empty()) return tbsym::named_graph(spec);
  if (!g6.empty()) return tbsym::parse_graph6(g6);
  throw UsageError("a graph is required (--graph or --g6)");
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  json data;
  in >> data;
  return data;
}

void print_graph(const tbsym::Graph& g, bool only_g6, std::ostream& out) {
  if (only_g6) {
    out << tbsym::encode_graph6(g) << "\n";
    return;
  }
  out << "n = " << g.vertex_count() << ", m = " << g.edge_count()
      << ", graph6 = " << tbsym::encode_graph6(g) << "\n";
  out << "edges:";
  for (const auto& [a, b] : g.edges()) out << " " << a << "-" << b;
  out << "\n";
}

void print_report_human(const tbsym::SymmetryReport& report, std::ostream& out) {
  out << "graph6: " << report.graph6 << "\n";
  out << "cycle lengths:";
  for (int r : report.cycle_lengths) out << " " << r;
  out << "\noverall: " << to_string(report.overall) << "\n";
  auto edge = [](tbsym::Edge e) {
    return std::to_string(e.first) + "-" + std::to_string(e.second);
  };
  for (const auto& st : report.pairs) {
    out << "  (" << st.r << "," << st.s << "): " << to_string(st.level);
    if (st.rho) out << "  rho = " << tbsym::rational_to_string(*st.rho);
    if (st.witness) {
      const auto& w = *st.witness;
      switch (w.kind) {
        case tbsym::PairWitness::Kind::edge:
          out << "  witness edge " << edge(w.e1) << " (r:" << w.r_count
              << ", s:" << w.s_count << ")";
          break;
        case tbsym::PairWitness::Kind::corner:
          out << "  witness corner {" << edge(w.e1) << ", " << edge(w.e2)
              << "} (r:" << w.r_count << ", s:" << w.s_count << ")";
          break;
        case tbsym::PairWitness::Kind::cross_pair:
          out << "  witness pair {" << edge(w.e1) << ", " << edge(w.e2) << "} (u:" << w.u
              << " h:" << w.h << " v:" << w.v << " k:" << w.k << ")";
          break;
      }
    }
    out << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"TB-symmetry toolkit for finite simple graphs"};
  app.require_subcommand(1);

  // named
  auto* named = app.add_subcommand("named", "build a named graph");
  std::string named_spec;
  bool named_g6 = false, named_json = false;
  named->add_option("spec", named_spec, "graph spec, e.g. K5, K3,3, C7, Q3, O3, petersen")
      ->required();
  named->add_flag("--g6", named_g6, "print only the graph6 encoding");
  named->add_flag("--json", named_json, "JSON output");

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "decide (almost-)TB-symmetricity");
  std::string classify_spec, classify_g6;
  bool classify_almost_only = false, classify_json = false;
  classify_cmd->add_option("--graph", classify_spec, "named graph spec");
  classify_cmd->add_option("--g6", classify_g6, "graph6 string");
  classify_cmd->add_flag("--almost-only", classify_almost_only,
                         "skip the oriented-pair condition");
  classify_cmd->add_flag("--json", classify_json, "JSON output");

  // census
  auto* census_cmd = app.add_subcommand("census", "classify a stream of graph6 lines");
  std::string census_in;
  int census_nmax = 9, census_workers = 1;
  bool census_json = false, census_almost_only = false, census_keep_trivial = false;
  census_cmd->add_option("--in", census_in, "input file, one graph6 per line")->required();
  census_cmd->add_option("--nmax", census_nmax, "reject graphs above this size");
  census_cmd->add_option("--workers", census_workers, "worker threads");
  census_cmd->add_flag("--json", census_json, "JSONL records plus a summary object");
  census_cmd->add_flag("--almost-only", census_almost_only,
                       "stop at the almost-level conditions");
  census_cmd->add_flag("--keep-trivial", census_keep_trivial,
                       "emit records for single-cycle-length graphs too");

  // arcs
  auto* arcs_cmd = app.add_subcommand("arcs", "automorphisms and s-arc transitivity");
  std::string arcs_spec;
  int arcs_smax = 0;
  bool arcs_json = false;
  arcs_cmd->add_option("--graph", arcs_spec, "named graph spec")->required();
  arcs_cmd->add_option("--smax", arcs_smax, "largest s to test")->required();
  arcs_cmd->add_flag("--json", arcs_json, "JSON output");

  // tb
  auto* tb_cmd = app.add_subcommand("tb", "evaluate a TB spectrum for front data");
  std::string tb_spec, tb_g6, tb_data;
  std::uint64_t tb_seed = 0;
  std::int64_t tb_bound = -1;
  bool tb_json = false;
  tb_cmd->add_option("--graph", tb_spec, "named graph spec");
  tb_cmd->add_option("--g6", tb_g6, "graph6 string");
  tb_cmd->add_option("--data", tb_data, "front data JSON file");
  tb_cmd->add_option("--random-seed", tb_seed, "generate deterministic random data");
  tb_cmd->add_option("--bound", tb_bound, "crossing bound for random data");
  tb_cmd->add_flag("--json", tb_json, "JSON output");

  // fit
  auto* fit_cmd = app.add_subcommand("fit", "solve for front data hitting tb targets");
  std::string fit_spec, fit_g6, fit_targets;
  bool fit_json = false;
  fit_cmd->add_option("--graph", fit_spec, "named graph spec");
  fit_cmd->add_option("--g6", fit_g6, "graph6 string");
  fit_cmd->add_option("--targets", fit_targets, "targets JSON file")->required();
  fit_cmd->add_flag("--json", fit_json, "JSON output");

  // ops
  auto* ops_cmd = app.add_subcommand("ops", "symmetry-preserving graph operations");
  ops_cmd->require_subcommand(1);
  std::string ops_spec, ops_spec2, ops_g6_in, ops_g6_in2;
  int ops_at = 0, ops_at2 = 0, ops_k = 0;
  bool ops_out_g6 = false, ops_json = false;
  auto add_common = [&](CLI::App* cmd, bool two_graphs) {
    cmd->add_option("--graph", ops_spec, "named graph spec");
    cmd->add_option("--g6", ops_g6_in, "graph6 string");
    if (two_graphs) {
      cmd->add_option("--graph2", ops_spec2, "second named graph spec");
      cmd->add_option("--g6-2", ops_g6_in2, "second graph6 string");
    }
    cmd->add_flag("--out-g6", ops_out_g6, "print only the graph6 encoding");
    cmd->add_flag("--json", ops_json, "JSON output");
  };
  auto* pendant_cmd = ops_cmd->add_subcommand("pendant", "attach a pendant vertex");
  pendant_cmd->add_option("--at", ops_at, "attachment vertex")->required();
  add_common(pendant_cmd, false);
  auto* union_cmd = ops_cmd->add_subcommand("union", "disjoint union");
  add_common(union_cmd, true);
  auto* cliquesum_cmd = ops_cmd->add_subcommand("cliquesum", "identify one vertex of each");
  cliquesum_cmd->add_option("--at", ops_at, "vertex in the first graph")->required();
  cliquesum_cmd->add_option("--at2", ops_at2, "vertex in the second graph")->required();
  add_common(cliquesum_cmd, true);
  auto* pathjoin_cmd = ops_cmd->add_subcommand("pathjoin", "join through k fresh vertices");
  pathjoin_cmd->add_option("--at", ops_at, "vertex in the first graph")->required();
  pathjoin_cmd->add_option("--at2", ops_at2, "vertex in the second graph")->required();
  pathjoin_cmd->add_option("--k", ops_k, "number of intermediate vertices")->required();
  add_common(pathjoin_cmd, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error: " << e.what() << "\n";
    std::cerr << app.help() << std::flush;
    return 1;
  }

  std::ostream& out = std::cout;
  try {
    if (*named) {
      const tbsym::Graph g = tbsym::named_graph(named_spec);
      if (named_json) {
        json payload = tbsym::graph_to_json(g);
        payload["spec"] = named_spec;
        out << payload.dump() << "\n";
      } else {
        print_graph(g, named_g6, out);
      }
      return 0;
    }

    if (*classify_cmd) {
      const tbsym::Graph g = graph_from_flags(classify_spec, classify_g6);
      const tbsym::SymmetryReport report =
          tbsym::classify(g, {.full_check = !classify_almost_only});
      if (classify_json)
        out << tbsym::report_to_json(report).dump() << "\n";
      else
        print_report_human(report, out);
      return 0;
    }

    if (*census_cmd) {
      std::ifstream in(census_in);
      if (!in) throw std::invalid_argument("cannot open file: " + census_in);
      std::vector<std::string> lines;
      for (std::string line; std::getline(in, line);) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
      }
      tbsym::CensusOptions opts;
      opts.n_max = census_nmax;
      opts.full_check = !census_almost_only;
      opts.skip_single_cycle_length = !census_keep_trivial;
      const tbsym::CensusResult result = tbsym::census_stream(lines, opts, census_workers);
      if (census_json) {
        for (const auto& record : result.records)
          out << tbsym::census_record_to_json(record).dump() << "\n";
        out << tbsym::census_summary_to_json(result.summary).dump() << "\n";
      } else {
        out << "lines: " << result.summary.lines
            << ", parse errors: " << result.summary.parse_errors << "\n";
        for (const auto& [n, counts] : result.summary.per_n)
          out << "n=" << n << "  full: " << counts.full
              << "  almost-only: " << counts.almost_only << "  trivial: " << counts.trivial
              << "  fail: " << counts.fail << "  filtered: " << counts.filtered << "\n";
        out << "survivors:";
        for (const auto& g6 : result.summary.survivors) out << " " << g6;
        out << "\n";
      }
      return result.summary.parse_errors > 0 ? 2 : 0;
    }

    if (*arcs_cmd) {
      const tbsym::Graph g = tbsym::named_graph(arcs_spec);
      const tbsym::TransitivityProfile profile = tbsym::transitivity_profile(g, arcs_smax);
      if (arcs_json) {
        json payload = tbsym::transitivity_to_json(profile);
        payload["graph6"] = tbsym::encode_graph6(g);
        out << payload.dump() << "\n";
      } else {
        out << "|Aut| = " << profile.group_order
            << ", vertex-transitive: " << (profile.vertex_transitive ? "yes" : "no")
            << ", edge-transitive: " << (profile.edge_transitive ? "yes" : "no") << "\n";
        for (const auto& entry : profile.per_s)
          out << "  " << entry.s << "-arc transitive: " << (entry.transitive ? "yes" : "no")
              << (entry.vacuous ? " (vacuous: no such arcs)" : "") << "\n";
      }
      return 0;
    }

    if (*tb_cmd) {
      const tbsym::Graph g = graph_from_flags(tb_spec, tb_g6);
      tbsym::FrontData data(g);
      if (!tb_data.empty()) {
        data = tbsym::front_data_from_json(g, load_json_file(tb_data));
      } else if (tb_cmd->count("--random-seed") > 0) {
        if (tb_bound < 0) throw UsageError("--random-seed requires --bound");
        data = tbsym::random_front_data(g, tb_seed, tb_bound);
      } else {
        throw UsageError("front data required (--data or --random-seed with --bound)");
      }
      const tbsym::TbSpectrum spectrum = tbsym::tb_spectrum(g, data);
      const tbsym::SymmetryReport report = tbsym::classify(g);
      const tbsym::ProportionalityResult checks =
          tbsym::verify_proportionality(g, data, report);
      if (tb_json) {
        json payload = tbsym::tb_spectrum_to_json(spectrum);
        payload["graph6"] = tbsym::encode_graph6(g);
        payload["overall"] = to_string(report.overall);
        payload["proportionality"] = tbsym::proportionality_to_json(checks);
        out << payload.dump() << "\n";
      } else {
        out << "graph6: " << tbsym::encode_graph6(g) << "\n";
        for (const auto& [r, value] : spectrum.per_length)
          out << "TB_" << r << " = " << tbsym::rational_to_string(value) << "\n";
        out << "total = " << tbsym::rational_to_string(spectrum.total) << "\n";
        out << "proportionality checks " << (checks.all_ok ? "passed" : "FAILED") << "\n";
      }
      return 0;
    }

    if (*fit_cmd) {
      const tbsym::Graph g = graph_from_flags(fit_spec, fit_g6);
      const auto targets = tbsym::fit_targets_from_json(load_json_file(fit_targets));
      const tbsym::FitResult result = tbsym::fit_front_data(g, targets);
      if (fit_json) {
        out << tbsym::fit_result_to_json(result).dump() << "\n";
      } else if (result.feasible) {
        out << "feasible; cusps nonnegative integers: "
            << (result.nonneg_integer_cusps ? "yes" : "no") << "\n";
      } else {
        out << "infeasible; certificate over " << result.certificate->multipliers.size()
            << " cycles\n";
      }
      return 0;
    }

    if (*ops_cmd) {
      auto first = [&] { return graph_from_flags(ops_spec, ops_g6_in); };
      auto second = [&] { return graph_from_flags(ops_spec2, ops_g6_in2); };
      tbsym::Graph result;
      std::string operation;
      if (*pendant_cmd) {
        result = tbsym::add_pendant(first(), ops_at);
        operation = "pendant";
      } else if (*union_cmd) {
        result = tbsym::disjoint_union(first(), second());
        operation = "union";
      } else if (*cliquesum_cmd) {
        result = tbsym::clique_sum_vertex(first(), ops_at, second(), ops_at2);
        operation = "cliquesum";
      } else {
        result = tbsym::path_join(first(), ops_at, second(), ops_at2, ops_k);
        operation = "pathjoin";
      }
      if (ops_json) {
        json payload = tbsym::graph_to_json(result);
        payload["operation"] = operation;
        out << payload.dump() << "\n";
      } else {
        print_graph(result, ops_out_g6, out);
      }
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
