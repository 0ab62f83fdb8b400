#include <algorithm>
#include <numeric>
#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "tbsym/cycles.hpp"
#include "tbsym/graph.hpp"
#include "tbsym/symmetry_group.hpp"
#include "tbsym/tb_symmetry.hpp"

using namespace tbsym;

TEST_CASE("check_pair on K4") {
  const auto profile = incidence_profile(complete_graph(4));
  const PairStatus st = check_pair(profile, 4, 3, true);
  CHECK(st.level == PairLevel::full);
  CHECK(st.rho == Rational(1));
  CHECK_FALSE(st.witness.has_value());
}

TEST_CASE("check_pair with an absent length") {
  const auto profile = incidence_profile(cycle_graph(5));
  const PairStatus st = check_pair(profile, 3, 5, true);
  CHECK(st.level == PairLevel::full);
  CHECK(st.rho == Rational(0));

  // Reverse orientation cannot hold: 5-cycles exist but no 3-cycles do.
  const PairStatus rev = check_pair(profile, 5, 3, true);
  CHECK(rev.level == PairLevel::fail_condition_1);

  const PairStatus none = check_pair(profile, 4, 6, true);
  CHECK(none.level == PairLevel::trivial_no_cycles);
  CHECK(none.rho == Rational(0));

  CHECK_THROWS_AS(check_pair(profile, 3, 3, true), std::invalid_argument);
  CHECK_THROWS_AS(check_pair(profile, 2, 5, true), std::invalid_argument);
}

TEST_CASE("K222 fails condition 2 with a corner witness") {
  const auto profile = incidence_profile(complete_multipartite_graph({2, 2, 2}));
  const PairStatus st = check_pair(profile, 4, 3, false);
  CHECK(st.level == PairLevel::fail_condition_2);
  REQUIRE(st.witness.has_value());
  CHECK(st.witness->kind == PairWitness::Kind::corner);
  CHECK_FALSE(st.rho.has_value());
}

TEST_CASE("reciprocity") {
  std::mt19937 rng(41);
  std::vector<Graph> corpus = {complete_graph(5), complete_graph(6), petersen_graph(),
                               hypercube_graph(3), complete_bipartite_graph(3, 4)};
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 4);
    std::vector<Edge> edges;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (rng() % 2) edges.push_back({a, b});
    corpus.push_back(Graph(n, edges));
  }
  for (const Graph& g : corpus) {
    const auto profile = incidence_profile(g);
    for (int r : profile.lengths())
      for (int s : profile.lengths()) {
        if (r == s) continue;
        for (bool want_full : {false, true}) {
          const PairStatus fwd = check_pair(profile, r, s, want_full);
          if (!fwd.rho || *fwd.rho == 0) continue;
          if (fwd.level != PairLevel::almost && fwd.level != PairLevel::full) continue;
          const PairStatus rev = check_pair(profile, s, r, want_full);
          CHECK(rev.level == fwd.level);
          REQUIRE(rev.rho.has_value());
          CHECK(*rev.rho == Rational(1) / *fwd.rho);
        }
      }
  }
}

TEST_CASE("classify petersen") {
  const SymmetryReport report = classify(petersen_graph());
  CHECK(report.overall == Overall::tb_symmetrical);
  CHECK(report.cycle_lengths == std::vector<int>{5, 6, 8, 9});
  CHECK(report.certified_rho(6, 5) == Rational(1));
  CHECK(report.certified_rho(8, 5) == Rational(2));
  CHECK(report.certified_rho(9, 5) == Rational(3));
}

TEST_CASE("classify Q3 is almost-only with a condition-3 witness") {
  const SymmetryReport report = classify(hypercube_graph(3));
  CHECK(report.overall == Overall::almost_only);
  bool found_witness = false;
  for (const auto& st : report.pairs)
    if (st.level == PairLevel::fail_condition_3) {
      found_witness = true;
      REQUIRE(st.witness.has_value());
      CHECK(st.witness->kind == PairWitness::Kind::cross_pair);
      CHECK(st.witness->rho.has_value());
    }
  CHECK(found_witness);
}

TEST_CASE("classify trivial single-length graphs") {
  const SymmetryReport report = classify(complete_bipartite_graph(2, 3));
  CHECK(report.overall == Overall::trivial);
  CHECK(report.cycle_lengths == std::vector<int>{4});
  CHECK(report.tb_symmetrical());

  CHECK(classify(build_graph(3, {{0, 1}, {1, 2}})).overall == Overall::trivial);
  CHECK(classify(Graph(0, {})).overall == Overall::trivial);
}

TEST_CASE("classify K_n and K_{m,n} in range") {
  for (int n = 4; n <= 7; ++n)
    CHECK(classify(complete_graph(n)).overall == Overall::tb_symmetrical);
  for (int m = 2; m <= 4; ++m)
    for (int n = m; n <= 4; ++n) {
      const SymmetryReport report = classify(complete_bipartite_graph(m, n));
      CHECK(report.tb_symmetrical());
    }
}

TEST_CASE("classify is isomorphism-invariant") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 8; ++trial) {
    const int n = 5 + static_cast<int>(rng() % 3);
    std::vector<Edge> edges;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (rng() % 2) edges.push_back({a, b});
    const Graph g(n, edges);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> relabeled;
    for (const auto& [a, b] : edges)
      relabeled.push_back(make_edge(perm[static_cast<std::size_t>(a)],
                                    perm[static_cast<std::size_t>(b)]));
    const SymmetryReport lhs = classify(g);
    const SymmetryReport rhs = classify(Graph(n, relabeled));
    CHECK(lhs.overall == rhs.overall);
    REQUIRE(lhs.pairs.size() == rhs.pairs.size());
    for (std::size_t i = 0; i < lhs.pairs.size(); ++i) {
      CHECK(lhs.pairs[i].level == rhs.pairs[i].level);
      CHECK(lhs.pairs[i].rho == rhs.pairs[i].rho);
    }
  }
}

TEST_CASE("edge-transitive rho equals r c_r / (s c_s)") {
  for (const char* name : {"K5", "K3,3", "petersen", "Q3", "heawood"}) {
    const Graph g = named_graph(name);
    if (!transitivity_profile(g, 0).edge_transitive) continue;
    const SymmetryReport report = classify(g);
    if (!report.almost_tb_symmetrical()) continue;
    const auto spectrum = cycle_spectrum(g);
    for (const auto& st : report.pairs) {
      const auto rho = report.certified_rho(st.r, st.s);
      if (!rho) continue;
      const Rational expected =
          Rational(st.r) * Rational(spectrum.at(st.r)) /
          (Rational(st.s) * Rational(spectrum.at(st.s)));
      CHECK(*rho == expected);
    }
  }
}

TEST_CASE("rho closed forms") {
  CHECK(rho_closed_form_complete(6, 5, 3) == Rational(6));
  CHECK(rho_closed_form_complete(4, 4, 3) == Rational(1));
  CHECK(rho_closed_form_bipartite(3, 4, 6, 4) == Rational(2));
  CHECK_THROWS_AS(rho_closed_form_complete(4, 5, 3), std::invalid_argument);
  CHECK_THROWS_AS(rho_closed_form_complete(6, 3, 3), std::invalid_argument);
  CHECK_THROWS_AS(rho_closed_form_bipartite(3, 4, 5, 4), std::invalid_argument);
  CHECK_THROWS_AS(rho_closed_form_bipartite(3, 4, 8, 4), std::invalid_argument);

  // Against the certified values from counting.
  for (int n = 4; n <= 7; ++n) {
    const SymmetryReport report = classify(complete_graph(n));
    for (int s = 3; s < n; ++s)
      for (int r = s + 1; r <= n; ++r)
        CHECK(report.certified_rho(r, s) == rho_closed_form_complete(n, r, s));
  }
}

TEST_CASE("total tb coefficient") {
  CHECK(total_tb_coefficient(classify(complete_graph(4)), 3) == Rational(2));
  CHECK(total_tb_coefficient(classify(complete_graph(5)), 3) == Rational(5));
  CHECK(total_tb_coefficient(classify(complete_bipartite_graph(3, 3)), 4) == Rational(2));
  CHECK(total_tb_coefficient(classify(complete_bipartite_graph(2, 3)), 4) == Rational(1));

  CHECK_THROWS_AS(total_tb_coefficient(classify(complete_graph(5)), 6), std::invalid_argument);
  CHECK_THROWS_AS(total_tb_coefficient(classify(hypercube_graph(3)), 4), std::invalid_argument);
}
