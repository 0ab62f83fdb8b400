#include <algorithm>

#include <catch2/catch_amalgamated.hpp>

#include "tbsym/cycles.hpp"
#include "tbsym/graph.hpp"
#include "tbsym/legendrian.hpp"
#include "tbsym/tb_symmetry.hpp"

using namespace tbsym;

TEST_CASE("cycle_tb on elementary data") {
  const Graph k4 = complete_graph(4);
  const FrontData zero(k4);
  for (const auto& c : enumerate_cycles(k4)) CHECK(cycle_tb(k4, zero, c) == Rational(0));

  FrontData cusps(k4);
  cusps.cusp_edge({0, 1}) = 2;
  for (const auto& c : enumerate_cycles(k4)) {
    const bool through = std::find(c.vertices.begin(), c.vertices.end(), 0) != c.vertices.end() &&
                         std::find(c.vertices.begin(), c.vertices.end(), 1) != c.vertices.end() &&
                         [&] {
                           for (int i = 0; i < c.length(); ++i) {
                             const Edge e = make_edge(c.vertices[static_cast<std::size_t>(i)],
                                                      c.vertices[static_cast<std::size_t>((i + 1) % c.length())]);
                             if (e == Edge{0, 1}) return true;
                           }
                           return false;
                         }();
    CHECK(cycle_tb(k4, cusps, c) == (through ? Rational(-1) : Rational(0)));
  }
}

TEST_CASE("cycle_tb respects the sigma sign rule") {
  const Graph square = cycle_graph(4);
  FrontData d(square);
  d.at_cross({0, 1}, {2, 3}) = 1;
  CHECK(cycle_tb(square, d, std::vector<int>{0, 1, 2, 3}) == Rational(1));

  // On K4 the same pair is traversed with the opposite orientation class by
  // the cycle 0-1-3-2.
  const Graph k4 = complete_graph(4);
  FrontData dk(k4);
  dk.at_cross({0, 1}, {2, 3}) = 1;
  CHECK(cycle_tb(k4, dk, std::vector<int>{0, 1, 2, 3}) == Rational(1));
  CHECK(cycle_tb(k4, dk, std::vector<int>{0, 1, 3, 2}) == Rational(-1));
}

TEST_CASE("cycle_tb is orientation and rotation invariant") {
  const Graph petersen = petersen_graph();
  const FrontData d = random_front_data(petersen, 99, 4);
  for (const auto& c : enumerate_cycles(petersen, 6)) {
    const Rational reference = cycle_tb(petersen, d, c);
    std::vector<int> rotated = c.vertices;
    for (int shift = 0; shift < c.length(); ++shift) {
      std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
      CHECK(cycle_tb(petersen, d, rotated) == reference);
      std::vector<int> reflected(rotated.rbegin(), rotated.rend());
      CHECK(cycle_tb(petersen, d, reflected) == reference);
    }
  }
}

TEST_CASE("cycle_tb validates its inputs") {
  const Graph k4 = complete_graph(4);
  const FrontData other(cycle_graph(4));
  CHECK_THROWS_AS(cycle_tb(k4, other, std::vector<int>{0, 1, 2}), std::invalid_argument);
  const FrontData d(k4);
  CHECK_THROWS_AS(cycle_tb(k4, d, std::vector<int>{0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(cycle_tb(k4, d, std::vector<int>{0, 1, 0}), std::invalid_argument);
  const Graph c5 = cycle_graph(5);
  const FrontData d5(c5);
  CHECK_THROWS_AS(cycle_tb(c5, d5, std::vector<int>{0, 1, 3}), std::invalid_argument);
}

TEST_CASE("cycle_tb is linear in the data") {
  const Graph g = complete_bipartite_graph(3, 3);
  for (int seed = 0; seed < 5; ++seed) {
    const FrontData d1 = random_front_data(g, 2 * seed, 4);
    const FrontData d2 = random_front_data(g, 2 * seed + 1, 4);
    FrontData sum(g);
    for (std::size_t i = 0; i < sum.w_self.size(); ++i) sum.w_self[i] = d1.w_self[i] + d2.w_self[i];
    for (std::size_t i = 0; i < sum.w_corner.size(); ++i) sum.w_corner[i] = d1.w_corner[i] + d2.w_corner[i];
    for (std::size_t i = 0; i < sum.w_cross.size(); ++i) sum.w_cross[i] = d1.w_cross[i] + d2.w_cross[i];
    for (std::size_t i = 0; i < sum.c_edge.size(); ++i) sum.c_edge[i] = d1.c_edge[i] + d2.c_edge[i];
    for (std::size_t i = 0; i < sum.c_corner.size(); ++i) sum.c_corner[i] = d1.c_corner[i] + d2.c_corner[i];
    for (const auto& c : enumerate_cycles(g))
      CHECK(cycle_tb(g, sum, c) == cycle_tb(g, d1, c) + cycle_tb(g, d2, c));
  }
}

TEST_CASE("tb_spectrum sums cycle_tb") {
  const Graph k4 = complete_graph(4);
  CHECK(tb_spectrum(k4, FrontData(k4)).total == Rational(0));
  const FrontData d = random_front_data(k4, 5, 3);
  const TbSpectrum spectrum = tb_spectrum(k4, d);
  Rational by_hand_3(0), by_hand_4(0);
  for (const auto& c : enumerate_cycles(k4))
    (c.length() == 3 ? by_hand_3 : by_hand_4) += cycle_tb(k4, d, c);
  CHECK(spectrum.per_length.at(3) == by_hand_3);
  CHECK(spectrum.per_length.at(4) == by_hand_4);
  CHECK(spectrum.total == by_hand_3 + by_hand_4);
}

TEST_CASE("random_front_data is deterministic and bounded") {
  const Graph g = petersen_graph();
  const FrontData a = random_front_data(g, 42, 5);
  const FrontData b = random_front_data(g, 42, 5);
  CHECK(a.w_self == b.w_self);
  CHECK(a.w_corner == b.w_corner);
  CHECK(a.w_cross == b.w_cross);
  CHECK(a.c_edge == b.c_edge);
  CHECK(a.c_corner == b.c_corner);
  CHECK(random_front_data(g, 43, 5).w_self != a.w_self);

  for (auto w : a.w_self) { CHECK(w >= -5); CHECK(w <= 5); }
  for (auto c : a.c_edge) { CHECK(c >= 0); CHECK(c <= 10); }

  const FrontData zero = random_front_data(g, 7, 0);
  for (auto w : zero.w_self) CHECK(w == 0);
  for (auto w : zero.w_cross) CHECK(w == 0);
  for (auto c : zero.c_corner) CHECK(c == 0);
}

TEST_CASE("proportionality holds on certified graphs") {
  const Graph k4 = complete_graph(4);
  const SymmetryReport k4_report = classify(k4);
  for (int seed = 0; seed < 100; ++seed) {
    const FrontData d = random_front_data(k4, seed, 5);
    const TbSpectrum spectrum = tb_spectrum(k4, d);
    CHECK(spectrum.per_length.at(4) == spectrum.per_length.at(3));
    const ProportionalityResult result = verify_proportionality(k4, d, k4_report);
    CHECK(result.all_ok);
    REQUIRE(result.total_check.has_value());
    CHECK(result.total_check->coefficient == Rational(2));
  }

  const Graph petersen = petersen_graph();
  const SymmetryReport petersen_report = classify(petersen);
  for (int seed = 0; seed < 25; ++seed) {
    const FrontData d = random_front_data(petersen, seed, 5);
    const TbSpectrum spectrum = tb_spectrum(petersen, d);
    CHECK(spectrum.per_length.at(8) == Rational(2) * spectrum.per_length.at(5));
    CHECK(spectrum.per_length.at(9) == Rational(3) * spectrum.per_length.at(5));
    CHECK(verify_proportionality(petersen, d, petersen_report).all_ok);
  }
}

TEST_CASE("adversarial data breaks the almost-only cube") {
  const Graph q3 = hypercube_graph(3);
  const SymmetryReport report = classify(q3);
  const PairStatus* failing = nullptr;
  for (const auto& st : report.pairs)
    if (st.level == PairLevel::fail_condition_3) {
      failing = &st;
      break;
    }
  REQUIRE(failing != nullptr);
  FrontData d(q3);
  d.at_cross(failing->witness->e1, failing->witness->e2) = 1;
  const TbSpectrum spectrum = tb_spectrum(q3, d);
  auto tb_of = [&](int r) {
    const auto it = spectrum.per_length.find(r);
    return it == spectrum.per_length.end() ? Rational(0) : it->second;
  };
  CHECK(tb_of(failing->r) != *failing->witness->rho * tb_of(failing->s));
}

TEST_CASE("fit_front_data") {
  const Graph k4 = complete_graph(4);
  const auto cycles = enumerate_cycles(k4);

  SECTION("all-zero targets are feasible with zero data") {
    std::vector<std::pair<Cycle, Rational>> targets;
    for (const auto& c : cycles) targets.push_back({c, Rational(0)});
    const FitResult result = fit_front_data(k4, targets);
    REQUIRE(result.feasible);
    for (const auto& c : cycles) CHECK(cycle_tb(k4, *result.solution, c) == Rational(0));
    CHECK(result.nonneg_integer_cusps);
  }

  SECTION("single pentagon target") {
    const Graph c5 = cycle_graph(5);
    const std::vector<std::pair<Cycle, Rational>> targets = {{Cycle{{0, 1, 2, 3, 4}}, Rational(-3)}};
    const FitResult result = fit_front_data(c5, targets);
    REQUIRE(result.feasible);
    CHECK(cycle_tb(c5, *result.solution, targets[0].first) == Rational(-3));
  }

  SECTION("unknown cycle key") {
    CHECK_THROWS_AS(fit_front_data(k4, {{Cycle{{0, 1, 2, 5}}, Rational(0)}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(fit_front_data(k4, {{Cycle{{1, 0, 2}}, Rational(0)}}),
                    std::invalid_argument);  // not canonical
  }

  SECTION("round trip on in-span targets") {
    const Graph g = complete_bipartite_graph(3, 3);
    for (int seed = 0; seed < 5; ++seed) {
      const FrontData d = random_front_data(g, seed, 3);
      std::vector<std::pair<Cycle, Rational>> targets;
      for (const auto& c : enumerate_cycles(g)) targets.push_back({c, cycle_tb(g, d, c)});
      const FitResult result = fit_front_data(g, targets);
      REQUIRE(result.feasible);
      for (const auto& [c, value] : targets) CHECK(cycle_tb(g, *result.solution, c) == value);
    }
  }

  SECTION("certificates are exact") {
    // K4 forces TB_4 = TB_3; these targets give TB_3 = -4, TB_4 = 0.
    std::vector<std::pair<Cycle, Rational>> targets;
    for (const auto& c : cycles)
      targets.push_back({c, c.length() == 3 ? Rational(-1)
                            : c == Cycle{{0, 1, 3, 2}} ? Rational(2)
                                                       : Rational(-1)});
    const FitResult result = fit_front_data(k4, targets);
    REQUIRE_FALSE(result.feasible);
    REQUIRE(result.certificate.has_value());
    CHECK_FALSE(result.certificate->multipliers.empty());
    // y * rows = 0 but y * targets != 0: evaluate y against any data in span.
    Rational against_targets(0);
    for (const auto& [cycle, mult] : result.certificate->multipliers) {
      for (const auto& [target_cycle, value] : targets)
        if (target_cycle == cycle) against_targets += mult * value;
    }
    CHECK(against_targets != 0);
    for (int seed = 0; seed < 5; ++seed) {
      const FrontData d = random_front_data(k4, seed, 3);
      Rational combination(0);
      for (const auto& [cycle, mult] : result.certificate->multipliers)
        combination += mult * cycle_tb(k4, d, cycle);
      CHECK(combination == Rational(0));
    }
  }
}
