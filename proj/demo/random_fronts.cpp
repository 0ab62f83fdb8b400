// Draws random front data on the Petersen graph and shows that every
// per-length TB value is the predicted multiple of TB_5.

#include <iostream>

#include "tbsym/graph.hpp"
#include "tbsym/legendrian.hpp"
#include "tbsym/tb_symmetry.hpp"

int main(int argc, char** argv) {
  using namespace tbsym;
  const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 1;
  const Graph g = petersen_graph();
  const SymmetryReport report = classify(g);
  const FrontData data = random_front_data(g, seed, 5);
  const TbSpectrum spectrum = tb_spectrum(g, data);
  for (const auto& [r, value] : spectrum.per_length)
    std::cout << "TB_" << r << " = " << rational_to_string(value) << "\n";
  std::cout << "total = " << rational_to_string(spectrum.total) << "\n";
  const ProportionalityResult checks = verify_proportionality(g, data, report);
  std::cout << "proportionality: " << (checks.all_ok ? "all checks passed" : "violated")
            << "\n";
  return checks.all_ok ? 0 : 1;
}
