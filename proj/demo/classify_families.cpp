// Classifies a handful of named graphs and prints their rho tables.

#include <iostream>

#include "tbsym/graph.hpp"
#include "tbsym/tb_symmetry.hpp"

int main() {
  using namespace tbsym;
  for (const char* name : {"K5", "K3,3", "K2,3", "K2,2,2", "petersen", "Q3", "heawood"}) {
    const Graph g = named_graph(name);
    const SymmetryReport report = classify(g);
    std::cout << name << ": " << to_string(report.overall);
    if (report.cycle_lengths.size() > 1) {
      const int base = report.cycle_lengths.front();
      for (int r : report.cycle_lengths) {
        if (r == base) continue;
        if (const auto rho = report.certified_rho(r, base))
          std::cout << "  rho(" << r << "," << base << ")=" << rational_to_string(*rho);
      }
    }
    std::cout << "\n";
  }
  return 0;
}
