#pragma once

#include "semitsp/experiments.hpp"
#include "semitsp/graph.hpp"

namespace semitsp::testing {

// K3 with w(0,1)=1, w(1,2)=1, w(0,2)=4.
inline CompleteGraph g3() {
  return build_graph({{0, 1, 4}, {1, 0, 1}, {4, 1, 0}});
}

// K4 ring of unit edges with heavy diagonals.
inline CompleteGraph g4() {
  return build_graph({{0, 1, 10, 1}, {1, 0, 1, 10}, {10, 1, 0, 1}, {1, 10, 1, 0}});
}

inline CompleteGraph all_ones(int n) {
  std::vector<std::vector<double>> w(n, std::vector<double>(n, 1.0));
  for (int i = 0; i < n; ++i) w[i][i] = 0.0;
  return build_graph(w);
}

// Four points on a heavy-ended line: beta = 2 but gamma = 8/3.
inline CompleteGraph beta_lt_gamma_witness() {
  return build_graph({{0, 1, 4, 8}, {1, 0, 1, 4}, {4, 1, 0, 1}, {8, 4, 1, 0}});
}

inline CompleteGraph uniform_instance(int n, uint64_t seed) {
  GeneratorConfig cfg;
  cfg.n = n;
  cfg.seed = seed;
  cfg.model = WeightModel::UniformWeights;
  return generate_random_graph(cfg);
}

}  // namespace semitsp::testing
