#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "semitsp/metrics.hpp"

using namespace semitsp;
using namespace semitsp::testing;

TEST_CASE("floyd_warshall on the fixtures") {
  const auto sp3 = floyd_warshall(g3());
  CHECK(sp3.distance(0, 2) == 2.0);
  CHECK(sp3.path(0, 2) == Walk{0, 1, 2});

  const auto sp4 = floyd_warshall(g4());
  CHECK(sp4.distance(0, 2) == 2.0);
  CHECK(sp4.path(0, 2) == Walk{0, 1, 2});  // tie against 0-3-2 resolved toward 1

  const auto sp1 = floyd_warshall(all_ones(5));
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) CHECK(sp1.distance(i, j) == (i == j ? 0.0 : 1.0));
}

TEST_CASE("shortest paths dominate direct edges and satisfy the triangle inequality") {
  for (uint64_t seed = 0; seed < 10; ++seed) {
    const CompleteGraph g = uniform_instance(8, 1000 + seed);
    const auto sp = floyd_warshall(g);
    for (int i = 0; i < 8; ++i) {
      CHECK(sp.distance(i, i) == 0.0);
      for (int j = 0; j < 8; ++j) {
        CHECK(sp.distance(i, j) == sp.distance(j, i));
        CHECK(sp.distance(i, j) <= g.weight(i, j));
        for (int k = 0; k < 8; ++k)
          CHECK(sp.distance(i, j) <= sp.distance(i, k) + sp.distance(k, j) + 1e-12);
        if (i != j) {
          const Walk p = sp.path(i, j);
          double w = 0.0;
          for (size_t s = 0; s + 1 < p.size(); ++s) w += g.weight(p[s], p[s + 1]);
          CHECK(w == doctest::Approx(sp.distance(i, j)).epsilon(1e-9));
        }
      }
    }
  }
}

TEST_CASE("beta and gamma on the fixtures") {
  CHECK(compute_beta(all_ones(5)) == 1.0);
  CHECK(compute_beta(g3()) == 2.0);
  CHECK(compute_beta(g4()) == 5.0);
  CHECK(compute_gamma(all_ones(5)) == 1.0);
  CHECK(compute_gamma(g3()) == 2.0);
  CHECK(compute_gamma(g4()) == 5.0);
}

TEST_CASE("classify assembles a consistent report") {
  const MetricReport ones = classify(all_ones(5));
  CHECK(ones.beta == 1.0);
  CHECK(ones.gamma == 1.0);
  CHECK(ones.is_metric);

  const MetricReport r3 = classify(g3());
  CHECK(r3.beta == 2.0);
  CHECK(r3.gamma == 2.0);
  CHECK_FALSE(r3.is_metric);

  const MetricReport r4 = classify(g4());
  CHECK(r4.beta == 5.0);
  CHECK(r4.gamma == 5.0);
  CHECK_FALSE(r4.is_metric);
}

TEST_CASE("beta and gamma match the exhaustive oracles") {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    const int n = 4 + static_cast<int>(seed % 4);  // 4..7
    const CompleteGraph g = uniform_instance(n, 7000 + seed);
    const double beta = compute_beta(g);
    const double gamma = compute_gamma(g);
    CHECK(beta == doctest::Approx(beta_oracle(g)).epsilon(1e-12));
    CHECK(gamma == doctest::Approx(gamma_oracle(g)).epsilon(1e-12));
    CHECK(beta <= gamma + 1e-12);

    // Eq-style tightness: the constants are attained.
    bool beta_attained = false;
    for (int x = 0; x < n && !beta_attained; ++x)
      for (int y = 0; y < n && !beta_attained; ++y)
        for (int z = 0; z < n && !beta_attained; ++z) {
          if (x == y || y == z || x == z) continue;
          beta_attained = g.weight(x, z) >= beta * (g.weight(x, y) + g.weight(y, z)) - 1e-12;
        }
    CHECK(beta_attained);
  }
}

TEST_CASE("a witness separates beta from gamma") {
  const CompleteGraph g = beta_lt_gamma_witness();
  CHECK(compute_beta(g) == doctest::Approx(2.0));
  CHECK(compute_gamma(g) == doctest::Approx(8.0 / 3.0));
  CHECK(beta_oracle(g) == doctest::Approx(2.0));
  CHECK(gamma_oracle(g) == doctest::Approx(8.0 / 3.0));
  CHECK(compute_beta(g) < compute_gamma(g));
}

TEST_CASE("euclidean instances are metric") {
  GeneratorConfig cfg;
  cfg.n = 10;
  cfg.seed = 5;
  cfg.model = WeightModel::EuclideanPoints;
  const MetricReport r = classify(generate_random_graph(cfg));
  CHECK(r.is_metric);
  CHECK(r.beta == doctest::Approx(1.0));
  CHECK(r.gamma == doctest::Approx(1.0));
}
