#include <algorithm>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "semitsp/approx.hpp"
#include "semitsp/exact.hpp"
#include "semitsp/matching.hpp"
#include "semitsp/spanning.hpp"

using namespace semitsp;
using namespace semitsp::testing;

namespace {

std::vector<VertexId> mst_odd(const CompleteGraph& g, const Tree& t) {
  std::vector<int> deg(g.size(), 0);
  for (const Edge& e : t.edges) {
    ++deg[e.a];
    ++deg[e.b];
  }
  std::vector<VertexId> odd;
  for (int v = 0; v < g.size(); ++v)
    if (deg[v] % 2) odd.push_back(v);
  return odd;
}

bool cycle_contains_edge(const std::vector<VertexId>& order, const Edge& e) {
  for (size_t i = 0; i < order.size(); ++i)
    if (Edge(order[i], order[(i + 1) % order.size()]) == e) return true;
  return false;
}

}  // namespace

TEST_CASE("DMST on the fixtures") {
  const ApproxSolution s3 = solve_dmst(g3());
  CHECK(s3.cycle.order == std::vector<VertexId>{0, 1, 2});
  CHECK(s3.weight == 6.0);
  CHECK(s3.bound_factor == 4.0);  // 2 * gamma

  const ApproxSolution s4 = solve_dmst(g4());
  CHECK(s4.cycle.order == std::vector<VertexId>{0, 1, 2, 3});
  CHECK(s4.weight == 4.0);

  CHECK(solve_dmst(all_ones(4)).weight == 4.0);
  CHECK_THROWS_AS(solve_dmst(g4(), 9), Error);
}

TEST_CASE("DMST respects the doubled-tree bound at every root") {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    const int n = 5 + static_cast<int>(seed % 8);
    const CompleteGraph g = uniform_instance(n, 310000 + seed);
    const MetricReport r = classify(g);
    const double mst_w = tree_weight(g, minimum_spanning_tree(g));
    for (VertexId root = 0; root < n; ++root) {
      const ApproxSolution s = solve_dmst(g, root, &r);
      CHECK(is_permutation_of_all(s.cycle.order, n));
      CHECK(s.weight <= 2.0 * r.gamma * mst_w * (1 + 1e-12));
    }
  }
}

TEST_CASE("tree_cube_cycle base cases") {
  Tree path3;
  path3.vertices = {0, 1, 2};
  path3.edges = {Edge(0, 1), Edge(1, 2)};
  CHECK(canonicalize_cycle(tree_cube_cycle(path3, Edge(0, 1), g3(), false)) ==
        std::vector<VertexId>{0, 1, 2});

  CHECK_THROWS_AS(tree_cube_cycle(path3, Edge(0, 2), g3(), false), Error);

  Tree tiny;
  tiny.vertices = {0, 1};
  tiny.edges = {Edge(0, 1)};
  CHECK_THROWS_AS(tree_cube_cycle(tiny, Edge(0, 1), g3(), false), Error);
}

TEST_CASE("tree_cube_cycle keeps the split edge and the T3 property") {
  const CompleteGraph g = all_ones(4);

  Tree path4;
  path4.vertices = {0, 1, 2, 3};
  path4.edges = {Edge(0, 1), Edge(1, 2), Edge(2, 3)};
  const auto hop = tree_hop_distances(path4, 4);
  const auto cyc = tree_cube_cycle(path4, Edge(1, 2), g, false);
  CHECK(is_permutation_of_all(cyc, 4));
  CHECK(cycle_contains_edge(cyc, Edge(1, 2)));
  for (size_t i = 0; i < cyc.size(); ++i) {
    const int d = hop[cyc[i]][cyc[(i + 1) % cyc.size()]];
    CHECK(d >= 1);
    CHECK(d <= 3);
  }

  Tree star;
  star.vertices = {0, 1, 2, 3};
  star.edges = {Edge(0, 1), Edge(0, 2), Edge(0, 3)};
  const auto sc = tree_cube_cycle(star, Edge(0, 1), g, false);
  CHECK(is_permutation_of_all(sc, 4));
  CHECK(cycle_contains_edge(sc, Edge(0, 1)));
}

TEST_CASE("AB and rAB cycles stay within tree distance 3 of the MST") {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    const int n = 5 + static_cast<int>(seed % 9);
    const CompleteGraph g = uniform_instance(n, 330000 + seed);
    const Tree t = minimum_spanning_tree(g);
    const auto hop = tree_hop_distances(t, n);
    for (bool refined : {false, true}) {
      const ApproxSolution s = refined ? solve_rab(g) : solve_ab(g);
      CHECK(is_permutation_of_all(s.cycle.order, n));
      const auto& order = s.cycle.order;
      for (size_t i = 0; i < order.size(); ++i) {
        const int d = hop[order[i]][order[(i + 1) % order.size()]];
        CHECK(d >= 1);
        CHECK(d <= 3);
      }
    }
  }
}

TEST_CASE("AB bound arithmetic on g4") {
  const MetricReport r = classify(g4());
  const ApproxSolution ab = solve_ab(g4(), &r);
  const ApproxSolution rab = solve_rab(g4(), &r);
  CHECK(ab.bound_factor == 40.0);    // (3*25+5)/2
  CHECK(rab.bound_factor == 15.0);   // (25+5)/2
  CHECK(ab.weight <= 40.0 * 4.0);
  CHECK(rab.weight <= 15.0 * 4.0);
  CHECK(solve_ab(g3()).weight == 6.0);
  CHECK(solve_rab(g3()).weight == 6.0);
  CHECK(solve_ab(all_ones(5)).weight == 5.0);
  CHECK(solve_rab(all_ones(5)).weight == 5.0);
}

TEST_CASE("PMCh on the fixtures") {
  CHECK(solve_pmch(g3()).weight == 6.0);
  const ApproxSolution s4 = solve_pmch(g4());
  CHECK(s4.cycle.order == std::vector<VertexId>{0, 1, 2, 3});
  CHECK(s4.weight == 4.0);
  CHECK(s4.bound_factor == 37.5);  // 3 * 25 / 2
}

TEST_CASE("PCh on the fixtures") {
  CHECK(solve_pch(g3()).weight == 6.0);
  const ApproxSolution s4 = solve_pch(g4());
  CHECK(s4.weight == 4.0);
  CHECK(s4.bound_factor == 7.5);  // 3 * gamma / 2
}

TEST_CASE("PCh keeps one matching edge in the cycle") {
  for (uint64_t seed = 0; seed < 30; ++seed) {
    const int n = 5 + static_cast<int>(seed % 10);
    const CompleteGraph g = uniform_instance(n, 350000 + seed);
    const ApproxSolution s = solve_pch(g);
    CHECK(is_permutation_of_all(s.cycle.order, n));

    // Recreate the deterministic pipeline's matching; the walk starts at the
    // smallest odd vertex and its matching edge must survive shortcutting.
    const Tree t = minimum_spanning_tree(g);
    const auto odd = mst_odd(g, t);
    const Matching m = min_weight_perfect_matching(g, odd);
    const VertexId start = odd.front();
    Edge start_edge(0, 1);
    bool found = false;
    for (const Edge& e : m.edges)
      if (e.a == start || e.b == start) {
        start_edge = e;
        found = true;
      }
    REQUIRE(found);
    CHECK(cycle_contains_edge(s.cycle.order, start_edge));
  }
}

TEST_CASE("every algorithm emits Hamiltonian cycles within its bound") {
  for (uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 5 + static_cast<int>(seed % 7);  // 5..11
    const CompleteGraph g = uniform_instance(n, 370000 + seed);
    const double exact = held_karp(g).weight;
    for (const ApproxSolution& s : solve_all(g)) {
      CHECK(is_permutation_of_all(s.cycle.order, n));
      CHECK(s.weight == doctest::Approx(cycle_weight(g, s.cycle.order)).epsilon(1e-12));
      CHECK(s.weight >= exact * (1 - 1e-9));
      CHECK(s.weight <= s.bound_factor * exact * (1 + 1e-9));
      CHECK(s.time_ms >= 0.0);
    }
  }
}

TEST_CASE("solve_all covers the expected cycle weights on g4") {
  const auto sols = solve_all(g4());
  REQUIRE(sols.size() == 5);
  std::set<std::string> names;
  for (const ApproxSolution& s : sols) {
    names.insert(algorithm_name(s.algorithm));
    CHECK((s.weight == 4.0 || s.weight == 22.0));
  }
  CHECK(names == std::set<std::string>{"ab", "dmst", "pch", "pmch", "rab"});

  for (const ApproxSolution& s : solve_all(g3())) CHECK(s.weight == 6.0);
  for (const ApproxSolution& s : solve_all(all_ones(6))) CHECK(s.weight == 6.0);
}

TEST_CASE("metric instances keep DMST within twice the tree weight") {
  GeneratorConfig cfg;
  cfg.model = WeightModel::EuclideanPoints;
  for (uint64_t seed = 0; seed < 10; ++seed) {
    cfg.n = 12;
    cfg.seed = 390000 + seed;
    const CompleteGraph g = generate_random_graph(cfg);
    const double mst_w = tree_weight(g, minimum_spanning_tree(g));
    CHECK(solve_dmst(g).weight <= 2.0 * mst_w * (1 + 1e-9));
  }
}
