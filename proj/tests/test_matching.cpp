#include <numeric>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "semitsp/matching.hpp"
#include "semitsp/metrics.hpp"
#include "semitsp/spanning.hpp"

using namespace semitsp;
using namespace semitsp::testing;

namespace {

std::vector<VertexId> iota_ids(int k) {
  std::vector<VertexId> ids(k);
  std::iota(ids.begin(), ids.end(), 0);
  return ids;
}

bool vertex_disjoint(const Matching& m) {
  std::set<VertexId> seen;
  for (const Edge& e : m.edges)
    if (!seen.insert(e.a).second || !seen.insert(e.b).second) return false;
  return true;
}

}  // namespace

TEST_CASE("matching on two vertices is the single edge") {
  const CompleteGraph g = g4();
  const std::vector<VertexId> pair{0, 3};
  const Matching m = min_weight_perfect_matching(g, pair);
  CHECK(m.edges == std::vector<Edge>{Edge(0, 3)});
  CHECK(m.weight == 1.0);
}

TEST_CASE("all-ones K4 ties resolve deterministically") {
  const CompleteGraph g = all_ones(4);
  const Matching m = min_weight_perfect_matching(g, iota_ids(4));
  CHECK(m.weight == 2.0);
  CHECK(m.edges == std::vector<Edge>{Edge(0, 1), Edge(2, 3)});
}

TEST_CASE("g4's full vertex set matches along the unit ring") {
  const Matching m = min_weight_perfect_matching(g4(), iota_ids(4));
  CHECK(m.weight == 2.0);
  const bool ring_a = m.edges == std::vector<Edge>{Edge(0, 1), Edge(2, 3)};
  const bool ring_b = m.edges == std::vector<Edge>{Edge(0, 3), Edge(1, 2)};
  CHECK((ring_a || ring_b));
  CHECK(m.edges == std::vector<Edge>{Edge(0, 1), Edge(2, 3)});
  // Brute enumeration confirms: 2, 20, 2 are the three matching weights.
  CHECK(brute_force_matching(g4(), iota_ids(4)).weight == 2.0);
}

TEST_CASE("odd subsets are rejected") {
  CHECK_THROWS_AS(min_weight_perfect_matching(g4(), std::vector<VertexId>{0, 1, 2}), Error);
  CHECK_THROWS_AS(brute_force_matching(g4(), std::vector<VertexId>{0}), Error);
  try {
    min_weight_perfect_matching(g4(), std::vector<VertexId>{0, 1, 2});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::OddVertexCount);
  }
}

TEST_CASE("brute matcher rejects large subsets") {
  const CompleteGraph g = all_ones(14);
  try {
    brute_force_matching(g, iota_ids(14));
    FAIL("expected SubsetTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SubsetTooLarge);
  }
}

TEST_CASE("blossom equals brute force on seeded subsets") {
  int checked = 0;
  for (uint64_t seed = 0; seed < 120; ++seed) {
    const int n = 10 + static_cast<int>(seed % 3);
    const CompleteGraph g = uniform_instance(n, 240000 + seed);
    Rng rng(900 + seed);
    const int k = 2 + 2 * static_cast<int>(rng.next_u64() % 5);  // 2..10 even
    std::vector<VertexId> all = iota_ids(n);
    for (int i = n - 1; i > 0; --i) std::swap(all[i], all[rng.next_u64() % (i + 1)]);
    std::vector<VertexId> subset(all.begin(), all.begin() + k);
    std::sort(subset.begin(), subset.end());

    const Matching fast = min_weight_perfect_matching(g, subset);
    const Matching slow = brute_force_matching(g, subset);
    CHECK(fast.weight == doctest::Approx(slow.weight).epsilon(1e-9));
    CHECK(fast.edges.size() == static_cast<size_t>(k) / 2);
    CHECK(vertex_disjoint(fast));
    ++checked;
  }
  CHECK(checked == 120);
}

TEST_CASE("blossom survives adversarial equal weights") {
  for (int k = 2; k <= 12; k += 2) {
    const CompleteGraph g = all_ones(std::max(3, k));
    const Matching m = min_weight_perfect_matching(g, iota_ids(k));
    CHECK(m.edges.size() == static_cast<size_t>(k) / 2);
    CHECK(m.weight == doctest::Approx(k / 2.0));
    CHECK(vertex_disjoint(m));
  }
}

TEST_CASE("build_path_matching expands matched pairs into shortest paths") {
  const CompleteGraph four = g4();
  const auto sp4 = floyd_warshall(four);
  const PathMatching direct = build_path_matching(four, std::vector<VertexId>{0, 3}, sp4);
  REQUIRE(direct.paths.size() == 1);
  CHECK(direct.paths[0] == Walk{0, 3});
  CHECK(path_matching_weight(four, direct) == 1.0);

  const CompleteGraph three = g3();
  const auto sp3 = floyd_warshall(three);
  const PathMatching via = build_path_matching(three, std::vector<VertexId>{0, 2}, sp3);
  REQUIRE(via.paths.size() == 1);
  CHECK(via.paths[0] == Walk{0, 1, 2});
  CHECK(path_matching_weight(three, via) == 2.0);

  CHECK(build_path_matching(four, std::vector<VertexId>{}, sp4).paths.empty());
  CHECK_THROWS_AS(build_path_matching(four, std::vector<VertexId>{0, 1, 2}, sp4), Error);
}

TEST_CASE("path matching weight equals the auxiliary matching weight") {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    const int n = 6 + static_cast<int>(seed % 5);
    const CompleteGraph g = uniform_instance(n, 111000 + seed);
    const Tree t = minimum_spanning_tree(g);
    std::vector<int> deg(n, 0);
    for (const Edge& e : t.edges) {
      ++deg[e.a];
      ++deg[e.b];
    }
    std::vector<VertexId> odd;
    for (int v = 0; v < n; ++v)
      if (deg[v] % 2) odd.push_back(v);

    const auto sp = floyd_warshall(g);
    std::vector<std::vector<double>> table(odd.size(), std::vector<double>(odd.size(), 0.0));
    for (size_t i = 0; i < odd.size(); ++i)
      for (size_t j = 0; j < odd.size(); ++j)
        if (i != j) table[i][j] = sp.distance(odd[i], odd[j]);
    const Matching aux = min_weight_perfect_matching(table, odd);

    const PathMatching pm = build_path_matching(g, odd, sp);
    CHECK(path_matching_weight(g, pm) == doctest::Approx(aux.weight).epsilon(1e-9));
  }
}

TEST_CASE("resolve_conflicts leaves disjoint inputs alone") {
  PathMatching pm;
  pm.paths = {Walk{0, 1}, Walk{2, 3, 4}};
  const PathMatching out = resolve_conflicts(pm);
  CHECK(out.paths == pm.paths);
}

TEST_CASE("an internal conflict is bypassed in the single-conflict path") {
  // Paths (0,4,1) and (2,4,3) share the internal vertex 4.
  PathMatching pm;
  pm.paths = {Walk{0, 4, 1}, Walk{2, 4, 3}};
  const PathMatching out = resolve_conflicts(pm);
  CHECK(out.paths[0] == Walk{0, 1});
  CHECK(out.paths[1] == Walk{2, 4, 3});
}

TEST_CASE("an endpoint conflict is bypassed in the other path") {
  // 4 ends the first path and sits inside the second.
  PathMatching pm;
  pm.paths = {Walk{0, 4}, Walk{2, 4, 3}};
  const PathMatching out = resolve_conflicts(pm);
  CHECK(out.paths[0] == Walk{0, 4});
  CHECK(out.paths[1] == Walk{2, 3});
}

TEST_CASE("resolve_conflicts rejects cyclic unions") {
  PathMatching cyc;
  cyc.paths = {Walk{0, 1, 2}, Walk{3, 0, 2, 4}};
  try {
    resolve_conflicts(cyc);
    FAIL("expected NotCycleFree");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotCycleFree);
  }

  PathMatching shared_edge;
  shared_edge.paths = {Walk{0, 1, 2}, Walk{3, 2, 1, 5}};
  try {
    resolve_conflicts(shared_edge);
    FAIL("expected NotCycleFree");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotCycleFree);
  }
}

TEST_CASE("resolved path matchings are vertex-disjoint with original endpoints") {
  for (uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 7 + static_cast<int>(seed % 6);
    const CompleteGraph g = uniform_instance(n, 131000 + seed);
    const Tree t = minimum_spanning_tree(g);
    std::vector<int> deg(n, 0);
    for (const Edge& e : t.edges) {
      ++deg[e.a];
      ++deg[e.b];
    }
    std::vector<VertexId> odd;
    for (int v = 0; v < n; ++v)
      if (deg[v] % 2) odd.push_back(v);

    const auto sp = floyd_warshall(g);
    const PathMatching before = build_path_matching(g, odd, sp);
    std::multiset<Edge> endpoints_before;
    for (const Walk& p : before.paths) endpoints_before.insert(Edge(p.front(), p.back()));

    const PathMatching after = resolve_conflicts(before);
    std::multiset<Edge> endpoints_after;
    std::set<VertexId> seen;
    for (const Walk& p : after.paths) {
      endpoints_after.insert(Edge(p.front(), p.back()));
      CHECK(p.size() >= 2);
      for (size_t i = 0; i + 1 < p.size(); ++i) CHECK(p[i] != p[i + 1]);
      for (VertexId v : p) CHECK(seen.insert(v).second);  // pairwise vertex-disjoint
    }
    CHECK(endpoints_before == endpoints_after);
  }
}
