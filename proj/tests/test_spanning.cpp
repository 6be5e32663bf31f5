#include <algorithm>
#include <map>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "semitsp/exact.hpp"
#include "semitsp/spanning.hpp"

using namespace semitsp;
using namespace semitsp::testing;

TEST_CASE("minimum_spanning_tree on the fixtures") {
  const Tree t3 = minimum_spanning_tree(g3());
  CHECK(t3.edges == std::vector<Edge>{Edge(0, 1), Edge(1, 2)});
  CHECK(tree_weight(g3(), t3) == 2.0);

  // Four equally minimal trees exist in g4; the lexicographic frontier rule
  // settles on this one.
  const Tree t4 = minimum_spanning_tree(g4());
  CHECK(tree_weight(g4(), t4) == 3.0);
  CHECK(t4.edges == std::vector<Edge>{Edge(0, 1), Edge(0, 3), Edge(1, 2)});

  const Tree star = minimum_spanning_tree(all_ones(4));
  CHECK(tree_weight(all_ones(4), star) == 3.0);
  CHECK(star.edges == std::vector<Edge>{Edge(0, 1), Edge(0, 2), Edge(0, 3)});
}

TEST_CASE("MST weight matches the Pruefer enumeration oracle") {
  for (uint64_t seed = 0; seed < 25; ++seed) {
    const int n = 4 + static_cast<int>(seed % 3);  // 4..6
    const CompleteGraph g = uniform_instance(n, 52000 + seed);
    const Tree t = minimum_spanning_tree(g);
    CHECK(is_spanning_tree(t, g));
    CHECK(tree_weight(g, t) == doctest::Approx(mst_weight_oracle(g)).epsilon(1e-12));
  }
}

TEST_CASE("MST weight lower-bounds the exact tour weight") {
  CHECK(tree_weight_lower_bound_check(g3(), minimum_spanning_tree(g3()), 6.0));
  CHECK(tree_weight_lower_bound_check(g4(), minimum_spanning_tree(g4()), 4.0));
  CHECK(tree_weight_lower_bound_check(all_ones(4), minimum_spanning_tree(all_ones(4)), 4.0));
  for (uint64_t seed = 0; seed < 15; ++seed) {
    const int n = 5 + static_cast<int>(seed % 7);  // 5..11
    const CompleteGraph g = uniform_instance(n, 61000 + seed);
    CHECK(tree_weight_lower_bound_check(g, minimum_spanning_tree(g), held_karp(g).weight));
  }

  Tree not_spanning;
  not_spanning.vertices = {0, 1};
  not_spanning.edges = {Edge(0, 1)};
  CHECK_THROWS_AS(tree_weight_lower_bound_check(g4(), not_spanning, 4.0), Error);
}

namespace {

Tree path_tree(std::initializer_list<VertexId> verts) {
  Tree t;
  t.vertices = verts;
  for (size_t i = 0; i + 1 < t.vertices.size(); ++i)
    t.edges.emplace_back(t.vertices[i], t.vertices[i + 1]);
  return t;
}

}  // namespace

TEST_CASE("dfs_traversal visits children in ascending order") {
  CHECK(dfs_traversal(path_tree({0, 1, 2}), 0).vertices == std::vector<VertexId>{0, 1, 2, 1, 0});
  CHECK(dfs_traversal(path_tree({0, 1, 2}), 1).vertices == std::vector<VertexId>{1, 0, 1, 2, 1});

  Tree star;
  star.vertices = {0, 1, 2, 3};
  star.edges = {Edge(0, 1), Edge(0, 2), Edge(0, 3)};
  CHECK(dfs_traversal(star, 0).vertices == std::vector<VertexId>{0, 1, 0, 2, 0, 3, 0});

  CHECK_THROWS_AS(dfs_traversal(star, 7), Error);
}

TEST_CASE("traversals use every tree edge exactly twice") {
  for (uint64_t seed = 0; seed < 10; ++seed) {
    const int n = 5 + static_cast<int>(seed);
    const CompleteGraph g = uniform_instance(n, 73000 + seed);
    const Tree t = minimum_spanning_tree(g);
    const TreeTraversal trav = dfs_traversal(t, 0);
    CHECK(trav.vertices.size() == 2 * static_cast<size_t>(n) - 1);
    CHECK(trav.vertices.front() == 0);
    CHECK(trav.vertices.back() == 0);

    std::map<Edge, int> uses;
    for (size_t i = 0; i + 1 < trav.vertices.size(); ++i)
      ++uses[Edge(trav.vertices[i], trav.vertices[i + 1])];
    CHECK(uses.size() == t.edges.size());
    for (const Edge& e : t.edges) CHECK(uses[e] == 2);
  }
}

TEST_CASE("shortcut keeps first appearances") {
  CHECK(shortcut({{0, 1, 2, 1, 0}}) == std::vector<VertexId>{0, 1, 2});
  CHECK(shortcut({{0, 1, 0, 2, 0, 3, 0}}) == std::vector<VertexId>{0, 1, 2, 3});
  CHECK(shortcut({{1, 0, 1, 2, 1}}) == std::vector<VertexId>{1, 0, 2});

  CHECK_THROWS_AS(shortcut({{0, 1, 2, 0}}), Error);      // even length
  CHECK_THROWS_AS(shortcut({{0, 1, 2, 1, 2}}), Error);   // not closed
  CHECK_THROWS_AS(shortcut({{0, 0, 1, 0, 0}}), Error);   // repeated consecutive
  CHECK_THROWS_AS(shortcut({{0, 1, 2, 3, 0}}), Error);   // repetition count off
}

TEST_CASE("shortcut of a tree traversal is a permutation starting at the root") {
  for (uint64_t seed = 0; seed < 10; ++seed) {
    const int n = 6 + static_cast<int>(seed);
    const CompleteGraph g = uniform_instance(n, 81000 + seed);
    const Tree t = minimum_spanning_tree(g);
    const VertexId root = static_cast<VertexId>(seed % n);
    const auto order = shortcut(dfs_traversal(t, root));
    CHECK(is_permutation_of_all(order, n));
    CHECK(order.front() == root);
  }
}
