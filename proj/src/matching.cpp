#include "semitsp/matching.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>

#include "blossom.hpp"

namespace semitsp {

namespace {

void check_ids(std::span<const VertexId> ids, int limit) {
  std::set<VertexId> seen;
  for (VertexId v : ids) {
    if (v < 0 || (limit >= 0 && v >= limit))
      raise(Errc::IndexOutOfRange, "vertex id " + std::to_string(v));
    if (!seen.insert(v).second) raise(Errc::MalformedInput, "duplicate vertex id " + std::to_string(v));
  }
}

void check_table(const std::vector<std::vector<double>>& table, size_t k) {
  if (table.size() != k) raise(Errc::MalformedInput, "weight table size does not match id count");
  for (size_t i = 0; i < k; ++i)
    if (table[i].size() != k) raise(Errc::MalformedInput, "weight table is not square");
}

// Snap to integers on a power-of-two grid; exact for dyadic inputs and far
// inside the 1e-9 comparison tolerance otherwise.
std::vector<std::vector<int64_t>> quantize(const std::vector<std::vector<double>>& table) {
  const size_t k = table.size();
  double maxw = 0.0;
  for (const auto& row : table)
    for (double w : row) maxw = std::max(maxw, std::abs(w));
  double scale = 1.0;
  if (maxw > 0.0) {
    int exp = 0;
    std::frexp(maxw, &exp);
    scale = std::ldexp(1.0, 40 - exp);
  }
  std::vector<std::vector<int64_t>> out(k, std::vector<int64_t>(k, 0));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) out[i][j] = std::llround(table[i][j] * scale);
  return out;
}

Matching matching_from_pairs(const std::vector<std::vector<double>>& table,
                             std::span<const VertexId> ids, const std::vector<int>& mate) {
  Matching m;
  for (size_t i = 0; i < mate.size(); ++i) {
    const int j = mate[i];
    if (j < 0 || static_cast<size_t>(j) <= i) continue;
    m.edges.emplace_back(ids[i], ids[j]);
    m.weight += table[i][j];
  }
  std::sort(m.edges.begin(), m.edges.end());
  return m;
}

}  // namespace

Matching min_weight_perfect_matching(const std::vector<std::vector<double>>& table,
                                     std::span<const VertexId> ids) {
  if (ids.size() % 2 != 0)
    raise(Errc::OddVertexCount, "perfect matching needs an even subset, got " +
                                    std::to_string(ids.size()) + " vertices");
  check_ids(ids, -1);
  check_table(table, ids.size());
  if (ids.empty()) return {};

  auto w = quantize(table);
  int64_t wmax = 0;
  for (const auto& row : w)
    for (int64_t x : row) wmax = std::max(wmax, x);
  // Maximize (wmax - w): cardinality-first matching is then perfect and of
  // minimum original weight.
  for (auto& row : w)
    for (auto& x : row) x = wmax - x;

  const auto mate = detail::max_weight_matching(static_cast<int>(ids.size()), w);
  for (int v : mate)
    if (v < 0)
      throw std::logic_error("blossom matching left a vertex exposed on a complete even graph");
  return matching_from_pairs(table, ids, mate);
}

Matching min_weight_perfect_matching(const CompleteGraph& g, std::span<const VertexId> subset) {
  check_ids(subset, g.size());
  std::vector<std::vector<double>> table(subset.size(), std::vector<double>(subset.size(), 0.0));
  for (size_t i = 0; i < subset.size(); ++i)
    for (size_t j = 0; j < subset.size(); ++j)
      if (i != j) table[i][j] = g.weight(subset[i], subset[j]);
  return min_weight_perfect_matching(table, subset);
}

namespace {

void brute_recurse(const std::vector<std::vector<double>>& table, std::vector<char>& used,
                   std::vector<std::pair<int, int>>& current, double weight,
                   std::vector<std::pair<int, int>>& best, double& best_weight) {
  const size_t k = used.size();
  size_t first = k;
  for (size_t i = 0; i < k; ++i)
    if (!used[i]) {
      first = i;
      break;
    }
  if (first == k) {
    if (weight < best_weight) {
      best_weight = weight;
      best = current;
    }
    return;
  }
  used[first] = 1;
  for (size_t j = first + 1; j < k; ++j) {
    if (used[j]) continue;
    used[j] = 1;
    current.emplace_back(static_cast<int>(first), static_cast<int>(j));
    brute_recurse(table, used, current, weight + table[first][j], best, best_weight);
    current.pop_back();
    used[j] = 0;
  }
  used[first] = 0;
}

}  // namespace

Matching brute_force_matching(const std::vector<std::vector<double>>& table,
                              std::span<const VertexId> ids, int cap) {
  if (ids.size() % 2 != 0)
    raise(Errc::OddVertexCount, "perfect matching needs an even subset, got " +
                                    std::to_string(ids.size()) + " vertices");
  if (static_cast<int>(ids.size()) > cap)
    raise(Errc::SubsetTooLarge, "brute-force matching handles up to " + std::to_string(cap) +
                                    " vertices, got " + std::to_string(ids.size()));
  check_ids(ids, -1);
  check_table(table, ids.size());
  if (ids.empty()) return {};

  std::vector<char> used(ids.size(), 0);
  std::vector<std::pair<int, int>> current, best;
  double best_weight = std::numeric_limits<double>::infinity();
  brute_recurse(table, used, current, 0.0, best, best_weight);

  Matching m;
  m.weight = 0.0;
  for (auto [i, j] : best) {
    m.edges.emplace_back(ids[i], ids[j]);
    m.weight += table[i][j];
  }
  std::sort(m.edges.begin(), m.edges.end());
  return m;
}

Matching brute_force_matching(const CompleteGraph& g, std::span<const VertexId> subset, int cap) {
  check_ids(subset, g.size());
  std::vector<std::vector<double>> table(subset.size(), std::vector<double>(subset.size(), 0.0));
  for (size_t i = 0; i < subset.size(); ++i)
    for (size_t j = 0; j < subset.size(); ++j)
      if (i != j) table[i][j] = g.weight(subset[i], subset[j]);
  return brute_force_matching(table, subset, cap);
}

double path_matching_weight(const CompleteGraph& g, const PathMatching& pm) {
  double total = 0.0;
  for (const Walk& p : pm.paths)
    for (size_t i = 0; i + 1 < p.size(); ++i) total += g.weight(p[i], p[i + 1]);
  return total;
}

PathMatching build_path_matching(const CompleteGraph& g, std::span<const VertexId> odd,
                                 const ShortestPathTable& sp) {
  if (odd.size() % 2 != 0)
    raise(Errc::OddCardinality,
          "odd-vertex set has odd size " + std::to_string(odd.size()));
  check_ids(odd, g.size());
  PathMatching pm;
  if (odd.empty()) return pm;

  // Auxiliary complete graph on the odd set, weighted by shortest paths.
  std::vector<std::vector<double>> table(odd.size(), std::vector<double>(odd.size(), 0.0));
  for (size_t i = 0; i < odd.size(); ++i)
    for (size_t j = 0; j < odd.size(); ++j)
      if (i != j) table[i][j] = sp.distance(odd[i], odd[j]);

  const Matching m = min_weight_perfect_matching(table, odd);
  for (const Edge& e : m.edges) pm.paths.push_back(sp.path(e.a, e.b));
  return pm;
}

namespace {

// Positions of vertices that sit in more than one path.
std::vector<int> conflict_count(const PathMatching& pm, std::vector<int>& owner_count) {
  int max_id = 0;
  for (const Walk& p : pm.paths)
    for (VertexId v : p) max_id = std::max(max_id, v);
  owner_count.assign(max_id + 1, 0);
  for (const Walk& p : pm.paths)
    for (VertexId v : p) ++owner_count[v];
  std::vector<int> per_path(pm.paths.size(), 0);
  for (size_t i = 0; i < pm.paths.size(); ++i)
    for (VertexId v : pm.paths[i])
      if (owner_count[v] > 1) ++per_path[i];
  return per_path;
}

void validate_path_matching(const PathMatching& pm) {
  std::set<VertexId> endpoints;
  std::set<Edge> edge_set;
  struct Dsu {
    std::vector<int> up;
    int find(int x) {
      while (up[x] != x) x = up[x] = up[up[x]];
      return x;
    }
  } dsu;
  int max_id = 0;
  for (const Walk& p : pm.paths)
    for (VertexId v : p) max_id = std::max(max_id, v);
  dsu.up.resize(max_id + 1);
  for (int i = 0; i <= max_id; ++i) dsu.up[i] = i;

  for (const Walk& p : pm.paths) {
    if (p.size() < 2) raise(Errc::MalformedInput, "path matching contains a path with < 2 vertices");
    std::set<VertexId> within(p.begin(), p.end());
    if (within.size() != p.size())
      raise(Errc::MalformedInput, "path matching contains a non-simple path");
    if (!endpoints.insert(p.front()).second || !endpoints.insert(p.back()).second)
      raise(Errc::MalformedInput, "path endpoints are not pairwise disjoint");
    for (size_t i = 0; i + 1 < p.size(); ++i) {
      const Edge e(p[i], p[i + 1]);
      if (!edge_set.insert(e).second)
        raise(Errc::NotCycleFree, "two paths share an edge");
      const int ra = dsu.find(e.a), rb = dsu.find(e.b);
      if (ra == rb) raise(Errc::NotCycleFree, "union of paths contains a cycle");
      dsu.up[ra] = rb;
    }
  }
}

}  // namespace

PathMatching resolve_conflicts(PathMatching pm) {
  validate_path_matching(pm);

  while (true) {
    std::vector<int> owners;
    const std::vector<int> per_path = conflict_count(pm, owners);

    // Prefer the first path with exactly one conflict; pure bypassing keeps
    // making progress even if only multi-conflict paths remain.
    int pick = -1;
    for (size_t i = 0; i < per_path.size(); ++i)
      if (per_path[i] == 1) {
        pick = static_cast<int>(i);
        break;
      }
    if (pick == -1) {
      int best = std::numeric_limits<int>::max();
      for (size_t i = 0; i < per_path.size(); ++i)
        if (per_path[i] > 0 && per_path[i] < best) {
          best = per_path[i];
          pick = static_cast<int>(i);
        }
    }
    if (pick == -1) break;  // vertex-disjoint

    Walk& p = pm.paths[pick];
    size_t cpos = 0;
    while (owners[p[cpos]] <= 1) ++cpos;
    const VertexId c = p[cpos];

    if (cpos > 0 && cpos + 1 < p.size()) {
      // Internal conflict: bypass it here; the host graph is complete, so
      // the direct edge between its neighbours is available.
      p.erase(p.begin() + cpos);
    } else {
      // c is one of p's endpoints, so it must sit inside some other path
      // (endpoints are pairwise disjoint). Bypass it there instead; both
      // pairings survive untouched.
      bool fixed = false;
      for (size_t i = 0; i < pm.paths.size() && !fixed; ++i) {
        if (static_cast<int>(i) == pick) continue;
        Walk& q = pm.paths[i];
        for (size_t j = 1; j + 1 < q.size(); ++j)
          if (q[j] == c) {
            q.erase(q.begin() + j);
            fixed = true;
            break;
          }
      }
      if (!fixed)
        throw std::logic_error("conflicting endpoint not interior to any other path");
    }
  }
  return pm;
}

}  // namespace semitsp
