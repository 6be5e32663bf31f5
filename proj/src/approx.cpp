#include "semitsp/approx.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <stdexcept>
#include <string>

#include "semitsp/euler.hpp"
#include "semitsp/matching.hpp"
#include "semitsp/spanning.hpp"

namespace semitsp {

const char* algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::Dmst: return "dmst";
    case Algorithm::Ab: return "ab";
    case Algorithm::Rab: return "rab";
    case Algorithm::Pmch: return "pmch";
    case Algorithm::Pch: return "pch";
  }
  return "?";
}

double bound_factor_for(Algorithm a, const MetricReport& r) {
  switch (a) {
    case Algorithm::Dmst: return 2.0 * r.gamma;
    case Algorithm::Ab: return (3.0 * r.beta * r.beta + r.beta) / 2.0;
    case Algorithm::Rab: return (r.beta * r.beta + r.beta) / 2.0;
    case Algorithm::Pmch: return 3.0 * r.beta * r.beta / 2.0;
    case Algorithm::Pch: return 3.0 * r.gamma / 2.0;
  }
  return 0.0;
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::vector<VertexId> odd_vertices(const Tree& t, int n) {
  std::vector<int> deg(n, 0);
  for (const Edge& e : t.edges) {
    ++deg[e.a];
    ++deg[e.b];
  }
  std::vector<VertexId> odd;
  for (int v = 0; v < n; ++v)
    if (deg[v] % 2) odd.push_back(v);
  return odd;
}

template <typename Core>
ApproxSolution finish(const CompleteGraph& g, Algorithm a, const MetricReport* report, Core&& core) {
  const auto t0 = Clock::now();
  const std::vector<VertexId> order = core();
  const double ms = elapsed_ms(t0);

  MetricReport local;
  if (!report) {
    local = classify(g);
    report = &local;
  }
  ApproxSolution s;
  s.cycle = make_cycle(g, order);
  s.weight = s.cycle.weight;
  s.algorithm = a;
  s.bound_factor = bound_factor_for(a, *report);
  s.time_ms = ms;
  return s;
}

// ---- DMST ----------------------------------------------------------------

std::vector<VertexId> run_dmst(const CompleteGraph& g, VertexId root) {
  if (root < 0 || root >= g.size())
    raise(Errc::IndexOutOfRange, "root " + std::to_string(root));
  const Tree t = minimum_spanning_tree(g);
  return shortcut(dfs_traversal(t, root));
}

// ---- Andreae-Bandelt -----------------------------------------------------

struct TreeCube {
  const CompleteGraph& g;
  std::vector<std::vector<VertexId>> adj;  // current forest, neighbors sorted
  bool refined;

  void cut(VertexId a, VertexId b) {
    std::erase(adj[a], b);
    std::erase(adj[b], a);
  }

  size_t component_size(VertexId from) const {
    std::vector<VertexId> stack{from};
    std::map<VertexId, char> seen{{from, 1}};
    while (!stack.empty()) {
      const VertexId u = stack.back();
      stack.pop_back();
      for (VertexId v : adj[u])
        if (seen.emplace(v, 1).second) stack.push_back(v);
    }
    return seen.size();
  }

  // Hamiltonian path of x's component starting at x; the other endpoint is
  // the chosen tree neighbor.
  std::vector<VertexId> ham_path(VertexId x) {
    if (adj[x].empty()) return {x};
    VertexId y = adj[x].front();  // smallest index
    if (refined) {
      for (VertexId cand : adj[x])
        if (g.weight(x, cand) < g.weight(x, y)) y = cand;
    }
    if (component_size(x) == 2) return {x, y};
    return cycle(x, y);  // wrap pair is {y, x}; the sequence itself runs x -> y
  }

  // Cycle order whose wrap-around pair is the split edge {x1, x2}.
  std::vector<VertexId> cycle(VertexId x1, VertexId x2) {
    cut(x1, x2);
    std::vector<VertexId> p1 = ham_path(x1);
    const std::vector<VertexId> p2 = ham_path(x2);
    p1.insert(p1.end(), p2.rbegin(), p2.rend());
    return p1;
  }
};

// ---- PCh -----------------------------------------------------------------

std::vector<VertexId> run_pch(const CompleteGraph& g) {
  const int n = g.size();
  const Tree t = minimum_spanning_tree(g);
  const std::vector<VertexId> odd = odd_vertices(t, n);
  const Matching m = min_weight_perfect_matching(g, odd);

  Multigraph mg;
  mg.vertices = t.vertices;
  for (const Edge& e : t.edges) mg.edges.push_back({0, e});
  std::vector<Multiedge> prio;
  for (const Edge& e : m.edges) {
    mg.edges.push_back({1, e});
    prio.push_back({1, e});
  }
  const EulerianWalk w = eulerian_walk(mg, prio, odd.front());

  // Enhanced shortcutting. Matching vertices are kept exactly where the walk
  // touches their matching edge; edge tags distinguish a matching edge from
  // a parallel tree edge between the same pair.
  std::vector<char> in_m(n, 0);
  for (VertexId v : odd) in_m[v] = 1;
  const auto& xs = w.vertices;
  const auto& tr = w.edge_trace;

  std::vector<VertexId> h;
  h.reserve(n);
  h.push_back(xs[0]);
  h.push_back(xs[1]);
  std::vector<char> appeared(n, 0);
  appeared[xs[0]] = appeared[xs[1]] = 1;
  for (size_t j = 2; j < xs.size() && static_cast<int>(h.size()) < n; ++j) {
    const VertexId x = xs[j];
    if (!in_m[x]) {
      if (!appeared[x]) {
        h.push_back(x);
        appeared[x] = 1;
      }
    } else {
      const bool entered_on_matching = tr[j - 1].tag == 1;
      const bool leaves_on_matching = j < tr.size() && tr[j].tag == 1;
      if (entered_on_matching || leaves_on_matching) h.push_back(x);
    }
  }
  if (static_cast<int>(h.size()) != n)
    throw std::logic_error("enhanced shortcutting missed a vertex");
  return h;
}

// ---- PMCh ----------------------------------------------------------------

// Duplicate removal on a cyclic sequence: while some vertex appears twice,
// bypass a duplicated neighbour of it when one exists, otherwise its own
// second appearance. No removal ever deletes a vertex's last occurrence.
void remove_duplicates_cyclic(std::vector<VertexId>& eta, int n) {
  auto collapse_adjacent = [&]() {
    bool again = true;
    while (again && eta.size() > 1) {
      again = false;
      for (size_t i = 0; i < eta.size(); ++i) {
        const size_t next = (i + 1) % eta.size();
        if (next != i && eta[i] == eta[next]) {
          eta.erase(eta.begin() + next);
          again = true;
          break;
        }
      }
    }
  };

  while (true) {
    collapse_adjacent();
    std::vector<int> cnt(n, 0);
    for (VertexId v : eta) ++cnt[v];
    size_t p1 = eta.size();
    for (size_t i = 0; i < eta.size(); ++i)
      if (cnt[eta[i]] > 1) {
        p1 = i;
        break;
      }
    if (p1 == eta.size()) break;

    const VertexId x = eta[p1];
    size_t p2 = p1 + 1;
    while (eta[p2] != x) ++p2;

    const size_t len = eta.size();
    const size_t around[4] = {(p1 + len - 1) % len, (p1 + 1) % len, (p2 + len - 1) % len,
                              (p2 + 1) % len};
    size_t victim = len;
    for (size_t q : around)
      if (q != p1 && q != p2 && cnt[eta[q]] > 1) {
        victim = q;
        break;
      }
    eta.erase(eta.begin() + (victim != len ? victim : p2));
  }
}

std::vector<VertexId> run_pmch(const CompleteGraph& g) {
  const int n = g.size();
  const Tree t = minimum_spanning_tree(g);
  const std::vector<VertexId> odd = odd_vertices(t, n);
  const ShortestPathTable sp = floyd_warshall(g);
  const PathMatching pm = resolve_conflicts(build_path_matching(g, odd, sp));

  // Contract each path to a virtual matching edge between its endpoints and
  // walk the combined multigraph, taking virtual edges with priority.
  Multigraph mg;
  mg.vertices = t.vertices;
  for (const Edge& e : t.edges) mg.edges.push_back({0, e});
  std::vector<Multiedge> prio;
  std::map<Edge, const Walk*> path_of;
  for (const Walk& p : pm.paths) {
    const Edge ve(p.front(), p.back());
    mg.edges.push_back({1, ve});
    prio.push_back({1, ve});
    path_of[ve] = &p;
  }
  const VertexId start = odd.front();
  const EulerianWalk w = eulerian_walk(mg, prio, start);

  // Degree-3 forest transform on the tree-path runs of the walk. Rooting the
  // node-distance at the walk's start vertex keeps every other vertex's
  // parent-side visit out of the drop rule, so nobody loses their last
  // occurrence.
  const auto adj = tree_adjacency(t, n);
  std::vector<int> depth(n, -1);
  {
    std::vector<VertexId> frontier{start};
    depth[start] = 0;
    while (!frontier.empty()) {
      std::vector<VertexId> next;
      for (VertexId u : frontier)
        for (VertexId v : adj[u])
          if (depth[v] == -1) {
            depth[v] = depth[u] + 1;
            next.push_back(v);
          }
      frontier = std::move(next);
    }
  }

  const auto& xs = w.vertices;
  const auto& tr = w.edge_trace;
  std::vector<VertexId> eta{xs[0]};
  size_t i = 0;
  while (i < tr.size()) {
    if (tr[i].tag == 1) {
      const Walk& p = *path_of.at(tr[i].edge);
      if (p.front() == xs[i]) {
        eta.insert(eta.end(), p.begin() + 1, p.end());
      } else {
        eta.insert(eta.end(), p.rbegin() + 1, p.rend());
      }
      ++i;
      continue;
    }
    size_t k = i;
    while (k < tr.size() && tr[k].tag == 0) ++k;
    std::vector<VertexId> run(xs.begin() + i, xs.begin() + k + 1);
    size_t apex = 0;
    for (size_t q = 1; q < run.size(); ++q)
      if (depth[run[q]] < depth[run[apex]]) apex = q;
    if (apex != 0 && apex + 1 != run.size() && static_cast<int>(adj[run[apex]].size()) > 3)
      run.erase(run.begin() + apex);
    eta.insert(eta.end(), run.begin() + 1, run.end());
    i = k;
  }
  if (eta.front() != eta.back()) throw std::logic_error("assembled walk is not closed");
  eta.pop_back();

  remove_duplicates_cyclic(eta, n);
  if (static_cast<int>(eta.size()) != n)
    throw std::logic_error("duplicate removal did not reach a Hamiltonian order");
  return eta;
}

}  // namespace

ApproxSolution solve_dmst(const CompleteGraph& g, VertexId root, const MetricReport* report) {
  return finish(g, Algorithm::Dmst, report, [&] { return run_dmst(g, root); });
}

std::vector<VertexId> tree_cube_cycle(const Tree& t, const Edge& e, const CompleteGraph& g,
                                      bool refined) {
  if (t.vertices.size() < 3)
    raise(Errc::TreeTooSmall, "tree has " + std::to_string(t.vertices.size()) + " vertices");
  if (std::find(t.edges.begin(), t.edges.end(), e) == t.edges.end())
    raise(Errc::EdgeNotInTree,
          "edge {" + std::to_string(e.a) + "," + std::to_string(e.b) + "}");
  const VertexId max_id = *std::max_element(t.vertices.begin(), t.vertices.end());
  TreeCube worker{g, tree_adjacency(t, max_id + 1), refined};
  return worker.cycle(e.a, e.b);
}

ApproxSolution solve_ab(const CompleteGraph& g, const MetricReport* report) {
  return finish(g, Algorithm::Ab, report, [&] {
    const Tree t = minimum_spanning_tree(g);
    return tree_cube_cycle(t, t.edges.front(), g, false);  // edges sorted: smallest first
  });
}

ApproxSolution solve_rab(const CompleteGraph& g, const MetricReport* report) {
  return finish(g, Algorithm::Rab, report, [&] {
    const Tree t = minimum_spanning_tree(g);
    return tree_cube_cycle(t, t.edges.front(), g, true);
  });
}

ApproxSolution solve_pmch(const CompleteGraph& g, const MetricReport* report) {
  return finish(g, Algorithm::Pmch, report, [&] { return run_pmch(g); });
}

ApproxSolution solve_pch(const CompleteGraph& g, const MetricReport* report) {
  return finish(g, Algorithm::Pch, report, [&] { return run_pch(g); });
}

std::vector<ApproxSolution> solve_all(const CompleteGraph& g, VertexId root) {
  const MetricReport report = classify(g);
  std::vector<ApproxSolution> out;
  out.reserve(5);
  out.push_back(solve_dmst(g, root, &report));
  out.push_back(solve_ab(g, &report));
  out.push_back(solve_rab(g, &report));
  out.push_back(solve_pmch(g, &report));
  out.push_back(solve_pch(g, &report));
  return out;
}

}  // namespace semitsp
