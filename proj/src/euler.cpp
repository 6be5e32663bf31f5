#include "semitsp/euler.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace semitsp {

namespace {

struct Incidence {
  VertexId neighbor;
  int edge_index;
};

}  // namespace

EulerianWalk eulerian_walk(const Multigraph& mg, std::span<const Multiedge> priority,
                           VertexId start) {
  const auto& edges = mg.edges;
  std::set<VertexId> verts(mg.vertices.begin(), mg.vertices.end());
  if (verts.empty()) raise(Errc::MalformedInput, "multigraph has no vertices");

  {
    std::set<Multiedge> distinct(edges.begin(), edges.end());
    if (distinct.size() != edges.size())
      raise(Errc::MalformedInput, "multiedges sharing an edge must carry distinct tags");
  }

  std::map<VertexId, std::vector<Incidence>> adj;
  for (VertexId v : verts) adj[v];
  for (size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i].edge;
    if (!verts.count(e.a) || !verts.count(e.b))
      raise(Errc::MalformedInput, "multiedge endpoint outside the vertex set");
    adj[e.a].push_back({e.b, static_cast<int>(i)});
    adj[e.b].push_back({e.a, static_cast<int>(i)});
  }
  // Deterministic edge choice: smallest neighbor, then smallest tag.
  for (auto& [v, inc] : adj)
    std::sort(inc.begin(), inc.end(), [&](const Incidence& x, const Incidence& y) {
      if (x.neighbor != y.neighbor) return x.neighbor < y.neighbor;
      return edges[x.edge_index].tag < edges[y.edge_index].tag;
    });

  for (const auto& [v, inc] : adj)
    if (inc.size() % 2 != 0)
      raise(Errc::OddDegreeVertex, "vertex " + std::to_string(v) + " has odd degree " +
                                       std::to_string(inc.size()));

  // Connectivity over the whole vertex set.
  {
    std::set<VertexId> seen{*verts.begin()};
    std::vector<VertexId> stack{*verts.begin()};
    while (!stack.empty()) {
      const VertexId u = stack.back();
      stack.pop_back();
      for (const Incidence& inc : adj[u])
        if (seen.insert(inc.neighbor).second) stack.push_back(inc.neighbor);
    }
    if (seen.size() != verts.size())
      raise(Errc::DisconnectedMultigraph, "multigraph is not connected");
  }

  std::vector<char> is_priority(edges.size(), 0);
  for (const Multiedge& pe : priority) {
    const auto it = std::find(edges.begin(), edges.end(), pe);
    if (it == edges.end())
      raise(Errc::MalformedInput, "priority multiedge is not part of the multigraph");
    is_priority[it - edges.begin()] = 1;
  }

  if (!verts.count(start)) raise(Errc::BadStartVertex, "start vertex " + std::to_string(start));
  if (!priority.empty()) {
    bool incident = false;
    for (const Incidence& inc : adj[start]) incident = incident || is_priority[inc.edge_index];
    if (!incident)
      raise(Errc::BadStartVertex,
            "start vertex " + std::to_string(start) + " touches no priority edge");
  }

  std::vector<char> used(edges.size(), 0);
  std::map<VertexId, size_t> remaining;
  for (const auto& [v, inc] : adj) remaining[v] = inc.size();

  // Greedy closed sub-walk from `from`; stops when the current vertex has no
  // unused edge, which by the parity argument happens back at `from`.
  auto grow = [&](VertexId from, std::vector<VertexId>& walk_v, std::vector<Multiedge>& walk_e) {
    walk_v.push_back(from);
    VertexId cur = from;
    while (remaining[cur] > 0) {
      const Incidence* chosen = nullptr;
      for (const Incidence& inc : adj[cur])
        if (!used[inc.edge_index] && is_priority[inc.edge_index]) {
          chosen = &inc;
          break;
        }
      if (!chosen)
        for (const Incidence& inc : adj[cur])
          if (!used[inc.edge_index]) {
            chosen = &inc;
            break;
          }
      used[chosen->edge_index] = 1;
      --remaining[cur];
      --remaining[chosen->neighbor];
      walk_e.push_back(edges[chosen->edge_index]);
      cur = chosen->neighbor;
      walk_v.push_back(cur);
    }
    if (walk_v.front() != walk_v.back())
      throw std::logic_error("eulerian sub-walk did not close");
  };

  EulerianWalk out;
  grow(start, out.vertices, out.edge_trace);

  // Splice remaining sub-tours at the last appearance of the first vertex
  // (in walk order) that still has unused incident edges.
  while (out.edge_trace.size() < edges.size()) {
    size_t pos = 0;
    while (pos < out.vertices.size() && remaining[out.vertices[pos]] == 0) ++pos;
    if (pos == out.vertices.size())
      throw std::logic_error("unused edges remain but no junction vertex found");
    const VertexId x = out.vertices[pos];
    size_t last = out.vertices.size();
    for (size_t i = 0; i < out.vertices.size(); ++i)
      if (out.vertices[i] == x) last = i;

    std::vector<VertexId> sub_v;
    std::vector<Multiedge> sub_e;
    grow(x, sub_v, sub_e);

    out.vertices.insert(out.vertices.begin() + last + 1, sub_v.begin() + 1, sub_v.end());
    out.edge_trace.insert(out.edge_trace.begin() + last, sub_e.begin(), sub_e.end());
  }
  return out;
}

}  // namespace semitsp
