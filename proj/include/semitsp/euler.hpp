#pragma once

#include "semitsp/graph.hpp"

namespace semitsp {

struct EulerianWalk {
  std::vector<VertexId> vertices;   // closed: first == last
  std::vector<Multiedge> edge_trace;  // edge_trace[i] joins vertices[i] and vertices[i+1]
};

// Enhanced Hierholzer walk: every multiedge is used exactly once, and at each
// extension an unused priority edge at the current vertex is taken before any
// other. Sub-tours splice in at the last appearance of their junction vertex.
// Requires even degrees, a connected multigraph, and (when the priority set
// is nonempty) a start vertex incident to a priority edge.
EulerianWalk eulerian_walk(const Multigraph& mg, std::span<const Multiedge> priority,
                           VertexId start);

}  // namespace semitsp
