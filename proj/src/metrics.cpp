#include "semitsp/metrics.hpp"

#include <algorithm>
#include <cmath>

namespace semitsp {

Walk ShortestPathTable::path(VertexId from, VertexId to) const {
  Walk out{from};
  VertexId cur = from;
  while (cur != to) {
    cur = next_hop[static_cast<size_t>(cur) * n + to];
    out.push_back(cur);
  }
  return out;
}

ShortestPathTable floyd_warshall(const CompleteGraph& g) {
  const int n = g.size();
  ShortestPathTable t;
  t.n = n;
  t.dist = g.raw();  // direct edges; 0 on the diagonal

  for (int k = 0; k < n; ++k) {
    const double* dk = t.dist.data() + static_cast<size_t>(k) * n;
    for (int i = 0; i < n; ++i) {
      double* di = t.dist.data() + static_cast<size_t>(i) * n;
      const double dik = di[k];
      if (i == k) continue;
      for (int j = 0; j < n; ++j) {
        const double via = dik + dk[j];
        if (via < di[j]) di[j] = via;
      }
    }
  }

  // Greedy reconstruction: the smallest first hop that stays on a shortest
  // path gives the lexicographically smallest vertex sequence. Relaxation
  // sums are re-associated here, so tightness is tested with a relative
  // slack instead of exact equality. Requiring the remaining distance to
  // shrink keeps the walk finite.
  t.next_hop.assign(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        t.next_hop[static_cast<size_t>(i) * n + j] = i;
        continue;
      }
      const double dij = t.distance(i, j);
      const double tol = 1e-12 * dij;
      VertexId hop = -1;
      for (int u = 0; u < n; ++u) {
        if (u == i || t.distance(u, j) >= dij) continue;
        if (std::abs(g.weight(i, u) + t.distance(u, j) - dij) <= tol) {
          hop = u;
          break;
        }
      }
      if (hop == -1) {
        // Association drift pushed every hop past the tolerance; take the
        // tightest one that still makes progress.
        double best_slack = 0.0;
        for (int u = 0; u < n; ++u) {
          if (u == i || t.distance(u, j) >= dij) continue;
          const double slack = std::abs(g.weight(i, u) + t.distance(u, j) - dij);
          if (hop == -1 || slack < best_slack) {
            hop = u;
            best_slack = slack;
          }
        }
      }
      t.next_hop[static_cast<size_t>(i) * n + j] = hop;
    }
  }
  return t;
}

double compute_beta(const CompleteGraph& g) {
  const int n = g.size();
  double beta = 1.0;
  for (int x = 0; x < n; ++x)
    for (int z = x + 1; z < n; ++z) {
      const double direct = g.weight(x, z);
      for (int y = 0; y < n; ++y) {
        if (y == x || y == z) continue;
        const double ratio = direct / (g.weight(x, y) + g.weight(y, z));
        if (ratio > beta) beta = ratio;
      }
    }
  return beta;
}

double compute_gamma(const CompleteGraph& g, const ShortestPathTable& sp) {
  const int n = g.size();
  double gamma = 1.0;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      const double ratio = g.weight(x, y) / sp.distance(x, y);
      if (ratio > gamma) gamma = ratio;
    }
  return gamma;
}

double compute_gamma(const CompleteGraph& g) { return compute_gamma(g, floyd_warshall(g)); }

MetricReport classify(const CompleteGraph& g) {
  MetricReport r;
  r.beta = compute_beta(g);
  r.gamma = compute_gamma(g);
  r.is_metric = r.beta <= 1.0 + 1e-9;
  return r;
}

}  // namespace semitsp
