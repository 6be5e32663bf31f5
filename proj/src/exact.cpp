#include "semitsp/exact.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>

namespace semitsp {

static void check_cap(int n, int cap, const char* what) {
  if (n > cap)
    raise(Errc::InstanceTooLarge,
          std::string(what) + " handles n <= " + std::to_string(cap) + ", got n = " + std::to_string(n));
}

ExactSolution brute_force(const CompleteGraph& g, int cap) {
  const int n = g.size();
  check_cap(n, cap, "brute_force");

  std::vector<VertexId> perm(n - 1);
  std::iota(perm.begin(), perm.end(), 1);

  std::vector<VertexId> best;
  double best_weight = std::numeric_limits<double>::infinity();
  do {
    if (perm.front() > perm.back()) continue;  // one direction per cycle
    double w = g.weight(0, perm.front()) + g.weight(perm.back(), 0);
    for (size_t i = 0; i + 1 < perm.size(); ++i) w += g.weight(perm[i], perm[i + 1]);
    // Lexicographic enumeration plus strict improvement leaves the
    // canonically smallest order among ties.
    if (w < best_weight) {
      best_weight = w;
      best = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<VertexId> order{0};
  order.insert(order.end(), best.begin(), best.end());
  ExactSolution s;
  s.cycle = make_cycle(g, order);
  s.weight = s.cycle.weight;
  s.method = ExactMethod::BruteForce;
  return s;
}

ExactSolution held_karp(const CompleteGraph& g, int cap) {
  const int n = g.size();
  check_cap(n, cap, "held_karp");

  const int m = n - 1;  // vertices 1..n-1 mapped to bits 0..m-1
  const size_t full = size_t{1} << m;
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> dp(full * m, inf);
  std::vector<int8_t> parent(full * m, -1);

  for (int x = 0; x < m; ++x) dp[(size_t{1} << x) * m + x] = g.weight(0, x + 1);

  // Every proper submask is numerically smaller, so ascending mask order
  // respects the recursion's dependencies.
  for (size_t mask = 1; mask < full; ++mask) {
    if (std::popcount(mask) < 2) continue;
    for (size_t bits = mask; bits;) {
      const int x = std::countr_zero(bits);
      bits &= bits - 1;
      const size_t prev = mask ^ (size_t{1} << x);
      double best = inf;
      int8_t best_y = -1;
      for (size_t ybits = prev; ybits;) {
        const int y = std::countr_zero(ybits);
        ybits &= ybits - 1;
        const double cand = dp[prev * m + y] + g.weight(y + 1, x + 1);
        if (cand < best) {  // strict: ties keep the smallest y
          best = cand;
          best_y = static_cast<int8_t>(y);
        }
      }
      dp[mask * m + x] = best;
      parent[mask * m + x] = best_y;
    }
  }

  const size_t all = full - 1;
  double best_total = inf;
  int last = -1;
  for (int x = 0; x < m; ++x) {
    const double cand = dp[all * m + x] + g.weight(x + 1, 0);
    if (cand < best_total) {
      best_total = cand;
      last = x;
    }
  }

  std::vector<VertexId> order;
  order.reserve(n);
  size_t mask = all;
  int x = last;
  while (x >= 0) {
    order.push_back(x + 1);
    const int px = parent[mask * m + x];
    mask ^= size_t{1} << x;
    x = px;
  }
  order.push_back(0);
  std::reverse(order.begin(), order.end());

  ExactSolution s;
  s.cycle = make_cycle(g, order);
  s.weight = s.cycle.weight;
  s.method = ExactMethod::HeldKarp;
  return s;
}

}  // namespace semitsp
