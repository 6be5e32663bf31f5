#pragma once

#include "semitsp/graph.hpp"

namespace semitsp {

enum class ExactMethod { BruteForce, HeldKarp };

struct ExactSolution {
  HamiltonianCycle cycle;
  double weight = 0.0;
  ExactMethod method = ExactMethod::BruteForce;
};

inline constexpr int kBruteForceCap = 12;
inline constexpr int kHeldKarpCap = 20;  // O(n * 2^n) table stays under ~200 MB

// Enumerates the (n-1)!/2 canonical tours (vertex 0 first, second element
// below the last) and returns a minimum; equal minima resolve to the
// canonically smallest order.
ExactSolution brute_force(const CompleteGraph& g, int cap = kBruteForceCap);

// Bitmask dynamic program over subsets of {1..n-1}; argmin ties go to the
// smallest vertex so reconstruction is deterministic.
ExactSolution held_karp(const CompleteGraph& g, int cap = kHeldKarpCap);

}  // namespace semitsp
