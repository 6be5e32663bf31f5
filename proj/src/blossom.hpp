#pragma once

#include <cstdint>
#include <vector>

namespace semitsp::detail {

// Maximum weight matching on a general graph, Edmonds' blossom algorithm in
// its O(n^3) primal-dual form. Weights must be integers; all dual arithmetic
// stays integral, so there are no tolerance decisions anywhere.
//
// The matching maximizes cardinality first and total weight among
// maximum-cardinality matchings, which on a complete graph with an even
// vertex count yields a perfect matching.
//
// Returns mate[v] = matched partner of v, or -1.
std::vector<int> max_weight_matching(int nvertex,
                                     const std::vector<std::vector<int64_t>>& weight);

}  // namespace semitsp::detail
