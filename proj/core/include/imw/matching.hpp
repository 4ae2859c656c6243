#ifndef IMW_MATCHING_HPP
#define IMW_MATCHING_HPP

#include <vector>

#include "imw/graph.hpp"

namespace imw {

/// Exact maximum matching size (number of pairwise vertex-disjoint edges),
/// blossom algorithm with full odd-cycle contraction.
int max_matching(const Graph& g);

/// The mate array of one maximum matching: mate[v] = partner or -1.
std::vector<int> max_matching_mates(const Graph& g);

}  // namespace imw

#endif
