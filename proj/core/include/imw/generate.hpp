#ifndef IMW_GENERATE_HPP
#define IMW_GENERATE_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "imw/graph.hpp"

namespace imw {

inline constexpr int kDefaultMaxEnumerationN = 10;

/// All triangle-free graphs on n vertices, one representative per
/// isomorphism class, in a deterministic order. Canonical-augmentation
/// generation: graphs are grown one vertex at a time (the new vertex is
/// joined to an independent set) and a child survives exactly when the added
/// vertex is equivalent, under the child's automorphisms, to the canonical
/// deletion vertex. Throws std::invalid_argument when n < 1 or n > max_n.
std::vector<Graph> enumerate_triangle_free(int n, int max_n = kDefaultMaxEnumerationN);

/// Streaming flavor of the above.
void enumerate_triangle_free(int n, const std::function<void(const Graph&)>& emit,
                             int max_n = kDefaultMaxEnumerationN);

/// Complements of enumerate_triangle_free: all graphs with alpha <= 2.
/// With exact=true, graphs with alpha = 1 (complete graphs) are dropped.
std::vector<Graph> enumerate_alpha2(int n, bool exact, int max_n = kDefaultMaxEnumerationN);

/// Deletes edges (lexicographically first eligible first) while alpha is
/// preserved, until every remaining edge is critical.
Graph alpha_critical_reduce(const Graph& g);

/// Complement of a random maximal triangle-free graph; deterministic per
/// (n, seed).
Graph random_alpha2(int n, std::uint64_t seed);

}  // namespace imw

#endif
