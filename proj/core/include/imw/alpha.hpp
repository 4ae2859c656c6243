#ifndef IMW_ALPHA_HPP
#define IMW_ALPHA_HPP

#include "imw/graph.hpp"

namespace imw {

/// Exact maximum clique size, branch and bound with a greedy coloring bound.
int max_clique_size(const Graph& g);

/// Exact independence number alpha(g); the empty graph gives 0.
int independence_number(const Graph& g);

/// Chromatic number for graphs with alpha(g) <= 2, via the identity
/// chi(g) = n - max_matching(complement(g)): a proper coloring of such a
/// graph is a partition into cliques of size at most two.
/// Throws std::invalid_argument when alpha(g) >= 3.
int chromatic_number_alpha2(const Graph& g);

/// True iff deleting any single edge strictly increases alpha.
bool is_alpha_critical(const Graph& g);

}  // namespace imw

#endif
