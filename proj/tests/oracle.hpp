#pragma once

#include <optional>
#include <vector>

#include "chgraph/digraph.hpp"
#include "chgraph/rng.hpp"
#include "chgraph/transparency.hpp"

namespace chgraph::testing {

// Brute-force girth by depth-first path extension with branch-and-bound
// pruning. Deliberately avoids BFS distances so it stays an independent
// check on the transparency route. Desk-size inputs only.
std::optional<int> oracle_girth_dfs(const Digraph &g);

// Independent circuit enumerator: walks every vertex subset of size <= max
// and every cyclic order (minimum vertex pinned first) and keeps the
// arrangements whose arcs all exist. Exponential; n <= 7 territory.
std::vector<CycleCertificate> oracle_cycles_by_subsets(const Digraph &g,
                                                       int max_len);

Digraph transitive_tournament(int n);

// Erdos-Renyi-style digraph: each ordered pair becomes an arc with
// probability percent/100. Digons allowed.
Digraph random_digraph(int n, int percent, SplitMix64 &rng);

}  // namespace chgraph::testing
