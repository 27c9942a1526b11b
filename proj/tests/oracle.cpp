#include "oracle.hpp"

#include <algorithm>

namespace chgraph::testing {

namespace {

// Extends a path rooted at `root` over vertices > root; closing back to the
// root records a circuit. `best` prunes everything at least as long as the
// shortest circuit already found.
void girth_dfs(const Digraph &g, int root, std::vector<int> &path,
               std::vector<bool> &on_path, int &best) {
  const int u = path.back();
  for (int v : g.out(u)) {
    if (v == root) {
      best = std::min(best, static_cast<int>(path.size()));
      continue;
    }
    if (v < root || on_path[static_cast<std::size_t>(v)]) continue;
    if (static_cast<int>(path.size()) + 1 >= best) continue;
    path.push_back(v);
    on_path[static_cast<std::size_t>(v)] = true;
    girth_dfs(g, root, path, on_path, best);
    on_path[static_cast<std::size_t>(v)] = false;
    path.pop_back();
  }
}

}  // namespace

std::optional<int> oracle_girth_dfs(const Digraph &g) {
  int best = g.n() + 1;
  for (int root = 0; root < g.n() && best > 2; ++root) {
    std::vector<int> path{root};
    std::vector<bool> on_path(static_cast<std::size_t>(g.n()), false);
    on_path[static_cast<std::size_t>(root)] = true;
    girth_dfs(g, root, path, on_path, best);
  }
  if (best > g.n()) return std::nullopt;
  return best;
}

std::vector<CycleCertificate> oracle_cycles_by_subsets(const Digraph &g,
                                                       int max_len) {
  std::vector<CycleCertificate> found;
  const int n = g.n();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> members;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) members.push_back(v);
    const int len = static_cast<int>(members.size());
    if (len < 2 || len > max_len) continue;
    // Min member pinned first; permute the rest.
    std::vector<int> rest(members.begin() + 1, members.end());
    std::sort(rest.begin(), rest.end());
    do {
      std::vector<int> cycle{members.front()};
      cycle.insert(cycle.end(), rest.begin(), rest.end());
      bool ok = true;
      for (int k = 0; k < len && ok; ++k)
        ok = g.has_arc(cycle[static_cast<std::size_t>(k)],
                       cycle[static_cast<std::size_t>((k + 1) % len)]);
      if (ok) found.push_back(CycleCertificate{cycle});
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
  return found;
}

Digraph transitive_tournament(int n) {
  Digraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_arc(u, v);
  return g;
}

Digraph random_digraph(int n, int percent, SplitMix64 &rng) {
  Digraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && rng.next_below(100) < static_cast<std::uint64_t>(percent))
        g.add_arc(u, v);
  return g;
}

}  // namespace chgraph::testing
