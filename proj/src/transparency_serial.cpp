#include <vector>

#include "chgraph/transparency.hpp"

namespace chgraph {

void bfs_row(const Digraph &g, int source, TransparencyMatrix &t) {
  std::vector<int> queue;
  queue.reserve(static_cast<std::size_t>(g.n()));
  queue.push_back(source);
  t.at(source, source) = 0;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const int u = queue[qi];
    const int du = *t.at(source, u);
    for (int v : g.out(u)) {
      if (!t.at(source, v)) {
        t.at(source, v) = du + 1;
        queue.push_back(v);
      }
    }
  }
}

TransparencyMatrix compute_transparency_serial(const Digraph &g) {
  TransparencyMatrix t(g.n());
  for (int s = 0; s < g.n(); ++s) bfs_row(g, s, t);
  return t;
}

}  // namespace chgraph
