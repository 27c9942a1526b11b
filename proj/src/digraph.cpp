#include "chgraph/digraph.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

namespace chgraph {

ArcClass classify_arc(const Arc &a) {
  return ArcClass{a.tail < a.head ? ArcKind::Forward : ArcKind::Backward,
                  std::abs(a.tail - a.head)};
}

std::int64_t DifferenceProfile::total() const {
  return std::accumulate(forward.begin(), forward.end(), std::int64_t{0}) +
         std::accumulate(backward.begin(), backward.end(), std::int64_t{0});
}

Digraph::Digraph(int n, bool oriented) : oriented_(oriented) {
  if (n < 1) throw std::invalid_argument("digraph needs at least one vertex");
  out_adj_.resize(static_cast<std::size_t>(n));
}

void Digraph::add_arc(Arc a) {
  if (a.tail < 0 || a.tail >= n() || a.head < 0 || a.head >= n())
    throw std::invalid_argument("arc endpoint out of range: (" +
                                std::to_string(a.tail) + "," +
                                std::to_string(a.head) + ")");
  if (a.tail == a.head)
    throw std::invalid_argument("self-loop rejected at vertex " +
                                std::to_string(a.tail));
  if (has_arc(a.tail, a.head))
    throw std::invalid_argument("duplicate arc (" + std::to_string(a.tail) +
                                "," + std::to_string(a.head) + ")");
  if (oriented_ && has_arc(a.head, a.tail))
    throw std::invalid_argument("digon rejected in oriented digraph: (" +
                                std::to_string(a.tail) + "," +
                                std::to_string(a.head) + ")");
  auto &lst = out_adj_[static_cast<std::size_t>(a.tail)];
  lst.insert(std::upper_bound(lst.begin(), lst.end(), a.head), a.head);
  ++arc_count_;
}

bool Digraph::has_arc(int tail, int head) const {
  const auto &lst = out_adj_[static_cast<std::size_t>(tail)];
  return std::binary_search(lst.begin(), lst.end(), head);
}

int Digraph::min_out_degree() const {
  int m = n() - 1;
  for (int v = 0; v < n(); ++v) m = std::min(m, out_degree(v));
  return std::max(m, 0);
}

int Digraph::max_out_degree() const {
  int m = 0;
  for (int v = 0; v < n(); ++v) m = std::max(m, out_degree(v));
  return m;
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> out;
  out.reserve(static_cast<std::size_t>(arc_count_));
  for (int u = 0; u < n(); ++u)
    for (int v : out_adj_[static_cast<std::size_t>(u)])
      out.push_back(Arc{u, v});
  return out;
}

DifferenceProfile difference_profile(const Digraph &g) {
  DifferenceProfile p;
  p.forward.assign(static_cast<std::size_t>(g.n()), 0);
  p.backward.assign(static_cast<std::size_t>(g.n()), 0);
  for (const Arc &a : g.arcs()) {
    const ArcClass c = classify_arc(a);
    auto &side = c.kind == ArcKind::Forward ? p.forward : p.backward;
    ++side[static_cast<std::size_t>(c.difference)];
  }
  return p;
}

std::int64_t ex_count(std::int64_t p) {
  if (p < 1) throw std::invalid_argument("ex_count requires p >= 1");
  return p * (p - 1) / 2;
}

}  // namespace chgraph
