#pragma once

#include <cstdint>
#include <vector>

namespace chgraph {

// A directed edge. Vertices are 0-based indices; tail != head always.
struct Arc {
  int tail = 0;
  int head = 0;

  friend bool operator==(const Arc &, const Arc &) = default;
};

enum class ArcKind { Forward, Backward };

// Classification of an arc by index order: (u,v) with u < v is a forward
// edge, u > v a backward edge; `difference` is |u - v|.
struct ArcClass {
  ArcKind kind = ArcKind::Forward;
  int difference = 0;
};

ArcClass classify_arc(const Arc &a);

// Per-difference arc counts, split by direction. Index d in [1, n-1] holds
// the number of arcs whose endpoint index gap is exactly d; index 0 unused.
struct DifferenceProfile {
  std::vector<std::int64_t> forward;
  std::vector<std::int64_t> backward;

  std::int64_t total() const;
};

// Simple digraph: no self-loops, no parallel arcs. With `oriented` set,
// digons ((u,v) together with (v,u)) are rejected as well. Out-adjacency
// lists are kept sorted, so equal graphs serialize identically.
//
// Immutable by convention once built: analysis code never mutates a Digraph,
// and any number of threads may read one concurrently.
class Digraph {
 public:
  explicit Digraph(int n, bool oriented = false);

  void add_arc(Arc a);
  void add_arc(int tail, int head) { add_arc(Arc{tail, head}); }

  int n() const { return static_cast<int>(out_adj_.size()); }
  std::int64_t arc_count() const { return arc_count_; }
  bool oriented() const { return oriented_; }
  bool has_arc(int tail, int head) const;

  const std::vector<int> &out(int v) const { return out_adj_[v]; }
  int out_degree(int v) const { return static_cast<int>(out_adj_[v].size()); }
  int min_out_degree() const;
  int max_out_degree() const;

  // All arcs in (tail, head) lexicographic order.
  std::vector<Arc> arcs() const;

  friend bool operator==(const Digraph &, const Digraph &) = default;

 private:
  std::vector<std::vector<int>> out_adj_;
  std::int64_t arc_count_ = 0;
  bool oriented_ = false;
};

DifferenceProfile difference_profile(const Digraph &g);

// Maximum arc count of a simple digraph on p vertices containing no directed
// circuit: p(p-1)/2, attained by taking every forward arc.
std::int64_t ex_count(std::int64_t p);

}  // namespace chgraph
