#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chgraph/digraph.hpp"

namespace chgraph {

// Directed distance. nullopt means no directed path exists; it is kept as an
// explicit empty state (never a sentinel integer) so min/plus arithmetic on
// missing paths cannot happen by accident.
using Distance = std::optional<int>;

// All-pairs directed-distance table: entry (i,j) is the length of the
// shortest directed path i -> j, 0 on the diagonal, empty when unreachable.
class TransparencyMatrix {
 public:
  explicit TransparencyMatrix(int n)
      : n_(n), entries_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {}

  int n() const { return n_; }
  Distance &at(int i, int j) {
    return entries_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
                    static_cast<std::size_t>(j)];
  }
  const Distance &at(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
                    static_cast<std::size_t>(j)];
  }

  friend bool operator==(const TransparencyMatrix &,
                         const TransparencyMatrix &) = default;

 private:
  int n_;
  std::vector<Distance> entries_;
};

// An explicit directed circuit: vertices[k] -> vertices[k+1] and
// vertices.back() -> vertices.front() are all arcs, vertices are distinct,
// length >= 2 (a digon). Stored with the minimum vertex first so equal
// circuits compare equal.
struct CycleCertificate {
  std::vector<int> vertices;

  int length() const { return static_cast<int>(vertices.size()); }
  bool validate(const Digraph &g) const;
  void canonicalize();

  friend bool operator==(const CycleCertificate &,
                         const CycleCertificate &) = default;
};

// Per-source BFS over all sources, OpenMP-parallel. Rows are independent, so
// the result is identical for every thread count.
TransparencyMatrix compute_transparency(const Digraph &g);

// Single-threaded reference implementation; kept as the comparison baseline
// for tests and the benchmark.
TransparencyMatrix compute_transparency_serial(const Digraph &g);

struct GirthResult {
  int length = 0;
  int i = 0;  // witnessing complementary pair
  int j = 0;
};

// Shortest directed circuit length, found as the minimum finite complementary
// sum at(i,j) + at(j,i) over i != j. Empty when the digraph is acyclic.
std::optional<GirthResult> girth(const TransparencyMatrix &t);

// Materializes a circuit whose length equals girth(); empty iff acyclic.
std::optional<CycleCertificate> shortest_cycle_certificate(const Digraph &g);

struct ContractionResult {
  Digraph graph;
  // old_to_new[v] is v's index in the contracted graph; the contracted tail
  // maps to the merged vertex (the head's slot).
  std::vector<int> old_to_new;
};

// Graph-level contraction of arc (i,j): vertex i is merged onto j, arcs are
// re-targeted, self-loops dropped, parallel arcs deduplicated, and indices
// above i shift down by one. The result always permits digons: contracting a
// 3-cycle yields one even when the input was oriented.
ContractionResult contract_graph(const Digraph &g, Arc a);

// Incremental matrix update for the contraction (i => j), i and j at distance
// 1. Applies local rules only: row/column j are min-merged with row/column i,
// then every entry whose pre-merge value satisfied
// at(m,n) == at(m,i) + at(j,n) + 1 (all three finite) is decremented, then
// row/column i are deleted. These rules are a closed-form shortcut under
// audit; audit_contraction measures their agreement with full recomputation,
// and nothing else in the library assumes they are sound.
TransparencyMatrix contract_matrix(const TransparencyMatrix &t, int i, int j);

// Outcome of checking one closed-form rule against a brute-force oracle.
// A mismatch is a recorded finding, not an error.
struct AuditReport {
  std::string claim;
  std::string instance;  // serialized edge list, plus context where useful
  std::string expected;  // oracle value
  std::string actual;    // rule value
  bool equal = false;
  std::string detail;    // first differing entry on mismatch
};

// Compares contract_matrix against compute_transparency(contract_graph(...)).
AuditReport audit_contraction(const Digraph &g, Arc a);

// Ordered pairs (i,j) with at(i,j) == 1, i.e. the pairs available for
// contraction.
std::vector<std::pair<int, int>> contractible_pairs(const TransparencyMatrix &t);

// Row counts used by the second-neighborhood checks: entries equal to 1,
// equal to 2, and finite >= 2. The last is the looser reading in which any
// vertex beyond distance one counts as a second neighbor; both are reported
// side by side wherever one is used.
struct NeighborhoodCounts {
  int first = 0;
  int second = 0;
  int second_or_more = 0;
};

NeighborhoodCounts neighborhood_counts(const TransparencyMatrix &t, int v);

// {"n": int, "entries": [[int or "inf", ...], ...]}
std::string matrix_to_json(const TransparencyMatrix &t);
TransparencyMatrix matrix_from_json(const std::string &text);

}  // namespace chgraph
