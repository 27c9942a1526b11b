#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chgraph/constructions.hpp"
#include "chgraph/digraph.hpp"
#include "chgraph/transparency.hpp"

namespace chgraph {

// ceil(n/r): the girth bound for minimum out-degree r on n vertices. The
// k-th range characterization holds: range_of(n,r) == k iff (k-1)r < n <= kr.
int range_of(int n, int r);

enum class Predicate { CH, Seymour };

struct ConjectureReport {
  std::string conjecture;  // "CH" | "CH-equivalent" | "Seymour"
  std::string instance;    // serialized edge list
  std::optional<ConstructionSpec> spec;
  int n = 0;
  int r = 0;
  int bound = 0;  // ceil(n/r)
  std::optional<int> girth_length;
  bool holds = false;
  std::optional<CycleCertificate> certificate;  // CH: the short circuit
  std::optional<int> witness;                   // Seymour: vertex with |N++| >= |N+|
  // Seymour only: the looser variant counting all finite distances >= 2 as
  // second neighbors, reported next to the exact-distance-2 verdict.
  std::optional<bool> ge2_variant_holds;
  std::optional<int> ge2_witness;
};

// Girth <= ceil(n/r) with r the minimum out-degree. Rejects r == 0: a sink
// vertex voids the hypothesis. An explicit r (at most the minimum
// out-degree) tests the weaker bound ceil(n/r) instead.
ConjectureReport check_ch(const Digraph &g,
                          std::optional<int> r_override = std::nullopt);

// Contrapositive form: a digraph without circuits of length <= r must have
// minimum out-degree < ceil(n/r). check_ch(g) and
// check_ch_equivalent(g, check_ch(g).bound) always agree.
ConjectureReport check_ch_equivalent(const Digraph &g, int r);

// Some vertex has at least as many exact-distance-2 neighbors as
// out-neighbors. Digons are rejected by name: the hypothesis class is
// oriented digraphs, and silently filtering would hide generator bugs.
ConjectureReport check_seymour(const Digraph &g);

struct SweepSummary {
  int n = 0;
  Predicate predicate = Predicate::CH;
  std::uint64_t enumerated = 0;  // 3^(n(n-1)/2)
  std::uint64_t checked = 0;     // CH skips instances with a sink vertex
  std::uint64_t held = 0;
  std::uint64_t violated = 0;
  std::optional<std::string> first_violation;  // edge list, lowest code
};

struct SweepOptions {
  int cap = 5;  // overridable via CHGRAPH_SWEEP_CAP or --force
  bool force = false;
};

// Enumerates every labeled oriented digraph on n vertices (three states per
// unordered pair) and applies the predicate. OpenMP-parallel over the code
// space; the summary is a commutative reduction, so it is identical for
// every thread count.
SweepSummary exhaustive_sweep(int n, Predicate predicate,
                              const SweepOptions &opt = {});

// Single-threaded reference for the sweep, kept for tests and the benchmark.
SweepSummary exhaustive_sweep_serial(int n, Predicate predicate,
                                     const SweepOptions &opt = {});

// The labeled oriented digraph with the given code in the sweep's
// enumeration order (base-3 digits over vertex pairs in lex order).
Digraph decode_oriented(int n, std::uint64_t code);

// Runs the predicate across `trials` seeded instances of the template spec
// (instance k uses seed derive(base_seed, k)) and returns only the
// violations, ordered by trial index. Parallel across trials.
std::vector<ConjectureReport> search_counterexamples(
    const ConstructionSpec &template_spec, Predicate predicate,
    std::uint64_t trials, std::uint64_t base_seed);

}  // namespace chgraph
