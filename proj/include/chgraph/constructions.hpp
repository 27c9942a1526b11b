#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chgraph/digraph.hpp"

namespace chgraph {

enum class Family {
  Circulant,
  UniformGe,
  NonuniformRegular,
  NonuniformGe,
  Labeling,
  ForwardGreedy,
  RandomOriented,
};

const char *family_name(Family f);
Family family_from_name(const std::string &name);

// Declarative generation recipe. Every generator is a pure function of its
// spec, so serializing the spec is enough to reproduce any instance.
struct ConstructionSpec {
  Family family = Family::Circulant;
  int n = 1;
  int r = 1;
  std::uint64_t seed = 0;                   // ignored by deterministic families
  std::vector<int> surplus;                 // uniform_ge only
  bool oriented = false;                    // forward_greedy only

  std::string to_json() const;
  static ConstructionSpec from_json(const std::string &text);
};

// Vertex i points to (i+1) mod n, ..., (i+r) mod n. Every vertex has in- and
// out-degree exactly r.
Digraph circulant(int n, int r);

// Circulant base plus surplus[i] further consecutive targets for vertex i.
Digraph uniform_ge(int n, int r, const std::vector<int> &surplus);

// Every vertex gets exactly r out-neighbors sampled without replacement from
// the other n-1 vertices.
Digraph nonuniform_regular(int n, int r, std::uint64_t seed);

// Every vertex gets a seeded out-degree in [r, n-1], then that many sampled
// out-neighbors.
Digraph nonuniform_ge(int n, int r, std::uint64_t seed);

// Each unordered vertex pair independently takes one of three states (no arc,
// one direction, the other) with equal probability. Digon-free by
// construction; this is the sampling twin of the exhaustive oriented sweep.
Digraph random_oriented(int n, std::uint64_t seed);

// What the labeling generator did, in the order it did it. label_order[k] is
// the vertex that received label k (0-based). Arc (u,v) was drawn at the
// moment u was labeled, so "v was already labeled then" is exactly
// label index of v < label index of u.
struct LabelingTrace {
  std::vector<int> label_order;
  std::int64_t arcs_into_labeled = 0;
  std::optional<int> first_forced_label;  // 0-based; empty if never forced
};

// Incremental labeling procedure: start from one unlabeled vertex; to label a
// vertex, draw its r out-arcs preferring brand-new vertices (appended while
// the total stays below n), then existing unlabeled vertices, and labeled
// vertices only when nothing else is left. All choices are seeded-uniform
// among the eligible candidates.
std::pair<Digraph, LabelingTrace> labeling_generate(int n, int r,
                                                    std::uint64_t seed);

// Vertex i (ascending) takes r targets among i+1..n-1 while that many exist;
// the final r vertices take every remaining forward target plus seeded
// backward targets. With `oriented`, backward choices skip digon partners
// (and generation fails if that leaves too few candidates).
Digraph forward_greedy(int n, int r, std::uint64_t seed, bool oriented = false);

Digraph instantiate(const ConstructionSpec &spec);
std::pair<Digraph, LabelingTrace> instantiate_with_trace(
    const ConstructionSpec &spec);

// Measured verdicts for the claims the labeling procedure is meant to
// witness. Verdicts are data: a false one is recorded, never asserted.
struct LabelingClaims {
  int n = 0;
  int r = 0;
  int bound = 0;  // ceil(n/r)
  // A directed path of length <= bound-1 from every vertex labeled before
  // stage n-r (0-based) to the stage-(n-r) vertex, measured on the arcs that
  // existed at that stage.
  bool path_bound_holds = false;
  int max_path_to_forced_stage = 0;
  // At least r(r+1)/2 arcs end in already-labeled vertices. Counted two
  // ways, since "joins to labeled vertices" may mean arcs or distinct
  // targets; both are reported.
  std::int64_t arcs_into_labeled = 0;
  std::int64_t distinct_labeled_targets = 0;
  bool forced_arcs_bound_holds = false;
  bool forced_targets_bound_holds = false;
  // Every earlier-labeled vertex reaches every later-labeled vertex in the
  // finished digraph.
  bool reachability_holds = false;
};

LabelingClaims evaluate_labeling_trace(const Digraph &g,
                                       const LabelingTrace &trace, int r);

}  // namespace chgraph
