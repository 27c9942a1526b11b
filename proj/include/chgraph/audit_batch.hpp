#pragma once

#include <cstdint>
#include <vector>

#include "chgraph/transparency.hpp"

namespace chgraph {

struct ContractionAuditSummary {
  std::uint64_t cases = 0;
  std::uint64_t equal = 0;
  std::uint64_t mismatch = 0;
  std::vector<AuditReport> mismatches;  // in trial order
};

// Seeded batch audit of the incremental contraction rules: each trial draws
// a random instance with 2 <= n <= n_max (mixed families, arcs guaranteed)
// and a random arc, then compares the rule update against recomputation.
// Exactly one verdict per trial; mismatches are collected, not raised.
ContractionAuditSummary audit_contraction_batch(int n_max,
                                                std::uint64_t trials,
                                                std::uint64_t seed);

}  // namespace chgraph
