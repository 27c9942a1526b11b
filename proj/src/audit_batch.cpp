#include "chgraph/audit_batch.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "chgraph/constructions.hpp"
#include "chgraph/rng.hpp"

namespace chgraph {

namespace {

// A random instance that is guaranteed to have at least one arc.
Digraph draw_instance(int n_max, SplitMix64 &rng) {
  for (;;) {
    const int n = 2 + static_cast<int>(rng.next_below(
                          static_cast<std::uint64_t>(n_max - 1)));
    const std::uint64_t instance_seed = rng.next_u64();
    Digraph g = [&]() {
      switch (rng.next_below(3)) {
        case 0: {
          const int r = 1 + static_cast<int>(rng.next_below(
                                static_cast<std::uint64_t>(
                                    std::min(n - 1, 3))));
          return nonuniform_regular(n, r, instance_seed);
        }
        case 1: {
          const int r = 1 + static_cast<int>(rng.next_below(
                                static_cast<std::uint64_t>(
                                    std::min(n - 1, 3))));
          return nonuniform_ge(n, r, instance_seed);
        }
        default: return random_oriented(n, instance_seed);
      }
    }();
    if (g.arc_count() > 0) return g;
  }
}

}  // namespace

ContractionAuditSummary audit_contraction_batch(int n_max,
                                                std::uint64_t trials,
                                                std::uint64_t seed) {
  if (n_max < 2)
    throw std::invalid_argument("audit_contraction_batch requires n_max >= 2");
  ContractionAuditSummary summary;
  std::vector<std::pair<std::uint64_t, AuditReport>> found;
#pragma omp parallel
  {
    std::vector<std::pair<std::uint64_t, AuditReport>> local;
    std::uint64_t local_equal = 0;
#pragma omp for schedule(dynamic, 32) nowait
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(trials); ++k) {
      SplitMix64 rng(SplitMix64::derive(seed, static_cast<std::uint64_t>(k)));
      const Digraph g = draw_instance(n_max, rng);
      const std::vector<Arc> arcs = g.arcs();
      const Arc arc = arcs[static_cast<std::size_t>(
          rng.next_below(arcs.size()))];
      AuditReport report = audit_contraction(g, arc);
      if (report.equal)
        ++local_equal;
      else
        local.emplace_back(static_cast<std::uint64_t>(k), std::move(report));
    }
#pragma omp critical
    {
      summary.equal += local_equal;
      for (auto &item : local) found.push_back(std::move(item));
    }
  }
  std::sort(found.begin(), found.end(),
            [](const auto &a, const auto &b) { return a.first < b.first; });
  summary.mismatch = found.size();
  summary.cases = summary.equal + summary.mismatch;
  summary.mismatches.reserve(found.size());
  for (auto &item : found) summary.mismatches.push_back(std::move(item.second));
  return summary;
}

}  // namespace chgraph
