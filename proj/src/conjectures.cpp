#include "chgraph/conjectures.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "chgraph/edgelist.hpp"
#include "chgraph/rng.hpp"

namespace chgraph {

int range_of(int n, int r) {
  if (n < 1 || r < 1) throw std::invalid_argument("range_of requires n, r >= 1");
  return (n + r - 1) / r;
}

ConjectureReport check_ch(const Digraph &g, std::optional<int> r_override) {
  const int min_out = g.min_out_degree();
  if (min_out == 0)
    throw std::invalid_argument(
        "check_ch: minimum out-degree is 0, the hypothesis is void");
  if (r_override && (*r_override < 1 || *r_override > min_out))
    throw std::invalid_argument(
        "check_ch: explicit r must satisfy 1 <= r <= min out-degree");
  const int r = r_override.value_or(min_out);
  ConjectureReport report;
  report.conjecture = "CH";
  report.instance = serialize_edge_list(g);
  report.n = g.n();
  report.r = r;
  report.bound = range_of(g.n(), r);
  const auto gr = girth(compute_transparency(g));
  if (gr) report.girth_length = gr->length;
  report.holds = gr && gr->length <= report.bound;
  if (report.holds) report.certificate = shortest_cycle_certificate(g);
  return report;
}

ConjectureReport check_ch_equivalent(const Digraph &g, int r) {
  if (r < 2) throw std::invalid_argument("check_ch_equivalent requires r >= 2");
  ConjectureReport report;
  report.conjecture = "CH-equivalent";
  report.instance = serialize_edge_list(g);
  report.n = g.n();
  report.r = r;
  report.bound = range_of(g.n(), r);
  const auto gr = girth(compute_transparency(g));
  if (gr) report.girth_length = gr->length;
  const bool circuit_free_up_to_r = !gr || gr->length > r;
  report.holds = !(circuit_free_up_to_r && g.min_out_degree() >= report.bound);
  return report;
}

namespace {

std::optional<Arc> find_digon(const Digraph &g) {
  for (const Arc &a : g.arcs())
    if (a.tail < a.head && g.has_arc(a.head, a.tail)) return a;
  return std::nullopt;
}

}  // namespace

ConjectureReport check_seymour(const Digraph &g) {
  if (const auto digon = find_digon(g))
    throw std::invalid_argument(
        "check_seymour: digon between vertices " + std::to_string(digon->tail) +
        " and " + std::to_string(digon->head) +
        "; the hypothesis class is oriented digraphs");
  ConjectureReport report;
  report.conjecture = "Seymour";
  report.instance = serialize_edge_list(g);
  report.n = g.n();
  report.r = g.min_out_degree();
  report.bound = 0;
  const TransparencyMatrix t = compute_transparency(g);
  report.holds = false;
  report.ge2_variant_holds = false;
  for (int v = 0; v < g.n(); ++v) {
    const NeighborhoodCounts c = neighborhood_counts(t, v);
    if (!report.holds && c.second >= c.first) {
      report.holds = true;
      report.witness = v;
    }
    if (!*report.ge2_variant_holds && c.second_or_more >= c.first) {
      report.ge2_variant_holds = true;
      report.ge2_witness = v;
    }
  }
  return report;
}

namespace {

std::uint64_t pow3(int m) {
  std::uint64_t p = 1;
  for (int k = 0; k < m; ++k) p *= 3;
  return p;
}

int sweep_cap_from_env(int fallback) {
  if (const char *env = std::getenv("CHGRAPH_SWEEP_CAP")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return fallback;
}

bool ch_holds_fast(const Digraph &g) {
  const auto gr = girth(compute_transparency(g));
  return gr && gr->length <= range_of(g.n(), g.min_out_degree());
}

bool seymour_holds_fast(const Digraph &g) {
  const TransparencyMatrix t = compute_transparency(g);
  for (int v = 0; v < g.n(); ++v) {
    const NeighborhoodCounts c = neighborhood_counts(t, v);
    if (c.second >= c.first) return true;
  }
  return false;
}

struct SweepCell {
  std::uint64_t checked = 0;
  std::uint64_t held = 0;
  std::uint64_t violated = 0;
  std::uint64_t first_violation_code = UINT64_MAX;

  void absorb(const SweepCell &other) {
    checked += other.checked;
    held += other.held;
    violated += other.violated;
    first_violation_code =
        std::min(first_violation_code, other.first_violation_code);
  }
};

SweepCell sweep_one(int n, Predicate predicate, std::uint64_t code) {
  SweepCell cell;
  const Digraph g = decode_oriented(n, code);
  if (predicate == Predicate::CH && g.min_out_degree() == 0) return cell;
  cell.checked = 1;
  const bool ok = predicate == Predicate::CH ? ch_holds_fast(g)
                                             : seymour_holds_fast(g);
  if (ok) {
    cell.held = 1;
  } else {
    cell.violated = 1;
    cell.first_violation_code = code;
  }
  return cell;
}

SweepSummary finish_sweep(int n, Predicate predicate, std::uint64_t enumerated,
                          const SweepCell &cell) {
  SweepSummary summary;
  summary.n = n;
  summary.predicate = predicate;
  summary.enumerated = enumerated;
  summary.checked = cell.checked;
  summary.held = cell.held;
  summary.violated = cell.violated;
  if (cell.first_violation_code != UINT64_MAX)
    summary.first_violation =
        serialize_edge_list(decode_oriented(n, cell.first_violation_code));
  return summary;
}

void check_sweep_size(int n, const SweepOptions &opt) {
  if (n < 1) throw std::invalid_argument("sweep requires n >= 1");
  const int cap = sweep_cap_from_env(opt.cap);
  if (n > cap && !opt.force)
    throw std::invalid_argument(
        "sweep over n = " + std::to_string(n) + " exceeds the cap of " +
        std::to_string(cap) +
        " (the space grows as 3^(n(n-1)/2); pass --force to override)");
}

}  // namespace

Digraph decode_oriented(int n, std::uint64_t code) {
  Digraph g(n, true);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      switch (code % 3) {
        case 1: g.add_arc(u, v); break;
        case 2: g.add_arc(v, u); break;
        default: break;
      }
      code /= 3;
    }
  }
  return g;
}

SweepSummary exhaustive_sweep(int n, Predicate predicate,
                              const SweepOptions &opt) {
  check_sweep_size(n, opt);
  const std::uint64_t total = pow3(n * (n - 1) / 2);
  SweepCell cell;
#pragma omp parallel
  {
    SweepCell local;
#pragma omp for schedule(dynamic, 256) nowait
    for (std::int64_t code = 0; code < static_cast<std::int64_t>(total); ++code)
      local.absorb(sweep_one(n, predicate, static_cast<std::uint64_t>(code)));
#pragma omp critical
    cell.absorb(local);
  }
  return finish_sweep(n, predicate, total, cell);
}

SweepSummary exhaustive_sweep_serial(int n, Predicate predicate,
                                     const SweepOptions &opt) {
  check_sweep_size(n, opt);
  const std::uint64_t total = pow3(n * (n - 1) / 2);
  SweepCell cell;
  for (std::uint64_t code = 0; code < total; ++code)
    cell.absorb(sweep_one(n, predicate, code));
  return finish_sweep(n, predicate, total, cell);
}

std::vector<ConjectureReport> search_counterexamples(
    const ConstructionSpec &template_spec, Predicate predicate,
    std::uint64_t trials, std::uint64_t base_seed) {
  if (trials < 1) throw std::invalid_argument("search requires trials >= 1");
  if (predicate == Predicate::Seymour &&
      template_spec.family != Family::RandomOriented &&
      !(template_spec.family == Family::ForwardGreedy && template_spec.oriented))
    throw std::invalid_argument(
        "Seymour search needs a digon-free family (random_oriented, or "
        "forward_greedy with oriented extras)");

  std::vector<std::pair<std::uint64_t, ConjectureReport>> found;
#pragma omp parallel
  {
    std::vector<std::pair<std::uint64_t, ConjectureReport>> local;
#pragma omp for schedule(dynamic, 64) nowait
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(trials); ++k) {
      ConstructionSpec spec = template_spec;
      spec.seed = SplitMix64::derive(base_seed, static_cast<std::uint64_t>(k));
      const Digraph g = instantiate(spec);
      if (predicate == Predicate::CH && g.min_out_degree() == 0) continue;
      ConjectureReport report =
          predicate == Predicate::CH ? check_ch(g) : check_seymour(g);
      if (!report.holds) {
        report.spec = spec;
        local.emplace_back(static_cast<std::uint64_t>(k), std::move(report));
      }
    }
#pragma omp critical
    for (auto &item : local) found.push_back(std::move(item));
  }
  std::sort(found.begin(), found.end(),
            [](const auto &a, const auto &b) { return a.first < b.first; });
  std::vector<ConjectureReport> out;
  out.reserve(found.size());
  for (auto &item : found) out.push_back(std::move(item.second));
  return out;
}

}  // namespace chgraph
