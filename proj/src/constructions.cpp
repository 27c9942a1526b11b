#include "chgraph/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "chgraph/rng.hpp"
#include "chgraph/transparency.hpp"
#include "json.hpp"

namespace chgraph {

namespace {

void check_n_r(int n, int r) {
  if (n < 2 || r < 1 || r >= n)
    throw std::invalid_argument("family parameters require 1 <= r < n");
}

}  // namespace

const char *family_name(Family f) {
  switch (f) {
    case Family::Circulant: return "circulant";
    case Family::UniformGe: return "uniform_ge";
    case Family::NonuniformRegular: return "nonuniform_regular";
    case Family::NonuniformGe: return "nonuniform_ge";
    case Family::Labeling: return "labeling";
    case Family::ForwardGreedy: return "forward_greedy";
    case Family::RandomOriented: return "random_oriented";
  }
  throw std::logic_error("unknown family");
}

Family family_from_name(const std::string &name) {
  for (Family f :
       {Family::Circulant, Family::UniformGe, Family::NonuniformRegular,
        Family::NonuniformGe, Family::Labeling, Family::ForwardGreedy,
        Family::RandomOriented}) {
    if (name == family_name(f)) return f;
  }
  throw std::invalid_argument("unknown family: " + name);
}

std::string ConstructionSpec::to_json() const {
  nlohmann::json extras = nlohmann::json::object();
  if (family == Family::UniformGe) extras["surplus"] = surplus;
  if (family == Family::ForwardGreedy) extras["oriented"] = oriented;
  nlohmann::json obj;
  obj["family"] = family_name(family);
  obj["n"] = n;
  obj["r"] = r;
  obj["seed"] = seed;
  obj["extras"] = std::move(extras);
  return obj.dump();
}

ConstructionSpec ConstructionSpec::from_json(const std::string &text) {
  const nlohmann::json obj = nlohmann::json::parse(text);
  ConstructionSpec spec;
  spec.family = family_from_name(obj.at("family").get<std::string>());
  spec.n = obj.at("n").get<int>();
  spec.r = obj.at("r").get<int>();
  if (obj.contains("seed")) spec.seed = obj["seed"].get<std::uint64_t>();
  if (obj.contains("extras")) {
    const auto &extras = obj["extras"];
    if (extras.contains("surplus"))
      spec.surplus = extras["surplus"].get<std::vector<int>>();
    if (extras.contains("oriented"))
      spec.oriented = extras["oriented"].get<bool>();
  }
  return spec;
}

Digraph circulant(int n, int r) {
  check_n_r(n, r);
  Digraph g(n);
  for (int i = 0; i < n; ++i)
    for (int d = 1; d <= r; ++d) g.add_arc(i, (i + d) % n);
  return g;
}

Digraph uniform_ge(int n, int r, const std::vector<int> &surplus) {
  check_n_r(n, r);
  if (static_cast<int>(surplus.size()) != n)
    throw std::invalid_argument("surplus list must have one entry per vertex");
  for (int s : surplus)
    if (s < 0 || r + s >= n)
      throw std::invalid_argument("surplus degree overflow: need r + s < n");
  Digraph g(n);
  for (int i = 0; i < n; ++i)
    for (int d = 1; d <= r + surplus[static_cast<std::size_t>(i)]; ++d)
      g.add_arc(i, (i + d) % n);
  return g;
}

namespace {

std::vector<int> other_vertices(int n, int v) {
  std::vector<int> pool;
  pool.reserve(static_cast<std::size_t>(n) - 1);
  for (int u = 0; u < n; ++u)
    if (u != v) pool.push_back(u);
  return pool;
}

}  // namespace

Digraph nonuniform_regular(int n, int r, std::uint64_t seed) {
  check_n_r(n, r);
  SplitMix64 rng(seed);
  Digraph g(n);
  for (int v = 0; v < n; ++v) {
    for (int u : rng.sample(other_vertices(n, v), static_cast<std::size_t>(r)))
      g.add_arc(v, u);
  }
  return g;
}

Digraph nonuniform_ge(int n, int r, std::uint64_t seed) {
  check_n_r(n, r);
  SplitMix64 rng(seed);
  Digraph g(n);
  for (int v = 0; v < n; ++v) {
    const int deg =
        r + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n - r)));
    for (int u :
         rng.sample(other_vertices(n, v), static_cast<std::size_t>(deg)))
      g.add_arc(v, u);
  }
  return g;
}

Digraph random_oriented(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_oriented requires n >= 1");
  SplitMix64 rng(seed);
  Digraph g(n, true);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      switch (rng.next_below(3)) {
        case 1: g.add_arc(u, v); break;
        case 2: g.add_arc(v, u); break;
        default: break;
      }
    }
  }
  return g;
}

std::pair<Digraph, LabelingTrace> labeling_generate(int n, int r,
                                                    std::uint64_t seed) {
  check_n_r(n, r);
  SplitMix64 rng(seed);
  Digraph g(n);
  LabelingTrace trace;

  // Vertices 0..created-1 exist; label[v] is the 0-based label or -1.
  int created = 1;
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  int next_label = 0;

  while (next_label < n) {
    std::vector<int> unlabeled;
    for (int u = 0; u < created; ++u)
      if (label[static_cast<std::size_t>(u)] == -1) unlabeled.push_back(u);
    if (unlabeled.empty())
      throw std::logic_error("labeling_generate: no unlabeled vertex left");
    const int v =
        unlabeled[static_cast<std::size_t>(rng.next_below(unlabeled.size()))];

    // Targets, in preference order: new vertices while the budget allows,
    // then existing unlabeled vertices, then labeled ones.
    int remaining = r;
    while (remaining > 0 && created < n) {
      g.add_arc(v, created);
      ++created;
      --remaining;
    }
    std::vector<int> unlabeled_pool;
    std::vector<int> labeled_pool;
    for (int u = 0; u < created; ++u) {
      if (u == v || g.has_arc(v, u)) continue;
      (label[static_cast<std::size_t>(u)] == -1 ? unlabeled_pool : labeled_pool)
          .push_back(u);
    }
    for (int u : rng.sample(std::move(unlabeled_pool),
                            static_cast<std::size_t>(remaining))) {
      g.add_arc(v, u);
      --remaining;
    }
    if (remaining > 0) {
      if (!trace.first_forced_label) trace.first_forced_label = next_label;
      for (int u : rng.sample(std::move(labeled_pool),
                              static_cast<std::size_t>(remaining))) {
        g.add_arc(v, u);
        trace.arcs_into_labeled += 1;
        --remaining;
      }
    }
    if (remaining > 0)
      throw std::logic_error("labeling_generate: ran out of targets");

    label[static_cast<std::size_t>(v)] = next_label++;
    trace.label_order.push_back(v);
  }
  return {std::move(g), std::move(trace)};
}

namespace {

std::optional<Digraph> forward_greedy_attempt(int n, int r, bool oriented,
                                              SplitMix64 &rng) {
  Digraph g(n, oriented);
  for (int i = 0; i < n; ++i) {
    std::vector<int> forward_pool;
    for (int u = i + 1; u < n; ++u) forward_pool.push_back(u);
    if (static_cast<int>(forward_pool.size()) >= r) {
      for (int u : rng.sample(std::move(forward_pool),
                              static_cast<std::size_t>(r)))
        g.add_arc(i, u);
      continue;
    }
    const int backward_needed = r - static_cast<int>(forward_pool.size());
    for (int u : forward_pool) g.add_arc(i, u);
    std::vector<int> backward_pool;
    for (int u = 0; u < i; ++u)
      if (!oriented || !g.has_arc(u, i)) backward_pool.push_back(u);
    if (static_cast<int>(backward_pool.size()) < backward_needed)
      return std::nullopt;
    for (int u : rng.sample(std::move(backward_pool),
                            static_cast<std::size_t>(backward_needed)))
      g.add_arc(i, u);
  }
  return g;
}

}  // namespace

Digraph forward_greedy(int n, int r, std::uint64_t seed, bool oriented) {
  check_n_r(n, r);
  // In oriented mode an unlucky forward draw can leave one of the last r
  // vertices without enough digon-free backward targets. Deterministic
  // reseeding keeps the per-seed contract while making generation total in
  // practice.
  for (std::uint64_t attempt = 0; attempt < 64; ++attempt) {
    SplitMix64 rng(SplitMix64::derive(seed, attempt));
    if (auto g = forward_greedy_attempt(n, r, oriented, rng))
      return std::move(*g);
  }
  throw std::invalid_argument(
      "forward_greedy: oriented mode leaves too few backward targets");
}

Digraph instantiate(const ConstructionSpec &spec) {
  switch (spec.family) {
    case Family::Circulant: return circulant(spec.n, spec.r);
    case Family::UniformGe: {
      std::vector<int> surplus = spec.surplus;
      if (surplus.empty()) surplus.assign(static_cast<std::size_t>(spec.n), 0);
      return uniform_ge(spec.n, spec.r, surplus);
    }
    case Family::NonuniformRegular:
      return nonuniform_regular(spec.n, spec.r, spec.seed);
    case Family::NonuniformGe: return nonuniform_ge(spec.n, spec.r, spec.seed);
    case Family::Labeling:
      return labeling_generate(spec.n, spec.r, spec.seed).first;
    case Family::ForwardGreedy:
      return forward_greedy(spec.n, spec.r, spec.seed, spec.oriented);
    case Family::RandomOriented: return random_oriented(spec.n, spec.seed);
  }
  throw std::logic_error("unknown family");
}

std::pair<Digraph, LabelingTrace> instantiate_with_trace(
    const ConstructionSpec &spec) {
  if (spec.family != Family::Labeling)
    throw std::invalid_argument("traces exist only for the labeling family");
  return labeling_generate(spec.n, spec.r, spec.seed);
}

LabelingClaims evaluate_labeling_trace(const Digraph &g,
                                       const LabelingTrace &trace, int r) {
  const int n = g.n();
  check_n_r(n, r);
  if (static_cast<int>(trace.label_order.size()) != n)
    throw std::invalid_argument("trace does not cover every vertex");
  std::vector<int> label_of(static_cast<std::size_t>(n), -1);
  for (int k = 0; k < n; ++k) {
    const int v = trace.label_order[static_cast<std::size_t>(k)];
    if (v < 0 || v >= n || label_of[static_cast<std::size_t>(v)] != -1)
      throw std::invalid_argument("label order is not a permutation");
    label_of[static_cast<std::size_t>(v)] = k;
  }

  // Recount forced arcs from the final digraph; disagreement with the trace
  // means the trace belongs to a different digraph.
  std::int64_t arcs_into_labeled = 0;
  std::vector<bool> is_labeled_target(static_cast<std::size_t>(n), false);
  for (const Arc &a : g.arcs()) {
    if (label_of[static_cast<std::size_t>(a.head)] <
        label_of[static_cast<std::size_t>(a.tail)]) {
      ++arcs_into_labeled;
      is_labeled_target[static_cast<std::size_t>(a.head)] = true;
    }
  }
  if (arcs_into_labeled != trace.arcs_into_labeled)
    throw std::invalid_argument("trace does not match digraph");

  LabelingClaims claims;
  claims.n = n;
  claims.r = r;
  claims.bound = (n + r - 1) / r;
  claims.arcs_into_labeled = arcs_into_labeled;
  claims.distinct_labeled_targets =
      std::count(is_labeled_target.begin(), is_labeled_target.end(), true);
  const std::int64_t threshold =
      static_cast<std::int64_t>(r) * (r + 1) / 2;
  claims.forced_arcs_bound_holds = claims.arcs_into_labeled >= threshold;
  claims.forced_targets_bound_holds =
      claims.distinct_labeled_targets >= threshold;

  // Path claim, on the digraph as it stood when stage n-r was labeled: only
  // arcs out of vertices labeled before that stage existed yet.
  const int stage = n - r;
  Digraph staged(n);
  for (const Arc &a : g.arcs())
    if (label_of[static_cast<std::size_t>(a.tail)] < stage)
      staged.add_arc(a.tail, a.head);
  const TransparencyMatrix st = compute_transparency(staged);
  const int target = trace.label_order[static_cast<std::size_t>(stage)];
  claims.path_bound_holds = true;
  for (int k = 0; k < stage; ++k) {
    const int u = trace.label_order[static_cast<std::size_t>(k)];
    const Distance &d = st.at(u, target);
    if (!d) {
      claims.path_bound_holds = false;
      continue;
    }
    claims.max_path_to_forced_stage =
        std::max(claims.max_path_to_forced_stage, *d);
  }
  if (claims.max_path_to_forced_stage > claims.bound - 1)
    claims.path_bound_holds = false;

  // Reachability claim, on the finished digraph.
  const TransparencyMatrix t = compute_transparency(g);
  claims.reachability_holds = true;
  for (int p = 0; p < n && claims.reachability_holds; ++p) {
    for (int q = p + 1; q < n; ++q) {
      if (!t.at(trace.label_order[static_cast<std::size_t>(p)],
                trace.label_order[static_cast<std::size_t>(q)])) {
        claims.reachability_holds = false;
        break;
      }
    }
  }
  return claims;
}

}  // namespace chgraph
