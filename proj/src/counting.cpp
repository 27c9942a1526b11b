#include "chgraph/counting.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <tuple>

namespace chgraph {

namespace {

mpz_class binomial(int n, int k) {
  mpz_class out;
  if (k < 0 || k > n) return 0;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

mpz_class factorial(int k) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(k));
  return out;
}

int env_cap(const char *name, int fallback) {
  if (const char *env = std::getenv(name)) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return fallback;
}

void check_enum_size(const Digraph &g, const EnumerationOptions &opt) {
  if (opt.force) return;
  const bool complete =
      g.arc_count() == static_cast<std::int64_t>(g.n()) * (g.n() - 1);
  const int cap = complete
                      ? env_cap("CHGRAPH_ENUM_CAP_COMPLETE", opt.cap_complete)
                      : env_cap("CHGRAPH_ENUM_CAP", opt.cap_sparse);
  if (g.n() > cap)
    throw std::invalid_argument(
        "cycle enumeration over n = " + std::to_string(g.n()) +
        " exceeds the cap of " + std::to_string(cap) +
        " (pass --force to override)");
}

}  // namespace

mpz_class total_j_cycles(int n, int j) {
  if (j < 2 || j > n)
    throw std::invalid_argument("total_j_cycles requires 2 <= j <= n");
  return binomial(n, j) * factorial(j - 1);
}

mpz_class cycles_through_arc_formula(int n, int j) {
  if (j < 3 || j > n)
    throw std::invalid_argument(
        "cycles_through_arc_formula requires 3 <= j <= n");
  return binomial(n - 2, j - 2) * factorial(j - 3);
}

Digraph complete_digraph(int n) {
  Digraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) g.add_arc(u, v);
  return g;
}

std::vector<CycleCertificate> enumerate_directed_cycles(
    const Digraph &g, int max_len, const EnumerationOptions &opt) {
  if (max_len < 2 || max_len > g.n())
    throw std::invalid_argument(
        "enumerate_directed_cycles requires 2 <= max_len <= n");
  check_enum_size(g, opt);

  const int n = g.n();
  // Each circuit is found exactly once, as a path rooted at its minimum
  // vertex over larger vertices only. Work is split by (root, first step):
  // root 0 alone owns most circuits of a dense digraph, so per-root tasks
  // would leave one thread holding nearly everything.
  std::vector<std::pair<int, int>> tasks;
  for (int root = 0; root < n; ++root)
    for (int second : g.out(root))
      if (second > root) tasks.emplace_back(root, second);

  std::vector<std::vector<CycleCertificate>> per_task(tasks.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t ti = 0; ti < tasks.size(); ++ti) {
    const auto [root, second] = tasks[ti];
    std::vector<CycleCertificate> &found = per_task[ti];
    std::vector<bool> on_path(static_cast<std::size_t>(n), false);
    std::vector<int> path{root, second};
    on_path[static_cast<std::size_t>(root)] = true;
    on_path[static_cast<std::size_t>(second)] = true;
    // Explicit DFS stack of (vertex, next out-neighbor index to try).
    std::vector<std::pair<int, std::size_t>> stack{{second, 0}};
    while (!stack.empty()) {
      auto &[u, next] = stack.back();
      const auto &out = g.out(u);
      if (next == out.size()) {
        stack.pop_back();
        on_path[static_cast<std::size_t>(u)] = false;
        path.pop_back();
        continue;
      }
      const int v = out[next++];
      if (v == root) {
        found.push_back(CycleCertificate{path});
        continue;
      }
      if (v <= root || on_path[static_cast<std::size_t>(v)]) continue;
      if (static_cast<int>(path.size()) == max_len) continue;
      path.push_back(v);
      on_path[static_cast<std::size_t>(v)] = true;
      stack.emplace_back(v, 0);
    }
  }

  std::vector<CycleCertificate> all;
  for (auto &chunk : per_task)
    for (auto &cert : chunk) all.push_back(std::move(cert));
  return all;
}

mpz_class cycles_through_arc_enumerated(int n, int j, Arc a,
                                        const EnumerationOptions &opt) {
  if (j < 3 || j > n)
    throw std::invalid_argument(
        "cycles_through_arc_enumerated requires 3 <= j <= n");
  if (a.tail == a.head || a.tail < 0 || a.head < 0 || a.tail >= n ||
      a.head >= n)
    throw std::invalid_argument("invalid arc");
  const Digraph g = complete_digraph(n);
  check_enum_size(g, opt);
  mpz_class count = 0;
  for (const CycleCertificate &cert : enumerate_directed_cycles(g, j, opt)) {
    if (cert.length() != j) continue;
    for (int k = 0; k < j; ++k) {
      if (cert.vertices[static_cast<std::size_t>(k)] == a.tail &&
          cert.vertices[static_cast<std::size_t>((k + 1) % j)] == a.head) {
        ++count;
        break;
      }
    }
  }
  return count;
}

mpq_class elimination_bound(int n, int r) {
  if (r < 2) throw std::invalid_argument("elimination_bound requires r >= 2");
  if (n < 1) throw std::invalid_argument("elimination_bound requires n >= 1");
  mpq_class q(mpz_class(n) * (n - 1) * (r - 2), mpz_class(2) * r);
  q.canonicalize();
  return q;
}

std::vector<CountAudit> audit_ceiling_inequality(int n_max, int r_max) {
  std::vector<CountAudit> violations;
  for (int n = 3; n <= n_max; ++n) {
    for (int r = 2; r < n && r <= r_max; ++r) {
      const int k = (n + r - 1) / r;
      // n*k > n(n-1)/r  <=>  n*k*r > n(n-1)
      const mpz_class lhs = mpz_class(n) * k * r;
      const mpz_class rhs = mpz_class(n) * (n - 1);
      if (lhs <= rhs) {
        CountAudit audit;
        audit.formula = "ceiling-inequality";
        audit.n = n;
        audit.j = r;
        audit.formula_value = mpz_class(mpz_class(n) * k).get_str();
        mpq_class capacity(rhs, r);
        capacity.canonicalize();
        audit.oracle_value = capacity.get_str();
        audit.equal = false;
        violations.push_back(std::move(audit));
      }
    }
  }
  return violations;
}

std::vector<CountAudit> audit_counting_formulas(int n_max, int j_max,
                                                const EnumerationOptions &opt) {
  std::vector<CountAudit> ledger;
  for (int n = 2; n <= n_max; ++n) {
    const Digraph g = complete_digraph(n);
    check_enum_size(g, opt);
    const int top = std::min(n, j_max);
    std::vector<mpz_class> by_length(static_cast<std::size_t>(top) + 1, 0);
    std::vector<mpz_class> through_01(static_cast<std::size_t>(top) + 1, 0);
    for (const CycleCertificate &cert :
         enumerate_directed_cycles(g, top, opt)) {
      const int len = cert.length();
      ++by_length[static_cast<std::size_t>(len)];
      for (int k = 0; k < len; ++k) {
        if (cert.vertices[static_cast<std::size_t>(k)] == 0 &&
            cert.vertices[static_cast<std::size_t>((k + 1) % len)] == 1) {
          ++through_01[static_cast<std::size_t>(len)];
          break;
        }
      }
    }
    for (int j = 2; j <= top; ++j) {
      CountAudit total;
      total.formula = "total-cycles";
      total.n = n;
      total.j = j;
      total.formula_value = total_j_cycles(n, j).get_str();
      total.oracle_value = by_length[static_cast<std::size_t>(j)].get_str();
      total.equal = total.formula_value == total.oracle_value;
      ledger.push_back(std::move(total));
      if (j >= 3) {
        CountAudit through;
        through.formula = "cycles-through-arc";
        through.n = n;
        through.j = j;
        through.formula_value = cycles_through_arc_formula(n, j).get_str();
        through.oracle_value = through_01[static_cast<std::size_t>(j)].get_str();
        through.equal = through.formula_value == through.oracle_value;
        ledger.push_back(std::move(through));
      }
    }
  }
  std::sort(ledger.begin(), ledger.end(),
            [](const CountAudit &a, const CountAudit &b) {
              return std::tie(a.formula, a.n, a.j) <
                     std::tie(b.formula, b.n, b.j);
            });
  return ledger;
}

}  // namespace chgraph
