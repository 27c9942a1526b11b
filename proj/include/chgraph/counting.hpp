#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "chgraph/digraph.hpp"
#include "chgraph/transparency.hpp"

namespace chgraph {

// One closed-form count checked against enumeration. Values are decimal
// strings so they survive JSON round-trips at any magnitude.
struct CountAudit {
  std::string formula;  // e.g. "total-cycles", "cycles-through-arc"
  int n = 0;
  int j = 0;  // cycle length, or r for the inequality audit
  std::string formula_value;
  std::string oracle_value;
  bool equal = false;
};

struct EnumerationOptions {
  // Sparse instances stay tractable further out than complete digraphs, so
  // the caps differ. CHGRAPH_ENUM_CAP / CHGRAPH_ENUM_CAP_COMPLETE override.
  int cap_sparse = 12;
  int cap_complete = 9;
  bool force = false;
};

// Number of distinct directed circuits of length j on n labeled vertices
// when every arc is available: C(n,j) * (j-1)!.
mpz_class total_j_cycles(int n, int j);

// Claimed closed form for the number of directed j-circuits of the complete
// digraph through one fixed arc: C(n-2,j-2) * (j-3)!. Implemented verbatim
// and audited, never corrected: enumeration gives C(n-2,j-2) * (j-2)!, so
// the two agree at j = 3 and split from j = 4 on. audit_counting_formulas
// records the gap.
mpz_class cycles_through_arc_formula(int n, int j);

// Exact enumeration count of directed j-circuits of the complete digraph on
// n vertices containing arc a. Arc-independent by symmetry.
mpz_class cycles_through_arc_enumerated(int n, int j, Arc a,
                                        const EnumerationOptions &opt = {});

// Every distinct directed circuit of length <= max_len, each reported once,
// minimum vertex first, ordered by (root, discovery). DFS path extension
// from each root over larger vertices only; parallel across roots.
std::vector<CycleCertificate> enumerate_directed_cycles(
    const Digraph &g, int max_len, const EnumerationOptions &opt = {});

// Lower bound on the adjacency entries that must be zeroed to kill every
// r-circuit: n(n-1)(r-2)/(2r), as an exact rational. Complements the arc
// capacity identity n(n-1)/2 - bound = n(n-1)/r.
mpq_class elimination_bound(int n, int r);

// Checks n * ceil(n/r) > n(n-1)/r in exact arithmetic for all
// 2 <= r < n <= n_max with r <= r_max; returns violations (expected none).
std::vector<CountAudit> audit_ceiling_inequality(int n_max, int r_max);

// Full formula-vs-enumeration ledger over 2 <= j <= n <= n_max, j <= j_max,
// sorted by (formula, n, j). Expected shape: the total-count formula always
// matches; the through-arc formula matches at j = 3 and mismatches beyond.
std::vector<CountAudit> audit_counting_formulas(
    int n_max, int j_max, const EnumerationOptions &opt = {});

Digraph complete_digraph(int n);

}  // namespace chgraph
