#include "chgraph/transparency.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "chgraph/edgelist.hpp"
#include "json.hpp"

namespace chgraph {

void bfs_row(const Digraph &g, int source, TransparencyMatrix &t);

bool CycleCertificate::validate(const Digraph &g) const {
  const int len = length();
  if (len < 2) return false;
  std::set<int> seen(vertices.begin(), vertices.end());
  if (static_cast<int>(seen.size()) != len) return false;
  for (int k = 0; k < len; ++k) {
    const int u = vertices[static_cast<std::size_t>(k)];
    const int v = vertices[static_cast<std::size_t>((k + 1) % len)];
    if (u < 0 || u >= g.n() || v < 0 || v >= g.n()) return false;
    if (!g.has_arc(u, v)) return false;
  }
  return true;
}

void CycleCertificate::canonicalize() {
  if (vertices.empty()) return;
  const auto lo = std::min_element(vertices.begin(), vertices.end());
  std::rotate(vertices.begin(), lo, vertices.end());
}

TransparencyMatrix compute_transparency(const Digraph &g) {
  TransparencyMatrix t(g.n());
  const int n = g.n();
#pragma omp parallel for schedule(dynamic, 16)
  for (int s = 0; s < n; ++s) bfs_row(g, s, t);
  return t;
}

std::optional<GirthResult> girth(const TransparencyMatrix &t) {
  std::optional<GirthResult> best;
  for (int i = 0; i < t.n(); ++i) {
    for (int j = i + 1; j < t.n(); ++j) {
      const Distance &ij = t.at(i, j);
      const Distance &ji = t.at(j, i);
      if (!ij || !ji) continue;
      const int sum = *ij + *ji;
      if (!best || sum < best->length) best = GirthResult{sum, i, j};
    }
  }
  return best;
}

namespace {

// Shortest i -> j path as a vertex sequence, via BFS parents.
std::vector<int> shortest_path(const Digraph &g, int from, int to) {
  std::vector<int> parent(static_cast<std::size_t>(g.n()), -1);
  std::vector<int> queue{from};
  parent[static_cast<std::size_t>(from)] = from;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const int u = queue[qi];
    if (u == to) break;
    for (int v : g.out(u)) {
      if (parent[static_cast<std::size_t>(v)] == -1) {
        parent[static_cast<std::size_t>(v)] = u;
        queue.push_back(v);
      }
    }
  }
  if (parent[static_cast<std::size_t>(to)] == -1)
    throw std::logic_error("shortest_path: target unreachable");
  std::vector<int> path;
  for (int v = to; v != from; v = parent[static_cast<std::size_t>(v)])
    path.push_back(v);
  path.push_back(from);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

std::optional<CycleCertificate> shortest_cycle_certificate(const Digraph &g) {
  const TransparencyMatrix t = compute_transparency(g);
  const auto gr = girth(t);
  if (!gr) return std::nullopt;
  // The closed walk i -> j -> i has length equal to the girth, so it cannot
  // revisit a vertex: a repeat would contain a strictly shorter circuit.
  const std::vector<int> fwd = shortest_path(g, gr->i, gr->j);
  const std::vector<int> back = shortest_path(g, gr->j, gr->i);
  CycleCertificate cert;
  cert.vertices.assign(fwd.begin(), fwd.end());
  cert.vertices.insert(cert.vertices.end(), back.begin() + 1, back.end() - 1);
  cert.canonicalize();
  return cert;
}

ContractionResult contract_graph(const Digraph &g, Arc a) {
  if (!g.has_arc(a.tail, a.head))
    throw std::invalid_argument("contract_graph: arc not present");
  const int i = a.tail;
  const int j = a.head;
  std::vector<int> old_to_new(static_cast<std::size_t>(g.n()));
  for (int v = 0; v < g.n(); ++v)
    old_to_new[static_cast<std::size_t>(v)] = v - (v > i ? 1 : 0);
  old_to_new[static_cast<std::size_t>(i)] =
      old_to_new[static_cast<std::size_t>(j)];

  std::set<std::pair<int, int>> arcs;
  for (const Arc &e : g.arcs()) {
    const int u = old_to_new[static_cast<std::size_t>(e.tail)];
    const int v = old_to_new[static_cast<std::size_t>(e.head)];
    if (u != v) arcs.insert({u, v});
  }
  Digraph out(g.n() - 1, false);
  for (const auto &[u, v] : arcs) out.add_arc(u, v);
  return ContractionResult{std::move(out), std::move(old_to_new)};
}

TransparencyMatrix contract_matrix(const TransparencyMatrix &t, int i, int j) {
  if (i == j || i < 0 || j < 0 || i >= t.n() || j >= t.n() ||
      t.at(i, j) != Distance{1})
    throw std::invalid_argument("contract_matrix requires at(i,j) == 1");

  const int n = t.n();
  TransparencyMatrix merged = t;
  // Min-merge row/column j with row/column i.
  for (int k = 0; k < n; ++k) {
    if (k == j) continue;
    const Distance &ik = t.at(i, k);
    if (ik && (!merged.at(j, k) || *ik < *merged.at(j, k)))
      merged.at(j, k) = ik;
    const Distance &ki = t.at(k, i);
    if (ki && (!merged.at(k, j) || *ki < *merged.at(k, j)))
      merged.at(k, j) = ki;
  }
  // Decrement pass, tested against pre-merge values; entries with any
  // unreachable term are left alone since the test is meaningless there.
  for (int m = 0; m < n; ++m) {
    for (int k = 0; k < n; ++k) {
      const Distance &mn = t.at(m, k);
      const Distance &mi = t.at(m, i);
      const Distance &jn = t.at(j, k);
      if (mn && mi && jn && *mn == *mi + *jn + 1 && merged.at(m, k))
        merged.at(m, k) = *merged.at(m, k) - 1;
    }
  }
  // Delete row/column i.
  TransparencyMatrix out(n - 1);
  for (int m = 0; m < n; ++m) {
    if (m == i) continue;
    for (int k = 0; k < n; ++k) {
      if (k == i) continue;
      out.at(m - (m > i ? 1 : 0), k - (k > i ? 1 : 0)) = merged.at(m, k);
    }
  }
  return out;
}

namespace {

std::string distance_str(const Distance &d) {
  return d ? std::to_string(*d) : std::string("inf");
}

}  // namespace

AuditReport audit_contraction(const Digraph &g, Arc a) {
  const TransparencyMatrix before = compute_transparency(g);
  const TransparencyMatrix by_rules = contract_matrix(before, a.tail, a.head);
  const ContractionResult contracted = contract_graph(g, a);
  const TransparencyMatrix oracle = compute_transparency(contracted.graph);

  AuditReport report;
  report.claim = "matrix-contraction-rules";
  report.instance = "# contract " + std::to_string(a.tail) + " " +
                    std::to_string(a.head) + "\n" + serialize_edge_list(g);
  report.expected = matrix_to_json(oracle);
  report.actual = matrix_to_json(by_rules);
  report.equal = by_rules == oracle;
  if (!report.equal) {
    for (int m = 0; m < oracle.n() && report.detail.empty(); ++m) {
      for (int k = 0; k < oracle.n(); ++k) {
        if (by_rules.at(m, k) != oracle.at(m, k)) {
          report.detail = "entry (" + std::to_string(m) + "," +
                          std::to_string(k) + "): rules " +
                          distance_str(by_rules.at(m, k)) + " vs oracle " +
                          distance_str(oracle.at(m, k));
          break;
        }
      }
    }
  }
  return report;
}

std::vector<std::pair<int, int>> contractible_pairs(const TransparencyMatrix &t) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < t.n(); ++i)
    for (int j = 0; j < t.n(); ++j)
      if (i != j && t.at(i, j) == Distance{1}) out.emplace_back(i, j);
  return out;
}

NeighborhoodCounts neighborhood_counts(const TransparencyMatrix &t, int v) {
  if (v < 0 || v >= t.n())
    throw std::invalid_argument("neighborhood_counts: vertex out of range");
  NeighborhoodCounts c;
  for (int u = 0; u < t.n(); ++u) {
    if (u == v) continue;
    const Distance &d = t.at(v, u);
    if (!d) continue;
    if (*d == 1) ++c.first;
    if (*d == 2) ++c.second;
    if (*d >= 2) ++c.second_or_more;
  }
  return c;
}

std::string matrix_to_json(const TransparencyMatrix &t) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < t.n(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < t.n(); ++j) {
      const Distance &d = t.at(i, j);
      if (d)
        row.push_back(*d);
      else
        row.push_back("inf");
    }
    rows.push_back(std::move(row));
  }
  nlohmann::json obj;
  obj["n"] = t.n();
  obj["entries"] = std::move(rows);
  return obj.dump();
}

TransparencyMatrix matrix_from_json(const std::string &text) {
  const nlohmann::json obj = nlohmann::json::parse(text);
  const int n = obj.at("n").get<int>();
  if (n < 1) throw std::invalid_argument("matrix dimension must be >= 1");
  TransparencyMatrix t(n);
  const auto &rows = obj.at("entries");
  if (static_cast<int>(rows.size()) != n)
    throw std::invalid_argument("entry row count does not match n");
  for (int i = 0; i < n; ++i) {
    const auto &row = rows[static_cast<std::size_t>(i)];
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("entry column count does not match n");
    for (int j = 0; j < n; ++j) {
      const auto &cell = row[static_cast<std::size_t>(j)];
      if (cell.is_string()) {
        if (cell.get<std::string>() != "inf")
          throw std::invalid_argument("matrix cells are ints or \"inf\"");
      } else {
        t.at(i, j) = cell.get<int>();
      }
    }
  }
  return t;
}

}  // namespace chgraph
