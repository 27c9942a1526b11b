#include "chgraph/edgelist.hpp"

#include <istream>
#include <sstream>

namespace chgraph {

namespace {

bool next_content_line(std::istream &in, std::string &line, int &lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t i = line.find_first_not_of(" \t");
    if (i == std::string::npos) continue;
    if (line[i] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

Digraph parse_edge_list(std::istream &in, bool oriented) {
  std::string line;
  int lineno = 0;
  if (!next_content_line(in, line, lineno))
    throw ParseError(lineno + 1, "missing header line \"n m\"");

  std::int64_t n = 0, m = 0;
  {
    std::istringstream hs(line);
    std::string extra;
    if (!(hs >> n >> m) || (hs >> extra))
      throw ParseError(lineno, "header must be \"n m\"");
  }
  if (n < 1) throw ParseError(lineno, "vertex count must be >= 1");
  if (m < 0) throw ParseError(lineno, "arc count must be >= 0");

  Digraph g(static_cast<int>(n), oriented);
  for (std::int64_t k = 0; k < m; ++k) {
    if (!next_content_line(in, line, lineno))
      throw ParseError(lineno + 1, "expected " + std::to_string(m) +
                                       " arcs, got " + std::to_string(k));
    std::istringstream as(line);
    int tail = 0, head = 0;
    std::string extra;
    if (!(as >> tail >> head) || (as >> extra))
      throw ParseError(lineno, "arc line must be \"tail head\"");
    try {
      g.add_arc(tail, head);
    } catch (const std::invalid_argument &e) {
      throw ParseError(lineno, e.what());
    }
  }
  if (next_content_line(in, line, lineno))
    throw ParseError(lineno, "trailing content after " + std::to_string(m) +
                                 " arcs");
  return g;
}

Digraph parse_edge_list_string(const std::string &text, bool oriented) {
  std::istringstream in(text);
  return parse_edge_list(in, oriented);
}

std::string serialize_edge_list(const Digraph &g) {
  std::ostringstream out;
  out << g.n() << ' ' << g.arc_count() << '\n';
  for (const Arc &a : g.arcs()) out << a.tail << ' ' << a.head << '\n';
  return out.str();
}

std::string to_dot(const Digraph &g) {
  std::ostringstream out;
  out << "digraph G {\n";
  for (int v = 0; v < g.n(); ++v) out << "  " << v << ";\n";
  for (const Arc &a : g.arcs())
    out << "  " << a.tail << " -> " << a.head << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace chgraph
