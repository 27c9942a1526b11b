#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "chgraph/digraph.hpp"

namespace chgraph {

// Raised by parse_edge_list with the 1-based line the problem was found on.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string &what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Edge-list text format: first line "n m", then m lines "tail head"
// (0-based, space-separated, LF line endings). Lines starting with '#'
// are comments and are skipped.
Digraph parse_edge_list(std::istream &in, bool oriented = false);
Digraph parse_edge_list_string(const std::string &text, bool oriented = false);

// Canonical serialization: "n m" then arcs sorted by (tail, head), one per
// line, trailing LF. parse(serialize(g)) == g for every digraph.
std::string serialize_edge_list(const Digraph &g);

std::string to_dot(const Digraph &g);

}  // namespace chgraph
