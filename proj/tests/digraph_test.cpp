#include "chgraph/digraph.hpp"

#include <sstream>

#include "chgraph/constructions.hpp"
#include "chgraph/edgelist.hpp"
#include "chgraph/rng.hpp"
#include "chgraph/transparency.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace chgraph;
namespace ct = chgraph::testing;

TEST_CASE("digraph construction") {
  CHECK(Digraph(1).n() == 1);
  CHECK(Digraph(1).arc_count() == 0);
  CHECK(Digraph(7).arc_count() == 0);
  CHECK_THROWS_AS(Digraph(0), std::invalid_argument);

  Digraph oriented(2, true);
  oriented.add_arc(0, 1);
  CHECK_THROWS_AS(oriented.add_arc(1, 0), std::invalid_argument);
}

TEST_CASE("add_arc rejects loops, duplicates, digons") {
  Digraph g(2);
  g.add_arc(0, 1);
  CHECK(g.out_degree(0) == 1);
  CHECK_THROWS_AS(g.add_arc(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(g.add_arc(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(g.add_arc(0, 2), std::invalid_argument);
  g.add_arc(1, 0);  // digons fine by default
  CHECK(g.arc_count() == 2);
}

TEST_CASE("min_out_degree") {
  CHECK(circulant(7, 3).min_out_degree() == 3);
  CHECK(Digraph(3).min_out_degree() == 0);

  Digraph complete(4);
  for (int u = 0; u < 4; ++u)
    for (int v = 0; v < 4; ++v)
      if (u != v) complete.add_arc(u, v);
  CHECK(complete.min_out_degree() == 3);
}

TEST_CASE("classify_arc") {
  const ArcClass fwd = classify_arc(Arc{0, 3});
  CHECK(fwd.kind == ArcKind::Forward);
  CHECK(fwd.difference == 3);

  const ArcClass back = classify_arc(Arc{6, 0});
  CHECK(back.kind == ArcKind::Backward);
  CHECK(back.difference == 6);

  CHECK(circulant(7, 3).has_arc(5, 1));
  const ArcClass wrap = classify_arc(Arc{5, 1});
  CHECK(wrap.kind == ArcKind::Backward);
  CHECK(wrap.difference == 4);
}

TEST_CASE("difference_profile") {
  SUBCASE("transitive tournament is all-forward") {
    const auto p = difference_profile(ct::transitive_tournament(4));
    std::int64_t fwd = 0, back = 0;
    for (auto c : p.forward) fwd += c;
    for (auto c : p.backward) back += c;
    CHECK(fwd == 6);
    CHECK(back == 0);
  }
  SUBCASE("circulant total is n*r") {
    CHECK(difference_profile(circulant(7, 3)).total() == 21);
  }
  SUBCASE("single backward arc") {
    Digraph g(3);
    g.add_arc(2, 0);
    const auto p = difference_profile(g);
    CHECK(p.backward[2] == 1);
    CHECK(p.total() == 1);
  }
}

TEST_CASE("difference profile bounds over random digraphs") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng.next_below(9));
    const Digraph g = ct::random_digraph(n, 40, rng);
    const auto p = difference_profile(g);
    CAPTURE(trial);
    CHECK(p.total() == g.arc_count());
    for (int d = 1; d < n; ++d) {
      CHECK(p.forward[static_cast<std::size_t>(d)] <= n - d);
      CHECK(p.backward[static_cast<std::size_t>(d)] <= n - d);
      CHECK(p.forward[static_cast<std::size_t>(d)] +
                p.backward[static_cast<std::size_t>(d)] <=
            2 * (n - d));
    }
  }
}

TEST_CASE("ex_count") {
  CHECK(ex_count(5) == 10);
  CHECK(ex_count(1) == 0);
  CHECK(ex_count(7) == 21);
  CHECK_THROWS_AS(ex_count(0), std::invalid_argument);

  // The extremal digraph itself: all forward arcs, no circuit.
  const Digraph g = ct::transitive_tournament(7);
  CHECK(g.arc_count() == 21);
  CHECK(!girth(compute_transparency(g)));
}

TEST_CASE("all-forward digraphs are acyclic up to n = 10") {
  for (int n = 2; n <= 10; ++n) {
    CHECK(!girth(compute_transparency(ct::transitive_tournament(n))));
    CHECK(!ct::oracle_girth_dfs(ct::transitive_tournament(n)));
  }
}

TEST_CASE("edge list round trip") {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng.next_below(10));
    const Digraph g = ct::random_digraph(n, 30, rng);
    const std::string text = serialize_edge_list(g);
    const Digraph parsed = parse_edge_list_string(text);
    CAPTURE(trial);
    CHECK(parsed == g);
    CHECK(serialize_edge_list(parsed) == text);
  }
}

TEST_CASE("edge list parsing") {
  SUBCASE("comments and blank lines skipped") {
    const Digraph g = parse_edge_list_string("# spec\n\n2 1\n# mid\n0 1\n");
    CHECK(g.n() == 2);
    CHECK(g.has_arc(0, 1));
  }
  SUBCASE("self-loop names the line") {
    try {
      parse_edge_list_string("3 2\n0 1\n2 2\n");
      FAIL("expected ParseError");
    } catch (const ParseError &e) {
      CHECK(e.line() == 3);
    }
  }
  SUBCASE("bad header") {
    CHECK_THROWS_AS(parse_edge_list_string("abc\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list_string(""), ParseError);
    CHECK_THROWS_AS(parse_edge_list_string("0 0\n"), ParseError);
  }
  SUBCASE("arc count mismatches") {
    CHECK_THROWS_AS(parse_edge_list_string("2 2\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list_string("2 1\n0 1\n1 0\n"), ParseError);
  }
  SUBCASE("out-of-range endpoint") {
    CHECK_THROWS_AS(parse_edge_list_string("2 1\n0 5\n"), ParseError);
  }
}

TEST_CASE("dot export") {
  Digraph g(2);
  g.add_arc(0, 1);
  const std::string dot = to_dot(g);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("0 -> 1;") != std::string::npos);
}
