#include <doctest.h>

#include "lcoalg/error.hpp"
#include "lcoalg/graph.hpp"
#include "oracles.hpp"

using namespace lcoalg;

namespace {

std::vector<std::vector<int>> adjacency(const DirectedGraph& g) {
  std::vector<std::vector<int>> m(g.vertex_count(), std::vector<int>(g.vertex_count(), 0));
  for (auto [s, t] : g.arrow_pairs()) m[s][t] = 1;
  return m;
}

}  // namespace

TEST_CASE("de Bruijn arrows match word shifting") {
  for (auto [p, n] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 1}, {2, 3}, {3, 2}, {4, 2}, {11, 1}, {12, 2}}) {
    DirectedGraph g = de_bruijn(p, n);
    CHECK(g.labelled_arrow_pairs() == oracle::de_bruijn_arrows(p, n));
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      CHECK(g.out_degree(v) == p);
      CHECK(g.in_degree(v) == p);
    }
  }
  CHECK_THROWS_AS(de_bruijn(2, 20), Error);
}

TEST_CASE("line extension of De Bruijn graphs") {
  for (std::size_t p = 2; p <= 3; ++p) {
    for (std::size_t n = 1; n <= 2; ++n) {
      DirectedGraph l = line_extension(de_bruijn(p, n));
      DirectedGraph next = de_bruijn(p, n + 1);
      CHECK(is_isomorphic(l, next));
      if (l.vertex_count() <= 9) CHECK(oracle::isomorphic_brute(adjacency(l), adjacency(next)));
    }
  }
  DirectedGraph l = line_extension(de_bruijn(2, 1));
  CHECK(l.find_vertex("0->1").has_value());
}

TEST_CASE("isomorphism agrees with brute force") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 2 + trial % 5;
    DirectedGraph g, h;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (std::size_t i = 0; i < n; ++i) {
      g.add_vertex("v" + std::to_string(i));
      h.add_vertex("w" + std::to_string(i));
    }
    std::bernoulli_distribution coin(0.35);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (coin(rng)) {
          g.add_arrow(i, j, 1, Provenance::Plain);
          h.add_arrow(perm[i], perm[j], 1, Provenance::Plain);
        }
    // Perturb h on odd trials by toggling one arrow.
    if (trial % 2) {
      if (h.arrow_pairs().count({0, 1})) h.add_arrow(std::size_t{0}, std::size_t{1}, -1, Provenance::Plain);
      else h.add_arrow(std::size_t{0}, std::size_t{1}, 1, Provenance::Plain);
    }
    CHECK(is_isomorphic(g, h) == oracle::isomorphic_brute(adjacency(g), adjacency(h)));
  }
}

TEST_CASE("DOT export is sorted and stable") {
  std::string dot = to_dot(de_bruijn(2, 1), "g");
  CHECK(dot ==
        "digraph \"g\" {\n"
        "  \"0\";\n  \"1\";\n"
        "  \"0\" -> \"0\" [label=\"1\", color=black];\n"
        "  \"0\" -> \"1\" [label=\"1\", color=black];\n"
        "  \"1\" -> \"0\" [label=\"1\", color=black];\n"
        "  \"1\" -> \"1\" [label=\"1\", color=black];\n"
        "}\n");
}

TEST_CASE("graph text round trip and errors") {
  DirectedGraph g;
  g.add_vertex("a");
  g.add_vertex("b");
  g.add_arrow("a", "b", Scalar::parse("1/2*q"), Provenance::Right);
  g.add_arrow("b", "a", 3, Provenance::Left);
  std::string text = render_graph(g);
  CHECK(render_graph(parse_graph(text)) == text);
  try {
    parse_graph("vertex a\narrow a c 1 plain\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_graph("vertex a\nvertex a\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("arrow a b 1 sideways\n"), ParseError);
}

TEST_CASE("stochastic predicate and arrow set operations") {
  DirectedGraph g({"a", "b"});
  g.add_arrow("a", "a", Rational(1, 2), Provenance::Plain);
  g.add_arrow("a", "b", Rational(1, 2), Provenance::Plain);
  g.add_arrow("b", "a", 1, Provenance::Plain);
  CHECK(is_stochastic(g, 1));
  CHECK_FALSE(is_stochastic(de_bruijn(2, 1), 1));
  DirectedGraph h({"a", "b"});
  h.add_arrow("b", "b", 1, Provenance::Plain);
  CHECK(arrows_disjoint(g, h));
  CHECK(arrows_union({g, h}).arrow_count() == 4);
  CHECK_THROWS_AS(arrows_disjoint(g, DirectedGraph({"a"})), Error);
}
