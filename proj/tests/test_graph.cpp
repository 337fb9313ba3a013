#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <sstream>

#include "indcyc/constructions.hpp"
#include "indcyc/graph.hpp"
#include "indcyc/graph_io.hpp"
#include "support.hpp"

using namespace indcyc;

namespace {

Graph star(std::size_t leaves) {
  GraphBuilder b(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) b.add_edge(0, v);
  return b.build();
}

bool isomorphic_brute(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<Vertex> p(a.order());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (const auto& [u, w] : a.edges()) {
      if (!b.adjacent(p[u], p[w])) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

}  // namespace

TEST_CASE("from_edge_list builds simple graphs") {
  const std::vector<Edge> c4 = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  const Graph g = Graph::from_edge_list(4, c4);
  CHECK(g.size() == 4);
  for (Vertex v = 0; v < 4; ++v) CHECK(g.degree(v) == 2);

  const Graph e = Graph::from_edge_list(3, {});
  CHECK(e.size() == 0);
  CHECK(e.min_degree() == 0);

  const std::vector<Edge> dup = {{0, 1}, {0, 1}, {1, 2}};
  CHECK(Graph::from_edge_list(5, dup).size() == 2);

  const std::vector<Edge> loop = {{2, 2}};
  CHECK_THROWS_AS(Graph::from_edge_list(4, loop), std::invalid_argument);
  const std::vector<Edge> out = {{0, 4}};
  CHECK_THROWS_AS(Graph::from_edge_list(4, out), std::out_of_range);
}

TEST_CASE("adjacency rows span several words") {
  GraphBuilder b(130);
  b.add_edge(0, 129);
  b.add_edge(64, 65);
  b.add_edge(63, 64);
  const Graph g = b.build();
  CHECK(g.words() == 3);
  CHECK(g.adjacent(129, 0));
  CHECK(g.neighbors(64) == std::vector<Vertex>{63, 65});
  CHECK(g.edges().size() == 3);
}

TEST_CASE("builder edits") {
  GraphBuilder b(cycle(5));
  b.toggle_edge(0, 2);
  b.remove_edge(0, 1);
  b.isolate(3);
  const Graph g = b.build();
  CHECK(g.adjacent(0, 2));
  CHECK_FALSE(g.adjacent(0, 1));
  CHECK(g.degree(3) == 0);
}

TEST_CASE("complement") {
  CHECK(complement(complete_graph(4)) == Graph::empty(4));
  for (std::uint64_t s = 0; s < 10; ++s) {
    const Graph g = random_graph(12, 0.4, s);
    CHECK(complement(complement(g)) == g);
    CHECK(complement(g).size() + g.size() == 66);
  }
  const Graph cc5 = complement(cycle(5));
  for (Vertex v = 0; v < 5; ++v) CHECK(cc5.degree(v) == 2);
  CHECK(isomorphic_brute(cc5, cycle(5)));
}

TEST_CASE("co-degrees") {
  CHECK(codegree(cycle(4), 0, 2) == 2);
  CHECK(codegree(cycle(5), 0, 1) == 0);
  CHECK(codegree(complete_graph(5), 1, 3) == 3);
  CHECK(triple_codegree(complete_graph(4), 0, 1, 2) == 1);
  CHECK(triple_codegree(star(4), 1, 2, 3) == 1);

  // C_6: brute-force intersection over all triples.
  const Graph c6 = cycle(6);
  for (Vertex a = 0; a < 6; ++a) {
    for (Vertex b = a + 1; b < 6; ++b) {
      for (Vertex c = b + 1; c < 6; ++c) {
        std::size_t common = 0;
        for (Vertex x = 0; x < 6; ++x) {
          common += (c6.adjacent(a, x) && c6.adjacent(b, x) && c6.adjacent(c, x)) ? 1 : 0;
        }
        CHECK(triple_codegree(c6, a, b, c) == common);
        CHECK(common == 0);
      }
    }
  }
}

TEST_CASE("cherries are ordered non-adjacent neighbour pairs") {
  CHECK(nonadjacent_neighbor_pairs(cycle(5), 0).size() == 2);
  CHECK(nonadjacent_neighbor_pairs(complete_graph(4), 1).empty());
  CHECK(nonadjacent_neighbor_pairs(star(3), 0).size() == 6);
  for (const auto& [u, w] : nonadjacent_neighbor_pairs(random_graph(14, 0.5, 7), 3)) {
    CHECK(u != w);
  }
}

TEST_CASE("degree profile") {
  const auto p5 = profile(cycle(5), 5);
  for (Vertex v = 0; v < 5; ++v) CHECK(p5.c(v) == Rational(2));
  const auto p6 = profile(complete_bipartite(3, 3), 6);
  for (Vertex v = 0; v < 6; ++v) CHECK(p6.c(v) == Rational(3));
  const auto pe = profile(Graph::empty(7), 5);
  for (Vertex v = 0; v < 7; ++v) CHECK(pe.c(v) == Rational(0));
  const auto pk = profile(complete_graph(6), 6);
  CHECK(pk.xbar(0, 1) == Rational(4));
  CHECK(pk.zbar(0, 1, 2) == Rational(3));
  CHECK_THROWS(profile(cycle(5), 3));
  CHECK_THROWS(profile(Graph::empty(0), 5));
}

TEST_CASE("graph6 round trips") {
  CHECK(to_graph6(Graph::empty(0)) == "?");
  CHECK(to_graph6(complete_graph(4)) == "C~");
  CHECK(from_graph6("C~") == complete_graph(4));
  CHECK(from_graph6(">>graph6<<C~") == complete_graph(4));
  CHECK(from_graph6("Cl") == cycle(4));
  for (std::size_t n : {1, 2, 5, 13, 62, 63, 64, 100}) {
    const Graph g = random_graph(n, 0.3, n);
    CHECK(from_graph6(to_graph6(g)) == g);
  }
  CHECK(to_graph6(Graph::empty(63)).substr(0, 4) == "~??~");
  CHECK_THROWS_AS(from_graph6("C~~"), ParseError);
  CHECK_THROWS_AS(from_graph6("C\x7f"), ParseError);
  CHECK(from_graph6("Bw") == complete_graph(3));
  CHECK_THROWS_AS(from_graph6("Bx"), ParseError);  // padding bit set
  CHECK_THROWS_AS(from_graph6(""), ParseError);
}

TEST_CASE("edge lists round trip and are detected") {
  const Graph g = random_graph(11, 0.5, 3);
  std::istringstream in(to_edge_list(g));
  CHECK(read_edge_list(in) == g);
  CHECK(detect_format("5 5\n0 1\n") == GraphFormat::edge_list);
  CHECK(detect_format("Dhc") == GraphFormat::graph6);
  CHECK(parse_graph(to_edge_list(cycle(6))) == cycle(6));
  CHECK(parse_graph(to_graph6(cycle(6)) + "\n") == cycle(6));
  std::istringstream bad("3 2\n0 1\n");
  CHECK_THROWS_AS(read_edge_list(bad), ParseError);
  std::istringstream range("3 1\n0 3\n");
  CHECK_THROWS_AS(read_edge_list(range), ParseError);
  std::istringstream loop("3 1\n1 1\n");
  CHECK_THROWS_AS(read_edge_list(loop), ParseError);
}

TEST_CASE("graph_from_mask enumerates labeled graphs") {
  CHECK(testing::graph_from_mask(4, 0) == Graph::empty(4));
  CHECK(testing::graph_from_mask(4, 0x3f) == complete_graph(4));
}
