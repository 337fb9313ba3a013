#include <doctest.h>

#include <cmath>
#include <numbers>

#include "indcyc/bounds.hpp"
#include "indcyc/constructions.hpp"
#include "indcyc/induced_count.hpp"

using namespace indcyc;
using doctest::Approx;

TEST_CASE("constants") {
  CHECK(new_constant() == Approx(4.2955).epsilon(1e-4));
  CHECK(pg_constant() == Approx(5.4366).epsilon(1e-4));
  CHECK(new_constant() == Approx(128.0 * std::numbers::e / 81.0).epsilon(1e-15));
}

TEST_CASE("vertex bound") {
  CHECK(vertex_bound(10, 5, 0) == 0.0);
  // (1/2) 9 ((12-3-1)/3)^3
  CHECK(vertex_bound(12, 6, 3) == Approx(0.5 * 9 * std::pow(8.0 / 3.0, 3)));
  CHECK_THROWS(vertex_bound(10, 3, 2));
  CHECK_THROWS(vertex_bound(10, 5, 10));

  // The relaxed form peaks at d = 2n/(k-1).
  for (unsigned k : {5u, 6u, 8u}) {
    const double n = 100;
    double best = -1, arg = 0;
    for (double d = 0; d <= n; d += 1e-3) {
      const double v = vertex_bound_relaxed(n, k, d);
      if (v > best) {
        best = v;
        arg = d;
      }
    }
    CHECK(arg == Approx(2 * n / (k - 1)).epsilon(1e-4));
  }
}

TEST_CASE("edge bound") {
  CHECK(edge_bound(10, 6, 3, 4, 3) == 0.0);
  CHECK(edge_bound(6, 6, 2, 2, 0) == Approx(4.0));
  CHECK(count_edge_rooted(cycle(6), 6, 0, 1) == 1);
  CHECK(edge_bound_at(cycle(6), 6, 0, 1).value >= 1.0);
  CHECK_THROWS(edge_bound(10, 4, 3, 3, 0));
  CHECK_THROWS(edge_bound(4, 6, 3, 3, 1));  // 4 - 3 - 3 + 1 < 0
}

TEST_CASE("cherry bound") {
  CHECK(cherry_bound(12, 6, 2, 3, 3, 1, 1, 1, 0) == 0.0);
  CHECK(cherry_bound(12, 6, 2, 2, 2, 0, 0, 1, 0) == Approx(1.0 * 1.0 * 7.0));
  const auto r = cherry_bound_at(cycle(7), 7, 0, 1, 2);
  CHECK(r.value >= 1.0);
  CHECK(count_cherry_rooted(cycle(7), 7, 0, 1, 2) == 1);
  CHECK_THROWS(cherry_bound(12, 5, 2, 2, 2, 0, 0, 1, 0));
}

TEST_CASE("global bounds") {
  CHECK(global_pg_bound(10, 5) == Approx(64 * std::numbers::e));
  CHECK(global_pg_bound(7, 7) == Approx(2 * std::numbers::e));
  CHECK(global_new_bound(12, 6) == Approx(new_constant() * 64));
  CHECK_THROWS(global_pg_bound(4, 5));
}

TEST_CASE("bounds hold on the corpus") {
  for (const auto& [name, g] : test_corpus(3, 25)) {
    CAPTURE(name);
    const std::size_t n = g.order();
    for (unsigned k = 5; k <= 8 && k <= n; ++k) {
      CHECK(bound_holds(count_fast(g, k), global_pg_bound(n, k)));
      for (Vertex v = 0; v < n; ++v) {
        CHECK(bound_holds(count_rooted(g, k, v), vertex_bound(n, k, g.degree(v))));
      }
      for (const auto& [v, w] : g.edges()) {
        CHECK(bound_holds(count_edge_rooted(g, k, v, w), edge_bound_at(g, k, v, w).value));
      }
      if (k < 6) continue;
      for (Vertex v = 0; v < n; ++v) {
        for (const auto& [u, w] : nonadjacent_neighbor_pairs(g, v)) {
          CHECK(bound_holds(count_cherry_rooted(g, k, u, v, w), cherry_bound_at(g, k, u, v, w).value));
        }
      }
    }
  }
}

TEST_CASE("bound report") {
  BoundReport r = vertex_bound_at(cycle(6), 6, 0);
  CHECK(r.holds());
  r.exact = count_rooted(cycle(6), 6, 0);
  CHECK(r.holds());
  CHECK(*r.slack() == Approx(r.value - 1));
  const auto j = to_json(r);
  CHECK(j["kind"] == "vertex");
  CHECK(j["exact"] == 1);
  CHECK_FALSE(bound_holds(2, 1.0));
  CHECK(bound_holds(1, 1.0 - 1e-14));
}

TEST_CASE("inducibility bracket") {
  const auto b5 = inducibility_bracket(5);
  CHECK(b5.lower == Approx(1.0 / 26.0).epsilon(1e-12));
  CHECK_FALSE(b5.upper.has_value());
  CHECK_THROWS(inducibility_bracket(4));
  for (unsigned k = 6; k <= 14; ++k) {
    const auto b = inducibility_bracket(k);
    REQUIRE(b.upper.has_value());
    const double corrected = new_constant() * (1 - std::pow(double(k), 1.0 - k));
    CHECK(*b.upper / b.lower == Approx(corrected).epsilon(1e-9));
    CHECK(b.lower < *b.upper);
  }
  CHECK(inducibility_bracket(10).blowup_lower == Approx(3628800.0 / 1e10));
}

TEST_CASE("density sequence") {
  const auto s = density_sequence(4, {{4, 1}, {5, 2}, {6, 9}});
  CHECK(s.points[0].density == Rational(1));
  CHECK(s.points[1].density == Rational(2, 5));
  CHECK(s.points[2].density == Rational(9, 15));
  CHECK(s.violations == std::vector<std::size_t>{2});
  CHECK_FALSE(s.monotone());
  CHECK_THROWS(density_sequence(4, {{4, 1}, {6, 9}}));
  CHECK_THROWS(density_sequence(5, {{4, 1}}));
  CHECK(binomial(25, 5) == Rational(53130));
  CHECK(binomial(3, 5) == Rational(0));
}

TEST_CASE("minimum-degree case split") {
  // C_7 with k = 7: c = 2 -> high regime, D(v) = 1.
  const auto m = check_min_degree_vertex(cycle(7), 7);
  CHECK(m.regime == DegreeCase::high);
  CHECK(m.rooted == 1);
  CHECK(m.pass);
  // Sparse graph: c < 1.
  const auto low = check_min_degree_vertex(Graph::empty(10), 6);
  CHECK(low.regime == DegreeCase::low);
  CHECK(low.rangec_applies);
  CHECK(low.pass);
  CHECK(vertex_ceiling(12, 6) == Approx(new_constant() * 32));
  CHECK(rangec_bound(12, 6, 1.0) == Approx(0.5 * 32 * std::exp(2.0)));
  for (const auto& [name, g] : test_corpus(5, 30)) {
    CAPTURE(name);
    for (unsigned k = 6; k <= 8 && k <= g.order(); ++k) CHECK(check_min_degree_vertex(g, k).pass);
  }
  CHECK_THROWS(check_min_degree_vertex(cycle(7), 5));
}

TEST_CASE("cherry sums") {
  // The exponential form dominates the plain cherry sum for every vertex.
  for (const auto& [name, g] : test_corpus(7, 20)) {
    CAPTURE(name);
    for (unsigned k = 6; k <= 8 && k <= g.order(); ++k) {
      for (Vertex v = 0; v < g.order(); ++v) {
        CHECK(cherry_sum_bound(g, k, v) <= cherry_sum_exponential(g, k, v) * (1 + 1e-12));
        CHECK(bound_holds(count_rooted(g, k, v), cherry_sum_bound(g, k, v)));
        if (auto p2 = p2_value(g, k, v)) {
          const double n = double(g.order());
          CHECK(*p2 <= new_constant() * (n / k) * (n / k) * (1 + 1e-12));
        }
      }
    }
  }
}
