#include <doctest.h>

#include <set>

#include "indcyc/constructions.hpp"
#include "indcyc/induced_count.hpp"
#include "support.hpp"

using namespace indcyc;
using testing::bits;
using testing::brute_count;
using testing::to_u64;

TEST_CASE("is_induced_cycle") {
  const Vertex all6[] = {0, 1, 2, 3, 4, 5};
  CHECK(is_induced_cycle(cycle(6), all6));
  const Vertex four[] = {0, 1, 2, 3};
  CHECK_FALSE(is_induced_cycle(complete_graph(4), four));
  const Vertex alt[] = {0, 2, 4};
  CHECK_FALSE(is_induced_cycle(cycle(6), alt));
  const Vertex two[] = {0, 1};
  CHECK_THROWS(is_induced_cycle(cycle(6), two));
  const Vertex dup[] = {0, 1, 1};
  CHECK_THROWS(is_induced_cycle(cycle(6), dup));
}

TEST_CASE("oracle counts") {
  CHECK(count_oracle(cycle(5), 5).total == 1);
  CHECK(count_oracle(petersen(), 5).total == 12);
  CHECK(count_oracle(petersen(), 6).total == 10);
  CHECK(count_oracle(complete_graph(6), 4).total == 0);
  CHECK(count_oracle(complete_bipartite(3, 3), 4).total == 9);
  CHECK_THROWS(count_oracle(cycle(5), 6));
  CHECK_THROWS(count_oracle(cycle(5), 2));
  // Library oracle against the independent test oracle.
  for (std::uint64_t s = 0; s < 20; ++s) {
    const Graph g = random_graph(11, 0.4, s);
    for (unsigned k = 3; k <= 8; ++k) CHECK(to_u64(count_oracle(g, k).total) == brute_count(g, k));
  }
}

TEST_CASE("fast counting matches the oracle") {
  CHECK(count_fast(cycle(7), 7) == 1);
  CHECK(count_fast(blow_up(cycle(5), {3, 3, 3, 3, 3}), 5) == 243);
  CHECK(count_fast(complete_bipartite(4, 4), 4) == 36);
  for (std::uint64_t s = 0; s < 60; ++s) {
    SplitMix64 rng(s);
    const std::size_t n = 6 + rng.below(10);
    const Graph g = random_graph(n, 0.15 + 0.7 * rng.uniform(), s);
    for (unsigned k = 4; k <= std::min<std::size_t>(n, 9); ++k) {
      const std::uint64_t expected = brute_count(g, k);
      CHECK(to_u64(count_fast(g, k)) == expected);
      CHECK(to_u64(count_fast_serial(g, k)) == expected);
    }
  }
  CHECK_THROWS(count_fast(cycle(5), 3));
  CHECK_THROWS(count_fast(cycle(5), 6));
}

TEST_CASE("parallel and serial kernels agree") {
  const Graph g = random_graph(24, 0.3, 99);
  for (unsigned k : {5u, 6u, 7u}) {
    CHECK(count_fast(g, k, 4) == count_fast_serial(g, k));
    CHECK(count_rooted_all(g, k, 3) == count_rooted_all_serial(g, k));
  }
}

TEST_CASE("rooted counts") {
  CHECK(count_rooted(cycle(5), 5, 3) == 1);
  for (Vertex v = 0; v < 10; ++v) {
    CHECK(count_rooted(petersen(), 5, v) == 6);
    CHECK(to_u64(count_rooted(petersen(), 5, v)) == brute_count(petersen(), 5, bits({v})));
  }
  Count sum = 0;
  for (Vertex v = 0; v < 6; ++v) sum += count_rooted(complete_bipartite(3, 3), 4, v);
  CHECK(sum == 4 * 9);
  for (std::uint64_t s = 0; s < 15; ++s) {
    const Graph g = random_graph(12, 0.45, s + 100);
    for (unsigned k = 4; k <= 7; ++k) {
      for (Vertex v = 0; v < 12; ++v) CHECK(to_u64(count_rooted(g, k, v)) == brute_count(g, k, bits({v})));
    }
  }
}

TEST_CASE("edge-rooted counts") {
  CHECK(count_edge_rooted(cycle(6), 6, 2, 3) == 1);
  for (const auto& [v, w] : petersen().edges()) CHECK(count_edge_rooted(petersen(), 5, v, w) == 4);
  CHECK_THROWS(count_edge_rooted(cycle(6), 6, 0, 2));
  for (std::uint64_t s = 0; s < 10; ++s) {
    const Graph g = random_graph(12, 0.4, s + 200);
    for (unsigned k = 4; k <= 7; ++k) {
      for (const auto& [v, w] : g.edges()) {
        const Count c = count_edge_rooted(g, k, v, w);
        CHECK(to_u64(c) == brute_count(g, k, bits({v, w})));
        CHECK(count_edge_rooted(g, k, w, v) == c);
      }
    }
  }
}

TEST_CASE("cherry-rooted counts") {
  CHECK(count_cherry_rooted(cycle(6), 6, 0, 1, 2) == 1);
  // C_5 plus a pendant vertex.
  GraphBuilder pb(6);
  for (const auto& [u, w] : cycle(5).edges()) pb.add_edge(u, w);
  pb.add_edge(0, 5);
  const Graph pend = pb.build();
  CHECK(count_cherry_rooted(pend, 5, 4, 0, 1) == 1);
  CHECK(count_cherry_rooted(pend, 5, 5, 0, 1) == 0);
  for (std::uint64_t s = 0; s < 10; ++s) {
    const Graph g = random_graph(12, 0.4, s + 300);
    for (unsigned k = 4; k <= 7; ++k) {
      for (Vertex v = 0; v < 12; ++v) {
        for (const auto& [u, w] : nonadjacent_neighbor_pairs(g, v)) {
          CHECK(to_u64(count_cherry_rooted(g, k, u, v, w)) == brute_count(g, k, bits({u, v, w})));
        }
      }
    }
  }
}

TEST_CASE("pair counts") {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const Graph g = random_graph(11, 0.45, s + 400);
    for (unsigned k = 4; k <= 7; ++k) {
      for (Vertex a = 0; a < 11; ++a) {
        for (Vertex b = 0; b < 11; ++b) {
          if (a == b) continue;
          CHECK(to_u64(count_pair(g, k, a, b)) == brute_count(g, k, bits({a, b})));
        }
      }
    }
  }
}

TEST_CASE("handshake identities") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const Graph g = random_graph(13, 0.35, s + 500);
    for (unsigned k : {5u, 6u, 7u}) {
      const CountReport r = count_report(g, k, {true, true, true, 1});
      Count vsum = 0;
      for (Count c : *r.rooted) vsum += c;
      CHECK(vsum == k * r.total);
      for (Vertex v = 0; v < 13; ++v) {
        Count es = 0;
        for (Vertex w : g.neighbors(v)) es += r.edge_rooted->at({v, w});
        Count cs = 0;
        for (const auto& [u, w] : nonadjacent_neighbor_pairs(g, v)) cs += r.cherry_rooted->at({u, v, w});
        CHECK(es == 2 * (*r.rooted)[v]);
        CHECK(cs == 2 * (*r.rooted)[v]);
      }
    }
  }
}

TEST_CASE("every enumerated cycle is induced, distinct and obeys the exclusion property") {
  const Graph g = random_graph(13, 0.4, 77);
  for (unsigned k : {5u, 6u}) {
    std::set<std::vector<Vertex>> seen;
    Count walked = 0;
    std::uint64_t violations = 0;
    for (Vertex root = 0; root < g.order(); ++root) {
      CycleQuery q;
      q.root = root;
      q.root_is_minimum = true;
      walked += walk_query(
          g, k, q,
          [&](const ExclusionTrace& t, Vertex next) {
            // The new vertex avoids every closed neighbourhood except the tip's.
            for (std::size_t i = 0; i + 1 < t.path.size(); ++i) {
              const Vertex p = t.path[i];
              if (p == next || g.adjacent(p, next)) {
                if (!(i == 0 && t.path.size() == k - 1)) ++violations;
              }
            }
            if ((t.forbidden[next / 64] >> (next % 64)) & 1U) ++violations;
          },
          [&](std::span<const Vertex> cyc) {
            CHECK(is_induced_cycle(g, cyc));
            std::vector<Vertex> key(cyc.begin(), cyc.end());
            std::sort(key.begin(), key.end());
            CHECK(seen.insert(key).second);
          });
    }
    CHECK(violations == 0);
    CHECK(walked == count_fast(g, k));
    CHECK(seen.size() == brute_count(g, k));
  }
}

TEST_CASE("symmetrisation") {
  const Graph s = symmetrise(cycle(5), 0, 2);
  // 0 takes the neighbourhood {1, 3} of 2.
  CHECK(s.degree(3) == 3);
  CHECK(s.degree(4) == 1);
  CHECK(s.neighbors(0) == s.neighbors(2));
  CHECK(symmetrise(Graph::empty(5), 1, 3) == Graph::empty(5));

  auto identity_holds = [](const Graph& g, unsigned k, Vertex vm, Vertex vp) {
    const Graph h = symmetrise(g, vm, vp);
    return count_fast(h, k) + count_rooted(g, k, vm) + count_pair(g, k, vm, vp) ==
           count_fast(g, k) + count_rooted(g, k, vp);
  };
  for (Vertex a = 0; a < 7; ++a) {
    for (Vertex b = 0; b < 7; ++b) {
      if (a != b) CHECK(identity_holds(cycle(7), 7, a, b));
    }
  }
  for (std::uint64_t s = 0; s < 40; ++s) {
    const Graph g = random_graph(10, 0.5, s + 600);
    CHECK(identity_holds(g, 5 + s % 3, s % 10, (s * 7 + 3) % 10 == s % 10 ? (s + 1) % 10 : (s * 7 + 3) % 10));
  }
  // k = 4: two non-adjacent twins can share an induced C_4.
  CHECK_FALSE(identity_holds(cycle(4), 4, 0, 2));
}
