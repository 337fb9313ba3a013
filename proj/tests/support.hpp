#pragma once

// Test-side oracles. They share nothing with the library's counting code: a
// vertex set spans an induced cycle iff every chosen vertex has exactly two
// chosen neighbours and the chosen set is connected.

#include <bit>
#include <cstdint>
#include <vector>

#include "indcyc/graph.hpp"

namespace testing {

using indcyc::Graph;
using indcyc::Vertex;

inline std::vector<std::uint32_t> masks(const Graph& g) {
  std::vector<std::uint32_t> m(g.order(), 0);
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex w = 0; w < g.order(); ++w) {
      if (u != w && g.adjacent(u, w)) m[u] |= 1U << w;
    }
  }
  return m;
}

inline bool spans_induced_cycle(const std::vector<std::uint32_t>& adj, std::uint32_t set) {
  if (std::popcount(set) < 3) return false;
  for (std::uint32_t s = set; s != 0; s &= s - 1) {
    if (std::popcount(adj[std::countr_zero(s)] & set) != 2) return false;
  }
  std::uint32_t seen = set & (~set + 1);
  for (;;) {
    std::uint32_t grow = seen;
    for (std::uint32_t s = seen; s != 0; s &= s - 1) grow |= adj[std::countr_zero(s)] & set;
    if (grow == seen) break;
    seen = grow;
  }
  return seen == set;
}

/// Induced k-cycles whose vertex set contains `required` (a bitmask), n <= 26.
inline std::uint64_t brute_count(const Graph& g, unsigned k, std::uint32_t required = 0) {
  const auto adj = masks(g);
  const unsigned n = static_cast<unsigned>(g.order());
  std::uint64_t total = 0;
  if (k > n) return 0;
  // Gosper's hack over k-subsets.
  std::uint32_t s = (k == 32) ? ~0U : ((1U << k) - 1);
  const std::uint32_t limit = 1U << n;
  while (s < limit) {
    if ((s & required) == required && spans_induced_cycle(adj, s)) ++total;
    const std::uint32_t c = s & (~s + 1);
    const std::uint32_t r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
  return total;
}

inline std::uint32_t bits(std::initializer_list<Vertex> vs) {
  std::uint32_t m = 0;
  for (Vertex v : vs) m |= 1U << v;
  return m;
}

/// The labeled graph on n vertices whose pairs (u, w), u < w, in row-major
/// order are switched on by the bits of `mask`.
inline Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  indcyc::GraphBuilder b(n);
  unsigned bit = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex w = u + 1; w < n; ++w, ++bit) {
      if ((mask >> bit) & 1U) b.add_edge(u, w);
    }
  }
  return b.build();
}

inline std::uint64_t to_u64(indcyc::Count c) { return static_cast<std::uint64_t>(c); }

}  // namespace testing
