#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "indcyc/count_int.hpp"
#include "indcyc/graph.hpp"

namespace indcyc {

/// SplitMix64 (Steele, Lea, Flood 2014). Fixed output on every platform;
/// `split` derives independent sub-seeds from a parent seed and stream id.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  /// Uniform in [0, bound) by rejection.
  std::uint64_t below(std::uint64_t bound);

  static std::uint64_t split(std::uint64_t seed, std::uint64_t stream);

 private:
  std::uint64_t state_;
};

Graph cycle(std::size_t k);
Graph complete_graph(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph petersen();

struct BlowUpSpec {
  Graph base;
  std::vector<std::size_t> part_sizes;
  unsigned depth = 1;
};

/// Parts are laid out contiguously in base-vertex order: vertex i of the
/// result belongs to part blow_up_parts(sizes)[i].
Graph blow_up(const Graph& base, const std::vector<std::size_t>& part_sizes);
std::vector<Vertex> blow_up_parts(const std::vector<std::size_t>& part_sizes);
/// n split over `parts` parts; the first n mod parts get the extra vertex.
std::vector<std::size_t> balanced_part_sizes(std::size_t n, std::size_t parts);
Graph balanced_blow_up(const Graph& base, std::size_t n);
Graph iterated_blow_up(const Graph& base, unsigned depth);
Graph build(const BlowUpSpec& spec);

/// Induced C_k count of the depth-m iterated blow-up of C_k:
/// N(1) = 1, N(m) = (k^{m-1})^k + k N(m-1).
Count iterated_blow_up_count(unsigned k, unsigned depth);

/// G(n, p): pairs (u, w), u < w, visited row-major; edge iff uniform() < p.
Graph random_graph(std::size_t n, double p, std::uint64_t seed);

struct NamedGraph {
  std::string name;
  Graph graph;
};

/// Deterministic mix of structured graphs and `random_count` seeded random
/// graphs with 8 <= n <= 16, used by the soundness and identity suites.
std::vector<NamedGraph> test_corpus(std::uint64_t seed, std::size_t random_count);

/// Construction mini-language: cycle:K, kbipartite:A,B, blowup:CK:t,
/// iterated-blowup:CK:depth=M, random:N,P[,SEED], petersen.
Graph construct(const std::string& spec, std::uint64_t seed = 0);

}  // namespace indcyc
