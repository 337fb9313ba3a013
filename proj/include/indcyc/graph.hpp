#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace indcyc {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;
using Rational = boost::multiprecision::cpp_rational;
using Word = std::uint64_t;

inline constexpr std::size_t kWordBits = 64;
inline constexpr std::size_t kMaxVertices = std::size_t{1} << 16;

inline std::size_t words_for(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }

/// Immutable simple undirected graph on vertices [0, n). Each vertex owns a
/// fixed-width adjacency bitset row; co-degree queries are popcounts of row
/// intersections. Safe to share across threads.
class Graph {
 public:
  Graph() = default;

  static Graph from_edge_list(std::size_t n, std::span<const Edge> edges);
  static Graph empty(std::size_t n);

  std::size_t order() const { return n_; }
  std::size_t size() const { return edge_count_; }
  std::size_t words() const { return words_; }

  std::span<const Word> row(Vertex v) const { return {rows_.data() + v * words_, words_}; }

  bool adjacent(Vertex u, Vertex w) const {
    return (rows_[u * words_ + w / kWordBits] >> (w % kWordBits)) & 1U;
  }
  std::size_t degree(Vertex v) const { return degrees_[v]; }
  std::size_t min_degree() const;

  std::vector<Vertex> neighbors(Vertex v) const;
  std::vector<Edge> edges() const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && rows_ == other.rows_;
  }

 private:
  friend class GraphBuilder;
  Graph(std::size_t n, std::vector<Word> rows);

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<Word> rows_;
  std::vector<std::uint32_t> degrees_;
};

/// Mutable staging area for building a Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n);
  explicit GraphBuilder(const Graph& g);

  std::size_t order() const { return n_; }
  bool adjacent(Vertex u, Vertex w) const {
    return (rows_[u * words_ + w / kWordBits] >> (w % kWordBits)) & 1U;
  }
  void add_edge(Vertex u, Vertex w);
  void remove_edge(Vertex u, Vertex w);
  void toggle_edge(Vertex u, Vertex w);
  void isolate(Vertex v);

  Graph build() const;

 private:
  void check_pair(Vertex u, Vertex w) const;
  void set(Vertex u, Vertex w, bool on);

  std::size_t n_;
  std::size_t words_;
  std::vector<Word> rows_;
};

Graph complement(const Graph& g);

/// x_uw = |N(u) & N(w)|.
std::size_t codegree(const Graph& g, Vertex u, Vertex w);
/// z_uvw = |N(u) & N(v) & N(w)|.
std::size_t triple_codegree(const Graph& g, Vertex u, Vertex v, Vertex w);

/// Ordered pairs (u, w) of distinct, non-adjacent neighbours of v (the cherries
/// centred at v).
std::vector<Edge> nonadjacent_neighbor_pairs(const Graph& g, Vertex v);

/// Scale-free degree quantities c_u = k d_u / n, xbar_uw = k x_uw / n and
/// zbar_uvw = k z_uvw / n, held as exact rationals. c is computed eagerly;
/// xbar and zbar are computed on demand from the owned graph copy.
class DegreeProfile {
 public:
  DegreeProfile(Graph g, unsigned k);

  unsigned k() const { return k_; }
  std::size_t order() const { return graph_.order(); }
  const Rational& c(Vertex u) const { return c_[u]; }
  const std::vector<Rational>& c() const { return c_; }
  Rational xbar(Vertex u, Vertex w) const;
  Rational zbar(Vertex u, Vertex v, Vertex w) const;
  const Graph& graph() const { return graph_; }

 private:
  Graph graph_;
  unsigned k_;
  std::vector<Rational> c_;
};

DegreeProfile profile(const Graph& g, unsigned k);

}  // namespace indcyc
