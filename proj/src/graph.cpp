#include "indcyc/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace indcyc {

namespace {

void check_order(std::size_t n) {
  if (n > kMaxVertices) {
    throw std::invalid_argument("graph order " + std::to_string(n) + " exceeds 2^16");
  }
}

void check_vertex(std::size_t n, Vertex v) {
  if (v >= n) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range [0," +
                            std::to_string(n) + ")");
  }
}

}  // namespace

Graph::Graph(std::size_t n, std::vector<Word> rows)
    : n_(n), words_(words_for(n)), rows_(std::move(rows)), degrees_(n, 0) {
  std::size_t twice_edges = 0;
  for (std::size_t v = 0; v < n_; ++v) {
    std::size_t d = 0;
    for (std::size_t i = 0; i < words_; ++i) d += std::popcount(rows_[v * words_ + i]);
    degrees_[v] = static_cast<std::uint32_t>(d);
    twice_edges += d;
  }
  edge_count_ = twice_edges / 2;
}

Graph Graph::from_edge_list(std::size_t n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (const auto& [u, w] : edges) b.add_edge(u, w);
  return b.build();
}

Graph Graph::empty(std::size_t n) { return GraphBuilder(n).build(); }

std::size_t Graph::min_degree() const {
  if (n_ == 0) return 0;
  return *std::min_element(degrees_.begin(), degrees_.end());
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(n_, v);
  std::vector<Vertex> out;
  out.reserve(degrees_[v]);
  const auto r = row(v);
  for (std::size_t i = 0; i < words_; ++i) {
    for (Word bits = r[i]; bits != 0; bits &= bits - 1) {
      out.push_back(static_cast<Vertex>(i * kWordBits + std::countr_zero(bits)));
    }
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex w : neighbors(u)) {
      if (u < w) out.emplace_back(u, w);
    }
  }
  return out;
}

GraphBuilder::GraphBuilder(std::size_t n) : n_(n), words_(words_for(n)) {
  check_order(n);
  rows_.assign(n_ * words_, 0);
}

GraphBuilder::GraphBuilder(const Graph& g) : n_(g.n_), words_(g.words_), rows_(g.rows_) {}

void GraphBuilder::check_pair(Vertex u, Vertex w) const {
  check_vertex(n_, u);
  check_vertex(n_, w);
  if (u == w) throw std::invalid_argument("loop edge at vertex " + std::to_string(u));
}

void GraphBuilder::set(Vertex u, Vertex w, bool on) {
  const Word mu = Word{1} << (u % kWordBits);
  const Word mw = Word{1} << (w % kWordBits);
  Word& a = rows_[u * words_ + w / kWordBits];
  Word& b = rows_[w * words_ + u / kWordBits];
  if (on) {
    a |= mw;
    b |= mu;
  } else {
    a &= ~mw;
    b &= ~mu;
  }
}

void GraphBuilder::add_edge(Vertex u, Vertex w) {
  check_pair(u, w);
  set(u, w, true);
}

void GraphBuilder::remove_edge(Vertex u, Vertex w) {
  check_pair(u, w);
  set(u, w, false);
}

void GraphBuilder::toggle_edge(Vertex u, Vertex w) {
  check_pair(u, w);
  set(u, w, !adjacent(u, w));
}

void GraphBuilder::isolate(Vertex v) {
  check_vertex(n_, v);
  for (Vertex w = 0; w < n_; ++w) {
    if (w != v) set(v, w, false);
  }
}

Graph GraphBuilder::build() const { return Graph(n_, rows_); }

Graph complement(const Graph& g) {
  const std::size_t n = g.order();
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex w = u + 1; w < n; ++w) {
      if (!g.adjacent(u, w)) b.add_edge(u, w);
    }
  }
  return b.build();
}

std::size_t codegree(const Graph& g, Vertex u, Vertex w) {
  check_vertex(g.order(), u);
  check_vertex(g.order(), w);
  if (u == w) throw std::invalid_argument("codegree needs two distinct vertices");
  const auto a = g.row(u);
  const auto b = g.row(w);
  std::size_t x = 0;
  for (std::size_t i = 0; i < g.words(); ++i) x += std::popcount(a[i] & b[i]);
  return x;
}

std::size_t triple_codegree(const Graph& g, Vertex u, Vertex v, Vertex w) {
  check_vertex(g.order(), u);
  check_vertex(g.order(), v);
  check_vertex(g.order(), w);
  if (u == v || v == w || u == w) {
    throw std::invalid_argument("triple codegree needs three distinct vertices");
  }
  const auto a = g.row(u);
  const auto b = g.row(v);
  const auto c = g.row(w);
  std::size_t z = 0;
  for (std::size_t i = 0; i < g.words(); ++i) z += std::popcount(a[i] & b[i] & c[i]);
  return z;
}

std::vector<Edge> nonadjacent_neighbor_pairs(const Graph& g, Vertex v) {
  check_vertex(g.order(), v);
  const auto nbrs = g.neighbors(v);
  std::vector<Edge> out;
  for (Vertex u : nbrs) {
    for (Vertex w : nbrs) {
      if (u != w && !g.adjacent(u, w)) out.emplace_back(u, w);
    }
  }
  return out;
}

DegreeProfile::DegreeProfile(Graph g, unsigned k) : graph_(std::move(g)), k_(k) {
  if (k < 4) throw std::invalid_argument("degree profile needs k >= 4");
  const std::size_t n = graph_.order();
  if (n == 0) throw std::invalid_argument("degree profile of the null graph");
  c_.reserve(n);
  for (Vertex u = 0; u < n; ++u) {
    c_.emplace_back(Rational(static_cast<long long>(k) * static_cast<long long>(graph_.degree(u)),
                             static_cast<long long>(n)));
  }
}

Rational DegreeProfile::xbar(Vertex u, Vertex w) const {
  return Rational(static_cast<long long>(k_) * static_cast<long long>(codegree(graph_, u, w)),
                  static_cast<long long>(graph_.order()));
}

Rational DegreeProfile::zbar(Vertex u, Vertex v, Vertex w) const {
  return Rational(
      static_cast<long long>(k_) * static_cast<long long>(triple_codegree(graph_, u, v, w)),
      static_cast<long long>(graph_.order()));
}

DegreeProfile profile(const Graph& g, unsigned k) { return DegreeProfile(g, k); }

}  // namespace indcyc
