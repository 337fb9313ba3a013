#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "indcyc/count_int.hpp"
#include "indcyc/graph.hpp"

namespace indcyc {

/// D_k(G) together with whichever rooted tallies were requested.
struct CountReport {
  unsigned k = 0;
  Count total = 0;
  std::optional<std::vector<Count>> rooted;                           // v -> D_k(G,v)
  std::optional<std::map<Edge, Count>> edge_rooted;                   // (v,w) -> D_k(G,v,w)
  std::optional<std::map<std::tuple<Vertex, Vertex, Vertex>, Count>> cherry_rooted;  // (u,v,w)
};

nlohmann::json to_json(const CountReport& r);

/// Enumeration state handed to trace observers: the partial path (root
/// first, tip last) and the forbidden set, i.e. the union of the closed
/// neighbourhoods of every path vertex except the tip, plus the vertices the
/// canonical rooting rules out.
struct ExclusionTrace {
  Vertex root = 0;
  std::span<const Vertex> path;
  std::span<const Word> forbidden;
};

/// What the path-extension enumerator is asked to count. Every induced k-cycle
/// through `root` corresponds to one closed path root, v1, ..., v_{k-1}; the
/// remaining fields cut that family down.
struct CycleQuery {
  Vertex root = 0;
  /// Only vertices with larger labels may join the path (global counting).
  bool root_is_minimum = false;
  /// Keep one of the two traversal directions: v1 < v_{k-1}.
  bool break_direction = true;
  std::optional<Vertex> first;         // pin v1
  std::optional<Vertex> last;          // pin v_{k-1}
  std::optional<Vertex> must_contain;  // some path vertex must equal this
};

/// Counts the induced k-cycles matched by `query` (k >= 4).
Count count_query(const Graph& g, unsigned k, const CycleQuery& query);

using TraceObserver = std::function<void(const ExclusionTrace&, Vertex next)>;
using CycleObserver = std::function<void(std::span<const Vertex> cycle)>;

/// Same enumeration as count_query but reports each extension step and each
/// closed cycle. Slow; meant for tests and diagnostics.
Count walk_query(const Graph& g, unsigned k, const CycleQuery& query, const TraceObserver& on_extend,
                 const CycleObserver& on_cycle);

bool is_induced_cycle(const Graph& g, std::span<const Vertex> s);

/// Definitional counter: every k-subset is tested with is_induced_cycle.
CountReport count_oracle(const Graph& g, unsigned k);
/// Oracle restricted to k-subsets that contain all of `required`.
Count count_oracle_containing(const Graph& g, unsigned k, std::span<const Vertex> required);

/// D_k(G) by canonical path extension, parallel over roots. threads == 0 uses
/// the OpenMP default.
Count count_fast(const Graph& g, unsigned k, int threads = 1);
/// Single-threaded reference for count_fast.
Count count_fast_serial(const Graph& g, unsigned k);

Count count_rooted(const Graph& g, unsigned k, Vertex v);
std::vector<Count> count_rooted_all(const Graph& g, unsigned k, int threads = 1);
std::vector<Count> count_rooted_all_serial(const Graph& g, unsigned k);
/// D_k(G,v,w) for an edge vw.
Count count_edge_rooted(const Graph& g, unsigned k, Vertex v, Vertex w);
/// D_k(G,u,v,w) for a cherry u-v-w (u,w in N(v), uw not an edge).
Count count_cherry_rooted(const Graph& g, unsigned k, Vertex u, Vertex v, Vertex w);
/// Number of induced k-cycles containing both a and b, adjacent or not.
Count count_pair(const Graph& g, unsigned k, Vertex a, Vertex b);

struct CountOptions {
  bool rooted = false;
  bool edge_rooted = false;
  bool cherry_rooted = false;
  int threads = 1;
};

/// count_fast plus the requested rooted maps.
CountReport count_report(const Graph& g, unsigned k, const CountOptions& options);

/// Zykov symmetrisation: v_minus loses its edges and becomes a non-adjacent
/// twin of v_plus.
Graph symmetrise(const Graph& g, Vertex v_minus, Vertex v_plus);

}  // namespace indcyc
