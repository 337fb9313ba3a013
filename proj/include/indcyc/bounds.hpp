#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "indcyc/count_int.hpp"
#include "indcyc/graph.hpp"

namespace indcyc {

/// 128e/81, the constant this toolkit is built around.
double new_constant();
/// 2e, the earlier constant.
double pg_constant();

/// Relative inflation applied to a floating bound before comparing it with
/// an exact count.
inline constexpr double kBoundSlackEpsilon = 1e-12;

enum class BoundKind { vertex, edge, cherry, global_pg, global_new, lower_blowup, lower_iterated };

std::string to_string(BoundKind kind);

struct BoundReport {
  BoundKind kind = BoundKind::vertex;
  double value = 0;
  std::map<std::string, double> inputs;
  std::optional<Count> exact;

  /// value - exact, when an exact count was supplied.
  std::optional<double> slack() const;
  /// exact <= value * (1 + eps). True when no exact count is attached.
  bool holds() const;
};

nlohmann::json to_json(const BoundReport& r);

/// True when `exact <= bound` after inflating the bound by kBoundSlackEpsilon.
bool bound_holds(Count exact, double bound);

/// (1/2) d^2 ((n - d - 1)/(k - 3))^{k-3}.
double vertex_bound(std::size_t n, unsigned k, std::size_t d);
/// (1/2) d^2 ((n - d)/(k - 3))^{k-3}; maximised at d = 2n/(k-1).
double vertex_bound_relaxed(double n, unsigned k, double d);
/// (d_v - x)(d_w - x)((n - d_v - d_w + x)/(k - 4))^{k-4}.
double edge_bound(std::size_t n, unsigned k, std::size_t d_v, std::size_t d_w, std::size_t x_vw);
double cherry_bound(std::size_t n, unsigned k, std::size_t d_u, std::size_t d_v, std::size_t d_w,
                    std::size_t x_uv, std::size_t x_vw, std::size_t x_uw, std::size_t z_uvw);
/// 2e (n/k)^k.
double global_pg_bound(std::size_t n, unsigned k);
/// (128e/81)(n/k)^k.
double global_new_bound(std::size_t n, unsigned k);

/// The three bounds evaluated from the graph at the given root(s).
BoundReport vertex_bound_at(const Graph& g, unsigned k, Vertex v);
BoundReport edge_bound_at(const Graph& g, unsigned k, Vertex v, Vertex w);
BoundReport cherry_bound_at(const Graph& g, unsigned k, Vertex u, Vertex v, Vertex w);

struct InducibilityBracket {
  double lower = 0;                 // k!/(k^k - k)
  std::optional<double> upper;      // (128e/81) k!/k^k, k >= 6
  double blowup_lower = 0;          // k!/k^k
};

InducibilityBracket inducibility_bracket(unsigned k);

struct DensityPoint {
  std::size_t n = 0;
  Count count = 0;
  Rational density;  // count / C(n, k)
};

struct DensitySequence {
  unsigned k = 0;
  std::vector<DensityPoint> points;
  /// Indices i with density[i] > density[i-1].
  std::vector<std::size_t> violations;
  bool monotone() const { return violations.empty(); }
};

/// counts_by_n must hold I_{C_k}(n) for consecutive n starting at or above k.
DensitySequence density_sequence(unsigned k, const std::map<std::size_t, Count>& counts_by_n);

nlohmann::json to_json(const DensitySequence& s);

Rational binomial(std::size_t n, std::size_t r);

/// Which argument of the proof governs the minimum-degree vertex v, decided
/// exactly from c = k d_v / n.
enum class DegreeCase {
  low,     // d_v < n/k: vertex bound with c <= 1
  high,    // d_v >= 2n/k: edge-sum argument, c >= 2
  middle,  // n/k <= d_v < 2n/k: cherry-sum argument
};

std::string to_string(DegreeCase c);

struct MinDegreeCheck {
  Vertex vertex = 0;
  std::size_t degree = 0;
  Rational c;
  DegreeCase regime = DegreeCase::low;
  bool rangec_applies = false;  // c <= 1 or c >= 4
  Count rooted = 0;             // D_k(G, v)
  double ceiling = 0;           // (128e/81)(n/k)^{k-1}(1 + 10/n)
  /// Bound from the argument that governs this regime, evaluated on G.
  double regime_bound = 0;
  bool pass = false;
};

/// (128e/81)(n/k)^{k-1}.
double vertex_ceiling(std::size_t n, unsigned k);

/// (1/2)(n/k)^{k-1} c^2 e^{3-c}: the vertex bound after 1+x <= e^x.
double rangec_bound(std::size_t n, unsigned k, double c);

/// (1/2) sum over w in N(v) of edge_bound(v,w). Bounds D_k(G,v) for every v.
double edge_sum_bound(const Graph& g, unsigned k, Vertex v);
/// (1/2) sum over (u,w) in A_v of cherry_bound(u,v,w). Bounds D_k(G,v), k >= 6.
double cherry_sum_bound(const Graph& g, unsigned k, Vertex v);
/// The exponential relaxation of cherry_sum_bound in normalised quantities:
/// (n/k)^{k-3} (1/2) e^{5-c} sum [..][..] e^{-(..)}.
double cherry_sum_exponential(const Graph& g, unsigned k, Vertex v);

/// P_2(G,v) = (1/2) e^{5-c} sum_{(u,w) in A_v} f(c - xbar_u) f(c - xbar_w),
/// defined when 1 <= c <= 2 and c - xbar_uv >= 1 for every u in N(v).
std::optional<double> p2_value(const Graph& g, unsigned k, Vertex v);

/// Classifies a minimum-degree vertex (smallest label on ties) and checks
/// D_k(G,v) against (128e/81)(n/k)^{k-1}(1 + 10/n).
MinDegreeCheck check_min_degree_vertex(const Graph& g, unsigned k);

nlohmann::json to_json(const MinDegreeCheck& c);

}  // namespace indcyc
