#include "indcyc/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "indcyc/functions.hpp"
#include "indcyc/induced_count.hpp"

namespace indcyc {

namespace {

using Signed = long long;

void require(bool ok, const char* message) {
  if (!ok) throw std::invalid_argument(message);
}

double power_term(double ground, unsigned denom, unsigned exponent) {
  return std::pow(ground / static_cast<double>(denom), static_cast<double>(exponent));
}

Signed s(std::size_t v) { return static_cast<Signed>(v); }

}  // namespace

double new_constant() { return new_constant_value(); }
double pg_constant() { return pg_constant_value(); }

std::string to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::vertex: return "vertex";
    case BoundKind::edge: return "edge";
    case BoundKind::cherry: return "cherry";
    case BoundKind::global_pg: return "global_pg";
    case BoundKind::global_new: return "global_new";
    case BoundKind::lower_blowup: return "lower_blowup";
    case BoundKind::lower_iterated: return "lower_iterated";
  }
  return "unknown";
}

std::optional<double> BoundReport::slack() const {
  if (!exact) return std::nullopt;
  return value - to_double(*exact);
}

bool BoundReport::holds() const { return !exact || bound_holds(*exact, value); }

nlohmann::json to_json(const BoundReport& r) {
  nlohmann::json j;
  j["kind"] = to_string(r.kind);
  j["inputs"] = r.inputs;
  j["value"] = r.value;
  if (r.exact) {
    j["exact"] = count_to_json(*r.exact);
    j["slack"] = *r.slack();
  }
  j["pass"] = r.holds();
  return j;
}

bool bound_holds(Count exact, double bound) {
  return to_double(exact) <= bound * (1.0 + kBoundSlackEpsilon);
}

double vertex_bound(std::size_t n, unsigned k, std::size_t d) {
  require(k >= 4, "vertex bound needs k >= 4");
  require(n >= 1 && d <= n - 1, "vertex bound needs 0 <= d <= n-1");
  const double dd = static_cast<double>(d);
  return 0.5 * dd * dd * power_term(static_cast<double>(n - d - 1), k - 3, k - 3);
}

double vertex_bound_relaxed(double n, unsigned k, double d) {
  require(k >= 4, "vertex bound needs k >= 4");
  require(d >= 0 && d <= n, "relaxed vertex bound needs 0 <= d <= n");
  return 0.5 * d * d * power_term(n - d, k - 3, k - 3);
}

double edge_bound(std::size_t n, unsigned k, std::size_t d_v, std::size_t d_w, std::size_t x_vw) {
  require(k >= 5, "edge bound needs k >= 5");
  require(x_vw <= std::min(d_v, d_w), "edge bound needs x_vw <= min(d_v, d_w)");
  const Signed ground = s(n) - s(d_v) - s(d_w) + s(x_vw);
  require(ground >= 0, "edge bound: n - d_v - d_w + x_vw is negative");
  return static_cast<double>(d_v - x_vw) * static_cast<double>(d_w - x_vw) *
         power_term(static_cast<double>(ground), k - 4, k - 4);
}

double cherry_bound(std::size_t n, unsigned k, std::size_t d_u, std::size_t d_v, std::size_t d_w,
                    std::size_t x_uv, std::size_t x_vw, std::size_t x_uw, std::size_t z_uvw) {
  require(k >= 6, "cherry bound needs k >= 6");
  const Signed first = s(d_u) - s(x_uv) - s(x_uw) + s(z_uvw);
  const Signed second = s(d_w) - s(x_vw) - s(x_uw) + s(z_uvw);
  const Signed ground =
      s(n) - s(d_u) - s(d_v) - s(d_w) + s(x_uv) + s(x_vw) + s(x_uw) - s(z_uvw);
  require(first >= 0 && second >= 0 && ground >= 0,
          "cherry bound: negative inclusion-exclusion term");
  return static_cast<double>(first) * static_cast<double>(second) *
         power_term(static_cast<double>(ground), k - 5, k - 5);
}

double global_pg_bound(std::size_t n, unsigned k) {
  require(k >= 4 && n >= k, "global bound needs n >= k >= 4");
  return pg_constant() * std::pow(static_cast<double>(n) / k, static_cast<double>(k));
}

double global_new_bound(std::size_t n, unsigned k) {
  require(k >= 6 && n >= k, "new global bound needs n >= k >= 6");
  return new_constant() * std::pow(static_cast<double>(n) / k, static_cast<double>(k));
}

BoundReport vertex_bound_at(const Graph& g, unsigned k, Vertex v) {
  BoundReport r;
  r.kind = BoundKind::vertex;
  r.inputs = {{"n", double(g.order())}, {"k", double(k)}, {"d_v", double(g.degree(v))}};
  r.value = vertex_bound(g.order(), k, g.degree(v));
  return r;
}

BoundReport edge_bound_at(const Graph& g, unsigned k, Vertex v, Vertex w) {
  BoundReport r;
  r.kind = BoundKind::edge;
  const std::size_t x = codegree(g, v, w);
  r.inputs = {{"n", double(g.order())}, {"k", double(k)},    {"d_v", double(g.degree(v))},
              {"d_w", double(g.degree(w))}, {"x_vw", double(x)}};
  r.value = edge_bound(g.order(), k, g.degree(v), g.degree(w), x);
  return r;
}

BoundReport cherry_bound_at(const Graph& g, unsigned k, Vertex u, Vertex v, Vertex w) {
  BoundReport r;
  r.kind = BoundKind::cherry;
  const std::size_t x_uv = codegree(g, u, v);
  const std::size_t x_vw = codegree(g, v, w);
  const std::size_t x_uw = codegree(g, u, w);
  const std::size_t z = triple_codegree(g, u, v, w);
  r.inputs = {{"n", double(g.order())}, {"k", double(k)},         {"d_u", double(g.degree(u))},
              {"d_v", double(g.degree(v))}, {"d_w", double(g.degree(w))}, {"x_uv", double(x_uv)},
              {"x_vw", double(x_vw)},   {"x_uw", double(x_uw)},   {"z_uvw", double(z)}};
  r.value = cherry_bound(g.order(), k, g.degree(u), g.degree(v), g.degree(w), x_uv, x_vw, x_uw, z);
  return r;
}

InducibilityBracket inducibility_bracket(unsigned k) {
  require(k >= 5, "inducibility bracket needs k >= 5");
  // k!/k^k as a running product of i/k keeps everything in range.
  double ratio = 1.0;
  for (unsigned i = 1; i <= k; ++i) ratio *= static_cast<double>(i) / k;
  InducibilityBracket b;
  b.blowup_lower = ratio;
  // k!/(k^k - k) = (k!/k^k) / (1 - k^{1-k})
  b.lower = ratio / (1.0 - std::pow(static_cast<double>(k), 1.0 - static_cast<double>(k)));
  if (k >= 6) b.upper = new_constant() * ratio;
  return b;
}

Rational binomial(std::size_t n, std::size_t r) {
  if (r > n) return Rational(0);
  boost::multiprecision::cpp_int acc = 1;
  for (std::size_t i = 0; i < r; ++i) {
    acc *= (n - i);
    acc /= (i + 1);
  }
  return Rational(acc);
}

DensitySequence density_sequence(unsigned k, const std::map<std::size_t, Count>& counts_by_n) {
  require(!counts_by_n.empty(), "density sequence needs at least one value");
  DensitySequence out;
  out.k = k;
  std::optional<std::size_t> prev;
  for (const auto& [n, count] : counts_by_n) {
    require(n >= k, "density sequence needs n >= k");
    if (prev && n != *prev + 1) {
      throw std::invalid_argument("density sequence: gap in n between " + std::to_string(*prev) +
                                  " and " + std::to_string(n));
    }
    prev = n;
    DensityPoint p;
    p.n = n;
    p.count = count;
    p.density = Rational(boost::multiprecision::cpp_int(to_string(count))) / binomial(n, k);
    if (!out.points.empty() && p.density > out.points.back().density) {
      out.violations.push_back(out.points.size());
    }
    out.points.push_back(std::move(p));
  }
  return out;
}

nlohmann::json to_json(const DensitySequence& s) {
  nlohmann::json j;
  j["k"] = s.k;
  auto& pts = j["points"] = nlohmann::json::array();
  for (const auto& p : s.points) {
    pts.push_back({{"n", p.n},
                   {"count", count_to_json(p.count)},
                   {"density", p.density.str()},
                   {"density_value", static_cast<double>(p.density)}});
  }
  j["monotone"] = s.monotone();
  j["violations"] = s.violations;
  return j;
}

std::string to_string(DegreeCase c) {
  switch (c) {
    case DegreeCase::low: return "low";
    case DegreeCase::high: return "high";
    case DegreeCase::middle: return "middle";
  }
  return "unknown";
}

double vertex_ceiling(std::size_t n, unsigned k) {
  return new_constant() * std::pow(static_cast<double>(n) / k, static_cast<double>(k - 1));
}

double rangec_bound(std::size_t n, unsigned k, double c) {
  return 0.5 * std::pow(static_cast<double>(n) / k, static_cast<double>(k - 1)) * c * c *
         std::exp(3.0 - c);
}

double edge_sum_bound(const Graph& g, unsigned k, Vertex v) {
  double sum = 0;
  for (Vertex w : g.neighbors(v)) {
    sum += edge_bound(g.order(), k, g.degree(v), g.degree(w), codegree(g, v, w));
  }
  return 0.5 * sum;
}

double cherry_sum_bound(const Graph& g, unsigned k, Vertex v) {
  double sum = 0;
  for (const auto& [u, w] : nonadjacent_neighbor_pairs(g, v)) sum += cherry_bound_at(g, k, u, v, w).value;
  return 0.5 * sum;
}

double cherry_sum_exponential(const Graph& g, unsigned k, Vertex v) {
  require(k >= 6, "cherry sum needs k >= 6");
  const double scale = static_cast<double>(k) / static_cast<double>(g.order());
  auto norm = [&](std::size_t q) { return scale * static_cast<double>(q); };
  const double c = norm(g.degree(v));
  double sum = 0;
  for (const auto& [u, w] : nonadjacent_neighbor_pairs(g, v)) {
    // Private neighbourhood sizes, formed in integers so that empty ones are exactly 0.
    const std::size_t xuw = codegree(g, u, w);
    const std::size_t z = triple_codegree(g, u, v, w);
    const std::size_t pu = g.degree(u) + z - codegree(g, u, v) - xuw;
    const std::size_t pw = g.degree(w) + z - codegree(g, v, w) - xuw;
    sum += norm(pu) * norm(pw) * std::exp(-(norm(pu) + norm(pw) + norm(xuw) - norm(z)));
  }
  return std::pow(1.0 / scale, static_cast<double>(k - 3)) * 0.5 * std::exp(5.0 - c) * sum;
}

std::optional<double> p2_value(const Graph& g, unsigned k, Vertex v) {
  const Signed n = s(g.order());
  const Signed d = s(g.degree(v));
  // 1 <= c <= 2  <=>  n <= k d <= 2n
  if (s(k) * d < n || s(k) * d > 2 * n) return std::nullopt;
  const auto nbrs = g.neighbors(v);
  for (Vertex u : nbrs) {
    // c - xbar_u >= 1  <=>  k (d - x_uv) >= n
    if (s(k) * (d - s(codegree(g, u, v))) < n) return std::nullopt;
  }
  const double scale = static_cast<double>(k) / static_cast<double>(n);
  const double c = scale * static_cast<double>(d);
  double sum = 0;
  for (const auto& [u, w] : nonadjacent_neighbor_pairs(g, v)) {
    sum += f_xexp(c - scale * static_cast<double>(codegree(g, u, v))) *
           f_xexp(c - scale * static_cast<double>(codegree(g, w, v)));
  }
  return 0.5 * std::exp(5.0 - c) * sum;
}

MinDegreeCheck check_min_degree_vertex(const Graph& g, unsigned k) {
  require(k >= 6 && g.order() >= k, "min-degree check needs n >= k >= 6");
  MinDegreeCheck r;
  const std::size_t n = g.order();
  r.degree = g.min_degree();
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == r.degree) {
      r.vertex = v;
      break;
    }
  }
  r.c = Rational(static_cast<long long>(k) * s(r.degree), s(n));
  const Signed kd = s(k) * s(r.degree);
  if (kd < s(n)) {
    r.regime = DegreeCase::low;
  } else if (kd >= 2 * s(n)) {
    r.regime = DegreeCase::high;
  } else {
    r.regime = DegreeCase::middle;
  }
  r.rangec_applies = kd <= s(n) || kd >= 4 * s(n);
  r.rooted = count_rooted(g, k, r.vertex);
  r.ceiling = vertex_ceiling(n, k) * (1.0 + 10.0 / static_cast<double>(n));
  switch (r.regime) {
    case DegreeCase::low:
      r.regime_bound = rangec_bound(n, k, static_cast<double>(r.c));
      break;
    case DegreeCase::high:
      r.regime_bound = edge_sum_bound(g, k, r.vertex);
      break;
    case DegreeCase::middle:
      r.regime_bound = cherry_sum_bound(g, k, r.vertex);
      break;
  }
  r.pass = bound_holds(r.rooted, r.ceiling) && bound_holds(r.rooted, r.regime_bound);
  return r;
}

nlohmann::json to_json(const MinDegreeCheck& c) {
  return {{"vertex", c.vertex},
          {"degree", c.degree},
          {"c", c.c.str()},
          {"regime", to_string(c.regime)},
          {"rangec_applies", c.rangec_applies},
          {"rooted", count_to_json(c.rooted)},
          {"regime_bound", c.regime_bound},
          {"ceiling", c.ceiling},
          {"pass", c.pass}};
}

}  // namespace indcyc
