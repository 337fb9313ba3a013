#include "indcyc/suites.hpp"

#include <algorithm>
#include <stdexcept>

#include "indcyc/analytic_verify.hpp"
#include "indcyc/bounds.hpp"
#include "indcyc/constructions.hpp"
#include "indcyc/graph_io.hpp"
#include "indcyc/induced_count.hpp"

namespace indcyc {
namespace {

constexpr std::size_t kMaxListed = 20;

/// Tally of exact-versus-bound comparisons for one bound family.
struct Tally {
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  double max_ratio = 0;  // largest exact / bound seen
  nlohmann::json listed = nlohmann::json::array();

  void add(Count exact, double bound, const nlohmann::json& where) {
    ++checked;
    if (bound > 0) max_ratio = std::max(max_ratio, to_double(exact) / bound);
    if (!bound_holds(exact, bound)) {
      ++violations;
      if (listed.size() < kMaxListed) {
        nlohmann::json w = where;
        w["exact"] = count_to_json(exact);
        w["bound"] = bound;
        listed.push_back(w);
      }
    }
  }

  nlohmann::json to_json() const {
    return {{"checked", checked}, {"violations", violations}, {"max_ratio", max_ratio}, {"failures", listed}};
  }
};

/// Equality tally for identities.
struct Equalities {
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  nlohmann::json listed = nlohmann::json::array();

  void add(Count lhs, Count rhs, const nlohmann::json& where) {
    ++checked;
    if (lhs != rhs) {
      ++failed;
      if (listed.size() < kMaxListed) {
        nlohmann::json w = where;
        w["lhs"] = count_to_json(lhs);
        w["rhs"] = count_to_json(rhs);
        listed.push_back(w);
      }
    }
  }

  nlohmann::json to_json() const { return {{"checked", checked}, {"failed", failed}, {"failures", listed}}; }
};

Count sum(const std::vector<Count>& v) {
  Count s = 0;
  for (Count c : v) s = checked_add(s, c);
  return s;
}

Graph random_instance(SplitMix64& rng, std::size_t n_lo, std::size_t n_hi) {
  const std::size_t n = n_lo + rng.below(n_hi - n_lo + 1);
  const double p = 0.2 + 0.6 * rng.uniform();
  return random_graph(n, p, rng.next());
}

}  // namespace

nlohmann::json to_json(const SuiteReport& r) {
  return {{"suite", r.name}, {"checks", r.checks}, {"failures", r.failures}, {"pass", r.pass()},
          {"detail", r.detail}};
}

SuiteReport bounds_suite(const SuiteOptions& options) {
  SuiteReport report;
  report.name = "bounds";
  const auto corpus = test_corpus(options.seed, options.corpus_random);
  Tally vertex, edge, cherry, global;
  nlohmann::json new_constant_ratio = nlohmann::json::object();
  std::uint64_t mindeg_checked = 0;
  std::uint64_t mindeg_failed = 0;
  nlohmann::json mindeg_failures = nlohmann::json::array();
  std::map<std::string, std::uint64_t> regimes;

  for (const auto& [name, g] : corpus) {
    const std::size_t n = g.order();
    for (unsigned k = 4; k <= 8 && k <= n; ++k) {
      const auto rooted = count_rooted_all(g, k, options.threads);
      const Count total = count_fast(g, k, options.threads);
      global.add(total, global_pg_bound(n, k), {{"graph", name}, {"k", k}});
      if (k >= 6) {
        const double ratio = to_double(total) / global_new_bound(n, k);
        auto& slot = new_constant_ratio[std::to_string(k)];
        slot = std::max(slot.is_null() ? 0.0 : slot.get<double>(), ratio);
      }
      for (Vertex v = 0; v < n; ++v) {
        vertex.add(rooted[v], vertex_bound_at(g, k, v).value, {{"graph", name}, {"k", k}, {"v", v}});
      }
      if (k >= 5) {
        for (const auto& [v, w] : g.edges()) {
          edge.add(count_edge_rooted(g, k, v, w), edge_bound_at(g, k, v, w).value,
                   {{"graph", name}, {"k", k}, {"v", v}, {"w", w}});
        }
      }
      if (k >= 6) {
        for (Vertex v = 0; v < n; ++v) {
          for (const auto& [u, w] : nonadjacent_neighbor_pairs(g, v)) {
            if (u > w) continue;  // the count and the bound are symmetric in u, w
            cherry.add(count_cherry_rooted(g, k, u, v, w), cherry_bound_at(g, k, u, v, w).value,
                       {{"graph", name}, {"k", k}, {"u", u}, {"v", v}, {"w", w}});
          }
        }
        const auto md = check_min_degree_vertex(g, k);
        ++mindeg_checked;
        ++regimes[to_string(md.regime)];
        if (!md.pass) {
          ++mindeg_failed;
          if (mindeg_failures.size() < kMaxListed) {
            auto j = to_json(md);
            j["graph"] = name;
            j["k"] = k;
            mindeg_failures.push_back(j);
          }
        }
      }
    }
  }

  report.checks = vertex.checked + edge.checked + cherry.checked + global.checked + mindeg_checked;
  report.failures = vertex.violations + edge.violations + cherry.violations + global.violations + mindeg_failed;
  report.detail = {{"corpus_size", corpus.size()},
                   {"vertex", vertex.to_json()},
                   {"edge", edge.to_json()},
                   {"cherry", cherry.to_json()},
                   {"global_pg", global.to_json()},
                   {"global_new_max_ratio", new_constant_ratio},
                   {"min_degree", {{"checked", mindeg_checked},
                                   {"violations", mindeg_failed},
                                   {"regimes", regimes},
                                   {"failures", mindeg_failures}}}};
  return report;
}

SuiteReport identities_suite(const SuiteOptions& options) {
  SuiteReport report;
  report.name = "identities";
  Equalities vertex_sum, edge_sum, cherry_sum, oracle;

  SplitMix64 rng(SplitMix64::split(options.seed, 101));
  for (std::size_t i = 0; i < options.handshake_graphs; ++i) {
    const Graph g = random_instance(rng, 8, 14);
    const std::string name = to_graph6(g);
    for (unsigned k : {5u, 6u, 7u}) {
      if (k > g.order()) continue;
      const CountReport r = count_report(g, k, {true, true, true, options.threads});
      vertex_sum.add(checked_mul(k, r.total), sum(*r.rooted), {{"graph", name}, {"k", k}});
      oracle.add(r.total, count_oracle(g, k).total, {{"graph", name}, {"k", k}});
      for (Vertex v = 0; v < g.order(); ++v) {
        Count es = 0;
        for (Vertex w : g.neighbors(v)) es = checked_add(es, r.edge_rooted->at(Edge{std::min(v, w), std::max(v, w)}));
        Count cs = 0;
        for (const auto& [u, w] : nonadjacent_neighbor_pairs(g, v)) {
          cs = checked_add(cs, r.cherry_rooted->at({u, v, w}));
        }
        const Count twice = checked_mul(2, (*r.rooted)[v]);
        edge_sum.add(twice, es, {{"graph", name}, {"k", k}, {"v", v}});
        cherry_sum.add(twice, cs, {{"graph", name}, {"k", k}, {"v", v}});
      }
    }
  }

  Equalities zykov;
  SplitMix64 srng(SplitMix64::split(options.seed, 102));
  for (std::size_t i = 0; i < options.symmetrisation_instances; ++i) {
    const Graph g = random_instance(srng, 8, 13);
    const unsigned k = 5 + static_cast<unsigned>(srng.below(std::min<std::size_t>(4, g.order() - 4)));
    const auto vm = static_cast<Vertex>(srng.below(g.order()));
    auto vp = static_cast<Vertex>(srng.below(g.order() - 1));
    if (vp >= vm) ++vp;
    const Graph h = symmetrise(g, vm, vp);
    // D(G') + D(v-) + D(v-,v+) = D(G) + D(v+), kept in unsigned arithmetic.
    const Count lhs = checked_add(checked_add(count_fast(h, k), count_rooted(g, k, vm)), count_pair(g, k, vm, vp));
    const Count rhs = checked_add(count_fast(g, k), count_rooted(g, k, vp));
    zykov.add(lhs, rhs, {{"graph", to_graph6(g)}, {"k", k}, {"v_minus", vm}, {"v_plus", vp}});
  }

  // For k = 4 two non-adjacent twins can lie on a common induced C_4.
  const Graph c4 = cycle(4);
  const Graph c4s = symmetrise(c4, 0, 2);
  const Count k4_lhs = count_fast(c4s, 4);
  const Count k4_rhs_plus = checked_add(count_fast(c4, 4), count_rooted(c4, 4, 2));
  const Count k4_rhs_minus = checked_add(count_rooted(c4, 4, 0), count_pair(c4, 4, 0, 2));
  const bool k4_fails = checked_add(k4_lhs, k4_rhs_minus) != k4_rhs_plus;
  nlohmann::json counterexample = {{"graph", to_graph6(c4)},
                                   {"k", 4},
                                   {"v_minus", 0},
                                   {"v_plus", 2},
                                   {"D_after", count_to_json(k4_lhs)},
                                   {"D_before", count_to_json(count_fast(c4, 4))},
                                   {"D_v_minus", count_to_json(count_rooted(c4, 4, 0))},
                                   {"D_v_plus", count_to_json(count_rooted(c4, 4, 2))},
                                   {"D_pair", count_to_json(count_pair(c4, 4, 0, 2))},
                                   {"identity_fails", k4_fails}};

  report.checks = vertex_sum.checked + edge_sum.checked + cherry_sum.checked + oracle.checked + zykov.checked + 1;
  report.failures =
      vertex_sum.failed + edge_sum.failed + cherry_sum.failed + oracle.failed + zykov.failed + (k4_fails ? 0 : 1);
  report.detail = {{"handshake_vertex", vertex_sum.to_json()},
                   {"handshake_edge", edge_sum.to_json()},
                   {"handshake_cherry", cherry_sum.to_json()},
                   {"oracle_total", oracle.to_json()},
                   {"symmetrisation", zykov.to_json()},
                   {"k4_counterexample", counterexample}};
  return report;
}

SuiteReport analytic_suite_report(const SuiteOptions& options) {
  SuiteReport report;
  report.name = "analytic";
  nlohmann::json results = nlohmann::json::array();
  for (const auto& r : analytic_suite(options.threads)) {
    report.checks += r.checks.size();
    for (const auto& c : r.checks) report.failures += c.pass ? 0 : 1;
    results.push_back(to_json(r));
  }
  report.detail = {{"problems", results}};
  return report;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
  if (name == "analytic") return analytic_suite_report(options);
  if (name == "bounds") return bounds_suite(options);
  if (name == "identities") return identities_suite(options);
  if (name == "all") {
    SuiteReport all;
    all.name = "all";
    for (const char* part : {"analytic", "bounds", "identities"}) {
      const SuiteReport r = run_suite(part, options);
      all.checks += r.checks;
      all.failures += r.failures;
      all.detail[part] = to_json(r);
    }
    return all;
  }
  throw std::invalid_argument("unknown suite '" + name + "' (expected analytic, bounds, identities or all)");
}

}  // namespace indcyc
