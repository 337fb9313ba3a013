// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>

#include "indcyc/analytic_verify.hpp"
#include "indcyc/bounds.hpp"
#include "indcyc/constructions.hpp"
#include "indcyc/extremal_search.hpp"
#include "indcyc/induced_count.hpp"
#include "support.hpp"

using namespace indcyc;

namespace {

constexpr double kRelEps = 1e-12;
constexpr double kArgmaxTol = 1e-6;
constexpr double kValueTol = 1e-9;
constexpr double kGridTol = 1e-3;
constexpr double kCriterion1Seconds = 300;
constexpr double kCriterion5Seconds = 60;
constexpr double kCriterion6Seconds = 600;
constexpr double kCriterion9Seconds = 60;
constexpr std::uint64_t kSeed = 20240601;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool within(Count exact, double bound) { return to_double(exact) <= bound * (1 + kRelEps); }

struct Outcome {
  bool pass = true;
  std::string detail;
};

Outcome criterion1() {
  const auto t0 = Clock::now();
  std::uint64_t mismatches = 0, compared = 0;
  for (std::uint64_t mask = 0; mask < (1U << 15); ++mask) {
    const Graph g = testing::graph_from_mask(6, mask);
    for (unsigned k = 4; k <= 6; ++k) {
      ++compared;
      if (count_fast(g, k) != count_oracle(g, k).total) ++mismatches;
    }
  }
  SplitMix64 rng(SplitMix64::split(kSeed, 1));
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 8 + rng.below(9);
    const Graph g = random_graph(n, 0.15 + 0.7 * rng.uniform(), rng.next());
    for (unsigned k = 4; k <= std::min<std::size_t>(n, 8); ++k) {
      ++compared;
      if (count_fast(g, k) != count_oracle(g, k).total) ++mismatches;
    }
  }
  const double s = seconds_since(t0);
  return {mismatches == 0 && s < kCriterion1Seconds,
          std::to_string(compared) + " comparisons, " + std::to_string(mismatches) + " mismatches, " +
              std::to_string(s) + " s"};
}

Outcome criterion2() {
  SplitMix64 rng(SplitMix64::split(kSeed, 2));
  std::uint64_t failed = 0, checked = 0;
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 8 + rng.below(7);
    const Graph g = random_graph(n, 0.2 + 0.6 * rng.uniform(), rng.next());
    for (unsigned k : {5u, 6u, 7u}) {
      if (k > n) continue;
      const CountReport r = count_report(g, k, {true, true, true, 1});
      Count vsum = 0;
      for (Count c : *r.rooted) vsum += c;
      ++checked;
      failed += vsum == Count(k) * r.total ? 0 : 1;
      for (Vertex v = 0; v < n; ++v) {
        Count es = 0, cs = 0;
        for (Vertex w : g.neighbors(v)) es += r.edge_rooted->at({v, w});
        for (const auto& [u, w] : nonadjacent_neighbor_pairs(g, v)) cs += r.cherry_rooted->at({u, v, w});
        checked += 2;
        failed += es == 2 * (*r.rooted)[v] ? 0 : 1;
        failed += cs == 2 * (*r.rooted)[v] ? 0 : 1;
      }
    }
  }
  return {failed == 0, std::to_string(checked) + " identities, " + std::to_string(failed) + " failed"};
}

Outcome criterion3() {
  SplitMix64 rng(SplitMix64::split(kSeed, 3));
  std::uint64_t failed = 0;
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = 8 + rng.below(6);
    const unsigned k = 5 + static_cast<unsigned>(rng.below(4));
    const Graph g = random_graph(n, 0.25 + 0.5 * rng.uniform(), rng.next());
    const Vertex vm = static_cast<Vertex>(rng.below(n));
    Vertex vp = static_cast<Vertex>(rng.below(n - 1));
    if (vp >= vm) ++vp;
    const Graph h = symmetrise(g, vm, vp);
    if (count_fast(h, k) + count_rooted(g, k, vm) + count_pair(g, k, vm, vp) !=
        count_fast(g, k) + count_rooted(g, k, vp)) {
      ++failed;
    }
  }
  const Graph c4 = cycle(4);
  const Count lhs = count_fast(symmetrise(c4, 0, 2), 4);
  const Count rhs = count_fast(c4, 4) - count_rooted(c4, 4, 0) + count_rooted(c4, 4, 2) - count_pair(c4, 4, 0, 2);
  const bool counterexample = lhs != rhs;
  return {failed == 0 && counterexample,
          "500 instances, " + std::to_string(failed) + " failed; k=4 on C4 with (0,2): D(G')=" + to_string(lhs) +
              ", formula=" + to_string(rhs)};
}

Outcome criterion4() {
  std::uint64_t checked = 0, violations = 0;
  auto add = [&](Count exact, double bound) {
    ++checked;
    violations += within(exact, bound) ? 0 : 1;
  };
  for (const auto& [name, g] : test_corpus(kSeed, 100)) {
    const std::size_t n = g.order();
    for (unsigned k = 5; k <= 8 && k <= n; ++k) {
      add(count_fast(g, k), global_pg_bound(n, k));
      const auto rooted = count_rooted_all(g, k);
      for (Vertex v = 0; v < n; ++v) add(rooted[v], vertex_bound(n, k, g.degree(v)));
      for (const auto& [v, w] : g.edges()) add(count_edge_rooted(g, k, v, w), edge_bound_at(g, k, v, w).value);
      if (k < 6) continue;
      for (Vertex v = 0; v < n; ++v) {
        for (const auto& [u, w] : nonadjacent_neighbor_pairs(g, v)) {
          if (u < w) add(count_cherry_rooted(g, k, u, v, w), cherry_bound_at(g, k, u, v, w).value);
        }
      }
    }
  }
  return {violations == 0, std::to_string(checked) + " comparisons, " + std::to_string(violations) + " violations"};
}

Outcome criterion5() {
  const auto t0 = Clock::now();
  bool ok = true;
  std::string detail;
  for (std::size_t t = 1; t <= 3; ++t) {
    const Count c = count_oracle(blow_up(cycle(5), std::vector<std::size_t>(5, t)), 5).total;
    ok = ok && c == checked_pow(t, 5);
    detail += "t=" + std::to_string(t) + ":" + to_string(c) + " ";
  }
  const Count it = count_oracle(iterated_blow_up(cycle(5), 2), 5).total;
  const Rational density = Rational(testing::to_u64(it)) / binomial(25, 5);
  ok = ok && it == 3130 && density > Rational(1, 26);
  const double s = seconds_since(t0);
  ok = ok && s < kCriterion5Seconds;
  return {ok, detail + "depth2=" + to_string(it) + " density=" + density.str() + " " + std::to_string(s) + " s"};
}

Outcome criterion6() {
  const auto t0 = Clock::now();
  bool ok = true;
  std::string detail;
  for (unsigned k : {4u, 5u}) {
    const MonotonicityReport r = monotonicity_report(k, 7);
    ok = ok && r.sequence.monotone();
    detail += "k=" + std::to_string(k) + ":";
    for (const auto& p : r.sequence.points) {
      if (k == 4 && p.density < Rational(3, 8)) ok = false;
      detail += " " + p.density.str();
    }
    detail += "; ";
  }
  const double s = seconds_since(t0);
  ok = ok && s < kCriterion6Seconds;
  return {ok, detail + std::to_string(s) + " s"};
}

Outcome criterion7() {
  bool ok = true;
  std::string detail;
  const double C = 128 * std::numbers::e / 81;

  const OptResult fc = final_constant();
  ok = ok && fc.pass() && std::abs(fc.argmax[0] - 4.0 / 3.0) <= kArgmaxTol &&
       std::abs(fc.max_value - C) <= kValueTol;
  detail += "final argmax=" + std::to_string(fc.argmax[0]);

  const OptResult rc = verify_rangec();
  ok = ok && rc.pass() && std::exp(2.0) / 2 < C && 8 / std::numbers::e < C;

  for (double c : {1.0, 1.2, 1.5, 2.0}) {
    for (unsigned m : {1u, 2u}) {
      const OptResult a = solve_A(c, m);
      const double z = std::min(c, 1.5);
      const double closed = m * z * z * z * std::exp(-2 * z);
      const double gap = a.certified_upper - a.grid_max;
      ok = ok && a.pass() && gap <= kGridTol && std::abs(a.max_value - closed) <= kGridTol &&
           a.certified_upper >= closed - kValueTol;
    }
  }
  for (double c : {2.0, 2.5, 3.0, 4.0}) {
    const OptResult g = maximize_g_c(c);
    ok = ok && g.pass() && g.on_boundary;
  }
  detail += ", rangec, A(c,m) x8, g_c x4";
  return {ok, detail};
}

Outcome criterion8() {
  std::uint64_t checked = 0, failed = 0;
  for (const auto& [name, g] : test_corpus(kSeed, 100)) {
    for (unsigned k = 6; k <= 8 && k <= g.order(); ++k) {
      const MinDegreeCheck m = check_min_degree_vertex(g, k);
      ++checked;
      if (!m.pass || !within(m.rooted, m.ceiling)) ++failed;
    }
  }
  return {failed == 0, std::to_string(checked) + " (graph, k) pairs, " + std::to_string(failed) + " failed"};
}

Outcome criterion9() {
  const Graph g = random_graph(40, 0.25, kSeed);
  const auto t0 = Clock::now();
  const Count c = count_fast(g, 6, 1);
  const double s = seconds_since(t0);
  return {s < kCriterion9Seconds, "D_6=" + to_string(c) + " in " + std::to_string(s) + " s"};
}

}  // namespace

int main() {
  const std::function<Outcome()> criteria[] = {criterion1, criterion2, criterion3, criterion4, criterion5,
                                               criterion6, criterion7, criterion8, criterion9};
  int failures = 0;
  for (int i = 0; i < 9; ++i) {
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += o.pass ? 0 : 1;
    std::printf("criterion %d: %s (%s)\n", i + 1, o.pass ? "PASS" : "FAIL", o.detail.c_str());
    std::fflush(stdout);
  }
  return failures;
}
