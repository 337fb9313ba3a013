#include "indcyc/extremal_search.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <numeric>
#include <set>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "indcyc/constructions.hpp"
#include "indcyc/graph_io.hpp"
#include "indcyc/induced_count.hpp"

namespace indcyc {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

int resolve_threads(int threads) {
#ifdef _OPENMP
  return threads > 0 ? threads : omp_get_max_threads();
#else
  (void)threads;
  return 1;
#endif
}

/// Best value seen so far plus the lexicographically smallest witnesses
/// attaining it.
struct Incumbent {
  Count best = 0;
  bool any = false;
  std::set<std::string> witnesses;

  void offer(Count value, const std::string& g6) {
    if (!any || value > best) {
      best = value;
      any = true;
      witnesses.clear();
    } else if (value < best) {
      return;
    }
    witnesses.insert(g6);
    if (witnesses.size() > kMaxWitnesses) witnesses.erase(std::prev(witnesses.end()));
  }
  /// Offer only needs the graph6 string when the value is competitive.
  bool wants(Count value) const { return !any || value >= best; }

  void merge(const Incumbent& other) {
    if (!other.any) return;
    for (const auto& w : other.witnesses) offer(other.best, w);
  }
};

void check_exhaustive_range(std::size_t n, unsigned k, bool allow_extended) {
  if (k < 4 || n < k) throw std::invalid_argument("exhaustive search needs n >= k >= 4");
  const std::size_t ceiling = allow_extended ? kExhaustiveExtendedCeiling : kExhaustiveCeiling;
  if (n > ceiling) {
    throw std::invalid_argument("exhaustive search supports n <= " + std::to_string(ceiling) +
                                (allow_extended ? "" : " (n = 8 needs the extended override)"));
  }
}

struct PairTable {
  std::vector<std::pair<Vertex, Vertex>> pairs;  // graph6 order: j outer, i < j inner
  explicit PairTable(std::size_t n) {
    for (Vertex j = 1; j < n; ++j) {
      for (Vertex i = 0; i < j; ++i) pairs.emplace_back(i, j);
    }
  }
};

/// Scans labeled graphs whose edge masks lie in [begin, end).
void scan_masks(std::size_t n, unsigned k, const PairTable& table, std::uint64_t begin,
                std::uint64_t end, Incumbent& inc, std::uint64_t& explored) {
  std::vector<unsigned> deg(n);
  for (std::uint64_t mask = begin; mask < end; ++mask) {
    std::fill(deg.begin(), deg.end(), 0U);
    for (std::uint64_t bits = mask; bits != 0; bits &= bits - 1) {
      const auto& [i, j] = table.pairs[static_cast<std::size_t>(std::countr_zero(bits))];
      ++deg[i];
      ++deg[j];
    }
    if (!std::is_sorted(deg.begin(), deg.end())) continue;
    GraphBuilder b(n);
    for (std::uint64_t bits = mask; bits != 0; bits &= bits - 1) {
      const auto& [i, j] = table.pairs[static_cast<std::size_t>(std::countr_zero(bits))];
      b.add_edge(i, j);
    }
    const Graph g = b.build();
    ++explored;
    const Count value = count_fast_serial(g, k);
    if (inc.wants(value)) inc.offer(value, to_graph6(g));
  }
}

void verify_witnesses(SearchResult& r) {
  std::set<std::string> canon;
  for (const auto& w : r.witnesses) {
    const Graph g = from_graph6(w);
    if (count_fast(g, r.k) != r.best_count) throw std::logic_error("witness recount mismatch: " + w);
    if (g.order() <= 12 && count_oracle(g, r.k).total != r.best_count) {
      throw std::logic_error("witness oracle recount mismatch: " + w);
    }
    canon.insert(canonical_graph6(g));
  }
  r.witnesses.assign(canon.begin(), canon.end());
  if (r.witnesses.size() > kMaxWitnesses) r.witnesses.resize(kMaxWitnesses);
}

SearchResult finish_exhaustive(std::size_t n, unsigned k, const Incumbent& inc,
                               std::uint64_t explored, std::uint64_t enumerated,
                               Clock::time_point start) {
  SearchResult r;
  r.n = n;
  r.k = k;
  r.best_count = inc.best;
  r.witnesses.assign(inc.witnesses.begin(), inc.witnesses.end());
  r.exhaustive = true;
  r.explored = explored;
  r.enumerated = enumerated;
  verify_witnesses(r);
  r.runtime_ms = elapsed_ms(start);
  return r;
}

}  // namespace

std::string SearchResult::mode_key() const {
  if (exhaustive) return "exhaustive";
  return "local_seed" + std::to_string(seed.value_or(0)) + "_budget" +
         std::to_string(budget.value_or(0)) + "_chains" + std::to_string(chains.value_or(1));
}

nlohmann::json to_json(const SearchResult& r) {
  nlohmann::json j{{"n", r.n},
                   {"k", r.k},
                   {"best_count", count_to_json(r.best_count)},
                   {"witnesses", r.witnesses},
                   {"exhaustive", r.exhaustive},
                   {"explored", r.explored},
                   {"enumerated", r.enumerated},
                   {"runtime_ms", r.runtime_ms}};
  if (r.seed) j["seed"] = *r.seed;
  if (r.budget) j["budget"] = *r.budget;
  if (r.chains) j["chains"] = *r.chains;
  return j;
}

SearchResult search_result_from_json(const nlohmann::json& j) {
  SearchResult r;
  r.n = j.at("n").get<std::size_t>();
  r.k = j.at("k").get<unsigned>();
  r.best_count = count_from_json(j.at("best_count"));
  r.witnesses = j.at("witnesses").get<std::vector<std::string>>();
  r.exhaustive = j.at("exhaustive").get<bool>();
  r.explored = j.at("explored").get<std::uint64_t>();
  r.enumerated = j.value("enumerated", std::uint64_t{0});
  r.runtime_ms = j.value("runtime_ms", 0.0);
  if (j.contains("seed")) r.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("budget")) r.budget = j["budget"].get<std::uint64_t>();
  if (j.contains("chains")) r.chains = j["chains"].get<unsigned>();
  return r;
}

std::string canonical_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > 9) return to_graph6(g);
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  const auto edges = g.edges();
  do {
    GraphBuilder b(n);
    for (const auto& [u, w] : edges) b.add_edge(perm[u], perm[w]);
    std::string s = to_graph6(b.build());
    if (best.empty() || s < best) best = std::move(s);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

SearchResult exhaustive_max_serial(std::size_t n, unsigned k, bool allow_extended) {
  check_exhaustive_range(n, k, allow_extended);
  const auto start = Clock::now();
  const PairTable table(n);
  const std::uint64_t total = std::uint64_t{1} << table.pairs.size();
  Incumbent inc;
  std::uint64_t explored = 0;
  scan_masks(n, k, table, 0, total, inc, explored);
  return finish_exhaustive(n, k, inc, explored, total, start);
}

SearchResult exhaustive_max(std::size_t n, unsigned k, const ExhaustiveOptions& options) {
  check_exhaustive_range(n, k, options.allow_extended);
  const auto start = Clock::now();
  const PairTable table(n);
  const std::size_t bits = table.pairs.size();
  const std::uint64_t total = std::uint64_t{1} << bits;
  const std::size_t block_bits = std::min<std::size_t>(bits, 10);
  const std::int64_t blocks = std::int64_t{1} << block_bits;
  const std::uint64_t block_size = total >> block_bits;

  const int threads = resolve_threads(options.threads);
  std::vector<Incumbent> local(static_cast<std::size_t>(threads));
  std::vector<std::uint64_t> explored(static_cast<std::size_t>(threads), 0);
#pragma omp parallel num_threads(threads)
  {
#ifdef _OPENMP
    const auto tid = static_cast<std::size_t>(omp_get_thread_num());
#else
    const std::size_t tid = 0;
#endif
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t b = 0; b < blocks; ++b) {
      const auto lo = static_cast<std::uint64_t>(b) * block_size;
      scan_masks(n, k, table, lo, lo + block_size, local[tid], explored[tid]);
    }
  }
  Incumbent merged;
  for (const auto& inc : local) merged.merge(inc);
  return finish_exhaustive(n, k, merged, std::accumulate(explored.begin(), explored.end(), std::uint64_t{0}),
                           total, start);
}

Graph local_search_seed_graph(std::size_t n, unsigned k) {
  if (n < k) throw std::invalid_argument("local search needs n >= k");
  std::size_t power = k;
  unsigned depth = 1;
  while (power < n) {
    power *= k;
    ++depth;
  }
  if (power == n) return iterated_blow_up(cycle(k), depth);
  return balanced_blow_up(cycle(k), n);
}

namespace {

struct ChainOutcome {
  Incumbent inc;
  std::uint64_t explored = 0;
};

ChainOutcome run_chain(std::size_t n, unsigned k, const LocalSearchOptions& opt, unsigned chain) {
  SplitMix64 rng(SplitMix64::split(opt.seed, chain + 1));
  ChainOutcome out;

  Graph current = chain == 0 ? local_search_seed_graph(n, k) : random_graph(n, 0.5, rng.next());
  Count value = count_fast_serial(current, k);
  ++out.explored;
  out.inc.offer(value, to_graph6(current));

  Count since_restart_best = value;
  std::uint64_t stale = 0;
  const std::uint64_t restart_after = std::max<std::uint64_t>(1, opt.budget / 10);

  for (std::uint64_t step = 0; step < opt.budget; ++step) {
    if (stale >= restart_after) {
      current = random_graph(n, 0.5, rng.next());
      value = count_fast_serial(current, k);
      ++out.explored;
      if (out.inc.wants(value)) out.inc.offer(value, to_graph6(current));
      since_restart_best = value;
      stale = 0;
      continue;
    }

    Graph candidate;
    Count candidate_value = 0;
    bool symmetrised = false;
    if (rng.uniform() < opt.symmetrise_rate) {
      const auto rooted = count_rooted_all_serial(current, k);
      const auto lo = std::min_element(rooted.begin(), rooted.end());
      const auto hi = std::max_element(rooted.begin(), rooted.end());
      if (*lo != *hi) {
        candidate = symmetrise(current, static_cast<Vertex>(lo - rooted.begin()),
                               static_cast<Vertex>(hi - rooted.begin()));
        candidate_value = count_fast_serial(candidate, k);
        symmetrised = true;
      }
    }
    if (!symmetrised) {
      const auto u = static_cast<Vertex>(rng.below(n));
      auto w = static_cast<Vertex>(rng.below(n - 1));
      if (w >= u) ++w;
      // Only cycles through both endpoints change.
      const Count before = count_pair(current, k, u, w);
      GraphBuilder b(current);
      b.toggle_edge(u, w);
      candidate = b.build();
      const Count after = count_pair(candidate, k, u, w);
      candidate_value = value - before + after;
    }
    ++out.explored;

    const bool accept =
        candidate_value > value || (candidate_value == value && rng.uniform() < 0.5);
    if (accept) {
      current = std::move(candidate);
      value = candidate_value;
      if (out.inc.wants(value)) out.inc.offer(value, to_graph6(current));
    }
    if (value > since_restart_best) {
      since_restart_best = value;
      stale = 0;
    } else {
      ++stale;
    }
  }
  return out;
}

}  // namespace

SearchResult local_search_max(std::size_t n, unsigned k, const LocalSearchOptions& options) {
  if (k < 4 || n < k) throw std::invalid_argument("local search needs n >= k >= 4");
  if (options.chains == 0) throw std::invalid_argument("local search needs at least one chain");
  const auto start = Clock::now();
  std::vector<ChainOutcome> outcomes(options.chains);
  const int chains = static_cast<int>(options.chains);
#pragma omp parallel for schedule(dynamic, 1) num_threads(resolve_threads(options.threads))
  for (int c = 0; c < chains; ++c) {
    outcomes[static_cast<std::size_t>(c)] = run_chain(n, k, options, static_cast<unsigned>(c));
  }

  Incumbent merged;
  std::uint64_t explored = 0;
  for (const auto& o : outcomes) {
    merged.merge(o.inc);
    explored += o.explored;
  }
  SearchResult r;
  r.n = n;
  r.k = k;
  r.best_count = merged.best;
  r.witnesses.assign(merged.witnesses.begin(), merged.witnesses.end());
  r.exhaustive = false;
  r.explored = explored;
  r.enumerated = explored;
  r.seed = options.seed;
  r.budget = options.budget;
  r.chains = options.chains;
  verify_witnesses(r);
  r.runtime_ms = elapsed_ms(start);
  return r;
}

MonotonicityReport monotonicity_report(unsigned k, std::size_t n_max,
                                       const ExhaustiveOptions& options) {
  if (n_max < k) throw std::invalid_argument("monotonicity report needs n_max >= k");
  MonotonicityReport rep;
  rep.k = k;
  rep.n_max = n_max;
  std::map<std::size_t, Count> counts;
  for (std::size_t n = k; n <= n_max; ++n) {
    rep.results.push_back(exhaustive_max(n, k, options));
    counts[n] = rep.results.back().best_count;
    const Count blowup = count_fast(balanced_blow_up(cycle(k), n), k);
    rep.blowup_counts.push_back(blowup);
    if (blowup > counts[n]) rep.above_blowup = false;
  }
  rep.sequence = density_sequence(k, counts);
  rep.pass = rep.sequence.monotone() && rep.above_blowup && !rep.sequence.points.empty() &&
             rep.sequence.points.front().density == 1;
  return rep;
}

nlohmann::json to_json(const MonotonicityReport& r) {
  nlohmann::json j;
  j["k"] = r.k;
  j["n_max"] = r.n_max;
  auto& res = j["results"] = nlohmann::json::array();
  for (const auto& s : r.results) res.push_back(to_json(s));
  j["density_sequence"] = to_json(r.sequence);
  auto& bl = j["blowup_counts"] = nlohmann::json::array();
  for (Count c : r.blowup_counts) bl.push_back(count_to_json(c));
  j["above_blowup"] = r.above_blowup;
  j["pass"] = r.pass;
  return j;
}

std::filesystem::path ResultCache::path_for(std::size_t n, unsigned k, const std::string& mode) const {
  return dir_ / ("n" + std::to_string(n) + "_k" + std::to_string(k) + "_" + mode + ".json");
}

std::optional<SearchResult> ResultCache::load(std::size_t n, unsigned k, const std::string& mode) const {
  const auto p = path_for(n, k, mode);
  std::ifstream in(p);
  if (!in) return std::nullopt;
  nlohmann::json j;
  try {
    in >> j;
    return search_result_from_json(j);
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;  // unreadable cache entries are recomputed
  }
}

void ResultCache::store(const SearchResult& r) const {
  std::filesystem::create_directories(dir_);
  const auto p = path_for(r.n, r.k, r.mode_key());
  const auto tmp = p.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write " + tmp);
    out << to_json(r).dump(2) << '\n';
  }
  std::filesystem::rename(tmp, p);
}

}  // namespace indcyc
