#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "indcyc/bounds.hpp"
#include "indcyc/count_int.hpp"
#include "indcyc/graph.hpp"

namespace indcyc {

/// Best-known value of I_{C_k}(n) and the graphs that attain it.
struct SearchResult {
  std::size_t n = 0;
  unsigned k = 0;
  Count best_count = 0;
  std::vector<std::string> witnesses;  // graph6, sorted, at most kMaxWitnesses
  bool exhaustive = false;
  std::uint64_t explored = 0;    // candidates whose count was evaluated
  std::uint64_t enumerated = 0;  // labeled graphs visited, including filtered ones
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> budget;
  std::optional<unsigned> chains;
  double runtime_ms = 0;

  std::string mode_key() const;
};

inline constexpr std::size_t kMaxWitnesses = 10;
inline constexpr std::size_t kExhaustiveCeiling = 7;
inline constexpr std::size_t kExhaustiveExtendedCeiling = 8;

nlohmann::json to_json(const SearchResult& r);
SearchResult search_result_from_json(const nlohmann::json& j);

/// Smallest graph6 string over all relabelings for n <= 9; the plain graph6
/// string otherwise.
std::string canonical_graph6(const Graph& g);

struct ExhaustiveOptions {
  bool allow_extended = false;  // permit n = 8
  int threads = 1;
};

/// I_{C_k}(n) over every labeled graph whose degrees are nondecreasing in the
/// vertex label. Each isomorphism class has such a member, so the maximum is
/// exact.
SearchResult exhaustive_max(std::size_t n, unsigned k, const ExhaustiveOptions& options = {});
SearchResult exhaustive_max_serial(std::size_t n, unsigned k, bool allow_extended = false);

struct LocalSearchOptions {
  std::uint64_t budget = 10000;
  std::uint64_t seed = 1;
  unsigned chains = 1;
  int threads = 1;
  /// Probability that a step tries the symmetrisation move instead of an
  /// edge flip.
  double symmetrise_rate = 0.125;
};

/// Starting graph of chain 0: the iterated blow-up of C_k when n is a power
/// of k, otherwise the balanced blow-up.
Graph local_search_seed_graph(std::size_t n, unsigned k);

/// Hill climbing over edge flips and min/max symmetrisation with sideways
/// moves and seeded restarts. The reported value is a certified lower bound on
/// I_{C_k}(n): every witness is recounted.
SearchResult local_search_max(std::size_t n, unsigned k, const LocalSearchOptions& options = {});

struct MonotonicityReport {
  unsigned k = 0;
  std::size_t n_max = 0;
  std::vector<SearchResult> results;
  DensitySequence sequence;
  std::vector<Count> blowup_counts;  // count of the balanced blow-up of C_k at each n
  bool above_blowup = true;
  bool pass = false;
};

MonotonicityReport monotonicity_report(unsigned k, std::size_t n_max,
                                       const ExhaustiveOptions& options = {});

nlohmann::json to_json(const MonotonicityReport& r);

/// Directory of SearchResult JSON files keyed by (n, k, mode).
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  std::filesystem::path path_for(std::size_t n, unsigned k, const std::string& mode) const;
  std::optional<SearchResult> load(std::size_t n, unsigned k, const std::string& mode) const;
  void store(const SearchResult& r) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace indcyc
