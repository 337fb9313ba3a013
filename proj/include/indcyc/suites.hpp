#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

namespace indcyc {

/// Outcome of one verification suite. `detail` lists every check with its
/// values; `pass()` is true iff no check failed.
struct SuiteReport {
  std::string name;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  nlohmann::json detail = nlohmann::json::object();

  bool pass() const { return failures == 0; }
};

nlohmann::json to_json(const SuiteReport& r);

struct SuiteOptions {
  std::uint64_t seed = 1;
  int threads = 1;
  std::size_t corpus_random = 100;            // random graphs in the bounds corpus
  std::size_t handshake_graphs = 100;         // random graphs for the handshake identities
  std::size_t symmetrisation_instances = 500;
};

/// Vertex, edge, cherry and global bounds against exact counts over the test
/// corpus for 4 <= k <= 8, plus the minimum-degree case split for k in {6,7,8}.
SuiteReport bounds_suite(const SuiteOptions& options = {});

/// Handshake identities for k in {5,6,7}, the symmetrisation identity for
/// k >= 5 and the k = 4 counterexample.
SuiteReport identities_suite(const SuiteOptions& options = {});

SuiteReport analytic_suite_report(const SuiteOptions& options = {});

/// Names accepted by run_suite: analytic, bounds, identities, all.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options = {});

}  // namespace indcyc
