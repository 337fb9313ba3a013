#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace indcyc::cli {

/// Everything needed to reproduce a run. Two manifests that agree outside
/// the timestamps give byte-identical numeric output.
struct RunManifest {
  std::string command;
  std::map<std::string, std::string> arguments;
  std::uint64_t seed = 0;
  std::string version;
  std::string started;
  std::string finished;
  std::map<std::string, std::string> input_digests;  // path -> sha256
};

nlohmann::json to_json(const RunManifest& m);

std::string sha256_file(const std::string& path);
std::string utc_timestamp();

struct CountArgs {
  std::optional<std::string> input;
  std::optional<std::string> construct;
  unsigned k = 0;
  std::string mode = "fast";  // fast | oracle
  std::vector<std::string> roots;  // vertex, edge, cherry
  bool check = false;
  std::uint64_t seed = 1;
  int threads = 1;
};

struct SearchArgs {
  std::size_t n = 0;
  unsigned k = 0;
  std::string mode = "exhaustive";  // exhaustive | local
  std::uint64_t budget = 10000;
  std::uint64_t seed = 1;
  unsigned chains = 1;
  bool allow_extended = false;
  std::optional<std::string> cache;
  int threads = 1;
};

struct VerifyArgs {
  std::string suite = "all";
  std::uint64_t seed = 1;
  int threads = 1;
};

struct ConstructArgs {
  std::string spec;
  std::uint64_t seed = 1;
  bool edges = false;
};

/// Result of a command: the JSON report, whether every assertion held, and a
/// short human-readable summary meant for standard error.
struct Outcome {
  nlohmann::json report;
  bool ok = true;
  std::string summary;
};

Outcome cmd_count(const CountArgs& args);
Outcome cmd_search(const SearchArgs& args);
Outcome cmd_verify(const VerifyArgs& args);
Outcome cmd_construct(const ConstructArgs& args);

/// Fill timestamps and attach the manifest to the report under "manifest".
void attach_manifest(Outcome& out, RunManifest manifest);

}  // namespace indcyc::cli
