#include "commands.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "indcyc/bounds.hpp"
#include "indcyc/constructions.hpp"
#include "indcyc/extremal_search.hpp"
#include "indcyc/graph_io.hpp"
#include "indcyc/induced_count.hpp"
#include "indcyc/suites.hpp"

#ifndef INDCYC_VERSION
#define INDCYC_VERSION "unknown"
#endif

namespace indcyc::cli {
namespace {

nlohmann::json graph_summary(const Graph& g) {
  return {{"n", g.order()}, {"m", g.size()}, {"graph6", to_graph6(g)}};
}

Graph resolve_graph(const CountArgs& a) {
  if (a.input && a.construct) throw std::invalid_argument("give either --input or --construct, not both");
  if (a.input) return load_graph(*a.input);
  if (a.construct) return construct(*a.construct, a.seed);
  throw std::invalid_argument("count needs --input or --construct");
}

bool wants(const std::vector<std::string>& roots, const std::string& what) {
  return std::find(roots.begin(), roots.end(), what) != roots.end() ||
         std::find(roots.begin(), roots.end(), "all") != roots.end();
}

/// The same report built from subset enumeration only.
CountReport oracle_report(const Graph& g, unsigned k, const CountOptions& o) {
  CountReport r = count_oracle(g, k);
  if (o.rooted) {
    std::vector<Count> rooted(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
      const Vertex req[] = {v};
      rooted[v] = count_oracle_containing(g, k, req);
    }
    r.rooted = std::move(rooted);
  }
  if (o.edge_rooted) {
    std::map<Edge, Count> m;
    for (const auto& e : g.edges()) {
      const Vertex req[] = {e.first, e.second};
      const Count c = count_oracle_containing(g, k, req);
      m[e] = c;
      m[{e.second, e.first}] = c;
    }
    r.edge_rooted = std::move(m);
  }
  if (o.cherry_rooted) {
    std::map<std::tuple<Vertex, Vertex, Vertex>, Count> m;
    for (Vertex v = 0; v < g.order(); ++v) {
      for (const auto& [u, w] : nonadjacent_neighbor_pairs(g, v)) {
        const Vertex req[] = {u, v, w};
        m[{u, v, w}] = count_oracle_containing(g, k, req);
      }
    }
    r.cherry_rooted = std::move(m);
  }
  return r;
}

}  // namespace

nlohmann::json to_json(const RunManifest& m) {
  return {{"command", m.command},     {"arguments", m.arguments}, {"seed", m.seed},
          {"version", m.version},     {"started", m.started},     {"finished", m.finished},
          {"input_digests", m.input_digests}};
}

std::string sha256_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  if (!ctx || EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1) {
    EVP_MD_CTX_free(ctx);
    throw std::runtime_error("sha256 unavailable");
  }
  char buf[1 << 14];
  while (in.read(buf, sizeof buf) || in.gcount() > 0) {
    EVP_DigestUpdate(ctx, buf, static_cast<std::size_t>(in.gcount()));
  }
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx, md, &len);
  EVP_MD_CTX_free(ctx);
  std::ostringstream hex;
  for (unsigned i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return hex.str();
}

std::string utc_timestamp() {
  const std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void attach_manifest(Outcome& out, RunManifest manifest) {
  manifest.version = INDCYC_VERSION;
  if (manifest.started.empty()) manifest.started = utc_timestamp();
  manifest.finished = utc_timestamp();
  out.report["manifest"] = to_json(manifest);
}

Outcome cmd_count(const CountArgs& a) {
  if (a.mode != "fast" && a.mode != "oracle") throw std::invalid_argument("--mode must be fast or oracle");
  const Graph g = resolve_graph(a);
  CountOptions opts;
  opts.rooted = wants(a.roots, "vertex");
  opts.edge_rooted = wants(a.roots, "edge");
  opts.cherry_rooted = wants(a.roots, "cherry");
  opts.threads = a.threads;

  const CountReport report = a.mode == "fast" ? count_report(g, a.k, opts) : oracle_report(g, a.k, opts);
  Outcome out;
  out.report["graph"] = graph_summary(g);
  out.report["mode"] = a.mode;
  out.report["count"] = to_json(report);
  std::ostringstream summary;
  summary << "D_" << a.k << " = " << to_string(report.total) << " (n=" << g.order() << ", mode=" << a.mode << ")";
  if (a.check) {
    const CountReport other = a.mode == "fast" ? oracle_report(g, a.k, opts) : count_report(g, a.k, opts);
    const bool agree = to_json(other) == to_json(report);
    out.report["check"] = {{"modes", {"fast", "oracle"}}, {"agree", agree}};
    out.ok = agree;
    summary << (agree ? "; fast and oracle agree" : "; fast and oracle DISAGREE");
  }
  out.summary = summary.str();
  return out;
}

Outcome cmd_search(const SearchArgs& a) {
  if (a.mode != "exhaustive" && a.mode != "local") throw std::invalid_argument("--mode must be exhaustive or local");
  std::optional<ResultCache> cache;
  if (a.cache) cache.emplace(*a.cache);

  SearchResult result;
  bool cached = false;
  if (a.mode == "exhaustive") {
    if (cache) {
      if (auto hit = cache->load(a.n, a.k, "exhaustive")) {
        result = *hit;
        cached = true;
      }
    }
    if (!cached) result = exhaustive_max(a.n, a.k, {a.allow_extended, a.threads});
  } else {
    LocalSearchOptions o;
    o.budget = a.budget;
    o.seed = a.seed;
    o.chains = a.chains;
    o.threads = a.threads;
    SearchResult probe;
    probe.exhaustive = false;
    probe.seed = a.seed;
    probe.budget = a.budget;
    probe.chains = a.chains;
    if (cache) {
      if (auto hit = cache->load(a.n, a.k, probe.mode_key())) {
        result = *hit;
        cached = true;
      }
    }
    if (!cached) result = local_search_max(a.n, a.k, o);
  }
  if (cache && !cached) cache->store(result);

  Outcome out;
  out.report["search"] = to_json(result);
  out.report["cached"] = cached;
  if (a.n >= a.k) {
    const Rational density = Rational(boost::multiprecision::cpp_int(to_string(result.best_count))) /
                             binomial(a.n, a.k);
    out.report["density"] = density.str();
    out.report["density_value"] = static_cast<double>(density);
  }
  std::ostringstream s;
  s << (result.exhaustive ? "I" : "lower bound on I") << "_C" << a.k << "(" << a.n
    << ") = " << to_string(result.best_count) << ", " << result.witnesses.size() << " witness(es)";
  out.summary = s.str();
  return out;
}

Outcome cmd_verify(const VerifyArgs& a) {
  SuiteOptions o;
  o.seed = a.seed;
  o.threads = a.threads;
  const SuiteReport r = run_suite(a.suite, o);
  Outcome out;
  out.report = to_json(r);
  out.ok = r.pass();
  std::ostringstream s;
  s << "suite " << r.name << ": " << r.checks << " checks, " << r.failures << " failure(s)";
  out.summary = s.str();
  return out;
}

Outcome cmd_construct(const ConstructArgs& a) {
  const Graph g = construct(a.spec, a.seed);
  Outcome out;
  out.report["spec"] = a.spec;
  out.report["graph"] = graph_summary(g);
  if (a.edges) out.report["edges"] = g.edges();
  out.summary = a.spec + ": n=" + std::to_string(g.order()) + ", m=" + std::to_string(g.size());
  return out;
}

}  // namespace indcyc::cli
