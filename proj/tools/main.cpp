#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "commands.hpp"

using namespace indcyc::cli;

namespace {

int emit(Outcome out, RunManifest manifest, const std::string& out_path) {
  attach_manifest(out, std::move(manifest));
  const std::string text = out.report.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot write " + out_path);
    f << text;
  }
  std::cerr << out.summary << (out.ok ? "" : "  [FAIL]") << '\n';
  return out.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact induced cycle counting, bounds, extremal search and analytic checks"};
  app.require_subcommand(1);
  std::string out_path;
  std::uint64_t seed = 1;
  int threads = 1;
  app.add_option("--out", out_path, "write the JSON report here instead of stdout");

  auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", seed, "single source of all randomness")->capture_default_str();
    sub->add_option("--threads", threads, "worker threads (0 = runtime default)")->capture_default_str();
    sub->add_option("--out", out_path, "write the JSON report here instead of stdout");
  };

  CountArgs count;
  auto* c = app.add_subcommand("count", "count induced C_k in a graph");
  c->add_option("--input", count.input, "graph6 or edge-list file");
  c->add_option("--construct", count.construct, "construction spec, e.g. cycle:7 or blowup:C5:3");
  c->add_option("--k", count.k, "cycle length")->required();
  c->add_option("--mode", count.mode, "fast | oracle")->capture_default_str();
  c->add_option("--roots", count.roots, "rooted counts: vertex, edge, cherry, all")->delimiter(',');
  c->add_flag("--check", count.check, "run both modes and require equal reports");
  common(c);

  SearchArgs search;
  auto* s = app.add_subcommand("search", "maximise the induced C_k count over n-vertex graphs");
  s->add_option("--n", search.n, "number of vertices")->required();
  s->add_option("--k", search.k, "cycle length")->required();
  s->add_option("--mode", search.mode, "exhaustive | local")->capture_default_str();
  s->add_flag_callback("--exhaustive", [&] { search.mode = "exhaustive"; }, "same as --mode exhaustive");
  s->add_flag_callback("--local", [&] { search.mode = "local"; }, "same as --mode local");
  s->add_option("--budget", search.budget, "local search steps per chain")->capture_default_str();
  s->add_option("--chains", search.chains, "independent local search chains")->capture_default_str();
  s->add_flag("--extended", search.allow_extended, "allow exhaustive search at n = 8");
  s->add_option("--cache", search.cache, "directory of cached search results");
  common(s);

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "run property suites");
  v->add_option("--suite", verify.suite, "analytic | bounds | identities | all")
      ->check(CLI::IsMember({"analytic", "bounds", "identities", "all"}))
      ->capture_default_str();
  common(v);

  ConstructArgs cons;
  auto* k = app.add_subcommand("construct", "build a graph from a construction spec");
  k->add_option("spec,--construct", cons.spec, "construction spec")->required();
  k->add_flag("--edges", cons.edges, "include the edge list");
  common(k);

  CLI11_PARSE(app, argc, argv);

  RunManifest manifest;
  manifest.started = utc_timestamp();
  manifest.seed = seed;
  try {
    auto* sub = app.get_subcommands().front();
    manifest.command = sub->get_name();
    for (const auto* opt : sub->get_options()) {
      if (opt->count() > 0 && opt->get_name() != "--help") {
        const auto& res = opt->results();
        std::string joined;
        for (std::size_t i = 0; i < res.size(); ++i) joined += (i ? "," : "") + res[i];
        manifest.arguments[opt->get_name()] = joined;
      }
    }
    if (sub == c) {
      count.seed = seed;
      count.threads = threads;
      if (count.input) manifest.input_digests[*count.input] = sha256_file(*count.input);
      return emit(cmd_count(count), manifest, out_path);
    }
    if (sub == s) {
      search.seed = seed;
      search.threads = threads;
      return emit(cmd_search(search), manifest, out_path);
    }
    if (sub == v) {
      verify.seed = seed;
      verify.threads = threads;
      return emit(cmd_verify(verify), manifest, out_path);
    }
    cons.seed = seed;
    return emit(cmd_construct(cons), manifest, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
