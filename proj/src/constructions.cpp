#include "indcyc/constructions.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace indcyc {

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("below(0)");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % bound;
}

std::uint64_t SplitMix64::split(std::uint64_t seed, std::uint64_t stream) {
  SplitMix64 a(seed ^ (0xD1B54A32D192ED03ULL * (stream + 1)));
  return a.next();
}

Graph cycle(std::size_t k) {
  if (k < 3) throw std::invalid_argument("cycle needs k >= 3");
  GraphBuilder b(k);
  for (Vertex i = 0; i < k; ++i) b.add_edge(i, static_cast<Vertex>((i + 1) % k));
  return b.build();
}

Graph complete_graph(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex w = u + 1; w < n; ++w) b.add_edge(u, w);
  }
  return b.build();
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  if (a == 0 || b == 0) throw std::invalid_argument("complete bipartite needs a, b >= 1");
  GraphBuilder g(a + b);
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex w = 0; w < b; ++w) g.add_edge(u, static_cast<Vertex>(a + w));
  }
  return g.build();
}

Graph petersen() {
  // Kneser graph K(5,2): 2-subsets of {0..4} in lexicographic order, adjacent iff disjoint.
  std::vector<std::pair<int, int>> sets;
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) sets.emplace_back(i, j);
  }
  GraphBuilder b(sets.size());
  for (Vertex u = 0; u < sets.size(); ++u) {
    for (Vertex w = u + 1; w < sets.size(); ++w) {
      const auto [a, c] = sets[u];
      const auto [d, e] = sets[w];
      if (a != d && a != e && c != d && c != e) b.add_edge(u, w);
    }
  }
  return b.build();
}

std::vector<Vertex> blow_up_parts(const std::vector<std::size_t>& part_sizes) {
  std::vector<Vertex> part;
  for (Vertex p = 0; p < part_sizes.size(); ++p) part.insert(part.end(), part_sizes[p], p);
  return part;
}

Graph blow_up(const Graph& base, const std::vector<std::size_t>& part_sizes) {
  if (part_sizes.size() != base.order()) {
    throw std::invalid_argument("blow-up needs one part size per base vertex");
  }
  for (std::size_t s : part_sizes) {
    if (s == 0) throw std::invalid_argument("blow-up part sizes must be positive");
  }
  const auto part = blow_up_parts(part_sizes);
  GraphBuilder b(part.size());
  for (Vertex u = 0; u < part.size(); ++u) {
    for (Vertex w = u + 1; w < part.size(); ++w) {
      if (part[u] != part[w] && base.adjacent(part[u], part[w])) b.add_edge(u, w);
    }
  }
  return b.build();
}

std::vector<std::size_t> balanced_part_sizes(std::size_t n, std::size_t parts) {
  if (parts == 0) throw std::invalid_argument("balanced split needs at least one part");
  std::vector<std::size_t> sizes(parts, n / parts);
  for (std::size_t i = 0; i < n % parts; ++i) ++sizes[i];
  return sizes;
}

Graph balanced_blow_up(const Graph& base, std::size_t n) {
  if (n < base.order()) throw std::invalid_argument("balanced blow-up needs n >= |base|");
  return blow_up(base, balanced_part_sizes(n, base.order()));
}

Graph iterated_blow_up(const Graph& base, unsigned depth) {
  if (depth < 1) throw std::invalid_argument("iterated blow-up needs depth >= 1");
  if (depth == 1) return base;
  const Graph inner = iterated_blow_up(base, depth - 1);
  const std::size_t t = inner.order();
  const Graph outer = blow_up(base, std::vector<std::size_t>(base.order(), t));
  GraphBuilder b(outer);
  for (Vertex p = 0; p < base.order(); ++p) {
    const Vertex offset = p * static_cast<Vertex>(t);
    for (const auto& [u, w] : inner.edges()) b.add_edge(offset + u, offset + w);
  }
  return b.build();
}

Graph build(const BlowUpSpec& spec) {
  if (spec.depth == 1) return blow_up(spec.base, spec.part_sizes);
  for (std::size_t s : spec.part_sizes) {
    if (s != 1) throw std::invalid_argument("iterated blow-ups are balanced; leave part_sizes at 1");
  }
  return iterated_blow_up(spec.base, spec.depth);
}

Count iterated_blow_up_count(unsigned k, unsigned depth) {
  if (depth < 1) throw std::invalid_argument("iterated blow-up needs depth >= 1");
  if (k < 5) throw std::invalid_argument("the blow-up recursion holds for k >= 5");
  Count n = 1;
  Count part = 1;  // k^{m-1}
  for (unsigned m = 2; m <= depth; ++m) {
    part = checked_mul(part, k);
    n = checked_add(checked_pow(part, k), checked_mul(k, n));
  }
  return n;
}

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must lie in [0,1]");
  SplitMix64 rng(seed);
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex w = u + 1; w < n; ++w) {
      if (rng.uniform() < p) b.add_edge(u, w);
    }
  }
  return b.build();
}

std::vector<NamedGraph> test_corpus(std::uint64_t seed, std::size_t random_count) {
  std::vector<NamedGraph> out;
  for (std::size_t k : {5, 6, 7, 8, 9}) out.push_back({"cycle:" + std::to_string(k), cycle(k)});
  out.push_back({"kbipartite:3,3", complete_bipartite(3, 3)});
  out.push_back({"kbipartite:4,4", complete_bipartite(4, 4)});
  out.push_back({"kbipartite:3,5", complete_bipartite(3, 5)});
  out.push_back({"petersen", petersen()});
  out.push_back({"blowup:C5:2", blow_up(cycle(5), std::vector<std::size_t>(5, 2))});
  out.push_back({"blowup:C5:3", blow_up(cycle(5), std::vector<std::size_t>(5, 3))});
  out.push_back({"blowup:C6:2", blow_up(cycle(6), std::vector<std::size_t>(6, 2))});
  out.push_back({"blowup:C7:2", blow_up(cycle(7), std::vector<std::size_t>(7, 2))});
  out.push_back({"blowup:C8:2", blow_up(cycle(8), std::vector<std::size_t>(8, 2))});
  out.push_back({"balanced-blowup:C6:15", balanced_blow_up(cycle(6), 15)});
  out.push_back({"balanced-blowup:C7:16", balanced_blow_up(cycle(7), 16)});
  out.push_back({"complement:C8", complement(cycle(8))});
  out.push_back({"complement:petersen", complement(petersen())});

  SplitMix64 meta(SplitMix64::split(seed, 0));
  constexpr double kDensities[] = {0.15, 0.25, 0.35, 0.5, 0.65, 0.8};
  for (std::size_t i = 0; i < random_count; ++i) {
    const std::size_t n = 8 + meta.below(9);
    const double p = kDensities[meta.below(std::size(kDensities))];
    const std::uint64_t s = SplitMix64::split(seed, i + 1);
    std::ostringstream name;
    name << "random:" << n << ',' << p << ',' << s;
    out.push_back({name.str(), random_graph(n, p, s)});
  }
  return out;
}

namespace {

std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) parts.push_back(cur);
  return parts;
}

std::size_t to_size(const std::string& s, const std::string& what) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != s.size() || s.empty()) throw std::invalid_argument("bad " + what + ": '" + s + "'");
  return static_cast<std::size_t>(v);
}

double to_probability(const std::string& s) {
  const auto slash = s.find('/');
  if (slash != std::string::npos) {
    const double num = static_cast<double>(to_size(s.substr(0, slash), "probability"));
    const double den = static_cast<double>(to_size(s.substr(slash + 1), "probability"));
    if (den == 0) throw std::invalid_argument("probability with zero denominator");
    return num / den;
  }
  std::size_t pos = 0;
  double v = 0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != s.size() || s.empty()) throw std::invalid_argument("bad probability: '" + s + "'");
  return v;
}

std::size_t cycle_base(const std::string& s) {
  if (s.size() < 2 || (s[0] != 'C' && s[0] != 'c')) {
    throw std::invalid_argument("expected a cycle base like C5, got '" + s + "'");
  }
  return to_size(s.substr(1), "cycle length");
}

}  // namespace

Graph construct(const std::string& spec, std::uint64_t seed) {
  const auto fields = split_on(spec, ':');
  if (fields.empty()) throw std::invalid_argument("empty construction spec");
  const std::string& kind = fields[0];
  auto need = [&](std::size_t count) {
    if (fields.size() != count) throw std::invalid_argument("malformed construction spec '" + spec + "'");
  };
  if (kind == "cycle") {
    need(2);
    return cycle(to_size(fields[1], "cycle length"));
  }
  if (kind == "kbipartite") {
    need(2);
    const auto ab = split_on(fields[1], ',');
    if (ab.size() != 2) throw std::invalid_argument("kbipartite expects A,B");
    return complete_bipartite(to_size(ab[0], "part size"), to_size(ab[1], "part size"));
  }
  if (kind == "blowup") {
    need(3);
    const std::size_t k = cycle_base(fields[1]);
    return blow_up(cycle(k), std::vector<std::size_t>(k, to_size(fields[2], "part size")));
  }
  if (kind == "iterated-blowup") {
    need(3);
    const std::string& d = fields[2];
    if (d.rfind("depth=", 0) != 0) throw std::invalid_argument("iterated-blowup expects depth=M");
    return iterated_blow_up(cycle(cycle_base(fields[1])),
                            static_cast<unsigned>(to_size(d.substr(6), "depth")));
  }
  if (kind == "random") {
    need(2);
    const auto args = split_on(fields[1], ',');
    if (args.size() != 2 && args.size() != 3) throw std::invalid_argument("random expects N,P[,SEED]");
    const std::uint64_t s = args.size() == 3 ? to_size(args[2], "seed") : seed;
    return random_graph(to_size(args[0], "vertex count"), to_probability(args[1]), s);
  }
  if (kind == "petersen") {
    need(1);
    return petersen();
  }
  throw std::invalid_argument("unknown construction '" + kind + "'");
}

}  // namespace indcyc
