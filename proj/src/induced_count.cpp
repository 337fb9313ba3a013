#include "indcyc/induced_count.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace indcyc {

namespace {

void check_fast_k(const Graph& g, unsigned k) {
  if (k < 4 || k > g.order()) {
    throw std::invalid_argument("path-extension counting needs 4 <= k <= n (k=" + std::to_string(k) +
                                ", n=" + std::to_string(g.order()) + ")");
  }
}

void check_vertex(const Graph& g, Vertex v) {
  if (v >= g.order()) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
}

inline bool test_bit(std::span<const Word> bits, Vertex v) {
  return (bits[v / kWordBits] >> (v % kWordBits)) & 1U;
}

struct NoObserver {};

struct Observers {
  const TraceObserver& on_extend;
  const CycleObserver& on_cycle;
};

/// Depth-first canonical path extension. Level d holds two forbidden sets for
/// the step that picks v_{d+1}:
///   mid[d] = blocked | N[v_0] | ... | N[v_{d-1}]   (interior extension)
///   fin[d] = blocked | {v_0} | N[v_1] | ... | N[v_{d-1}]   (closing step)
/// where `blocked` holds the labels the rooting convention excludes.
class PathWalker {
 public:
  PathWalker(const Graph& g, unsigned k)
      : g_(g), k_(k), words_(g.words()), mid_(k * words_), fin_(k * words_), cand_(k * words_),
        path_(k) {}

  template <class Obs>
  Count run(const CycleQuery& q, Obs& obs) {
    const Vertex root = q.root;
    check_vertex(g_, root);
    query_ = &q;
    path_[0] = root;

    Word* blocked0 = mid_.data();
    std::fill(blocked0, blocked0 + words_, Word{0});
    if (q.root_is_minimum) {
      for (Vertex v = 0; v <= root; ++v) blocked0[v / kWordBits] |= Word{1} << (v % kWordBits);
    } else {
      blocked0[root / kWordBits] |= Word{1} << (root % kWordBits);
    }

    const auto root_row = g_.row(root);
    Word* fin1 = fin_.data() + words_;
    Word* mid1 = mid_.data() + words_;
    for (std::size_t i = 0; i < words_; ++i) {
      fin1[i] = blocked0[i];
      mid1[i] = blocked0[i] | root_row[i];
    }
    mid1[root / kWordBits] |= Word{1} << (root % kWordBits);

    Count total = 0;
    auto try_first = [&](Vertex v1) {
      path_[1] = v1;
      total += extend<Obs>(1, obs);
    };
    if (q.first) {
      const Vertex v1 = *q.first;
      check_vertex(g_, v1);
      if (g_.adjacent(root, v1) && !test_bit({blocked0, words_}, v1)) try_first(v1);
    } else {
      for (std::size_t i = 0; i < words_; ++i) {
        for (Word bits = root_row[i] & ~blocked0[i]; bits != 0; bits &= bits - 1) {
          try_first(static_cast<Vertex>(i * kWordBits + std::countr_zero(bits)));
        }
      }
    }
    return total;
  }

 private:
  bool on_path(Vertex x, unsigned upto) const {
    for (unsigned i = 0; i <= upto; ++i) {
      if (path_[i] == x) return true;
    }
    return false;
  }

  template <class Obs>
  Count extend(unsigned d, Obs& obs) {
    const Vertex tip = path_[d];
    const auto tip_row = g_.row(tip);
    Word* cand = cand_.data() + d * words_;

    if (d + 2 == k_) {
      const auto root_row = g_.row(path_[0]);
      const Word* fin = fin_.data() + d * words_;
      for (std::size_t i = 0; i < words_; ++i) cand[i] = tip_row[i] & root_row[i] & ~fin[i];
      if (query_->break_direction) {
        // keep only labels greater than v1
        const Vertex v1 = path_[1];
        const std::size_t wi = v1 / kWordBits;
        for (std::size_t i = 0; i < wi; ++i) cand[i] = 0;
        const unsigned sh = v1 % kWordBits;
        cand[wi] &= (sh == kWordBits - 1) ? Word{0} : (~Word{0} << (sh + 1));
      }
      auto restrict_to = [&](Vertex only) {
        const bool keep = test_bit({cand, words_}, only);
        std::fill(cand, cand + words_, Word{0});
        if (keep) cand[only / kWordBits] |= Word{1} << (only % kWordBits);
      };
      if (query_->last) restrict_to(*query_->last);
      if (query_->must_contain && !on_path(*query_->must_contain, d)) restrict_to(*query_->must_contain);

      if constexpr (std::is_same_v<Obs, NoObserver>) {
        Count c = 0;
        for (std::size_t i = 0; i < words_; ++i) c += std::popcount(cand[i]);
        return c;
      } else {
        Count c = 0;
        for (std::size_t i = 0; i < words_; ++i) {
          for (Word bits = cand[i]; bits != 0; bits &= bits - 1) {
            const auto x = static_cast<Vertex>(i * kWordBits + std::countr_zero(bits));
            obs.on_extend(ExclusionTrace{path_[0], {path_.data(), d + 1}, {fin, words_}}, x);
            path_[d + 1] = x;
            obs.on_cycle(std::span<const Vertex>(path_.data(), k_));
            ++c;
          }
        }
        return c;
      }
    }

    const Word* mid = mid_.data() + d * words_;
    const Word* fin = fin_.data() + d * words_;
    Word* mid_next = mid_.data() + (d + 1) * words_;
    Word* fin_next = fin_.data() + (d + 1) * words_;
    for (std::size_t i = 0; i < words_; ++i) cand[i] = tip_row[i] & ~mid[i];

    // The sets for level d+1 only depend on v_d, so build them once.
    const Vertex prev = path_[d];
    const auto prev_row = g_.row(prev);
    for (std::size_t i = 0; i < words_; ++i) {
      mid_next[i] = mid[i] | prev_row[i];
      fin_next[i] = fin[i] | prev_row[i];
    }
    mid_next[prev / kWordBits] |= Word{1} << (prev % kWordBits);
    fin_next[prev / kWordBits] |= Word{1} << (prev % kWordBits);

    Count total = 0;
    for (std::size_t i = 0; i < words_; ++i) {
      for (Word bits = cand[i]; bits != 0; bits &= bits - 1) {
        const auto x = static_cast<Vertex>(i * kWordBits + std::countr_zero(bits));
        if constexpr (!std::is_same_v<Obs, NoObserver>) {
          obs.on_extend(ExclusionTrace{path_[0], {path_.data(), d + 1}, {mid, words_}}, x);
        }
        path_[d + 1] = x;
        total += extend<Obs>(d + 1, obs);
      }
    }
    return total;
  }

  const Graph& g_;
  unsigned k_;
  std::size_t words_;
  std::vector<Word> mid_;
  std::vector<Word> fin_;
  std::vector<Word> cand_;
  std::vector<Vertex> path_;
  const CycleQuery* query_ = nullptr;
};

int resolve_threads(int threads) {
#ifdef _OPENMP
  return threads > 0 ? threads : omp_get_max_threads();
#else
  (void)threads;
  return 1;
#endif
}

Count sum_checked(const std::vector<Count>& parts) {
  Count total = 0;
  for (Count c : parts) total = checked_add(total, c);
  return total;
}

}  // namespace

nlohmann::json to_json(const CountReport& r) {
  nlohmann::json j;
  j["k"] = r.k;
  j["total"] = count_to_json(r.total);
  if (r.rooted) {
    auto& arr = j["rooted"] = nlohmann::json::array();
    for (Count c : *r.rooted) arr.push_back(count_to_json(c));
  }
  if (r.edge_rooted) {
    auto& arr = j["edge_rooted"] = nlohmann::json::array();
    for (const auto& [e, c] : *r.edge_rooted) arr.push_back({e.first, e.second, count_to_json(c)});
  }
  if (r.cherry_rooted) {
    auto& arr = j["cherry_rooted"] = nlohmann::json::array();
    for (const auto& [t, c] : *r.cherry_rooted) {
      arr.push_back({std::get<0>(t), std::get<1>(t), std::get<2>(t), count_to_json(c)});
    }
  }
  return j;
}

Count count_query(const Graph& g, unsigned k, const CycleQuery& query) {
  check_fast_k(g, k);
  PathWalker walker(g, k);
  NoObserver none;
  return walker.run(query, none);
}

Count walk_query(const Graph& g, unsigned k, const CycleQuery& query, const TraceObserver& on_extend,
                 const CycleObserver& on_cycle) {
  check_fast_k(g, k);
  PathWalker walker(g, k);
  Observers obs{on_extend, on_cycle};
  return walker.run(query, obs);
}

bool is_induced_cycle(const Graph& g, std::span<const Vertex> s) {
  if (s.size() < 3) throw std::invalid_argument("an induced cycle needs at least 3 vertices");
  for (std::size_t i = 0; i < s.size(); ++i) {
    check_vertex(g, s[i]);
    for (std::size_t j = 0; j < i; ++j) {
      if (s[i] == s[j]) throw std::invalid_argument("vertex set contains a repeated vertex");
    }
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    unsigned inside = 0;
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (i != j && g.adjacent(s[i], s[j])) ++inside;
    }
    if (inside != 2) return false;
  }
  // 2-regular: connected iff walking from s[0] visits all of s.
  std::size_t prev = s.size();
  std::size_t cur = 0;
  for (std::size_t steps = 1;; ++steps) {
    std::size_t next = s.size();
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (j != cur && j != prev && g.adjacent(s[cur], s[j])) {
        next = j;
        break;
      }
    }
    if (next == 0) return steps == s.size();
    if (next == s.size()) return false;
    prev = cur;
    cur = next;
  }
}

namespace {

/// Calls visit(subset) for every k-subset of `pool`, in lexicographic order.
template <class Visit>
void for_each_subset(const std::vector<Vertex>& pool, std::size_t pick, std::vector<Vertex>& chosen,
                     Visit&& visit) {
  const std::size_t base = chosen.size();
  if (pick == 0) {
    visit(chosen);
    return;
  }
  if (pool.size() < pick) return;
  std::vector<std::size_t> idx(pick);
  std::iota(idx.begin(), idx.end(), 0);
  chosen.resize(base + pick);
  while (true) {
    for (std::size_t i = 0; i < pick; ++i) chosen[base + i] = pool[idx[i]];
    visit(chosen);
    std::size_t i = pick;
    while (i > 0 && idx[i - 1] == pool.size() - pick + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < pick; ++j) idx[j] = idx[j - 1] + 1;
  }
  chosen.resize(base);
}

}  // namespace

CountReport count_oracle(const Graph& g, unsigned k) {
  if (k < 3 || k > g.order()) {
    throw std::invalid_argument("oracle counting needs 3 <= k <= n (k=" + std::to_string(k) +
                                ", n=" + std::to_string(g.order()) + ")");
  }
  CountReport r;
  r.k = k;
  r.total = count_oracle_containing(g, k, {});
  return r;
}

Count count_oracle_containing(const Graph& g, unsigned k, std::span<const Vertex> required) {
  if (k < 3 || k > g.order()) throw std::invalid_argument("oracle counting needs 3 <= k <= n");
  if (required.size() > k) return 0;
  std::vector<Vertex> chosen(required.begin(), required.end());
  for (Vertex v : chosen) check_vertex(g, v);
  std::vector<Vertex> pool;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (std::find(chosen.begin(), chosen.end(), v) == chosen.end()) pool.push_back(v);
  }
  if (pool.size() + chosen.size() != g.order()) {
    throw std::invalid_argument("required vertices must be distinct");
  }
  Count total = 0;
  for_each_subset(pool, k - chosen.size(), chosen, [&](const std::vector<Vertex>& s) {
    if (is_induced_cycle(g, s)) total = checked_add(total, 1);
  });
  return total;
}

Count count_fast_serial(const Graph& g, unsigned k) {
  check_fast_k(g, k);
  PathWalker walker(g, k);
  NoObserver none;
  Count total = 0;
  CycleQuery q;
  q.root_is_minimum = true;
  for (Vertex r = 0; r + k <= g.order(); ++r) {
    q.root = r;
    total = checked_add(total, walker.run(q, none));
  }
  return total;
}

Count count_fast(const Graph& g, unsigned k, int threads) {
  check_fast_k(g, k);
  const int roots = static_cast<int>(g.order() - k + 1);
  std::vector<Count> per_root(static_cast<std::size_t>(roots), 0);
#pragma omp parallel num_threads(resolve_threads(threads))
  {
    PathWalker walker(g, k);
    NoObserver none;
    CycleQuery q;
    q.root_is_minimum = true;
#pragma omp for schedule(dynamic, 1)
    for (int r = 0; r < roots; ++r) {
      q.root = static_cast<Vertex>(r);
      per_root[static_cast<std::size_t>(r)] = walker.run(q, none);
    }
  }
  return sum_checked(per_root);
}

Count count_rooted(const Graph& g, unsigned k, Vertex v) {
  CycleQuery q;
  q.root = v;
  return count_query(g, k, q);
}

std::vector<Count> count_rooted_all_serial(const Graph& g, unsigned k) {
  check_fast_k(g, k);
  PathWalker walker(g, k);
  NoObserver none;
  std::vector<Count> out(g.order());
  CycleQuery q;
  for (Vertex v = 0; v < g.order(); ++v) {
    q.root = v;
    out[v] = walker.run(q, none);
  }
  return out;
}

std::vector<Count> count_rooted_all(const Graph& g, unsigned k, int threads) {
  check_fast_k(g, k);
  const int n = static_cast<int>(g.order());
  std::vector<Count> out(g.order());
#pragma omp parallel num_threads(resolve_threads(threads))
  {
    PathWalker walker(g, k);
    NoObserver none;
    CycleQuery q;
#pragma omp for schedule(dynamic, 1)
    for (int v = 0; v < n; ++v) {
      q.root = static_cast<Vertex>(v);
      out[static_cast<std::size_t>(v)] = walker.run(q, none);
    }
  }
  return out;
}

Count count_edge_rooted(const Graph& g, unsigned k, Vertex v, Vertex w) {
  check_vertex(g, v);
  check_vertex(g, w);
  if (v == w || !g.adjacent(v, w)) {
    throw std::invalid_argument("edge-rooted count needs an edge vw");
  }
  CycleQuery q;
  q.root = v;
  q.first = w;
  q.break_direction = false;
  return count_query(g, k, q);
}

Count count_cherry_rooted(const Graph& g, unsigned k, Vertex u, Vertex v, Vertex w) {
  check_vertex(g, u);
  check_vertex(g, v);
  check_vertex(g, w);
  if (u == w || u == v || v == w || !g.adjacent(u, v) || !g.adjacent(v, w) || g.adjacent(u, w)) {
    throw std::invalid_argument("cherry-rooted count needs u,w in N(v) with uw not an edge");
  }
  CycleQuery q;
  q.root = v;
  q.first = u;
  q.last = w;
  q.break_direction = false;
  return count_query(g, k, q);
}

Count count_pair(const Graph& g, unsigned k, Vertex a, Vertex b) {
  check_vertex(g, a);
  check_vertex(g, b);
  if (a == b) throw std::invalid_argument("pair count needs two distinct vertices");
  CycleQuery q;
  q.root = a;
  q.must_contain = b;
  return count_query(g, k, q);
}

CountReport count_report(const Graph& g, unsigned k, const CountOptions& options) {
  CountReport r;
  r.k = k;
  r.total = count_fast(g, k, options.threads);
  if (options.rooted) r.rooted = count_rooted_all(g, k, options.threads);
  if (options.edge_rooted) {
    std::map<Edge, Count> m;
    for (Vertex v = 0; v < g.order(); ++v) {
      for (Vertex w : g.neighbors(v)) m[{v, w}] = count_edge_rooted(g, k, v, w);
    }
    r.edge_rooted = std::move(m);
  }
  if (options.cherry_rooted) {
    std::map<std::tuple<Vertex, Vertex, Vertex>, Count> m;
    for (Vertex v = 0; v < g.order(); ++v) {
      for (const auto& [u, w] : nonadjacent_neighbor_pairs(g, v)) {
        m[{u, v, w}] = count_cherry_rooted(g, k, u, v, w);
      }
    }
    r.cherry_rooted = std::move(m);
  }
  return r;
}

Graph symmetrise(const Graph& g, Vertex v_minus, Vertex v_plus) {
  check_vertex(g, v_minus);
  check_vertex(g, v_plus);
  if (v_minus == v_plus) throw std::invalid_argument("symmetrise needs two distinct vertices");
  GraphBuilder b(g);
  b.isolate(v_minus);
  for (Vertex w : g.neighbors(v_plus)) {
    if (w != v_minus) b.add_edge(v_minus, w);
  }
  return b.build();
}

}  // namespace indcyc
