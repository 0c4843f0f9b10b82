#include "sslab/homcounts.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sslab/error.hpp"
#include "sslab/parallel.hpp"

namespace sslab {
namespace {

using Clock = std::chrono::steady_clock;

// Constant-time adjacency test for desk-scale hosts, binary search otherwise.
class AdjacencyOracle {
 public:
  static constexpr std::size_t kDenseLimit = 8192;

  explicit AdjacencyOracle(const Graph& g) : g_(g), n_(g.order()) {
    if (n_ <= kDenseLimit) {
      words_ = (n_ + 63) / 64;
      bits_.assign(n_ * words_, 0);
      for (const Edge& e : g.edges()) {
        bits_[e.u * words_ + e.v / 64] |= 1ULL << (e.v % 64);
        bits_[e.v * words_ + e.u / 64] |= 1ULL << (e.u % 64);
      }
    }
  }

  bool operator()(Vertex u, Vertex v) const {
    if (!bits_.empty()) return (bits_[u * words_ + v / 64] >> (v % 64)) & 1ULL;
    return g_.has_edge(u, v);
  }

 private:
  const Graph& g_;
  std::size_t n_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Pattern vertices in greedy connected order: each next vertex has the most
// already-placed neighbours (then higher degree, then smaller index).
struct MatchPlan {
  std::vector<Vertex> order;
  std::vector<std::vector<int>> back;  // earlier levels adjacent to level i
};

MatchPlan make_plan(const Graph& h) {
  const std::size_t k = h.order();
  MatchPlan plan;
  std::vector<int> level_of(k, -1);
  std::vector<int> placed_nbrs(k, 0);
  for (std::size_t step = 0; step < k; ++step) {
    int pick = -1;
    for (std::size_t v = 0; v < k; ++v) {
      if (level_of[v] >= 0) continue;
      if (pick < 0) {
        pick = static_cast<int>(v);
        continue;
      }
      const auto pv = static_cast<Vertex>(pick);
      const auto vv = static_cast<Vertex>(v);
      if (placed_nbrs[v] > placed_nbrs[pv] ||
          (placed_nbrs[v] == placed_nbrs[pv] && h.degree(vv) > h.degree(pv))) {
        pick = static_cast<int>(v);
      }
    }
    level_of[pick] = static_cast<int>(step);
    plan.order.push_back(static_cast<Vertex>(pick));
    std::vector<int> back;
    for (Vertex w : h.neighbors(static_cast<Vertex>(pick))) {
      ++placed_nbrs[w];
      if (level_of[w] >= 0 && level_of[w] < static_cast<int>(step)) back.push_back(level_of[w]);
    }
    std::sort(back.begin(), back.end());
    plan.back.push_back(std::move(back));
  }
  return plan;
}

class Matcher {
 public:
  Matcher(const Graph& h, const Graph& g, bool injective)
      : g_(g), adj_(g), plan_(make_plan(h)), injective_(injective),
        image_(h.order(), 0), used_(g.order(), 0) {}

  BigInt run() {
    const std::size_t k = plan_.order.size();
    if (k == 0) return 1;
    recurse(0);
    flush();
    return total_;
  }

 private:
  bool fits(std::size_t level, Vertex c) const {
    if (injective_ && used_[c]) return false;
    for (int b : plan_.back[level]) {
      if (!adj_(image_[static_cast<std::size_t>(b)], c)) return false;
    }
    return true;
  }

  template <class Visit>
  void for_candidates(std::size_t level, Visit&& visit) {
    const auto& back = plan_.back[level];
    if (back.empty()) {
      for (std::size_t c = 0; c < g_.order(); ++c) {
        if (!injective_ || !used_[c]) visit(static_cast<Vertex>(c));
      }
      return;
    }
    // Scan the smallest neighbourhood among the placed neighbours.
    Vertex pivot = image_[static_cast<std::size_t>(back[0])];
    for (int b : back) {
      const Vertex img = image_[static_cast<std::size_t>(b)];
      if (g_.degree(img) < g_.degree(pivot)) pivot = img;
    }
    for (Vertex c : g_.neighbors(pivot)) {
      if (fits(level, c)) visit(c);
    }
  }

  void recurse(std::size_t level) {
    if (level + 1 == plan_.order.size()) {
      std::uint64_t count = 0;
      if (plan_.back[level].empty()) {
        count = g_.order() - (injective_ ? level : 0);
      } else {
        for_candidates(level, [&](Vertex) { ++count; });
      }
      add(count);
      return;
    }
    for_candidates(level, [&](Vertex c) {
      image_[level] = c;
      used_[c] = 1;
      recurse(level + 1);
      used_[c] = 0;
    });
  }

  void add(std::uint64_t c) {
    if (acc_ > (1ULL << 62)) flush();
    acc_ += c;
  }
  void flush() {
    total_ += acc_;
    acc_ = 0;
  }

  const Graph& g_;
  AdjacencyOracle adj_;
  MatchPlan plan_;
  bool injective_;
  std::vector<Vertex> image_;
  std::vector<char> used_;
  std::uint64_t acc_ = 0;
  BigInt total_ = 0;
};

CountResult match_count(const Graph& h, const Graph& g, bool injective,
                        const CountOptions& opts) {
  if (h.order() > opts.max_pattern) {
    throw Error(Errc::kPatternTooLarge,
                "pattern has " + std::to_string(h.order()) + " vertices; limit is " +
                    std::to_string(opts.max_pattern));
  }
  const auto start = Clock::now();
  CountResult res;
  res.method = CountMethod::kBacktracking;
  if (injective && h.order() > g.order()) {
    res.value = 0;
  } else {
    res.value = Matcher(h, g, injective).run();
  }
  res.elapsed = Clock::now() - start;
  return res;
}

template <class T>
std::vector<T> dense_multiply(const std::vector<T>& a, const std::vector<T>& b, std::size_t n) {
  std::vector<T> c(n * n, T(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const T& aik = a[i * n + k];
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (b[k * n + j] != 0) c[i * n + j] += aik * b[k * n + j];
      }
    }
  }
  return c;
}

template <class T>
T trace_power(const Graph& g, int length) {
  const std::size_t n = g.order();
  std::vector<T> base(n * n, T(0));
  for (const Edge& e : g.edges()) {
    base[e.u * n + e.v] = 1;
    base[e.v * n + e.u] = 1;
  }
  std::vector<T> acc(n * n, T(0));
  for (std::size_t i = 0; i < n; ++i) acc[i * n + i] = 1;
  for (int l = length; l > 0; l >>= 1) {
    if (l & 1) acc = dense_multiply(acc, base, n);
    if (l > 1) base = dense_multiply(base, base, n);
  }
  T tr = 0;
  for (std::size_t i = 0; i < n; ++i) tr += acc[i * n + i];
  return tr;
}

void check_budget(const Graph& g, int t, const CountOptions& opts, const char* who) {
  const double work = subset_work(g.order(), t);
  if (work > opts.budget) {
    throw BudgetExceeded(work, std::string(who) + ": estimated work " + std::to_string(work) +
                                   " exceeds budget " + std::to_string(opts.budget));
  }
}

// Sum over t-sets S of C(codeg(S), t), i.e. twice the number of K_{t,t}.
// Common neighbourhoods are grown one vertex at a time: for the current set
// with neighbourhood I, bucket[s] collects I ∩ N(s) for every s > last.
BigInt codegree_sum(const Graph& g, int t, unsigned threads) {
  const std::size_t n = g.order();
  const std::size_t max_deg = g.max_degree();
  std::vector<BigInt> choose(max_deg + 1);
  for (std::size_t d = 0; d <= max_deg; ++d) choose[d] = binomial(d, static_cast<std::uint64_t>(t));

  struct Scratch {
    std::vector<std::vector<std::vector<Vertex>>> buckets;  // per depth, per vertex
    std::vector<std::uint64_t> hist;
  };
  const unsigned workers = effective_threads(n, threads);
  std::vector<Scratch> scratch(workers);
  std::vector<BigInt> partial(n);

  parallel_for(n, threads, [&](std::size_t s1, unsigned w) {
    Scratch& sc = scratch[w];
    if (sc.buckets.empty()) {
      sc.buckets.assign(static_cast<std::size_t>(t), std::vector<std::vector<Vertex>>(n));
      sc.hist.assign(max_deg + 1, 0);
    }
    auto first = g.neighbors(static_cast<Vertex>(s1));
    if (first.size() < static_cast<std::size_t>(t)) return;
    std::vector<Vertex> touched_hist;

    auto extend = [&](auto&& self, int depth, Vertex last, std::span<const Vertex> common) -> void {
      auto& bucket = sc.buckets[static_cast<std::size_t>(depth)];
      std::vector<Vertex> touched;
      for (Vertex x : common) {
        for (Vertex s : g.neighbors(x)) {
          if (s <= last) continue;
          if (bucket[s].empty()) touched.push_back(s);
          bucket[s].push_back(x);
        }
      }
      for (Vertex s : touched) {
        const std::size_t c = bucket[s].size();
        if (c >= static_cast<std::size_t>(t)) {
          if (depth + 1 == t) {
            if (sc.hist[c]++ == 0) touched_hist.push_back(static_cast<Vertex>(c));
          } else {
            self(self, depth + 1, s, bucket[s]);
          }
        }
      }
      for (Vertex s : touched) bucket[s].clear();
    };
    extend(extend, 1, static_cast<Vertex>(s1), first);

    BigInt sum = 0;
    for (Vertex c : touched_hist) {
      sum += choose[c] * sc.hist[c];
      sc.hist[c] = 0;
    }
    partial[s1] = std::move(sum);
  });

  BigInt total = 0;
  for (const BigInt& p : partial) total += p;
  return total;
}

}  // namespace

const char* count_method_name(CountMethod m) {
  switch (m) {
    case CountMethod::kBacktracking: return "backtracking";
    case CountMethod::kTracePower: return "trace-power";
    case CountMethod::kCodegree: return "codegree";
    case CountMethod::kCycleEnum: return "cycle-enum";
  }
  return "?";
}

CountResult hom_count(const Graph& h, const Graph& g, const CountOptions& opts) {
  return match_count(h, g, false, opts);
}

CountResult inj_count(const Graph& h, const Graph& g, const CountOptions& opts) {
  return match_count(h, g, true, opts);
}

BigInt aut_order(const Graph& h, const CountOptions& opts) {
  return inj_count(h, h, opts).value;
}

CountResult closed_walk_count(const Graph& g, int length) {
  if (length < 1) throw Error(Errc::kInvalidParameter, "closed_walk_count: need L >= 1");
  const auto start = Clock::now();
  CountResult res;
  res.method = CountMethod::kTracePower;
  const double delta = static_cast<double>(g.max_degree());
  // Entries of A^j are at most Delta^j, so the trace is at most n Delta^L.
  const double log_bound = std::log2(std::max<double>(1.0, static_cast<double>(g.order()))) +
                           length * std::log2(std::max(1.0, delta));
  if (log_bound < 62.0) {
    res.value = trace_power<std::uint64_t>(g, length);
  } else {
    res.value = trace_power<BigInt>(g, length);
  }
  res.elapsed = Clock::now() - start;
  return res;
}

double subset_work(std::size_t n, int t) {
  if (t < 0 || static_cast<std::size_t>(t) > n) return 0.0;
  double w = 1.0;
  for (int i = 0; i < t; ++i) w = w * static_cast<double>(n - static_cast<std::size_t>(i)) / (i + 1);
  return w;
}

CountResult count_ktt(const Graph& g, int t, const CountOptions& opts) {
  if (t < 2) throw Error(Errc::kInvalidParameter, "count_ktt: need t >= 2");
  check_budget(g, t, opts, "count_ktt");
  const auto start = Clock::now();
  CountResult res;
  res.method = CountMethod::kCodegree;
  // Each copy with sides S, T is seen once from S and once from T. The sides
  // are automatically disjoint: a vertex of S is never its own neighbour, so
  // S never meets the common neighbourhood of S.
  const BigInt twice = codegree_sum(g, t, opts.threads);
  if (twice % 2 != 0) throw Error(Errc::kInvariant, "count_ktt: odd codegree sum");
  res.value = twice / 2;
  res.elapsed = Clock::now() - start;
  return res;
}

CountResult count_c2t(const Graph& g, int t, const CountOptions& opts) {
  if (t < 2) throw Error(Errc::kInvalidParameter, "count_c2t: need t >= 2");
  if (t == 2) {
    CountResult r = count_ktt(g, 2, opts);
    r.method = CountMethod::kCodegree;
    return r;
  }
  check_budget(g, t, opts, "count_c2t");
  const auto start = Clock::now();
  const std::size_t n = g.order();
  const std::size_t len = 2 * static_cast<std::size_t>(t);
  AdjacencyOracle adj(g);

  struct Scratch {
    std::vector<char> used, nb0;
    std::vector<std::uint32_t> closers;
    std::vector<Vertex> path;
  };
  const unsigned workers = effective_threads(n, opts.threads);
  std::vector<Scratch> scratch(workers);
  std::vector<std::uint64_t> partial(n, 0);

  // Each cycle is rooted at its smallest vertex v0 and walked in both
  // directions. Paths v0 v1 ... v_{L-2} stay above v0; the closing vertex
  // v_{L-1} is counted from closers[w] = |N(w) ∩ N(v0) ∩ (v0, n)| minus the
  // path vertices that would be reused.
  parallel_for(n, opts.threads, [&](std::size_t root, unsigned w) {
    Scratch& sc = scratch[w];
    if (sc.used.empty()) {
      sc.used.assign(n, 0);
      sc.nb0.assign(n, 0);
      sc.closers.assign(n, 0);
      sc.path.assign(len, 0);
    }
    const auto v0 = static_cast<Vertex>(root);
    std::vector<Vertex> touched;
    for (Vertex u : g.neighbors(v0)) {
      if (u <= v0) continue;
      sc.nb0[u] = 1;
      for (Vertex x : g.neighbors(u)) {
        if (sc.closers[x]++ == 0) touched.push_back(x);
      }
    }
    std::uint64_t count = 0;
    sc.path[0] = v0;
    sc.used[v0] = 1;
    auto walk = [&](auto&& self, std::size_t depth) -> void {
      const Vertex cur = sc.path[depth];
      for (Vertex x : g.neighbors(cur)) {
        if (x <= v0 || sc.used[x]) continue;
        if (depth + 1 == len - 2) {
          std::uint64_t c = sc.closers[x];
          for (std::size_t i = 1; i < depth + 1; ++i) {
            const Vertex y = sc.path[i];
            if (sc.nb0[y] && adj(y, x)) --c;
          }
          count += c;
        } else {
          sc.path[depth + 1] = x;
          sc.used[x] = 1;
          self(self, depth + 1);
          sc.used[x] = 0;
        }
      }
    };
    walk(walk, 0);
    sc.used[v0] = 0;
    for (Vertex u : g.neighbors(v0)) sc.nb0[u] = 0;
    for (Vertex x : touched) sc.closers[x] = 0;
    partial[root] = count;
  });

  BigInt twice = 0;
  for (std::uint64_t p : partial) twice += p;
  if (twice % 2 != 0) throw Error(Errc::kInvariant, "count_c2t: odd oriented cycle count");
  CountResult res;
  res.method = CountMethod::kCycleEnum;
  res.value = twice / 2;
  res.elapsed = Clock::now() - start;
  return res;
}

}  // namespace sslab
