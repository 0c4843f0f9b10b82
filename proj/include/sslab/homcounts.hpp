#pragma once

#include <chrono>
#include <cstdint>
#include <limits>

#include "sslab/bigint.hpp"
#include "sslab/graph.hpp"

namespace sslab {

enum class CountMethod { kBacktracking, kTracePower, kCodegree, kCycleEnum };

const char* count_method_name(CountMethod m);

struct CountResult {
  BigInt value = 0;
  CountMethod method = CountMethod::kBacktracking;
  std::chrono::duration<double> elapsed{0.0};
};

struct CountOptions {
  unsigned threads = 0;  // 0: SSLAB_THREADS or hardware concurrency
  double budget = std::numeric_limits<double>::infinity();
  std::size_t max_pattern = 10;
};

/// Number of vertex maps V(h) -> V(g) sending edges to edges.
CountResult hom_count(const Graph& h, const Graph& g, const CountOptions& opts = {});
/// As hom_count, restricted to injective maps.
CountResult inj_count(const Graph& h, const Graph& g, const CountOptions& opts = {});
/// |Aut(h)| = inj(h, h).
BigInt aut_order(const Graph& h, const CountOptions& opts = {});

/// tr(A^L), the number of closed walks of length L.
CountResult closed_walk_count(const Graph& g, int length);

/// Work estimate C(n, t) used by the budget guard of the copy counters.
double subset_work(std::size_t n, int t);

/// Unlabeled copies of K_{t,t}.
CountResult count_ktt(const Graph& g, int t, const CountOptions& opts = {});
/// Unlabeled copies of the cycle C_{2t}.
CountResult count_c2t(const Graph& g, int t, const CountOptions& opts = {});

}  // namespace sslab
