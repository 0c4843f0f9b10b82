#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sslab/bigint.hpp"
#include "sslab/graph.hpp"
#include "sslab/homcounts.hpp"
#include "sslab/spectra.hpp"

namespace sslab {

// ---------------------------------------------------------------------------
// Heavy-edge pruning

struct PruneStep {
  Edge deleted;
  std::uint64_t m_i = 0;               // edges before the deletion
  double lambda_i = 0.0;
  std::optional<double> split_lambda;  // lambda(S_{t-1, m_i}) when defined
  std::optional<double> delta;         // lambda_i - split_lambda
  double product = 0.0;                // x_u x_v of the deleted edge
  double threshold = 0.0;              // eta / sqrt(m_i)
};

struct PruneTrace {
  double eta = 0.0;
  int t = 0;
  std::uint64_t m_initial = 0;
  double lambda_initial = 0.0;
  std::vector<PruneStep> steps;
  Graph final_graph;
  std::uint64_t m_final = 0;
  double lambda_final = 0.0;           // 0 when the final graph is empty
  bool empty = false;
  std::optional<PerronData> final_perron;
  double alpha = 0.0;                  // m' / m
  std::optional<double> gap_ratio;     // lambda(H) / sqrt(m')
  double c_eta = 0.0;                  // ((1 - 4 eta) / (sqrt 2 - 4 eta))^2
};

inline double default_eta(int t) { return 1.0 / (16.0 * t); }

/// Deletes, one at a time, the lightest edge with x_u x_v < eta / sqrt(m)
/// (ties by lexicographic edge), recomputing the Perron vector each step.
PruneTrace heavy_prune(const Graph& g, int t, double eta,
                       const PerronOptions& opts = {});

/// Edges violating x_u x_v >= eta / sqrt(m) for the given Perron data.
std::vector<Edge> light_edges(const Graph& h, const PerronData& pd, double eta);

/// ||x||_inf * m^{1/4}.
double localization_g(const PerronData& pd, std::uint64_t m);

/// If lambda^2 >= (1 + delta) m then ||x||_inf m^{1/4} < delta^{-4}; returns
/// whether that implication holds (vacuously true when the hypothesis fails).
bool delocalization_check(const PerronData& pd, std::uint64_t m, double delta);

// ---------------------------------------------------------------------------
// ACD partition

struct TFlags {
  bool t1 = false;  // D independent
  bool t2 = false;  // no C-D edges
  bool t3 = false;  // every edge inside C or touching A
};

TFlags verify_t(const Graph& h, std::span<const Vertex> a, std::span<const Vertex> c,
                std::span<const Vertex> d);

struct AcdPartition {
  std::vector<Vertex> a, c, d;
  double eta = 0.0;
  double l_inf = 0.0;       // L = ||x||_inf
  double g = 0.0;
  double g_tilde = 0.0;     // g / sqrt(eta)
  std::int64_t levels = 0;  // K
  std::int64_t ell = 0;
  std::int64_t i_lo = 0;    // I = {i_lo, ..., i_hi}
  std::int64_t i_hi = 0;
  std::vector<std::uint64_t> f_sizes;  // |F_h| for h = 1..floor(K/2)
  std::vector<std::uint64_t> s_sums;   // S_i for i in I
  std::int64_t i_star = 0;
  double s_threshold = 0.0;
  double r_threshold = 0.0;
  double sr = 0.0;
  double sr_bound = 0.0;    // eta / sqrt(m)
  bool sr_ok = false;
  std::uint64_t e_ac = 0;
  std::uint64_t e_core = 0;  // e(H[C])
  std::uint64_t e_ad = 0;
  TFlags t_flags;
};

/// Level-set partition of an eta-heavy graph. `pd` may carry the Perron data
/// already computed for h (the pruning step hands over its final vector).
AcdPartition acd_partition(const Graph& h, double eta,
                           const PerronOptions& opts = {},
                           const PerronData* pd = nullptr);

// ---------------------------------------------------------------------------
// Aligned rows and row covers

struct AlignedRows {
  std::vector<Vertex> rows;  // subset of A, increasing
  SingularTriple sigma;
  std::vector<double> alignment;  // <x_a, v>^2 for each a in A (0 for empty rows)
};

/// Tolerance on the alignment comparison <x_a, v>^2 >= 1 - theta.
inline constexpr double kAlignTol = 1e-12;

AlignedRows aligned_rows(const Graph& h, std::span<const Vertex> a,
                         std::span<const Vertex> d, double theta);

enum class RowCoverVariant { kManyCopies, kCover };

struct RowCoverOutcome {
  RowCoverVariant variant = RowCoverVariant::kCover;
  int t = 0;
  std::uint64_t e_ad = 0;
  double rho = 0.0;
  double epsilon = 0.0;  // 1 - rho^2 / e
  double theta = 0.0;    // sqrt(epsilon)
  std::vector<Vertex> r;
  bool degenerate = false;  // no aligned row; fell back to the heaviest row
  std::uint64_t e_outside_r = 0;  // e(A \ R, D), at most theta * e
  // many-copies
  std::uint64_t d_star = 0;
  std::int64_t floor_l = 0;
  BigInt copy_bound = 0;
  // cover
  std::vector<Vertex> b;
  std::uint64_t e_rest_to_b = 0;   // e(A \ R, B)
  std::uint64_t e_r_outside_b = 0; // e(R, D \ B)
  SingularTriple sigma;
};

/// Below this |epsilon| is treated as an exact rank-one incidence.
inline constexpr double kEpsilonClamp = 1e-12;

RowCoverOutcome row_cover_analyze(const Graph& h, std::span<const Vertex> a,
                                  std::span<const Vertex> d, int t);

// ---------------------------------------------------------------------------
// Pipeline

enum class Pattern { kKtt, kC2t };
const char* pattern_name(Pattern p);
std::optional<Pattern> parse_pattern(std::string_view name);

enum class Branch {
  kBelowThreshold,
  kPrunedEmpty,
  kDelocalized,
  kAcdUnavailable,
  kDenseCore,
  kSparseCore,
};
const char* branch_name(Branch b);

struct PipelineConfig {
  std::optional<double> eta;  // default 1/(16t)
  double g_cut = 10.0;        // heuristic stand-in for "g bounded"
  double frac_cut = 0.1;      // heuristic stand-in for "dense core"
  PerronOptions perron;
  CountOptions count;
};

struct PipelineReport {
  int t = 0;
  Pattern pattern = Pattern::kKtt;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  double lambda = 0.0;
  std::optional<double> split_lambda;  // lambda(S_{t-1, m})
  bool above_threshold = false;
  double eta = 0.0;
  double g_cut = 0.0;
  double frac_cut = 0.0;

  std::optional<PruneTrace> prune;
  Branch branch = Branch::kBelowThreshold;
  std::optional<double> g_value;

  // delocalized branch: the pruned graph without isolated vertices
  std::optional<std::uint64_t> h_vertices;
  std::optional<BigInt> h_count;
  std::optional<double> h_lower_bound;

  std::optional<AcdPartition> acd;
  std::optional<std::string> acd_error;

  // dense-core branch
  std::optional<BigInt> core_count;
  std::optional<double> core_lambda;
  std::optional<double> core_lower_bound;

  // sparse-core branch
  std::optional<RowCoverOutcome> row_cover;
  std::optional<CutDiagnostics> core_cut;

  BigInt count = 0;            // exact copies in the input graph
  double count_over_mt = 0.0;  // count / m^t
  double sharp_constant = 0.0;
  double ratio_to_sharp = 0.0;
};

/// Exact copies of K_{t,t} or C_{2t}.
CountResult count_pattern(const Graph& g, int t, Pattern p, const CountOptions& opts = {});
/// B_t for K_{t,t}, c_t for C_{2t}.
double sharp_constant(int t, Pattern p);

/// True when lambda exceeds lambda(S_{t-1,m}) beyond a 1e-9 relative margin.
bool above_split_threshold(double lambda, double split);

PipelineReport supersat_count(const Graph& g, int t, Pattern pattern,
                              const PipelineConfig& cfg = {});

}  // namespace sslab
