#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sslab/bigint.hpp"
#include "sslab/graph.hpp"
#include "sslab/spectra.hpp"

namespace sslab {

/// Perron edge distribution p_ij = a_ij x_i x_j / lambda on the component
/// carrying the Perron vector. Indices are local to `vertices`.
struct EdgeDistribution {
  std::vector<Vertex> vertices;   // component vertices, increasing
  std::vector<Edge> edges;        // local unordered edges, lexicographic
  std::vector<double> p_edge;     // p_ij = p_ji for each edge
  std::vector<double> pi;         // x_i^2
  double lambda = 0.0;
  double residual = 0.0;          // Perron residual, bounds |lambda error|

  /// p_ij for local indices (0 off the edge set).
  double p(Vertex i, Vertex j) const;
};

/// Uses a tighter Perron tolerance than the library default; the entropy
/// identity is only as accurate as the eigenvector residual.
EdgeDistribution edge_distribution(const Graph& g,
                                   const PerronOptions& opts = {1e-13, 100'000});

/// H(p) - H(pi) in nats, which equals ln(lambda) for a Perron distribution.
double entropy_gap(const EdgeDistribution& d);

/// Largest-remainder rounding of s*q to integers summing to s; remainders
/// that tie go to the smaller index.
std::vector<std::int64_t> round_counts(std::span<const double> q, std::int64_t s);

struct RegularBundle {
  int k = 0;
  std::vector<Vertex> vertices;           // component vertices (global ids)
  std::vector<Edge> edges;                // local edges
  std::vector<std::int64_t> edge_counts;  // N_ij = N_ji for each edge
  std::vector<std::int64_t> n_vec;        // row sums n_i
  BigInt d_k = 0;                         // prod n_i! / prod_{ordered} N_ij!
  BigInt t_k_size = 0;                    // k! / prod n_i!
  double lambda = 0.0;
  double lambda_k = 0.0;                  // lambda^k
  double lambda_k_lo = 0.0;               // outward-rounded enclosure of lambda^k
  double lambda_k_hi = 0.0;

  /// N as a dense symmetric matrix over local indices.
  std::vector<std::vector<std::int64_t>> n_matrix() const;
  /// d_k <= lambda^k (1 + 1e-9), using the upper end of the enclosure.
  bool degree_within_lambda_power() const;
  /// log(lambda^k / d_k) / log k.
  double measured_exponent() const;
};

RegularBundle build_regular(const Graph& g, int k);

inline constexpr std::uint64_t kDefaultFkCap = 5000;

struct FkGraph {
  Graph graph;
  std::vector<std::uint64_t> codes;  // tuple codes over V(g), increasing
};

/// Explicit F_k on the type class of the bundle. Tuple (a_1..a_k) has code
/// sum_r a_r |V(g)|^{k-r}, matching tensor_power's vertex numbering.
FkGraph materialize_fk(const RegularBundle& bundle, const Graph& g,
                       std::uint64_t cap = kDefaultFkCap);

}  // namespace sslab
