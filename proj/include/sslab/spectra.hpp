#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sslab/graph.hpp"

namespace sslab {

struct PerronOptions {
  double tol = 1e-10;
  std::int64_t max_iter = 100'000;
};

struct PerronData {
  double lambda = 0.0;
  std::vector<double> x;  // unit, nonnegative, zero off the chosen component
  std::size_t component_id = 0;
  double residual = 0.0;  // ||A x - lambda x||_2
  std::int64_t iterations = 0;

  double max_entry() const;
};

/// Spectral radius and Perron vector by power iteration on A + I, run per
/// connected component. The component with the largest lambda wins; ties go
/// to the smallest component id. `warm`, when given, must have g.order()
/// entries and is used as the starting vector.
PerronData perron(const Graph& g, const PerronOptions& opts = {},
                  std::span<const double> warm = {});

/// Exact lambda(S_{k,m}): closed form when k divides m - C(k,2), otherwise
/// the top eigenvalue of the equitable quotient on the four vertex classes.
double split_lambda(std::int64_t k, std::int64_t m);

/// d / (2k(sqrt(m) + k)), the guaranteed growth of lambda(S_{k,.}) over d
/// extra edges.
double split_increment_lb(std::int64_t k, std::int64_t m, std::int64_t d);

struct OpNormOptions {
  double tol = 1e-10;
  std::int64_t max_iter = 100'000;
  int restarts = 3;
  std::uint64_t seed = 0x5eed;
};

struct OpNormEstimate {
  double p = 2.0;
  double q = 2.0;
  double value = 0.0;  // ||A witness||_q, a lower bound on ||A||_{p->q}
  std::vector<double> witness;  // ||witness||_p = 1
  bool converged = false;
  int restarts_used = 0;
  std::int64_t iterations = 0;
};

/// Lower bound on ||A(g)||_{p->q} for 1 < p <= 2 <= q by the nonlinear power
/// method, maximized over several positive starts.
OpNormEstimate opnorm(const Graph& g, double p, double q,
                      const OpNormOptions& opts = {});

/// Value ||A x||_q / ||x||_p for a given nonzero x.
double opnorm_ratio(const Graph& g, double p, double q,
                    std::span<const double> x);

struct SingularTriple {
  double sigma = 0.0;
  std::vector<double> v_right;  // indexed like `cols`
  std::vector<double> u_left;   // indexed like `rows`
  bool converged = false;
  std::int64_t iterations = 0;
};

/// Top singular triple of the 0/1 rows x cols incidence matrix, by power
/// iteration on M^T M from the all-ones vector.
SingularTriple top_singular(std::span<const Vertex> rows,
                            std::span<const Vertex> cols, const Graph& g,
                            double tol = 1e-12,
                            std::int64_t max_iter = 100'000);

struct CutDiagnostics {
  double lambda = 0.0;
  double lambda_u = 0.0;
  double lambda_w = 0.0;
  double rho = 0.0;
  std::uint64_t m_uw = 0;
  double mu_u = 0.0;
  double slack_a = 0.0;
  double slack_b = 0.0;
  double slack_c = 0.0;
  bool slack_c_applicable = false;
};

/// Below this, (lambda - lambda_U)^2 + rho^2 is treated as zero and the
/// mass inequality is reported as not applicable.
inline constexpr double kCutDenominatorFloor = 1e-9;

CutDiagnostics cut_diagnostics(const Graph& g, std::span<const Vertex> u,
                               const PerronData& pd,
                               const PerronOptions& opts = {});

}  // namespace sslab
