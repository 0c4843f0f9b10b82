#pragma once

#include <cstdint>
#include <optional>

#include "sslab/bigint.hpp"
#include "sslab/graph.hpp"
#include "sslab/homcounts.hpp"
#include "sslab/spectra.hpp"

namespace sslab {

struct CertificateExponents {
  std::int64_t v = 0;
  std::int64_t e = 0;
  double s = 0.0;                     // 2e / v
  std::optional<double> s_prime;      // 2e / (2e - v), when 2e > v
  std::optional<double> alpha;        // e / (2e - v), when 2e > v
};

/// Exponents of the operator-norm certificate for a bipartite pattern.
CertificateExponents exponents(const Graph& h);

/// Relative tolerance used by every holds_* flag: holds iff
/// hom >= rhs * (1 - kHoldsRelTol).
inline constexpr double kHoldsRelTol = 1e-9;

struct IneqReport {
  std::int64_t v = 0;
  std::int64_t e = 0;
  std::uint64_t n = 0;
  std::uint64_t big_m = 0;
  double lambda = 0.0;
  BigInt hom = 0;
  bool spectral_forms_applicable = false;  // v <= e

  // Density form M^e n^{v-2e}; decided exactly in rational arithmetic.
  long double rhs_i = 0.0L;
  bool holds_i = false;
  // Edge-spectral form lambda^{2e-v} M^{v-e} and vertex-spectral form
  // lambda^e n^{v-e}. Evaluated for every pattern; for forests (v > e) they
  // are informational, which is how the P_3 failure is exhibited.
  long double rhs_ii = 0.0L;
  long double rhs_iii = 0.0L;
  bool holds_ii = false;
  bool holds_iii = false;
  // Operator-norm certificate ||A||_{s'->s}^e and the interpolation slack
  // ||A||_{s'->s}^alpha M^{1-alpha} - lambda; present only when v <= e.
  std::optional<double> opnorm_value;
  std::optional<bool> opnorm_converged;
  std::optional<long double> rhs_cert;
  std::optional<bool> holds_cert;
  std::optional<double> chain_slack;

  /// True when any evaluated inequality fails, including the informational
  /// spectral forms of a forest.
  bool any_failure() const;
};

struct CheckOptions {
  CountOptions count;
  PerronOptions perron;
  OpNormOptions opnorm;
};

IneqReport check_suite(const Graph& h, const Graph& g, const CheckOptions& opts = {});

struct P3Report {
  std::int64_t t = 0;
  Graph graph;
  BigInt hom = 0;          // hom(P_3, G) = 3t^2 + t
  double lambda = 0.0;     // sqrt(t)
  std::uint64_t big_m = 0;
  std::uint64_t n = 0;
  double lambda_m = 0.0;
  double lambda2_n = 0.0;
  bool fails_lambda_m = false;   // hom < lambda M, decided exactly
  bool fails_lambda2_n = false;  // hom < lambda^2 n, decided exactly
};

/// G = K_{1,t} plus t^2 disjoint edges; P_3 violates both spectral forms.
P3Report p3_counterexample(std::int64_t t);

/// B_t (lambda^2/m)^{t(t-1)} m^t - C(2t,2)/(2 (t!)^2) n^{2t-1}.
double ktt_copy_lower(int t, double lambda, std::int64_t m, std::int64_t n);
/// lambda^{2t}/(4t) - C(2t,2) n^{2t-1}/(4t).
double c2t_copy_lower(int t, double lambda, std::int64_t n);

struct SharpConstants {
  int t = 0;
  double b_t = 0.0;           // 2^{-(t-1)^2} / (t!)^2
  double c_t = 0.0;           // (t-1)! / (2 t^t)
  double random_cycle = 0.0;  // 1 / (4t)
  double ktt_alt = 0.0;       // 1 / (t! t^t)
};

SharpConstants constants(int t);

/// Expected number of K_{t,t} in a uniform m-edge graph on n vertices.
BigRational gnm_expected_ktt_exact(std::int64_t n, std::int64_t m, int t);
double gnm_expected_ktt(std::int64_t n, std::int64_t m, int t);

}  // namespace sslab
