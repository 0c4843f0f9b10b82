#include "sslab/sidorenko.hpp"

#include <cmath>
#include <string>

#include "sslab/error.hpp"

namespace sslab {
namespace {

BigInt ipow(const BigInt& base, std::int64_t exp) {
  BigInt r = 1;
  for (std::int64_t i = 0; i < exp; ++i) r *= base;
  return r;
}

bool holds_with_tol(const BigInt& hom, long double rhs) {
  return to_long_double(hom) >= rhs * (1.0L - static_cast<long double>(kHoldsRelTol));
}

bool is_cycle(const Graph& h) {
  if (h.order() < 3 || h.edge_count() != h.order()) return false;
  for (std::size_t v = 0; v < h.order(); ++v) {
    if (h.degree(static_cast<Vertex>(v)) != 2) return false;
  }
  return h.components().size() == 1;
}

}  // namespace

bool IneqReport::any_failure() const {
  if (!holds_i || !holds_ii || !holds_iii) return true;
  return holds_cert.has_value() && !*holds_cert;
}

CertificateExponents exponents(const Graph& h) {
  if (h.edge_count() == 0) throw Error(Errc::kInvalidParameter, "exponents: pattern has no edges");
  if (!h.is_bipartite()) throw Error(Errc::kNotBipartite, "exponents: pattern is not bipartite");
  CertificateExponents ex;
  ex.v = static_cast<std::int64_t>(h.order());
  ex.e = static_cast<std::int64_t>(h.edge_count());
  if (2 * ex.e == ex.v) {
    throw Error(Errc::kDegenerate, "exponents: 2e = v (perfect matching), s' is undefined");
  }
  const double v = static_cast<double>(ex.v);
  const double e = static_cast<double>(ex.e);
  ex.s = 2.0 * e / v;
  if (2 * ex.e > ex.v) {
    ex.s_prime = 2.0 * e / (2.0 * e - v);
    ex.alpha = e / (2.0 * e - v);
  }
  return ex;
}

IneqReport check_suite(const Graph& h, const Graph& g, const CheckOptions& opts) {
  if (h.edge_count() == 0) throw Error(Errc::kInvalidParameter, "check: pattern has no edges");
  if (!h.is_bipartite()) throw Error(Errc::kNotBipartite, "check: pattern is not bipartite");
  if (g.edge_count() == 0) throw Error(Errc::kNoEdges, "check: host graph has no edges");

  IneqReport rep;
  rep.v = static_cast<std::int64_t>(h.order());
  rep.e = static_cast<std::int64_t>(h.edge_count());
  rep.n = g.order();
  rep.big_m = g.big_m();
  rep.spectral_forms_applicable = rep.v <= rep.e;
  rep.lambda = perron(g, opts.perron).lambda;
  // hom(C_L, G) = tr A^L; the dense trace is cheaper than backtracking on
  // moderate hosts.
  if (is_cycle(h) && g.order() <= 400) {
    rep.hom = closed_walk_count(g, static_cast<int>(h.order())).value;
  } else {
    rep.hom = hom_count(h, g, opts.count).value;
  }

  const std::int64_t v = rep.v;
  const std::int64_t e = rep.e;
  const BigInt big_m = rep.big_m;
  const BigInt n = rep.n;
  const long double lam = rep.lambda;
  const long double mm = static_cast<long double>(rep.big_m);
  const long double nn = static_cast<long double>(rep.n);

  // (i) hom >= M^e n^{v-2e}, compared exactly with the relative tolerance:
  // hom * n^{2e-v} * 10^9 >= M^e * (10^9 - 1).
  const BigInt scale = 1'000'000'000;
  if (2 * e >= v) {
    rep.holds_i = rep.hom * ipow(n, 2 * e - v) * scale >= ipow(big_m, e) * (scale - 1);
  } else {
    rep.holds_i = rep.hom * scale >= ipow(big_m, e) * ipow(n, v - 2 * e) * (scale - 1);
  }
  rep.rhs_i = std::pow(mm, static_cast<long double>(e)) *
              std::pow(nn, static_cast<long double>(v - 2 * e));

  rep.rhs_ii = std::pow(lam, static_cast<long double>(2 * e - v)) *
               std::pow(mm, static_cast<long double>(v - e));
  rep.rhs_iii = std::pow(lam, static_cast<long double>(e)) *
                std::pow(nn, static_cast<long double>(v - e));
  rep.holds_ii = holds_with_tol(rep.hom, rep.rhs_ii);
  rep.holds_iii = holds_with_tol(rep.hom, rep.rhs_iii);

  if (rep.spectral_forms_applicable) {
    const CertificateExponents ex = exponents(h);
    double norm = rep.lambda;
    bool converged = true;
    if (v != e) {
      // For v = e both exponents are 2 and the norm is lambda itself.
      const OpNormEstimate est = opnorm(g, *ex.s_prime, ex.s, opts.opnorm);
      norm = est.value;
      converged = est.converged;
    }
    rep.opnorm_value = norm;
    rep.opnorm_converged = converged;
    rep.rhs_cert = std::pow(static_cast<long double>(norm), static_cast<long double>(e));
    rep.holds_cert = holds_with_tol(rep.hom, *rep.rhs_cert);
    const double alpha = *ex.alpha;
    rep.chain_slack = std::pow(norm, alpha) *
                          std::pow(static_cast<double>(rep.big_m), 1.0 - alpha) -
                      rep.lambda;
  }
  return rep;
}

P3Report p3_counterexample(std::int64_t t) {
  if (t < 2) throw Error(Errc::kInvalidParameter, "p3_counterexample: need t >= 2");
  P3Report rep;
  rep.t = t;
  std::vector<Edge> es;
  for (std::int64_t i = 1; i <= t; ++i) es.push_back({0, static_cast<Vertex>(i)});
  const std::int64_t first_pair = t + 1;
  for (std::int64_t i = 0; i < t * t; ++i) {
    es.push_back({static_cast<Vertex>(first_pair + 2 * i), static_cast<Vertex>(first_pair + 2 * i + 1)});
  }
  rep.graph = Graph::from_edges(static_cast<std::size_t>(first_pair + 2 * t * t), std::move(es));
  rep.big_m = rep.graph.big_m();
  rep.n = rep.graph.order();
  rep.hom = hom_count(path_graph(3), rep.graph).value;
  rep.lambda = perron(rep.graph).lambda;
  rep.lambda_m = rep.lambda * static_cast<double>(rep.big_m);
  rep.lambda2_n = rep.lambda * rep.lambda * static_cast<double>(rep.n);
  // lambda^2 = t exactly (the star dominates each K_2 for t >= 2), so both
  // comparisons reduce to integers: hom^2 < t M^2 and hom < t n.
  const BigInt tt = t;
  rep.fails_lambda_m = rep.hom * rep.hom < tt * BigInt(rep.big_m) * BigInt(rep.big_m);
  rep.fails_lambda2_n = rep.hom < tt * BigInt(rep.n);
  return rep;
}

double ktt_copy_lower(int t, double lambda, std::int64_t m, std::int64_t n) {
  if (t < 2 || m < 1 || n < 0 || lambda < 0.0) {
    throw Error(Errc::kInvalidParameter, "ktt_copy_lower: need t >= 2, m >= 1, n >= 0, lambda >= 0");
  }
  const long double tf = to_long_double(factorial(static_cast<std::uint64_t>(t)));
  const long double b = std::pow(2.0L, -static_cast<long double>((t - 1) * (t - 1))) / (tf * tf);
  const long double mm = static_cast<long double>(m);
  const long double ratio = static_cast<long double>(lambda) * lambda / mm;
  const long double main = b * std::pow(ratio, static_cast<long double>(t * (t - 1))) *
                           std::pow(mm, static_cast<long double>(t));
  const long double pairs = to_long_double(binomial(2 * static_cast<std::uint64_t>(t), 2));
  const long double err = pairs / (2.0L * tf * tf) *
                          std::pow(static_cast<long double>(n), static_cast<long double>(2 * t - 1));
  return static_cast<double>(main - err);
}

double c2t_copy_lower(int t, double lambda, std::int64_t n) {
  if (t < 2 || n < 0 || lambda < 0.0) {
    throw Error(Errc::kInvalidParameter, "c2t_copy_lower: need t >= 2, n >= 0, lambda >= 0");
  }
  const long double four_t = 4.0L * t;
  const long double main = std::pow(static_cast<long double>(lambda), 2.0L * t) / four_t;
  const long double pairs = to_long_double(binomial(2 * static_cast<std::uint64_t>(t), 2));
  const long double err =
      pairs * std::pow(static_cast<long double>(n), static_cast<long double>(2 * t - 1)) / four_t;
  return static_cast<double>(main - err);
}

SharpConstants constants(int t) {
  if (t < 2) throw Error(Errc::kInvalidParameter, "constants: need t >= 2");
  const auto tu = static_cast<std::uint64_t>(t);
  const BigInt tf = factorial(tu);
  const BigInt t_pow = ipow(BigInt(t), t);
  SharpConstants c;
  c.t = t;
  const BigRational b(BigInt(1), (BigInt(1) << ((t - 1) * (t - 1))) * tf * tf);
  c.b_t = b.convert_to<double>();
  c.c_t = BigRational(factorial(tu - 1), 2 * t_pow).convert_to<double>();
  c.random_cycle = BigRational(BigInt(1), BigInt(4 * t)).convert_to<double>();
  c.ktt_alt = BigRational(BigInt(1), tf * t_pow).convert_to<double>();
  return c;
}

BigRational gnm_expected_ktt_exact(std::int64_t n, std::int64_t m, int t) {
  if (t < 1 || n < 0) throw Error(Errc::kInvalidParameter, "gnm_expected_ktt: need t >= 1, n >= 0");
  const std::int64_t pairs = n * (n - 1) / 2;
  const std::int64_t tt = static_cast<std::int64_t>(t) * t;
  if (2 * t > n) throw Error(Errc::kInvalidParameter, "gnm_expected_ktt: need 2t <= n");
  if (m < tt || m > pairs) {
    throw Error(Errc::kInvalidParameter, "gnm_expected_ktt: need t^2 <= m <= n(n-1)/2");
  }
  const auto tu = static_cast<std::uint64_t>(t);
  const BigInt placements = binomial(static_cast<std::uint64_t>(n), tu) *
                            binomial(static_cast<std::uint64_t>(n - t), tu);
  // C(N - t^2, m - t^2) / C(N, m) = prod_{i < t^2} (m - i) / (N - i).
  BigInt num = 1;
  BigInt den = 1;
  for (std::int64_t i = 0; i < tt; ++i) {
    num *= m - i;
    den *= pairs - i;
  }
  return BigRational(placements * num, 2 * den);
}

double gnm_expected_ktt(std::int64_t n, std::int64_t m, int t) {
  return gnm_expected_ktt_exact(n, m, t).convert_to<double>();
}

}  // namespace sslab
