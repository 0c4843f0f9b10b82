#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "sslab/error.hpp"
#include "sslab/sidorenko.hpp"

using namespace sslab;
using doctest::Approx;

TEST_CASE("certificate exponents") {
  const CertificateExponents c6 = exponents(cycle_graph(6));
  CHECK(c6.v == 6);
  CHECK(c6.e == 6);
  CHECK(c6.s == Approx(2.0));
  CHECK(*c6.s_prime == Approx(2.0));
  CHECK(*c6.alpha == Approx(1.0));

  const CertificateExponents k33 = exponents(complete_bipartite(3, 3));
  CHECK(k33.s == Approx(3.0));
  CHECK(*k33.s_prime == Approx(1.5));
  CHECK(*k33.alpha == Approx(0.75));
  CHECK(1.0 / k33.s + 1.0 / *k33.s_prime == Approx(1.0).epsilon(1e-12));

  const CertificateExponents c8 = exponents(subdivide(complete_bipartite(2, 2)));
  CHECK(c8.s == Approx(2.0));
  CHECK(*c8.s_prime == Approx(2.0));

  const CertificateExponents p3 = exponents(path_graph(3));
  CHECK(*p3.s_prime == Approx(4.0));
  CHECK(*p3.alpha == Approx(2.0));
  CHECK(p3.s == Approx(4.0 / 3.0));

  CHECK_THROWS_AS(exponents(complete_graph(3)), Error);
  CHECK_THROWS_AS(exponents(complete_graph(2)), Error);
  CHECK_THROWS_AS(exponents(Graph(3)), Error);
}

TEST_CASE("check_suite: C_4 in K_3") {
  const IneqReport r = check_suite(cycle_graph(4), complete_graph(3));
  CHECK(r.hom == 18);
  CHECK(static_cast<double>(r.rhs_i) == Approx(16.0));
  CHECK(static_cast<double>(r.rhs_ii) == Approx(16.0));
  CHECK(static_cast<double>(r.rhs_iii) == Approx(16.0));
  CHECK(r.holds_i);
  CHECK(r.holds_ii);
  CHECK(r.holds_iii);
  CHECK(*r.holds_cert);
  CHECK(*r.opnorm_value == Approx(2.0));
  CHECK_FALSE(r.any_failure());
}

TEST_CASE("check_suite: C_4 in C_4 and C_6 against tr A^6") {
  const IneqReport r = check_suite(cycle_graph(4), cycle_graph(4));
  CHECK(r.hom == 32);
  CHECK(r.holds_ii);
  Rng rng(6);
  for (int i = 0; i < 10; ++i) {
    const Graph g = oracle::random_graph(rng, 15, 10, 40);
    const IneqReport c6 = check_suite(cycle_graph(6), g);
    CHECK(c6.hom == closed_walk_count(g, 6).value);
    CHECK(static_cast<double>(c6.rhs_ii) == Approx(std::pow(c6.lambda, 6)).epsilon(1e-12));
  }
}

TEST_CASE("check_suite: forests gate the certificate") {
  const IneqReport r = check_suite(path_graph(3), complete_graph(4));
  CHECK_FALSE(r.spectral_forms_applicable);
  CHECK_FALSE(r.rhs_cert.has_value());
  CHECK_FALSE(r.chain_slack.has_value());
  CHECK(r.holds_i);
  CHECK_THROWS_AS(check_suite(complete_graph(3), complete_graph(4)), Error);
  CHECK_THROWS_AS(check_suite(cycle_graph(4), Graph(4)), Error);
}

TEST_CASE("check_suite implications hold on random hosts") {
  Rng rng(12);
  const Graph patterns[] = {cycle_graph(4), cycle_graph(6), complete_bipartite(2, 3)};
  for (int i = 0; i < 30; ++i) {
    const Graph g = oracle::random_graph(rng, 8, 3, 20);
    for (const Graph& h : patterns) {
      const IneqReport r = check_suite(h, g);
      if (r.holds_ii) CHECK(r.holds_i);
      if (r.holds_iii) CHECK(r.holds_i);
      CHECK(*r.chain_slack >= -1e-8);
      CHECK(r.hom == oracle::brute_hom(h, g, false));
    }
  }
}

TEST_CASE("P_3 counterexample") {
  const P3Report r9 = p3_counterexample(9);
  CHECK(r9.hom == 252);
  CHECK(r9.lambda == Approx(3.0));
  CHECK(r9.lambda_m == Approx(540.0));
  CHECK(r9.lambda2_n == Approx(1548.0));
  CHECK(r9.fails_lambda_m);
  CHECK(r9.fails_lambda2_n);

  const P3Report r2 = p3_counterexample(2);
  CHECK(r2.hom == 14);
  CHECK(r2.big_m == 12);
  CHECK(r2.lambda == Approx(std::sqrt(2.0)));
  CHECK(r2.fails_lambda_m);

  CHECK(p3_counterexample(4).lambda == Approx(2.0));

  double prev = 1.0;
  for (std::int64_t t = 2; t <= 50; ++t) {
    const P3Report r = p3_counterexample(t);
    CHECK(r.hom == 3 * t * t + t);
    CHECK(r.fails_lambda_m);
    CHECK(r.fails_lambda2_n);
    const double ratio = to_double(r.hom) / r.lambda_m;
    if (t > 9) CHECK(ratio < prev);
    prev = ratio;
  }
  CHECK_THROWS_AS(p3_counterexample(1), Error);
}

TEST_CASE("copy lower bounds") {
  CHECK(ktt_copy_lower(2, 10.0, 100, 20) == Approx(-4750.0));
  CHECK(ktt_copy_lower(2, 10.0, 100, 0) == Approx(1250.0));
  CHECK(ktt_copy_lower(3, 10.0, 100, 2) == Approx(1e6 / 576.0 - 15.0 / 72.0 * 32.0));
  CHECK(c2t_copy_lower(2, 10.0, 0) == Approx(1250.0));
  CHECK(c2t_copy_lower(2, 10.0, 20) == Approx(-4750.0));
  CHECK(c2t_copy_lower(3, 2.0, 2) == Approx(64.0 / 12.0 - 15.0 * 32.0 / 12.0));
  CHECK_THROWS_AS(ktt_copy_lower(1, 1.0, 1, 1), Error);
}

TEST_CASE("sharp constants") {
  const SharpConstants c2 = constants(2);
  CHECK(c2.b_t == 0.125);
  CHECK(c2.c_t == 0.125);
  const SharpConstants c3 = constants(3);
  CHECK(c3.b_t == Approx(1.0 / 576.0));
  CHECK(c3.c_t == Approx(1.0 / 27.0));
  CHECK(c3.ktt_alt == Approx(1.0 / 162.0));
  CHECK(c3.random_cycle == Approx(1.0 / 12.0));
  for (int t = 2; t <= 8; ++t) CHECK(constants(t).c_t <= constants(t).random_cycle);
}

TEST_CASE("expected K_{t,t} count in G(n,m)") {
  CHECK(gnm_expected_ktt_exact(4, 4, 2) == BigRational(1, 5));
  CHECK(gnm_expected_ktt(4, 6, 2) == Approx(3.0));
  CHECK(gnm_expected_ktt(6, 15, 3) == Approx(10.0));  // C(6,3)/2
  CHECK_THROWS_AS(gnm_expected_ktt(4, 7, 2), Error);
  CHECK_THROWS_AS(gnm_expected_ktt(3, 3, 2), Error);

  // Brute-force average over all 4-edge graphs on 4 vertices.
  std::vector<Edge> all;
  for (Vertex u = 0; u < 4; ++u) {
    for (Vertex v = u + 1; v < 4; ++v) all.push_back({u, v});
  }
  BigInt total = 0;
  int graphs = 0;
  for (unsigned mask = 0; mask < 64; ++mask) {
    if (__builtin_popcount(mask) != 4) continue;
    std::vector<Edge> es;
    for (unsigned i = 0; i < 6; ++i) {
      if (mask >> i & 1) es.push_back(all[i]);
    }
    total += count_ktt(Graph::from_edges(4, es), 2).value;
    ++graphs;
  }
  CHECK(BigRational(total, graphs) == gnm_expected_ktt_exact(4, 4, 2));
}
