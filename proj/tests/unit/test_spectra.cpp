#include <cmath>
#include <numeric>

#include "doctest.h"
#include "oracles.hpp"
#include "sslab/error.hpp"
#include "sslab/spectra.hpp"

using namespace sslab;
using doctest::Approx;

TEST_CASE("perron on analytic graphs") {
  const PerronData c5 = perron(cycle_graph(5));
  CHECK(c5.lambda == Approx(2.0).epsilon(1e-10));
  for (double v : c5.x) CHECK(v == Approx(1.0 / std::sqrt(5.0)).epsilon(1e-8));

  const PerronData star = perron(star_graph(4));
  CHECK(star.lambda == Approx(2.0).epsilon(1e-10));
  CHECK(star.x[0] == Approx(1.0 / std::sqrt(2.0)).epsilon(1e-8));
  for (Vertex v = 1; v <= 4; ++v) CHECK(star.x[v] == Approx(1.0 / (2.0 * std::sqrt(2.0))).epsilon(1e-8));

  const Graph k3k2 = combine(CombineOp::kUnion, complete_graph(3), complete_graph(2));
  const PerronData pd = perron(k3k2);
  CHECK(pd.lambda == Approx(2.0).epsilon(1e-10));
  CHECK(pd.component_id == 0);
  CHECK(pd.x[3] == 0.0);
  CHECK(pd.x[4] == 0.0);
}

TEST_CASE("perron ties go to the smallest component") {
  const Graph two = combine(CombineOp::kUnion, cycle_graph(4), cycle_graph(5));
  const PerronData pd = perron(two);
  CHECK(pd.component_id == 0);
  for (Vertex v = 4; v < 9; ++v) CHECK(pd.x[v] == 0.0);
  const Graph lead_iso = combine(CombineOp::kUnion, Graph(2), complete_graph(3));
  CHECK(perron(lead_iso).x[0] == 0.0);
}

TEST_CASE("perron errors") {
  CHECK_THROWS_AS(perron(Graph(4)), Error);
  PerronOptions tight;
  tight.max_iter = 2;
  CHECK_THROWS_AS(perron(split_graph(3, 200), tight), NotConverged);
}

TEST_CASE("perron matches the dense eigensolver on 200 random graphs") {
  Rng rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = 2 + static_cast<std::int64_t>(uniform_below(rng, 11));
    const Graph g = oracle::random_graph(rng, n, 1, n * (n - 1) / 2);
    const PerronData pd = perron(g);
    CHECK(std::abs(pd.lambda - oracle::dense_lambda(g)) < 1e-8);
    double norm = 0.0;
    for (double v : pd.x) {
      CHECK(v >= 0.0);
      norm += v * v;
    }
    CHECK(std::abs(norm - 1.0) < 1e-12);
    const double m = static_cast<double>(g.edge_count());
    CHECK(pd.lambda >= 2.0 * m / static_cast<double>(n) - 1e-9);
    CHECK(pd.lambda <= std::sqrt(2.0 * m) + 1e-9);
    CHECK(pd.residual <= 1e-10);
  }
}

TEST_CASE("perron converges on a large star") {
  const PerronData pd = perron(star_graph(5000));
  CHECK(pd.lambda == Approx(std::sqrt(5000.0)).epsilon(1e-12));
}

TEST_CASE("split_lambda examples") {
  CHECK(split_lambda(1, 9) == Approx(3.0).epsilon(1e-14));
  CHECK(split_lambda(2, 7) == Approx(3.0).epsilon(1e-14));
  CHECK(split_lambda(3, 3) == Approx(2.0).epsilon(1e-14));
  CHECK_THROWS_AS(split_lambda(3, 2), Error);
}

TEST_CASE("split_lambda matches dense eigensolve of the explicit graph") {
  for (std::int64_t k = 1; k <= 6; ++k) {
    for (std::int64_t m = std::max<std::int64_t>(1, k * (k - 1) / 2); m <= k * (k - 1) / 2 + 30; ++m) {
      CHECK(std::abs(split_lambda(k, m) - oracle::dense_lambda(split_graph(k, m))) < 1e-10);
    }
  }
}

TEST_CASE("split_lambda asymptotics and increments") {
  for (std::int64_t k = 1; k <= 5; ++k) {
    double worst = 0.0;
    for (std::int64_t m = 1000; m <= 1000000; m = m * 3 / 2 + 7) {
      const double dev = std::abs(split_lambda(k, m) - std::sqrt(double(m)) - (k - 1) / 2.0);
      worst = std::max(worst, dev * std::sqrt(double(m)));
    }
    CHECK(std::isfinite(worst));
    CHECK(worst < 10.0 * k * k);
    for (std::int64_t m = k * (k - 1) / 2 + 2; m <= 5000; m += 37) {
      CHECK(split_lambda(k, m) - split_lambda(k, m - 1) >= split_increment_lb(k, m, 1) - 1e-12);
    }
  }
}

TEST_CASE("split_increment_lb") {
  CHECK(split_increment_lb(3, 50, 0) == 0.0);
  CHECK(split_increment_lb(2, 100, 4) == Approx(4.0 / 48.0));
  CHECK(split_lambda(2, 100) - split_lambda(2, 96) >= split_increment_lb(2, 100, 4));
  CHECK(split_increment_lb(1, 100, 10) == Approx(10.0 / 22.0));
  CHECK(std::sqrt(100.0) - std::sqrt(90.0) >= split_increment_lb(1, 100, 10));
  CHECK_THROWS_AS(split_increment_lb(2, 100, 100), Error);
}

TEST_CASE("opnorm examples") {
  const Graph k2 = complete_graph(2);
  const OpNormEstimate e = opnorm(k2, 4.0 / 3.0, 4.0);
  CHECK(e.value == Approx(1.0).epsilon(1e-9));
  CHECK(opnorm(star_graph(4), 2.0, 2.0).value == Approx(2.0).epsilon(1e-8));
  Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    const Graph g = oracle::random_graph(rng, 9, 3, 30);
    CHECK(opnorm(g, 2.0, 2.0).value == Approx(perron(g).lambda).epsilon(1e-7));
  }
}

TEST_CASE("opnorm witness reproduces the value") {
  Rng rng(8);
  for (int i = 0; i < 30; ++i) {
    const Graph g = oracle::random_graph(rng, 10, 5, 30);
    const double p = 1.2 + 0.8 * uniform_unit(rng);
    const double q = 2.0 + 3.0 * uniform_unit(rng);
    const OpNormEstimate e = opnorm(g, p, q);
    double np = 0.0;
    for (double v : e.witness) np += std::pow(std::abs(v), p);
    CHECK(std::pow(np, 1.0 / p) == Approx(1.0).epsilon(1e-9));
    CHECK(std::abs(opnorm_ratio(g, p, q, e.witness) - e.value) < 1e-9);
    CHECK(e.value <= std::sqrt(2.0 * g.edge_count()) * g.order());
  }
}

TEST_CASE("opnorm regime checks") {
  const Graph g = cycle_graph(5);
  CHECK_THROWS_AS(opnorm(g, 1.0, 2.0), Error);
  CHECK_THROWS_AS(opnorm(g, 2.5, 3.0), Error);
  CHECK_THROWS_AS(opnorm(g, 1.5, 1.8), Error);
}

TEST_CASE("top_singular examples") {
  const Graph k23 = complete_bipartite(2, 3);
  const std::vector<Vertex> rows{0, 1}, cols{2, 3, 4};
  const SingularTriple st = top_singular(rows, cols, k23);
  CHECK(st.sigma == Approx(std::sqrt(6.0)).epsilon(1e-10));
  for (double v : st.v_right) CHECK(v == Approx(1.0 / std::sqrt(3.0)).epsilon(1e-9));

  // rows (1,0,0) and (0,1,1)
  const Graph h = Graph::from_edges(5, {{0, 2}, {1, 3}, {1, 4}});
  const SingularTriple s2 = top_singular(rows, cols, h);
  CHECK(s2.sigma == Approx(std::sqrt(2.0)).epsilon(1e-10));
  CHECK(s2.v_right[0] == Approx(0.0).epsilon(1e-9));
  CHECK(s2.v_right[1] == Approx(1.0 / std::sqrt(2.0)).epsilon(1e-9));

  const std::vector<Vertex> a{0}, b{1};
  CHECK(top_singular(a, b, complete_graph(2)).sigma == Approx(1.0));
  CHECK_THROWS_AS(top_singular(std::vector<Vertex>{}, b, complete_graph(2)), Error);
}

TEST_CASE("top_singular matches the dense SVD") {
  Rng rng(11);
  for (int i = 0; i < 40; ++i) {
    const Graph g = oracle::random_graph(rng, 10, 5, 30);
    std::vector<Vertex> rows, cols;
    for (Vertex v = 0; v < 10; ++v) (uniform_below(rng, 2) ? rows : cols).push_back(v);
    if (rows.empty() || cols.empty()) continue;
    Eigen::MatrixXd m(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (std::size_t c = 0; c < cols.size(); ++c) m(r, c) = g.has_edge(rows[r], cols[c]) ? 1.0 : 0.0;
    }
    const double sigma = m.size() ? Eigen::JacobiSVD<Eigen::MatrixXd>(m).singularValues()(0) : 0.0;
    CHECK(std::abs(top_singular(rows, cols, g).sigma - sigma) < 1e-8);
  }
}

TEST_CASE("cut diagnostics examples") {
  const Graph star = star_graph(9);
  const PerronData pd = perron(star);
  const CutDiagnostics cd = cut_diagnostics(star, std::vector<Vertex>{0}, pd);
  CHECK(cd.lambda == Approx(3.0));
  CHECK(cd.lambda_u == 0.0);
  CHECK(cd.lambda_w == 0.0);
  CHECK(cd.rho == Approx(3.0));
  CHECK(cd.m_uw == 9);
  CHECK(cd.mu_u == Approx(0.5));
  CHECK(std::abs(cd.slack_b) < 1e-9);
  CHECK(cd.slack_c_applicable);
  CHECK(std::abs(cd.slack_c) < 1e-9);

  const Graph k4 = complete_graph(4);
  const CutDiagnostics c4 = cut_diagnostics(k4, std::vector<Vertex>{0, 1}, perron(k4));
  CHECK(c4.lambda == Approx(3.0));
  CHECK(c4.lambda_u == Approx(1.0));
  CHECK(c4.lambda_w == Approx(1.0));
  CHECK(c4.rho == Approx(2.0));
  CHECK(c4.m_uw == 4);
  CHECK(std::abs(c4.slack_b) < 1e-9);

  const Graph iso = combine(CombineOp::kUnion, complete_graph(3), Graph(1));
  const CutDiagnostics ci = cut_diagnostics(iso, std::vector<Vertex>{3}, perron(iso));
  CHECK(ci.rho == 0.0);
  CHECK(ci.mu_u == 0.0);
  CHECK(ci.slack_c_applicable);

  CHECK_THROWS_AS(cut_diagnostics(k4, std::vector<Vertex>{}, perron(k4)), Error);
  CHECK_THROWS_AS(cut_diagnostics(k4, std::vector<Vertex>{0, 1, 2, 3}, perron(k4)), Error);
}

TEST_CASE("cut diagnostics slacks are nonnegative on random pairs") {
  Rng rng(17);
  for (int i = 0; i < 200; ++i) {
    const auto n = 3 + static_cast<std::int64_t>(uniform_below(rng, 10));
    const Graph g = oracle::random_graph(rng, n, 1, n * (n - 1) / 2);
    std::vector<Vertex> u;
    for (Vertex v = 0; v < n; ++v) {
      if (uniform_below(rng, 2)) u.push_back(v);
    }
    if (u.empty() || u.size() == static_cast<std::size_t>(n)) continue;
    const CutDiagnostics cd = cut_diagnostics(g, u, perron(g));
    CHECK(cd.slack_a >= -1e-9);
    CHECK(cd.slack_b >= -1e-9);
    if (cd.slack_c_applicable) CHECK(cd.slack_c >= -1e-9);
    CHECK(cd.rho * cd.rho <= cd.m_uw + 1e-9);
  }
}
