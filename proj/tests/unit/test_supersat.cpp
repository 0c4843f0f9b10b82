#include <algorithm>
#include <cmath>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "sslab/error.hpp"
#include "sslab/supersat.hpp"

using namespace sslab;
using doctest::Approx;

TEST_CASE("heavy_prune: star needs no deletions") {
  const PruneTrace tr = heavy_prune(star_graph(100), 2, 1.0 / 32.0);
  CHECK(tr.steps.empty());
  CHECK(tr.m_final == 100);
  CHECK(tr.alpha == 1.0);
  CHECK(tr.lambda_final == Approx(10.0));
}

TEST_CASE("heavy_prune: K_4 plus K_2 loses the K_2 edge") {
  const Graph g = combine(CombineOp::kUnion, complete_graph(4), complete_graph(2));
  const PruneTrace tr = heavy_prune(g, 2, 1.0 / 32.0);
  REQUIRE(tr.steps.size() == 1);
  CHECK(tr.steps[0].deleted == Edge{4, 5});
  CHECK(tr.steps[0].product == 0.0);
  CHECK(tr.final_graph.edge_count() == 6);
  CHECK(tr.final_graph.order() == 6);
}

TEST_CASE("heavy_prune: regular graphs are already heavy") {
  CHECK(heavy_prune(cycle_graph(8), 2, 1.0 / 32.0).steps.empty());
  CHECK(heavy_prune(complete_graph(7), 3, default_eta(3)).steps.empty());
}

TEST_CASE("heavy_prune: parameter checks and emptying") {
  CHECK_THROWS_AS(heavy_prune(star_graph(3), 1, 0.1), Error);
  CHECK_THROWS_AS(heavy_prune(star_graph(3), 2, 0.25), Error);
  CHECK_THROWS_AS(heavy_prune(Graph(3), 2, 0.1), Error);
  // A perfect matching: the first component keeps all Perron mass, so the
  // others are pruned away edge by edge.
  std::vector<Edge> es;
  for (Vertex i = 0; i < 5; ++i) es.push_back({2 * i, 2 * i + 1});
  const PruneTrace tr = heavy_prune(Graph::from_edges(10, es), 2, 0.2);
  CHECK(tr.steps.size() == 4);
  CHECK(tr.m_final == 1);
  CHECK(tr.steps[0].deleted == Edge{2, 3});
}

TEST_CASE("heavy_prune invariants on perturbed split graphs") {
  Rng rng(55);
  for (int trial = 0; trial < 40; ++trial) {
    const auto m = 30 + static_cast<std::int64_t>(uniform_below(rng, 200));
    Graph g = split_graph(2, m);
    const auto q = static_cast<std::uint64_t>(g.order() - 2);
    for (int extra = 0; extra < 3; ++extra) {
      const auto u = 2 + static_cast<Vertex>(uniform_below(rng, q));
      const auto v = 2 + static_cast<Vertex>(uniform_below(rng, q));
      if (u != v && !g.has_edge(u, v)) g = g.with_edge({u, v});
    }
    // A pendant path hanging off the last vertex is light.
    const auto n = static_cast<Vertex>(g.order());
    std::vector<Edge> es(g.edges().begin(), g.edges().end());
    es.push_back({n - 1, n});
    es.push_back({n, n + 1});
    g = Graph::from_edges(n + 2, es);
    REQUIRE(perron(g).lambda > split_lambda(1, static_cast<std::int64_t>(g.edge_count())));
    const double eta = default_eta(2);
    const PruneTrace tr = heavy_prune(g, 2, eta);
    CHECK_FALSE(tr.steps.empty());
    for (std::size_t i = 0; i < tr.steps.size(); ++i) {
      const PruneStep& s = tr.steps[i];
      CHECK(s.product < s.threshold);
      const double next = i + 1 < tr.steps.size() ? tr.steps[i + 1].lambda_i : tr.lambda_final;
      CHECK(s.lambda_i - next <= 2.0 * eta / std::sqrt(double(s.m_i)) + 1e-9);
      if (i + 1 < tr.steps.size()) CHECK(*tr.steps[i + 1].delta > *s.delta);
    }
    CHECK(light_edges(tr.final_graph, *tr.final_perron, eta).empty());
    CHECK(tr.lambda_final > split_lambda(1, static_cast<std::int64_t>(tr.m_final)));
    CHECK(tr.m_final >= tr.c_eta * tr.m_initial);
    const double a = tr.alpha;
    CHECK(*tr.gap_ratio >= 1.0 + (1.0 - 4.0 * eta) * (1.0 / std::sqrt(a) - 1.0) - 1e-9);
  }
}

TEST_CASE("localization parameter and delocalization check") {
  const PerronData k4 = perron(complete_graph(4));
  CHECK(localization_g(k4, 6) == Approx(0.5 * std::pow(6.0, 0.25)));
  const PerronData star = perron(star_graph(16));
  CHECK(localization_g(star, 16) == Approx(std::sqrt(2.0)));
  const PerronData c16 = perron(cycle_graph(16));
  CHECK(localization_g(c16, 16) == Approx(0.5));
  CHECK_THROWS_AS(localization_g(c16, 0), Error);

  const PerronData k30 = perron(complete_graph(30));
  CHECK(delocalization_check(k30, 435, 1.0 / 3.0));
  CHECK(delocalization_check(perron(complete_bipartite(4, 4)), 16, 0.1));
  CHECK_THROWS_AS(delocalization_check(k30, 435, 0.5), Error);

  Rng rng(66);
  for (int i = 0; i < 500; ++i) {
    const auto n = 4 + static_cast<std::int64_t>(uniform_below(rng, 20));
    const Graph g = oracle::random_graph(rng, n, 1, n * (n - 1) / 2);
    const PerronData pd = perron(g);
    CHECK(delocalization_check(pd, g.edge_count(), 1.0 / 3.0));
  }
}

TEST_CASE("verify_t examples") {
  const Graph s = split_graph(3, 40);
  std::vector<Vertex> a{0, 1, 2}, c, d;
  for (Vertex v = 3; v < s.order(); ++v) d.push_back(v);
  const TFlags f = verify_t(s, a, c, d);
  CHECK((f.t1 && f.t2 && f.t3));

  const Graph k3 = complete_graph(3);
  const TFlags fk = verify_t(k3, std::vector<Vertex>{}, std::vector<Vertex>{}, std::vector<Vertex>{0, 1, 2});
  CHECK_FALSE(fk.t1);
  CHECK(fk.t2);
  CHECK_FALSE(fk.t3);

  const Graph c4 = cycle_graph(4);
  const TFlags f4 = verify_t(c4, std::vector<Vertex>{0, 2}, std::vector<Vertex>{}, std::vector<Vertex>{1, 3});
  CHECK((f4.t1 && f4.t2 && f4.t3));

  CHECK_THROWS_AS(verify_t(c4, std::vector<Vertex>{0, 1}, std::vector<Vertex>{1}, std::vector<Vertex>{2, 3}), Error);
  CHECK_THROWS_AS(verify_t(c4, std::vector<Vertex>{0}, std::vector<Vertex>{}, std::vector<Vertex>{2, 3}), Error);
}

TEST_CASE("acd_partition on a localized split graph") {
  // eta = 1e-3 leaves K = 17, where I = [4,5] sits below ell = 5; 1e-4 gives K = 20.
  const Graph g = split_graph(2, 20000);
  const double eta = 1e-4;
  const PruneTrace tr = heavy_prune(g, 3, eta);
  CHECK(tr.steps.empty());
  const AcdPartition p = acd_partition(tr.final_graph, eta);
  CHECK((p.t_flags.t1 && p.t_flags.t2 && p.t_flags.t3));
  CHECK(p.sr_ok);
  CHECK(p.sr < p.sr_bound);
  CHECK(p.s_threshold > p.r_threshold);
  CHECK(p.i_lo <= p.i_star);
  CHECK(p.i_star <= p.i_hi);
  CHECK(p.i_lo >= p.ell);
  CHECK(std::find(p.a.begin(), p.a.end(), 0) != p.a.end());
  CHECK(std::find(p.a.begin(), p.a.end(), 1) != p.a.end());
  CHECK(p.levels == 20);
  // Independent coordinates sit near 2 L / lambda, strictly between the thresholds.
  CHECK(std::find(p.c.begin(), p.c.end(), 5000) != p.c.end());
  CHECK(p.d.empty());
  CHECK(p.e_core == 0);
  CHECK(p.e_ac == 19999);
  // Level sets are exact.
  const PerronData pd = perron(tr.final_graph);
  for (Vertex v : p.a) CHECK(pd.x[v] > p.s_threshold);
  for (Vertex v : p.c) CHECK((pd.x[v] <= p.s_threshold && pd.x[v] > p.r_threshold));
  for (Vertex v : p.d) CHECK(pd.x[v] <= p.r_threshold);
  CHECK(p.s_sums.size() == static_cast<std::size_t>(p.i_hi - p.i_lo + 1));
  CHECK(p.s_sums[static_cast<std::size_t>(p.i_star - p.i_lo)] ==
        *std::min_element(p.s_sums.begin(), p.s_sums.end()));
}

TEST_CASE("acd_partition errors") {
  try {
    acd_partition(complete_graph(8), 0.05);
    FAIL("expected TooDelocalized");
  } catch (const TooDelocalized& e) {
    // L = 8^{-1/2}, m = 28: g~ = 3.64..., so K = ceil(2 log2 g~) + 1 = 5.
    CHECK(e.levels() == 5);
  }
  const Graph g = combine(CombineOp::kUnion, complete_graph(4), complete_graph(2));
  try {
    acd_partition(g, 0.05);
    FAIL("expected NotHeavy");
  } catch (const NotHeavy& e) {
    REQUIRE(e.edges().size() == 1);
    CHECK(e.edges()[0] == std::pair<std::uint32_t, std::uint32_t>{4, 5});
  }
  CHECK_THROWS_AS(acd_partition(Graph(3), 0.05), Error);
}

TEST_CASE("aligned rows examples") {
  const Graph k25 = complete_bipartite(2, 5);
  const std::vector<Vertex> a{0, 1}, d{2, 3, 4, 5, 6};
  CHECK(aligned_rows(k25, a, d, 0.01).rows == a);

  const Graph h = Graph::from_edges(5, {{0, 2}, {1, 3}, {1, 4}});
  const std::vector<Vertex> cols{2, 3, 4};
  CHECK(aligned_rows(h, a, cols, 0.1).rows == std::vector<Vertex>{1});
  CHECK(aligned_rows(h, a, cols, 1.0).rows == a);

  const Graph none = Graph::from_edges(4, {{0, 1}, {2, 3}});
  CHECK_THROWS_AS(aligned_rows(none, std::vector<Vertex>{0}, std::vector<Vertex>{2}, 0.5), Error);
}

TEST_CASE("row cover dichotomy on K_{2,5}") {
  const Graph k25 = complete_bipartite(2, 5);
  const std::vector<Vertex> a{0, 1}, d{2, 3, 4, 5, 6};
  const RowCoverOutcome cover = row_cover_analyze(k25, a, d, 3);
  CHECK(cover.variant == RowCoverVariant::kCover);
  CHECK(cover.r == a);
  CHECK(cover.b == d);
  CHECK(cover.e_rest_to_b == 0);
  CHECK(cover.e_r_outside_b == 0);
  CHECK(cover.epsilon == 0.0);

  const RowCoverOutcome many = row_cover_analyze(k25, a, d, 2);
  CHECK(many.variant == RowCoverVariant::kManyCopies);
  CHECK(many.d_star == 5);
  CHECK(many.floor_l == 5);
  CHECK(many.copy_bound == 10);
  CHECK(many.copy_bound == count_ktt(k25, 2).value);
}

TEST_CASE("row cover on a perfect matching") {
  std::vector<Edge> es;
  for (Vertex i = 0; i < 4; ++i) es.push_back({i, i + 4});
  const Graph g = Graph::from_edges(8, es);
  const std::vector<Vertex> a{0, 1, 2, 3}, d{4, 5, 6, 7};
  const RowCoverOutcome rc = row_cover_analyze(g, a, d, 2);
  CHECK(rc.rho == Approx(1.0));
  CHECK(rc.epsilon == Approx(0.75));
  CHECK(rc.theta == Approx(std::sqrt(0.75)));
  CHECK(rc.r == a);
  CHECK(rc.variant == RowCoverVariant::kManyCopies);
  CHECK(rc.floor_l == -1);  // floor((1 - 2 sqrt(3/4)) * 1)
  CHECK(rc.copy_bound == 0);
  CHECK(rc.e_outside_r <= rc.theta * rc.e_ad + 1e-9);
  CHECK_THROWS_AS(row_cover_analyze(g, std::vector<Vertex>{0}, std::vector<Vertex>{5}, 2), Error);
}

TEST_CASE("row cover bound on random bipartite blocks") {
  Rng rng(88);
  for (int i = 0; i < 50; ++i) {
    const Graph g = oracle::random_graph(rng, 14, 5, 40);
    std::vector<Vertex> a, d;
    for (Vertex v = 0; v < 14; ++v) (v < 5 ? a : d).push_back(v);
    std::uint64_t e = 0;
    for (const Edge& ed : g.edges()) e += (ed.u < 5) != (ed.v < 5);
    if (e == 0) continue;
    for (int t = 2; t <= 3; ++t) {
      const RowCoverOutcome rc = row_cover_analyze(g, a, d, t);
      CHECK_FALSE(rc.r.empty());
      if (!rc.degenerate) CHECK(rc.e_outside_r <= rc.theta * rc.e_ad + 1e-9);
      if (rc.variant == RowCoverVariant::kCover) {
        for (Vertex r : rc.r) {
          for (Vertex b : rc.b) CHECK(g.has_edge(r, b));
        }
      }
    }
  }
}

TEST_CASE("pipeline examples") {
  const PipelineReport star = supersat_count(split_graph(1, 100), 2, Pattern::kKtt);
  CHECK_FALSE(star.above_threshold);
  CHECK(star.branch == Branch::kBelowThreshold);

  const PipelineReport kk = supersat_count(complete_bipartite(20, 20), 2, Pattern::kKtt);
  CHECK_FALSE(kk.above_threshold);

  const PipelineReport k30 = supersat_count(complete_graph(30), 2, Pattern::kC2t);
  CHECK(k30.above_threshold);
  CHECK(k30.count == 82215);
  CHECK(k30.count_over_mt == Approx(82215.0 / (435.0 * 435.0)));
  CHECK(k30.count_over_mt >= 0.125);
  CHECK(k30.branch == Branch::kDelocalized);
  CHECK(*k30.h_count == 82215);

  const PipelineReport s3 = supersat_count(split_graph(3, 3000), 3, Pattern::kC2t);
  CHECK(s3.count == 994010994);
  CHECK(std::abs(s3.count_over_mt * 27.0 - 1.0) < 0.15);

  for (std::int64_t n = 10; n <= 60; n += 5) {
    const PipelineReport r = supersat_count(complete_graph(n), 2, Pattern::kKtt);
    CHECK(r.count_over_mt >= 0.125);
  }
  CHECK_THROWS_AS(supersat_count(Graph(3), 2, Pattern::kKtt), Error);
}

TEST_CASE("pipeline reaches the localized branches") {
  PipelineConfig cfg;
  cfg.eta = 1e-4;
  cfg.g_cut = 2.0;
  // The extremal split graph itself sits exactly on the threshold.
  const PipelineReport extremal = supersat_count(split_graph(2, 20000), 3, Pattern::kKtt, cfg);
  CHECK_FALSE(extremal.above_threshold);
  CHECK(extremal.branch == Branch::kBelowThreshold);

  // A larger clique lifts lambda past the t = 3 threshold.
  const Graph perturbed = split_graph(3, 2000).with_edge({3, 4});
  const PipelineReport sparse = supersat_count(perturbed, 3, Pattern::kKtt, cfg);
  CHECK(sparse.above_threshold);
  REQUIRE(sparse.g_value.has_value());
  CHECK(*sparse.g_value > cfg.g_cut);
  CHECK(sparse.branch == Branch::kSparseCore);
  REQUIRE(sparse.acd.has_value());
  CHECK((sparse.acd->t_flags.t1 && sparse.acd->t_flags.t2 && sparse.acd->t_flags.t3));
  const std::set<Vertex> in_c(sparse.acd->c.begin(), sparse.acd->c.end());
  std::uint64_t e_c = 0;
  for (const Edge& e : perturbed.edges()) e_c += in_c.count(e.u) && in_c.count(e.v);
  CHECK(sparse.acd->e_core == e_c);
  CHECK(sparse.row_cover.has_value() == (sparse.acd->e_ad > 0));
  const std::size_t a_size = sparse.acd->a.size();
  CHECK(sparse.core_cut.has_value() == (a_size > 0 && a_size < perturbed.order()));
  CHECK(sparse.count == count_ktt(perturbed, 3).value);

  PipelineConfig loose;
  loose.g_cut = 0.0;
  const PipelineReport k = supersat_count(complete_graph(12), 2, Pattern::kKtt, loose);
  CHECK(k.branch == Branch::kAcdUnavailable);
  CHECK(k.acd_error.has_value());
}

TEST_CASE("pattern and branch names") {
  CHECK(parse_pattern("ktt") == Pattern::kKtt);
  CHECK(parse_pattern("c2t") == Pattern::kC2t);
  CHECK_FALSE(parse_pattern("k33").has_value());
  CHECK(std::string(branch_name(Branch::kSparseCore)) == "sparse-core");
  CHECK(sharp_constant(3, Pattern::kC2t) == Approx(1.0 / 27.0));
  CHECK(above_split_threshold(10.0 + 1e-6, 10.0));
  CHECK_FALSE(above_split_threshold(10.0 + 1e-9, 10.0));
}
