#include "doctest.h"
#include "oracles.hpp"
#include "sslab/error.hpp"
#include "sslab/homcounts.hpp"

using namespace sslab;

TEST_CASE("hom_count examples") {
  CHECK(hom_count(complete_graph(2), complete_graph(3)).value == 6);
  CHECK(hom_count(cycle_graph(4), complete_graph(3)).value == 18);
  CHECK(hom_count(path_graph(3), star_graph(9)).value == 90);
  CHECK(hom_count(cycle_graph(4), complete_graph(3)).method == CountMethod::kBacktracking);
}

TEST_CASE("inj_count and aut_order examples") {
  CHECK(inj_count(cycle_graph(4), complete_graph(3)).value == 0);
  CHECK(inj_count(complete_graph(2), complete_graph(3)).value == 6);
  CHECK(inj_count(cycle_graph(4), complete_graph(4)).value == 24);
  CHECK(aut_order(complete_bipartite(2, 2)) == 8);
  CHECK(aut_order(cycle_graph(6)) == 12);
  CHECK(aut_order(complete_graph(2)) == 2);
  CHECK(aut_order(Graph(3)) == 6);
}

TEST_CASE("pattern size limit") {
  CHECK_THROWS_AS(hom_count(path_graph(11), complete_graph(3)), Error);
  CountOptions big;
  big.max_pattern = 12;
  CHECK(hom_count(path_graph(11), complete_graph(2), big).value == 2);
}

TEST_CASE("hom and inj agree with brute force on random graphs") {
  Rng rng(21);
  const Graph patterns[] = {path_graph(3), cycle_graph(4), complete_bipartite(2, 3), cycle_graph(5),
                            star_graph(3), combine(CombineOp::kUnion, complete_graph(2), path_graph(2))};
  for (int trial = 0; trial < 30; ++trial) {
    const auto n = 2 + static_cast<std::int64_t>(uniform_below(rng, 5));
    const Graph g = oracle::random_graph(rng, n, 0, n * (n - 1) / 2);
    for (const Graph& h : patterns) {
      CHECK(hom_count(h, g).value == oracle::brute_hom(h, g, false));
      CHECK(inj_count(h, g).value == oracle::brute_hom(h, g, true));
    }
  }
}

TEST_CASE("hom_count of K_2 is M and adding an edge never decreases a count") {
  Rng rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = oracle::random_graph(rng, 8, 1, 20);
    CHECK(hom_count(complete_graph(2), g).value == g.big_m());
    for (Vertex u = 0; u < 8; ++u) {
      for (Vertex v = u + 1; v < 8; ++v) {
        if (g.has_edge(u, v)) continue;
        const Graph g2 = g.with_edge({u, v});
        CHECK(hom_count(cycle_graph(4), g2).value >= hom_count(cycle_graph(4), g).value);
        goto next;
      }
    }
  next:;
  }
}

TEST_CASE("closed walks") {
  CHECK(closed_walk_count(complete_graph(2), 4).value == 2);
  CHECK(closed_walk_count(complete_graph(3), 4).value == 18);
  CHECK(closed_walk_count(complete_graph(3), 4).method == CountMethod::kTracePower);
  Rng rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = oracle::random_graph(rng, 12, 0, 40);
    CHECK(closed_walk_count(g, 2).value == g.big_m());
    CHECK(closed_walk_count(g, 1).value == 0);
  }
  // A large count that needs the arbitrary-precision path.
  const BigInt big = closed_walk_count(complete_graph(40), 30).value;
  BigInt expect = 1;
  BigInt n1 = 39;
  for (int i = 0; i < 30; ++i) expect *= n1;  // 39^30 + 39 * 1
  expect += 39;
  CHECK(big == expect);
}

TEST_CASE("hom(C_2t) equals tr A^2t on 50 random small graphs") {
  Rng rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    const auto n = 2 + static_cast<std::int64_t>(uniform_below(rng, 6));
    const Graph g = oracle::random_graph(rng, n, 0, n * (n - 1) / 2);
    for (int t = 2; t <= 3; ++t) {
      CHECK(hom_count(cycle_graph(2 * t), g).value == closed_walk_count(g, 2 * t).value);
    }
  }
}

TEST_CASE("copy counters examples") {
  CHECK(count_ktt(complete_graph(4), 2).value == 3);
  CHECK(count_ktt(complete_bipartite(3, 3), 3).value == 1);
  CHECK(count_ktt(split_graph(2, 7), 2).value == 3);
  CHECK(count_ktt(complete_graph(4), 2).method == CountMethod::kCodegree);
  CHECK(count_c2t(complete_graph(4), 3).value == 0);
  CHECK(count_c2t(split_graph(2, 7), 2).value == 3);
  CHECK(count_c2t(complete_graph(4), 2).value == 3);
  CHECK(count_c2t(complete_graph(6), 3).method == CountMethod::kCycleEnum);
  CHECK(count_c2t(complete_graph(6), 3).value == 60);  // 6!/12
  CHECK(count_c2t(split_graph(2, 1001), 2).value == 124750);
}

TEST_CASE("copy counters agree with inj/aut on all small random graphs") {
  Rng rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    const auto n = 2 + static_cast<std::int64_t>(uniform_below(rng, 7));
    const Graph g = oracle::random_graph(rng, n, 0, n * (n - 1) / 2);
    for (int t = 2; t <= 3; ++t) {
      const BigInt ktt = inj_count(complete_bipartite(t, t), g).value / aut_order(complete_bipartite(t, t));
      const BigInt c2t = inj_count(cycle_graph(2 * t), g).value / aut_order(cycle_graph(2 * t));
      CHECK(count_ktt(g, t).value == ktt);
      CHECK(count_c2t(g, t).value == c2t);
    }
  }
}

TEST_CASE("copy counters agree on larger graphs and for t = 4") {
  Rng rng(202);
  for (int trial = 0; trial < 6; ++trial) {
    const Graph g = oracle::random_graph(rng, 9, 18, 30);
    CHECK(count_c2t(g, 4).value == inj_count(cycle_graph(8), g).value / 16);
    CHECK(count_ktt(g, 4).value == inj_count(complete_bipartite(4, 4), g).value / 1152);
  }
}

TEST_CASE("copy counters are independent of the thread count") {
  Rng rng(303);
  const Graph g = oracle::random_graph(rng, 60, 600, 900);
  CountOptions one, four;
  one.threads = 1;
  four.threads = 4;
  CHECK(count_ktt(g, 3, one).value == count_ktt(g, 3, four).value);
  CHECK(count_c2t(g, 3, one).value == count_c2t(g, 3, four).value);
  CHECK(hom_count(cycle_graph(6), g, one).value == hom_count(cycle_graph(6), g, four).value);
}

TEST_CASE("copy counters enforce the work budget") {
  CountOptions tight;
  tight.budget = 100;
  try {
    count_ktt(complete_graph(30), 3, tight);
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded& e) {
    CHECK(e.estimated_work() == doctest::Approx(subset_work(30, 3)));
  }
  CHECK_THROWS_AS(count_c2t(complete_graph(30), 3, tight), BudgetExceeded);
  CHECK(subset_work(10, 2) == 45.0);
  CHECK_THROWS_AS(count_ktt(complete_graph(5), 1), Error);
}
