#include <algorithm>
#include <string>
#include <unordered_set>

#include "sslab/error.hpp"
#include "sslab/graph.hpp"
#include "sslab/rng.hpp"

namespace sslab {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(Errc::kInvalidParameter, what);
}

Vertex vx(std::int64_t i) { return static_cast<Vertex>(i); }

}  // namespace

SplitSpec SplitSpec::make(std::int64_t k, std::int64_t m) {
  require(k >= 1, "split: clique size k must be >= 1");
  const std::int64_t clique_edges = k * (k - 1) / 2;
  require(m >= clique_edges, "split: need m >= k(k-1)/2 = " +
                                 std::to_string(clique_edges));
  SplitSpec s;
  s.k = k;
  s.m = m;
  s.q = (m - clique_edges) / k;
  s.r = (m - clique_edges) % k;
  return s;
}

std::optional<Family> parse_family(std::string_view name) {
  if (name == "split") return Family::kSplit;
  if (name == "star") return Family::kStar;
  if (name == "clique") return Family::kClique;
  if (name == "cycle") return Family::kCycle;
  if (name == "path") return Family::kPath;
  if (name == "complete-bipartite") return Family::kCompleteBipartite;
  if (name == "empty") return Family::kEmpty;
  return std::nullopt;
}

const char* family_name(Family f) {
  switch (f) {
    case Family::kSplit: return "split";
    case Family::kStar: return "star";
    case Family::kClique: return "clique";
    case Family::kCycle: return "cycle";
    case Family::kPath: return "path";
    case Family::kCompleteBipartite: return "complete-bipartite";
    case Family::kEmpty: return "empty";
  }
  return "?";
}

Graph split_graph(std::int64_t k, std::int64_t m) {
  const SplitSpec s = SplitSpec::make(k, m);
  std::vector<Edge> es;
  es.reserve(static_cast<std::size_t>(m));
  for (std::int64_t i = 0; i < k; ++i) {
    for (std::int64_t j = i + 1; j < k; ++j) es.push_back({vx(i), vx(j)});
  }
  std::int64_t next = k;
  if (s.r > 0) {
    for (std::int64_t i = 0; i < s.r; ++i) es.push_back({vx(i), vx(next)});
    ++next;
  }
  for (std::int64_t j = 0; j < s.q; ++j, ++next) {
    for (std::int64_t i = 0; i < k; ++i) es.push_back({vx(i), vx(next)});
  }
  Graph g = Graph::from_edges(static_cast<std::size_t>(next), std::move(es));
  if (static_cast<std::int64_t>(g.edge_count()) != m) {
    throw Error(Errc::kInvariant, "split: constructor produced wrong edge count");
  }
  return g;
}

Graph star_graph(std::int64_t leaves) {
  require(leaves >= 0, "star: leaves must be >= 0");
  std::vector<Edge> es;
  for (std::int64_t i = 1; i <= leaves; ++i) es.push_back({0, vx(i)});
  return Graph::from_edges(static_cast<std::size_t>(leaves + 1), std::move(es));
}

Graph complete_graph(std::int64_t n) {
  require(n >= 0, "clique: n must be >= 0");
  std::vector<Edge> es;
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = i + 1; j < n; ++j) es.push_back({vx(i), vx(j)});
  }
  return Graph::from_edges(static_cast<std::size_t>(n), std::move(es));
}

Graph cycle_graph(std::int64_t n) {
  require(n >= 3, "cycle: length must be >= 3");
  std::vector<Edge> es;
  for (std::int64_t i = 0; i < n; ++i) es.push_back({vx(i), vx((i + 1) % n)});
  return Graph::from_edges(static_cast<std::size_t>(n), std::move(es));
}

Graph path_graph(std::int64_t n) {
  require(n >= 1, "path: needs at least one vertex");
  std::vector<Edge> es;
  for (std::int64_t i = 0; i + 1 < n; ++i) es.push_back({vx(i), vx(i + 1)});
  return Graph::from_edges(static_cast<std::size_t>(n), std::move(es));
}

Graph complete_bipartite(std::int64_t a, std::int64_t b) {
  require(a >= 0 && b >= 0, "complete-bipartite: sides must be >= 0");
  std::vector<Edge> es;
  for (std::int64_t i = 0; i < a; ++i) {
    for (std::int64_t j = 0; j < b; ++j) es.push_back({vx(i), vx(a + j)});
  }
  return Graph::from_edges(static_cast<std::size_t>(a + b), std::move(es));
}

Graph make_family(const FamilyRequest& req) {
  switch (req.family) {
    case Family::kSplit: return split_graph(req.k, req.m);
    case Family::kStar: return star_graph(req.n);
    case Family::kClique: return complete_graph(req.n);
    case Family::kCycle: return cycle_graph(req.n);
    case Family::kPath: return path_graph(req.n);
    case Family::kCompleteBipartite: return complete_bipartite(req.a, req.b);
    case Family::kEmpty:
      require(req.n >= 0, "empty: n must be >= 0");
      return Graph(static_cast<std::size_t>(req.n));
  }
  throw Error(Errc::kInvalidParameter, "unknown family");
}

Graph sample_gnm(std::int64_t n, std::int64_t m, std::uint64_t seed) {
  require(n >= 0, "gnm: n must be >= 0");
  const std::uint64_t pairs =
      static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(std::max<std::int64_t>(n - 1, 0)) / 2;
  require(m >= 0 && static_cast<std::uint64_t>(m) <= pairs,
          "gnm: need 0 <= m <= n(n-1)/2 = " + std::to_string(pairs));
  Rng rng(seed);
  // Floyd: for j in [N-m, N), draw t in [0, j]; take j if t already chosen.
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(static_cast<std::size_t>(m) * 2);
  std::vector<std::uint64_t> ranks;
  ranks.reserve(static_cast<std::size_t>(m));
  for (std::uint64_t j = pairs - static_cast<std::uint64_t>(m); j < pairs; ++j) {
    const std::uint64_t t = uniform_below(rng, j + 1);
    const std::uint64_t pick = chosen.count(t) ? j : t;
    chosen.insert(pick);
    ranks.push_back(pick);
  }
  std::sort(ranks.begin(), ranks.end());
  // Unrank in lexicographic pair order with a single sweep.
  std::vector<Edge> es;
  es.reserve(ranks.size());
  std::uint64_t row_start = 0;
  std::int64_t u = 0;
  for (std::uint64_t rank : ranks) {
    while (rank >= row_start + static_cast<std::uint64_t>(n - 1 - u)) {
      row_start += static_cast<std::uint64_t>(n - 1 - u);
      ++u;
    }
    const std::uint64_t v = static_cast<std::uint64_t>(u) + 1 + (rank - row_start);
    es.push_back({vx(u), static_cast<Vertex>(v)});
  }
  return Graph::from_edges(static_cast<std::size_t>(n), std::move(es));
}

}  // namespace sslab
