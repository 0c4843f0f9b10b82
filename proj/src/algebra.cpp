#include <string>

#include "sslab/bigint.hpp"
#include "sslab/error.hpp"
#include "sslab/graph.hpp"

namespace sslab {

Graph tensor_power(const Graph& g, int k, std::uint64_t vertex_cap) {
  if (k < 1) throw Error(Errc::kInvalidParameter, "tensor_power: k must be >= 1");
  BigInt size = 1;
  for (int i = 0; i < k; ++i) size *= g.order();
  if (size > vertex_cap) {
    throw CapExceeded(size.str(), "tensor_power: |V|^k = " + size.str() +
                                      " exceeds cap " + std::to_string(vertex_cap));
  }
  const std::uint64_t n = g.order();
  const std::uint64_t total = size.convert_to<std::uint64_t>();
  // Build ordered-pair lists level by level: pairs (a, b) of tuples that are
  // adjacent coordinatewise. Each level multiplies in one more coordinate.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> arcs{{0, 0}};
  for (int level = 0; level < k; ++level) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> next;
    next.reserve(arcs.size() * g.big_m());
    for (auto [a, b] : arcs) {
      for (const Edge& e : g.edges()) {
        next.emplace_back(a * n + e.u, b * n + e.v);
        next.emplace_back(a * n + e.v, b * n + e.u);
      }
    }
    arcs.swap(next);
  }
  std::vector<Edge> es;
  es.reserve(arcs.size() / 2);
  for (auto [a, b] : arcs) {
    if (a < b) es.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
  }
  return Graph::from_edges(total, std::move(es));
}

Graph subdivide(const Graph& h) {
  const std::size_t n = h.order();
  std::vector<Edge> es;
  es.reserve(2 * h.edge_count());
  std::size_t mid = n;
  for (const Edge& e : h.edges()) {
    es.push_back({e.u, static_cast<Vertex>(mid)});
    es.push_back({e.v, static_cast<Vertex>(mid)});
    ++mid;
  }
  return Graph::from_edges(mid, std::move(es));
}

Graph combine(CombineOp op, const Graph& g1, const Graph& g2) {
  const std::size_t shift = g1.order();
  std::vector<Edge> es(g1.edges().begin(), g1.edges().end());
  for (const Edge& e : g2.edges()) {
    es.push_back({static_cast<Vertex>(e.u + shift), static_cast<Vertex>(e.v + shift)});
  }
  if (op == CombineOp::kJoin) {
    for (std::size_t u = 0; u < g1.order(); ++u) {
      for (std::size_t v = 0; v < g2.order(); ++v) {
        es.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v + shift)});
      }
    }
  }
  return Graph::from_edges(g1.order() + g2.order(), std::move(es));
}

}  // namespace sslab
