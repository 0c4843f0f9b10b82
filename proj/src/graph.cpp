#include "sslab/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "sslab/error.hpp"

namespace sslab {

Graph::Graph(std::size_t n) : n_(n), offsets_(n + 1, 0) {}

Graph Graph::from_edges(std::size_t n, std::vector<Edge> edges) {
  for (Edge& e : edges) {
    if (e.u == e.v) {
      throw Error(Errc::kInvalidParameter,
                  "loop at vertex " + std::to_string(e.u));
    }
    if (e.u >= n || e.v >= n) {
      throw Error(Errc::kInvalidParameter,
                  "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                      "} has an endpoint >= n=" + std::to_string(n));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end()) {
    throw Error(Errc::kInvalidParameter,
                "duplicate edge {" + std::to_string(dup->u) + "," +
                    std::to_string(dup->v) + "}");
  }
  Graph g;
  g.n_ = n;
  g.edges_ = std::move(edges);
  g.build_adjacency();
  return g;
}

void Graph::build_adjacency() {
  offsets_.assign(n_ + 1, 0);
  for (const Edge& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (std::size_t i = 0; i < n_; ++i) offsets_[i + 1] += offsets_[i];
  adj_.assign(offsets_[n_], 0);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  // Edges are sorted, so each list is filled in increasing order except for
  // the lower endpoints; sort afterwards.
  for (const Edge& e : edges_) {
    adj_[fill[e.u]++] = e.v;
    adj_[fill[e.v]++] = e.u;
  }
  for (std::size_t v = 0; v < n_; ++v) {
    std::sort(adj_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
              adj_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]));
  }
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (std::size_t v = 0; v < n_; ++v) {
    best = std::max(best, degree(static_cast<Vertex>(v)));
  }
  return best;
}

std::vector<std::size_t> Graph::degree_sequence() const {
  std::vector<std::size_t> seq(n_);
  for (std::size_t v = 0; v < n_; ++v) seq[v] = degree(static_cast<Vertex>(v));
  std::sort(seq.rbegin(), seq.rend());
  return seq;
}

bool Graph::has_edge(Vertex u, Vertex v) const noexcept {
  if (u >= n_ || v >= n_) return false;
  if (degree(u) > degree(v)) std::swap(u, v);
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::vector<Vertex>> Graph::components() const {
  std::vector<std::vector<Vertex>> out;
  std::vector<char> seen(n_, 0);
  std::vector<Vertex> stack;
  for (std::size_t s = 0; s < n_; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    seen[s] = 1;
    stack.push_back(static_cast<Vertex>(s));
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool Graph::is_bipartite() const {
  std::vector<int> side(n_, -1);
  std::queue<Vertex> q;
  for (std::size_t s = 0; s < n_; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    q.push(static_cast<Vertex>(s));
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      for (Vertex w : neighbors(v)) {
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          q.push(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool Graph::is_regular() const {
  for (std::size_t v = 1; v < n_; ++v) {
    if (degree(static_cast<Vertex>(v)) != degree(0)) return false;
  }
  return true;
}

Graph Graph::induced(std::span<const Vertex> vs) const {
  std::vector<std::int64_t> local(n_, -1);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i] >= n_ || local[vs[i]] >= 0) {
      throw Error(Errc::kInvalidParameter, "induced: bad vertex list");
    }
    local[vs[i]] = static_cast<std::int64_t>(i);
  }
  std::vector<Edge> es;
  for (const Edge& e : edges_) {
    if (local[e.u] >= 0 && local[e.v] >= 0) {
      es.push_back({static_cast<Vertex>(local[e.u]),
                    static_cast<Vertex>(local[e.v])});
    }
  }
  return from_edges(vs.size(), std::move(es));
}

Graph Graph::without_edge(Edge e) const {
  if (e.u > e.v) std::swap(e.u, e.v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) {
    throw Error(Errc::kInvalidParameter, "without_edge: edge not present");
  }
  Graph g;
  g.n_ = n_;
  g.edges_.reserve(edges_.size() - 1);
  g.edges_.insert(g.edges_.end(), edges_.begin(), it);
  g.edges_.insert(g.edges_.end(), it + 1, edges_.end());
  g.build_adjacency();
  return g;
}

Graph Graph::with_edge(Edge e) const {
  std::vector<Edge> es(edges_.begin(), edges_.end());
  es.push_back(e);
  return from_edges(n_, std::move(es));
}

}  // namespace sslab
