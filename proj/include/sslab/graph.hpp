#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sslab {

using Vertex = std::uint32_t;

/// Unordered edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Immutable after construction. Edges are kept sorted lexicographically and
/// the adjacency is stored in CSR form with sorted neighbor lists.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(std::size_t n);

  /// Validating constructor. Endpoints may be given in either order; loops,
  /// duplicates and out-of-range endpoints raise kInvalidParameter.
  static Graph from_edges(std::size_t n, std::vector<Edge> edges);

  std::size_t order() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  /// M(G) = 2 e(G), the number of ordered adjacent pairs.
  std::uint64_t big_m() const noexcept { return 2 * edges_.size(); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const noexcept {
    return offsets_[v + 1] - offsets_[v];
  }
  std::size_t max_degree() const noexcept;
  std::vector<std::size_t> degree_sequence() const;  // sorted descending
  bool has_edge(Vertex u, Vertex v) const noexcept;

  /// Connected components ordered by their smallest vertex; each sorted.
  std::vector<std::vector<Vertex>> components() const;
  bool is_bipartite() const;
  bool is_regular() const;

  /// Subgraph induced by `vs` (relabelled 0..|vs|-1 in the order given).
  Graph induced(std::span<const Vertex> vs) const;
  Graph without_edge(Edge e) const;
  Graph with_edge(Edge e) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  void build_adjacency();

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adj_;
};

// ---------------------------------------------------------------------------
// Families

/// m - k(k-1)/2 = k q + r with 0 <= r <= k-1.
struct SplitSpec {
  std::int64_t k = 1;
  std::int64_t m = 0;
  std::int64_t q = 0;
  std::int64_t r = 0;

  static SplitSpec make(std::int64_t k, std::int64_t m);
  std::int64_t vertex_count() const { return k + q + (r > 0 ? 1 : 0); }
};

enum class Family {
  kSplit,
  kStar,
  kClique,
  kCycle,
  kPath,
  kCompleteBipartite,
  kEmpty,
};

std::optional<Family> parse_family(std::string_view name);
const char* family_name(Family f);

struct FamilyRequest {
  Family family = Family::kEmpty;
  std::int64_t k = 0;  // split: clique size
  std::int64_t m = 0;  // split: edge count
  std::int64_t n = 0;  // star: leaves; clique/cycle/path/empty: vertices
  std::int64_t a = 0;  // complete bipartite sides
  std::int64_t b = 0;
  std::optional<std::uint64_t> seed;
};

Graph make_family(const FamilyRequest& req);

/// S_{k,m}. Vertex order: the r clique vertices seen by the extra vertex,
/// the other k-r clique vertices, the extra vertex (only when r > 0), then
/// the q independent vertices.
Graph split_graph(std::int64_t k, std::int64_t m);
Graph star_graph(std::int64_t leaves);  // center is vertex 0
Graph complete_graph(std::int64_t n);
Graph cycle_graph(std::int64_t n);
Graph path_graph(std::int64_t n);  // n vertices
Graph complete_bipartite(std::int64_t a, std::int64_t b);  // sides 0..a-1, a..a+b-1

/// Uniform m-edge graph on n labelled vertices (Floyd sampling of edge ranks).
Graph sample_gnm(std::int64_t n, std::int64_t m, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Algebra

inline constexpr std::uint64_t kDefaultTensorCap = 1'000'000;

/// k-fold tensor power; tuple (u_1..u_k) has index sum_r u_r n^{k-r}.
Graph tensor_power(const Graph& g, int k,
                   std::uint64_t vertex_cap = kDefaultTensorCap);

/// Subdivides every edge once; vertex n+i sits on the i-th edge.
Graph subdivide(const Graph& h);

enum class CombineOp { kUnion, kJoin };
Graph combine(CombineOp op, const Graph& g1, const Graph& g2);

// ---------------------------------------------------------------------------
// Edge-list text format

Graph read_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);
Graph load_edge_list(const std::string& path);
void save_edge_list(const Graph& g, const std::string& path);

}  // namespace sslab
