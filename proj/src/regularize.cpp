#include "sslab/regularize.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

#include "sslab/error.hpp"

namespace sslab {
namespace {

double xlogx(double a) { return a > 0.0 ? a * std::log(a) : 0.0; }

}  // namespace

double EdgeDistribution::p(Vertex i, Vertex j) const {
  const Edge key{std::min(i, j), std::max(i, j)};
  auto it = std::lower_bound(edges.begin(), edges.end(), key);
  if (it == edges.end() || *it != key) return 0.0;
  return p_edge[static_cast<std::size_t>(it - edges.begin())];
}

EdgeDistribution edge_distribution(const Graph& g, const PerronOptions& opts) {
  const PerronData pd = perron(g, opts);
  EdgeDistribution d;
  d.vertices = g.components()[pd.component_id];
  const Graph g0 = g.induced(d.vertices);
  d.edges.assign(g0.edges().begin(), g0.edges().end());
  std::vector<double> x(d.vertices.size());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = pd.x[d.vertices[i]];
  long double quad = 0.0L;
  for (const Edge& e : d.edges) quad += 2.0L * x[e.u] * x[e.v];
  // The Rayleigh quotient makes the p_ij sum to one.
  d.lambda = static_cast<double>(quad);
  d.residual = pd.residual;
  for (const Edge& e : d.edges) {
    d.p_edge.push_back(static_cast<double>(x[e.u] * static_cast<long double>(x[e.v]) / quad));
  }
  for (double a : x) d.pi.push_back(a * a);
  return d;
}

double entropy_gap(const EdgeDistribution& d) {
  long double hp = 0.0L;
  for (double a : d.p_edge) hp -= 2.0L * xlogx(a);  // both orientations
  long double hpi = 0.0L;
  for (double a : d.pi) hpi -= xlogx(a);
  return static_cast<double>(hp - hpi);
}

std::vector<std::int64_t> round_counts(std::span<const double> q, std::int64_t s) {
  if (s < 1) throw Error(Errc::kInvalidParameter, "round_counts: need s >= 1");
  if (q.empty()) throw Error(Errc::kInvalidParameter, "round_counts: empty weight vector");
  const std::size_t n = q.size();
  std::vector<std::int64_t> out(n);
  std::vector<double> rem(n);
  std::int64_t total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(q[i] >= 0.0)) throw Error(Errc::kInvalidParameter, "round_counts: negative weight");
    const double scaled = static_cast<double>(s) * q[i];
    out[i] = static_cast<std::int64_t>(std::floor(scaled));
    rem[i] = scaled - static_cast<double>(out[i]);
    total += out[i];
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return rem[a] > rem[b]; });
  // The weights sum to one only up to rounding, so the floors may overshoot
  // by a unit; take it back from the smallest remainders.
  for (std::size_t i = 0; total < s; ++i, ++total) ++out[order[i % n]];
  for (std::size_t i = 0; total > s; ++i) {
    const std::size_t idx = order[n - 1 - (i % n)];
    if (out[idx] > 0) {
      --out[idx];
      --total;
    }
  }
  return out;
}

std::vector<std::vector<std::int64_t>> RegularBundle::n_matrix() const {
  const std::size_t n = vertices.size();
  std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    m[edges[i].u][edges[i].v] = edge_counts[i];
    m[edges[i].v][edges[i].u] = edge_counts[i];
  }
  return m;
}

bool RegularBundle::degree_within_lambda_power() const {
  return to_long_double(d_k) <= static_cast<long double>(lambda_k_hi) * (1.0L + 1e-9L);
}

double RegularBundle::measured_exponent() const {
  return (static_cast<double>(k) * std::log(lambda) - std::log(to_double(d_k))) /
         std::log(static_cast<double>(k));
}

RegularBundle build_regular(const Graph& g, int k) {
  if (k < 2 || k % 2 != 0) throw Error(Errc::kInvalidParameter, "build_regular: k must be even and >= 2");
  const EdgeDistribution dist = edge_distribution(g);
  RegularBundle b;
  b.k = k;
  b.vertices = dist.vertices;
  b.edges = dist.edges;
  std::vector<double> q(dist.p_edge.size());
  for (std::size_t i = 0; i < q.size(); ++i) q[i] = 2.0 * dist.p_edge[i];
  b.edge_counts = round_counts(q, k / 2);
  b.n_vec.assign(b.vertices.size(), 0);
  for (std::size_t i = 0; i < b.edges.size(); ++i) {
    b.n_vec[b.edges[i].u] += b.edge_counts[i];
    b.n_vec[b.edges[i].v] += b.edge_counts[i];
  }
  BigInt num = 1;
  for (std::int64_t ni : b.n_vec) num *= factorial(static_cast<std::uint64_t>(ni));
  BigInt den = 1;
  for (std::int64_t c : b.edge_counts) {
    const BigInt f = factorial(static_cast<std::uint64_t>(c));
    den *= f * f;  // N_ij and N_ji
  }
  b.d_k = num / den;
  b.t_k_size = factorial(static_cast<std::uint64_t>(k)) / num;

  b.lambda = dist.lambda;
  b.lambda_k = std::pow(dist.lambda, k);
  // |lambda - lambda_true| <= residual for a symmetric matrix; widen by the
  // residual and round every product outward.
  const double slack = dist.residual + 4e-16 * dist.lambda;
  double lo = std::nextafter(dist.lambda - slack, 0.0);
  double hi = std::nextafter(dist.lambda + slack, INFINITY);
  double acc_lo = 1.0, acc_hi = 1.0;
  for (int i = 0; i < k; ++i) {
    acc_lo = std::nextafter(acc_lo * lo, 0.0);
    acc_hi = std::nextafter(acc_hi * hi, INFINITY);
  }
  b.lambda_k_lo = acc_lo;
  b.lambda_k_hi = acc_hi;
  return b;
}

FkGraph materialize_fk(const RegularBundle& bundle, const Graph& g, std::uint64_t cap) {
  if (bundle.t_k_size > cap) {
    throw CapExceeded(bundle.t_k_size.str(), "materialize_fk: type class has " +
                                                 bundle.t_k_size.str() + " tuples; cap is " +
                                                 std::to_string(cap));
  }
  const std::size_t k = static_cast<std::size_t>(bundle.k);
  const std::uint64_t base = g.order();
  const auto nmat = bundle.n_matrix();
  const std::size_t nloc = bundle.vertices.size();

  // Type class: sequences with n_i copies of local label i, in lexicographic
  // order (which is also code order since local labels are increasing).
  std::vector<Vertex> seq;
  for (std::size_t i = 0; i < nloc; ++i) {
    for (std::int64_t c = 0; c < bundle.n_vec[i]; ++c) seq.push_back(static_cast<Vertex>(i));
  }
  if (seq.size() != k) throw Error(Errc::kInvariant, "materialize_fk: row sums do not add to k");
  auto code_of = [&](const std::vector<Vertex>& s) {
    std::uint64_t c = 0;
    for (Vertex a : s) c = c * base + bundle.vertices[a];
    return c;
  };
  std::vector<std::vector<Vertex>> tuples;
  do {
    tuples.push_back(seq);
  } while (std::next_permutation(seq.begin(), seq.end()));
  FkGraph out;
  for (const auto& tup : tuples) out.codes.push_back(code_of(tup));
  std::map<std::uint64_t, std::size_t> index;
  for (std::size_t i = 0; i < out.codes.size(); ++i) index[out.codes[i]] = i;

  // Neighbours of a: for every label i, split the positions holding i into
  // groups of sizes N_ij and write j into group j.
  std::vector<std::vector<Vertex>> pattern(nloc);  // multiset of targets per label
  for (std::size_t i = 0; i < nloc; ++i) {
    for (std::size_t j = 0; j < nloc; ++j) {
      for (std::int64_t c = 0; c < nmat[i][j]; ++c) pattern[i].push_back(static_cast<Vertex>(j));
    }
  }
  std::vector<Edge> es;
  for (std::size_t ai = 0; ai < tuples.size(); ++ai) {
    const auto& a = tuples[ai];
    std::vector<std::vector<std::size_t>> pos(nloc);
    for (std::size_t r = 0; r < k; ++r) pos[a[r]].push_back(r);
    std::vector<Vertex> b(k);
    auto assign = [&](auto&& self, std::size_t label) -> void {
      if (label == nloc) {
        const std::size_t bi = index.at(code_of(b));
        if (ai < bi) es.push_back({static_cast<Vertex>(ai), static_cast<Vertex>(bi)});
        return;
      }
      std::vector<Vertex> targets = pattern[label];
      if (targets.empty()) {
        self(self, label + 1);
        return;
      }
      do {
        for (std::size_t r = 0; r < targets.size(); ++r) b[pos[label][r]] = targets[r];
        self(self, label + 1);
      } while (std::next_permutation(targets.begin(), targets.end()));
    };
    assign(assign, 0);
  }
  out.graph = Graph::from_edges(tuples.size(), std::move(es));
  return out;
}

}  // namespace sslab
