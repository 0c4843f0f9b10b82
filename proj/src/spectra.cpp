#include "sslab/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Dense>

#include "sslab/error.hpp"
#include "sslab/rng.hpp"

namespace sslab {
namespace {

double norm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double a : v) s += a * a;
  return std::sqrt(s);
}

// Adjacency of one component in local indices.
struct LocalGraph {
  std::vector<std::size_t> offsets{0};
  std::vector<std::uint32_t> adj;

  std::size_t size() const { return offsets.size() - 1; }

  void multiply(const std::vector<double>& x, std::vector<double>& y) const {
    // Extended accumulation: hubs sum thousands of small entries, and plain
    // double sums leave a systematic bias above the residual tolerance.
    for (std::size_t i = 0; i < size(); ++i) {
      long double s = 0.0L;
      for (std::size_t k = offsets[i]; k < offsets[i + 1]; ++k) s += x[adj[k]];
      y[i] = static_cast<double>(s);
    }
  }
};

LocalGraph restrict_to(const Graph& g, std::span<const Vertex> vs,
                       std::vector<std::int64_t>& local) {
  LocalGraph lg;
  for (std::size_t i = 0; i < vs.size(); ++i) local[vs[i]] = static_cast<std::int64_t>(i);
  for (Vertex v : vs) {
    for (Vertex w : g.neighbors(v)) {
      if (local[w] >= 0) lg.adj.push_back(static_cast<std::uint32_t>(local[w]));
    }
    lg.offsets.push_back(lg.adj.size());
  }
  return lg;
}

struct ComponentResult {
  double lambda = 0.0;
  std::vector<double> x;
  double residual = 0.0;
  std::int64_t iterations = 0;
};

ComponentResult iterate_component(const LocalGraph& lg, std::vector<double> x,
                                  const PerronOptions& opts) {
  const std::size_t n = lg.size();
  ComponentResult out;
  double nx = norm2(x);
  for (double& a : x) a /= nx;
  std::vector<double> ax(n);
  for (std::int64_t it = 0;; ++it) {
    lg.multiply(x, ax);
    long double lambda_acc = 0.0L;
    for (std::size_t i = 0; i < n; ++i) lambda_acc += static_cast<long double>(x[i]) * ax[i];
    const double lambda = static_cast<double>(lambda_acc);
    long double res_acc = 0.0L;
    for (std::size_t i = 0; i < n; ++i) {
      const long double d = ax[i] - lambda_acc * x[i];
      res_acc += d * d;
    }
    const double res = static_cast<double>(std::sqrt(res_acc));
    // Guard against a tolerance below the rounding floor of the matvec.
    const double tol_eff = std::max(opts.tol, 1e-14 * std::max(1.0, lambda));
    if (res <= tol_eff) {
      out.lambda = lambda;
      out.x = std::move(x);
      out.residual = res;
      out.iterations = it;
      return out;
    }
    if (it >= opts.max_iter) {
      throw NotConverged(res, "perron: no convergence after " +
                                  std::to_string(opts.max_iter) +
                                  " iterations (residual " + std::to_string(res) + ")");
    }
    for (std::size_t i = 0; i < n; ++i) ax[i] += x[i];
    nx = norm2(ax);
    for (std::size_t i = 0; i < n; ++i) x[i] = ax[i] / nx;
  }
}

double lp_norm(std::span<const double> v, double p) {
  double s = 0.0;
  double mx = 0.0;
  for (double a : v) mx = std::max(mx, std::abs(a));
  if (mx == 0.0) return 0.0;
  for (double a : v) s += std::pow(std::abs(a) / mx, p);
  return mx * std::pow(s, 1.0 / p);
}

void multiply_full(const Graph& g, std::span<const double> x, std::vector<double>& y) {
  for (std::size_t v = 0; v < g.order(); ++v) {
    double s = 0.0;
    for (Vertex w : g.neighbors(static_cast<Vertex>(v))) s += x[w];
    y[v] = s;
  }
}

struct OpNormRun {
  double value = 0.0;
  std::vector<double> x;
  bool converged = false;
  std::int64_t iterations = 0;
};

OpNormRun opnorm_from(const Graph& g, double p, double q, std::vector<double> x,
                      const OpNormOptions& opts) {
  const std::size_t n = g.order();
  const double p_dual = p / (p - 1.0);
  std::vector<double> y(n), z(n);
  auto normalize = [&](std::vector<double>& v) {
    const double s = lp_norm(v, p);
    if (s > 0.0) {
      for (double& a : v) a /= s;
    }
  };
  normalize(x);
  multiply_full(g, x, y);
  double value = lp_norm(y, q);
  OpNormRun run;
  for (std::int64_t it = 1; it <= opts.max_iter; ++it) {
    // x <- psi_{p'}(A^T psi_q(A x)), with psi_r(a) = a^{r-1} on a >= 0.
    for (std::size_t i = 0; i < n; ++i) y[i] = std::pow(y[i] / value, q - 1.0);
    multiply_full(g, y, z);
    const double zmax = *std::max_element(z.begin(), z.end());
    if (zmax <= 0.0) break;
    for (std::size_t i = 0; i < n; ++i) x[i] = std::pow(z[i] / zmax, p_dual - 1.0);
    normalize(x);
    multiply_full(g, x, y);
    const double next = lp_norm(y, q);
    if (next < value * (1.0 - 1e-12)) {
      throw Error(Errc::kInvariant, "opnorm: iterate value decreased from " +
                                        std::to_string(value) + " to " +
                                        std::to_string(next));
    }
    const bool done = std::abs(next - value) <= opts.tol * std::max(1.0, value);
    value = std::max(value, next);
    run.iterations = it;
    if (done) {
      run.converged = true;
      break;
    }
  }
  run.value = value;
  run.x = std::move(x);
  return run;
}

}  // namespace

double PerronData::max_entry() const {
  double best = 0.0;
  for (double a : x) best = std::max(best, a);
  return best;
}

PerronData perron(const Graph& g, const PerronOptions& opts,
                  std::span<const double> warm) {
  if (g.edge_count() == 0) throw Error(Errc::kNoEdges, "perron: graph has no edges");
  if (!warm.empty() && warm.size() != g.order()) {
    throw Error(Errc::kInvalidParameter, "perron: warm start has wrong length");
  }
  const auto comps = g.components();
  std::vector<std::int64_t> local(g.order(), -1);
  PerronData best;
  best.lambda = -1.0;
  ComponentResult best_run;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const auto& vs = comps[c];
    if (vs.size() < 2) continue;
    std::uint64_t deg_sum = 0;
    std::size_t deg_max = 0;
    for (Vertex v : vs) {
      deg_sum += g.degree(v);
      deg_max = std::max(deg_max, g.degree(v));
    }
    // lambda of the component is at most min(sqrt(2 e_c), max degree).
    const double upper = std::min(std::sqrt(static_cast<double>(deg_sum)),
                                  static_cast<double>(deg_max));
    const double margin = 1e-9 * std::max(1.0, best.lambda);
    if (upper <= best.lambda + margin) continue;
    LocalGraph lg = restrict_to(g, vs, local);
    std::vector<double> x0(vs.size(), 1.0);
    if (!warm.empty()) {
      const double floor = 1e-3 / std::sqrt(static_cast<double>(vs.size()));
      for (std::size_t i = 0; i < vs.size(); ++i) {
        x0[i] = std::max(0.0, warm[vs[i]]) + floor;
      }
    }
    ComponentResult run = iterate_component(lg, std::move(x0), opts);
    if (run.lambda > best.lambda + margin) {
      best.lambda = run.lambda;
      best.component_id = c;
      best_run = std::move(run);
    }
  }
  best.x.assign(g.order(), 0.0);
  const auto& vs = comps[best.component_id];
  for (std::size_t i = 0; i < vs.size(); ++i) best.x[vs[i]] = best_run.x[i];
  best.residual = best_run.residual;
  best.iterations = best_run.iterations;
  return best;
}

double split_lambda(std::int64_t k, std::int64_t m) {
  if (m < 1) throw Error(Errc::kInvalidParameter, "split_lambda: need m >= 1");
  const SplitSpec s = SplitSpec::make(k, m);
  if (s.r == 0) {
    const double disc = 4.0 * static_cast<double>(m) -
                        static_cast<double>(k) * static_cast<double>(k) + 1.0;
    return (static_cast<double>(k) - 1.0 + std::sqrt(disc)) / 2.0;
  }
  // Classes: r attached clique vertices, k-r other clique vertices, the extra
  // vertex, q independent vertices. B(i, j) = neighbours in class j of a
  // vertex in class i; the symmetrized quotient has the same spectrum.
  const double r = static_cast<double>(s.r);
  const double kr = static_cast<double>(k - s.r);
  const double q = static_cast<double>(s.q);
  const double sizes[4] = {r, kr, 1.0, q};
  const double b[4][4] = {
      {r - 1.0, kr, 1.0, q},
      {r, kr - 1.0, 0.0, q},
      {r, 0.0, 0.0, 0.0},
      {r, kr, 0.0, 0.0},
  };
  int keep[4];
  int dim = 0;
  for (int i = 0; i < 4; ++i) {
    if (sizes[i] > 0.0) keep[dim++] = i;
  }
  Eigen::MatrixXd sym(dim, dim);
  for (int a = 0; a < dim; ++a) {
    for (int c = 0; c < dim; ++c) {
      sym(a, c) = std::sqrt(b[keep[a]][keep[c]] * b[keep[c]][keep[a]]);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().maxCoeff();
}

double split_increment_lb(std::int64_t k, std::int64_t m, std::int64_t d) {
  if (k < 1) throw Error(Errc::kInvalidParameter, "split_increment_lb: need k >= 1");
  const std::int64_t base = k * (k - 1) / 2;
  if (m < base + 1) {
    throw Error(Errc::kInvalidParameter, "split_increment_lb: need m >= k(k-1)/2 + 1");
  }
  if (d < 0 || d > m - base) {
    throw Error(Errc::kInvalidParameter, "split_increment_lb: need 0 <= d <= m - k(k-1)/2");
  }
  const double kd = static_cast<double>(k);
  return static_cast<double>(d) / (2.0 * kd * (std::sqrt(static_cast<double>(m)) + kd));
}

double opnorm_ratio(const Graph& g, double p, double q, std::span<const double> x) {
  std::vector<double> y(g.order());
  multiply_full(g, x, y);
  const double den = lp_norm(x, p);
  if (den == 0.0) throw Error(Errc::kInvalidParameter, "opnorm_ratio: zero vector");
  return lp_norm(y, q) / den;
}

OpNormEstimate opnorm(const Graph& g, double p, double q, const OpNormOptions& opts) {
  if (!(p > 1.0 && p <= 2.0 && q >= 2.0 && std::isfinite(q))) {
    throw Error(Errc::kRegime, "opnorm: need 1 < p <= 2 <= q < inf, got p=" +
                                   std::to_string(p) + " q=" + std::to_string(q));
  }
  const std::size_t n = g.order();
  OpNormEstimate est;
  est.p = p;
  est.q = q;
  if (n == 0) return est;
  est.witness.assign(n, 0.0);
  est.witness[0] = 1.0;
  if (g.edge_count() == 0) {
    est.converged = true;
    return est;
  }

  // The iteration is not globally convergent when p < q: symmetric starts can
  // stall at a saddle (K_2 at p=4/3, q=4 fixes the uniform vector). Starts
  // are therefore spread between flat and sharply peaked.
  std::vector<std::vector<double>> starts;
  starts.emplace_back(n, 1.0);
  {
    std::vector<double> peak(n, 1e-3);
    Vertex hub = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (g.degree(static_cast<Vertex>(v)) > g.degree(hub)) hub = static_cast<Vertex>(v);
    }
    peak[hub] = 1.0;
    starts.push_back(std::move(peak));
  }
  Rng rng(opts.seed);
  const double scales[3] = {2.0, 8.0, 32.0};
  for (int r = 0; r < opts.restarts; ++r) {
    std::vector<double> x(n);
    const double scale = scales[r % 3];
    for (double& a : x) a = std::exp(scale * (uniform_unit(rng) - 1.0));
    starts.push_back(std::move(x));
  }

  bool have = false;
  for (auto& x0 : starts) {
    OpNormRun run = opnorm_from(g, p, q, std::move(x0), opts);
    est.iterations += run.iterations;
    ++est.restarts_used;
    if (!have || run.value > est.value) {
      have = true;
      est.witness = std::move(run.x);
      est.converged = run.converged;
      est.value = opnorm_ratio(g, p, q, est.witness);
    }
  }
  return est;
}

SingularTriple top_singular(std::span<const Vertex> rows, std::span<const Vertex> cols,
                            const Graph& g, double tol, std::int64_t max_iter) {
  if (rows.empty() || cols.empty()) {
    throw Error(Errc::kEmptyMatrix, "top_singular: empty row or column set");
  }
  std::vector<std::int64_t> col_of(g.order(), -1);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j] >= g.order()) throw Error(Errc::kInvalidParameter, "top_singular: bad column");
    col_of[cols[j]] = static_cast<std::int64_t>(j);
  }
  std::vector<std::size_t> offsets{0};
  std::vector<std::uint32_t> entries;
  for (Vertex a : rows) {
    if (a >= g.order()) throw Error(Errc::kInvalidParameter, "top_singular: bad row");
    if (col_of[a] >= 0) throw Error(Errc::kInvalidParameter, "top_singular: rows and cols overlap");
    for (Vertex w : g.neighbors(a)) {
      if (col_of[w] >= 0) entries.push_back(static_cast<std::uint32_t>(col_of[w]));
    }
    offsets.push_back(entries.size());
  }
  const std::size_t nr = rows.size();
  const std::size_t nc = cols.size();
  auto mul = [&](const std::vector<double>& v, std::vector<double>& out) {
    for (std::size_t i = 0; i < nr; ++i) {
      double s = 0.0;
      for (std::size_t k = offsets[i]; k < offsets[i + 1]; ++k) s += v[entries[k]];
      out[i] = s;
    }
  };
  auto mul_t = [&](const std::vector<double>& u, std::vector<double>& out) {
    std::fill(out.begin(), out.end(), 0.0);
    for (std::size_t i = 0; i < nr; ++i) {
      for (std::size_t k = offsets[i]; k < offsets[i + 1]; ++k) out[entries[k]] += u[i];
    }
  };

  SingularTriple st;
  st.v_right.assign(nc, 1.0 / std::sqrt(static_cast<double>(nc)));
  st.u_left.assign(nr, 0.0);
  if (entries.empty()) {
    st.converged = true;
    return st;
  }
  std::vector<double> w(nr), v2(nc);
  double sigma2 = 0.0;
  for (std::int64_t it = 0;; ++it) {
    mul(st.v_right, w);
    mul_t(w, v2);
    sigma2 = 0.0;
    for (double a : w) sigma2 += a * a;
    double res = 0.0;
    for (std::size_t j = 0; j < nc; ++j) {
      const double d = v2[j] - sigma2 * st.v_right[j];
      res += d * d;
    }
    res = std::sqrt(res);
    st.iterations = it;
    if (res <= tol * std::max(1.0, sigma2)) {
      st.converged = true;
      break;
    }
    if (it >= max_iter) break;
    const double nv = norm2(v2);
    for (std::size_t j = 0; j < nc; ++j) st.v_right[j] = v2[j] / nv;
  }
  st.sigma = std::sqrt(sigma2);
  mul(st.v_right, w);
  for (std::size_t i = 0; i < nr; ++i) st.u_left[i] = w[i] / st.sigma;
  return st;
}

CutDiagnostics cut_diagnostics(const Graph& g, std::span<const Vertex> u,
                               const PerronData& pd, const PerronOptions& opts) {
  const std::size_t n = g.order();
  std::vector<char> in_u(n, 0);
  for (Vertex v : u) {
    if (v >= n || in_u[v]) throw Error(Errc::kNotPartition, "cut_diagnostics: bad vertex in U");
    in_u[v] = 1;
  }
  if (u.empty() || u.size() >= n) {
    throw Error(Errc::kNotPartition, "cut_diagnostics: U must be nonempty and proper");
  }
  std::vector<Vertex> uu(u.begin(), u.end());
  std::sort(uu.begin(), uu.end());
  std::vector<Vertex> ww;
  for (std::size_t v = 0; v < n; ++v) {
    if (!in_u[v]) ww.push_back(static_cast<Vertex>(v));
  }
  auto side_lambda = [&](const std::vector<Vertex>& side) {
    Graph h = g.induced(side);
    return h.edge_count() == 0 ? 0.0 : perron(h, opts).lambda;
  };

  CutDiagnostics cd;
  cd.lambda = pd.lambda;
  cd.lambda_u = side_lambda(uu);
  cd.lambda_w = side_lambda(ww);
  for (Vertex a : uu) {
    for (Vertex b : g.neighbors(a)) cd.m_uw += in_u[b] ? 0 : 1;
  }
  cd.rho = cd.m_uw == 0 ? 0.0 : top_singular(uu, ww, g).sigma;
  for (Vertex a : uu) cd.mu_u += pd.x[a] * pd.x[a];

  const double lam = cd.lambda;
  const double rho2 = cd.rho * cd.rho;
  cd.slack_a = std::max(cd.lambda_u, cd.lambda_w) + cd.rho - lam;
  cd.slack_b = rho2 - (lam - cd.lambda_u) * (lam - cd.lambda_w);
  const double den = (lam - cd.lambda_u) * (lam - cd.lambda_u) + rho2;
  cd.slack_c_applicable = den > kCutDenominatorFloor;
  cd.slack_c = cd.slack_c_applicable ? rho2 / den - cd.mu_u
                                     : std::numeric_limits<double>::quiet_NaN();
  return cd;
}

}  // namespace sslab
