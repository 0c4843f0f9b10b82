#include "sslab/supersat.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sslab/error.hpp"
#include "sslab/sidorenko.hpp"

namespace sslab {
namespace {

std::optional<double> split_lambda_if_defined(int t, std::uint64_t m) {
  const auto k = static_cast<std::int64_t>(t - 1);
  const auto mm = static_cast<std::int64_t>(m);
  if (m == 0 || mm < k * (k - 1) / 2) return std::nullopt;
  return split_lambda(k, mm);
}

std::vector<char> membership(std::size_t n, std::span<const Vertex> vs) {
  std::vector<char> in(n, 0);
  for (Vertex v : vs) {
    if (v >= n) throw Error(Errc::kInvalidParameter, "vertex index out of range");
    in[v] = 1;
  }
  return in;
}

std::uint64_t edges_between(const Graph& h, const std::vector<char>& x, const std::vector<char>& y) {
  std::uint64_t c = 0;
  for (const Edge& e : h.edges()) {
    if ((x[e.u] && y[e.v]) || (x[e.v] && y[e.u])) ++c;
  }
  return c;
}

struct Alignment {
  SingularTriple sigma;
  std::vector<std::uint64_t> degree;  // into D, per row of A
  std::vector<double> value;          // <x_a, v>^2
};

Alignment align(const Graph& h, std::span<const Vertex> a, std::span<const Vertex> d) {
  const auto in_d = membership(h.order(), d);
  for (Vertex v : a) {
    if (in_d[v]) throw Error(Errc::kInvalidParameter, "A and D must be disjoint");
  }
  Alignment al;
  al.sigma = top_singular(a, d, h);
  al.degree.assign(a.size(), 0);
  al.value.assign(a.size(), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (Vertex w : h.neighbors(a[i])) al.degree[i] += in_d[w] ? 1 : 0;
    if (al.degree[i] > 0) {
      // (M v)_a = sigma u_a and x_a = row / sqrt(deg).
      const double mv = al.sigma.sigma * al.sigma.u_left[i];
      al.value[i] = mv * mv / static_cast<double>(al.degree[i]);
    }
  }
  return al;
}

std::vector<Vertex> non_isolated(const Graph& h) {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < h.order(); ++v) {
    if (h.degree(static_cast<Vertex>(v)) > 0) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

double copy_lower(int t, Pattern p, double lambda, std::uint64_t m, std::uint64_t n) {
  if (p == Pattern::kKtt) {
    return ktt_copy_lower(t, lambda, static_cast<std::int64_t>(m), static_cast<std::int64_t>(n));
  }
  return c2t_copy_lower(t, lambda, static_cast<std::int64_t>(n));
}

}  // namespace

// ---------------------------------------------------------------------------

std::vector<Edge> light_edges(const Graph& h, const PerronData& pd, double eta) {
  std::vector<Edge> out;
  if (h.edge_count() == 0) return out;
  const double thr = eta / std::sqrt(static_cast<double>(h.edge_count()));
  for (const Edge& e : h.edges()) {
    if (pd.x[e.u] * pd.x[e.v] < thr) out.push_back(e);
  }
  return out;
}

PruneTrace heavy_prune(const Graph& g, int t, double eta, const PerronOptions& opts) {
  if (t < 2) throw Error(Errc::kInvalidParameter, "heavy_prune: need t >= 2");
  if (!(eta > 0.0 && eta < 0.25)) throw Error(Errc::kInvalidParameter, "heavy_prune: need 0 < eta < 1/4");
  if (g.edge_count() == 0) throw Error(Errc::kNoEdges, "heavy_prune: graph has no edges");

  PruneTrace tr;
  tr.eta = eta;
  tr.t = t;
  tr.m_initial = g.edge_count();
  const double c = (1.0 - 4.0 * eta) / (std::sqrt(2.0) - 4.0 * eta);
  tr.c_eta = c * c;

  Graph h = g;
  std::vector<double> warm;
  for (;;) {
    if (h.edge_count() == 0) {
      tr.empty = true;
      break;
    }
    PerronData pd = perron(h, opts, warm);
    if (tr.steps.empty() && warm.empty()) tr.lambda_initial = pd.lambda;
    const std::uint64_t m_i = h.edge_count();
    const double thr = eta / std::sqrt(static_cast<double>(m_i));
    const Edge* pick = nullptr;
    double best = 0.0;
    for (const Edge& e : h.edges()) {
      const double prod = pd.x[e.u] * pd.x[e.v];
      if (prod < thr && (pick == nullptr || prod < best)) {
        pick = &e;
        best = prod;
      }
    }
    if (pick == nullptr) {
      tr.lambda_final = pd.lambda;
      tr.final_perron = std::move(pd);
      break;
    }
    PruneStep step;
    step.deleted = *pick;
    step.m_i = m_i;
    step.lambda_i = pd.lambda;
    step.split_lambda = split_lambda_if_defined(t, m_i);
    if (step.split_lambda) step.delta = pd.lambda - *step.split_lambda;
    step.product = best;
    step.threshold = thr;
    tr.steps.push_back(step);
    h = h.without_edge(step.deleted);
    warm = std::move(pd.x);
  }
  tr.m_final = h.edge_count();
  tr.final_graph = std::move(h);
  tr.alpha = static_cast<double>(tr.m_final) / static_cast<double>(tr.m_initial);
  if (tr.m_final > 0) tr.gap_ratio = tr.lambda_final / std::sqrt(static_cast<double>(tr.m_final));
  return tr;
}

double localization_g(const PerronData& pd, std::uint64_t m) {
  if (m < 1) throw Error(Errc::kInvalidParameter, "localization_g: need m >= 1");
  return pd.max_entry() * std::pow(static_cast<double>(m), 0.25);
}

bool delocalization_check(const PerronData& pd, std::uint64_t m, double delta) {
  if (!(delta > 0.0 && delta <= 1.0 / 3.0)) {
    throw Error(Errc::kInvalidParameter, "delocalization_check: need 0 < delta <= 1/3");
  }
  if (pd.lambda * pd.lambda < (1.0 + delta) * static_cast<double>(m)) return true;
  return localization_g(pd, m) < std::pow(delta, -4.0);
}

// ---------------------------------------------------------------------------

TFlags verify_t(const Graph& h, std::span<const Vertex> a, std::span<const Vertex> c,
                std::span<const Vertex> d) {
  const std::size_t n = h.order();
  std::vector<int> part(n, -1);
  auto place = [&](std::span<const Vertex> vs, int label) {
    for (Vertex v : vs) {
      if (v >= n || part[v] >= 0) {
        throw Error(Errc::kNotPartition, "verify_t: vertex " + std::to_string(v) +
                                             " is out of range or in two classes");
      }
      part[v] = label;
    }
  };
  place(a, 0);
  place(c, 1);
  place(d, 2);
  if (std::find(part.begin(), part.end(), -1) != part.end()) {
    throw Error(Errc::kNotPartition, "verify_t: A, C, D do not cover V");
  }
  TFlags f{true, true, true};
  for (const Edge& e : h.edges()) {
    const int pu = part[e.u];
    const int pv = part[e.v];
    if (pu == 2 && pv == 2) f.t1 = false;
    if ((pu == 1 && pv == 2) || (pu == 2 && pv == 1)) f.t2 = false;
    if (!(pu == 0 || pv == 0 || (pu == 1 && pv == 1))) f.t3 = false;
  }
  return f;
}

AcdPartition acd_partition(const Graph& h, double eta, const PerronOptions& opts,
                           const PerronData* pd_in) {
  if (!(eta > 0.0 && eta < 0.25)) throw Error(Errc::kInvalidParameter, "acd_partition: need 0 < eta < 1/4");
  if (h.edge_count() == 0) throw Error(Errc::kNoEdges, "acd_partition: graph has no edges");
  const PerronData pd = pd_in ? *pd_in : perron(h, opts);
  const std::uint64_t m = h.edge_count();
  const double thr = eta / std::sqrt(static_cast<double>(m));

  std::vector<std::pair<std::uint32_t, std::uint32_t>> bad;
  for (const Edge& e : h.edges()) {
    if (pd.x[e.u] * pd.x[e.v] < thr) bad.emplace_back(e.u, e.v);
  }
  if (!bad.empty()) {
    throw NotHeavy(bad, "acd_partition: " + std::to_string(bad.size()) +
                            " edges violate x_u x_v >= eta/sqrt(m)");
  }

  AcdPartition p;
  p.eta = eta;
  p.l_inf = pd.max_entry();
  p.g = p.l_inf * std::pow(static_cast<double>(m), 0.25);
  p.g_tilde = p.g / std::sqrt(eta);
  const std::int64_t k = static_cast<std::int64_t>(std::ceil(2.0 * std::log2(p.g_tilde))) + 1;
  p.levels = k;
  p.ell = k >= 1 ? static_cast<std::int64_t>(std::ceil(std::log2(static_cast<double>(k)))) : 0;
  const std::int64_t half = k >= 0 ? k / 2 : 0;
  const double root = k >= 0 ? std::sqrt(static_cast<double>(k)) : 0.0;
  p.i_lo = half - static_cast<std::int64_t>(std::floor(root));
  p.i_hi = half - static_cast<std::int64_t>(std::ceil(root / 2.0));
  if (k < 2 || p.i_lo > p.i_hi || p.i_lo < p.ell) {
    throw TooDelocalized(k, p.i_lo, p.i_hi, p.ell,
                         "acd_partition: K=" + std::to_string(k) + " gives I=[" +
                             std::to_string(p.i_lo) + "," + std::to_string(p.i_hi) +
                             "] with ell=" + std::to_string(p.ell) +
                             "; the level-set construction needs every i in I to be >= ell");
  }
  auto theta = [&](std::int64_t lvl) { return std::ldexp(p.l_inf, static_cast<int>(-lvl)); };
  const auto& x = pd.x;

  // |F_h| = |E(C_h, B_h)| with C_h = {theta_h >= x > theta_{K-h}} and
  // B_h = {theta_{h-1} >= x > theta_h}.
  p.f_sizes.assign(static_cast<std::size_t>(half), 0);
  for (std::int64_t lvl = 1; lvl <= half; ++lvl) {
    const double hi_c = theta(lvl), lo_c = theta(k - lvl), hi_b = theta(lvl - 1);
    auto in_c = [&](Vertex v) { return x[v] <= hi_c && x[v] > lo_c; };
    auto in_b = [&](Vertex v) { return x[v] <= hi_b && x[v] > hi_c; };
    std::uint64_t cnt = 0;
    for (const Edge& e : h.edges()) {
      if ((in_c(e.u) && in_b(e.v)) || (in_c(e.v) && in_b(e.u))) ++cnt;
    }
    p.f_sizes[static_cast<std::size_t>(lvl - 1)] = cnt;
  }
  std::uint64_t best = 0;
  for (std::int64_t i = p.i_lo; i <= p.i_hi; ++i) {
    std::uint64_t s = 0;
    for (std::int64_t j = 0; j < p.ell; ++j) s += p.f_sizes[static_cast<std::size_t>(i - j - 1)];
    p.s_sums.push_back(s);
    if (i == p.i_lo || s < best) {
      best = s;
      p.i_star = i;
    }
  }
  p.s_threshold = theta(p.i_star);
  p.r_threshold = theta(k - p.i_star);
  p.sr = p.s_threshold * p.r_threshold;
  p.sr_bound = thr;
  p.sr_ok = p.sr < thr;

  for (std::size_t v = 0; v < h.order(); ++v) {
    const auto vv = static_cast<Vertex>(v);
    if (x[v] > p.s_threshold) {
      p.a.push_back(vv);
    } else if (x[v] > p.r_threshold) {
      p.c.push_back(vv);
    } else {
      p.d.push_back(vv);
    }
  }
  const auto in_a = membership(h.order(), p.a);
  const auto in_c = membership(h.order(), p.c);
  const auto in_d = membership(h.order(), p.d);
  p.e_ac = edges_between(h, in_a, in_c);
  p.e_ad = edges_between(h, in_a, in_d);
  for (const Edge& e : h.edges()) p.e_core += (in_c[e.u] && in_c[e.v]) ? 1 : 0;
  p.t_flags = verify_t(h, p.a, p.c, p.d);
  return p;
}

// ---------------------------------------------------------------------------

AlignedRows aligned_rows(const Graph& h, std::span<const Vertex> a, std::span<const Vertex> d,
                         double theta) {
  if (!(theta >= 0.0 && theta <= 1.0)) throw Error(Errc::kInvalidParameter, "aligned_rows: need 0 <= theta <= 1");
  Alignment al = align(h, a, d);
  if (al.sigma.sigma <= 0.0) throw Error(Errc::kEmptyMatrix, "aligned_rows: incidence matrix is zero");
  AlignedRows out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (al.degree[i] > 0 && al.value[i] >= 1.0 - theta - kAlignTol) out.rows.push_back(a[i]);
  }
  std::sort(out.rows.begin(), out.rows.end());
  out.alignment = std::move(al.value);
  out.sigma = std::move(al.sigma);
  return out;
}

RowCoverOutcome row_cover_analyze(const Graph& h, std::span<const Vertex> a,
                                  std::span<const Vertex> d, int t) {
  if (t < 2) throw Error(Errc::kInvalidParameter, "row_cover_analyze: need t >= 2");
  if (a.empty() || d.empty()) throw Error(Errc::kEmptyMatrix, "row_cover_analyze: no A-D edges");
  Alignment al = align(h, a, d);
  RowCoverOutcome out;
  out.t = t;
  for (std::uint64_t deg : al.degree) out.e_ad += deg;
  if (out.e_ad == 0) throw Error(Errc::kEmptyMatrix, "row_cover_analyze: no A-D edges");
  out.rho = al.sigma.sigma;
  double eps = 1.0 - out.rho * out.rho / static_cast<double>(out.e_ad);
  if (std::abs(eps) < kEpsilonClamp || eps < 0.0) eps = 0.0;
  out.epsilon = eps;
  out.theta = std::sqrt(eps);

  std::vector<char> in_r(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (al.degree[i] > 0 && al.value[i] >= 1.0 - out.theta - kAlignTol) in_r[i] = 1;
  }
  if (std::find(in_r.begin(), in_r.end(), 1) == in_r.end()) {
    std::size_t heaviest = 0;
    for (std::size_t i = 1; i < a.size(); ++i) {
      if (al.degree[i] > al.degree[heaviest] ||
          (al.degree[i] == al.degree[heaviest] && a[i] < a[heaviest])) {
        heaviest = i;
      }
    }
    in_r[heaviest] = 1;
    out.degenerate = true;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (in_r[i]) {
      out.r.push_back(a[i]);
    } else {
      out.e_outside_r += al.degree[i];
    }
  }
  std::sort(out.r.begin(), out.r.end());
  if (!out.degenerate &&
      static_cast<double>(out.e_outside_r) > out.theta * static_cast<double>(out.e_ad) + 1e-9) {
    throw Error(Errc::kInvariant, "row_cover_analyze: e(A\\R, D) = " + std::to_string(out.e_outside_r) +
                                      " exceeds theta * e = " +
                                      std::to_string(out.theta * static_cast<double>(out.e_ad)));
  }

  if (out.r.size() >= static_cast<std::size_t>(t)) {
    out.variant = RowCoverVariant::kManyCopies;
    out.d_star = UINT64_MAX;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (in_r[i]) out.d_star = std::min(out.d_star, al.degree[i]);
    }
    const double floor_arg =
        (1.0 - 2.0 * (t - 1) * out.theta) * static_cast<double>(out.d_star) + 1e-9;
    out.floor_l = static_cast<std::int64_t>(std::floor(floor_arg));
    const auto tu = static_cast<std::uint64_t>(t);
    out.copy_bound = binomial(out.r.size(), tu) *
                     binomial(static_cast<std::uint64_t>(std::max<std::int64_t>(out.floor_l, 0)), tu);
  } else {
    out.variant = RowCoverVariant::kCover;
    std::vector<std::uint32_t> hits(h.order(), 0);
    for (Vertex r : out.r) {
      for (Vertex w : h.neighbors(r)) ++hits[w];
    }
    const auto in_d = membership(h.order(), d);
    std::vector<char> in_b(h.order(), 0);
    for (Vertex w : d) {
      if (hits[w] == out.r.size()) {
        out.b.push_back(w);
        in_b[w] = 1;
      }
    }
    std::sort(out.b.begin(), out.b.end());
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (Vertex w : h.neighbors(a[i])) {
        if (!in_d[w]) continue;
        if (!in_r[i] && in_b[w]) ++out.e_rest_to_b;
        if (in_r[i] && !in_b[w]) ++out.e_r_outside_b;
      }
    }
  }
  out.sigma = std::move(al.sigma);
  return out;
}

// ---------------------------------------------------------------------------

const char* pattern_name(Pattern p) { return p == Pattern::kKtt ? "ktt" : "c2t"; }

std::optional<Pattern> parse_pattern(std::string_view name) {
  if (name == "ktt") return Pattern::kKtt;
  if (name == "c2t") return Pattern::kC2t;
  return std::nullopt;
}

const char* branch_name(Branch b) {
  switch (b) {
    case Branch::kBelowThreshold: return "below-threshold";
    case Branch::kPrunedEmpty: return "pruned-empty";
    case Branch::kDelocalized: return "delocalized";
    case Branch::kAcdUnavailable: return "acd-unavailable";
    case Branch::kDenseCore: return "dense-core";
    case Branch::kSparseCore: return "sparse-core";
  }
  return "?";
}

CountResult count_pattern(const Graph& g, int t, Pattern p, const CountOptions& opts) {
  return p == Pattern::kKtt ? count_ktt(g, t, opts) : count_c2t(g, t, opts);
}

double sharp_constant(int t, Pattern p) {
  const SharpConstants c = constants(t);
  return p == Pattern::kKtt ? c.b_t : c.c_t;
}

bool above_split_threshold(double lambda, double split) {
  return lambda > split + 1e-9 * std::max(1.0, split);
}

PipelineReport supersat_count(const Graph& g, int t, Pattern pattern, const PipelineConfig& cfg) {
  if (t < 2) throw Error(Errc::kInvalidParameter, "pipeline: need t >= 2");
  if (g.edge_count() == 0) throw Error(Errc::kNoEdges, "pipeline: graph has no edges");
  PipelineReport rep;
  rep.t = t;
  rep.pattern = pattern;
  rep.n = g.order();
  rep.m = g.edge_count();
  rep.eta = cfg.eta.value_or(default_eta(t));
  rep.g_cut = cfg.g_cut;
  rep.frac_cut = cfg.frac_cut;
  rep.lambda = perron(g, cfg.perron).lambda;
  rep.split_lambda = split_lambda_if_defined(t, rep.m);
  rep.above_threshold = rep.split_lambda && above_split_threshold(rep.lambda, *rep.split_lambda);

  rep.count = count_pattern(g, t, pattern, cfg.count).value;
  const long double mt = std::pow(static_cast<long double>(rep.m), static_cast<long double>(t));
  rep.count_over_mt = static_cast<double>(to_long_double(rep.count) / mt);
  rep.sharp_constant = sharp_constant(t, pattern);
  rep.ratio_to_sharp = rep.count_over_mt / rep.sharp_constant;

  if (!rep.above_threshold) {
    rep.branch = Branch::kBelowThreshold;
    return rep;
  }

  rep.prune = heavy_prune(g, t, rep.eta, cfg.perron);
  const PruneTrace& tr = *rep.prune;
  if (tr.empty) {
    rep.branch = Branch::kPrunedEmpty;
    return rep;
  }
  const Graph& h = tr.final_graph;
  const PerronData& pdh = *tr.final_perron;
  rep.g_value = localization_g(pdh, tr.m_final);

  if (*rep.g_value <= cfg.g_cut) {
    rep.branch = Branch::kDelocalized;
    const auto keep = non_isolated(h);
    const Graph core = h.induced(keep);
    rep.h_vertices = keep.size();
    rep.h_count = count_pattern(core, t, pattern, cfg.count).value;
    rep.h_lower_bound = copy_lower(t, pattern, tr.lambda_final, tr.m_final, keep.size());
    return rep;
  }

  try {
    rep.acd = acd_partition(h, rep.eta, cfg.perron, &pdh);
  } catch (const TooDelocalized& e) {
    rep.branch = Branch::kAcdUnavailable;
    rep.acd_error = e.what();
    return rep;
  }
  const AcdPartition& acd = *rep.acd;
  if (static_cast<double>(acd.e_core) >= cfg.frac_cut * static_cast<double>(tr.m_final)) {
    rep.branch = Branch::kDenseCore;
    const Graph core = h.induced(acd.c);
    rep.core_count = count_pattern(core, t, pattern, cfg.count).value;
    if (core.edge_count() > 0) {
      rep.core_lambda = perron(core, cfg.perron).lambda;
      rep.core_lower_bound = copy_lower(t, pattern, *rep.core_lambda, core.edge_count(), core.order());
    }
    return rep;
  }
  rep.branch = Branch::kSparseCore;
  if (acd.e_ad > 0) rep.row_cover = row_cover_analyze(h, acd.a, acd.d, t);
  if (!acd.a.empty() && acd.a.size() < h.order()) rep.core_cut = cut_diagnostics(h, acd.a, pdh, cfg.perron);
  return rep;
}

}  // namespace sslab
