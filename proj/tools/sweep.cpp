#include "sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "sslab/error.hpp"
#include "sslab/parallel.hpp"
#include "sslab/rng.hpp"
#include "sslab/sidorenko.hpp"
#include "sslab/spectra.hpp"

namespace sslab {
namespace {

std::int64_t gnm_order(std::int64_t m, int t) {
  return static_cast<std::int64_t>(std::floor(2.0 * std::sqrt(static_cast<double>(m)) - t));
}

std::string real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

const char* sweep_family_name(SweepFamily f) {
  switch (f) {
    case SweepFamily::kGnmBalanced: return "gnm-balanced";
    case SweepFamily::kSplitT: return "split-t";
    case SweepFamily::kSplitTMinus1Perturbed: return "split-t-minus-1-perturbed";
  }
  return "?";
}

std::optional<SweepFamily> parse_sweep_family(std::string_view name) {
  for (SweepFamily f : {SweepFamily::kGnmBalanced, SweepFamily::kSplitT,
                        SweepFamily::kSplitTMinus1Perturbed}) {
    if (name == sweep_family_name(f)) return f;
  }
  return std::nullopt;
}

bool parse_range(std::string_view text, std::int64_t& start, std::int64_t& stop, std::int64_t& step) {
  std::vector<std::int64_t> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t colon = text.find(':', pos);
    const std::string piece(text.substr(pos, colon == std::string_view::npos ? std::string_view::npos : colon - pos));
    if (piece.empty()) return false;
    std::size_t used = 0;
    try {
      parts.push_back(std::stoll(piece, &used));
    } catch (const std::exception&) {
      return false;
    }
    if (used != piece.size()) return false;
    if (colon == std::string_view::npos) break;
    pos = colon + 1;
  }
  if (parts.empty() || parts.size() > 3) return false;
  start = parts[0];
  stop = parts.size() >= 2 ? parts[1] : parts[0];
  step = parts.size() == 3 ? parts[2] : 1;
  return true;
}

std::vector<SweepJob> plan_sweep(const SweepConfig& cfg) {
  if (cfg.t < 2) throw Error(Errc::kInvalidParameter, "sweep: need t >= 2");
  if (cfg.m_step <= 0) throw Error(Errc::kInvalidParameter, "sweep: m step must be positive");
  if (cfg.samples < 1) throw Error(Errc::kInvalidParameter, "sweep: need samples >= 1");
  if (cfg.m_start < 1 || cfg.m_stop < cfg.m_start) {
    throw Error(Errc::kInvalidParameter, "sweep: need 1 <= m start <= m stop");
  }
  if (cfg.families.empty()) throw Error(Errc::kInvalidParameter, "sweep: no families selected");
  std::vector<SweepFamily> fams = cfg.families;
  std::sort(fams.begin(), fams.end());
  fams.erase(std::unique(fams.begin(), fams.end()), fams.end());

  const std::int64_t t = cfg.t;
  std::vector<SweepJob> jobs;
  for (SweepFamily f : fams) {
    for (std::int64_t m = cfg.m_start; m <= cfg.m_stop; m += cfg.m_step) {
      std::uint64_t n = 0;
      switch (f) {
        case SweepFamily::kGnmBalanced: {
          const std::int64_t nn = gnm_order(m, cfg.t);
          if (nn < 2 || m > nn * (nn - 1) / 2) {
            throw Error(Errc::kInvalidParameter, "sweep: gnm-balanced needs m <= C(n,2) with n = floor(2 sqrt(m) - t); m = " +
                                                     std::to_string(m));
          }
          n = static_cast<std::uint64_t>(nn);
          break;
        }
        case SweepFamily::kSplitT:
          if (m < t * (t - 1) / 2) throw Error(Errc::kInvalidParameter, "sweep: split-t needs m >= C(t,2)");
          n = static_cast<std::uint64_t>(SplitSpec::make(t, m).vertex_count());
          break;
        case SweepFamily::kSplitTMinus1Perturbed: {
          if (m - 1 < (t - 1) * (t - 2) / 2) {
            throw Error(Errc::kInvalidParameter, "sweep: split-t-minus-1-perturbed needs m - 1 >= C(t-1,2)");
          }
          const SplitSpec s = SplitSpec::make(t - 1, m - 1);
          if (s.q < 2) {
            throw Error(Errc::kInvalidParameter,
                        "sweep: split-t-minus-1-perturbed needs two independent vertices; m = " + std::to_string(m));
          }
          n = static_cast<std::uint64_t>(s.vertex_count());
          break;
        }
      }
      const std::int64_t samples = f == SweepFamily::kGnmBalanced ? cfg.samples : 1;
      for (std::int64_t s = 0; s < samples; ++s) jobs.push_back({f, m, s, n});
    }
  }
  return jobs;
}

double sweep_work(const SweepConfig& cfg, const std::vector<SweepJob>& jobs) {
  double w = 0.0;
  for (const SweepJob& j : jobs) w += subset_work(j.n, cfg.t);
  return w;
}

Graph sweep_host(const SweepConfig& cfg, const SweepJob& job) {
  switch (job.family) {
    case SweepFamily::kGnmBalanced: {
      const std::uint64_t seed = mix_seed(mix_seed(cfg.seed, static_cast<std::uint64_t>(job.m)),
                                          static_cast<std::uint64_t>(job.sample));
      return sample_gnm(static_cast<std::int64_t>(job.n), job.m, seed);
    }
    case SweepFamily::kSplitT:
      return split_graph(cfg.t, job.m);
    case SweepFamily::kSplitTMinus1Perturbed: {
      // S_{t-1,m-1} plus one edge inside the independent set.
      const Graph base = split_graph(cfg.t - 1, job.m - 1);
      const SplitSpec s = SplitSpec::make(cfg.t - 1, job.m - 1);
      const auto first = static_cast<Vertex>(base.order() - static_cast<std::size_t>(s.q));
      return base.with_edge({first, first + 1});
    }
  }
  throw Error(Errc::kInvalidParameter, "sweep: unknown family");
}

std::vector<SweepRow> run_sweep(const SweepConfig& cfg, const std::vector<SweepJob>& jobs) {
  std::vector<SweepRow> rows(jobs.size());
  const unsigned workers = effective_threads(jobs.size(), cfg.threads);
  CountOptions count;
  count.threads = workers > 1 ? 1 : cfg.threads;
  const double sharp = sharp_constant(cfg.t, cfg.pattern);
  parallel_for(jobs.size(), workers, [&](std::size_t i, unsigned) {
    const SweepJob& job = jobs[i];
    const Graph g = sweep_host(cfg, job);
    SweepRow& row = rows[i];
    row.family = job.family;
    row.m = job.m;
    row.sample = job.sample;
    row.n = g.order();
    row.lambda = perron(g).lambda;
    const std::int64_t k = cfg.t - 1;
    if (job.m >= k * (k - 1) / 2) {
      row.split_lambda = split_lambda(k, job.m);
      row.above_threshold = above_split_threshold(row.lambda, *row.split_lambda);
    }
    row.count = count_pattern(g, cfg.t, cfg.pattern, count).value;
    const long double mt = std::pow(static_cast<long double>(job.m), static_cast<long double>(cfg.t));
    row.count_over_mt = static_cast<double>(to_long_double(row.count) / mt);
    row.sharp_constant = sharp;
    if (job.family == SweepFamily::kGnmBalanced && cfg.pattern == Pattern::kKtt) {
      const auto n = static_cast<std::int64_t>(job.n);
      if (2 * cfg.t <= n && job.m >= static_cast<std::int64_t>(cfg.t) * cfg.t) {
        row.expected = gnm_expected_ktt(n, job.m, cfg.t);
      }
    }
  });
  return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << kSweepHeader << '\n'
      << "family,m,sample,n,lambda,split_lambda,above_threshold,count,count_over_mt,sharp_constant,expected\n";
  for (const SweepRow& r : rows) {
    out << sweep_family_name(r.family) << ',' << r.m << ',' << r.sample << ',' << r.n << ','
        << real(r.lambda) << ',' << (r.split_lambda ? real(*r.split_lambda) : "") << ','
        << (r.above_threshold ? 1 : 0) << ',' << r.count.str() << ',' << real(r.count_over_mt) << ','
        << real(r.sharp_constant) << ',' << (r.expected ? real(*r.expected) : "") << '\n';
  }
}

}  // namespace sslab
