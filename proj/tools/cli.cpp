#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "sslab/error.hpp"
#include "sslab/graph.hpp"
#include "sslab/homcounts.hpp"
#include "sslab/regularize.hpp"
#include "sslab/report.hpp"
#include "sslab/sidorenko.hpp"
#include "sslab/spectra.hpp"
#include "sslab/supersat.hpp"
#include "sweep.hpp"

namespace sslab {
namespace {

inline constexpr double kDefaultBudget = 1e9;
inline constexpr const char* kGraphSchema = "sslab.graph/1";
inline constexpr const char* kSweepSchema = "sslab.sweep/1";

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string out_path;
  std::uint64_t seed = 0;
  double tol = PerronOptions{}.tol;
  bool json = false;
  unsigned threads = 0;
};

struct HostArgs {
  std::string in;
  std::string family;
  std::int64_t k = 0, m = 0, n = 0, a = 0, b = 0;
};

struct PatternArgs {
  std::string name = "c2t";
  int t = 2;
  std::int64_t len = 3;
  std::string file;
};

struct BudgetArgs {
  double budget = kDefaultBudget;
  bool force = false;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--out", c.out_path, "Write the result to this file instead of stdout");
  app->add_option("--seed", c.seed, "Random seed");
  app->add_option("--tol", c.tol, "Perron iteration tolerance")->check(CLI::PositiveNumber);
  app->add_flag("--json", c.json, "Emit the full JSON document (default: key/value summary)");
  app->add_option("--threads", c.threads, "Worker threads (default: SSLAB_THREADS or all cores)");
}

void add_host(CLI::App* app, HostArgs& h) {
  app->add_option("--in", h.in, "Host graph edge-list file");
  app->add_option("--family", h.family,
                  "Host family: split, star, clique, cycle, path, complete-bipartite, empty, gnm, "
                  "p3-counterexample");
  app->add_option("--k", h.k, "split: clique size");
  app->add_option("--m", h.m, "split, gnm: edge count");
  app->add_option("--n", h.n, "vertices (star: leaves; p3-counterexample: star size t)");
  app->add_option("--a", h.a, "complete-bipartite: first side");
  app->add_option("--b", h.b, "complete-bipartite: second side");
}

void add_pattern(CLI::App* app, PatternArgs& p) {
  app->add_option("--pattern", p.name, "Pattern: c2t, ktt, path, cycle, star, custom")
      ->capture_default_str();
  app->add_option("--t", p.t, "t for c2t (C_2t) and ktt (K_t,t)")->capture_default_str();
  app->add_option("--len", p.len, "Vertices for path/cycle, leaves for star")->capture_default_str();
  app->add_option("--pattern-in", p.file, "Pattern edge-list file for --pattern custom");
}

void add_budget(CLI::App* app, BudgetArgs& b) {
  app->add_option("--budget", b.budget, "Refuse counting work above this many steps")
      ->capture_default_str();
  app->add_flag("--force", b.force, "Ignore the work budget");
}

double budget_of(const BudgetArgs& b) {
  return b.force ? std::numeric_limits<double>::infinity() : b.budget;
}

Graph load_host(const HostArgs& h, const Common& c) {
  if (!h.in.empty()) {
    if (!h.family.empty()) throw UsageError("give either --in or --family, not both");
    return load_edge_list(h.in);
  }
  if (h.family.empty()) throw UsageError("a host graph is required (--in FILE or --family NAME)");
  if (h.family == "gnm") return sample_gnm(h.n, h.m, c.seed);
  if (h.family == "p3-counterexample") return p3_counterexample(h.n).graph;
  const auto fam = parse_family(h.family);
  if (!fam) throw UsageError("unknown family '" + h.family + "'");
  FamilyRequest req;
  req.family = *fam;
  req.k = h.k;
  req.m = h.m;
  req.n = h.n;
  req.a = h.a;
  req.b = h.b;
  req.seed = c.seed;
  return make_family(req);
}

Graph load_pattern(const PatternArgs& p, Json& desc) {
  desc = Json::object();
  desc["name"] = p.name;
  Graph h;
  if (p.name == "c2t") {
    desc["t"] = p.t;
    h = cycle_graph(2 * static_cast<std::int64_t>(p.t));
  } else if (p.name == "ktt") {
    desc["t"] = p.t;
    h = complete_bipartite(p.t, p.t);
  } else if (p.name == "path") {
    desc["len"] = p.len;
    h = path_graph(p.len);
  } else if (p.name == "cycle") {
    desc["len"] = p.len;
    h = cycle_graph(p.len);
  } else if (p.name == "star") {
    desc["len"] = p.len;
    h = star_graph(p.len);
  } else if (p.name == "custom") {
    if (p.file.empty()) throw UsageError("--pattern custom needs --pattern-in FILE");
    desc["file"] = p.file;
    h = load_edge_list(p.file);
  } else {
    throw UsageError("unknown pattern '" + p.name + "'");
  }
  desc["v"] = h.order();
  desc["e"] = h.edge_count();
  return h;
}

std::vector<Vertex> complement(std::size_t n, const std::vector<Vertex>& a) {
  std::vector<char> in(n, 0);
  for (Vertex v : a) {
    if (v >= n) throw UsageError("vertex " + std::to_string(v) + " is out of range");
    in[v] = 1;
  }
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < n; ++v) {
    if (!in[v]) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

void emit_text(const std::string& text, const Common& c, std::ostream& out) {
  if (c.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.out_path, std::ios::binary);
  if (!f) throw UsageError("cannot open '" + c.out_path + "' for writing");
  f << text;
  if (!f) throw UsageError("write to '" + c.out_path + "' failed");
}

void summarize(const Json& j, const std::string& prefix, std::ostream& s) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    const Json& v = it.value();
    if (v.is_object()) {
      summarize(v, key, s);
    } else if (v.is_array()) {
      s << key << ": [" << v.size() << " entries]\n";
    } else if (v.is_string()) {
      s << key << ": " << v.get<std::string>() << "\n";
    } else {
      s << key << ": " << v.dump() << "\n";
    }
  }
}

void emit_report(const Json& doc, const Common& c, std::ostream& out) {
  if (c.json) {
    emit_text(render(doc), c, out);
    return;
  }
  std::ostringstream s;
  summarize(doc, "", s);
  emit_text(s.str(), c, out);
}

PerronOptions perron_opts(const Common& c) {
  PerronOptions o;
  o.tol = c.tol;
  return o;
}

Json graph_header(const Graph& g) {
  Json j;
  j["n"] = g.order();
  j["m"] = g.edge_count();
  j["big_m"] = g.big_m();
  return j;
}

Json merge(Json a, const Json& b) {
  for (auto it = b.begin(); it != b.end(); ++it) a[it.key()] = it.value();
  return a;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral Sidorenko and supersaturation lab"};
  app.name(args.empty() ? "sslab" : args[0]);
  app.require_subcommand(1);

  Common common;
  HostArgs host;
  PatternArgs pattern;
  BudgetArgs budget;

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a graph and write it as an edge list");
  add_common(gen, common);
  add_host(gen, host);

  // spectral
  bool with_vector = false;
  std::optional<std::int64_t> split_k;
  std::vector<double> opnorm_pq;
  int restarts = OpNormOptions{}.restarts;
  std::vector<Vertex> cut_set;
  auto* spectral = app.add_subcommand("spectral", "Perron data, split radius, operator norm, vertex cut");
  add_common(spectral, common);
  add_host(spectral, host);
  spectral->add_flag("--vector", with_vector, "Include the Perron vector");
  spectral->add_option("--split-k", split_k, "Also report lambda(S_{k,m}) for the host's m");
  spectral->add_option("--opnorm", opnorm_pq, "Estimate ||A||_{p->q}; give p,q")
      ->delimiter(',')
      ->expected(2);
  spectral->add_option("--restarts", restarts, "Random restarts for --opnorm")->capture_default_str();
  spectral->add_option("--cut", cut_set, "Vertex set U for the cut diagnostics (comma list)")
      ->delimiter(',');

  // hom
  bool want_inj = false;
  bool want_copies = false;
  auto* hom = app.add_subcommand("hom", "Homomorphism and copy counts");
  add_common(hom, common);
  add_host(hom, host);
  add_pattern(hom, pattern);
  add_budget(hom, budget);
  hom->add_flag("--inj", want_inj, "Also count injective homomorphisms");
  hom->add_flag("--copies", want_copies, "Also count unlabelled copies (c2t and ktt)");

  // check
  auto* check = app.add_subcommand("check", "Evaluate the homomorphism inequalities; exit 1 on a failure");
  add_common(check, common);
  add_host(check, host);
  add_pattern(check, pattern);

  // prune
  int prune_t = 2;
  std::optional<double> eta;
  auto* prune = app.add_subcommand("prune", "Heavy-edge pruning trace");
  add_common(prune, common);
  add_host(prune, host);
  prune->add_option("--t", prune_t, "Pattern parameter t")->capture_default_str();
  prune->add_option("--eta", eta, "Heaviness parameter (default 1/(16t))");

  // partition
  bool no_prune = false;
  auto* partition = app.add_subcommand("partition", "A/C/D level-set partition of the pruned graph");
  add_common(partition, common);
  add_host(partition, host);
  partition->add_option("--t", prune_t, "Pattern parameter t")->capture_default_str();
  partition->add_option("--eta", eta, "Heaviness parameter (default 1/(16t))");
  partition->add_flag("--no-prune", no_prune, "Partition the input as given (it must be heavy)");

  // rowcover
  std::vector<Vertex> set_a;
  std::vector<Vertex> set_d;
  auto* rowcover = app.add_subcommand("rowcover", "Aligned-row analysis of the A-D incidence");
  add_common(rowcover, common);
  add_host(rowcover, host);
  rowcover->add_option("--t", prune_t, "Pattern parameter t")->capture_default_str();
  rowcover->add_option("--A", set_a, "Row set A (comma list)")->delimiter(',')->required();
  rowcover->add_option("--D", set_d, "Column set D (comma list; default: complement of A)")->delimiter(',');

  // regularize
  int reg_k = 2;
  bool materialize = false;
  std::uint64_t cap = kDefaultFkCap;
  auto* regularize = app.add_subcommand("regularize", "Type-class regular subgraph of the tensor power");
  add_common(regularize, common);
  add_host(regularize, host);
  regularize->add_option("--power", reg_k, "Even tensor exponent k")->capture_default_str();
  regularize->add_flag("--materialize", materialize, "Build F_k explicitly");
  regularize->add_option("--cap", cap, "Vertex cap for --materialize")->capture_default_str();

  // pipeline
  std::string pipe_pattern = "ktt";
  double g_cut = PipelineConfig{}.g_cut;
  double frac_cut = PipelineConfig{}.frac_cut;
  auto* pipeline = app.add_subcommand("pipeline", "Prune, partition and count with all diagnostics");
  add_common(pipeline, common);
  add_host(pipeline, host);
  add_budget(pipeline, budget);
  pipeline->add_option("--t", prune_t, "Pattern parameter t")->capture_default_str();
  pipeline->add_option("--pattern", pipe_pattern, "ktt or c2t")->capture_default_str();
  pipeline->add_option("--eta", eta, "Heaviness parameter (default 1/(16t))");
  pipeline->add_option("--g-cut", g_cut, "Localization cutoff (heuristic)")->capture_default_str();
  pipeline->add_option("--frac-cut", frac_cut, "Dense-core edge fraction (heuristic)")->capture_default_str();

  // sweep
  std::string sweep_range;
  std::int64_t samples = 1;
  std::string sweep_families = "gnm-balanced,split-t,split-t-minus-1-perturbed";
  auto* sweep = app.add_subcommand("sweep", "Copy-count sweep over m and host families (CSV)");
  add_common(sweep, common);
  add_budget(sweep, budget);
  sweep->add_option("--t", prune_t, "Pattern parameter t")->capture_default_str();
  sweep->add_option("--pattern", pipe_pattern, "ktt or c2t")->capture_default_str();
  sweep->add_option("--m", sweep_range, "Edge counts start:stop:step (inclusive)")->required();
  sweep->add_option("--samples", samples, "Samples per m for random families")->capture_default_str();
  sweep->add_option("--families", sweep_families, "Comma list of families")->capture_default_str();

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitError;
  }

  try {
    CountOptions count;
    count.threads = common.threads;
    count.budget = budget_of(budget);
    const PerronOptions popts = perron_opts(common);

    if (*gen) {
      const Graph g = load_host(host, common);
      if (common.json) {
        Json j = graph_header(g);
        Json es = Json::array();
        for (const Edge& e : g.edges()) es.push_back(Json::array({e.u, e.v}));
        j["edges"] = std::move(es);
        emit_text(render(document(kGraphSchema, j)), common, out);
      } else {
        emit_text(write_edge_list(g), common, out);
      }
      return kExitOk;
    }

    if (*spectral) {
      const Graph g = load_host(host, common);
      Json j = graph_header(g);
      const PerronData pd = perron(g, popts);
      j["perron"] = to_json(pd, with_vector);
      if (split_k) {
        Json s;
        s["k"] = *split_k;
        s["lambda"] = split_lambda(*split_k, static_cast<std::int64_t>(g.edge_count()));
        j["split"] = std::move(s);
      }
      if (!opnorm_pq.empty()) {
        OpNormOptions o;
        o.restarts = restarts;
        o.seed = common.seed;
        j["opnorm"] = to_json(opnorm(g, opnorm_pq[0], opnorm_pq[1], o));
      }
      if (!cut_set.empty()) j["cut"] = to_json(cut_diagnostics(g, cut_set, pd, popts));
      emit_report(document(kSpectralSchema, j), common, out);
      return kExitOk;
    }

    if (*hom) {
      const Graph g = load_host(host, common);
      Json desc;
      const Graph h = load_pattern(pattern, desc);
      Json j;
      j["pattern"] = desc;
      j = merge(j, graph_header(g));
      const CountResult hr = hom_count(h, g, count);
      j["hom"] = exact(hr.value);
      j["method"] = count_method_name(hr.method);
      if (want_inj) j["inj"] = exact(inj_count(h, g, count).value);
      if (want_copies) {
        if (pattern.name != "c2t" && pattern.name != "ktt") {
          throw UsageError("--copies needs --pattern c2t or ktt");
        }
        const Pattern p = pattern.name == "c2t" ? Pattern::kC2t : Pattern::kKtt;
        const CountResult cr = count_pattern(g, pattern.t, p, count);
        j["copies"] = exact(cr.value);
        j["copies_method"] = count_method_name(cr.method);
      }
      emit_report(document(kHomSchema, j), common, out);
      return kExitOk;
    }

    if (*check) {
      const Graph g = load_host(host, common);
      Json desc;
      const Graph h = load_pattern(pattern, desc);
      CheckOptions co;
      co.count = count;
      co.perron = popts;
      co.opnorm.seed = common.seed;
      const IneqReport rep = check_suite(h, g, co);
      Json j;
      j["pattern"] = desc;
      j = merge(j, to_json(rep));
      if (host.in.empty() && host.family == "p3-counterexample") {
        j["p3"] = document(kP3Schema, to_json(p3_counterexample(host.n)));
      }
      emit_report(document(kCheckSchema, j), common, out);
      return rep.any_failure() ? kExitInequalityFailure : kExitOk;
    }

    if (*prune) {
      const Graph g = load_host(host, common);
      const PruneTrace tr = heavy_prune(g, prune_t, eta.value_or(default_eta(prune_t)), popts);
      emit_report(document(kPruneSchema, merge(graph_header(g), to_json(tr))), common, out);
      return kExitOk;
    }

    if (*partition) {
      const Graph g = load_host(host, common);
      const double e = eta.value_or(default_eta(prune_t));
      Json j = graph_header(g);
      j["pruned"] = !no_prune;
      AcdPartition p;
      if (no_prune) {
        p = acd_partition(g, e, popts);
      } else {
        const PruneTrace tr = heavy_prune(g, prune_t, e, popts);
        if (tr.empty) throw Error(Errc::kNoEdges, "partition: pruning removed every edge");
        j["m_pruned"] = tr.m_final;
        p = acd_partition(tr.final_graph, e, popts, &*tr.final_perron);
      }
      j["acd"] = to_json(p);
      emit_report(document(kPartitionSchema, j), common, out);
      return kExitOk;
    }

    if (*rowcover) {
      const Graph g = load_host(host, common);
      if (set_d.empty()) set_d = complement(g.order(), set_a);
      const RowCoverOutcome rc = row_cover_analyze(g, set_a, set_d, prune_t);
      emit_report(document(kRowCoverSchema, merge(graph_header(g), to_json(rc))), common, out);
      return kExitOk;
    }

    if (*regularize) {
      const Graph g = load_host(host, common);
      const RegularBundle b = build_regular(g, reg_k);
      Json j = graph_header(g);
      j["bundle"] = to_json(b);
      const EdgeDistribution dist = edge_distribution(g);
      Json ent;
      ent["entropy_gap"] = entropy_gap(dist);
      ent["ln_lambda"] = std::log(dist.lambda);
      j["entropy"] = std::move(ent);
      if (materialize) {
        const FkGraph fk = materialize_fk(b, g, cap);
        Json f;
        f["order"] = fk.graph.order();
        f["edges"] = fk.graph.edge_count();
        f["regular"] = fk.graph.is_regular();
        f["degree"] = fk.graph.order() > 0 ? fk.graph.degree(0) : 0;
        j["fk"] = std::move(f);
      }
      emit_report(document(kRegularSchema, j), common, out);
      return kExitOk;
    }

    if (*pipeline) {
      const Graph g = load_host(host, common);
      const auto pat = parse_pattern(pipe_pattern);
      if (!pat) throw UsageError("unknown pipeline pattern '" + pipe_pattern + "'");
      PipelineConfig cfg;
      cfg.eta = eta;
      cfg.g_cut = g_cut;
      cfg.frac_cut = frac_cut;
      cfg.perron = popts;
      cfg.count = count;
      const PipelineReport rep = supersat_count(g, prune_t, *pat, cfg);
      emit_report(document(kPipelineSchema, to_json(rep)), common, out);
      return kExitOk;
    }

    if (*sweep) {
      SweepConfig cfg;
      cfg.t = prune_t;
      const auto pat = parse_pattern(pipe_pattern);
      if (!pat) throw UsageError("unknown sweep pattern '" + pipe_pattern + "'");
      cfg.pattern = *pat;
      if (!parse_range(sweep_range, cfg.m_start, cfg.m_stop, cfg.m_step)) {
        throw UsageError("--m expects start:stop:step");
      }
      cfg.samples = samples;
      cfg.seed = common.seed;
      cfg.threads = common.threads;
      cfg.budget = budget_of(budget);
      std::stringstream fams(sweep_families);
      for (std::string name; std::getline(fams, name, ',');) {
        const auto f = parse_sweep_family(name);
        if (!f) throw UsageError("unknown sweep family '" + name + "'");
        cfg.families.push_back(*f);
      }
      const auto jobs = plan_sweep(cfg);
      const double work = sweep_work(cfg, jobs);
      err << "sweep: " << jobs.size() << " rows, estimated counting work " << work << " steps\n";
      if (work > cfg.budget) {
        err << "sweep: refusing to run above the budget of " << cfg.budget << " steps; pass --force\n";
        return kExitError;
      }
      const auto rows = run_sweep(cfg, jobs);
      if (common.json) {
        Json arr = Json::array();
        for (const SweepRow& r : rows) {
          Json k;
          k["family"] = sweep_family_name(r.family);
          k["m"] = r.m;
          k["sample"] = r.sample;
          k["n"] = r.n;
          k["lambda"] = r.lambda;
          k["split_lambda"] = r.split_lambda ? Json(*r.split_lambda) : Json(nullptr);
          k["above_threshold"] = r.above_threshold;
          k["count"] = exact(r.count);
          k["count_over_mt"] = r.count_over_mt;
          k["sharp_constant"] = r.sharp_constant;
          k["expected"] = r.expected ? Json(*r.expected) : Json(nullptr);
          arr.push_back(std::move(k));
        }
        Json j;
        j["t"] = cfg.t;
        j["pattern"] = pattern_name(cfg.pattern);
        j["rows"] = std::move(arr);
        emit_text(render(document(kSweepSchema, j)), common, out);
      } else {
        std::ostringstream s;
        write_sweep_csv(s, rows);
        emit_text(s.str(), common, out);
      }
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const Error& e) {
    if (common.json) {
      Json j;
      j["code"] = errc_name(e.code());
      j["message"] = e.what();
      err << render(document(kErrorSchema, j));
    } else {
      err << "error [" << errc_name(e.code()) << "]: " << e.what() << "\n";
    }
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace sslab
