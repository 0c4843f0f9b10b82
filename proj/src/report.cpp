#include "sslab/report.hpp"

namespace sslab {
namespace {

Json vertices(std::span<const Vertex> vs) {
  Json a = Json::array();
  for (Vertex v : vs) a.push_back(v);
  return a;
}

Json edge(const Edge& e) { return Json::array({e.u, e.v}); }

Json edges(std::span<const Edge> es) {
  Json a = Json::array();
  for (const Edge& e : es) a.push_back(edge(e));
  return a;
}

template <typename T>
Json optional(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json optional_real(const std::optional<long double>& v) {
  return v ? Json(static_cast<double>(*v)) : Json(nullptr);
}

Json optional_exact(const std::optional<BigInt>& v) {
  return v ? exact(*v) : Json(nullptr);
}

Json to_json(const TFlags& f) {
  Json j;
  j["t1"] = f.t1;
  j["t2"] = f.t2;
  j["t3"] = f.t3;
  return j;
}

}  // namespace

Json exact(const BigInt& v) { return v.str(); }

Json document(const char* schema, const Json& body) {
  Json j;
  j["schema"] = schema;
  for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = it.value();
  return j;
}

std::string render(const Json& j) { return j.dump(2) + "\n"; }

Json to_json(const PerronData& pd, bool with_vector) {
  Json j;
  j["lambda"] = pd.lambda;
  j["component_id"] = pd.component_id;
  j["residual"] = pd.residual;
  j["iterations"] = pd.iterations;
  j["max_entry"] = pd.max_entry();
  if (with_vector) j["x"] = pd.x;
  return j;
}

Json to_json(const OpNormEstimate& est) {
  Json j;
  j["p"] = est.p;
  j["q"] = est.q;
  j["value"] = est.value;
  j["converged"] = est.converged;
  j["restarts_used"] = est.restarts_used;
  j["iterations"] = est.iterations;
  j["witness"] = est.witness;
  return j;
}

Json to_json(const SingularTriple& st) {
  Json j;
  j["sigma"] = st.sigma;
  j["converged"] = st.converged;
  j["iterations"] = st.iterations;
  j["v_right"] = st.v_right;
  j["u_left"] = st.u_left;
  return j;
}

Json to_json(const CutDiagnostics& cd) {
  Json j;
  j["lambda"] = cd.lambda;
  j["lambda_u"] = cd.lambda_u;
  j["lambda_w"] = cd.lambda_w;
  j["rho"] = cd.rho;
  j["m_uw"] = cd.m_uw;
  j["mu_u"] = cd.mu_u;
  j["slack_a"] = cd.slack_a;
  j["slack_b"] = cd.slack_b;
  j["slack_c"] = cd.slack_c_applicable ? Json(cd.slack_c) : Json(nullptr);
  j["slack_c_applicable"] = cd.slack_c_applicable;
  return j;
}

Json to_json(const IneqReport& rep) {
  Json j;
  j["v"] = rep.v;
  j["e"] = rep.e;
  j["n"] = rep.n;
  j["big_m"] = rep.big_m;
  j["lambda"] = rep.lambda;
  j["hom"] = exact(rep.hom);
  j["spectral_forms_applicable"] = rep.spectral_forms_applicable;
  j["rhs_i"] = static_cast<double>(rep.rhs_i);
  j["holds_i"] = rep.holds_i;
  j["rhs_ii"] = static_cast<double>(rep.rhs_ii);
  j["holds_ii"] = rep.holds_ii;
  j["rhs_iii"] = static_cast<double>(rep.rhs_iii);
  j["holds_iii"] = rep.holds_iii;
  j["opnorm_value"] = optional(rep.opnorm_value);
  j["opnorm_converged"] = optional(rep.opnorm_converged);
  j["rhs_cert"] = optional_real(rep.rhs_cert);
  j["holds_cert"] = optional(rep.holds_cert);
  j["chain_slack"] = optional(rep.chain_slack);
  j["any_failure"] = rep.any_failure();
  return j;
}

Json to_json(const P3Report& rep) {
  Json j;
  j["t"] = rep.t;
  j["n"] = rep.n;
  j["big_m"] = rep.big_m;
  j["hom"] = exact(rep.hom);
  j["lambda"] = rep.lambda;
  j["lambda_m"] = rep.lambda_m;
  j["lambda2_n"] = rep.lambda2_n;
  j["fails_lambda_m"] = rep.fails_lambda_m;
  j["fails_lambda2_n"] = rep.fails_lambda2_n;
  return j;
}

Json to_json(const PruneTrace& tr) {
  Json j;
  j["eta"] = tr.eta;
  j["t"] = tr.t;
  j["m_initial"] = tr.m_initial;
  j["lambda_initial"] = tr.lambda_initial;
  Json steps = Json::array();
  for (const PruneStep& s : tr.steps) {
    Json k;
    k["deleted"] = edge(s.deleted);
    k["m_i"] = s.m_i;
    k["lambda_i"] = s.lambda_i;
    k["split_lambda"] = optional(s.split_lambda);
    k["delta"] = optional(s.delta);
    k["product"] = s.product;
    k["threshold"] = s.threshold;
    steps.push_back(std::move(k));
  }
  j["steps"] = std::move(steps);
  j["m_final"] = tr.m_final;
  j["lambda_final"] = tr.lambda_final;
  j["empty"] = tr.empty;
  j["alpha"] = tr.alpha;
  j["gap_ratio"] = optional(tr.gap_ratio);
  j["c_eta"] = tr.c_eta;
  j["final_edges"] = edges(tr.final_graph.edges());
  return j;
}

Json to_json(const AcdPartition& p) {
  Json j;
  j["eta"] = p.eta;
  j["l_inf"] = p.l_inf;
  j["g"] = p.g;
  j["g_tilde"] = p.g_tilde;
  j["levels"] = p.levels;
  j["ell"] = p.ell;
  j["i_lo"] = p.i_lo;
  j["i_hi"] = p.i_hi;
  j["f_sizes"] = p.f_sizes;
  j["s_sums"] = p.s_sums;
  j["i_star"] = p.i_star;
  j["s_threshold"] = p.s_threshold;
  j["r_threshold"] = p.r_threshold;
  j["sr"] = p.sr;
  j["sr_bound"] = p.sr_bound;
  j["sr_ok"] = p.sr_ok;
  j["a"] = vertices(p.a);
  j["c"] = vertices(p.c);
  j["d"] = vertices(p.d);
  j["e_ac"] = p.e_ac;
  j["e_core"] = p.e_core;
  j["e_ad"] = p.e_ad;
  j["t_flags"] = to_json(p.t_flags);
  return j;
}

Json to_json(const RowCoverOutcome& rc) {
  Json j;
  j["variant"] = rc.variant == RowCoverVariant::kManyCopies ? "many-copies" : "cover";
  j["t"] = rc.t;
  j["e_ad"] = rc.e_ad;
  j["rho"] = rc.rho;
  j["epsilon"] = rc.epsilon;
  j["theta"] = rc.theta;
  j["r"] = vertices(rc.r);
  j["degenerate"] = rc.degenerate;
  j["e_outside_r"] = rc.e_outside_r;
  if (rc.variant == RowCoverVariant::kManyCopies) {
    j["d_star"] = rc.d_star;
    j["floor_l"] = rc.floor_l;
    j["copy_bound"] = exact(rc.copy_bound);
  } else {
    j["b"] = vertices(rc.b);
    j["e_rest_to_b"] = rc.e_rest_to_b;
    j["e_r_outside_b"] = rc.e_r_outside_b;
  }
  return j;
}

Json to_json(const RegularBundle& b) {
  Json j;
  j["k"] = b.k;
  j["vertices"] = vertices(b.vertices);
  j["edges"] = edges(b.edges);
  j["edge_counts"] = b.edge_counts;
  j["n_vec"] = b.n_vec;
  j["d_k"] = exact(b.d_k);
  j["t_k_size"] = exact(b.t_k_size);
  j["lambda"] = b.lambda;
  j["lambda_k"] = b.lambda_k;
  j["lambda_k_lo"] = b.lambda_k_lo;
  j["lambda_k_hi"] = b.lambda_k_hi;
  j["degree_within_lambda_power"] = b.degree_within_lambda_power();
  j["measured_exponent"] = b.measured_exponent();
  return j;
}

Json to_json(const PipelineReport& rep) {
  Json j;
  j["t"] = rep.t;
  j["pattern"] = pattern_name(rep.pattern);
  j["n"] = rep.n;
  j["m"] = rep.m;
  j["lambda"] = rep.lambda;
  j["split_lambda"] = optional(rep.split_lambda);
  j["above_threshold"] = rep.above_threshold;
  j["eta"] = rep.eta;
  Json h;
  h["g_cut"] = rep.g_cut;
  h["frac_cut"] = rep.frac_cut;
  h["note"] = "finite-size branch cutoffs; heuristic, not derived";
  j["heuristics"] = std::move(h);
  j["branch"] = branch_name(rep.branch);
  j["prune"] = rep.prune ? to_json(*rep.prune) : Json(nullptr);
  j["g_value"] = optional(rep.g_value);
  j["h_vertices"] = optional(rep.h_vertices);
  j["h_count"] = optional_exact(rep.h_count);
  j["h_lower_bound"] = optional(rep.h_lower_bound);
  j["acd"] = rep.acd ? to_json(*rep.acd) : Json(nullptr);
  j["acd_error"] = optional(rep.acd_error);
  j["core_count"] = optional_exact(rep.core_count);
  j["core_lambda"] = optional(rep.core_lambda);
  j["core_lower_bound"] = optional(rep.core_lower_bound);
  j["row_cover"] = rep.row_cover ? to_json(*rep.row_cover) : Json(nullptr);
  j["core_cut"] = rep.core_cut ? to_json(*rep.core_cut) : Json(nullptr);
  j["count"] = exact(rep.count);
  j["count_over_mt"] = rep.count_over_mt;
  j["sharp_constant"] = rep.sharp_constant;
  j["ratio_to_sharp"] = rep.ratio_to_sharp;
  return j;
}

}  // namespace sslab
