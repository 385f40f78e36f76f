#include "zetamoments/report_json.hpp"

namespace zm {

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const CountAudit& r) {
  return Json{{"t_max", r.t_max},
              {"n_found", r.n_found},
              {"theta_count", r.theta_count},
              {"main_term", r.main_term},
              {"deviation_theta", r.deviation_theta},
              {"deviation_main", r.deviation_main}};
}

Json to_json(const GonekReport& r) {
  return Json{{"x", r.x},
              {"t_max", r.t_max},
              {"empirical_sum", complex_json(r.empirical_sum)},
              {"main_term", r.main_term},
              {"error_budget", r.error_budget},
              {"nearest_pp_distance", r.nearest_pp_distance},
              {"fitted_constant", r.fitted_constant},
              {"zeros_used", r.zeros_used}};
}

Json to_json(const MeanSquareReport& r) {
  return Json{{"xi", r.xi},
              {"alpha", complex_json(r.alpha)},
              {"t_max", r.t_max},
              {"lhs", r.lhs},
              {"rhs_scale", r.rhs_scale},
              {"ratio", r.ratio},
              {"m_xi", r.m_xi},
              {"coeff_abs_sum", r.coeff_abs_sum},
              {"zeros_used", r.zeros_used}};
}

Json to_json(const FSumReport& r) {
  return Json{{"total", r.total}, {"window_part", r.window_part}, {"tail_part", r.tail_part}, {"zeros_used", r.zeros_used}};
}

Json to_json(const MomentReport& r) {
  return Json{{"k", r.k},
              {"ell", r.ell},
              {"alpha", complex_json(r.alpha)},
              {"t_max", r.t_max},
              {"raw_sum", r.raw_sum},
              {"naive_sum", r.naive_sum},
              {"normalized", r.normalized},
              {"count", r.count},
              {"conjectured_exponent", r.conjectured_exponent},
              {"ratio_to_conjecture", r.ratio_to_conjecture},
              {"max_term", r.max_term},
              {"abs_error", r.abs_error},
              {"vanishing_terms", r.vanishing_terms}};
}

Json to_json(const CauchyTransferReport& r) {
  return Json{{"k", r.k},
              {"ell", r.ell},
              {"R", r.R},
              {"n_samples", r.n_samples},
              {"lhs", r.lhs},
              {"prefactor", r.prefactor},
              {"max_shifted_sum", r.max_shifted_sum},
              {"rhs_sampled", r.rhs_sampled},
              {"argmax_alpha", complex_json(r.argmax_alpha)},
              {"slack", r.slack},
              {"passed", r.passed},
              {"alphas_sampled", r.alphas_sampled}};
}

Json to_json(const ContinuousMomentReport& r) {
  return Json{{"k", r.k},
              {"t_max", r.t_max},
              {"step", r.step},
              {"t_start", r.t_start},
              {"intervals", r.intervals},
              {"integral", r.integral},
              {"value", r.value}};
}

Json to_json(const VdParams& p) {
  return Json{{"V", p.V},   {"A", p.A},   {"x", p.x},
              {"z", p.z},   {"V1", p.V1}, {"V2", p.V2},
              {"case", vd_case_name(p.vd_case)}, {"bound", p.bound}};
}

Json to_json(const LargeValueHistogram& h) {
  Json params = Json::array();
  for (const auto& p : h.config.params) params.push_back(to_json(p));
  Json cfg{{"t_max", h.config.t_max},
           {"alpha", complex_json(h.config.alpha)},
           {"k_hint", h.config.k_hint},
           {"V_grid", h.config.V_grid},
           {"log_log_T", h.config.log_log_T},
           {"log3_T", h.config.log3_T},
           {"vacuity_threshold", h.config.vacuity_threshold},
           {"interval_split", h.config.interval_split},
           {"params", params}};
  return Json{{"config", cfg},
              {"counts", h.counts},
              {"bound_values", h.bound_values},
              {"total", h.total},
              {"max_log_value", h.max_log_value}};
}

Json to_json(const LemmaAuditTable& t) {
  return Json{{"variant", lemma_variant_name(t.variant)},
              {"used", t.used},
              {"skipped", t.skipped},
              {"min_slack", t.min_slack},
              {"fitted_constant", t.fitted_constant},
              {"argmax_sigma", t.argmax_sigma},
              {"argmax_t", t.argmax_t}};
}

Json to_json(const DifferenceAudit& d) {
  return Json{{"used", d.used},
              {"skipped", d.skipped},
              {"max_difference", d.max_difference},
              {"fitted_constant", d.fitted_constant},
              {"argmax_t", d.argmax_t},
              {"typo_variant_difference", d.typo_variant_difference}};
}

}  // namespace zm
