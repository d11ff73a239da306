#include "qlink/verify.hpp"

#include <functional>
#include <map>

#include "qlink/agsum.hpp"
#include "qlink/errors.hpp"
#include "qlink/hyperg.hpp"
#include "qlink/parse.hpp"

namespace qlink {

namespace {

using Results = std::vector<CheckResult>;

CheckResult flag(const std::string& name, bool ok, const std::string& detail = "") {
  return {name, ok, ok ? "" : detail};
}

CheckResult residual_zero(const std::string& name, const TruncatedSeries& r) {
  if (r.is_zero()) return {name, true, ""};
  const auto& [m, c] = r.terms().front();
  return {name, false, "residual has " + c.get_str() + " at " + to_string(m)};
}

CheckResult report_zero(const std::string& name, const ResidualReport& r) {
  for (const auto& e : r.entries)
    if (auto m = e.first_nonzero()) return {name, false, "M=" + std::to_string(e.m) + ": nonzero at " + to_string(*m)};
  return {name, true, ""};
}

std::vector<MultiPoly> coefficient_vector(const QDifferenceEquation& eq, std::uint32_t n) {
  std::vector<MultiPoly> v(n);
  for (const auto& t : eq.terms)
    if (t.shift < n) v[t.shift] = t.p;
  return v;
}

struct EnumerationCase {
  PresetId id;
  std::set<int> excluded;
  StatSpec stats;
};

CheckResult preset_check(PresetId id, std::uint32_t n) {
  const std::string name = preset_name(id);
  static const std::map<PresetId, EnumerationCase> cases = {
      {PresetId::S21, {PresetId::S21, {}, StatSpec::even_parts()}},
      {PresetId::S22, {PresetId::S22, {1}, StatSpec::even_parts()}},
      {PresetId::S23, {PresetId::S23, {1, 2, 3}, StatSpec::even_parts()}},
      {PresetId::S31, {PresetId::S31, {}, StatSpec::multiples_of_3()}},
      {PresetId::S32, {PresetId::S32, {1}, StatSpec::multiples_of_3()}},
      {PresetId::S33, {PresetId::S33, {1, 2, 3}, StatSpec::multiples_of_3()}},
      {PresetId::ABM, {PresetId::ABM, {}, StatSpec::parts_only()}},
      {PresetId::KUR, {PresetId::KUR, {}, StatSpec::parts_only()}},
  };
  if (id == PresetId::G_ANALYTIC)
    return compare_series(name, evaluate_preset(id, n), distinct_nonmultiple_of_3_product(n));
  if (id == PresetId::A_ANALYTIC) return compare_series(name, evaluate_preset(id, n), trinomial_product(n));
  const auto& c = cases.at(id);
  return compare_series(name, evaluate_preset(id, n), gf_from_enumeration(n, c.excluded, c.stats));
}

PolyMatrix printed_class_matrix() {
  const char* entries[] = {
      "1 + xq + xyq^2 + xq^3 + xyq^4 + x^2yq^5", "xq^5 + x^2q^6 + x^2yq^7", "xyq^6 + x^2yq^7 + x^2y^2q^8",
      "1 + xyq^2 + xq^3 + xyq^4",                "xq^5 + x^2yq^7",          "xyq^6 + x^2y^2q^8",
      "1 + xyq^4",                               "xq^5",                    "xyq^6",
  };
  std::vector<MultiPoly> v;
  for (const char* e : entries) v.push_back(parse_poly(e));
  return PolyMatrix(3, 3, std::move(v));
}

Results ideal_suite(const SuiteOptions& o) {
  Results out;
  const IdealSpec spec = schur_mod6_preset();
  const auto eqv = verify_equivalence(spec, is_schur_partition, static_cast<int>(o.order));
  out.push_back(flag("ideal.membership", eqv.equal,
                     eqv.first_counterexample ? "first counterexample " + to_string(*eqv.first_counterexample) : ""));
  const ClassReduction red = reduce_classes(spec);
  out.push_back(flag("ideal.class_matrix", red.reduced == printed_class_matrix(), "reduced matrix differs"));
  out.push_back(flag("ideal.lift", lift_reduced(red, spec) == mat_mul(mat_mul(linking_matrix(spec), weight_matrix(spec)),
                                                                   linking_matrix(spec)),
                     "lifted matrix differs from A.W.A"));
  const auto a = solve_vector_equation(red.reduced, 6, o.order);
  bool zero = true;
  for (const auto& r : vector_equation_residual(red.reduced, 6, a)) zero = zero && r.is_zero();
  out.push_back(flag("ideal.matrix_equation", zero, "nonzero residual"));
  const auto even = StatSpec::even_parts();
  out.push_back(compare_series("ideal.A1", a[0], gf_from_enumeration(o.order, {}, even)));
  out.push_back(compare_series("ideal.A2", a[1], gf_from_enumeration(o.order, {1}, even)));
  out.push_back(compare_series("ideal.A3", a[2], gf_from_enumeration(o.order, {1, 2, 3}, even)));
  return out;
}

Results qde_suite(const SuiteOptions& o) {
  Results out;
  const auto red = reduce_classes(schur_mod6_preset());
  out.push_back(flag("qde.stacked_det", determinant(stacked_rows(red.reduced, 6)).is_zero(), "det is nonzero"));
  const auto derived = derive_qde(red.reduced, 6);
  const auto printed = schur_qde();
  out.push_back(flag("qde.proportional", proportional(coefficient_vector(derived, 3), coefficient_vector(printed, 3)),
                     "derived triple is not proportional to the printed one"));
  const auto a1 = gf_from_enumeration(o.order, {}, StatSpec::even_parts());
  out.push_back(residual_zero("qde.residual", qde_check(printed, a1, o.order)));
  out.push_back(residual_zero("qde.derived_residual", qde_check(derived, a1, o.order)));
  return out;
}

Results coeffs_suite(const SuiteOptions& o) {
  Results out;
  out.push_back(flag("coeffs.recurrence_from_qde", qde_to_recurrence(schur_qde()) == schur_recurrence(),
                     "coefficient extraction differs from the printed recurrence"));
  const auto a = recurrence_solve(schur_recurrence(), {TruncatedSeries::one(o.order)}, 3, o.order);
  for (std::uint32_t m = 1; m <= 3; ++m)
    out.push_back(compare_series("coeffs.a" + std::to_string(m), a[m], printed_coefficient(m, o.order)));
  return out;
}

Results multisum_suite(const SuiteOptions& o) {
  const auto rec = multisum_recurrence();
  const auto ta = CoefficientSequence::from_series(ag_evaluate(preset(PresetId::S21).spec, o.order), o.m_max + 4);
  return {report_zero("multisum.residual", recurrence_check(rec, ta, 0, o.m_max, o.order))};
}

Results closure_suite(const SuiteOptions& o) {
  Results out;
  const std::uint32_t m_max = std::max<std::uint32_t>(o.m_max, 5);
  const auto a = recurrence_solve(schur_recurrence(), {TruncatedSeries::one(o.order)}, m_max, o.order);
  const auto ta = CoefficientSequence::from_series(ag_evaluate(preset(PresetId::S21).spec, o.order), m_max);
  const auto r = closure_check(a, ta, m_max, o.order);
  out.push_back(flag("closure.a_eq_ta", !r.first_mismatch,
                     r.first_mismatch ? "first mismatch at M=" + std::to_string(*r.first_mismatch) : ""));
  out.push_back(report_zero("closure.recurrence_on_d", r.on_difference));
  out.push_back(flag("closure.leading_factor", r.leading_factor_ok, "leading coefficient is not monomial times unit"));
  return out;
}

Results counts_suite(const SuiteOptions& o) {
  Results out;
  const int n = static_cast<int>(o.order);
  const auto d = marginal_by_n(theorem_stat_table(TheoremStat::D, n), n);
  out.push_back(flag("counts.A_eq_D", marginal_by_n(theorem_stat_table(TheoremStat::A, n), n) == d, "A(n) != D(n)"));
  out.push_back(flag("counts.C_eq_D", marginal_by_n(theorem_stat_table(TheoremStat::C, n), n) == d, "C(n) != D(n)"));
  out.push_back(flag("counts.B_eq_D_refined",
                     theorem_stat_table(TheoremStat::B, n) == theorem_stat_table(TheoremStat::G_D, n),
                     "B(m,n) != D(m,n)"));
  out.push_back(flag("counts.C_eq_Dprime_refined",
                     theorem_stat_table(TheoremStat::C, n) == theorem_stat_table(TheoremStat::Dprime, n),
                     "C(m,n) != D'(m,n)"));
  return out;
}

Results splitting_suite(const SuiteOptions& o) {
  Results out;
  out.push_back(flag("splitting.splitting", splitting_identity_check(), "nine terms do not sum to 1"));
  for (int j = 1; j <= 9; ++j)
    out.push_back(compare_series("splitting.nine_term." + std::to_string(j), nine_term_lhs(j, o.order),
                                 nine_term_rhs(j, o.order)));
  std::string bad;
  for (int k1 = 0; k1 <= 2 && bad.empty(); ++k1)
    for (int k2 = 0; k2 <= 2 && bad.empty(); ++k2)
      for (int k3 = 0; k3 <= 2 && bad.empty(); ++k3)
        if (!shift_lemma_check({1, 2, 9}, {k1, k2, k3}, o.order))
          bad = "fails at k=(" + std::to_string(k1) + "," + std::to_string(k2) + "," + std::to_string(k3) + ")";
  out.push_back(flag("splitting.shift_lemma", bad.empty(), bad));
  out.push_back(compare_series("splitting.sigma_is_analytic_sum", sigma_evaluate({1, 2, 9}, o.order),
                               evaluate_preset(PresetId::A_ANALYTIC, o.order)));
  out.push_back(flag("splitting.functional_equation", functional_equation_check(o.order), "functional equation fails"));
  return out;
}

Results sigma_suite(const SuiteOptions& o) {
  Results out;
  const auto s_series = evaluate_preset(PresetId::A_ANALYTIC, o.order);
  const auto s = CoefficientSequence::from_series(s_series, o.m_max + 6);
  out.push_back(report_zero("sigma.recurrence_residual", recurrence_check(sigma_recurrence(), s, 0, o.m_max, o.order)));
  std::vector<TruncatedSeries> initial(s.entries.begin(), s.entries.begin() + 6);
  try {
    out.push_back(flag("sigma.qde_from_recurrence", recurrence_to_qde(sigma_recurrence(), initial) == sigma_qde(),
                       "summed equation differs from the printed one"));
  } catch (const BoundaryNotCollapsed& e) {
    out.push_back(flag("sigma.qde_from_recurrence", false, e.what()));
  }
  out.push_back(residual_zero("sigma.qde_residual", qde_check(sigma_qde(), s_series, o.order)));
  out.push_back(report_zero("sigma.qde_recurrence_on_s",
                            recurrence_check(qde_to_recurrence(sigma_qde()), s, 0, o.m_max, o.order)));
  out.push_back(flag("sigma.product_window", verify_product_qde(), "window identity fails"));
  const auto solved = qde_solve(sigma_qde(), TruncatedSeries::one(o.order), o.order);
  out.push_back(compare_series("sigma.unique_solution_is_product", solved, trinomial_product(o.order)));
  out.push_back(compare_series("sigma.unique_solution_is_sum", solved, s_series));
  return out;
}

const std::vector<std::pair<std::string, std::function<Results(const SuiteOptions&)>>>& suites() {
  static const std::vector<std::pair<std::string, std::function<Results(const SuiteOptions&)>>> table = {
      {"presets",
       [](const SuiteOptions& o) {
         Results r;
         for (auto id : all_presets()) r.push_back(preset_check(id, o.order));
         return r;
       }},
      {"ideal", ideal_suite},         {"qde", qde_suite},         {"coeffs", coeffs_suite},
      {"multisum", multisum_suite},   {"closure", closure_suite}, {"counts", counts_suite},
      {"splitting", splitting_suite}, {"sigma", sigma_suite},
  };
  return table;
}

}  // namespace

CheckResult compare_series(const std::string& name, const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
  const auto cmp = series_eq(lhs, rhs);
  if (cmp.equal) return {name, true, ""};
  return {name, false,
          "differs at " + to_string(*cmp.first_difference) + ": " + cmp.lhs.get_str() + " vs " + cmp.rhs.get_str()};
}

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (auto id : all_presets()) names.push_back(preset_name(id));
  for (const auto& [name, fn] : suites()) names.push_back(name);
  names.push_back("all");
  return names;
}

std::vector<CheckResult> run_suite(const std::string& name, const SuiteOptions& options) {
  if (auto id = preset_from_name(name)) return {preset_check(*id, options.order)};
  if (name == "all") {
    Results out;
    for (const auto& [n, fn] : suites()) {
      auto r = fn(options);
      out.insert(out.end(), r.begin(), r.end());
    }
    return out;
  }
  for (const auto& [n, fn] : suites())
    if (n == name) return fn(options);
  throw InvalidSpec("unknown check \"" + name + "\"");
}

Json check_results_to_json(const std::vector<CheckResult>& results) {
  Json checks = Json::array();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed;
    Json c = {{"name", r.name}, {"passed", r.passed}};
    if (!r.passed) c["detail"] = r.detail;
    checks.push_back(c);
  }
  return Json{{"passed", all}, {"checks", checks}};
}

bool same_ideal(const IdealSpec& a, const IdealSpec& b) {
  return a.modulus == b.modulus && a.blocks == b.blocks && a.linking == b.linking && a.stats == b.stats;
}

DeriveReport derive_for_ideal(const IdealSpec& spec, std::uint32_t order) {
  spec.validate();
  const auto red = reduce_classes(spec);
  DeriveReport report;
  report.equation = derive_qde(red.reduced, static_cast<std::uint32_t>(spec.modulus));
  report.residual = qde_check(report.equation, ideal_gf_by_membership(spec, order), order);
  if (same_ideal(spec, schur_mod6_preset()))
    report.matches_printed = proportional(coefficient_vector(report.equation, 3), coefficient_vector(schur_qde(), 3));
  return report;
}

}  // namespace qlink
