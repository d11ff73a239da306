// End-to-end identity checks at their full orders; one line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "qlink/agsum.hpp"
#include "qlink/errors.hpp"
#include "qlink/hyperg.hpp"
#include "qlink/lpi.hpp"
#include "qlink/partitions.hpp"
#include "qlink/qde.hpp"
#include "qlink/verify.hpp"

using namespace qlink;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(const CheckResult& r) {
    if (!r.passed && ok) {
      ok = false;
      detail = r.name + ": " + r.detail;
    }
  }
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

TruncatedSeries enumerated(std::uint32_t n, std::set<int> excluded, const StatSpec& stats) {
  return gf_from_enumeration(n, excluded, stats);
}

Outcome criterion_1() {
  Outcome o;
  o.require(compare_series("S21", enumerated(40, {}, StatSpec::even_parts()), ag_evaluate(preset(PresetId::S21).spec, 40)));
  return o;
}

Outcome criterion_2() {
  Outcome o;
  o.require(compare_series("S22", enumerated(40, {1}, StatSpec::even_parts()), evaluate_preset(PresetId::S22, 40)));
  o.require(compare_series("S23", enumerated(40, {1, 2, 3}, StatSpec::even_parts()), evaluate_preset(PresetId::S23, 40)));
  return o;
}

Outcome criterion_3() {
  Outcome o;
  const auto st = StatSpec::multiples_of_3();
  o.require(compare_series("S31", enumerated(40, {}, st), evaluate_preset(PresetId::S31, 40)));
  o.require(compare_series("S32", enumerated(40, {1}, st), evaluate_preset(PresetId::S32, 40)));
  o.require(compare_series("S33", enumerated(40, {1, 2, 3}, st), evaluate_preset(PresetId::S33, 40)));
  o.require(compare_series("G_ANALYTIC", specialize(ag_evaluate(preset(PresetId::S31).spec, 40), {std::nullopt, Monomial{0, 1, 0}}),
                           distinct_nonmultiple_of_3_product(40)));
  return o;
}

Outcome criterion_4() {
  Outcome o;
  const auto gf = enumerated(40, {}, StatSpec::parts_only());
  o.require(compare_series("ABM", evaluate_preset(PresetId::ABM, 40), gf));
  o.require(compare_series("KUR", evaluate_preset(PresetId::KUR, 40), gf));
  return o;
}

Outcome criterion_5() {
  Outcome o;
  const auto spec = schur_mod6_preset();
  const auto eqv = verify_equivalence(spec, is_schur_partition, 30);
  o.require(eqv.equal, eqv.first_counterexample ? "membership differs at " + to_string(*eqv.first_counterexample) : "");
  const auto red = reduce_classes(spec);
  const auto a = solve_vector_equation(red.reduced, 6, 40);
  for (const auto& r : vector_equation_residual(red.reduced, 6, a)) o.require(r.is_zero(), "matrix equation residual");
  o.require(compare_series("A2", a[1], enumerated(40, {1}, StatSpec::even_parts())));
  o.require(compare_series("A3", a[2], enumerated(40, {1, 2, 3}, StatSpec::even_parts())));
  return o;
}

Outcome criterion_6() {
  Outcome o;
  const auto derived = derive_qde(reduce_classes(schur_mod6_preset()).reduced, 6);
  const auto printed = schur_qde();
  std::vector<MultiPoly> c(3), p(3);
  for (const auto& t : derived.terms) c.at(t.shift) = t.p;
  for (const auto& t : printed.terms) p.at(t.shift) = t.p;
  o.require(derived.terms.size() == 3 && proportional(c, p), "derived triple not proportional to the printed one");
  const auto res = qde_check(printed, enumerated(40, {}, StatSpec::even_parts()), 40);
  o.require(res.is_zero(), "printed equation leaves a residual on A1");
  return o;
}

Outcome criterion_7() {
  Outcome o;
  const auto a = recurrence_solve(schur_recurrence(), {TruncatedSeries::one(30)}, 3, 30);
  for (std::uint32_t m = 1; m <= 3; ++m)
    o.require(compare_series("a(" + std::to_string(m) + ")", a[m], printed_coefficient(m, 30)));
  return o;
}

Outcome criterion_8() {
  Outcome o;
  const auto ta = CoefficientSequence::from_series(ag_evaluate(preset(PresetId::S21).spec, 60), 12);
  const auto r = recurrence_check(multisum_recurrence(), ta, 0, 8, 60);
  for (const auto& e : r.entries)
    o.require(e.residual.is_zero(), "nonzero residual at M=" + std::to_string(e.m));
  return o;
}

Outcome criterion_9() {
  Outcome o;
  const auto a = recurrence_solve(schur_recurrence(), {TruncatedSeries::one(60)}, 10, 60);
  const auto ta = CoefficientSequence::from_series(ag_evaluate(preset(PresetId::S21).spec, 60), 10);
  for (std::uint32_t m = 0; m <= 8; ++m) o.require(a[m] == ta[m], "a(M) != ta(M) at M=" + std::to_string(m));
  const auto r = closure_check(a, ta, 10, 60);
  for (const auto& e : r.on_difference.entries)
    o.require(e.residual.is_zero(), "closure recurrence residual at M=" + std::to_string(e.m));
  o.require(r.on_difference.entries.size() == 6, "closure recurrence not checked on M=5..10");
  o.require(r.leading_factor_ok, "leading coefficient is not a monomial times a unit");
  return o;
}

Outcome criterion_10() {
  Outcome o;
  o.require(compare_series("A_ANALYTIC", ag_evaluate(effective_spec(preset(PresetId::A_ANALYTIC)), 50), trinomial_product(50)));
  o.require(theorem_stat_table(TheoremStat::C, 40) == theorem_stat_table(TheoremStat::Dprime, 40), "C(m,n) != D'(m,n)");
  return o;
}

Outcome criterion_11() {
  Outcome o;
  const auto d = marginal_by_n(theorem_stat_table(TheoremStat::D, 40), 40);
  o.require(marginal_by_n(theorem_stat_table(TheoremStat::A, 40), 40) == d, "A(n) != D(n)");
  o.require(marginal_by_n(theorem_stat_table(TheoremStat::C, 40), 40) == d, "sum_m C(m,n) != D(n)");
  o.require(theorem_stat_table(TheoremStat::B, 40) == theorem_stat_table(TheoremStat::G_D, 40), "B(m,n) != D(m,n)");
  return o;
}

Outcome criterion_12() {
  Outcome o;
  o.require(splitting_identity_check(), "splitting identity");
  for (int j = 1; j <= 9; ++j)
    o.require(compare_series("I" + std::to_string(j), nine_term_lhs(j, 30), nine_term_rhs(j, 30)));
  for (int k1 = 0; k1 <= 2; ++k1)
    for (int k2 = 0; k2 <= 2; ++k2)
      for (int k3 = 0; k3 <= 2; ++k3)
        o.require(shift_lemma_check({1, 2, 9}, {k1, k2, k3}, 25),
                  "shift lemma at k=(" + std::to_string(k1) + "," + std::to_string(k2) + "," + std::to_string(k3) + ")");
  o.require(functional_equation_check(40), "functional equation at N=40");
  return o;
}

Outcome criterion_13() {
  Outcome o;
  const auto s60 = CoefficientSequence::from_series(sigma_evaluate({1, 2, 9}, 60), 16);
  const auto r = recurrence_check(sigma_recurrence(), s60, 0, 10, 60);
  for (const auto& e : r.entries) o.require(e.residual.is_zero(), "recurrence residual at M=" + std::to_string(e.m));
  const std::vector<TruncatedSeries> initial(s60.entries.begin(), s60.entries.begin() + 6);
  try {
    o.require(recurrence_to_qde(sigma_recurrence(), initial) == sigma_qde(), "summed equation differs");
  } catch (const BoundaryNotCollapsed& e) {
    o.require(false, e.what());
  }
  o.require(verify_product_qde(), "window identity");
  const auto solved = qde_solve(sigma_qde(), TruncatedSeries::one(50), 50);
  o.require(compare_series("P(x)", solved, trinomial_product(50)));
  o.require(compare_series("S(x)", solved, evaluate_preset(PresetId::A_ANALYTIC, 50)));
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"S21 multi-sum equals the even-part enumeration, N=40", criterion_1},
      {"S22 and S23 equal the restricted enumerations, N=40", criterion_2},
      {"S31, S32, S33 and the y=x product form, N=40", criterion_3},
      {"ABM and Kursungoz sums equal the part-count enumeration, N=40", criterion_4},
      {"modulus-6 ideal membership and the class matrix equation", criterion_5},
      {"derived q-difference equation and printed residual, N=40", criterion_6},
      {"a(1), a(2), a(3) from the recurrence match the closed forms, N=30", criterion_7},
      {"recurrence for the multi-sum coefficients, M=0..8, N=60", criterion_8},
      {"a(M) = ta(M) and the fifth-order closure recurrence, N=60", criterion_9},
      {"trinomial product identity and C(m,n) = D'(m,n)", criterion_10},
      {"A = D, C = D and B(m,n) = D(m,n) for n <= 40", criterion_11},
      {"nine-term splitting, shift lemma and functional equation", criterion_12},
      {"sixth-order recurrence, its q-difference equation and uniqueness", criterion_13},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2zu  %s (%.2fs)%s%s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), secs,
                o.ok ? "" : "\n        ", o.ok ? "" : o.detail.c_str());
    std::fflush(stdout);
    failed += !o.ok;
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed ? 1 : 0;
}
