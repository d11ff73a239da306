#include <gtest/gtest.h>

#include "qlink/agsum.hpp"
#include "qlink/errors.hpp"
#include "qlink/hyperg.hpp"
#include "qlink/lpi.hpp"
#include "qlink/parse.hpp"
#include "qlink/qde.hpp"
#include "test_util.hpp"

using namespace qlink;

namespace {

// prod_{k>=1} (1 + x q^k), multiplied out naively
TruncatedSeries distinct_parts(std::uint32_t order) {
  MultiPoly p(1L);
  for (std::uint32_t k = 1; k <= order; ++k) p *= MultiPoly(1L) + monomial(k, 1);
  return TruncatedSeries(p, order);
}

QDifferenceEquation distinct_parts_qde() {
  return QDifferenceEquation{1, {{0, MultiPoly(1L)}, {1, parse_poly("-1 - xq")}}};
}

std::vector<MultiPoly> coefficients(const QDifferenceEquation& eq, std::uint32_t n) {
  std::vector<MultiPoly> v(n);
  for (const auto& t : eq.terms) v.at(t.shift) = t.p;
  return v;
}

TruncatedSeries even_schur_gf(std::uint32_t order, std::set<int> excluded = {}) {
  return gf_from_enumeration(order, excluded, StatSpec::even_parts());
}

}  // namespace

TEST(Qde, CanonicalForm) {
  QDifferenceEquation eq{2, {{1, parse_poly("x")}, {0, parse_poly("1")}, {1, parse_poly("-x")}, {2, parse_poly("q")}}};
  const auto c = eq.canonical();
  ASSERT_EQ(c.terms.size(), 2u);
  EXPECT_EQ(c.terms[0].shift, 0u);
  EXPECT_EQ(c.terms[1].shift, 2u);
  EXPECT_EQ(c.coefficient(1), nullptr);
  EXPECT_EQ(*c.coefficient(2), parse_poly("q"));
  EXPECT_EQ(c.negated().negated(), c);
}

TEST(Qde, DistinctPartsEquation) {
  const auto eq = distinct_parts_qde();
  EXPECT_TRUE(qde_check(eq, distinct_parts(25), 25).is_zero());
  EXPECT_EQ(qde_solve(eq, TruncatedSeries::one(25), 25), distinct_parts(25));

  // a(M+1)(1 - q^{M+1}) = q^{M+1} a(M)
  const auto rec = qde_to_recurrence(eq);
  EXPECT_EQ(rec.order(), 1u);
  EXPECT_EQ(rec.carrier_coefficient(1), parse_poly("1 - xq"));
  EXPECT_EQ(rec.carrier_coefficient(0), parse_poly("-xq"));
  const auto seq = recurrence_solve(rec, {TruncatedSeries::one(25)}, 6, 25);
  EXPECT_EQ(seq.assemble().truncate(25), distinct_parts(25).truncate(25));
  EXPECT_TRUE(recurrence_check(rec, CoefficientSequence::from_series(distinct_parts(25), 6), 0, 5, 25).all_zero());
  EXPECT_EQ(recurrence_to_qde(rec, {TruncatedSeries::one(25)}), eq);
}

TEST(Qde, DerivedFromOneByOneMatrix) {
  const PolyMatrix m(1, 1, {parse_poly("1 + xq")});
  EXPECT_EQ(derive_qde(m, 1), distinct_parts_qde());
}

TEST(Qde, NonSingularStackIsRejected) {
  const PolyMatrix m(2, 2, {parse_poly("1 + xq"), parse_poly("x"), parse_poly("x"), parse_poly("1")});
  EXPECT_THROW(derive_qde(m, 1), NonSingular);
}

TEST(Qde, DerivedEquationMatchesPrintedOne) {
  const auto red = reduce_classes(schur_mod6_preset());
  EXPECT_TRUE(determinant(stacked_rows(red.reduced, 6)).is_zero());
  const auto derived = derive_qde(red.reduced, 6);
  EXPECT_TRUE(proportional(coefficients(derived, 3), coefficients(schur_qde(), 3)));
  EXPECT_TRUE(qde_check(schur_qde(), even_schur_gf(30), 30).is_zero());
  EXPECT_TRUE(qde_check(derived, even_schur_gf(30), 30).is_zero());
}

TEST(Qde, ModulusThreeIdealEquation) {
  const auto red = reduce_classes(schur_mod3_preset());
  const auto eq = derive_qde(red.reduced, 3);
  EXPECT_TRUE(qde_check(eq, gf_from_enumeration(30, {}, StatSpec::multiples_of_3()), 30).is_zero());
}

TEST(Qde, PerturbedSeriesLeavesResidual) {
  auto s = even_schur_gf(30);
  for (std::uint32_t q : {7u, 19u}) {
    const auto bad = s + TruncatedSeries(monomial(q, 2), 30);
    const auto r = qde_check(schur_qde(), bad, 30);
    EXPECT_FALSE(r.is_zero());
  }
  // uniqueness: the constant term fixes the solution
  EXPECT_EQ(qde_solve(schur_qde(), TruncatedSeries::one(30), 30), s);
}

TEST(Qde, RecurrenceFromPrintedEquation) {
  const auto rec = qde_to_recurrence(schur_qde());
  EXPECT_EQ(rec, schur_recurrence()) << to_string(rec);
  const auto seq = CoefficientSequence::from_series(even_schur_gf(40), 8);
  EXPECT_TRUE(recurrence_check(schur_recurrence(), seq, 0, 8 - static_cast<long>(rec.order()), 40).all_zero());
}

TEST(Qde, RecurrenceSummedBackToEquation) {
  const auto a = recurrence_solve(schur_recurrence(), {TruncatedSeries::one(30)}, 6, 30);
  const auto rec = schur_recurrence();
  const std::vector<TruncatedSeries> initial(a.entries.begin(), a.entries.begin() + rec.order());
  const auto eq = recurrence_to_qde(rec, initial);
  EXPECT_TRUE(eq == schur_qde() || eq == schur_qde().negated()) << to_string(eq);
}

TEST(Qde, LowCoefficientsFromRecurrence) {
  const auto a = recurrence_solve(schur_recurrence(), {TruncatedSeries::one(30)}, 3, 30);
  for (std::uint32_t m = 1; m <= 3; ++m) EXPECT_EQ(a[m], printed_coefficient(m, 30)) << m;
  // one-part partitions: q^n, with y for even n
  MultiPoly one_part;
  for (std::uint32_t n = 1; n <= 30; ++n) one_part += monomial(n, 0, n % 2 == 0);
  EXPECT_EQ(printed_coefficient(1, 30).poly(), one_part);
  const auto full = recurrence_solve(schur_recurrence(), {TruncatedSeries::one(30)}, 8, 30);
  EXPECT_EQ(full.assemble().truncate(30), even_schur_gf(30));
}

TEST(Qde, SolverRejectsNonUnitLeadingCoefficient) {
  const auto rec = CoefficientRecurrence::from_carriers(1, {parse_poly("1"), parse_poly("2")});
  EXPECT_THROW(recurrence_solve(rec, {TruncatedSeries::one(5)}, 3, 5), NonUnit);
}

TEST(Qde, MultiSumRecurrence) {
  const auto ta = CoefficientSequence::from_series(ag_evaluate(preset(PresetId::S21).spec, 40), 8);
  EXPECT_TRUE(recurrence_check(multisum_recurrence(), ta, 0, 4, 40).all_zero());
  // a wrong entry shows up in the residual
  auto broken = ta;
  broken.entries[3] += TruncatedSeries(monomial(12), 40);
  EXPECT_FALSE(recurrence_check(multisum_recurrence(), broken, 0, 4, 40).all_zero());
}

TEST(Qde, ClosureRecurrence) {
  const auto cl = closure_recurrence();
  EXPECT_EQ(cl.order(), 5u);
  // leading coefficient q^29 (1 - q^{6M+30})
  EXPECT_EQ(cl.carrier_coefficient(5), parse_poly("q^29 - x^6 q^59"));

  const auto a = recurrence_solve(schur_recurrence(), {TruncatedSeries::one(40)}, 10, 40);
  const auto ta = CoefficientSequence::from_series(ag_evaluate(preset(PresetId::S21).spec, 40), 10);
  const auto r = closure_check(a, ta, 10, 40);
  EXPECT_FALSE(r.first_mismatch.has_value());
  EXPECT_TRUE(r.on_difference.all_zero());
  EXPECT_TRUE(r.leading_factor_ok);
  EXPECT_TRUE(r.passed());
  EXPECT_TRUE(r.on_a.all_zero());
}

TEST(Qde, SixthOrderRecurrenceAndItsEquation) {
  const auto s = CoefficientSequence::from_series(sigma_evaluate({1, 2, 9}, 40), 12);
  EXPECT_TRUE(recurrence_check(sigma_recurrence(), s, 0, 6, 40).all_zero());
  const std::vector<TruncatedSeries> initial(s.entries.begin(), s.entries.begin() + 6);
  EXPECT_EQ(recurrence_to_qde(sigma_recurrence(), initial), sigma_qde());
  EXPECT_TRUE(recurrence_check(qde_to_recurrence(sigma_qde()), s, 0, 6, 40).all_zero());
  auto negated = sigma_recurrence();
  for (auto& t : negated.terms) t.p = -t.p;
  EXPECT_EQ(qde_to_recurrence(sigma_qde()), negated);
  EXPECT_TRUE(verify_product_qde());
  EXPECT_TRUE(product_qde_residual().is_zero());
  EXPECT_EQ(qde_solve(sigma_qde(), TruncatedSeries::one(30), 30), trinomial_product(30));
}

TEST(Qde, WrongInitialValuesDoNotCollapse) {
  const auto s = CoefficientSequence::from_series(sigma_evaluate({1, 2, 9}, 30), 6);
  std::vector<TruncatedSeries> initial(s.entries.begin(), s.entries.begin() + 6);
  initial[2] += TruncatedSeries(monomial(5), 30);
  EXPECT_THROW(recurrence_to_qde(sigma_recurrence(), initial), BoundaryNotCollapsed);
  initial.pop_back();
  EXPECT_THROW(recurrence_to_qde(sigma_recurrence(), initial), InvalidSpec);
}

TEST(Qde, StepMismatchIsInvalid) {
  const auto rec = CoefficientRecurrence::from_carriers(2, {parse_poly("x"), parse_poly("1")});
  EXPECT_THROW(recurrence_to_qde(rec, {TruncatedSeries::one(5)}), InvalidSpec);
}

TEST(Qde, InstantiateAtNegativeIndex) {
  const auto rec = CoefficientRecurrence::from_carriers(1, {parse_poly("q^3 x"), parse_poly("1 - x")});
  EXPECT_EQ(rec.instantiate(0, -2), parse_poly("q"));
  EXPECT_EQ(rec.instantiate(1, 2), parse_poly("1 - q^2"));
}
