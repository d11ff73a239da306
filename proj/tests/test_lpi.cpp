#include <gtest/gtest.h>

#include <algorithm>

#include "qlink/errors.hpp"
#include "qlink/lpi.hpp"
#include "qlink/parse.hpp"

using namespace qlink;

namespace {

bool schur_gaps(const Partition& p) {
  const auto& v = p.parts();
  for (std::size_t i = 1; i < v.size(); ++i) {
    const int d = v[i - 1] - v[i];
    if (d < 3 || (d == 3 && v[i - 1] % 3 == 0)) return false;
  }
  return true;
}

PolyMatrix expected_class_matrix() {
  const char* e[] = {
      "1 + xq + xyq^2 + xq^3 + xyq^4 + x^2yq^5", "xq^5 + x^2q^6 + x^2yq^7", "xyq^6 + x^2yq^7 + x^2y^2q^8",
      "1 + xyq^2 + xq^3 + xyq^4",                "xq^5 + x^2yq^7",          "xyq^6 + x^2y^2q^8",
      "1 + xyq^4",                               "xq^5",                    "xyq^6",
  };
  std::vector<MultiPoly> v;
  for (const char* s : e) v.push_back(parse_poly(s));
  return PolyMatrix(3, 3, std::move(v));
}

IdealSpec tiny_spec() {
  IdealSpec s;
  s.modulus = 2;
  s.blocks = {Partition{}, Partition{1}, Partition{2}};
  s.linking = {{0, 1, 2}, {0, 1, 2}, {0, 2}};
  return s;
}

}  // namespace

TEST(Ideal, PresetsValidate) {
  EXPECT_NO_THROW(schur_mod6_preset().validate());
  EXPECT_NO_THROW(schur_mod3_preset().validate());
  EXPECT_EQ(schur_mod6_preset().size(), 12u);
  EXPECT_EQ(schur_mod3_preset().size(), 4u);
}

TEST(Ideal, ValidationErrors) {
  auto s = tiny_spec();
  EXPECT_NO_THROW(s.validate());

  auto bad = s;
  bad.blocks[0] = Partition{1};
  bad.blocks[1] = Partition{};
  EXPECT_THROW(bad.validate(), InvalidSpec);

  bad = s;
  bad.blocks[2] = Partition{1};
  EXPECT_THROW(bad.validate(), InvalidSpec);

  bad = s;
  bad.blocks[2] = Partition{3};
  EXPECT_THROW(bad.validate(), InvalidSpec);

  bad = s;
  bad.linking[2] = {2};
  EXPECT_THROW(bad.validate(), InvalidSpec);

  bad = s;
  bad.linking[0] = {0, 1};
  EXPECT_THROW(bad.validate(), InvalidSpec);

  bad = s;
  bad.linking[1] = {0, 5};
  EXPECT_THROW(bad.validate(), InvalidSpec);

  bad = s;
  bad.linking.pop_back();
  EXPECT_THROW(bad.validate(), InvalidSpec);

  bad = s;
  bad.modulus = 0;
  EXPECT_THROW(bad.validate(), InvalidSpec);
}

TEST(Ideal, Decompose) {
  const auto spec = schur_mod6_preset();
  EXPECT_EQ(decompose({13, 4, 1}, spec).block_indices, (std::vector<int>{5, 0, 1}));
  EXPECT_EQ(decompose({}, spec).block_indices, std::vector<int>{});
  EXPECT_EQ(decompose({12}, spec).block_indices, (std::vector<int>{0, 9}));
  EXPECT_THROW(decompose({3, 2}, spec), UnknownBlock);
  EXPECT_FALSE(ideal_member({3, 2}, spec));
}

TEST(Ideal, MembershipMatchesGapConditions) {
  const auto m6 = schur_mod6_preset();
  const auto m3 = schur_mod3_preset();
  for (int n = 0; n <= 24; ++n)
    for_each_partition(n, [&](const Partition& p) {
      EXPECT_EQ(ideal_member(p, m6), schur_gaps(p)) << to_string(p);
      EXPECT_EQ(ideal_member(p, m3), schur_gaps(p)) << to_string(p);
    });
  const auto r = verify_equivalence(m6, is_schur_partition, 20);
  EXPECT_TRUE(r.equal);
  EXPECT_GT(r.checked, 600u);
}

TEST(Ideal, EnlargedLinkingIsCaught) {
  auto spec = schur_mod6_preset();
  for (int j = 0; j < 12; ++j) spec.linking[9].insert(j);
  const auto r = verify_equivalence(spec, is_schur_partition, 20);
  EXPECT_FALSE(r.equal);
  ASSERT_TRUE(r.first_counterexample.has_value());
  EXPECT_EQ(*r.first_counterexample, (Partition{7, 6}));
  EXPECT_NE(std::find(r.counterexamples.begin(), r.counterexamples.end(), Partition{9, 6}), r.counterexamples.end());
  for (const auto& p : r.counterexamples) {
    EXPECT_FALSE(schur_gaps(p));
    EXPECT_TRUE(ideal_member(p, spec));
  }
}

TEST(Ideal, ClassReduction) {
  const auto spec = schur_mod6_preset();
  const auto red = reduce_classes(spec);
  ASSERT_EQ(red.classes.size(), 3u);
  EXPECT_EQ(red.classes[0], (std::vector<int>{0, 1, 2, 3, 4, 5}));
  EXPECT_EQ(red.classes[1], (std::vector<int>{6, 7, 8}));
  EXPECT_EQ(red.classes[2], (std::vector<int>{9, 10, 11}));
  EXPECT_EQ(red.reduced, expected_class_matrix());
  const auto a = linking_matrix(spec);
  EXPECT_EQ(lift_reduced(red, spec), mat_mul(mat_mul(a, weight_matrix(spec)), a));
}

TEST(Ideal, VectorEquationSolution) {
  const auto spec = schur_mod6_preset();
  const auto red = reduce_classes(spec);
  const auto a = solve_vector_equation(red.reduced, 6, 24);
  ASSERT_EQ(a.size(), 3u);
  for (const auto& r : vector_equation_residual(red.reduced, 6, a)) EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(a[0], ideal_gf_by_membership(spec, 24));
  EXPECT_EQ(a[0], gf_from_enumeration(24, {}, StatSpec::even_parts()));
  EXPECT_EQ(a[1], gf_from_enumeration(24, {1}, StatSpec::even_parts()));
  EXPECT_EQ(a[2], gf_from_enumeration(24, {1, 2, 3}, StatSpec::even_parts()));
}

TEST(Ideal, ModulusThreeSolution) {
  const auto spec = schur_mod3_preset();
  const auto red = reduce_classes(spec);
  const auto a = solve_vector_equation(red.reduced, 3, 24);
  EXPECT_EQ(a[0], gf_from_enumeration(24, {}, StatSpec::multiples_of_3()));
}

TEST(Ideal, VectorEquationErrors) {
  PolyMatrix two(1, 1, {MultiPoly(2L)});
  EXPECT_THROW(solve_vector_equation(two, 1, 5), DivergentSpec);
  PolyMatrix m(1, 1, {parse_poly("1 + xq")});
  EXPECT_THROW(solve_vector_equation(m, 0, 5), DivergentSpec);
  PolyMatrix q_only(1, 1, {parse_poly("1 + q")});
  EXPECT_THROW(solve_vector_equation(q_only, 1, 5), DivergentSpec);
  EXPECT_THROW(solve_vector_equation(PolyMatrix(1, 2), 1, 5), DimensionMismatch);
  // A(x) = (1 + xq) A(xq) gives prod_{k>=1} (1 + x q^k)
  const auto a = solve_vector_equation(m, 1, 6);
  for (const auto& r : vector_equation_residual(m, 1, a)) EXPECT_TRUE(r.is_zero());
  MultiPoly prod(1L);
  for (std::uint32_t k = 1; k <= 6; ++k) prod *= MultiPoly(1L) + monomial(k, 1);
  EXPECT_EQ(a[0], TruncatedSeries(prod, 6));
}

TEST(Ideal, TinyIdealGeneratingFunction) {
  // one part per window of 2 and (2) never followed by (1): plain gap >= 2
  const auto spec = tiny_spec();
  const auto gf = ideal_gf_by_membership(spec, 12);
  MultiPoly expected;
  for (int n = 0; n <= 12; ++n)
    for_each_partition(n, [&](const Partition& p) {
      const auto& v = p.parts();
      bool ok = true;
      for (std::size_t i = 1; i < v.size(); ++i) ok = ok && v[i - 1] - v[i] >= 2;
      if (ok) expected += monomial(n, v.size());
    });
  EXPECT_EQ(gf.poly(), expected);
  const auto red = reduce_classes(spec);
  EXPECT_EQ(solve_vector_equation(red.reduced, 2, 12)[0], gf);
}
