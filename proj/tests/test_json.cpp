#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "qlink/errors.hpp"
#include "qlink/json_io.hpp"
#include "qlink/parse.hpp"
#include "qlink/verify.hpp"
#include "test_util.hpp"

using namespace qlink;

TEST(Json, PolynomialRoundTrip) {
  const auto p = parse_poly("1 - 3q^2 x y + 123456789012345678901234567890 q^9 y^4");
  const auto j = poly_to_json(p);
  EXPECT_EQ(poly_from_json(j), p);
  EXPECT_EQ(poly_from_json(Json::parse(j.dump())), p);
  EXPECT_EQ(poly_from_json(Json::array()), MultiPoly());
}

TEST(Json, PolynomialRejectsBadTerms) {
  EXPECT_THROW(poly_from_json(Json::parse(R"([[1,0]])")), ParseError);
  EXPECT_THROW(poly_from_json(Json::parse(R"([[1,0,0,"x"]])")), ParseError);
  EXPECT_THROW(poly_from_json(Json::parse(R"([[-1,0,0,"1"]])")), ParseError);
  EXPECT_THROW(poly_from_json(Json::parse(R"({"a":1})")), ParseError);
}

TEST(Json, SeriesRoundTrip) {
  const TruncatedSeries s(parse_poly("1 + q x + 2 q^7 y"), 7);
  const auto j = series_to_json(s);
  EXPECT_EQ(j["order"], 7);
  EXPECT_EQ(series_from_json(j), s);
  Json bad = j;
  bad["order"] = 3;
  EXPECT_THROW(series_from_json(bad), ParseError);
}

TEST(Json, IdealRoundTrip) {
  for (const auto& spec : {schur_mod6_preset(), schur_mod3_preset()}) {
    const auto j = ideal_to_json(spec);
    EXPECT_TRUE(same_ideal(ideal_from_json(j), spec));
    EXPECT_TRUE(same_ideal(ideal_from_json(Json::parse(j.dump())), spec));
  }
}

TEST(Json, IdealRejectsInvalidSpecs) {
  auto j = ideal_to_json(schur_mod3_preset());
  auto missing = j;
  missing["linking"]["3"] = Json::array({3, 4});
  EXPECT_THROW(ideal_from_json(missing), InvalidSpec);
  auto zero_index = j;
  zero_index["linking"]["1"][0] = 0;
  EXPECT_THROW(ideal_from_json(zero_index), InvalidSpec);
  auto bad_stat = j;
  bad_stat["stats"]["x"] = "bogus";
  EXPECT_ANY_THROW(ideal_from_json(bad_stat));
  EXPECT_ANY_THROW(ideal_from_json(Json::parse(R"({"modulus": 3})")));
}

TEST(Json, AGSpecRoundTrip) {
  for (auto id : all_presets()) {
    const auto spec = preset(id).spec;
    const auto j = agspec_to_json(spec);
    EXPECT_EQ(agspec_from_json(Json::parse(j.dump())), spec) << preset_name(id);
  }
}

TEST(Json, AGSpecRejectsBadInput) {
  auto j = agspec_to_json(preset(PresetId::S31).spec);
  auto bad = j;
  bad["Q"][0][0] = "3/0";
  EXPECT_ANY_THROW(agspec_from_json(bad));
  bad = j;
  bad["bases"] = Json::array({1, 2});
  EXPECT_THROW(agspec_from_json(bad), InvalidSpec);
  bad = j;
  bad["Q"][0][1] = "7";
  EXPECT_THROW(agspec_from_json(bad), InvalidSpec);
}

TEST(Json, EquationsRoundTrip) {
  for (const auto& eq : {schur_qde(), sigma_qde()}) EXPECT_EQ(qde_from_json(Json::parse(qde_to_json(eq).dump())), eq);
  for (const auto& rec : {schur_recurrence(), multisum_recurrence(), closure_recurrence(), sigma_recurrence()})
    EXPECT_EQ(recurrence_from_json(Json::parse(recurrence_to_json(rec).dump())), rec);
}

TEST(Json, Reports) {
  ResidualReport r;
  r.entries.push_back({2, TruncatedSeries::zero(5)});
  r.entries.push_back({3, TruncatedSeries(parse_poly("q^4 x + q^5"), 5)});
  const auto j = residual_report_to_json(r);
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[0]["M"], 2);
  EXPECT_TRUE(j[0]["first_nonzero_monomial"].is_null());
  EXPECT_EQ(j[1]["first_nonzero_monomial"], monomial_to_json(Monomial{4, 1, 0}));
}

TEST(Json, FileLoading) {
  const std::string path = ::testing::TempDir() + "qlink_json_test.json";
  {
    std::ofstream out(path);
    out << agspec_to_json(preset(PresetId::S21).spec).dump();
  }
  EXPECT_EQ(agspec_from_json(load_json_file(path)), preset(PresetId::S21).spec);
  {
    std::ofstream out(path);
    out << "{ not json";
  }
  EXPECT_THROW(load_json_file(path), ParseError);
  std::remove(path.c_str());
  EXPECT_ANY_THROW(load_json_file(path));
}
