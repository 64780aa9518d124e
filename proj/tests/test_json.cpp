#include <gtest/gtest.h>

#include "support/generators.hpp"
#include "tempora/json_io.hpp"
#include "tempora/tempora.hpp"

namespace tempora {
namespace {

using json_io::Json;

TEST(Json, RationalsAreStrings) {
  EXPECT_EQ(json_io::encode(make_rational(-3, 6)).dump(), "\"-1/2\"");
  EXPECT_EQ(json_io::decode_rational(Json("7/14")), make_rational(1, 2));
  EXPECT_THROW(json_io::decode_rational(Json(0.5)), SyntaxError);
  EXPECT_THROW(json_io::decode_aff(Json::array({"0", "0"})), SemanticError);
}

TEST(Json, WreathAndPermAreOneBased) {
  const WreathElem w({AffElem(make_rational(1), make_rational(1)), AffElem(make_rational(1, 2), make_rational(1))},
                     Perm::adjacent_swap(2, 0));
  EXPECT_EQ(json_io::encode(w).dump(), R"({"components":[["1","1"],["1/2","1"]],"perm":[2,1]})");
  EXPECT_THROW(json_io::decode_perm(Json::array({0, 1})), SemanticError);
}

TEST(Json, BracketNormalSchema) {
  const auto nf = normalize_bracket(parse("(0,1/2) (x) (1/2,1/4) ; box"));
  EXPECT_EQ(json_io::encode(nf).dump(),
            R"({"perm":[1,2],"leaves":[["0","1/2"],["1/2","1/4"]],"forest":[["node","leaf","leaf"]]})");
  auto bad = json_io::encode(nf);
  bad["forest"] = Json::array({"leaf"});
  EXPECT_THROW(json_io::decode_bracket(bad), SizeMismatch);
  bad["forest"] = Json::array({Json::array({"node", "leaf"})});
  EXPECT_THROW(json_io::decode_bracket(bad), SyntaxError);
}

TEST(Json, RoundTrips) {
  testing::Rng rng(41);
  for (int k = 0; k < 100; ++k) {
    const auto n = testing::uniform(rng, 1, 5);
    const auto w = testing::random_wreath(rng, n);
    ASSERT_EQ(json_io::decode_wreath(Json::parse(json_io::encode(w).dump())), w);
    const auto m = testing::random_matrix_affine(rng, n);
    ASSERT_EQ(json_io::decode_matrix_affine(Json::parse(json_io::encode(m).dump())), m);
    const auto nf = normalize_bracket(testing::random_term(rng, n, 3, true));
    ASSERT_EQ(json_io::decode_bracket(Json::parse(json_io::encode(nf).dump())), nf);
    const auto score = iterate_generate(testing::random_bracket_term(rng, n, 2), testing::random_endo_term(rng, n, 2),
                                        3, Variance::Covariant);
    ASSERT_EQ(json_io::decode_score(Json::parse(json_io::encode(score).dump(2))), score);
  }
}

TEST(Json, ScoreRejectsBadEvents) {
  auto j = json_io::encode(iterate_generate(parse("id1"), parse("(1,2)"), 1, Variance::Covariant));
  j["timelines"][0][0]["duration"] = "0";
  EXPECT_THROW(json_io::decode_score(j), SemanticError);
  EXPECT_THROW(json_io::decode_score(Json::array()), SyntaxError);
}

}  // namespace
}  // namespace tempora
