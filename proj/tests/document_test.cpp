#include "tatepol/document.hpp"

#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace tatepol;
using namespace tatepol::doc;

TEST(Parse, Rationals) {
  EXPECT_EQ(parse_rational(json("3/6")), Rational(1, 2));
  EXPECT_EQ(parse_rational(json("-4")), -4);
  EXPECT_EQ(parse_rational(json(7)), 7);
  EXPECT_THROW(parse_rational(json("1/0")), ParseError);
  EXPECT_THROW(parse_rational(json("1/x")), ParseError);
  EXPECT_THROW(parse_rational(json(0.5)), ParseError);
}

TEST(Parse, BigIntegersAsStrings) {
  const Integer big("123456789012345678901234567890", 10);
  EXPECT_EQ(parse_integer(json("123456789012345678901234567890")), big);
  EXPECT_TRUE(integer_json(big).is_string());
  EXPECT_TRUE(integer_json(Integer(-5)).is_number_integer());
  EXPECT_EQ(parse_integer(integer_json(big)), big);
}

TEST(Parse, RaggedMatrix) {
  EXPECT_THROW(parse_int_matrix(json::parse("[[1, 2], [3]]")), ParseError);
  EXPECT_THROW(parse_int_matrix(json::parse("[1, 2]")), ParseError);
}

TEST(Parse, SizeMismatches) {
  EXPECT_THROW(parse_raw_torus(json::parse(R"({"genus": 2, "J": [["0", "-1"], ["1", "0"]]})")), ParseError);
  const json b = json::parse(R"({"E": [[0, -1], [1, 0]], "rho": ["0"]})");
  EXPECT_THROW(parse_raw_bundle(b, 2), ParseError);
  EXPECT_THROW(parse_raw_semiabelian(json::parse(R"({"toric_rank": 1})")), ParseError);
}

TEST(Parse, DetectKind) {
  EXPECT_EQ(detect_kind(json::parse(R"({"genus": 1, "J": []})")), Kind::torus);
  EXPECT_EQ(detect_kind(json::parse(R"({"phi": {}})")), Kind::base_map);
  EXPECT_THROW(detect_kind(json::parse(R"({"x": 1})")), ParseError);
  EXPECT_THROW(detect_kind(json::parse("[1]")), ParseError);
}

TEST(Parse, InvariantsLeftToConstructors) {
  const json t = json::parse(R"({"genus": 1, "J": [["1", "0"], ["0", "1"]]})");
  EXPECT_NO_THROW(parse_raw_torus(t));
  EXPECT_THROW(parse_torus(t), InvariantError);
}

TEST(RoundTrip, RandomDocuments) {
  Rng rng(61);
  for (int it = 0; it < 30; ++it) {
    RandomBundleOptions bo;
    bo.kind = FormKind::any;
    const auto g = random_semiabelian(rng, static_cast<std::size_t>(rng.uniform(1, 3)),
                                      static_cast<std::size_t>(rng.uniform(0, 2)), bo);
    const auto back = parse_semiabelian(json::parse(to_json(g).dump()));
    EXPECT_EQ(back.toric_rank(), g.toric_rank());
    EXPECT_EQ(back.bundle(), g.bundle());
    EXPECT_EQ(parse_bundle(bundle_document(g.bundle())), g.bundle());
    EXPECT_EQ(parse_torus(to_json(g.abelian())), g.abelian());
  }
}

TEST(RoundTrip, FamilyAndBaseMap) {
  Rng rng(62);
  const auto f = tatepol::testing::random_coherent_family(rng, {});
  const auto f2 = parse_family(json::parse(to_json(f).dump()));
  ASSERT_EQ(f2.edges.size(), f.edges.size());
  for (std::size_t i = 0; i < f.edges.size(); ++i) EXPECT_EQ(f2.edges[i].M, f.edges[i].M);
  for (const auto& [id, g] : f.nodes) EXPECT_EQ(f2.nodes.at(id).bundle(), g.bundle());

  const auto m = tatepol::testing::random_base_map(rng, f, 4, 4);
  const auto m2 = parse_base_map(json::parse(to_json(m).dump()));
  EXPECT_EQ(m2.phi, m.phi);
  ASSERT_EQ(m2.edges.size(), m.edges.size());
  for (std::size_t i = 0; i < m.edges.size(); ++i) EXPECT_EQ(m2.edges[i].over, m.edges[i].over);
}
