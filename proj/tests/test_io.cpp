#include <gtest/gtest.h>

#include "error_code.hpp"
#include "fixtures.hpp"
#include "scg/io.hpp"
#include "scg/random.hpp"
#include "scg/values.hpp"

using namespace scg;
using namespace scg::testing;

TEST(Io, ComplexRoundTrip) {
  for (const Fixture& f : all_fixtures()) {
    const ComplexPtr c = build(f);
    const std::string text = io::complex_to_json(*c).dump();
    EXPECT_EQ(io::parse_complex(text), *c) << f.name;
  }
}

TEST(Io, ComplexErrors) {
  EXPECT_EQ(code_of([] { (void)io::parse_complex("{\"n\": 3, \"facets\": [[1, 2]"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { (void)io::parse_complex("{\"n\": 3, \"facets\": [[1, 4]]}"); }),
            ErrorCode::VertexOutOfRange);
  EXPECT_EQ(code_of([] { (void)io::parse_complex("{\"n\": 3, \"facets\": [[0]]}"); }), ErrorCode::VertexOutOfRange);
  EXPECT_EQ(code_of([] { (void)io::parse_complex("{\"n\": 3, \"facets\": [[1, 1]]}"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { (void)io::parse_complex("{\"n\": 70, \"facets\": []}"); }), ErrorCode::TooManyVertices);
  EXPECT_EQ(code_of([] { (void)io::parse_complex("{\"facets\": []}"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { (void)io::load_complex("/nonexistent/complex.json"); }), ErrorCode::ParseError);
}

TEST(Io, ParseErrorReportsPosition) {
  try {
    (void)io::parse_complex("{\n  \"n\": 3,\n  \"facets\": [[1, 2],]\n}");
    FAIL() << "expected a parse error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(Io, GameRoundTrip) {
  const ComplexPtr c = build(petersen_fixture());
  RationalSampler rng(51);
  const Game v = random_game(c, rng);
  EXPECT_EQ(io::parse_game(io::game_to_json(v).dump(), c), v);
  const Game w = io::parse_game(R"({"values": {"1": 2, "1,2": "-3/4"}})", c);
  EXPECT_EQ(w(Face{1}), Rational(2));
  EXPECT_EQ(w(Face{1, 2}), Rational(-3, 4));
}

TEST(Io, GameErrors) {
  const ComplexPtr c = build(cycle_fixture(4));
  EXPECT_EQ(code_of([&] { (void)io::parse_game(R"({"values": {"1,3": 1}})", c); }), ErrorCode::GameFaceNotInComplex);
  EXPECT_EQ(code_of([&] { (void)io::parse_game(R"({"values": {"2,1": 1}})", c); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([&] { (void)io::parse_game(R"({"values": {"": 1}})", c); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([&] { (void)io::parse_game(R"({"values": {"1": 0.5}})", c); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([&] { (void)io::parse_game(R"({"values": {"1,": 1}})", c); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([&] { (void)io::parse_game(R"({"vals": {}})", c); }), ErrorCode::ParseError);
}

TEST(Io, ValueAndCoefficientRoundTrip) {
  const ComplexPtr c = build(strip_fixture());
  RationalSampler rng(52);
  const GroupValue g = shapley_group_value(random_game(c, rng));
  EXPECT_EQ(io::group_value_from_json(io::Json::parse(io::group_value_to_json(g).dump())), g);
  const EfficiencyCoefficients a = efficiency_coefficients(*c, canonical_shapley_tables(*c));
  EXPECT_EQ(io::efficiency_from_json(io::Json::parse(io::efficiency_to_json(a).dump())), a);
}

TEST(Io, Permutations) {
  const Permutation p = io::parse_permutation(R"({"perm": [2, 1, 3]})");
  EXPECT_EQ(p, Permutation::transposition(3, 1, 2));
  EXPECT_EQ(io::permutation_to_json(p).dump(), R"({"perm":[2,1,3]})");
  EXPECT_EQ(code_of([] { (void)io::parse_permutation(R"({"perm": [1, 1]})"); }), ErrorCode::InvalidPermutation);
}
