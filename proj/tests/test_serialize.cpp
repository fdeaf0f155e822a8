#include <gtest/gtest.h>

#include "helpers.hpp"
#include "pq/errors.hpp"
#include "pq/serialize.hpp"

using namespace pqtest;

namespace {

std::string where_of(const std::string& text, bool points = false) {
  try {
    const auto doc = pq::parse_json_text(text);
    if (points) {
      pq::points_from_json(doc);
    } else {
      pq::family_from_json(doc);
    }
  } catch (const pq::ParseError& e) {
    return e.where();
  }
  return "no error";
}

}  // namespace

TEST(Serialize, FamilyRoundTrip) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto f = random_family(6, seed);
    const auto text = pq::dump(pq::family_to_json(f, {{"note", "x"}}));
    const auto back = pq::family_from_json(pq::parse_json_text(text));
    EXPECT_EQ(pq::dump(pq::family_to_json(back, {{"note", "x"}})), text);
    ASSERT_EQ(back.size(), f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
      EXPECT_TRUE(back[i].same_shape(f[i]));
      EXPECT_EQ(back[i].id(), f[i].id());
    }
  }
}

TEST(Serialize, AcceptsBareVertexArraysAndIntegers) {
  const auto f = pq::family_from_json(pq::parse_json_text(
      R"({"format":"pq-family","version":1,"bodies":[[["0","0"],["1/2","0"],[0,1]],{"id":9,"vertices":[[2,2]]}]})"));
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f.ids(), (pq::IdSet{0, 9}));
  EXPECT_EQ(f[0].vertices()[1], (Point2{Rational(1, 2), Rational(0)}));
}

TEST(Serialize, ErrorsNameLineOrField) {
  EXPECT_EQ(where_of("{\n\"format\": \"pq-family\",\n\"version\": 1,\n\"bodies\": [ oops ]\n}"), "line 4");
  EXPECT_EQ(where_of(R"({"format":"pq-points","version":1,"bodies":[]})"), "$.format");
  EXPECT_EQ(where_of(R"({"format":"pq-family","version":2,"bodies":[]})"), "$.version");
  EXPECT_EQ(where_of(R"({"format":"pq-family","version":1})"), "$.bodies");
  EXPECT_EQ(where_of(R"({"format":"pq-family","version":1,"bodies":[]})"), "$.bodies");
  EXPECT_EQ(where_of(R"({"format":"pq-family","version":1,"bodies":[{"id":0,"vertices":[["0","0"]]},{"id":1,"vertices":[["0","0"],["1","x"]]}]})"),
            "$.bodies[1].vertices[1][1]");
  EXPECT_EQ(where_of(R"({"format":"pq-family","version":1,"bodies":[{"id":0,"vertices":[["0","1/0"]]}]})"),
            "$.bodies[0].vertices[0][1]");
  EXPECT_EQ(where_of(R"({"format":"pq-family","version":1,"bodies":[{"id":1,"vertices":[[0,0]]},{"id":1,"vertices":[[1,1]]}]})"),
            "$.bodies");
  EXPECT_EQ(where_of(R"({"format":"pq-points","version":1,"points":[["0","0","-1"]]})", true), "$.points[0][2]");
}

TEST(Serialize, PointsRoundTrip) {
  const pq::WeightedPoints pts({{P(0, 0), Rational(2)}, {P(1, 3), Rational(1, 2)}});
  const auto text = pq::dump(pq::points_to_json(pts));
  const auto back = pq::points_from_json(pq::parse_json_text(text));
  EXPECT_EQ(pq::dump(pq::points_to_json(back)), text);
  EXPECT_EQ(back.total(), Rational(5, 2));
}

TEST(Serialize, GenSpecMetadataRoundTrip) {
  pq::GenSpec s;
  s.kind = pq::GenKind::kDiscPolygons;
  s.n = 4;
  s.vertices = 7;
  s.seed = 123456789012345ull;
  const auto j = pq::gen_spec_to_json(s);
  const auto back = pq::gen_spec_from_json(j);
  EXPECT_EQ(pq::gen_spec_to_json(back), j);
  const auto file = pq::generated_to_json(s, pq::gen(s));
  EXPECT_EQ(file["metadata"]["generator"], j);
}

TEST(Serialize, Digest) {
  EXPECT_EQ(pq::sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
