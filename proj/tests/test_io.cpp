#include <gtest/gtest.h>

#include "tfam/io.hpp"
#include "tfam/model.hpp"

using namespace tfam;

TEST(ModelJson, KGraphRoundTrip) {
  auto doc = Json::parse(R"({"kind":"kgraph","rank":2,"vertices":["u","w"],
                             "adjacency":[[[0,1],[0,1]],[[0,1],[0,1]]]})");
  auto m = model_from_json(doc);
  ASSERT_TRUE(std::holds_alternative<KGraph>(m));
  EXPECT_EQ(model_to_json(m), doc);
  EXPECT_EQ(fingerprint(m), fingerprint(AnyModel(fixtures::k2())));
}

TEST(ModelJson, DynsysRoundTrip) {
  auto doc = Json::parse(R"({"kind":"dynsys","rank":2,"points":["p","q"],
                             "maps":[{"p":"p","q":"q"},{"p":"q","q":"q"}]})");
  auto m = model_from_json(doc);
  ASSERT_TRUE(std::holds_alternative<PartialMapSystem>(m));
  EXPECT_EQ(model_to_json(m), doc);
  EXPECT_EQ(fingerprint(m), fingerprint(AnyModel(fixtures::ds_b())));
}

TEST(ModelJson, OmittedPointsAreUndefined) {
  auto m = model_from_json(Json::parse(R"({"kind":"dynsys","rank":1,"points":["a","b"],"maps":[{"b":"a"}]})"));
  EXPECT_EQ(std::get<PartialMapSystem>(m).apply(0, 0), std::nullopt);
}

TEST(ModelJson, RejectsBadDocuments) {
  const char* bad[] = {
      R"({"rank":1,"vertices":["a"],"adjacency":[[[1]]]})",
      R"({"kind":"graph","rank":1,"vertices":["a"],"adjacency":[[[1]]]})",
      R"({"kind":"kgraph","rank":2,"vertices":["a"],"adjacency":[[[1]]]})",
      R"({"kind":"kgraph","rank":1,"vertices":["a"],"adjacency":[[[-1]]]})",
      R"({"kind":"kgraph","rank":1,"vertices":["a"],"adjacency":[[[1.5]]]})",
      R"({"kind":"kgraph","rank":0,"vertices":["a"],"adjacency":[]})",
      R"({"kind":"dynsys","rank":1,"points":["a"],"maps":[{"z":"a"}]})",
      R"({"kind":"dynsys","rank":1,"points":["a"],"maps":[{"a":"z"}]})",
      R"({"kind":"dynsys","rank":1,"points":["a"],"maps":[{"a":3}]})",
      R"({"kind":"dynsys","rank":1,"points":["a","a"],"maps":[{}]})",
  };
  for (const char* text : bad) EXPECT_THROW(model_from_json(Json::parse(text)), invalid_input) << text;
}

TEST(FamilyJson, RoundTripInCanonicalOrder) {
  std::vector<std::string> names = {"p", "q"};
  IdealFamily f(2);
  f[SubsetMask::of({1})] = VertexSet::of({0, 1});
  f[SubsetMask::of({2})] = VertexSet::of({1});
  auto doc = family_to_json(f, names);
  EXPECT_EQ(doc.dump(), R"({"rank":2,"sets":{"":[],"1":["p","q"],"2":["q"],"1,2":[]}})");
  EXPECT_EQ(family_from_json(doc, names, 2), f);
}

TEST(FamilyJson, RejectsBadFamilies) {
  std::vector<std::string> names = {"p", "q"};
  const char* bad[] = {
      R"({"rank":1,"sets":{"":[],"1":[]}})",
      R"({"rank":2,"sets":{"":[],"1":[],"2":[]}})",
      R"({"rank":2,"sets":{"":[],"1":[],"2":[],"2,1":[]}})",
      R"({"rank":2,"sets":{"":[],"1":[],"2":[],"1,2":["z"]}})",
      R"({"rank":2,"sets":{"":[],"1":[],"2":[],"1,2":["p","p"]}})",
      R"({"rank":2,"sets":{"":[],"1":[],"2":[],"1,2":[],"3":[]}})",
      R"({"rank":2,"sets":[]})",
  };
  for (const char* text : bad) EXPECT_THROW(family_from_json(Json::parse(text), names, 2), invalid_input) << text;
}

TEST(Fingerprint, IsStableHex) {
  auto a = fingerprint(AnyModel(fixtures::ds_a()));
  EXPECT_EQ(a.size(), 16u);
  EXPECT_EQ(a, fingerprint(AnyModel(fixtures::ds_a())));
  EXPECT_NE(a, fingerprint(AnyModel(fixtures::ds_b())));
}

TEST(ReadJsonFile, MissingFileIsInvalidInput) {
  EXPECT_THROW(read_json_file("/nonexistent/model.json"), invalid_input);
}

TEST(DataFixtures, MatchBuiltInFixtures) {
  const std::string dir = TFAM_DATA;
  EXPECT_EQ(fingerprint(load_model_file(dir + "/ds_a.json")), fingerprint(AnyModel(fixtures::ds_a())));
  EXPECT_EQ(fingerprint(load_model_file(dir + "/ds_b.json")), fingerprint(AnyModel(fixtures::ds_b())));
  EXPECT_EQ(fingerprint(load_model_file(dir + "/k1.json")), fingerprint(AnyModel(fixtures::k1())));
  EXPECT_EQ(fingerprint(load_model_file(dir + "/k2.json")), fingerprint(AnyModel(fixtures::k2())));
  EXPECT_EQ(fingerprint(load_model_file(dir + "/u_to_w.json")), fingerprint(AnyModel(fixtures::u_to_w())));
  EXPECT_EQ(fingerprint(load_model_file(dir + "/single_loop.json")), fingerprint(AnyModel(fixtures::single_loop())));
  auto L = family_from_json(read_json_file(dir + "/L.json"), fixtures::ds_b().names(), 2);
  EXPECT_EQ(L[SubsetMask::of({1, 2})], VertexSet::of({0}));
  EXPECT_EQ(L.height(), 1u);
}
