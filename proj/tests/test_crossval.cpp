#include <gtest/gtest.h>

#include "tfam/crossval.hpp"
#include "tfam/model.hpp"

using namespace tfam;

namespace {

CorpusModel ctx_of(AnyModel m, std::string origin = "fixture") { return {std::move(m), std::move(origin), 0}; }

}  // namespace

TEST(RandomModel, DeterministicForFixedArguments) {
  auto a = random_model("kgraph", 2, 4, 42);
  auto b = random_model("kgraph", 2, 4, 42);
  EXPECT_EQ(model_to_json(a).dump(), model_to_json(b).dump());
  EXPECT_NE(model_to_json(a).dump(), model_to_json(random_model("kgraph", 2, 4, 43)).dump());
}

TEST(RandomModel, PassesLoadValidation) {
  for (std::uint64_t seed = 0; seed < 60; ++seed)
    for (const char* kind : {"kgraph", "dynsys"}) {
      auto m = random_model(kind, 1 + seed % 4, 1 + seed % 6, seed);
      EXPECT_NO_THROW(model_from_json(model_to_json(m)));
      EXPECT_EQ(rank_of(m), 1 + seed % 4);
      EXPECT_EQ(vertex_count_of(m), 1 + seed % 6);
    }
}

TEST(RandomModel, RejectionMode) {
  EXPECT_THROW(random_model("kgraph", 2, 4, 1, 2, Strategy::rejection, 0), budget_exceeded);
  EXPECT_THROW(random_model("dynsys", 2, 4, 1, 2, Strategy::rejection, 0), budget_exceeded);
  EXPECT_NO_THROW(random_model("dynsys", 2, 2, 1, 2, Strategy::rejection, 100000));
  EXPECT_THROW(random_model("graph", 2, 2, 1), invalid_input);
}

TEST(ExhaustiveModels, Counts) {
  // 1x1 matrices with entries 0..2 all commute.
  EXPECT_EQ(all_kgraphs(2, 1, 2, 1000).size(), 9u);
  // Partial maps on one point: undefined or identity, all commute.
  EXPECT_EQ(all_dynsys(2, 1, 1000).size(), 4u);
  EXPECT_THROW(all_kgraphs(2, 3, 2, 10), budget_exceeded);
}

TEST(CorpusSpec, ParsesAndValidates) {
  auto spec = corpus_from_json(Json::parse(R"({"kinds":["dynsys"],"max_rank":2,"max_vertices":3,"seed":9,"samples":5})"));
  EXPECT_EQ(spec.kinds, std::vector<std::string>{"dynsys"});
  EXPECT_EQ(spec.seed, 9u);
  EXPECT_EQ(build_corpus(spec).size(), 5u);
  EXPECT_THROW(corpus_from_json(Json::parse(R"({"kinds":["x"]})")), invalid_input);
  EXPECT_THROW(corpus_from_json(Json::parse(R"({"min_rank":3,"max_rank":2})")), invalid_input);
  EXPECT_THROW(corpus_from_json(Json::parse(R"({"max_vertices":0})")), invalid_input);
  EXPECT_THROW(corpus_from_json(Json::parse(R"({"seed":-1})")), invalid_input);
  EXPECT_THROW(corpus_from_json(Json::parse("[]")), invalid_input);
}

TEST(EquivalenceSweep, FixturesAreClean) {
  SweepOptions opts;
  EXPECT_TRUE(equivalence_sweep(fixtures::k2(), ctx_of(fixtures::k2()), opts).empty());
  EXPECT_TRUE(equivalence_sweep(fixtures::ds_a(), ctx_of(fixtures::ds_a()), opts).empty());
  EXPECT_TRUE(equivalence_sweep(fixtures::ds_b(), ctx_of(fixtures::ds_b()), opts).empty());
}

TEST(EquivalenceSweep, InjectedFaultIsReported) {
  SweepOptions opts;
  Verdicts<Tabulated<KGraph>> broken;
  broken.t_family = [](const Tabulated<KGraph>& m, const IdealFamily& f) {
    return is_t_family(m, f).verdict || f[SubsetMask{}] == VertexSet::of({1});
  };
  auto reports = equivalence_sweep(fixtures::k2(), ctx_of(fixtures::k2()), opts, broken);
  ASSERT_FALSE(reports.empty());
  EXPECT_EQ(reports.front().claim, "t_equals_nt");
  ASSERT_TRUE(reports.front().family.has_value());
  // Replayable: the recorded model reloads and the family really is no T-family.
  auto replay = model_from_json(reports.front().model);
  EXPECT_FALSE(is_t_family(std::get<KGraph>(replay), *reports.front().family).verdict);
}

TEST(EquivalenceSweep, SampledAboveCeiling) {
  SweepOptions opts;
  opts.candidate_bits_ceiling = 4;
  opts.sampled_candidates = 200;
  auto m = random_model("kgraph", 2, 4, 5);
  EXPECT_TRUE(crosscheck_model(ctx_of(m, "random"), opts).empty());
  auto cands = std::visit([&](const auto& g) { return sampled_candidates(g, opts); }, m);
  EXPECT_GE(cands.size(), 400u);
}

TEST(KatsuraPairs, Examples) {
  EXPECT_EQ(katsura_pairs(fixtures::u_to_w()).count(), 6u);
  EXPECT_EQ(katsura_pairs(fixtures::single_loop()).count(), 3u);
  EXPECT_THROW(katsura_pairs(fixtures::k1()), invalid_input);
  // (∅, V) is a pair iff V ⊆ jf_of(∅, {1}).
  for (auto g : {fixtures::u_to_w(), fixtures::single_loop()}) {
    IdealFamily pair(1);
    pair[SubsetMask::of({1})] = universe(g);
    auto pairs = katsura_pairs(g).families;
    bool listed = std::find(pairs.begin(), pairs.end(), pair) != pairs.end();
    EXPECT_EQ(listed, universe(g).subset_of(jf_of(g, VertexSet{}, SubsetMask::of({1}))));
  }
}

TEST(KatsuraPairs, MatchEnumerationOnRankOne) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto m = random_model(seed % 2 ? "kgraph" : "dynsys", 1, 1 + seed % 5, seed);
    EXPECT_TRUE(std::visit([&](const auto& g) { return katsura_check(g, ctx_of(m)); }, m).empty());
  }
}

TEST(PropertySuite, CleanOnFixturesAndRandomModels) {
  EXPECT_TRUE(property_suite(fixtures::ds_a(), ctx_of(fixtures::ds_a())).empty());
  EXPECT_TRUE(property_suite(fixtures::ds_b(), ctx_of(fixtures::ds_b())).empty());
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto m = random_model(seed % 2 ? "kgraph" : "dynsys", 1 + seed % 3, 1 + seed % 5, 100 + seed);
    EXPECT_TRUE(std::visit([&](const auto& g) { return property_suite(g, ctx_of(m)); }, m).empty());
  }
}

TEST(PropertySuite, JPassdownInstanceOnDsA) {
  auto ds_a = fixtures::ds_a();
  auto J = j_family(ds_a);
  auto lhs = ds_a.phi(0, J[SubsetMask{}]) & J[SubsetMask::of({1})];
  EXPECT_EQ(ds_a.phi(0, J[SubsetMask{}]), VertexSet::of({1}));
  EXPECT_TRUE(lhs.subset_of(J[SubsetMask{}]));
}

TEST(DiscrepancyReport, Json) {
  DiscrepancyReport r{"abc", "t_equals_nt", "random", 7, Json::object(), IdealFamily(1), std::nullopt, SubsetMask::of({1}), "x"};
  auto doc = report_to_json(r, {"v"});
  EXPECT_EQ(doc["claim"], "t_equals_nt");
  EXPECT_EQ(doc["seed"], 7);
  EXPECT_EQ(doc["F"], "1");
  EXPECT_TRUE(doc["set"].is_null());
}
