#include <gtest/gtest.h>

#include "gsec/errors.hpp"
#include "gsec/json_io.hpp"
#include "gsec/random_instances.hpp"
#include "gsec/verify.hpp"

using namespace gsec;

TEST(Json, RationalsAsStrings) {
  EXPECT_EQ(to_json(Rational(3, 6)).get<std::string>(), "1/2");
  EXPECT_EQ(rational_from_json(Json("-4/6"), "x"), Rational(-2, 3));
  EXPECT_EQ(rational_from_json(Json(5), "x"), 5);
  EXPECT_THROW(rational_from_json(Json(0.5), "x"), ParseError);
}

TEST(Json, FamilyRoundTrip) {
  Rng rng(1);
  for (int t = 0; t < 20; ++t) {
    const Graph g = random_graph(rng, uniform_int(rng, 2, 5), 0.7);
    const auto fam = coin(rng, 0.5) ? random_structured_family(rng, g) : random_downward_family(rng, g, 2);
    const auto back = family_from_json(to_json(fam));
    EXPECT_EQ(back.host(), g);
    for (const auto& f : enumerate_forests(g)) EXPECT_EQ(back.contains(f), fam.contains(f));
  }
}

TEST(Json, MalformedTextReportsLine) {
  try {
    parse_json_text("{\n  \"kind\": \"cmst\",\n  oops\n}");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(Json, FieldErrorsAreParseErrors) {
  EXPECT_THROW(family_from_json(parse_json_text(R"({"kind": "cmst"})")), ParseError);
  EXPECT_THROW(family_from_json(parse_json_text(R"({"graph": {"n": 3, "complete": true}, "kind": "nope"})")), ParseError);
  EXPECT_THROW(family_from_json(parse_json_text(R"({"graph": {"n": 3, "complete": true}, "kind": "degree", "b": "x"})")),
               ParseError);
  EXPECT_THROW(vrp_from_json(parse_json_text(R"({"n": 2, "k": 1, "depot_costs": [1, 1], "edge_costs": {}})")), ParseError);
}

TEST(Json, ReportCarriesTablesAndCertificates) {
  const auto fam = ForestFamily::degree_bounded(Graph::complete(4), {2, 2, 2, 2});
  const Json j = to_json(fam.host(), is_representable(fam));
  EXPECT_FALSE(j["representable"].get<bool>());
  EXPECT_FALSE(j["certificates"].empty());
  EXPECT_TRUE(j.contains("ell"));
  EXPECT_TRUE(j.contains("u"));
}

TEST(Revalidate, RejectsTamperedCertificates) {
  const Graph k3 = Graph::complete(3);
  const auto fam = ForestFamily::cmst(k3, {1, 1, 1}, 2);
  CertContext ctx;
  ctx.family = &fam;
  const Forest path = path_to_forest(k3, PathSeq({0, 1, 2}));
  const Forest edge = path_to_forest(k3, PathSeq({0, 1}));
  EXPECT_TRUE(revalidate(k3, ForestWitness{path, "minimal_infeasible"}, ctx));
  EXPECT_FALSE(revalidate(k3, ForestWitness{edge, "minimal_infeasible"}, ctx));
  EXPECT_FALSE(revalidate(k3, ForestPair{path, edge, "missing_subgraph"}, ctx));
  const GsecPolytope p(k3, RhsTable::ones(3));
  ctx.polytope = &p;
  EXPECT_FALSE(revalidate(k3, ViolatedGsec{k3.all_vertices(), 2, 2, path}, ctx));
  const SetFunction g = SetFunction::table(2, {0, 1, 1, 3});
  CertContext gctx;
  gctx.g = &g;
  EXPECT_TRUE(revalidate(Graph::complete(2), SubsetPair{VertexSet::single(0), VertexSet::single(1)}, gctx));
  EXPECT_FALSE(revalidate(Graph::complete(2), SubsetPair{VertexSet::single(0), VertexSet::of({0, 1})}, gctx));
}

TEST(Verify, SeedDeterminesOutput) {
  for (const auto& name : suite_names()) {
    const auto a = to_json(run_suite(name, 5, 42)).dump();
    const auto b = to_json(run_suite(name, 5, 42)).dump();
    EXPECT_EQ(a, b) << name;
  }
}

TEST(Verify, TrialsAreOrderIndependent) {
  const auto whole = run_suite("thm1", 6, 10);
  const auto tail = run_suite("thm1", 3, 13);
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(whole.trials[static_cast<std::size_t>(i + 3)].seed, tail.trials[static_cast<std::size_t>(i)].seed);
    EXPECT_EQ(whole.trials[static_cast<std::size_t>(i + 3)].detail, tail.trials[static_cast<std::size_t>(i)].detail);
  }
}

TEST(Verify, AllSuitesPass) {
  for (const auto& name : suite_names()) {
    const auto r = run_suite(name, 30, 42);
    EXPECT_TRUE(r.ok()) << name;
    EXPECT_EQ(r.passed + r.failed + r.skipped, 30) << name;
  }
}

TEST(Verify, NonSubadditiveInputIsAPreconditionNotAFailure) {
  const Json g = parse_json_text(R"({"kind": "table", "n": 2, "values": {"1": "1/4", "2": "1/4", "3": 2}})");
  const auto r = run_suite("prop5", 3, 0, g);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.skipped, 3);
  EXPECT_NE(r.trials[0].detail.find("precondition"), std::string::npos);
}

TEST(Verify, UnknownSuite) { EXPECT_THROW(run_suite("nope", 1, 0), BadParams); }

TEST(Verify, DefinitionalBrpCheck) {
  const std::vector<Rational> d{1, 1, -1};
  const std::vector<int> a{0, 1, 2}, b{0, 2, 1};
  EXPECT_FALSE(brp_feasible_by_definition(d, 1, a));
  EXPECT_TRUE(brp_feasible_by_definition(d, 1, b));
}
