#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "resdouble/io.hpp"
#include "resdouble/planecurve.hpp"

using namespace resdouble;

TEST(Io, DigraphIsSerializedWithSortedOneBasedPairs) {
    auto j = to_json(fixtures::C_digraph());
    EXPECT_EQ(j.dump(), R"({"n":7,"prox":[[2,1],[3,1],[3,2],[4,2],[5,3],[6,1],[6,3],[7,2],[7,3]]})");
}

TEST(Io, WeightedDigraphRoundTrip) {
    auto t = canonical_resolution_trace(parse_poly("y*(y^2-x^3)"));
    auto back = weighted_from_json(to_json(t.weighted));
    EXPECT_EQ(back.digraph, t.weighted.digraph);
    EXPECT_EQ(back.alpha_tilde, t.weighted.alpha_tilde);
    ASSERT_TRUE(back.gamma);
    EXPECT_EQ(*back.gamma, *t.weighted.gamma);
}

TEST(Io, MuIsAcceptedInPlaceOfAlphaTilde) {
    auto w = weighted_from_json(parse_json_text(R"({"n":4,"prox":[[2,1],[3,1],[4,1],[4,3]],"mu":[7,4,3,4]})"));
    EXPECT_EQ(w.alpha_tilde, (IntVector{7, 3, 2, 2}));
}

TEST(Io, InputErrors) {
    EXPECT_THROW(parse_json_text("{\"n\": 1,"), InputError);
    EXPECT_THROW(weighted_from_json(parse_json_text(R"({"n":1,"prox":[]})")), InputError);
    EXPECT_THROW(weighted_from_json(parse_json_text(R"({"n":1,"prox":[],"mu":[2],"alpha_tilde":[2]})")),
                 InputError);
    EXPECT_THROW(weighted_from_json(parse_json_text(R"({"n":2,"prox":[[3,1]],"alpha_tilde":[3,3]})")), InputError);
    EXPECT_THROW(weighted_from_json(parse_json_text(R"({"n":2,"prox":[[1,2]],"alpha_tilde":[3,3]})")),
                 InvalidDigraph);
    EXPECT_THROW(weighted_from_json(parse_json_text(R"({"n":2,"prox":[[2,1]],"alpha_tilde":[3]})")), InputError);
    EXPECT_THROW(weighted_from_json(parse_json_text(R"({"n":1,"prox":[],"alpha_tilde":[2.5]})")), InputError);
}

TEST(Io, ReportOfTriplePoint) {
    auto r = to_json(run_pipeline(fixtures::A(), json::object()));
    EXPECT_EQ(r["vectors"]["mu"], json({3, 4}));
    EXPECT_EQ(r["cycles"]["F"]["coeffs"], json({2, 1}));
    EXPECT_EQ(r["cycles"]["Z"]["witness"], 2);
    EXPECT_EQ(r["minimal"]["contracted"], json({1}));
    EXPECT_EQ(r["classification"]["gap"], true);
    EXPECT_EQ(r["classification"]["defective"], json({{"1", 1}}));
    EXPECT_TRUE(r["classification"]["rdp"].is_null());
    EXPECT_EQ(r["adjoint"]["c"], 1);
    EXPECT_EQ(r["adjoint"]["fixed_canonical"], json({1, 0}));
    EXPECT_EQ(r["adjoint"]["pluri"]["1"]["conditions"], 1);
    EXPECT_EQ(r["adjoint"]["pluri"]["2"]["conditions"], 2);
}

TEST(Io, ReportIsDeterministic) {
    auto a = to_json(run_pipeline(fixtures::B(), json::object())).dump(2);
    auto b = to_json(run_pipeline(fixtures::B(), json::object())).dump(2);
    EXPECT_EQ(a, b);
}

TEST(Io, UndeterminedSplitIsWarned) {
    auto r = run_pipeline(fixtures::E(), json::object());
    ASSERT_EQ(r.warnings.size(), 1u);
    EXPECT_NE(r.warnings[0].find("F_1"), std::string::npos);
    EXPECT_EQ(to_json(r)["classification"]["rdp"], "undetermined");
}

TEST(Io, DotHasBothGraphs) {
    auto dot = to_dot(run_pipeline(fixtures::A(), json::object()));
    EXPECT_NE(dot.find("digraph enriques {"), std::string::npos);
    EXPECT_NE(dot.find("q1 [label=\"q_1: 3\", shape=doublecircle];"), std::string::npos);
    EXPECT_NE(dot.find("q2 [label=\"q_2: 4\"];"), std::string::npos);
    EXPECT_NE(dot.find("q2 -> q1;"), std::string::npos);
    EXPECT_NE(dot.find("graph dual {"), std::string::npos);
    EXPECT_NE(dot.find("F2 [label=\"F_2: -2, 1\"];"), std::string::npos);
    EXPECT_NE(dot.find("F1 -- F2;"), std::string::npos);
}
