#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "resdouble/canres.hpp"
#include "resdouble/planecurve.hpp"

using namespace resdouble;

namespace {

ResolutionTrace trace(const std::string& f) { return canonical_resolution_trace(parse_poly(f)); }

void expect_same(const ResolutionTrace& t, const WeightedDigraph& w) {
    EXPECT_EQ(t.weighted.digraph, w.digraph);
    EXPECT_EQ(t.weighted.alpha_tilde, w.alpha_tilde);
}

/// delta invariant as the sum of m (m - 1) / 2 over the blown-up points.
long delta(const std::string& f) {
    const auto g = parse_poly(f);
    if (g.order() == 1) return 0;
    long s = 0;
    for (auto a : canonical_resolution_trace(g).weighted.alpha_tilde) s += a * (a - 1) / 2;
    return s;
}

}  // namespace

TEST(GermCheck, RejectsBadInput) {
    EXPECT_THROW(germ_check(parse_poly("0")), GermError);
    EXPECT_THROW(germ_check(parse_poly("x^2 + y^2 + 1")), GermError);
    EXPECT_THROW(germ_check(parse_poly("x + y^2")), GermError);
    EXPECT_THROW(germ_check(parse_poly("x^2*y")), GermError);
    EXPECT_THROW(germ_check(parse_poly("(y^2 - x^3)^2")), GermError);
    EXPECT_THROW(germ_check(parse_poly("(y - x)^2*(y + x^2)")), GermError);
    EXPECT_EQ(germ_check(parse_poly("y^2 - x^3")), 2);
    EXPECT_EQ(germ_check(parse_poly("x*(y^2-x)*(y^2+x)*(y^2-x^3)*(y^2+x^3)")), 7);
}

TEST(Trace, TriplePointWithTangentBranches) { expect_same(trace("y*(y-x^2)*(y+x^2)"), fixtures::A()); }

TEST(Trace, SevenfoldPoint) { expect_same(trace("x*(y^2-x)*(y^2+x)*(y^2-x^3)*(y^2+x^3)"), fixtures::B()); }

TEST(Trace, CuspWithTangentLine) {
    auto t = trace("y*(y^2-x^3)");
    EXPECT_EQ(t.weighted.alpha_tilde, (IntVector{3, 2, 1, 0, 0, 1, 1}));
    EXPECT_EQ(t.mu, (IntVector{3, 3, 3, 2, 2, 2, 2}));
    EXPECT_EQ(t.eps, (IntVector{1, 1, 1, 0, 0, 0, 0}));
    auto c = fixtures::C();
    EXPECT_TRUE(oracles::isomorphic(t.weighted.digraph, t.weighted.alpha_tilde, c.digraph, c.alpha_tilde));
}

TEST(Trace, LineWithHigherContact) { expect_same(trace("y*(x^4+y^6)"), fixtures::D()); }

TEST(Trace, Node) {
    expect_same(trace("x^2 - y^2"), fixtures::E());
    auto t = trace("x^2 + y^2");
    expect_same(t, fixtures::E());
    ASSERT_TRUE(t.weighted.gamma);
    ASSERT_EQ(t.weighted.gamma->size(), 1u);
    EXPECT_EQ(t.weighted.gamma->front(), (GammaPoint{{0}, true, {1}, 2}));
}

TEST(Trace, ThreeRationalLines) {
    expect_same(trace("y*(x^2-y^2)"), fixtures::F());
    expect_same(trace("(y - x)*(y - 2*x)*(y + 3*x)"), fixtures::F());
    expect_same(trace("x*(x - y)*(2*x + 5*y)"), fixtures::F());
}

TEST(Trace, MuAndEpsMatchDerivation) {
    for (const char* f : {"y*(y^2-x^3)", "y*(x^4+y^6)", "x^3 + y^5", "x*(x^2+y^3)", "(y^2-x^3)*(y^2-2*x^3)"}) {
        auto t = trace(f);
        auto me = derive_mu_eps(t.weighted);
        EXPECT_EQ(t.mu, me.mu) << f;
        EXPECT_EQ(t.eps, me.eps) << f;
    }
}

TEST(Trace, ResultIsComplete) {
    for (const char* f : {"y*(y-x^2)*(y+x^2)", "y*(y^2-x^3)", "x^3 + y^4", "x^3 + y^5", "y^2 - x^11",
                          "(y^2-x^3)*(y^3-x^5)", "y*(x^2+y^3)", "x^5 - y^5 + x^2*y^2"}) {
        auto t = trace(f);
        EXPECT_TRUE(check_complete(t.weighted).empty()) << f;
    }
}

TEST(Trace, GammaPointsAddUpToGammaTilde) {
    for (const char* f : {"y*(y^2-x^3)", "x*(y^2-x)*(y^2+x)*(y^2-x^3)*(y^2+x^3)", "x^2 + y^4", "y^3 - x^7"}) {
        auto t = trace(f);
        auto mats = matrices(t.weighted.digraph);
        IntVector gt = t.weighted.alpha_tilde * mats.N.transpose();
        IntVector sum(gt.size());
        for (const auto& g : *t.weighted.gamma)
            if (g.meets_btilde)
                for (std::size_t k = 0; k < g.on.size(); ++k) sum[g.on[k]] += g.mult[k] * g.conj_deg;
        EXPECT_EQ(sum, gt) << f;
    }
}

TEST(Trace, IrrationalCenterOnBranchedCurve) {
    try {
        trace("y*(x^2+y^2)");
        FAIL() << "expected an irrational center";
    } catch (const IrrationalCenter& e) {
        EXPECT_EQ(e.factor(), "v^2 + 1");
        EXPECT_EQ(e.curve(), 0);
    }
}

TEST(Trace, IrrationalSingularPoint) {
    EXPECT_THROW(trace("(y^2 - 2*x^2)^2 + x^6"), IrrationalCenter);
}

TEST(Trace, BlowupCap) {
    EXPECT_THROW(canonical_resolution_trace(parse_poly("y^2 - x^21"), 4), BlowupCapExceeded);
    EXPECT_NO_THROW(canonical_resolution_trace(parse_poly("y^2 - x^21"), 64));
}

TEST(Trace, SecondChartAndTranslatedCenters) {
    // Tangent directions y = x and x = 0, both needing further blowups.
    auto t = trace("((y - x)^2 - x^3)*(x^2 - y^5)");
    EXPECT_TRUE(check_complete(t.weighted).empty());
    auto u = trace("((x - y)^2 - y^3)*(y^2 - x^5)");
    EXPECT_TRUE(oracles::isomorphic(t.weighted.digraph, t.weighted.alpha_tilde, u.weighted.digraph,
                                    u.weighted.alpha_tilde));
}

TEST(Trace, NoetherFormulaAgainstResultant) {
    // I(f, g) = delta(f g) - delta(f) - delta(g) with the intersection number from a resultant.
    const std::vector<std::pair<std::string, std::string>> pairs = {
        {"y - x^2", "y + x^2"},     {"y^2 - x^3", "y - x"},       {"y^2 - x^3", "y^2 + x^3"},
        {"y^2 - x^3", "y^3 - x^5"}, {"y^3 - x^4", "y - x^2"},     {"y^2 - x^5", "y^2 - 4*x^5"},
        {"y^2 - x^5", "y - x^3"},   {"y^3 - x^7", "y^2 - x^5"},   {"y - x", "y^2 - x^2 - x^3"},
    };
    for (const auto& [f, g] : pairs) {
        const long expected = oracles::intersection_at_origin(parse_poly(f), parse_poly(g));
        EXPECT_EQ(delta("(" + f + ")*(" + g + ")") - delta(f) - delta(g), expected) << f << " . " << g;
    }
}
