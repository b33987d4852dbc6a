#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "resdouble/generate.hpp"
#include "resdouble/io.hpp"

using namespace resdouble;

namespace {

constexpr int kInstances = 1000;

std::vector<WeightedDigraph> digraph_instances() {
    std::mt19937_64 rng(20240611);
    std::vector<WeightedDigraph> out;
    while (out.size() < kInstances)
        if (auto w = random_complete_weighted(rng)) out.push_back(std::move(*w));
    return out;
}

std::vector<std::pair<std::string, WeightedDigraph>> curve_instances() {
    std::mt19937_64 rng(977);
    std::vector<std::pair<std::string, WeightedDigraph>> out;
    while (out.size() < kInstances) {
        std::string f;
        if (auto t = random_branch_trace(rng, 12, &f)) out.emplace_back(f, t->weighted);
    }
    return out;
}

// Points j satisfying the parity condition for a gap, counted directly from the columns of M.
int gap_candidates(const CanResData& d) {
    const auto M = oracles::inverse_unitriangular(d.mats.N);
    int count = 0;
    for (int j = 1; j < d.n(); ++j) {
        if (d.eps[j] != 0 || parent(d.digraph(), j) != 0) continue;
        bool ok = true;
        for (int i = 0; i < d.n(); ++i)
            if (d.eps[i] == 0 && (M(0, i) + M(j, i)) % 2) ok = false;
        count += ok;
    }
    return count;
}

void check_fixed_parts(const CanResData& d) {
    const auto levels = defective_points(d);
    const auto fixed = fixed_part_canonical(d, levels);
    EXPECT_EQ(oracles::greedy_fixed_part(d, 1, 1), fixed.E_bar);
    const bool high = std::all_of(d.alpha.begin(), d.alpha.end(), [](auto a) { return a >= 4; });
    for (int m = 2; m <= 3; ++m) {
        EXPECT_EQ(oracles::greedy_fixed_part(d, m, m), fixed_part_pluricanonical(fixed, m));
        if (high) {
            EXPECT_EQ(oracles::greedy_fixed_part(d, m, m - 1), fixed_part_pluricanonical(fixed, m - 1));
        }
    }
}

}  // namespace

TEST(Properties, RandomDigraphsSatisfyAllInvariants) {
    int gaps = 0;
    for (const auto& w : digraph_instances()) {
        ASSERT_LE(w.n(), 12);
        const auto bad = check_instance(w);
        ASSERT_TRUE(bad.empty()) << bad.front() << " for " << to_json(w).dump();
        const auto d = derive_vectors(w);
        EXPECT_LE(gap_candidates(d), 1);
        EXPECT_EQ(gap_candidates(d) == 1, gap_predicate_graph(d));
        gaps += gap_predicate_graph(d);
        EXPECT_EQ(alpha_tilde_from_mu(w.digraph, d.mu), w.alpha_tilde);
        check_fixed_parts(d);
    }
    EXPECT_GT(gaps, 0);
}

TEST(Properties, ResolvedCurvesSatisfyAllInvariants) {
    int gaps = 0;
    for (const auto& [f, w] : curve_instances()) {
        ASSERT_LE(w.n(), 12);
        EXPECT_TRUE(check_complete(w).empty()) << f;
        const auto bad = check_instance(w);
        ASSERT_TRUE(bad.empty()) << bad.front() << " for " << f;
        const auto d = derive_vectors(w);
        EXPECT_LE(gap_candidates(d), 1) << f;
        gaps += gap_predicate_graph(d);
        check_fixed_parts(d);
    }
    EXPECT_GT(gaps, 0);
}

TEST(Properties, DigraphRecoveredFromIntersectionMatrix) {
    for (const auto& w : digraph_instances()) EXPECT_EQ(digraph_from_S(matrices(w.digraph).S), w.digraph);
}

TEST(Properties, ReportsSurviveJsonRoundTrip) {
    auto inst = curve_instances();
    for (std::size_t k = 0; k < inst.size(); k += 10) {
        const auto& w = inst[k].second;
        const auto back = weighted_from_json(parse_json_text(to_json(w).dump()));
        EXPECT_EQ(to_json(run_pipeline(back, json::object())).dump(),
                  to_json(run_pipeline(w, json::object())).dump());
    }
}
