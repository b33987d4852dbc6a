#pragma once

// Random complete weighted digraphs and plane curve germs, and the invariants every instance
// must satisfy. Used by the property tests and by `resdouble selftest`.

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "resdouble/adjoint.hpp"
#include "resdouble/minres.hpp"
#include "resdouble/planecurve.hpp"

namespace resdouble {

/// Multiplicities for `d` meeting the proximity inequality, raised until every point has
/// branch multiplicity at least 2.
template <class Rng>
IntVector random_multiplicities(const EnriquesDigraph& d, Rng& rng) {
    std::uniform_int_distribution<int> extra(0, 2);
    IntVector a(static_cast<std::size_t>(d.n));
    for (int i = d.n - 1; i >= 0; --i) {
        std::int64_t s = extra(rng);
        for (int j : d.sources(i)) s += a[j];
        a[i] = s;
    }
    for (bool changed = true; changed;) {
        changed = false;
        for (int i = d.n - 1; i >= 0; --i) {
            std::int64_t s = 0;
            for (int j : d.sources(i)) s += a[j];
            if (a[i] < s) a[i] = s, changed = true;
        }
        const auto me = derive_mu_eps(WeightedDigraph{d, a, std::nullopt});
        for (int i = 0; i < d.n; ++i)
            if (me.mu[i] < 2) a[i] += 2 - me.mu[i], changed = true;
    }
    return a;
}

/// Adds points until the data is complete: the proper transform is moved off branched curves
/// and meeting branched curves are separated. Gives up beyond `max_points`.
inline std::optional<WeightedDigraph> complete(WeightedDigraph w, int max_points) {
    for (;;) {
        if (w.n() > max_points) return std::nullopt;
        if (check_complete(w).empty()) return w;
        const auto me = derive_mu_eps(w);
        const auto mats = matrices(w.digraph);
        const IntVector gt = w.alpha_tilde * mats.N.transpose();
        auto add = [&](std::vector<int> targets, std::int64_t alpha) {
            const int p = w.digraph.n++;
            for (int t : targets) w.digraph.prox.insert({p, t});
            w.alpha_tilde.push_back(alpha);
        };
        bool fixed = false;
        for (int k = 0; k < w.n() && !fixed; ++k) {
            if (me.eps[k] != 1 || gt[k] <= 0) continue;
            // One or two points of odd multiplicity, so neither new curve is branched.
            if (gt[k] % 2) {
                add({k}, gt[k]);
            } else {
                add({k}, gt[k] - 1);
                add({k}, 1);
            }
            fixed = true;
        }
        for (int a = 0; a < w.n() && !fixed; ++a)
            for (int b = a + 1; b < w.n() && !fixed; ++b)
                if (me.eps[a] == 1 && me.eps[b] == 1 && mats.S(a, b) > 0) {
                    add({b, a}, 0);
                    fixed = true;
                }
        if (!fixed) return std::nullopt;
    }
}

template <class Rng>
std::optional<WeightedDigraph> random_complete_weighted(Rng& rng, int max_points = 12) {
    const int n = std::uniform_int_distribution<int>(1, std::max(1, max_points / 2))(rng);
    auto d = random_digraph(n, 0.4, rng);
    WeightedDigraph w{d, random_multiplicities(d, rng), std::nullopt};
    return complete(std::move(w), max_points);
}

/// A product of two or three branches y^a + c x^b or x^a + c y^b, resolved when every center is rational.
template <class Rng>
std::optional<ResolutionTrace> random_branch_trace(Rng& rng, int max_points = 12, std::string* text = nullptr) {
    std::uniform_int_distribution<int> count(1, 3), ea(1, 4), eb(1, 7), cs(-3, 3), coin(0, 1);
    std::string f;
    const int k = count(rng);
    for (int i = 0; i < k; ++i) {
        int a = ea(rng), b = eb(rng), c = 0;
        while (c == 0) c = cs(rng);
        const bool swap = coin(rng);
        const std::string u = swap ? "x" : "y", v = swap ? "y" : "x";
        if (!f.empty()) f += "*";
        f += "(" + u + "^" + std::to_string(a) + (c < 0 ? " - " : " + ") + std::to_string(std::abs(c)) + "*" + v +
             "^" + std::to_string(b) + ")";
    }
    if (text) *text = f;
    try {
        auto t = canonical_resolution_trace(parse_poly(f), max_points);
        return t;
    } catch (const GermError&) {
    } catch (const IrrationalCenter&) {
    } catch (const BlowupCapExceeded&) {
    }
    return std::nullopt;
}

/// Every invariant that holds for complete data; returns the violated ones.
inline std::vector<std::string> check_instance(const WeightedDigraph& w) {
    std::vector<std::string> bad;
    auto fail = [&](const std::string& s) { bad.push_back(s); };
    try {
        const auto d = derive_vectors(w);
        const int n = d.n();
        for (int i = 0; i < n; ++i) {
            if (d.gamma[i] % 2) fail("gamma odd");
            if (d.alpha[i] % 2) fail("alpha odd");
            if (d.beta[i] % 2) fail("beta odd");
            if (((d.beta_tilde[i] % 2) + 2) % 2 != d.eps[i]) fail("eps is not alpha~ M mod 2");
        }
        if (d.beta * d.mats.N != d.alpha) fail("alpha != beta N");

        const auto F = fiber_cycle(d);
        const auto Z = fundamental_cycle(d);
        if (F.self_intersection != -2) fail("F^2 != -2");
        if (Z.self_intersection != -1 && Z.self_intersection != -2) fail("Z^2 not in {-1, -2}");
        if (Z.witness.has_value() != (Z.self_intersection == -1)) fail("witness without Z^2 = -1");

        bool ambiguous = false;
        try {
            oracle_lattice(d);
        } catch (const SplitAmbiguity&) {
            ambiguous = true;
        }
        if (!ambiguous) {
            const auto L = f_lattice(d);
            if (fundamental_cycle_inductive(L) != Z.coeffs) fail("explicit Z != inductive Z");
            if (fundamental_cycle_inductive(L, true) != Z.coeffs) fail("Laufer scan order changes Z");
        }

        if (gap_predicate_graph(d) != gap_predicate_numerical(d)) fail("graph criterion != witness existence");
        if (Z.witness && !mod4_check(d, *Z.witness)) fail("mod 4 condition fails at the gap");

        // Balance z_k = sum of z_i over neighbours for each contracted curve.
        for (int k : minus_one_curves(d)) {
            std::int64_t s = 0;
            for (int i = 0; i < n; ++i)
                if (i != k && d.E_dot(i, k) == 1) s += Z.coeffs[i];
            if (Z.coeffs[k] != s) fail("z_k balance fails at a contracted curve");
        }
        const auto contraction = contract(d, F, Z);
        (void)contraction;

        const auto levels = defective_points(d);
        for (int i = 0; i < n; ++i)
            if (levels.count(i) != static_cast<std::size_t>(d.eps[i] == 1 && d.E_sq(i) == -2))
                fail("defective points are not the branched (-2)-curves");
        const auto fixed = fixed_part_canonical(d, levels);
        const auto D = D_divisor(d);
        const IntVector e = fixed.E_bar * d.mats.S;
        for (int i = 0; i < n; ++i)
            if (D.pairings[i] + e[i] > 0) fail("(D + E_bar).E_i > 0");
        if (pluricanonical_conditions(d, 1, static_cast<std::int64_t>(levels.size())) != canonical_conditions(d))
            fail("pluricanonical conditions at m = 1 differ from c");
    } catch (const Error& e) {
        fail(e.what());
    }
    return bad;
}

}  // namespace resdouble
