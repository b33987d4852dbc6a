#pragma once

// Passage from the canonical resolution of the double cover to its minimal resolution by
// contracting the (-1)-curves among the F_i.

#include <string>
#include <vector>

#include "resdouble/cycles.hpp"

namespace resdouble {

/// Indices i with F_i a (-1)-curve: E_i branched with E_i^2 = -2.
inline std::vector<int> minus_one_curves(const CanResData& d) {
    std::vector<int> out;
    for (int j = 0; j < d.n(); ++j) {
        if (d.eps[j] != 1 || d.E_sq(j) != -2) continue;
        const auto next = d.digraph().sources(j);
        if (next.size() != 1 || parent(d.digraph(), next[0]) != j || d.mu[next[0]] != d.mu[j] + 1)
            throw InternalDefect("F_" + std::to_string(j + 1) + " is a (-1)-curve without a unique successor of "
                                 "multiplicity one higher");
        out.push_back(j);
    }
    for (std::size_t a = 0; a < out.size(); ++a)
        for (std::size_t b = a + 1; b < out.size(); ++b)
            if (d.E_dot(out[a], out[b]) != 0) throw InternalDefect("(-1)-curves must be disjoint");
    return out;
}

struct ContractionResult {
    std::vector<int> contracted;
    std::vector<int> survivors;
    IntMatrix bar_intersections;  // indexed by position in `survivors`
    IntVector bar_genera;
    ExcCycle bar_F, bar_Z;        // coefficients indexed by position in `survivors`
    bool gap_survives = false;    // F > Z and the images agree
    bool gap_from_points = false; // a unique point proximate to q_1 with alpha~_1 = alpha~_2 odd
    bool gap_from_squares = false;// both images have self-intersection -1
};

/// Contracts the (-1)-curves and reports the images of the fiber and fundamental cycles.
inline ContractionResult contract(const CanResData& d, const ExcCycle& F, const ExcCycle& Z) {
    ContractionResult r;
    r.contracted = minus_one_curves(d);
    std::vector<char> gone(static_cast<std::size_t>(d.n()), 0);
    for (int k : r.contracted) gone[k] = 1;
    for (int i = 0; i < d.n(); ++i)
        if (!gone[i]) r.survivors.push_back(i);

    // Blowing down a (-1)-curve C adds (A.C)(B.C) to A.B.
    IntMatrix L = f_lattice(d);
    const IntMatrix L0 = L;
    for (int k : r.contracted)
        for (int i = 0; i < d.n(); ++i)
            for (int j = 0; j < d.n(); ++j) L(i, j) += L0(i, k) * L0(j, k);

    const auto recs = curve_records(d);
    const std::size_t s = r.survivors.size();
    r.bar_intersections = IntMatrix(s, s);
    for (std::size_t a = 0; a < s; ++a) {
        for (std::size_t b = 0; b < s; ++b) r.bar_intersections(a, b) = L(r.survivors[a], r.survivors[b]);
        r.bar_genera.push_back(recs[r.survivors[a]].pa);
    }

    for (int k : r.contracted) {
        std::int64_t sum = 0;
        for (int i = 0; i < d.n(); ++i)
            if (i != k && d.E_dot(i, k) == 1) sum += Z.coeffs[i];
        if (Z.coeffs[k] != sum) throw InternalDefect("fundamental cycle is not balanced at a (-1)-curve");
    }

    for (std::size_t a = 0; a < s; ++a) {
        const int i = r.survivors[a];
        const bool smooth_rational_class = recs[i].split == Split::No && recs[i].pa == 0;
        if (smooth_rational_class && r.bar_intersections(a, a) == -1)
            throw InternalDefect("contraction produced a new (-1)-curve F_" + std::to_string(i + 1));
        if (recs[i].split == Split::Yes && recs[i].half_sq == -1)
            throw InternalDefect("a half of F_" + std::to_string(i + 1) + " is a (-1)-curve");
    }

    IntVector bar_k;
    for (std::size_t a = 0; a < s; ++a) bar_k.push_back(2 * r.bar_genera[a] - 2 - r.bar_intersections(a, a));
    auto image = [&](const ExcCycle& c) {
        ExcCycle out;
        for (int i : r.survivors) out.coeffs.push_back(c.coeffs[i]);
        out.self_intersection = pairing(r.bar_intersections, out.coeffs, out.coeffs);
        out.pa = cycle_genus(r.bar_intersections, bar_k, out.coeffs);
        out.witness = c.witness;
        return out;
    };
    r.bar_F = image(F);
    r.bar_Z = image(Z);
    if (r.bar_Z.self_intersection != -1 && r.bar_Z.self_intersection != -2)
        throw InternalDefect("image of the fundamental cycle has self-intersection " +
                             std::to_string(r.bar_Z.self_intersection));

    r.gap_survives = Z.witness.has_value() && r.bar_F.coeffs == r.bar_Z.coeffs;
    const auto near = d.digraph().sources(0);
    const auto& at = d.weighted.alpha_tilde;
    r.gap_from_points = near.size() == 1 && at[0] == at[near[0]] && at[0] % 2 == 1;
    r.gap_from_squares = r.bar_F.self_intersection == -1 && r.bar_Z.self_intersection == -1;
    if (r.gap_survives != r.gap_from_points || r.gap_survives != r.gap_from_squares)
        throw InternalDefect("criteria for F and Z to agree after contraction disagree");
    return r;
}

}  // namespace resdouble
