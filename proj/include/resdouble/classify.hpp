#pragma once

// Combinatorial classification: when the fundamental cycle differs from the fiber cycle,
// defective points of the canonical divisor, and recognition of rational double points.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "resdouble/cycles.hpp"

namespace resdouble {

/// mu_i odd and exactly one petal of q_i has odd length.
inline bool very_odd(const CanResData& d, int i) {
    if (d.mu[i] % 2 == 0) return false;
    int odd = 0;
    for (const auto& p : petals(d.digraph(), i)) odd += static_cast<int>(p.size() % 2);
    return odd == 1;
}

inline std::vector<int> very_odd_points(const CanResData& d) {
    std::vector<int> out;
    for (int i = 0; i < d.n(); ++i)
        if (very_odd(d, i)) out.push_back(i);
    return out;
}

/// F > Z, read off the lattice.
inline bool gap_predicate_numerical(const CanResData& d) { return gap_witness(d).has_value(); }

/// F > Z, read off the weighted digraph: q_1 is very odd and, recursively from every very odd point
/// reached, a point of a petal is very odd exactly when the petal length and its position have
/// different parity.
inline bool gap_predicate_graph(const CanResData& d) {
    if (!very_odd(d, 0)) return false;
    std::vector<int> todo{0};
    while (!todo.empty()) {
        const int v = todo.back();
        todo.pop_back();
        for (const auto& p : petals(d.digraph(), v))
            for (std::size_t k = 0; k < p.size(); ++k) {
                const bool expected = (p.size() % 2) != ((k + 1) % 2);
                if (very_odd(d, p[k]) != expected) return false;
                if (expected) todo.push_back(p[k]);
            }
    }
    return true;
}

/// At a gap with witness q_j, alpha~_1 + alpha~_j = 2 mod 4.
inline bool mod4_check(const CanResData& d, int j) {
    return (d.weighted.alpha_tilde[0] + d.weighted.alpha_tilde[j]) % 4 == 2;
}

/// Defective points with their levels: q_i is defective when some q_j of order one over it has
/// alpha_j > alpha_i; its level grows along stacks q_j >^2 q_i of defective points with equal alpha.
inline std::map<int, int> defective_points(const CanResData& d) {
    const auto& g = d.digraph();
    std::vector<char> def(static_cast<std::size_t>(d.n()), 0);
    for (int j = 0; j < d.n(); ++j) {
        const int i = parent(g, j);
        if (i >= 0 && d.alpha[j] > d.alpha[i]) def[i] = 1;
    }
    const auto D = D_divisor(d);
    for (int i = 0; i < d.n(); ++i) {
        const bool by_square = d.eps[i] == 1 && d.E_sq(i) == -2;
        const bool by_pairing = D.pairings[i] > 0;
        if (static_cast<bool>(def[i]) != by_square || by_square != by_pairing)
            throw InternalDefect("characterisations of defective q" + std::to_string(i + 1) + " disagree");
    }

    std::map<int, int> level;
    for (int i = d.n() - 1; i >= 0; --i) {
        if (!def[i]) continue;
        int best = 0;
        for (int j = i + 1; j < d.n(); ++j)
            if (def[j] && d.alpha[j] == d.alpha[i] && infinitesimal_order(g, i, j) == 2)
                best = std::max(best, level[j]);
        level[i] = best + 1;

        // The successor q_j has alpha~_j = alpha~_i and either alpha_i = alpha~_i - 1, or q_i and q_j
        // both lie on a branched curve.
        int j = -1;
        for (int k : g.sources(i))
            if (parent(g, k) == i && d.alpha[k] > d.alpha[i]) j = k;
        bool ok = d.weighted.alpha_tilde[j] == d.weighted.alpha_tilde[i] && d.eps[j] == 0;
        bool shared = false;
        for (int k : g.targets(i))
            if (d.eps[k] == 1 && g.proximate(j, k)) shared = true;
        ok = ok && (d.alpha[i] == d.weighted.alpha_tilde[i] - 1 ||
                    (d.alpha[i] == d.weighted.alpha_tilde[i] && shared));
        if (!ok) throw InternalDefect("defective q" + std::to_string(i + 1) + " fits neither case");
    }
    return level;
}

/// The point of order one over a defective q_i carrying the larger alpha.
inline int defective_successor(const CanResData& d, int i) {
    for (int j : d.digraph().sources(i))
        if (parent(d.digraph(), j) == i && d.alpha[j] > d.alpha[i]) return j;
    throw InternalDefect("q" + std::to_string(i + 1) + " has no successor of larger alpha");
}

struct RdpResult {
    enum class Kind { None, Label, Undetermined };
    Kind kind = Kind::None;
    std::string label;
};

/// Sorted coefficient multisets of the fundamental cycles of the ADE Dynkin diagrams.
inline std::vector<int> ade_signature(char family, int rank) {
    std::vector<int> s;
    switch (family) {
        case 'A': s.assign(static_cast<std::size_t>(rank), 1); break;
        case 'D':
            s = {1, 1, 1};
            s.insert(s.end(), static_cast<std::size_t>(rank - 3), 2);
            break;
        case 'E':
            if (rank == 6) s = {1, 1, 2, 2, 2, 3};
            if (rank == 7) s = {1, 2, 2, 2, 3, 3, 4};
            if (rank == 8) s = {2, 2, 3, 3, 4, 4, 5, 6};
            break;
    }
    std::sort(s.begin(), s.end());
    return s;
}

/// Rational double point type, from the pattern of self-intersections and the fundamental cycle.
inline RdpResult rdp_recognize(const CanResData& d, const ExcCycle& Z) {
    RdpResult r;
    const auto recs = curve_records(d);
    std::vector<int> coeffs;
    bool undetermined = false;
    for (int i = 0; i < d.n(); ++i) {
        const auto& c = recs[i];
        const bool fits = c.eps == 1 ? c.E_sq == -4
                                     : (c.E_sq == -1 && c.gamma == 2) || (c.E_sq == -2 && c.gamma == 0);
        if (!fits) return r;
        if (c.split == Split::Undetermined) undetermined = true;
        coeffs.push_back(static_cast<int>(Z.coeffs[i]));
        if (c.split == Split::Yes) coeffs.push_back(static_cast<int>(Z.coeffs[i]));
    }
    if (Z.witness) throw InternalDefect("rational double point with F != Z");
    if (undetermined) {
        r.kind = RdpResult::Kind::Undetermined;
        return r;
    }
    std::sort(coeffs.begin(), coeffs.end());
    const int rank = static_cast<int>(coeffs.size());
    const std::vector<std::pair<char, int>> candidates = {{'A', rank}, {'D', rank}, {'E', rank}};
    for (auto [family, k] : candidates) {
        if ((family == 'D' && k < 4) || (family == 'E' && (k < 6 || k > 8))) continue;
        if (ade_signature(family, k) == coeffs) {
            r.kind = RdpResult::Kind::Label;
            r.label = std::string(1, family) + std::to_string(k);
            return r;
        }
    }
    throw InternalDefect("rational double point with an unknown fundamental cycle");
}

struct Classification {
    bool gap = false;
    std::optional<int> witness;
    std::vector<int> very_odd;
    std::map<int, int> defective;
    RdpResult rdp;
};

inline Classification classify(const CanResData& d, const ExcCycle& Z) {
    Classification c;
    c.gap = gap_predicate_numerical(d);
    if (c.gap != gap_predicate_graph(d)) throw InternalDefect("numerical and graph criteria for F > Z disagree");
    c.witness = Z.witness;
    if (c.witness && !mod4_check(d, *c.witness)) throw InternalDefect("gap witness fails the mod 4 condition");
    c.very_odd = very_odd_points(d);
    c.defective = defective_points(d);
    c.rdp = rdp_recognize(d, Z);
    return c;
}

}  // namespace resdouble
