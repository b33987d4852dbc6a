#pragma once

#include <initializer_list>
#include <utility>

#include "resdouble/weighted.hpp"

namespace fixtures {

using resdouble::EnriquesDigraph;
using resdouble::IntVector;
using resdouble::WeightedDigraph;

/// Digraph from 1-based arcs {j, i} meaning q_j -> q_i.
inline EnriquesDigraph digraph(int n, std::initializer_list<std::pair<int, int>> arcs) {
    EnriquesDigraph d;
    d.n = n;
    for (auto [j, i] : arcs) d.prox.insert({j - 1, i - 1});
    return d;
}

inline WeightedDigraph weighted(EnriquesDigraph d, IntVector a) { return {std::move(d), std::move(a), {}}; }

// Ordinary triple point with one smooth branch: y (y - x^2)(y + x^2).
inline WeightedDigraph A() { return weighted(digraph(2, {{2, 1}}), {3, 3}); }

// x (y^2 - x)(y^2 + x)(y^2 - x^3)(y^2 + x^3), multiplicity 7.
inline EnriquesDigraph B_digraph() { return digraph(4, {{2, 1}, {3, 1}, {4, 1}, {4, 3}}); }
inline WeightedDigraph B() { return weighted(B_digraph(), {7, 3, 2, 2}); }

// y (y^2 - x^3), labelled with the two free points before the two crossings.
inline EnriquesDigraph C_digraph() {
    return digraph(7, {{2, 1}, {3, 1}, {3, 2}, {4, 2}, {5, 3}, {6, 1}, {6, 3}, {7, 2}, {7, 3}});
}
inline WeightedDigraph C() { return weighted(C_digraph(), {3, 2, 1, 1, 1, 0, 0}); }

// y (x^4 + y^6).
inline WeightedDigraph D() { return weighted(B_digraph(), {5, 1, 2, 2}); }

// A node.
inline WeightedDigraph E() { return weighted(digraph(1, {}), {2}); }

// Three lines through the origin, y (x^2 - y^2).
inline WeightedDigraph F() { return weighted(digraph(4, {{2, 1}, {3, 1}, {4, 1}}), {3, 1, 1, 1}); }

/// Chain of 2k free points, each of multiplicity 2g + 1.
inline WeightedDigraph chain(int k, int g) {
    EnriquesDigraph d;
    d.n = 2 * k;
    for (int j = 1; j < d.n; ++j) d.prox.insert({j, j - 1});
    return weighted(d, IntVector(static_cast<std::size_t>(d.n), 2 * g + 1));
}

}  // namespace fixtures
