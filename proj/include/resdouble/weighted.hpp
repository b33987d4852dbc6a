#pragma once

#include <optional>
#include <vector>

#include "resdouble/lattice.hpp"

namespace resdouble {

/// A point where the proper transform of the curve meets the exceptional curves `on`,
/// or where two exceptional curves cross. `mult[k]` is the local intersection number of the
/// proper transform with curve `on[k]`; `conj_deg` counts the Galois-conjugate copies.
struct GammaPoint {
    std::vector<int> on;
    bool meets_btilde = false;
    std::vector<int> mult;
    int conj_deg = 1;

    friend bool operator==(const GammaPoint&, const GammaPoint&) = default;
};

/// Digraph with the multiplicities of the proper transform at each blown-up point.
struct WeightedDigraph {
    EnriquesDigraph digraph;
    IntVector alpha_tilde;
    std::optional<std::vector<GammaPoint>> gamma;

    int n() const { return digraph.n; }
};

}  // namespace resdouble
