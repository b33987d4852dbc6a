#pragma once

// Cycles supported on the exceptional curves F_i of the double cover: the fiber cycle F, the
// fundamental cycle Z and their arithmetic genera.

#include <optional>
#include <string>
#include <vector>

#include "resdouble/canres.hpp"

namespace resdouble {

/// Intersection form on the classes F_i = pi^* E_i / (1 + eps_i).
/// A split preimage F' + F'' enters as a single class.
inline IntMatrix f_lattice(const CanResData& d) {
    const auto recs = curve_records(d);
    const auto n = static_cast<std::size_t>(d.n());
    IntMatrix L(n, n);
    for (int i = 0; i < d.n(); ++i)
        for (int j = 0; j < d.n(); ++j)
            L(i, j) = i == j ? recs[i].F_sq : (2 - d.eps[i] - d.eps[j]) * d.E_dot(i, j);
    return L;
}

/// The same form, refusing inputs where merging the halves of a split curve changes the answer.
inline IntMatrix oracle_lattice(const CanResData& d) {
    const auto recs = curve_records(d);
    for (int i = 0; i < d.n(); ++i)
        if (recs[i].split != Split::No && recs[i].gamma > 0)
            throw SplitAmbiguity("F_" + std::to_string(i + 1) + " may split into two curves meeting each other");
    return f_lattice(d);
}

/// K . F_i from adjunction on each component.
inline IntVector canonical_pairings(const CanResData& d) {
    IntVector k;
    for (const auto& r : curve_records(d)) k.push_back(2 * r.pa - 2 - r.F_sq);
    return k;
}

struct ExcCycle {
    IntVector coeffs;
    std::int64_t self_intersection = 0;
    std::int64_t pa = 0;
    std::optional<int> witness;
};

/// Arithmetic genus 1 + (C^2 + K.C) / 2 of a cycle.
inline std::int64_t cycle_genus(const IntMatrix& lattice, const IntVector& K, const IntVector& c) {
    std::int64_t kc = 0;
    for (std::size_t i = 0; i < c.size(); ++i) kc += K[i] * c[i];
    return 1 + (pairing(lattice, c, c) + kc) / 2;
}

/// The pullback of the fiber of the first blowup, F = sum m_1i (1 + eps_i) F_i.
inline ExcCycle fiber_cycle(const CanResData& d) {
    const auto L = f_lattice(d);
    ExcCycle f;
    for (int i = 0; i < d.n(); ++i) f.coeffs.push_back(d.mats.M(0, i) * (1 + d.eps[i]));
    f.self_intersection = pairing(L, f.coeffs, f.coeffs);
    f.pa = d.alpha[0] / 2 - 1;

    const IntVector dots = f.coeffs * L;
    if (f.self_intersection != -2 || dots[0] != -2 + d.eps[0])
        throw InternalDefect("fiber cycle has the wrong intersection numbers");
    for (int i = 1; i < d.n(); ++i)
        if (dots[i] != 0) throw InternalDefect("fiber cycle meets F_" + std::to_string(i + 1));
    if (cycle_genus(L, canonical_pairings(d), f.coeffs) != f.pa)
        throw InternalDefect("fiber cycle genus disagrees with adjunction");
    return f;
}

/// Laufer's algorithm: start from the reduced exceptional cycle and add any F_j with Z . F_j > 0.
/// `from_top` scans candidates from the highest index down.
inline IntVector fundamental_cycle_inductive(const IntMatrix& lattice, bool from_top = false) {
    const int n = static_cast<int>(lattice.rows());
    IntVector z(static_cast<std::size_t>(n), 1);
    for (long step = 0;; ++step) {
        if (step > 1000000) throw Error("intersection form is not negative definite");
        const IntVector dots = z * lattice;
        int pick = -1;
        for (int k = 0; k < n; ++k) {
            int j = from_top ? n - 1 - k : k;
            if (dots[j] > 0) {
                pick = j;
                break;
            }
        }
        if (pick < 0) return z;
        ++z[pick];
    }
}

/// The point q_j of order one over q_1 that makes Z differ from F, if there is one.
inline std::optional<int> gap_witness(const CanResData& d) {
    std::optional<int> found;
    for (int j = 1; j < d.n(); ++j) {
        if (d.eps[j] != 0 || parent(d.digraph(), j) != 0) continue;
        bool even = true;
        for (int i = 0; i < d.n() && even; ++i)
            if (d.eps[i] == 0) even = (d.mats.M(0, i) + d.mats.M(j, i)) % 2 == 0;
        if (!even) continue;
        if (found) throw InternalDefect("two points satisfy the parity condition for the fundamental cycle");
        found = j;
    }
    return found;
}

/// Fundamental cycle from the multiplicity matrix; equals F unless a gap witness exists.
inline ExcCycle fundamental_cycle_explicit(const CanResData& d) {
    const auto w = gap_witness(d);
    if (!w) return fiber_cycle(d);
    const auto L = f_lattice(d);
    ExcCycle z;
    z.witness = w;
    for (int i = 0; i < d.n(); ++i) z.coeffs.push_back((1 + d.eps[i]) * (d.mats.M(0, i) + d.mats.M(*w, i)) / 2);
    z.self_intersection = pairing(L, z.coeffs, z.coeffs);
    if (z.self_intersection != -1) throw InternalDefect("fundamental cycle with a gap must have Z^2 = -1");
    const std::int64_t num = d.weighted.alpha_tilde[0] + d.weighted.alpha_tilde[*w] - 2;
    if (num % 4) throw InternalDefect("alpha~_1 + alpha~_j is not 2 mod 4 at a gap");
    z.pa = num / 4;
    if (cycle_genus(L, canonical_pairings(d), z.coeffs) != z.pa)
        throw InternalDefect("fundamental cycle genus disagrees with adjunction");
    return z;
}

/// Fundamental cycle, cross-checked against Laufer's algorithm when the lattice is unambiguous.
inline ExcCycle fundamental_cycle(const CanResData& d) {
    ExcCycle z = fundamental_cycle_explicit(d);
    IntMatrix L;
    try {
        L = oracle_lattice(d);
    } catch (const SplitAmbiguity&) {
        return z;
    }
    if (fundamental_cycle_inductive(L) != z.coeffs || fundamental_cycle_inductive(L, true) != z.coeffs)
        throw InternalDefect("explicit fundamental cycle differs from Laufer's algorithm");
    return z;
}

/// p_a(F) as a sum over the exceptional curves: (1/2) sum m_1i (gamma_i + (eps_i - 2) E_i^2 - 4).
inline std::int64_t fiber_genus_sum(const CanResData& d) {
    std::int64_t s = 0;
    for (int i = 0; i < d.n(); ++i) s += d.mats.M(0, i) * (d.gamma[i] + (d.eps[i] - 2) * d.E_sq(i) - 4);
    return s / 2;
}

}  // namespace resdouble
