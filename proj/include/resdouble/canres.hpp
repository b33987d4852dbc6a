#pragma once

// Multiplicity vectors of a canonical resolution and the numerical data of the exceptional curves
// of the double cover.

#include <string>
#include <vector>

#include "resdouble/error.hpp"
#include "resdouble/lattice.hpp"
#include "resdouble/weighted.hpp"

namespace resdouble {

struct MuEps {
    IntVector mu, eps;
};

/// mu_i = alpha~_i + sum of eps_j over the curves E_j through q_i, eps_i = mu_i mod 2.
inline MuEps derive_mu_eps(const WeightedDigraph& w) {
    MuEps r;
    for (int i = 0; i < w.n(); ++i) {
        std::int64_t m = w.alpha_tilde.at(i);
        for (int j : w.digraph.targets(i)) m += r.eps[j];
        r.mu.push_back(m);
        r.eps.push_back(((m % 2) + 2) % 2);
    }
    return r;
}

/// Inverse of derive_mu_eps: recovers alpha~ from mu.
inline IntVector alpha_tilde_from_mu(const EnriquesDigraph& d, const IntVector& mu) {
    IntVector a;
    for (int i = 0; i < d.n; ++i) {
        std::int64_t v = mu.at(i);
        for (int j : d.targets(i)) v -= ((mu.at(j) % 2) + 2) % 2;
        a.push_back(v);
    }
    return a;
}

struct CanResData {
    WeightedDigraph weighted;
    ProximityMatrices mats;
    IntVector mu, eps;
    IntVector alpha, beta, beta_tilde, gamma_tilde, gamma;

    int n() const { return weighted.n(); }
    const EnriquesDigraph& digraph() const { return weighted.digraph; }
    std::int64_t E_sq(int i) const { return mats.S(i, i); }
    std::int64_t E_dot(int i, int j) const { return mats.S(i, j); }
};

namespace detail {

inline CanResData compute_vectors(const WeightedDigraph& w) {
    require_valid(w.digraph);
    if (static_cast<int>(w.alpha_tilde.size()) != w.n())
        throw InvalidDigraph("alpha_tilde has " + std::to_string(w.alpha_tilde.size()) + " entries for " +
                             std::to_string(w.n()) + " points");
    CanResData r;
    r.weighted = w;
    r.mats = matrices(w.digraph);
    auto me = derive_mu_eps(w);
    r.mu = me.mu;
    r.eps = me.eps;
    r.beta_tilde = w.alpha_tilde * r.mats.M;
    r.gamma_tilde = w.alpha_tilde * r.mats.N.transpose();
    for (int i = 0; i < w.n(); ++i) {
        r.alpha.push_back(r.mu[i] - r.eps[i]);
        r.beta.push_back(r.beta_tilde[i] - r.eps[i]);
        std::int64_t g = 0;
        if (r.eps[i] == 0) {
            g = r.gamma_tilde[i];
            for (int j = 0; j < w.n(); ++j)
                if (j != i) g += r.eps[j] * r.mats.S(i, j);
        }
        r.gamma.push_back(g);
    }
    if (!(r.beta == r.alpha * r.mats.M)) throw InternalDefect("beta differs from alpha M");
    for (int i = 0; i < w.n(); ++i)
        if (r.alpha[i] % 2 || r.beta[i] % 2 || r.gamma[i] % 2)
            throw ParityViolation("alpha, beta, gamma must be even at q" + std::to_string(i + 1));
    return r;
}

}  // namespace detail

/// Reasons why the weighted digraph is not a complete canonical resolution; empty if it is.
inline std::vector<std::string> check_complete(const WeightedDigraph& w) {
    std::vector<std::string> out;
    for (const auto& v : validate_digraph(w.digraph)) out.push_back(v.message);
    if (!out.empty()) return out;
    if (static_cast<int>(w.alpha_tilde.size()) != w.n()) {
        out.push_back("alpha_tilde must have one entry per point");
        return out;
    }
    const auto mats = matrices(w.digraph);
    const auto me = derive_mu_eps(w);
    const IntVector gt = w.alpha_tilde * mats.N.transpose();
    auto q = [](int i) { return "q" + std::to_string(i + 1); };
    auto E = [](int i) { return "E_" + std::to_string(i + 1); };
    for (int i = 0; i < w.n(); ++i) {
        if (w.alpha_tilde[i] < 0) out.push_back("negative multiplicity at " + q(i));
        if (gt[i] < 0) out.push_back("proximity inequality fails at " + q(i));
        if (me.mu[i] < 2) out.push_back("branch locus is smooth at the blown-up point " + q(i));
        if (me.eps[i] == 1 && gt[i] > 0) out.push_back("proper transform meets the branched curve " + E(i));
        for (int j = i + 1; j < w.n(); ++j)
            if (me.eps[i] == 1 && me.eps[j] == 1 && mats.S(i, j) != 0)
                out.push_back("branched curves " + E(i) + " and " + E(j) + " meet");
    }
    if (w.gamma) {
        IntVector sum(static_cast<std::size_t>(w.n()));
        for (const auto& g : *w.gamma) {
            bool ok = !g.on.empty() && g.on.size() <= 2 && g.mult.size() == g.on.size() && g.conj_deg >= 1;
            for (int c : g.on) ok = ok && c >= 0 && c < w.n();
            if (!ok) {
                out.push_back("malformed gamma point");
                continue;
            }
            if (!g.meets_btilde) continue;
            for (std::size_t k = 0; k < g.on.size(); ++k) sum[g.on[k]] += g.mult[k] * g.conj_deg;
            if (g.on.size() == 2) {
                const int a = g.mult[0], b = g.mult[1];
                if ((a == 0) != (b == 0) || (a > 1 && b > 1))
                    out.push_back("proper transform meets " + E(g.on[0]) + " and " + E(g.on[1]) +
                                  " in an impossible way at their crossing");
            }
        }
        for (int i = 0; i < w.n(); ++i)
            if (sum[i] != gt[i])
                out.push_back("gamma points on " + E(i) + " add up to " + std::to_string(sum[i]) + ", expected " +
                              std::to_string(gt[i]));
    }
    return out;
}

/// All multiplicity vectors; throws if the input is not a complete canonical resolution.
inline CanResData derive_vectors(const WeightedDigraph& w) {
    auto diag = check_complete(w);
    if (!diag.empty()) {
        std::string msg = diag.front();
        for (std::size_t k = 1; k < diag.size(); ++k) msg += "; " + diag[k];
        throw CompletenessViolation(msg);
    }
    return detail::compute_vectors(w);
}

enum class Split { No, Yes, Undetermined };

inline const char* to_string(Split s) {
    switch (s) {
        case Split::No: return "no";
        case Split::Yes: return "yes";
        default: return "undetermined";
    }
}

/// Numerical data of the curve F_i over E_i in the double cover.
/// F_sq and pa refer to the whole preimage; for a split preimage F' + F'' the halves have
/// self-intersection half_sq each and meet in halves_meet points.
struct CurveRecord {
    std::int64_t E_sq = 0;
    std::int64_t eps = 0;
    std::int64_t gamma = 0;
    Split split = Split::No;
    std::int64_t F_sq = 0;
    std::int64_t half_sq = 0;
    std::int64_t halves_meet = 0;
    std::int64_t pa = 0;
};

inline Split split_status(const CanResData& d, int i) {
    if (d.eps[i] == 1) return Split::No;
    for (int j = 0; j < d.n(); ++j)
        if (j != i && d.eps[j] == 1 && d.E_dot(i, j) != 0) return Split::No;
    if (d.gamma[i] == 0) return Split::Yes;
    if (d.weighted.gamma) {
        for (const auto& g : *d.weighted.gamma)
            for (std::size_t k = 0; k < g.on.size(); ++k)
                if (g.meets_btilde && g.on[k] == i && g.mult[k] % 2) return Split::No;
        return Split::Yes;
    }
    if (d.gamma_tilde[i] % 2) return Split::No;
    return Split::Undetermined;
}

inline std::vector<CurveRecord> curve_records(const CanResData& d) {
    std::vector<CurveRecord> out;
    for (int i = 0; i < d.n(); ++i) {
        CurveRecord c;
        c.E_sq = d.E_sq(i);
        c.eps = d.eps[i];
        c.gamma = d.gamma[i];
        const std::int64_t den = (1 + c.eps) * (1 + c.eps);
        if ((2 * c.E_sq) % den) throw ParityViolation("branched curve E_" + std::to_string(i + 1) + " has odd self-intersection");
        c.F_sq = 2 * c.E_sq / den;
        c.pa = c.gamma / 2 + c.eps - 1;
        c.split = split_status(d, i);
        if (c.split == Split::Yes) {
            c.half_sq = c.E_sq - c.gamma / 2;
            c.halves_meet = c.gamma / 2;
        }
        out.push_back(c);
    }
    return out;
}

struct DivisorD {
    IntVector coeffs;    // D = sum coeffs_i E_i^*
    IntVector pairings;  // D . E_k
};

/// D = sum (alpha_i / 2 - 1) E_i^*, the divisor with K_X = pi^*(K_Y + D) on the double cover.
inline DivisorD D_divisor(const CanResData& d) {
    DivisorD r;
    for (auto a : d.alpha) r.coeffs.push_back(a / 2 - 1);
    // E_i^* . E_k = -n_ki
    const IntVector nd = r.coeffs * d.mats.N.transpose();
    for (auto v : nd) r.pairings.push_back(-v);
    return r;
}

}  // namespace resdouble
