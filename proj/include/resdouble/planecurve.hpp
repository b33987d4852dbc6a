#pragma once

// Embedded resolution of a plane curve germ at the origin by point blowups, carried on until the
// total branch locus (proper transform plus the odd exceptional curves) is smooth.

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "resdouble/error.hpp"
#include "resdouble/poly.hpp"
#include "resdouble/weighted.hpp"

namespace resdouble {

namespace detail {

inline UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw InternalDefect("inexact polynomial division");
    return q;
}

/// True if f, primitive as a polynomial in y over Q[x], has no repeated factor.
inline bool primitive_is_squarefree(const BiPoly& f) {
    const int dy = f.degree_y();
    if (dy <= 0) return true;
    const auto lc = f.coeffs_in_y().back();
    // The discriminant in y has degree at most (2 dy - 1) deg_x f; one of this many sample
    // points avoids both its roots and those of the leading coefficient unless it vanishes.
    const int samples = (2 * dy - 1) * std::max(0, f.degree_x()) + std::max(0, lc.degree()) + 1;
    for (int k = 0; k < samples; ++k) {
        Rational x0 = (k % 2 ? 1 : -1) * ((k + 1) / 2);
        if (lc(x0) == 0) continue;
        UniPoly s = f.at_x(x0);
        if (gcd(s, s.derivative()).degree() == 0) return true;
    }
    return false;
}

}  // namespace detail

/// Validates a germ for resolution and returns its multiplicity at the origin.
inline int germ_check(const BiPoly& f) {
    if (f.is_zero()) throw GermError("the zero polynomial does not define a curve");
    const int m = f.order();
    if (m == 0) throw GermError("the curve does not pass through the origin");
    if (m == 1) throw GermError("the origin is a smooth point of the curve");

    auto cy = f.coeffs_in_y();
    UniPoly content;
    for (const auto& c : cy)
        if (!c.is_zero()) content = content.is_zero() ? c.monic() : gcd(content, c);
    if (content.degree() > 0 && gcd(content, content.derivative()).degree() > 0)
        throw GermError("the polynomial has a repeated factor");
    BiPoly::Terms t;
    for (std::size_t b = 0; b < cy.size(); ++b) {
        const auto q = cy[b].is_zero() ? UniPoly() : detail::exact_div(cy[b], content);
        for (int a = 0; a <= q.degree(); ++a) t[{a, static_cast<int>(b)}] = q.coeff(a);
    }
    if (!detail::primitive_is_squarefree(BiPoly(std::move(t))))
        throw GermError("the polynomial has a repeated factor");
    return m;
}

/// A rational point of the exceptional configuration tracked through the resolution.
/// `germ` is the proper transform in local coordinates (u, v) centred at the point; the exceptional
/// curves through it are the axes {u = 0} (`curve_u`) and {v = 0} (`curve_v`).
struct ChartGerm {
    BiPoly germ;
    std::optional<int> curve_u;
    std::optional<int> curve_v;
    int seq = 0;

    std::vector<int> curves() const {
        std::vector<int> c;
        if (curve_u) c.push_back(*curve_u);
        if (curve_v) c.push_back(*curve_v);
        std::sort(c.begin(), c.end());
        return c;
    }
    /// Local intersection number of the proper transform with the given exceptional curve.
    int meet(int curve) const {
        if (curve_u == curve) return std::max(0, germ.restrict_x0().order());
        if (curve_v == curve) return std::max(0, germ.restrict_y0().order());
        return 0;
    }
    bool on_btilde() const { return germ.order() > 0; }
};

/// Galois-conjugate points on one exceptional curve, roots of `factor` in the chart coordinate.
struct ConjugateCluster {
    int curve = 0;
    UniPoly factor;
    int mult = 1;
    bool singular = false;
};

struct ResolutionState {
    EnriquesDigraph digraph;
    IntVector alpha_tilde, mu, eps;
    std::vector<ChartGerm> points;
    std::vector<ConjugateCluster> clusters;
    int next_seq = 1;
};

inline ResolutionState initial_state(const BiPoly& f) {
    germ_check(f);
    ResolutionState s;
    s.points.push_back({f, std::nullopt, std::nullopt, 0});
    return s;
}

/// Multiplicity of the total branch locus at a tracked point.
inline int branch_multiplicity(const ResolutionState& s, const ChartGerm& p) {
    int m = std::max(0, p.germ.order());
    for (int c : p.curves()) m += static_cast<int>(s.eps[c]);
    return m;
}

/// Indices into `s.points` that still have to be blown up, in blowup order.
/// Points with the smallest intersection of the proper transform with an exceptional curve go first,
/// then points on more curves, then lower curve indices, then chart and coordinate order.
inline std::vector<std::size_t> singular_centers(const ResolutionState& s) {
    for (const auto& c : s.clusters)
        if (c.singular || s.eps[c.curve] == 1) throw IrrationalCenter(c.factor.str('v'), c.curve);
    using Key = std::tuple<int, int, std::vector<int>, int>;
    std::vector<std::pair<Key, std::size_t>> keyed;
    for (std::size_t k = 0; k < s.points.size(); ++k) {
        const auto& p = s.points[k];
        if (branch_multiplicity(s, p) < 2) continue;
        const auto curves = p.curves();
        int least = 0;
        for (std::size_t i = 0; i < curves.size(); ++i)
            least = i == 0 ? p.meet(curves[i]) : std::min(least, p.meet(curves[i]));
        keyed.push_back({Key{least, -static_cast<int>(curves.size()), curves, p.seq}, k});
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<std::size_t> out;
    for (const auto& kv : keyed) out.push_back(kv.second);
    return out;
}

/// Blows up the tracked point `center`; the new exceptional curve gets the next index.
inline ResolutionState blow_up(const ResolutionState& s, std::size_t center) {
    const ChartGerm p = s.points.at(center);
    const int k = s.digraph.n;
    const int m = std::max(0, p.germ.order());

    ResolutionState r = s;
    r.points.erase(r.points.begin() + static_cast<std::ptrdiff_t>(center));
    r.digraph.n = k + 1;
    long mu = m;
    for (int c : p.curves()) {
        r.digraph.prox.insert({k, c});
        mu += s.eps[c];
    }
    r.alpha_tilde.push_back(m);
    r.mu.push_back(mu);
    r.eps.push_back(mu % 2);

    // chart 1: x = u, y = u v, new curve {u = 0}; chart 2: x = u v, y = v, new curve {v = 0}
    BiPoly::Terms t1, t2;
    for (const auto& [e, a] : p.germ.terms()) {
        t1[{e.first + e.second - m, e.second}] = a;
        t2[{e.first, e.first + e.second - m}] = a;
    }
    const BiPoly g1(std::move(t1)), g2(std::move(t2));

    const UniPoly on_new = g1.restrict_x0();
    const UniPoly du = g1.derivative_x().restrict_x0();
    bool origin_used = false;
    for (const auto& [h, mult] : squarefree_decomposition(on_new)) {
        UniPoly rest = h;
        for (const auto& c : rational_roots(h)) {
            rest = detail::exact_div(rest, UniPoly({-c, 1}));
            ChartGerm q{g1.shift_y(c), k, std::nullopt, r.next_seq++};
            if (c == 0) {
                q.curve_v = p.curve_v;
                origin_used = true;
            }
            r.points.push_back(std::move(q));
        }
        if (rest.degree() > 0) {
            bool singular = mult >= 2 && gcd(rest, du).degree() > 0;
            r.clusters.push_back({k, rest, mult, singular});
        }
    }
    if (p.curve_v && !origin_used) r.points.push_back({g1, k, p.curve_v, r.next_seq++});
    if (g2.order() > 0 || p.curve_u) r.points.push_back({g2, p.curve_u, k, r.next_seq++});
    return r;
}

inline int default_blowup_cap() {
    if (const char* env = std::getenv("RESDOUBLE_MAX_BLOWUPS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
    }
    return 64;
}

/// Points where the proper transform meets the exceptional curves, and crossings of two curves.
inline std::vector<GammaPoint> gamma_points(const ResolutionState& s) {
    std::vector<GammaPoint> out;
    for (const auto& p : s.points) {
        GammaPoint g;
        g.on = p.curves();
        g.meets_btilde = p.on_btilde();
        for (int c : g.on) g.mult.push_back(p.meet(c));
        if (g.meets_btilde || g.on.size() == 2) out.push_back(std::move(g));
    }
    for (const auto& c : s.clusters) out.push_back({{c.curve}, true, {c.mult}, c.factor.degree()});
    std::sort(out.begin(), out.end(), [](const GammaPoint& a, const GammaPoint& b) {
        return std::tie(a.on, a.mult, a.conj_deg, a.meets_btilde) < std::tie(b.on, b.mult, b.conj_deg, b.meets_btilde);
    });
    return out;
}

struct ResolutionTrace {
    WeightedDigraph weighted;
    IntVector mu, eps;
};

/// Resolves the germ f = 0 at the origin until the branch locus of the double cover is smooth.
inline ResolutionTrace canonical_resolution_trace(const BiPoly& f, int max_blowups = default_blowup_cap()) {
    ResolutionState s = initial_state(f);
    for (;;) {
        const auto centers = singular_centers(s);
        if (centers.empty()) break;
        if (s.digraph.n >= max_blowups)
            throw BlowupCapExceeded("resolution needs more than " + std::to_string(max_blowups) + " blowups");
        s = blow_up(s, centers.front());
    }
    ResolutionTrace t;
    t.weighted.digraph = s.digraph;
    t.weighted.alpha_tilde = s.alpha_tilde;
    t.weighted.gamma = gamma_points(s);
    t.mu = s.mu;
    t.eps = s.eps;
    return t;
}

}  // namespace resdouble
