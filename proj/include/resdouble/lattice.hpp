#pragma once

// Proximity digraphs of infinitely near points and their lattice matrices.
// Points are 0-based here; JSON and DOT output shift to 1-based labels.

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "resdouble/error.hpp"
#include "resdouble/matrix.hpp"

namespace resdouble {

/// Arc (j, i) means q_j is proximate to q_i; always i < j.
using Arc = std::pair<int, int>;

struct EnriquesDigraph {
    int n = 0;
    std::set<Arc> prox;

    /// Points q_j is proximate to, ascending.
    std::vector<int> targets(int j) const {
        std::vector<int> out;
        for (auto it = prox.lower_bound({j, -1}); it != prox.end() && it->first == j; ++it)
            out.push_back(it->second);
        return out;
    }
    /// Points proximate to q_i, ascending.
    std::vector<int> sources(int i) const {
        std::vector<int> out;
        for (const auto& [j, k] : prox)
            if (k == i) out.push_back(j);
        return out;
    }
    bool proximate(int j, int i) const { return prox.count({j, i}) > 0; }

    friend bool operator==(const EnriquesDigraph&, const EnriquesDigraph&) = default;
};

struct Violation {
    enum class Kind { Range, OutDegree, Satellite, SharedPair, Disconnected };
    Kind kind;
    std::vector<int> points;
    std::string message;
};

inline std::vector<Violation> validate_digraph(const EnriquesDigraph& d) {
    std::vector<Violation> out;
    auto label = [](int k) { return "q" + std::to_string(k + 1); };
    if (d.n < 1) out.push_back({Violation::Kind::Range, {}, "digraph has no points"});
    for (const auto& [j, i] : d.prox)
        if (i < 0 || j >= d.n || i >= j)
            out.push_back({Violation::Kind::Range, {j, i},
                           "arc " + label(j) + " -> " + label(i) + " must point to an earlier point"});
    if (!out.empty()) return out;

    for (int j = 0; j < d.n; ++j) {
        auto t = d.targets(j);
        if (t.size() > 2)
            out.push_back({Violation::Kind::OutDegree, {j}, label(j) + " is proximate to more than two points"});
        if (t.size() == 2 && !d.proximate(t[1], t[0]))
            out.push_back({Violation::Kind::Satellite, {j, t[0], t[1]},
                           label(j) + " is proximate to " + label(t[0]) + " and " + label(t[1]) +
                               " which are not proximate to each other"});
        if (j > 0 && t.empty())
            out.push_back({Violation::Kind::Disconnected, {j}, label(j) + " is proximate to no point"});
    }
    for (int a = 0; a < d.n; ++a)
        for (int b = a + 1; b < d.n; ++b) {
            std::vector<int> shared;
            for (int i = b + 1; i < d.n; ++i)
                if (d.proximate(i, a) && d.proximate(i, b)) shared.push_back(i);
            if (shared.size() > 1) {
                shared.insert(shared.begin(), {a, b});
                out.push_back({Violation::Kind::SharedPair, shared,
                               "several points are proximate to both " + label(a) + " and " + label(b)});
            }
        }
    return out;
}

inline void require_valid(const EnriquesDigraph& d) {
    auto v = validate_digraph(d);
    if (!v.empty()) throw InvalidDigraph(v.front().message);
}

struct ProximityMatrices {
    IntMatrix Q, N, M, S;
};

/// Q, N = I - Q, M = N^{-1} and S = -N N^T.
/// M is built both as I + Q + ... + Q^{n-1} and column by column; the two must agree.
inline ProximityMatrices matrices(const EnriquesDigraph& d) {
    require_valid(d);
    const auto n = static_cast<std::size_t>(d.n);
    ProximityMatrices r;
    r.Q = IntMatrix(n, n);
    for (const auto& [j, i] : d.prox) r.Q(i, j) = 1;
    r.N = IntMatrix::identity(n) - r.Q;

    IntMatrix series = IntMatrix::identity(n), power = IntMatrix::identity(n);
    for (std::size_t k = 1; k < n; ++k) {
        power = power * r.Q;
        series = series + power;
    }

    r.M = IntMatrix(n, n);
    for (int j = 0; j < d.n; ++j) {
        for (int i : d.targets(j))
            for (int k = 0; k < j; ++k) r.M(k, j) += r.M(k, i);
        r.M(j, j) = 1;
    }
    if (!(series == r.M)) throw InternalDefect("power series and column rule give different M");
    if (!(r.N * r.M == IntMatrix::identity(n))) throw InternalDefect("M is not the inverse of N");

    r.S = -(r.N * r.N.transpose());
    return r;
}

/// Recovers the digraph from an intersection matrix S = -N N^T of exceptional curves.
inline EnriquesDigraph digraph_from_S(const IntMatrix& S) {
    const int n = static_cast<int>(S.rows());
    if (S.cols() != S.rows()) throw InvalidDigraph("intersection matrix is not square");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (S(i, j) != S(j, i)) throw InvalidDigraph("intersection matrix is not symmetric");

    // S = N D N^T with D = -I and N unipotent upper triangular; peel off the last column each step.
    IntMatrix rest = S;
    IntMatrix N = IntMatrix::identity(static_cast<std::size_t>(n));
    for (int k = n - 1; k >= 0; --k) {
        if (rest(k, k) != -1)
            throw InvalidDigraph("matrix is not the intersection matrix of a sequence of point blowups");
        for (int i = 0; i < k; ++i) N(i, k) = -rest(i, k);
        for (int i = 0; i <= k; ++i)
            for (int j = 0; j <= k; ++j) rest(i, j) += N(i, k) * N(j, k);
    }
    EnriquesDigraph d;
    d.n = n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (N(i, j) == -1)
                d.prox.insert({j, i});
            else if (N(i, j) != 0)
                throw InvalidDigraph("matrix does not come from a proximity relation");
        }
    require_valid(d);
    return d;
}

/// The point q_j lies on E_parent as a point of order one; -1 for the root.
inline int parent(const EnriquesDigraph& d, int j) {
    auto t = d.targets(j);
    return t.empty() ? -1 : t.back();
}

/// Order k with q_j >^k q_i, or nullopt if q_j is not infinitely near to q_i.
inline std::optional<int> infinitesimal_order(const EnriquesDigraph& d, int i, int j) {
    int k = 0;
    for (int p = j; p > i; p = parent(d, p)) {
        ++k;
        if (parent(d, p) == i) return k;
    }
    return std::nullopt;
}

/// Chains of points proximate to q_i, each starting at a point of order one over q_i.
inline std::vector<std::vector<int>> petals(const EnriquesDigraph& d, int i) {
    std::vector<std::vector<int>> out;
    const auto near = d.sources(i);
    for (int head : near) {
        if (parent(d, head) != i) continue;
        std::vector<int> chain{head};
        for (bool grew = true; grew;) {
            grew = false;
            for (int k : near)
                if (parent(d, k) == chain.back()) {
                    chain.push_back(k);
                    grew = true;
                    break;
                }
        }
        out.push_back(std::move(chain));
    }
    return out;
}

/// Random digraph of n blowups: each new point sits on a random exceptional curve and,
/// with probability p_satellite, at its intersection with another curve it currently meets.
template <class Rng>
EnriquesDigraph random_digraph(int n, double p_satellite, Rng& rng) {
    EnriquesDigraph d;
    d.n = n;
    std::vector<std::vector<char>> meets(n, std::vector<char>(n, 0));
    std::bernoulli_distribution satellite(p_satellite);
    for (int j = 1; j < n; ++j) {
        int i = std::uniform_int_distribution<int>(0, j - 1)(rng);
        d.prox.insert({j, i});
        std::vector<int> crossing;
        for (int k = 0; k < i; ++k)
            if (meets[i][k]) crossing.push_back(k);
        if (!crossing.empty() && satellite(rng)) {
            int k = crossing[std::uniform_int_distribution<std::size_t>(0, crossing.size() - 1)(rng)];
            d.prox.insert({j, k});
            meets[i][k] = meets[k][i] = 0;
            meets[j][k] = meets[k][j] = 1;
        }
        meets[j][i] = meets[i][j] = 1;
    }
    return d;
}

}  // namespace resdouble
