#pragma once

// Conditions imposed by the singularity on canonical and pluricanonical systems, and the fixed
// components those systems acquire on the exceptional curves.

#include <map>
#include <string>
#include <vector>

#include "resdouble/classify.hpp"

namespace resdouble {

/// c = sum alpha_i (alpha_i - 2) / 8, the number of adjoint conditions.
inline std::int64_t canonical_conditions(const CanResData& d) {
    std::int64_t s = 0;
    for (auto a : d.alpha) s += a * (a - 2);
    if (s % 8) throw ParityViolation("sum of alpha_i (alpha_i - 2) is not divisible by 8");
    return s / 8;
}

/// Conditions imposed on the m-canonical system, for h large.
inline std::int64_t pluricanonical_conditions(const CanResData& d, std::int64_t m, std::int64_t defective_count) {
    std::int64_t s = 0;
    for (auto a : d.alpha) s += 2 * (m * m - m) * (a - 2) * (a - 2) + a * a - 2 * a;
    if (s % 8) throw ParityViolation("pluricanonical sum is not divisible by 8");
    return s / 8 - defective_count * m * (m - 1) / 2;
}

/// Stack of a defective point: q_j, its successor, the next defective point of the stack, ...
inline std::vector<int> defective_stack(const CanResData& d, const std::map<int, int>& levels, int j) {
    const auto& g = d.digraph();
    std::vector<int> chain{j};
    int cur = j;
    for (int lvl = levels.at(j); lvl > 1; --lvl) {
        const int mid = defective_successor(d, cur);
        int next = -1;
        for (const auto& [k, l] : levels)
            if (l == lvl - 1 && d.alpha[k] == d.alpha[cur] && parent(g, k) == mid) next = k;
        if (next < 0) throw InternalDefect("broken stack of defective points at q" + std::to_string(j + 1));
        chain.push_back(mid);
        chain.push_back(next);
        cur = next;
    }
    return chain;
}

struct FixedPart {
    IntVector E_bar;    // fixed part of the canonical system, coefficients of E_i
    IntVector E_tilde;  // sum of E_j over defective points
    /// Blowup order in which every stack of defective points is consecutive: entry k is the old
    /// index of the point that becomes q_{k+1}.
    std::vector<int> order;
};

/// Relabelling that makes each stack q_j <^1 q_{j+1} <^1 q_{j+2} of defective points consecutive.
inline std::vector<int> stack_order(const CanResData& d, const std::map<int, int>& levels) {
    std::vector<char> inner(static_cast<std::size_t>(d.n()), 0), placed(inner);
    std::map<int, std::vector<int>> stacks;
    for (const auto& [j, l] : levels) {
        auto s = defective_stack(d, levels, j);
        for (std::size_t k = 1; k < s.size(); ++k) inner[s[k]] = 1;
        stacks[j] = std::move(s);
    }
    std::vector<int> order;
    for (int i = 0; i < d.n(); ++i) {
        if (placed[i] || inner[i]) continue;
        const auto it = stacks.find(i);
        for (int k : it == stacks.end() ? std::vector<int>{i} : it->second)
            if (!placed[k]) {
                placed[k] = 1;
                order.push_back(k);
            }
    }
    for (int i = 0; i < d.n(); ++i)
        if (!placed[i]) order.push_back(i);

    std::vector<int> pos(static_cast<std::size_t>(d.n()));
    for (int k = 0; k < d.n(); ++k) pos[order[k]] = k;
    for (const auto& [j, s] : stacks)
        for (std::size_t k = 1; k < s.size(); ++k)
            if (pos[s[k]] != pos[j] + static_cast<int>(k))
                throw InternalDefect("stack of q" + std::to_string(j + 1) + " is not consecutive");
    for (const auto& [a, b] : d.digraph().prox)
        if (pos[a] <= pos[b]) throw InternalDefect("stack order is not a blowup order");
    return order;
}

inline FixedPart fixed_part_canonical(const CanResData& d, const std::map<int, int>& levels) {
    FixedPart f;
    f.E_bar.assign(static_cast<std::size_t>(d.n()), 0);
    f.E_tilde.assign(static_cast<std::size_t>(d.n()), 0);
    for (const auto& [j, l] : levels) {
        f.E_tilde[j] = 1;
        const auto stack = defective_stack(d, levels, j);
        for (int r = 0; r < l; ++r) f.E_bar[stack[r]] += 1;
    }
    f.order = stack_order(d, levels);

    const auto D = D_divisor(d);
    const IntVector ebar_dots = f.E_bar * d.mats.S;
    for (int i = 0; i < d.n(); ++i)
        if (D.pairings[i] + ebar_dots[i] > 0)
            throw InternalDefect("D + E_bar meets E_" + std::to_string(i + 1) + " positively");
    return f;
}

/// Fixed part of |m K_Y + mbar B/2| on the exceptional curves, mbar in {m, m - 1}.
inline IntVector fixed_part_pluricanonical(const FixedPart& f, std::int64_t mbar) {
    IntVector out(f.E_bar.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = (mbar / 2) * f.E_tilde[i] + (mbar % 2) * f.E_bar[i];
    return out;
}

struct PluriEntry {
    std::int64_t conditions = 0;
    IntVector fixed_m, fixed_m_minus_1;
};

struct AdjointReport {
    std::int64_t c = 0;
    std::int64_t d = 0;
    FixedPart fixed;
    std::map<int, PluriEntry> pluri;
};

inline AdjointReport adjoint_report(const CanResData& data, const std::map<int, int>& levels, int pluri_max) {
    AdjointReport r;
    r.c = canonical_conditions(data);
    r.d = static_cast<std::int64_t>(levels.size());
    r.fixed = fixed_part_canonical(data, levels);
    for (int m = 1; m <= pluri_max; ++m)
        r.pluri[m] = {pluricanonical_conditions(data, m, r.d), fixed_part_pluricanonical(r.fixed, m),
                      fixed_part_pluricanonical(r.fixed, m - 1)};
    return r;
}

}  // namespace resdouble
