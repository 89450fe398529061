#pragma once

// Test-only reference computations. Nothing here goes through the library's
// bead/abacus or character machinery; each routine works directly from cells,
// monomials in x-variables, or counting recurrences.

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "rsf/partition.hpp"
#include "rsf/polyring.hpp"

namespace oracle {

using rsf::Partition;

using Cell = std::pair<int, int>;  // (row, column), 0-based

inline std::set<Cell> cells(const Partition& p) {
    std::set<Cell> out;
    for (int i = 0; i < p.length(); ++i)
        for (int j = 0; j < p.row(i); ++j)
            out.insert({i, j});
    return out;
}

inline Partition transpose_cells(const Partition& p) {
    std::map<int, int> column_length;
    for (const auto& [i, j] : cells(p))
        ++column_length[j];
    std::vector<int> parts;
    for (const auto& [j, len] : column_length)
        parts.push_back(len);
    return Partition(parts);
}

/// Is the skew diagram outer/inner a border strip (connected, no 2x2 square)?
/// Returns the height (rows - 1) or -1.
inline int strip_height(const Partition& outer, const Partition& inner) {
    std::set<Cell> skew;
    for (const auto& c : cells(outer))
        if (c.first >= inner.length() || c.second >= inner.row(c.first))
            skew.insert(c);
    if (skew.empty())
        return -1;
    for (const auto& [i, j] : skew)
        if (skew.count({i + 1, j}) && skew.count({i, j + 1}) && skew.count({i + 1, j + 1}))
            return -1;
    std::set<Cell> seen{*skew.begin()};
    std::vector<Cell> stack{*skew.begin()};
    while (!stack.empty()) {
        auto [i, j] = stack.back();
        stack.pop_back();
        for (Cell n : {Cell{i + 1, j}, Cell{i - 1, j}, Cell{i, j + 1}, Cell{i, j - 1}})
            if (skew.count(n) && seen.insert(n).second)
                stack.push_back(n);
    }
    if (seen.size() != skew.size())
        return -1;
    std::set<int> rows;
    for (const auto& c : skew)
        rows.insert(c.first);
    return static_cast<int>(rows.size()) - 1;
}

/// All (result, height) for removing a `len`-cell border strip, by scanning
/// every subdiagram of the right size.
inline std::vector<std::pair<Partition, int>> strip_removals(const Partition& lambda, int len) {
    std::vector<std::pair<Partition, int>> out;
    if (len > lambda.size())
        return out;
    for (const auto& mu : rsf::partitions_of(lambda.size() - len)) {
        if (!lambda.contains(mu))
            continue;
        int h = strip_height(lambda, mu);
        if (h >= 0)
            out.emplace_back(mu, h);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// All (result, height) for adding a `len`-cell border strip, by scanning
/// every partition of the larger size.
inline std::vector<std::pair<Partition, int>> strip_removals_inverse(const Partition& lambda, int len) {
    std::vector<std::pair<Partition, int>> out;
    for (const auto& mu : rsf::partitions_of(lambda.size() + len))
        if (mu.contains(lambda))
            if (int h = strip_height(mu, lambda); h >= 0)
                out.emplace_back(mu, h);
    return out;
}

/// (-1)^(vertical dominoes) along one sequence of domino removals down to the 2-core.
inline int domino_sign(Partition lambda) {
    int sign = 1;
    for (auto removals = strip_removals(lambda, 2); !removals.empty(); removals = strip_removals(lambda, 2)) {
        if (removals.front().second == 1)
            sign = -sign;
        lambda = removals.front().first;
    }
    return sign;
}

/// Terminal shapes reachable by removing r-strips in every possible order.
inline std::set<std::vector<int>> all_r_cores_reached(const Partition& lambda, int r) {
    std::set<std::vector<int>> out;
    auto removals = strip_removals(lambda, r);
    if (removals.empty()) {
        out.insert(lambda.parts());
        return out;
    }
    for (const auto& [mu, h] : removals) {
        auto sub = all_r_cores_reached(mu, r);
        out.insert(sub.begin(), sub.end());
    }
    return out;
}

/// Coefficients of prod_{j>=1, r does not divide j} (1 - q^j)^{-copies}, by the
/// coin-change recurrence. r = 0 keeps every j.
inline std::vector<long long> coin_change_series(int max_n, int r = 0, int copies = 1) {
    std::vector<long long> p(static_cast<std::size_t>(max_n) + 1, 0);
    p[0] = 1;
    for (int c = 0; c < copies; ++c)
        for (int j = 1; j <= max_n; ++j) {
            if (r > 0 && j % r == 0)
                continue;
            for (int n = j; n <= max_n; ++n)
                p[static_cast<std::size_t>(n)] += p[static_cast<std::size_t>(n - j)];
        }
    return p;
}

/// Partitions of n produced by brute force: all multisets of parts, deduplicated.
inline std::set<std::vector<int>> brute_force_partitions(int n) {
    std::set<std::vector<int>> out;
    std::function<void(int, std::vector<int>)> rec = [&](int remaining, std::vector<int> parts) {
        if (remaining == 0) {
            std::sort(parts.rbegin(), parts.rend());
            out.insert(parts);
            return;
        }
        for (int x = 1; x <= remaining; ++x) {
            parts.push_back(x);
            rec(remaining - x, parts);
            parts.pop_back();
        }
    };
    rec(n, {});
    return out;
}

// ---- polynomials in finitely many x-variables ------------------------------

using XPoly = std::map<std::vector<int>, mpq_class>;

inline void add_to(XPoly& p, const std::vector<int>& exps, const mpq_class& c) {
    if (c == 0)
        return;
    auto& slot = p[exps];
    slot += c;
    if (slot == 0)
        p.erase(exps);
}

inline XPoly xmul(const XPoly& a, const XPoly& b) {
    XPoly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + eb[i];
            add_to(out, e, ca * cb);
        }
    return out;
}

inline XPoly xconst(int vars, const mpq_class& c) {
    XPoly out;
    add_to(out, std::vector<int>(static_cast<std::size_t>(vars), 0), c);
    return out;
}

inline XPoly power_sum(int j, int vars) {
    XPoly out;
    for (int i = 0; i < vars; ++i) {
        std::vector<int> e(static_cast<std::size_t>(vars), 0);
        e[static_cast<std::size_t>(i)] = j;
        add_to(out, e, 1);
    }
    return out;
}

/// Substitutes t_j = p_j(x) / j.
inline XPoly t_to_x(const rsf::TPolynomial& f, int vars) {
    XPoly out;
    for (const auto& [m, c] : f.terms()) {
        XPoly term = xconst(vars, c);
        for (const auto& [j, e] : m.powers()) {
            XPoly tj = power_sum(j, vars);
            for (auto& [ex, cx] : tj)
                cx /= j;
            for (int k = 0; k < e; ++k)
                term = xmul(term, tj);
        }
        for (const auto& [ex, cx] : term)
            add_to(out, ex, cx);
    }
    return out;
}

/// det(x_i^{exps[j]}) expanded over permutations.
inline XPoly alternant(const std::vector<int>& exps) {
    const int vars = static_cast<int>(exps.size());
    std::vector<int> perm(static_cast<std::size_t>(vars));
    std::iota(perm.begin(), perm.end(), 0);
    XPoly out;
    do {
        int inversions = 0;
        for (int a = 0; a < vars; ++a)
            for (int b = a + 1; b < vars; ++b)
                if (perm[static_cast<std::size_t>(a)] > perm[static_cast<std::size_t>(b)])
                    ++inversions;
        std::vector<int> e(static_cast<std::size_t>(vars));
        for (int i = 0; i < vars; ++i)
            e[static_cast<std::size_t>(i)] = exps[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
        add_to(out, e, inversions % 2 ? -1 : 1);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

/// Checks a_delta * f(t(x)) == a_{lambda + delta} in `vars` variables, i.e. that
/// f is the determinant-ratio Schur function of lambda.
inline bool matches_determinant_ratio(const rsf::TPolynomial& f, const Partition& lambda, int vars) {
    std::vector<int> delta(static_cast<std::size_t>(vars)), shifted(static_cast<std::size_t>(vars));
    for (int j = 0; j < vars; ++j) {
        delta[static_cast<std::size_t>(j)] = vars - 1 - j;
        shifted[static_cast<std::size_t>(j)] = lambda.row(j) + vars - 1 - j;
    }
    return xmul(alternant(delta), t_to_x(f, vars)) == alternant(shifted);
}

/// Schur polynomial in `vars` variables by enumerating semistandard tableaux.
inline XPoly schur_by_tableaux(const Partition& lambda, int vars) {
    std::vector<Cell> order;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda.row(i); ++j)
            order.push_back({i, j});
    std::map<Cell, int> filling;
    XPoly out;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == order.size()) {
            std::vector<int> e(static_cast<std::size_t>(vars), 0);
            for (const auto& [cell, v] : filling)
                ++e[static_cast<std::size_t>(v)];
            add_to(out, e, 1);
            return;
        }
        auto [i, j] = order[k];
        int lo = 0;
        if (j > 0)
            lo = std::max(lo, filling[{i, j - 1}]);
        if (i > 0)
            lo = std::max(lo, filling[{i - 1, j}] + 1);
        for (int v = lo; v < vars; ++v) {
            filling[{i, j}] = v;
            rec(k + 1);
        }
        filling.erase({i, j});
    };
    rec(0);
    return out;
}

}  // namespace oracle
