#pragma once

// Reference implementations used only by tests. They work on plain integer
// vectors with their own arithmetic and never call into the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

namespace oracle {

using Mul = std::function<int(int, int)>;

struct Group {
    int n;
    Mul mul;
    int e = 0;
};

inline Group cyclic(int n) {
    return {n, [n](int a, int b) { return (a + b) % n; }, 0};
}

// s^i r^j with index i*n + j; s^i r^j * s^k r^l = s^{i+k} r^{(-1)^k j + l}.
inline Group dihedral(int n) {
    return {2 * n,
            [n](int a, int b) {
                const int i = a / n, j = a % n, k = b / n, l = b % n;
                const int jj = k ? (n - j) % n : j;
                return ((i + k) % 2) * n + (jj + l) % n;
            },
            0};
}

// Index (a, b) -> a * |h| + b.
inline Group product(const Group& g, const Group& h) {
    return {g.n * h.n,
            [g, h](int x, int y) { return g.mul(x / h.n, y / h.n) * h.n + h.mul(x % h.n, y % h.n); }, 0};
}

inline int inverse(const Group& g, int x) {
    for (int y = 0; y < g.n; ++y)
        if (g.mul(x, y) == g.e)
            return y;
    return -1;
}

inline bool symmetric(const Group& g, const std::vector<int>& x) {
    for (int a : x)
        if (std::find(x.begin(), x.end(), inverse(g, a)) == x.end())
            return false;
    return true;
}

inline std::vector<int> counts(const Group& g, const std::vector<int>& s, const std::vector<int>& t) {
    std::vector<int> c(g.n, 0);
    for (int a : s)
        for (int b : t)
            ++c[g.mul(a, b)];
    return c;
}

// The definition: symmetric, identity-free, and every g in U has exactly one
// representation st while every other g has none.
inline bool factorable(const Group& g, const std::vector<int>& s, const std::vector<int>& t,
                       const std::vector<int>& u) {
    for (const auto* x : {&s, &t, &u}) {
        if (!symmetric(g, *x))
            return false;
        if (std::find(x->begin(), x->end(), g.e) != x->end())
            return false;
    }
    const auto c = counts(g, s, t);
    for (int x = 0; x < g.n; ++x) {
        const bool in_u = std::find(u.begin(), u.end(), x) != u.end();
        if (c[x] != (in_u ? 1 : 0))
            return false;
    }
    return true;
}

// A(X) as a dense matrix: a_ij = 1 iff g_i^{-1} g_j in X.
inline std::vector<std::vector<std::int64_t>> adjacency(const Group& g, const std::vector<int>& x) {
    std::vector<std::vector<std::int64_t>> a(g.n, std::vector<std::int64_t>(g.n, 0));
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j)
            a[i][j] = std::find(x.begin(), x.end(), g.mul(inverse(g, i), j)) != x.end();
    return a;
}

inline std::vector<std::vector<std::int64_t>> matmul(const std::vector<std::vector<std::int64_t>>& a,
                                                     const std::vector<std::vector<std::int64_t>>& b) {
    const std::size_t n = a.size();
    std::vector<std::vector<std::int64_t>> c(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (a[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    c[i][j] += a[i][k] * b[k][j];
    return c;
}

// Every subset of 0..n-1 as a sorted vector, by bitmask.
inline std::vector<std::vector<int>> all_subsets(int n) {
    std::vector<std::vector<int>> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> x;
        for (int k = 0; k < n; ++k)
            if (mask >> k & 1u)
                x.push_back(k);
        out.push_back(x);
    }
    return out;
}

// Symmetric identity-free subsets, enumerated by brute force over all subsets.
inline std::vector<std::vector<int>> symmetric_subsets(const Group& g, int max_size = 1 << 30) {
    std::vector<std::vector<int>> out;
    for (auto& x : all_subsets(g.n))
        if (static_cast<int>(x.size()) <= max_size && symmetric(g, x) &&
            std::find(x.begin(), x.end(), g.e) == x.end())
            out.push_back(x);
    return out;
}

// All pairs (S, T) of nonempty symmetric identity-free sets with S T = U
// factorable, found by trying every subset pair.
inline std::vector<std::pair<std::vector<int>, std::vector<int>>> factor_pairs(const Group& g,
                                                                                const std::vector<int>& u) {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
    const auto subs = symmetric_subsets(g);
    for (const auto& s : subs)
        for (const auto& t : subs)
            if (!s.empty() && !t.empty() && factorable(g, s, t, u))
                out.emplace_back(s, t);
    return out;
}

inline int gcd(int a, int b) { return std::gcd(a, b); }

}  // namespace oracle
