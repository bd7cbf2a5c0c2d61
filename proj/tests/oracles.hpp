#pragma once

// Brute-force reference implementations. They work on plain adjacency
// matrices and arc lists and share no code with the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<int>>;  // m[u][v] = 1 iff arc (u, v)
using Pair = std::pair<int, int>;

inline Matrix empty_matrix(int n) { return Matrix(n, std::vector<int>(n, 0)); }

// Kahn's algorithm on the matrix.
inline bool acyclic(const Matrix& m) {
    const int n = static_cast<int>(m.size());
    std::vector<int> indeg(n, 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) indeg[v] += m[u][v];
    std::vector<int> stack;
    for (int v = 0; v < n; ++v)
        if (!indeg[v]) stack.push_back(v);
    int seen = 0;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        ++seen;
        for (int v = 0; v < n; ++v)
            if (m[u][v] && --indeg[v] == 0) stack.push_back(v);
    }
    return seen == n;
}

// Longest simple directed path length (in arcs) by enumerating all simple paths.
inline int longest_path_length(const Matrix& m) {
    const int n = static_cast<int>(m.size());
    int best = 0;
    std::vector<int> on(n, 0);
    std::function<void(int, int)> dfs = [&](int u, int len) {
        best = std::max(best, len);
        for (int v = 0; v < n; ++v)
            if (m[u][v] && !on[v]) {
                on[v] = 1;
                dfs(v, len + 1);
                on[v] = 0;
            }
    };
    for (int s = 0; s < n; ++s) {
        on[s] = 1;
        dfs(s, 0);
        on[s] = 0;
    }
    return best;
}

// A tournament is cyclic iff it contains a directed triangle.
inline bool tournament_cyclic(const Matrix& m) {
    const int n = static_cast<int>(m.size());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (m[a][b] && m[b][c] && m[c][a]) return true;
    return false;
}

// {(e_i.tail, e_j.head) : i <= j} straight from the definition.
inline std::set<Pair> closure(const std::vector<Pair>& d) {
    std::set<Pair> out;
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i; j < d.size(); ++j) out.insert({d[i].first, d[j].second});
    return out;
}

// D is an alpha-structure with decisive list d: D is a loopless digraph
// without 2-cycles and (u, v) in D iff (u, v) = (e_i.tail, e_j.head), i <= j.
inline bool is_alpha(const std::set<Pair>& D, const std::vector<Pair>& d) {
    for (const auto& [u, v] : D)
        if (u == v || D.count({v, u})) return false;
    std::set<int> verts;
    for (const auto& [u, v] : D) verts.insert(u), verts.insert(v);
    for (const auto& [u, v] : d) verts.insert(u), verts.insert(v);
    for (int u : verts)
        for (int v : verts) {
            bool generated = false;
            for (std::size_t i = 0; i < d.size() && !generated; ++i)
                for (std::size_t j = i; j < d.size() && !generated; ++j)
                    generated = d[i].first == u && d[j].second == v;
            if (generated != (D.count({u, v}) > 0)) return false;
        }
    return true;
}

}  // namespace oracle
