// Independent brute-force oracles used only by tests.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "gcx/graph.hpp"
#include "gcx/rational.hpp"

namespace oracle {

// Pairs (i<j) of 0..n-1 in lexicographic order; bit k of a mask = pair k.
inline std::vector<std::pair<int, int>> pair_list(int n) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) out.push_back({i, j});
    return out;
}

inline gcx::Graph graph_of_mask(int n, uint64_t mask, const std::vector<std::pair<int, int>>& pairs) {
    std::vector<gcx::Edge> edges;
    for (std::size_t k = 0; k < pairs.size(); ++k)
        if (mask >> k & 1) edges.push_back({pairs[k].first + 1, pairs[k].second + 1});
    return gcx::Graph(n, std::move(edges));
}

inline bool mask_connected(int n, uint64_t mask, const std::vector<std::pair<int, int>>& pairs) {
    std::vector<uint32_t> adj(n, 0);
    for (std::size_t k = 0; k < pairs.size(); ++k)
        if (mask >> k & 1) {
            adj[pairs[k].first] |= uint32_t(1) << pairs[k].second;
            adj[pairs[k].second] |= uint32_t(1) << pairs[k].first;
        }
    uint32_t seen = 1, frontier = 1;
    while (frontier) {
        uint32_t next = 0;
        for (int v = 0; v < n; ++v)
            if (frontier >> v & 1) next |= adj[v];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (uint32_t(1) << n) - 1;
}

// Minimum adjacency mask over all n! vertex permutations. Exponential; for
// cross-checking the production canonical form at small n.
inline uint64_t min_perm_canonical(int n, uint64_t mask,
                                   const std::vector<std::pair<int, int>>& pairs) {
    std::vector<int> idx(n * n, 0);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        idx[pairs[k].first * n + pairs[k].second] = static_cast<int>(k);
        idx[pairs[k].second * n + pairs[k].first] = static_cast<int>(k);
    }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    uint64_t best = ~uint64_t(0);
    do {
        uint64_t m = 0;
        for (std::size_t k = 0; k < pairs.size(); ++k)
            if (mask >> k & 1) m |= uint64_t(1) << idx[perm[pairs[k].first] * n + perm[pairs[k].second]];
        best = std::min(best, m);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// Textbook dense Gaussian elimination over the rationals.
inline int dense_rank(std::vector<std::vector<gcx::Rational>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    int rank = 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            gcx::Rational f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
        ++rank;
    }
    return rank;
}

}  // namespace oracle
