#include "gcx/canonical.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <vector>

namespace gcx {

int permutation_sign(const std::vector<int>& perm) {
    std::vector<char> seen(perm.size(), 0);
    int transpositions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = perm[j]) {
            seen[j] = 1;
            ++len;
        }
        transpositions += len - 1;
    }
    return transpositions % 2 == 0 ? 1 : -1;
}

namespace detail {
namespace {

// Ordered partition of 0..n-1: `order` lists the vertices, bit i of
// `cell_start` marks the start of a cell at position i. Bit 0 is always set.
struct Partition {
    std::array<uint8_t, kMaxVertices> order;
    uint32_t cell_start;
};

int cell_end(const Partition& p, int n, int start) {
    int e = start + 1;
    while (e < n && !(p.cell_start >> e & 1)) ++e;
    return e;
}

// Number of leading singleton cells: positions 0..k-1 are fixed.
int fixed_count(const Partition& p, int n) {
    int k = 0;
    while (k < n) {
        if (!(p.cell_start >> k & 1)) return k;  // inside an earlier cell: not reachable for k==start
        int e = cell_end(p, n, k);
        if (e - k > 1) return k;
        k = e;
    }
    return k;
}

// Equitable refinement. Splits cells by neighbor counts into splitter cells,
// sub-cells ordered by ascending count; restarts after every split.
void refine(int n, const std::array<uint16_t, kMaxVertices>& adj, Partition& p) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int ss = 0; ss < n && !changed; ss = cell_end(p, n, ss)) {
            int se = cell_end(p, n, ss);
            uint16_t smask = 0;
            for (int i = ss; i < se; ++i) smask |= uint16_t(1) << p.order[i];
            for (int cs = 0; cs < n && !changed; cs = cell_end(p, n, cs)) {
                int ce = cell_end(p, n, cs);
                if (ce - cs < 2) continue;
                int cnt[kMaxVertices];
                bool differ = false;
                for (int i = cs; i < ce; ++i) {
                    cnt[i] = std::popcount(uint32_t(adj[p.order[i]] & smask));
                    if (cnt[i] != cnt[cs]) differ = true;
                }
                if (!differ) continue;
                std::array<uint8_t, kMaxVertices> tmp;
                int idx[kMaxVertices];
                for (int i = cs; i < ce; ++i) idx[i] = i;
                std::stable_sort(idx + cs, idx + ce, [&](int x, int y) { return cnt[x] < cnt[y]; });
                for (int i = cs; i < ce; ++i) tmp[i] = p.order[idx[i]];
                for (int i = cs; i < ce; ++i) {
                    p.order[i] = tmp[i];
                    if (i > cs && cnt[idx[i]] != cnt[idx[i - 1]]) p.cell_start |= uint32_t(1) << i;
                }
                changed = true;
            }
        }
    }
}

Partition individualize(const Partition& p, int n, int cs, uint8_t v) {
    Partition q = p;
    int pos = cs;
    while (q.order[pos] != v) ++pos;
    for (int i = pos; i > cs; --i) q.order[i] = q.order[i - 1];
    q.order[cs] = v;
    q.cell_start |= uint32_t(1) << (cs + 1);
    (void)n;
    return q;
}

struct Dsu {
    std::array<uint8_t, kMaxVertices> parent;
    void init(int n) {
        for (int i = 0; i < n; ++i) parent[i] = uint8_t(i);
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int x, int y) { parent[find(x)] = uint8_t(find(y)); }
};

struct Searcher {
    int n;
    const std::array<uint16_t, kMaxVertices>& adj;
    std::vector<std::pair<uint8_t, uint8_t>> lex_edges;  // input edge set, lex order
    int edge_slot[kMaxVertices][kMaxVertices];

    std::array<uint16_t, kMaxVertices> cur_enc{};
    std::array<uint16_t, kMaxVertices> best_enc{};
    std::array<uint8_t, kMaxVertices> best_lab{};
    bool best_set = false;
    bool odd_automorphism = false;
    std::vector<std::array<uint8_t, kMaxVertices>> gens;
    std::vector<uint8_t> path_seq;

    explicit Searcher(int n_, const std::array<uint16_t, kMaxVertices>& adj_) : n(n_), adj(adj_) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (adj[i] >> j & 1) {
                    edge_slot[i][j] = edge_slot[j][i] = static_cast<int>(lex_edges.size());
                    lex_edges.push_back({uint8_t(i), uint8_t(j)});
                }
    }

    void run() {
        Partition p;
        for (int i = 0; i < n; ++i) p.order[i] = uint8_t(i);
        p.cell_start = 1;
        refine(n, adj, p);
        node(p);
    }

    // -1 strictly better than best, 0 equal so far, +1 worse (prune).
    int compare_prefix(int k) const {
        for (int i = 0; i < k; ++i) {
            if (cur_enc[i] != best_enc[i]) return cur_enc[i] < best_enc[i] ? -1 : 1;
        }
        return 0;
    }

    void fill_enc(const Partition& p, int k) {
        for (int i = 0; i < k; ++i) {
            uint16_t row = 0;
            uint16_t vrow = adj[p.order[i]];
            for (int j = 0; j < i; ++j)
                if (vrow >> p.order[j] & 1) row |= uint16_t(1) << j;
            cur_enc[i] = row;
        }
    }

    bool gen_fixes_path(const std::array<uint8_t, kMaxVertices>& g) const {
        for (uint8_t v : path_seq)
            if (g[v] != v) return false;
        return true;
    }

    int automorphism_edge_sign(const std::array<uint8_t, kMaxVertices>& g) const {
        std::vector<int> perm(lex_edges.size());
        for (std::size_t k = 0; k < lex_edges.size(); ++k)
            perm[k] = edge_slot[g[lex_edges[k].first]][g[lex_edges[k].second]];
        return permutation_sign(perm);
    }

    void handle_leaf(const Partition& p, int cmp) {
        if (!best_set || cmp < 0) {
            best_enc = cur_enc;
            for (int i = 0; i < n; ++i) best_lab[i] = p.order[i];
            best_set = true;
            return;
        }
        // cmp == 0: two labelings reach the best encoding -> automorphism.
        std::array<uint8_t, kMaxVertices> alpha{};
        bool identity = true;
        for (int i = 0; i < n; ++i) {
            alpha[best_lab[i]] = p.order[i];
            if (best_lab[i] != p.order[i]) identity = false;
        }
        if (identity) return;
        if (automorphism_edge_sign(alpha) < 0) odd_automorphism = true;
        gens.push_back(alpha);
    }

    void node(const Partition& p) {
        int k = fixed_count(p, n);
        fill_enc(p, k);
        int cmp = best_set ? compare_prefix(k) : -1;
        if (cmp > 0) return;
        if (k == n) {
            handle_leaf(p, cmp);
            return;
        }
        int cs = k;  // first non-singleton cell starts where the fixed prefix ends
        int ce = cell_end(p, n, cs);
        uint8_t cand[kMaxVertices];
        int ncand = ce - cs;
        for (int i = 0; i < ncand; ++i) cand[i] = p.order[cs + i];
        std::sort(cand, cand + ncand);

        Dsu dsu;
        std::size_t dsu_gens = SIZE_MAX;  // force initial build
        std::vector<uint8_t> tried;
        for (int i = 0; i < ncand; ++i) {
            uint8_t v = cand[i];
            if (!tried.empty()) {
                if (dsu_gens != gens.size()) {
                    dsu.init(n);
                    for (const auto& g : gens)
                        if (gen_fixes_path(g))
                            for (int x = 0; x < n; ++x) dsu.unite(x, g[x]);
                    dsu_gens = gens.size();
                }
                bool skip = false;
                for (uint8_t w : tried)
                    if (dsu.find(w) == dsu.find(v)) {
                        skip = true;
                        break;
                    }
                if (skip) continue;
            }
            Partition q = individualize(p, n, cs, v);
            refine(n, adj, q);
            path_seq.push_back(v);
            node(q);
            path_seq.pop_back();
            tried.push_back(v);
        }
    }
};

}  // namespace

CanonCore canon_search(int n, const std::array<uint16_t, kMaxVertices>& adj) {
    Searcher s(n, adj);
    s.run();
    CanonCore out;
    out.lab = s.best_lab;
    out.odd_automorphism = s.odd_automorphism;
    out.canon_adj.fill(0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j)
            if (s.best_enc[i] >> j & 1) {
                out.canon_adj[i] |= uint16_t(1) << j;
                out.canon_adj[j] |= uint16_t(1) << i;
            }
    return out;
}

}  // namespace detail

namespace {

std::array<uint16_t, detail::kMaxVertices> adjacency_rows(const Graph& g) {
    if (g.vertex_count() > detail::kMaxVertices)
        throw std::invalid_argument("canonicalize supports at most 16 vertices");
    std::array<uint16_t, detail::kMaxVertices> adj{};
    for (const Edge& e : g.edges()) {
        adj[e.a - 1] |= uint16_t(1) << (e.b - 1);
        adj[e.b - 1] |= uint16_t(1) << (e.a - 1);
    }
    return adj;
}

}  // namespace

CanonicalResult canonicalize(const Graph& g) {
    const int n = g.vertex_count();
    auto adj = adjacency_rows(g);
    auto core = detail::canon_search(n, adj);

    std::vector<Edge> canon_edges;
    int slot_index[detail::kMaxVertices][detail::kMaxVertices];
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (core.canon_adj[i] >> j & 1) {
                slot_index[i][j] = static_cast<int>(canon_edges.size());
                canon_edges.push_back({i + 1, j + 1});
            }
    Graph canon(n, std::move(canon_edges));
    if (core.odd_automorphism) return {true, std::move(canon), 1};

    int pos[detail::kMaxVertices];
    for (int i = 0; i < n; ++i) pos[core.lab[i]] = i;
    std::vector<int> transport(g.edge_count());
    for (int k = 0; k < g.edge_count(); ++k) {
        int i = pos[g.edges()[k].a - 1];
        int j = pos[g.edges()[k].b - 1];
        transport[k] = slot_index[std::min(i, j)][std::max(i, j)];
    }
    return {false, std::move(canon), permutation_sign(transport)};
}

bool is_zero(const Graph& g) {
    const int n = g.vertex_count();
    auto adj = adjacency_rows(g);
    int deg[detail::kMaxVertices];
    for (int v = 0; v < n; ++v) deg[v] = std::popcount(uint32_t(adj[v]));

    int edge_slot[detail::kMaxVertices][detail::kMaxVertices];
    for (int k = 0; k < g.edge_count(); ++k) {
        const Edge& e = g.edges()[k];
        edge_slot[e.a - 1][e.b - 1] = edge_slot[e.b - 1][e.a - 1] = k;
    }

    std::vector<int> image(n, -1);
    std::vector<char> used(n, 0);
    std::vector<int> edge_perm(g.edge_count());

    // Depth-first search over degree- and adjacency-consistent vertex images.
    auto dfs = [&](auto&& self, int v) -> bool {
        if (v == n) {
            for (int k = 0; k < g.edge_count(); ++k) {
                const Edge& e = g.edges()[k];
                edge_perm[k] = edge_slot[image[e.a - 1]][image[e.b - 1]];
            }
            return permutation_sign(edge_perm) < 0;
        }
        for (int u = 0; u < n; ++u) {
            if (used[u] || deg[u] != deg[v]) continue;
            bool ok = true;
            for (int w = 0; w < v; ++w)
                if (((adj[v] >> w) & 1) != ((adj[u] >> image[w]) & 1)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            image[v] = u;
            used[u] = 1;
            if (self(self, v + 1)) return true;
            used[u] = 0;
        }
        return false;
    };
    return dfs(dfs, 0);
}

}  // namespace gcx
