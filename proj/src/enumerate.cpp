#include "gcx/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "gcx/canonical.hpp"

namespace gcx {

namespace {

using detail::kMaxVertices;

// Lexicographic pair <-> bit index tables for masks over the C(n,2) slots.
struct PairTable {
    int n = 0;
    int count = 0;
    int idx[kMaxVertices][kMaxVertices];
    std::vector<std::pair<int, int>> pairs;

    explicit PairTable(int n_) : n(n_) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                idx[i][j] = idx[j][i] = count++;
                pairs.push_back({i, j});
            }
    }
};

std::array<uint16_t, kMaxVertices> rows_of(uint64_t mask, const PairTable& pt) {
    std::array<uint16_t, kMaxVertices> adj{};
    for (int p = 0; p < pt.count; ++p)
        if (mask >> p & 1) {
            auto [i, j] = pt.pairs[p];
            adj[i] |= uint16_t(1) << j;
            adj[j] |= uint16_t(1) << i;
        }
    return adj;
}

uint64_t canon_mask(int n, uint64_t mask, const PairTable& pt, bool* odd) {
    auto core = detail::canon_search(n, rows_of(mask, pt));
    if (odd) *odd = core.odd_automorphism;
    uint64_t out = 0;
    for (int p = 0; p < pt.count; ++p) {
        auto [i, j] = pt.pairs[p];
        if (core.canon_adj[i] >> j & 1) out |= uint64_t(1) << p;
    }
    return out;
}

bool mask_connected(int n, uint64_t mask, const PairTable& pt) {
    if (n == 1) return true;
    auto adj = rows_of(mask, pt);
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

template <class Fn>
void run_chunks(std::size_t count, int threads, Fn fn) {
    int k = std::max(1, std::min<int>(threads, static_cast<int>(count / 512 + 1)));
    if (k == 1) {
        fn(0, count);
        return;
    }
    std::vector<std::thread> pool;
    std::size_t chunk = (count + k - 1) / k;
    for (int t = 0; t < k; ++t) {
        std::size_t lo = t * chunk, hi = std::min(count, lo + chunk);
        if (lo < hi) pool.emplace_back([&fn, lo, hi] { fn(lo, hi); });
    }
    for (auto& th : pool) th.join();
}

// Level-wise edge augmentation: keep one canonical representative per class
// per edge count, then classify the final level.
std::vector<ClassifiedGraph> build_classified(int n, int e, int threads) {
    if (n < 1 || n > 11) throw std::invalid_argument("enumeration supports 1 <= n <= 11");
    PairTable pt(n);
    if (e < 0 || e > pt.count) return {};

    std::vector<std::pair<uint64_t, bool>> final_masks;  // (canonical mask, odd automorphism)
    if (e == 0) {
        bool odd = false;
        uint64_t m = canon_mask(n, 0, pt, &odd);
        final_masks.push_back({m, odd});
    } else {
        std::vector<uint64_t> cur{0};
        for (int k = 0; k < e; ++k) {
            const bool last = (k == e - 1);
            std::mutex mu;
            std::unordered_set<uint64_t> next;
            std::unordered_map<uint64_t, bool> next_odd;
            run_chunks(cur.size(), threads, [&](std::size_t lo, std::size_t hi) {
                std::unordered_set<uint64_t> local;
                std::unordered_map<uint64_t, bool> local_odd;
                for (std::size_t i = lo; i < hi; ++i) {
                    uint64_t m = cur[i];
                    for (int p = 0; p < pt.count; ++p) {
                        if (m >> p & 1) continue;
                        if (!last) {
                            local.insert(canon_mask(n, m | uint64_t(1) << p, pt, nullptr));
                        } else {
                            bool odd = false;
                            uint64_t cm = canon_mask(n, m | uint64_t(1) << p, pt, &odd);
                            local_odd.emplace(cm, odd);
                        }
                    }
                }
                std::lock_guard<std::mutex> lock(mu);
                next.merge(local);
                next_odd.merge(local_odd);
            });
            if (!last) {
                cur.assign(next.begin(), next.end());
                std::sort(cur.begin(), cur.end());
            } else {
                final_masks.assign(next_odd.begin(), next_odd.end());
            }
        }
    }

    std::vector<ClassifiedGraph> out;
    for (const auto& [m, odd] : final_masks) {
        if (!mask_connected(n, m, pt)) continue;
        std::vector<Edge> edges;
        for (int p = 0; p < pt.count; ++p)
            if (m >> p & 1) edges.push_back({pt.pairs[p].first + 1, pt.pairs[p].second + 1});
        out.push_back({Graph(n, std::move(edges)), odd});
    }
    std::sort(out.begin(), out.end(),
              [](const ClassifiedGraph& x, const ClassifiedGraph& y) {
                  return GraphLess{}(x.graph, y.graph);
              });
    return out;
}

}  // namespace

const std::vector<ClassifiedGraph>& classified_basis(int n, int e, int threads) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<std::vector<ClassifiedGraph>>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({n, e});
        if (it != cache.end()) return *it->second;
    }
    auto built = std::make_unique<std::vector<ClassifiedGraph>>(build_classified(n, e, threads));
    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = cache.try_emplace({n, e}, std::move(built));
    return *it->second;
}

BasisReport enumerate_basis(const BasisSpec& spec, int threads) {
    if (spec.min_valency < 1) throw std::invalid_argument("min_valency must be >= 1");
    BasisReport report;
    for (const ClassifiedGraph& cg : classified_basis(spec.n, spec.e, threads)) {
        if (spec.min_valency > 1 && cg.graph.min_valency() < spec.min_valency) continue;
        ++report.total;
        if (cg.zero)
            ++report.zero;
        else
            report.nonzero_basis.push_back(cg.graph);
    }
    return report;
}

std::pair<long long, long long> enumerate_counts_only(const BasisSpec& spec, int threads) {
    if (spec.min_valency < 1) throw std::invalid_argument("min_valency must be >= 1");
    long long total = 0, zero = 0;
    for (const ClassifiedGraph& cg : classified_basis(spec.n, spec.e, threads)) {
        if (spec.min_valency > 1 && cg.graph.min_valency() < spec.min_valency) continue;
        ++total;
        if (cg.zero) ++zero;
    }
    return {total, zero};
}

}  // namespace gcx
