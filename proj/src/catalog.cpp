#include "gcx/catalog.hpp"

#include <atomic>
#include <thread>

namespace gcx {

namespace {

const char* const kGamma3Text = "1 ; 12 13 14 23 24 34\n";

const char* const kGamma5Text =
    "1 ; 12 23 34 45 51 16 26 36 46 56\n"
    "5/2 ; 12 23 34 41 45 15 56 36 26 13\n";

const char* const kGamma7Text =
    "1 ; 16 17 18 23 25 28 34 38 46 48 57 58 68 78\n"
    "-21/8 ; 12 14 18 23 27 35 37 46 48 57 58 67 68 78\n"
    "-77/4 ; 13 14 18 23 25 28 37 46 48 56 57 67 68 78\n"
    "-35/8 ; 12 13 15 24 27 35 36 46 48 57 58 67 68 78\n"
    "49/8 ; 12 13 18 24 26 37 38 46 47 56 57 58 68 78\n"
    "77/8 ; 14 17 18 23 25 26 35 37 46 48 56 58 67 78\n"
    "-105/8 ; 12 13 18 26 27 35 38 45 46 47 56 57 68 78\n"
    "7/8 ; 12 14 18 23 27 36 38 46 48 56 57 58 67 78\n"
    "35/8 ; 12 14 15 23 27 35 36 46 48 57 58 67 68 78\n"
    "-49/8 ; 12 13 14 27 28 36 38 46 47 56 57 58 68 78\n"
    "35/4 ; 12 13 18 25 27 34 36 47 48 56 58 67 68 78\n"
    "-119/16 ; 12 13 14 25 26 36 38 45 47 57 58 67 68 78\n"
    "49/8 ; 12 13 15 24 28 36 38 47 48 56 57 67 68 78\n"
    "77/4 ; 12 13 14 23 28 37 46 48 56 57 58 67 68 78\n"
    "-49/8 ; 12 15 17 25 26 35 36 38 45 47 48 67 68 78\n"
    "-49/4 ; 13 15 18 24 26 28 37 38 46 47 56 57 68 78\n"
    "-49/4 ; 13 14 18 25 26 28 36 38 47 48 56 57 67 78\n"
    "-7 ; 12 14 18 23 28 35 37 46 48 56 57 67 68 78\n"
    "-7 ; 12 14 18 23 28 36 38 46 47 56 57 58 67 78\n"
    "49/8 ; 12 15 16 25 27 35 36 38 46 47 48 58 67 78\n"
    "49/8 ; 12 14 18 23 28 36 37 46 47 56 57 58 68 78\n"
    "-7 ; 12 13 15 26 27 35 36 45 47 48 58 67 68 78\n"
    "7 ; 12 13 18 24 28 35 38 46 47 57 58 67 68 78\n"
    "-7 ; 12 13 18 25 26 37 38 45 46 47 56 57 68 78\n"
    "77/8 ; 12 14 16 23 25 36 37 45 48 57 58 67 68 78\n"
    "-7 ; 13 16 17 24 25 26 35 37 45 48 58 67 68 78\n"
    "49/4 ; 14 15 17 23 26 28 37 38 46 48 56 57 68 78\n"
    "-147/8 ; 12 16 18 27 28 34 36 38 46 47 56 57 58 78\n"
    "-21/8 ; 12 15 16 27 28 35 36 38 45 46 47 57 68 78\n"
    "-35/8 ; 12 14 18 23 27 35 36 45 46 57 58 67 68 78\n"
    "-49/4 ; 14 15 16 23 26 28 37 38 46 48 57 58 67 78\n"
    "105/8 ; 12 15 18 23 28 34 37 46 48 56 57 67 68 78\n"
    "-49/8 ; 12 14 17 23 26 37 38 46 48 56 57 58 68 78\n"
    "49/16 ; 12 16 18 25 27 35 36 37 45 46 48 57 68 78\n"
    "7 ; 12 13 18 25 27 35 36 46 47 48 56 57 68 78\n"
    "-7 ; 12 14 18 25 28 34 36 38 47 57 58 67 68 78\n"
    "-77/16 ; 12 16 18 25 27 35 36 37 45 46 48 58 67 78\n"
    "77/4 ; 12 14 18 23 27 35 38 46 47 57 58 67 68 78\n"
    "35/2 ; 12 14 15 23 27 36 38 46 48 57 58 67 68 78\n"
    "-105/8 ; 12 13 18 25 27 34 36 46 48 57 58 67 68 78\n"
    "-7 ; 12 15 16 25 27 35 36 38 46 47 48 57 68 78\n"
    "-147/16 ; 12 13 16 25 28 34 37 47 48 57 58 67 68 78\n"
    "-77/4 ; 12 13 17 25 26 35 37 45 46 48 58 67 68 78\n"
    "-49/8 ; 12 14 17 23 27 35 38 46 48 57 58 67 68 78\n"
    "-7/4 ; 12 13 15 26 28 35 37 45 46 47 58 67 68 78\n"
    "-7 ; 12 14 18 23 26 36 38 47 48 56 57 58 67 78\n";

}  // namespace

const std::vector<std::pair<Rational, Graph>>& gamma3_terms() {
    static const auto terms = parse_sum_text(kGamma3Text);
    return terms;
}

const std::vector<std::pair<Rational, Graph>>& gamma5_terms() {
    static const auto terms = parse_sum_text(kGamma5Text);
    return terms;
}

const std::vector<std::pair<Rational, Graph>>& gamma7_terms() {
    static const auto terms = parse_sum_text(kGamma7Text);
    return terms;
}

GraphSum gamma3() { return sum_from_raw(gamma3_terms()); }
GraphSum gamma5() { return sum_from_raw(gamma5_terms()); }
GraphSum gamma7() { return sum_from_raw(gamma7_terms()); }

CocycleVerdict verify_cocycle(const GraphSum& s, int threads) {
    GraphSum residual = differential(s, threads);
    return {residual.empty(), std::move(residual)};
}

AssembledDifferential differential_matrix(const std::vector<Graph>& basis, int threads) {
    // Columns are computed in chunks so large bases never hold every reduced
    // differential at once; rows get provisional first-seen indices and are
    // remapped to canonical order at the end.
    std::map<Graph, int, GraphLess> row_index;
    std::vector<std::tuple<int, int, Rational>> entries;  // (provisional row, col, value)
    const std::size_t chunk = 4096;
    for (std::size_t lo = 0; lo < basis.size(); lo += chunk) {
        const std::size_t hi = std::min(basis.size(), lo + chunk);
        std::vector<GraphSum> columns(hi - lo);
        std::atomic<std::size_t> next{lo};
        auto worker = [&] {
            for (std::size_t j = next.fetch_add(1); j < hi; j = next.fetch_add(1))
                columns[j - lo] = reduce(bracket(edge_graph(), basis[j]));
        };
        int k = std::max(1, std::min<int>(threads, static_cast<int>(hi - lo)));
        if (k == 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (int t = 0; t < k; ++t) pool.emplace_back(worker);
            for (auto& th : pool) th.join();
        }
        for (std::size_t j = lo; j < hi; ++j)
            for (const auto& [g, c] : columns[j - lo].terms()) {
                auto [it, inserted] =
                    row_index.try_emplace(g, static_cast<int>(row_index.size()));
                entries.emplace_back(it->second, static_cast<int>(j), c);
            }
    }

    AssembledDifferential out;
    std::vector<int> remap(row_index.size());
    out.target.reserve(row_index.size());
    for (const auto& [g, provisional] : row_index) {  // map order is canonical
        remap[provisional] = static_cast<int>(out.target.size());
        out.target.push_back(g);
    }
    out.matrix.rows = static_cast<int>(out.target.size());
    out.matrix.cols = static_cast<int>(basis.size());
    for (const auto& [r, c, v] : entries) out.matrix.set(remap[r], c, v);
    return out;
}

DimensionReport cohomology_report(int n, int min_valency, RankMode mode, bool allow_big,
                                  int threads) {
    if (n < 4 || n > 9) throw std::invalid_argument("cohomology_report supports 4 <= n <= 9");
    if (min_valency != 1 && min_valency != 3)
        throw std::invalid_argument("min_valency must be 1 or 3");
    if (n == 9 && min_valency == 1 && !allow_big)
        throw ResourceGateError(
            "the (n=9, min_valency=1) row is the heaviest run (26631 classes); opt in explicitly");

    DimensionReport rep;
    rep.n = n;
    rep.e = 2 * n - 2;

    BasisReport basis = enumerate_basis({n, rep.e, min_valency}, threads);
    rep.total_graphs = basis.total;
    rep.zero_graphs = basis.zero;
    rep.nonzero = static_cast<long long>(basis.nonzero_basis.size());
    if (!basis.nonzero_basis.empty()) {
        AssembledDifferential d = differential_matrix(basis.nonzero_basis, threads);
        rep.n_ker = d.matrix.cols - rank(d.matrix, mode);
    }

    BasisReport delta = enumerate_basis({n - 1, 2 * n - 3, min_valency}, threads);
    rep.delta_total = delta.total;
    rep.delta_zero = delta.zero;
    rep.n_delta = static_cast<int>(delta.nonzero_basis.size());
    if (!delta.nonzero_basis.empty()) {
        AssembledDifferential d = differential_matrix(delta.nonzero_basis, threads);
        int r = rank(d.matrix, mode);
        rep.n_0 = rep.n_delta - r;
        rep.n_im = r;
    }
    rep.dim_h = rep.n_ker - rep.n_im;
    return rep;
}

BracketCheck bracket_cocycle_check(int threads) {
    BracketCheck out{bracket_sum(gamma3(), gamma5(), threads), false, true, false};
    out.nonzero = !out.bracket.empty();
    for (const auto& [g, c] : out.bracket.terms())
        if (g.vertex_count() != 9 || g.edge_count() != 16) out.homogeneous_9_16 = false;
    out.cocycle = differential(out.bracket, threads).empty();
    return out;
}

}  // namespace gcx
