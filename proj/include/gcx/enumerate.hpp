#pragma once

#include <utility>
#include <vector>

#include "gcx/graph.hpp"

namespace gcx {

struct BasisSpec {
    int n = 1;
    int e = 0;
    int min_valency = 1;  // 1 = unrestricted; 3 = every vertex of valency > 2
};

struct BasisReport {
    long long total = 0;  // connected classes passing the valency floor
    long long zero = 0;   // zero graphs among them
    std::vector<Graph> nonzero_basis;  // ascending canonical encoding
};

// One canonical representative per isomorphism class of connected graphs on
// spec.n vertices with spec.e edges, min valency applied before counting.
BasisReport enumerate_basis(const BasisSpec& spec, int threads = 1);

// (total, zero) without materializing the basis.
std::pair<long long, long long> enumerate_counts_only(const BasisSpec& spec, int threads = 1);

struct ClassifiedGraph {
    Graph graph;  // canonical representative
    bool zero;
};

// All connected classes at (n, e) with their zero classification, sorted by
// canonical encoding. Results are memoized per (n, e) for the process.
const std::vector<ClassifiedGraph>& classified_basis(int n, int e, int threads = 1);

}  // namespace gcx
