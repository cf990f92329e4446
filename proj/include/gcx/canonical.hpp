#pragma once

#include <array>
#include <cstdint>

#include "gcx/graph.hpp"

namespace gcx {

// Outcome of canonicalization. `graph` is the canonical representative of the
// isomorphism class (labels chosen by the search, edges normalized and sorted
// lexicographically). When `zero` is set the input admits an automorphism
// inducing an odd edge permutation and represents the zero vector; `sign` is
// meaningful only when `zero` is false.
struct CanonicalResult {
    bool zero;
    Graph graph;
    int sign;
};

// Deterministic canonical form with wedge-sign transport; independent of the
// input labeling and edge order. Supports n <= 16.
CanonicalResult canonicalize(const Graph& g);

// Direct automorphism enumeration; true iff some automorphism induces an odd
// permutation of the edge set. Exponential in the worst case, meant for small
// graphs and as a cross-check of canonicalize().
bool is_zero(const Graph& g);

// Parity of a permutation given as images; +1 even, -1 odd.
int permutation_sign(const std::vector<int>& perm);

namespace detail {

constexpr int kMaxVertices = 16;

// Canonical labeling on adjacency bitsets (0-based vertices).
struct CanonCore {
    std::array<uint16_t, kMaxVertices> canon_adj;  // canonical adjacency rows
    std::array<uint8_t, kMaxVertices> lab;         // canonical position -> input vertex
    bool odd_automorphism;                         // discovered generators include an edge-odd one
};

CanonCore canon_search(int n, const std::array<uint16_t, kMaxVertices>& adj);

}  // namespace detail
}  // namespace gcx
