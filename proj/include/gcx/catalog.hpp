#pragma once

#include <stdexcept>
#include <vector>

#include "gcx/algebra.hpp"
#include "gcx/enumerate.hpp"
#include "gcx/linalg.hpp"

namespace gcx {

// Embedded wheel cocycles, kept as verbatim term lines and parsed at load.
const std::vector<std::pair<Rational, Graph>>& gamma3_terms();
const std::vector<std::pair<Rational, Graph>>& gamma5_terms();
const std::vector<std::pair<Rational, Graph>>& gamma7_terms();

GraphSum gamma3();
GraphSum gamma5();
GraphSum gamma7();

struct CocycleVerdict {
    bool is_cocycle;
    GraphSum residual;  // the reduced differential of the input
};

CocycleVerdict verify_cocycle(const GraphSum& s, int threads = 1);

// Differential matrix of a graded basis: column j holds the reduced d of
// basis[j] expressed over the canonical target graphs that actually appear.
struct AssembledDifferential {
    std::vector<Graph> target;  // row index -> canonical graph, ascending
    SparseRationalMatrix matrix;
};

AssembledDifferential differential_matrix(const std::vector<Graph>& basis, int threads = 1);

// Row of the dimension tables at bi-grading (n, 2n-2). The delta_* fields
// describe the (n-1, 2n-3) grading feeding the coboundary count.
struct DimensionReport {
    int n = 0;
    int e = 0;
    long long total_graphs = 0;
    long long zero_graphs = 0;
    long long nonzero = 0;
    int n_ker = 0;
    long long delta_total = 0;
    long long delta_zero = 0;
    int n_delta = 0;
    int n_0 = 0;
    int n_im = 0;
    int dim_h = 0;
};

struct ResourceGateError : std::runtime_error {
    explicit ResourceGateError(const std::string& msg) : std::runtime_error(msg) {}
};

// Supported for 4 <= n <= 9. The (n=9, min_valency=1) run is hours-scale and
// must be opted into with allow_big.
DimensionReport cohomology_report(int n, int min_valency, RankMode mode, bool allow_big = false,
                                  int threads = 1);

struct BracketCheck {
    GraphSum bracket;
    bool nonzero;
    bool homogeneous_9_16;
    bool cocycle;
};

// [gamma3, gamma5]: nonzero element of ker d on 9 vertices and 16 edges.
BracketCheck bracket_cocycle_check(int threads = 1);

}  // namespace gcx
