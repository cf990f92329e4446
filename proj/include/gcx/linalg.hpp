#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gcx/rational.hpp"

namespace gcx {

// 2^61 - 1 (prime).
inline constexpr uint64_t kDefaultModularPrime = (uint64_t(1) << 61) - 1;

struct RankMode {
    bool exact = true;
    uint64_t prime = kDefaultModularPrime;
    static RankMode Exact() { return {true, kDefaultModularPrime}; }
    static RankMode Modular(uint64_t p = kDefaultModularPrime) { return {false, p}; }
};

struct SparseRationalMatrix {
    int rows = 0;
    int cols = 0;
    std::map<std::pair<int, int>, Rational> entries;  // (row, col) -> nonzero value

    void set(int r, int c, const Rational& v);
    void add(int r, int c, const Rational& v);
};

struct NoSolutionError : std::runtime_error {
    explicit NoSolutionError(const std::string& msg) : std::runtime_error(msg) {}
};

// Exact rank over Q, or rank over F_p (<= the rational rank). Modular mode
// rejects matrices with a denominator divisible by the prime.
int rank(const SparseRationalMatrix& m, RankMode mode);
int nullity(const SparseRationalMatrix& m, RankMode mode);  // cols - rank

struct KernelSolution {
    std::vector<Rational> particular;   // m * particular = 0, fixed coords honored
    int nullity = 0;                    // dimension of the unconstrained kernel
    int free_parameter_count = 0;       // affine dimension of the constrained solutions
};

// Solves m*x = 0 with x[col] = value for each fixed coordinate; remaining free
// parameters are set to zero under a deterministic pivot rule. Throws
// NoSolutionError on inconsistent constraints.
KernelSolution solve_kernel(const SparseRationalMatrix& m, const std::map<int, Rational>& fixed);

// Coordinate-list text format: header `rows cols nnz`, then `row col p/q`.
std::string dump_matrix(const SparseRationalMatrix& m);
SparseRationalMatrix parse_matrix_dump(const std::string& text);

}  // namespace gcx
