#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "weylchar/bigint.hpp"

namespace weylchar {

// Sparse integer matrix as triplets; duplicates are summed on reduction.
struct SparseIntMatrix {
    int rows = 0;
    int cols = 0;
    struct Entry {
        int row;
        int col;
        Int val;
    };
    std::vector<Entry> entries;

    void add(int r, int c, Int v) {
        if (v != 0) entries.push_back({r, c, std::move(v)});
    }
};

// Reduced-echelon kernel data modulo a prime p < 2^31.
struct ModKernel {
    std::uint64_t p = 0;
    int rank = 0;
    std::vector<int> pivot_cols;
    std::vector<int> free_cols;
    // basis[k][c]: kernel vector with 1 at free_cols[k]; length = cols
    std::vector<std::vector<std::uint64_t>> basis;
};

ModKernel modp_kernel(const SparseIntMatrix& a, std::uint64_t p, bool want_basis);

// Exact A * x for a rational vector x given as (numerators, common denominator).
bool sparse_maps_to_zero(const SparseIntMatrix& a, const std::vector<Int>& x_num);

// x = a/b mod m with |a|, b <= sqrt(m/2); standard half-extended Euclid.
std::optional<Rat> rational_reconstruct(const Int& x, const Int& m);

// Fraction-free determinant (Bareiss). Consumes its argument.
Int bareiss_det(std::vector<std::vector<Int>> a);

// 31-bit primes for modular elimination, largest first.
const std::vector<std::uint64_t>& elimination_primes();

}  // namespace weylchar
