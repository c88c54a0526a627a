#pragma once

#include <cstdint>
#include <vector>

#include "seidel/graph.hpp"
#include "seidel/intpoly.hpp"
#include "seidel/seidel_matrix.hpp"

namespace seidel {

// Dense square integer matrix, row-major.
struct SquareIntMatrix {
    int n = 0;
    std::vector<Int> a;

    SquareIntMatrix() = default;
    explicit SquareIntMatrix(int order) : n(order), a(static_cast<size_t>(order) * order, Int(0)) {}
    Int& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    const Int& at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
};

SquareIntMatrix adjacency_matrix(const Graph& g);
SquareIntMatrix seidel_entries(const SeidelMatrix& s);
// J - 2A for the underlying graph of s (so chi_S(x) = chi_{J-2A}(x+1)).
SquareIntMatrix j_minus_2a(const Graph& g);
SquareIntMatrix principal_submatrix(const SquareIntMatrix& m, int deleted);

// Exact characteristic polynomial det(xI - M), division-free (Berkowitz).
// Big integers throughout; intended for orders up to 64.
IntPoly char_poly(const SquareIntMatrix& m);

// Characteristic polynomial reduced mod 2^e, computed over Z/2^64 (natural
// uint64 wraparound) and then masked; exact for any integer matrix.
ResiduePoly char_poly_mod2e(const std::vector<std::uint64_t>& flat, int n, unsigned e);

std::vector<std::uint64_t> seidel_flat_u64(const SeidelMatrix& s);

}  // namespace seidel
