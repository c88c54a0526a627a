#pragma once

#include <vector>

#include "seidel/charpoly.hpp"
#include "seidel/graph.hpp"
#include "seidel/rational.hpp"

namespace seidel {

// Exact closed-walk counts: traces[d] = tr(A^d) and bilinear[k] = 1^T A^k 1
// for 0 <= d,k <= N.
struct WalkStats {
    std::vector<Int> traces;
    std::vector<Int> bilinear;
};

WalkStats walk_stats(const Graph& g, int N);

// Element of the dihedral group of order 2N acting on closed N-walks:
// rotation k sends position i to i+k; reflection k sends i to k-1-i.
struct DihedralElement {
    int k = 0;
    bool reflection = false;
};

// Brute-force count of closed N-walks fixed by the element, by explicit
// enumeration.  Guarded: requires n^N <= 10^7.
long dihedral_fix_oracle(const Graph& g, int N, const DihedralElement& el);

// The closed-form fix count the oracle must match: tr(A^gcd(k,N)) for
// rotations, 0 for even-k reflections, 1^T A^(N/2) 1 for odd-k reflections
// when N is even.
Int dihedral_fix_formula(const WalkStats& ws, int N, const DihedralElement& el);

}  // namespace seidel
