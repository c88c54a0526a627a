#pragma once

#include <string>
#include <vector>

#include "seidel/graph.hpp"
#include "seidel/intpoly.hpp"
#include "seidel/rational.hpp"
#include "seidel/seidel_matrix.hpp"

namespace seidel {

// Each verifier returns the list of checks it performed; a violated
// congruence is an implementation bug and throws std::logic_error.
struct CheckReport {
    std::vector<std::string> passed;
};

// Weighted trace-power congruences mod 2N (even and odd N), plus the Euler
// specializations (walk counts mod 2/4 and the rearranged trace congruence)
// when every degree of g is even.
CheckReport verify_trace_congruences(const Graph& g, int N);

// Coefficients a_r of chi_{J-2A} from the coefficients b_r of chi_A and the
// walk counts 1^T A^(i-1) 1:
//   a_r = (-2)^r (b_r + 1/2 sum_{i=1..r} b_{r-i} 1^T A^(i-1) 1).
// Inputs and output are indexed from the top (index 0 is the leading 1).
// A non-integer intermediate is an error.
std::vector<Int> coefficient_map(const std::vector<Int>& b_top, const std::vector<Int>& walks);

// Divisibility and congruence checks on the coefficients of chi_{J-2A} and
// chi_A: top coefficients (1, -n, 0), 2^r | a_r for even r (any order) and
// for all r (even order), parity of the b_r, and for odd order the mod-4
// relations between the b_r and the a_r of the Euler representative.
CheckReport verify_parity_theorems(const SeidelMatrix& s);

// For an Euler graph of odd order n with chi_{J-2A} coefficients a (from
// the top): checks that a_{2k+1} is congruent mod 2^(2k+1) to the
// composition sum over divisors d | 2k of C_d * P_d, where C_d carries the
// multinomial weight and P_d the products of normalized lower coefficients.
// Requires 2 <= k <= (n-1)/2.
CheckReport verify_euler_coefficient_congruence(const std::vector<Int>& a_top, int n, int k);

}  // namespace seidel
