#pragma once

#include <vector>

#include "seidel/rational.hpp"

namespace seidel {

// Number of 1s in the binary expansion of a >= 0.
long binary_ones(const Int& a);

// Euler's totient.  Requires a >= 1.
Int totient(const Int& a);

// Exact 2-adic valuation of (m_1 + ... + m_l - 1)! / (m_1! ... m_l!).
// Requires a positive sum.  The value is finite (the quotient is 1/m times
// a product of multinomial coefficients, hence nonzero).
Val2 multinomial_val2(const std::vector<Int>& m);

// nu2 of n! via Legendre's formula: n - binary_ones(n).
Int factorial_val2(const Int& n);

// Exact binomial coefficient.
Int binomial(unsigned long n, unsigned long k);

// True iff d > 0 and d has no repeated prime factor.
bool is_squarefree(const Int& d);

// Floor of the square root of n >= 0.
Int isqrt(const Int& n);

}  // namespace seidel
