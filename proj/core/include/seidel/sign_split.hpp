#pragma once

#include <vector>

#include "seidel/intpoly.hpp"

namespace seidel {

// All monic integer polynomials of degree deg(g) whose roots pick exactly
// one of c + sqrt(lambda) or c - sqrt(lambda) for each root lambda of the
// totally positive g; every returned f divides g((x-c)^2) exactly.  Empty
// when g((x-c)^2) admits no such splitting.  Candidates are formed from
// certified root enclosures (starting at 64 fractional bits, doubling as
// needed) and verified by exact division, so precision affects only speed.
std::vector<IntPoly> sign_split_factor(const IntPoly& g, const Int& c);

// For irreducible totally positive g: true iff g(x^2) is irreducible,
// equivalently sign_split_factor(g, 0) is empty.
bool is_x2_irreducible(const IntPoly& g);

}  // namespace seidel
