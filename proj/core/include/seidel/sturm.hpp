#pragma once

#include <vector>

#include "seidel/intpoly.hpp"
#include "seidel/quadnum.hpp"

namespace seidel {

// Closed interval with exactly-representable (rational or quadratic surd)
// endpoints.
struct SurdInterval {
    QuadNum lo, hi;

    SurdInterval(QuadNum l, QuadNum h);
    bool contains(const QuadNum& x) const { return x >= lo && x <= hi; }
    static SurdInterval parse(const std::string& lo_text, const std::string& hi_text);
};

struct RootCount {
    long distinct = 0;
    long with_multiplicity = 0;
};

// Sturm chain of a square-free polynomial: primitive pseudo-remainder
// sequence with each element a positive multiple of the textbook chain.
std::vector<IntPoly> sturm_chain(const IntPoly& squarefree);

// Sign variations of the chain at x, zeros skipped.
int sign_variations_at(const std::vector<IntPoly>& chain, const QuadNum& x);

// Number of distinct roots of a square-free q in the closed interval.
long count_roots_squarefree(const std::vector<IntPoly>& chain, const IntPoly& q,
                            const SurdInterval& I);

// Exact root counts of an arbitrary nonzero p in a closed interval;
// endpoint roots are counted.  Multiplicities come from the square-free
// decomposition of p.
RootCount sturm_root_count(const IntPoly& p, const SurdInterval& I);

// Multiplicity of x as a root of p (0 when p(x) != 0).
long root_multiplicity_at(const IntPoly& p, const QuadNum& x);

// 1 + max |a_i| / |lead|, an upper bound on the absolute value of roots.
Int cauchy_root_bound(const IntPoly& p);

struct RatInterval {
    Rat lo, hi;
    Rat width() const { return hi - lo; }
};

// Isolating intervals for the distinct real roots of a square-free q in
// [lo, hi], ordered; degenerate [r, r] for exactly-hit rational roots.
// Each returned interval contains exactly one root and has width at most
// max_width unless degenerate.
std::vector<RatInterval> isolate_roots(const IntPoly& squarefree, const Rat& lo, const Rat& hi,
                                       const Rat& max_width);

// Shrink an isolating interval (one root of q inside, q nonzero at lo
// unless lo is the root) to width <= max_width.
void refine_enclosure(const std::vector<IntPoly>& chain, const IntPoly& q, RatInterval& iv,
                      const Rat& max_width);

}  // namespace seidel
