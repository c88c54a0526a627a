#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "seidel/intpoly.hpp"
#include "seidel/sturm.hpp"

namespace seidel {

// Constraint bundle for the coefficient tree search: monic integer
// polynomials of the given degree with prescribed top coefficients and
// coefficient parities, all roots real and confined to the closed global
// interval; in interlacing mode (boxes nonempty, one per root) the sorted
// roots must additionally satisfy root_i in boxes[i].
struct EnumSpec {
    int degree = 0;
    std::map<int, Int> fixed;   // a_i by top index (a_1 = -trace is mandatory)
    std::map<int, int> parity;  // a_i mod 2 by top index
    SurdInterval interval{QuadNum(0), QuadNum(0)};
    std::vector<SurdInterval> boxes;  // interlacing mode when nonempty
    bool require_distinct = false;

    static EnumSpec trace_stratum(int degree, int trace, const SurdInterval& interval,
                                  bool binomial_parity, bool require_distinct);
    std::string to_json() const;
    static EnumSpec from_json(const std::string& text);
};

struct EnumResult {
    std::vector<IntPoly> polys;  // duplicate-free, canonically sorted
    std::uint64_t nodes_visited = 0;
    bool validated = false;
    std::string diagnostic;  // nonempty when the spec is contradictory
};

// Complete enumeration.  Candidate ranges over-approximate at every level
// (sign conditions of the next scaled derivative at certified root
// enclosures of the current one and at the interval endpoints); every leaf
// is validated exactly with Sturm counts, so the output is both complete
// and sound.
EnumResult enumerate_polynomials(const EnumSpec& spec, int jobs = 1);

// Trace lower bound for irreducible totally positive polynomials of degree
// >= 5: returns false when the (d, t) stratum is provably empty and the
// search can be skipped.
bool mckee_admissible(int d, int t);

// Pool of complete (degree, trace) strata of totally positive monic
// integer polynomials with binomial parity, used for trial division.
struct FactorPool {
    std::map<std::pair<int, int>, std::vector<IntPoly>> strata;

    bool has(int d, int t) const { return strata.count({d, t}) > 0; }
    const std::vector<IntPoly>& at(int d, int t) const;
};

struct Classification {
    bool irreducible = false;
    IntPoly witness;  // a proper factor when reducible
};

// Trial division against every pool member of degree <= deg(p)/2; sound
// because a monic integer factor of a totally positive polynomial with the
// binomial parity profile is itself in some required stratum.  A missing
// stratum is a hard error.
Classification classify_irreducible(const FactorPool& pool, const IntPoly& p);

}  // namespace seidel
