#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "seidel/graph.hpp"
#include "seidel/intpoly.hpp"
#include "seidel/rational.hpp"

namespace seidel {

// The set of congruence classes mod 2^e of characteristic polynomials of
// order-n Seidel matrices, with one witness graph per class.  `complete`
// means the set is provably the whole family: either the theoretical cap
// was reached or every switching class was enumerated.
struct ClassSet {
    int n = 0;
    unsigned e = 1;
    Int bound = 0;
    bool complete = false;
    std::string complete_reason;  // "cap-reached", "exhaustive", or ""
    std::vector<ResiduePoly> classes;  // sorted lexicographically by residues
    std::vector<Graph> witnesses;      // parallel to classes
    std::uint64_t seed = 0;
    std::uint64_t budget = 0;
    std::uint64_t budget_used = 0;
};

// 2^binom(e-2,2) for n even, with the odd-order cap one power of two
// higher from e = 3 on (and 1 for e <= 2).
Int class_count_upper_bound(int n, unsigned e);

// Generates Seidel matrices from a deterministic family followed by seeded
// pseudorandom graphs, reducing each characteristic polynomial mod 2^e and
// deduplicating, until the cap is reached or the budget is exhausted.
// Identical (n, e, seed, budget) always yields the identical ClassSet,
// regardless of the worker count.
ClassSet discover_classes(int n, unsigned e, std::uint64_t seed, std::uint64_t budget,
                          int jobs = 1);

// Every switching class of order n exactly once (reps have vertex 0
// isolated); complete by construction.  Practical for n <= 8.
ClassSet exhaustive_classes(int n, unsigned e);

// Membership of p mod 2^e; rejects incomplete sets (an exclusion drawn
// from a partial family would be unsound).
bool class_membership(const IntPoly& p, const ClassSet& cs);

// JSON cache, canonical class ordering; loading re-verifies that every
// witness reproduces its class (throws std::runtime_error on mismatch).
void save_class_set(const ClassSet& cs, const std::string& path);
ClassSet load_class_set(const std::string& path, bool verify = true);

// The residue of chi_S mod 2^e for the Seidel matrix with this underlying
// graph.
ResiduePoly seidel_class_of(const Graph& g, unsigned e);

}  // namespace seidel
