#pragma once

#include <string>
#include <vector>

#include "seidel/quadnum.hpp"
#include "seidel/rational.hpp"

namespace seidel {

// Decide existence of nonnegative integers n_j with sum(n_j) = total and
// sum(n_j * rows[j]) = target, where the row entries may live in a real
// quadratic field: surd coordinates are split off as extra equations whose
// right-hand side is zero.
struct FeasibilityProblem {
    std::vector<std::vector<QuadNum>> rows;
    Int total = 0;
    std::vector<Int> target;
};

struct FeasibilityResult {
    bool feasible = false;
    std::string certificate;  // evidence for infeasibility, or a note
    std::vector<std::vector<Int>> assignments;  // all solutions when search is complete
    std::vector<bool> forced_positive;          // entry j positive in every assignment
    bool assignments_complete = false;
};

FeasibilityResult solve_feasibility(const FeasibilityProblem& problem);

// Exact rational feasibility of {Ax = b, x >= 0} by phase-1 simplex with
// Bland's rule.  On infeasibility, `farkas` holds y with y^T A <= 0
// componentwise and y^T b > 0 (verified before being reported).
struct LpOutcome {
    bool feasible = false;
    std::vector<Rat> farkas;
    bool farkas_valid = false;
};

LpOutcome lp_phase1(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b);

}  // namespace seidel
