#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "seidel/class_set.hpp"
#include "seidel/feasibility.hpp"
#include "seidel/intpoly.hpp"
#include "seidel/quadnum.hpp"
#include "seidel/sturm.hpp"
#include "seidel/tpenum.hpp"

namespace seidel {

// A fully factored candidate spectrum: irreducible (degree <= 2) integer
// factors with multiplicities, plus the sorted distinct eigenvalues as
// exactly representable numbers.
struct SpectrumCandidate {
    int order = 0;
    std::vector<std::pair<IntPoly, int>> factors;
    std::vector<QuadNum> lambdas;  // ascending
    std::vector<int> mults;        // parallel to lambdas
    IntPoly chi;

    static SpectrumCandidate from_factors(std::vector<std::pair<IntPoly, int>> factors);
    // Accepts e.g. "(x+5)^33*(x-9)^12*(x-11)^4*(x-13)".
    static SpectrumCandidate parse(const std::string& text);
    std::string str() const;
};

// Minimal polynomial, the forced quotient of chi_{S'}, and the pinned top
// coefficients of the unknown interlacing factor f (b_0 = 1, b_1 = a_1,
// b_2 = a_2 + n - 1 where a_i are the minimal-polynomial coefficients).
struct SubmatrixConstraints {
    IntPoly min_poly;
    IntPoly quotient;
    int f_degree = 0;
    Int b1 = 0, b2 = 0;
};

SubmatrixConstraints submatrix_constraints(const SpectrumCandidate& s);

// Closed intervals between consecutive distinct eigenvalues: after the
// forced quotient roots are removed, interlacing confines the i-th
// remaining root of f to the i-th interval.
std::vector<SurdInterval> interlacing_boxes(const SpectrumCandidate& s);

EnumResult enumerate_submatrix_candidates(const SpectrumCandidate& s, int jobs = 1,
                                          EnumSpec* spec_out = nullptr);

// Congruence sieve on chi_{S'} = quotient * f.  Odd submatrix order:
// membership in the complete class set mod 2^e.  Even submatrix order: the
// shift-by-one coefficient divisibility 2^r | a_r.
std::vector<IntPoly> submatrix_congruence_filter(const std::vector<IntPoly>& candidates,
                                                 const SubmatrixConstraints& sc,
                                                 int submatrix_order, const ClassSet* classes);

// Row of the angle matrix induced by a candidate interlacing factor:
// alpha^2_i = f(lambda_i) / prod_{j != i} (lambda_i - lambda_j).  The sum
// is checked to be exactly 1; a negative entry invalidates the candidate.
struct AngleRow {
    std::vector<QuadNum> entries;
    bool valid = true;
    std::string reject_reason;
};

AngleRow angle_row(const SpectrumCandidate& s, const IntPoly& f);

struct VerdictOptions {
    int depth = 2;
    int jobs = 1;
    unsigned class_exponent = 5;
    // Supplies a complete ClassSet for a given odd submatrix order.
    std::function<const ClassSet*(int order)> class_provider;
};

struct NonexistenceVerdict {
    std::string spectrum;
    int order = 0;
    std::uint64_t enumerated = 0;
    std::vector<IntPoly> survivors;
    std::vector<AngleRow> rows;
    bool feasible = false;
    std::string certificate;
    std::vector<std::vector<Int>> assignments;
    std::vector<bool> forced;
    std::vector<NonexistenceVerdict> sub_verdicts;
    bool nonexistent = false;
    std::string reason;

    std::string to_json() const;
};

NonexistenceVerdict decide_nonexistence(const SpectrumCandidate& s, const VerdictOptions& opt);

// Integer/quadratic factorization of a monic polynomial by rational-root
// extraction, for spectra arising in recursion; nullopt when a factor of
// degree >= 3 remains.
std::optional<std::vector<std::pair<IntPoly, int>>> factor_into_eigenvalue_factors(
    const IntPoly& f);

}  // namespace seidel
