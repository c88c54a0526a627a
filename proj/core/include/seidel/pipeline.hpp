#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "seidel/intpoly.hpp"
#include "seidel/tpenum.hpp"

namespace seidel {

// Hypothesis: num_lines equiangular lines in R^dimension, i.e. a Seidel
// matrix of order num_lines whose smallest eigenvalue is lambda_min with
// multiplicity num_lines - dimension.
struct LineHypothesis {
    int num_lines = 0;
    int dimension = 0;
    Int lambda_min = 0;  // odd negative integer
    int multiplicity = 0;
};

// Derived spectral data for the residual eigenvalues: their sum and sum of
// squares, the integer center, the centered square residual (the trace of
// the target totally positive polynomial), and the trace-minus-degree
// slack available to its factors.
struct SpectralBudget {
    int dimension = 0;
    Int residual_trace = 0;
    Int residual_square = 0;
    Int center = 0;
    Int residual = 0;
    Int g_trace = 0;
    Int slack = 0;
    bool center_safe = false;  // the method needs a center that cannot be an eigenvalue
    std::string obstruction;
};

SpectralBudget derive_budget(const LineHypothesis& h);

// Strata of irreducible totally positive candidates for the factors of the
// centered polynomial, keyed by (degree, slack); irr/red split by whether
// p(x^2) stays irreducible.  `pool` keeps the full enumerated strata for
// trial division.
struct FactorCatalog {
    std::map<std::pair<int, int>, std::vector<IntPoly>> irr;
    std::map<std::pair<int, int>, std::vector<IntPoly>> red;
    FactorPool pool;

    long irr_count(int d, int k) const;
    long red_count(int d, int k) const;
};

struct CatalogOptions {
    int max_irr_degree = 5;
    int max_irr_slack = 4;
    int max_red_degree = 10;
    int max_red_slack = 8;
    std::string cache_dir;  // empty: no caching
    int jobs = 1;
};

FactorCatalog build_catalog(const CatalogOptions& opt = {});

// One candidate for the centered polynomial: the product and the catalog
// units it was assembled from (unit = g^2 for an irr factor g, g itself
// for a red factor).
struct CatalogUnit {
    IntPoly base;
    bool from_irr = false;
    int degree = 0;
    int trace = 0;
};

struct GCandidate {
    IntPoly poly;
    std::vector<std::pair<CatalogUnit, int>> units;  // unit, multiplicity
};

std::vector<GCandidate> assemble_g_candidates(const FactorCatalog& catalog,
                                              const SpectralBudget& budget);

// Lift every G candidate to full characteristic-polynomial candidates:
// each red unit picks a factor of base((x-c)^2), each irr unit contributes
// base((x-c)^2) once, products are filtered by the forced top three
// coefficients, and the smallest eigenvalue block is attached.
std::vector<IntPoly> lift_to_charpolys(const std::vector<GCandidate>& gs,
                                       const SpectralBudget& budget, const LineHypothesis& h);

// Keep candidates whose shift by -1 has every coefficient a_r divisible by
// 2^r (order must be even).
std::vector<IntPoly> final_parity_filter(const std::vector<IntPoly>& candidates);

struct PipelineReport {
    LineHypothesis hypothesis;
    SpectralBudget budget;
    std::map<std::string, long> catalog_counts;
    long g_count = 0;
    long candidate_count = 0;
    std::vector<IntPoly> survivors;
    std::int64_t wall_ms = 0;
    std::string to_json() const;
};

struct PipelineOptions {
    CatalogOptions catalog;
};

PipelineReport run_pipeline(const LineHypothesis& h, const PipelineOptions& opt = {});

}  // namespace seidel
