#include "seidel/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <future>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "seidel/sign_split.hpp"

namespace seidel {

SpectralBudget derive_budget(const LineHypothesis& h) {
    if (h.num_lines <= h.dimension || h.dimension < 1)
        throw std::invalid_argument("derive_budget: need num_lines > dimension >= 1");
    if (h.multiplicity != h.num_lines - h.dimension)
        throw std::invalid_argument("derive_budget: multiplicity must equal num_lines - dimension");
    if (sgn(h.lambda_min) >= 0 || mpz_even_p(h.lambda_min.get_mpz_t()))
        throw std::invalid_argument("derive_budget: smallest eigenvalue must be a negative odd integer");

    SpectralBudget b;
    b.dimension = h.dimension;
    const Int n(h.num_lines), m(h.multiplicity);
    b.residual_trace = -m * h.lambda_min;
    b.residual_square = n * (n - 1) - m * h.lambda_min * h.lambda_min;

    // Integer center nearest to the residual mean; a tie has no canonical
    // choice and is reported as an obstruction.
    Int two_sum = 2 * b.residual_trace;
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), two_sum.get_mpz_t(), Int(2 * h.dimension).get_mpz_t());
    Int rem2 = r;  // two_sum mod 2*dim in [0, 2 dim)
    if (rem2 == Int(h.dimension)) {
        b.obstruction = "residual mean is a half-integer; no nearest integer center";
        b.center = q;
    } else {
        b.center = (rem2 < Int(h.dimension)) ? q : q + 1;
    }
    b.residual = b.residual_square - 2 * b.center * b.residual_trace +
                 Int(h.dimension) * b.center * b.center;
    b.g_trace = b.residual;
    b.slack = b.g_trace - h.dimension;

    if (b.obstruction.empty()) {
        if (sgn(b.residual) == 0) {
            b.obstruction = "zero residual: every eigenvalue equals the center";
        } else if (h.num_lines % 2 != 0) {
            b.obstruction = "odd order: the center could itself be an eigenvalue";
        } else if (mpz_odd_p(b.center.get_mpz_t())) {
            b.obstruction =
                "odd center with even order: the center could itself be an eigenvalue";
        } else if (sgn(b.slack) < 0) {
            b.obstruction = "negative slack: no totally positive candidate exists";
        } else {
            b.center_safe = true;
        }
    }
    return b;
}

long FactorCatalog::irr_count(int d, int k) const {
    auto it = irr.find({d, k});
    return it == irr.end() ? 0 : static_cast<long>(it->second.size());
}

long FactorCatalog::red_count(int d, int k) const {
    auto it = red.find({d, k});
    return it == red.end() ? 0 : static_cast<long>(it->second.size());
}

namespace {

std::string stratum_cache_path(const std::string& dir, int d, int t) {
    return dir + "/tset_d" + std::to_string(d) + "_t" + std::to_string(t) + ".json";
}

bool load_stratum(const std::string& path, int d, int t, std::vector<IntPoly>& out) {
    std::ifstream in(path);
    if (!in) return false;
    nlohmann::json j;
    try {
        in >> j;
        if (j.value("format", 0) != 1 || j.at("d").get<int>() != d || j.at("t").get<int>() != t)
            return false;
        std::vector<IntPoly> polys;
        for (const auto& c : j.at("polys"))
            polys.push_back(IntPoly::from_coeff_strings(c.get<std::vector<std::string>>()));
        // Light re-validation: monic, right degree and trace, parity profile.
        for (const IntPoly& p : polys) {
            if (!p.is_monic() || p.degree() != d || p.coeff_from_top(1) != -t ||
                !has_binomial_parity(p))
                return false;
        }
        out = std::move(polys);
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

void save_stratum(const std::string& path, int d, int t, const std::vector<IntPoly>& polys) {
    nlohmann::json j;
    j["format"] = 1;
    j["d"] = d;
    j["t"] = t;
    nlohmann::json arr = nlohmann::json::array();
    for (const IntPoly& p : polys) arr.push_back(p.coeff_strings());
    j["polys"] = arr;
    std::ofstream out(path);
    if (out) out << j.dump() << "\n";
}

// The full (degree, trace) stratum: all totally positive monic integer
// polynomials with the binomial parity profile (distinct roots; repeated
// roots cannot occur in an irreducible factor and are not needed for trial
// division either).
std::vector<IntPoly> enumerate_stratum(int d, int t, const std::string& cache_dir, int jobs) {
    if (!mckee_admissible(d, t)) return {};
    if (!cache_dir.empty()) {
        std::vector<IntPoly> cached;
        if (load_stratum(stratum_cache_path(cache_dir, d, t), d, t, cached)) return cached;
    }
    EnumSpec spec = EnumSpec::trace_stratum(
        d, t, SurdInterval(QuadNum(0), QuadNum(Rat(t))), /*binomial_parity=*/true,
        /*require_distinct=*/true);
    EnumResult res = enumerate_polynomials(spec, jobs);
    if (!res.diagnostic.empty())
        throw std::logic_error("enumerate_stratum: " + res.diagnostic);
    if (!cache_dir.empty()) {
        std::filesystem::create_directories(cache_dir);
        save_stratum(stratum_cache_path(cache_dir, d, t), d, t, res.polys);
    }
    return res.polys;
}

}  // namespace

FactorCatalog build_catalog(const CatalogOptions& opt) {
    FactorCatalog catalog;
    const int max_degree = std::max(opt.max_irr_degree, opt.max_red_degree);
    const int max_slack = std::max(opt.max_irr_slack, opt.max_red_slack);

    for (int d = 1; d <= max_degree; ++d) {
        // Small degrees: strata of one degree in parallel.  Large degrees:
        // strata sequential, parallelism inside each tree search instead.
        // Classification only ever reads lower-degree pool strata.
        const bool inner_parallel = d >= 7;
        std::vector<int> slacks;
        for (int k = 0; k <= max_slack; k += 2) slacks.push_back(k);
        std::vector<std::future<std::vector<IntPoly>>> futs;
        for (int k : slacks) {
            int inner_jobs = inner_parallel ? opt.jobs : 1;
            futs.push_back(std::async(
                (opt.jobs > 1 && !inner_parallel) ? std::launch::async : std::launch::deferred,
                [&, d, k, inner_jobs]() {
                    return enumerate_stratum(d, d + k, opt.cache_dir, inner_jobs);
                }));
        }
        for (size_t idx = 0; idx < slacks.size(); ++idx) {
            int k = slacks[idx];
            std::vector<IntPoly> stratum = futs[idx].get();
            catalog.pool.strata[{d, d + k}] = stratum;
            for (const IntPoly& p : stratum) {
                Classification c = classify_irreducible(catalog.pool, p);
                if (!c.irreducible) continue;
                bool splits = !is_x2_irreducible(p);
                if (splits) {
                    if (d <= opt.max_red_degree && k <= opt.max_red_slack)
                        catalog.red[{d, k}].push_back(p);
                } else {
                    if (d <= opt.max_irr_degree && k <= opt.max_irr_slack)
                        catalog.irr[{d, k}].push_back(p);
                }
            }
        }
    }
    return catalog;
}

std::vector<GCandidate> assemble_g_candidates(const FactorCatalog& catalog,
                                              const SpectralBudget& budget) {
    if (!budget.g_trace.fits_sint_p())
        throw std::invalid_argument("assemble_g_candidates: trace too large");
    const int dim = budget.dimension;
    const int target_trace = static_cast<int>(budget.g_trace.get_si());

    std::vector<CatalogUnit> units;
    for (const auto& [key, polys] : catalog.irr)
        for (const IntPoly& g : polys)
            units.push_back(CatalogUnit{g, true, 2 * key.first, 2 * (key.first + key.second)});
    for (const auto& [key, polys] : catalog.red)
        for (const IntPoly& g : polys)
            units.push_back(CatalogUnit{g, false, key.first, key.first + key.second});

    std::vector<GCandidate> out;
    std::vector<std::pair<CatalogUnit, int>> chosen;

    // Multiset knapsack on (degree, trace).
    std::function<void(size_t, int, int)> rec = [&](size_t idx, int deg_left, int tr_left) {
        if (deg_left == 0) {
            if (tr_left != 0) return;
            GCandidate g;
            g.poly = IntPoly::constant(1);
            for (const auto& [unit, mult] : chosen) {
                IntPoly base = unit.from_irr ? unit.base * unit.base : unit.base;
                for (int i = 0; i < mult; ++i) g.poly = g.poly * base;
            }
            g.units = chosen;
            out.push_back(std::move(g));
            return;
        }
        if (idx == units.size()) return;
        // Slack still needed cannot exceed slack still available.
        if (tr_left < deg_left) return;
        const CatalogUnit& u = units[idx];
        rec(idx + 1, deg_left, tr_left);
        int max_mult = std::min(deg_left / u.degree, tr_left / u.trace);
        for (int m = 1; m <= max_mult; ++m) {
            chosen.emplace_back(u, m);
            rec(idx + 1, deg_left - m * u.degree, tr_left - m * u.trace);
            chosen.pop_back();
        }
    };
    rec(0, dim, target_trace);

    std::sort(out.begin(), out.end(),
              [](const GCandidate& a, const GCandidate& b) { return a.poly < b.poly; });
    // Distinct products: unique factorization makes collisions impossible,
    // but deduplicate defensively.
    out.erase(std::unique(out.begin(), out.end(),
                          [](const GCandidate& a, const GCandidate& b) { return a.poly == b.poly; }),
              out.end());
    return out;
}

namespace {

void lift_units(const std::vector<std::pair<CatalogUnit, int>>& units, size_t idx,
                const Int& center, const IntPoly& partial,
                std::vector<std::vector<IntPoly>>& option_cache, std::vector<IntPoly>& out) {
    if (idx == units.size()) {
        out.push_back(partial);
        return;
    }
    const auto& [unit, mult] = units[idx];
    if (unit.from_irr) {
        IntPoly lifted = unit.base.compose_square_shift(center);
        IntPoly acc = partial;
        for (int i = 0; i < mult; ++i) acc = acc * lifted;
        lift_units(units, idx + 1, center, acc, option_cache, out);
        return;
    }
    const std::vector<IntPoly>& options = option_cache[idx];
    // Multiset choices over the options, one per copy.
    std::vector<int> pick(mult, 0);
    std::function<void(int, int, const IntPoly&)> rec = [&](int copy, int min_opt,
                                                            const IntPoly& acc) {
        if (copy == mult) {
            lift_units(units, idx + 1, center, acc, option_cache, out);
            return;
        }
        for (int o = min_opt; o < static_cast<int>(options.size()); ++o)
            rec(copy + 1, o, acc * options[o]);
    };
    rec(0, 0, partial);
}

}  // namespace

std::vector<IntPoly> lift_to_charpolys(const std::vector<GCandidate>& gs,
                                       const SpectralBudget& budget, const LineHypothesis& h) {
    const Int c = budget.center;
    const Int e1 = budget.residual_trace;
    const Int e2 = (budget.residual_trace * budget.residual_trace - budget.residual_square) / 2;

    std::set<std::vector<Int>> seen;
    std::vector<IntPoly> survivors;
    for (const GCandidate& g : gs) {
        std::vector<std::vector<IntPoly>> option_cache(g.units.size());
        for (size_t i = 0; i < g.units.size(); ++i) {
            if (!g.units[i].first.from_irr) {
                option_cache[i] = sign_split_factor(g.units[i].first.base, c);
                if (option_cache[i].empty())
                    throw std::logic_error("lift_to_charpolys: red factor failed to split");
            }
        }
        std::vector<IntPoly> lifted;
        lift_units(g.units, 0, c, IntPoly::constant(1), option_cache, lifted);
        for (const IntPoly& p : lifted) {
            if (p.degree() != budget.dimension) continue;
            if (p.coeff_from_top(1) != -e1 || p.coeff_from_top(2) != e2) continue;
            if (!seen.insert(p.coeffs()).second) continue;
            IntPoly block = IntPoly::linear_root(h.lambda_min);
            IntPoly full = p;
            for (int i = 0; i < h.multiplicity; ++i) full = full * block;
            survivors.push_back(full);
        }
    }
    std::sort(survivors.begin(), survivors.end());
    return survivors;
}

std::vector<IntPoly> final_parity_filter(const std::vector<IntPoly>& candidates) {
    std::vector<IntPoly> out;
    for (const IntPoly& c : candidates) {
        IntPoly shifted = c.taylor_shift(Int(-1));  // c(x-1)
        bool ok = true;
        for (int r = 0; r <= shifted.degree() && ok; ++r) {
            const Int& a = shifted.coeff_from_top(r);
            if (!mpz_divisible_p(a.get_mpz_t(), Int(Int(1) << r).get_mpz_t())) ok = false;
        }
        if (ok) out.push_back(c);
    }
    return out;
}

std::string PipelineReport::to_json() const {
    nlohmann::json j;
    j["hypothesis"] = {{"num_lines", hypothesis.num_lines},
                       {"dimension", hypothesis.dimension},
                       {"lambda_min", hypothesis.lambda_min.get_str()},
                       {"multiplicity", hypothesis.multiplicity}};
    j["budget"] = {{"residual_trace", budget.residual_trace.get_str()},
                   {"residual_square", budget.residual_square.get_str()},
                   {"center", budget.center.get_str()},
                   {"residual", budget.residual.get_str()},
                   {"slack", budget.slack.get_str()},
                   {"center_safe", budget.center_safe},
                   {"obstruction", budget.obstruction}};
    j["catalog_counts"] = catalog_counts;
    j["g_count"] = g_count;
    j["candidate_count"] = candidate_count;
    nlohmann::json s = nlohmann::json::array();
    for (const IntPoly& p : survivors) s.push_back(p.coeff_strings());
    j["survivors"] = s;
    j["wall_ms"] = wall_ms;
    return j.dump(2);
}

PipelineReport run_pipeline(const LineHypothesis& h, const PipelineOptions& opt) {
    auto start = std::chrono::steady_clock::now();
    PipelineReport report;
    report.hypothesis = h;
    report.budget = derive_budget(h);
    if (!report.budget.center_safe)
        throw std::runtime_error("run_pipeline: unsupported hypothesis: " +
                                 report.budget.obstruction);

    FactorCatalog catalog = build_catalog(opt.catalog);
    for (const auto& [key, polys] : catalog.irr)
        if (!polys.empty())
            report.catalog_counts["irr(" + std::to_string(key.first) + "," +
                                  std::to_string(key.second) + ")"] =
                static_cast<long>(polys.size());
    for (const auto& [key, polys] : catalog.red)
        if (!polys.empty())
            report.catalog_counts["red(" + std::to_string(key.first) + "," +
                                  std::to_string(key.second) + ")"] =
                static_cast<long>(polys.size());

    std::vector<GCandidate> gs = assemble_g_candidates(catalog, report.budget);
    report.g_count = static_cast<long>(gs.size());
    std::vector<IntPoly> candidates = lift_to_charpolys(gs, report.budget, h);
    report.candidate_count = static_cast<long>(candidates.size());
    report.survivors = final_parity_filter(candidates);
    report.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return report;
}

}  // namespace seidel
