#include "seidel/nonexist.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "seidel/numthy.hpp"

namespace seidel {

namespace {

// disc = s^2 * D with D square-free.
std::pair<Int, Int> square_split(const Int& disc) {
    Int s = 1, rem = disc;
    for (Int p = 2; p * p <= rem; ++p) {
        while (mpz_divisible_p(rem.get_mpz_t(), Int(p * p).get_mpz_t())) {
            rem /= p * p;
            s *= p;
        }
    }
    return {s, rem};
}

std::vector<std::pair<QuadNum, int>> factor_roots(const IntPoly& f, int mult) {
    std::vector<std::pair<QuadNum, int>> out;
    if (f.degree() == 1) {
        out.emplace_back(QuadNum(Rat(-f.coeff(0))), mult);
        return out;
    }
    if (f.degree() == 2) {
        const Int b = f.coeff(1), c = f.coeff(0);
        Int disc = b * b - 4 * c;
        if (sgn(disc) < 0)
            throw std::invalid_argument("SpectrumCandidate: complex eigenvalues in factor " +
                                        f.str());
        if (sgn(disc) == 0) {
            out.emplace_back(QuadNum(make_rat(-b, Int(2))), 2 * mult);
            return out;
        }
        auto [s, d] = square_split(disc);
        if (d == 1) {
            out.emplace_back(QuadNum(make_rat(-b + s, Int(2))), mult);
            out.emplace_back(QuadNum(make_rat(-b - s, Int(2))), mult);
        } else {
            unsigned long rad = d.get_ui();
            out.emplace_back(QuadNum(make_rat(-b, Int(2)), make_rat(s, Int(2)), rad), mult);
            out.emplace_back(QuadNum(make_rat(-b, Int(2)), make_rat(-s, Int(2)), rad), mult);
        }
        return out;
    }
    throw std::invalid_argument(
        "SpectrumCandidate: eigenvalues must be rational or quadratic surds (factor " + f.str() +
        ")");
}

std::string compact_poly(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        const Int& a = p.coeff(i);
        if (sgn(a) == 0) continue;
        Int mag = abs(a);
        if (out.empty()) {
            if (sgn(a) < 0) out += "-";
        } else {
            out += sgn(a) < 0 ? "-" : "+";
        }
        bool show = (mag != 1) || i == 0;
        if (show) out += mag.get_str();
        if (i > 0) {
            out += "x";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

IntPoly parse_compact_poly(const std::string& text) {
    std::map<int, Int> coeffs;
    size_t pos = 0;
    const std::string& s = text;
    auto skip_ws = [&]() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    };
    bool first = true;
    int max_deg = 0;
    while (true) {
        skip_ws();
        if (pos >= s.size()) break;
        int sign = 1;
        if (s[pos] == '+') {
            ++pos;
        } else if (s[pos] == '-') {
            sign = -1;
            ++pos;
        } else if (!first) {
            throw std::invalid_argument("polynomial parse: expected sign in \"" + text + "\"");
        }
        first = false;
        skip_ws();
        std::string digits;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            digits.push_back(s[pos++]);
        skip_ws();
        if (pos < s.size() && s[pos] == '*') {
            ++pos;
            skip_ws();
        }
        Int coeff = digits.empty() ? Int(1) : Int(digits);
        int deg = 0;
        if (pos < s.size() && s[pos] == 'x') {
            ++pos;
            deg = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                std::string d;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                    d.push_back(s[pos++]);
                if (d.empty()) throw std::invalid_argument("polynomial parse: missing exponent");
                deg = std::stoi(d);
            }
        } else if (digits.empty()) {
            throw std::invalid_argument("polynomial parse: bare sign in \"" + text + "\"");
        }
        coeffs[deg] += sign * coeff;
        max_deg = std::max(max_deg, deg);
    }
    if (first) throw std::invalid_argument("polynomial parse: empty input");
    std::vector<Int> c(max_deg + 1, Int(0));
    for (auto& [d, v] : coeffs) c[d] = v;
    return IntPoly(std::move(c));
}

}  // namespace

SpectrumCandidate SpectrumCandidate::from_factors(std::vector<std::pair<IntPoly, int>> factors) {
    SpectrumCandidate s;
    // Merge duplicate factor polynomials.
    std::map<std::vector<Int>, std::pair<IntPoly, int>> merged;
    for (auto& [f, m] : factors) {
        if (!f.is_monic()) throw std::invalid_argument("SpectrumCandidate: factors must be monic");
        if (m <= 0) throw std::invalid_argument("SpectrumCandidate: nonpositive multiplicity");
        auto it = merged.find(f.coeffs());
        if (it == merged.end())
            merged[f.coeffs()] = {f, m};
        else
            it->second.second += m;
    }
    s.chi = IntPoly::constant(1);
    std::vector<std::pair<QuadNum, int>> roots;
    for (auto& [key, fm] : merged) {
        s.factors.push_back(fm);
        for (int i = 0; i < fm.second; ++i) s.chi = s.chi * fm.first;
        for (auto& [lam, m] : factor_roots(fm.first, fm.second)) roots.emplace_back(lam, m);
    }
    std::sort(roots.begin(), roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [lam, m] : roots) {
        if (!s.lambdas.empty() && s.lambdas.back() == lam) {
            s.mults.back() += m;
        } else {
            s.lambdas.push_back(lam);
            s.mults.push_back(m);
        }
    }
    s.order = s.chi.degree();
    return s;
}

SpectrumCandidate SpectrumCandidate::parse(const std::string& text) {
    std::vector<std::pair<IntPoly, int>> factors;
    size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() &&
               (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == '*'))
            ++pos;
        if (pos >= text.size()) break;
        if (text[pos] != '(')
            throw std::invalid_argument("spectrum parse: expected '(' in \"" + text + "\"");
        size_t close = text.find(')', pos);
        if (close == std::string::npos)
            throw std::invalid_argument("spectrum parse: unbalanced parentheses");
        IntPoly f = parse_compact_poly(text.substr(pos + 1, close - pos - 1));
        pos = close + 1;
        int mult = 1;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            std::string d;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                d.push_back(text[pos++]);
            if (d.empty()) throw std::invalid_argument("spectrum parse: missing multiplicity");
            mult = std::stoi(d);
        }
        factors.emplace_back(f, mult);
    }
    if (factors.empty()) throw std::invalid_argument("spectrum parse: no factors");
    return from_factors(std::move(factors));
}

std::string SpectrumCandidate::str() const {
    std::string out;
    for (const auto& [f, m] : factors) {
        if (!out.empty()) out += "*";
        out += "(" + compact_poly(f) + ")";
        if (m > 1) out += "^" + std::to_string(m);
    }
    return out;
}

SubmatrixConstraints submatrix_constraints(const SpectrumCandidate& s) {
    SubmatrixConstraints sc;
    sc.min_poly = IntPoly::constant(1);
    for (const auto& [f, m] : s.factors) sc.min_poly = sc.min_poly * f;
    auto q = exact_div(s.chi, sc.min_poly);
    if (!q) throw std::logic_error("submatrix_constraints: minimal polynomial must divide chi");
    sc.quotient = *q;
    sc.f_degree = sc.min_poly.degree() - 1;
    sc.b1 = sc.min_poly.coeff_from_top(1);
    sc.b2 = sc.min_poly.coeff_from_top(2) + s.order - 1;
    return sc;
}

std::vector<SurdInterval> interlacing_boxes(const SpectrumCandidate& s) {
    std::vector<SurdInterval> boxes;
    for (size_t i = 0; i + 1 < s.lambdas.size(); ++i)
        boxes.emplace_back(s.lambdas[i], s.lambdas[i + 1]);
    return boxes;
}

EnumResult enumerate_submatrix_candidates(const SpectrumCandidate& s, int jobs,
                                          EnumSpec* spec_out) {
    SubmatrixConstraints sc = submatrix_constraints(s);
    EnumSpec spec;
    spec.degree = sc.f_degree;
    spec.fixed[1] = sc.b1;
    if (sc.f_degree >= 2) spec.fixed[2] = sc.b2;
    spec.interval = SurdInterval(s.lambdas.front(), s.lambdas.back());
    spec.boxes = interlacing_boxes(s);
    if (spec_out) *spec_out = spec;
    return enumerate_polynomials(spec, jobs);
}

std::vector<IntPoly> submatrix_congruence_filter(const std::vector<IntPoly>& candidates,
                                                 const SubmatrixConstraints& sc,
                                                 int submatrix_order, const ClassSet* classes) {
    std::vector<IntPoly> out;
    const bool odd_order = (submatrix_order % 2 != 0);
    if (odd_order) {
        if (classes == nullptr)
            throw std::invalid_argument(
                "submatrix_congruence_filter: odd order needs a complete class set");
        if (!classes->complete || classes->n != submatrix_order)
            throw std::invalid_argument(
                "submatrix_congruence_filter: class set incomplete or wrong order");
    }
    for (const IntPoly& f : candidates) {
        IntPoly chi_sub = sc.quotient * f;
        if (chi_sub.degree() != submatrix_order)
            throw std::invalid_argument("submatrix_congruence_filter: degree mismatch");
        bool keep;
        if (odd_order) {
            keep = class_membership(chi_sub, *classes);
        } else {
            IntPoly shifted = chi_sub.taylor_shift(Int(-1));
            keep = true;
            for (int r = 0; r <= shifted.degree() && keep; ++r) {
                if (!mpz_divisible_p(shifted.coeff_from_top(r).get_mpz_t(),
                                     Int(Int(1) << r).get_mpz_t()))
                    keep = false;
            }
        }
        if (keep) out.push_back(f);
    }
    return out;
}

AngleRow angle_row(const SpectrumCandidate& s, const IntPoly& f) {
    AngleRow row;
    QuadNum sum;
    for (size_t i = 0; i < s.lambdas.size(); ++i) {
        QuadNum denom(Rat(1));
        for (size_t j = 0; j < s.lambdas.size(); ++j) {
            if (j == i) continue;
            denom *= s.lambdas[i] - s.lambdas[j];
        }
        QuadNum value = f.eval(s.lambdas[i]) / denom;
        if (value.sign() < 0) {
            row.valid = false;
            row.reject_reason = "negative squared angle at eigenvalue " + s.lambdas[i].str();
        }
        sum += value;
        row.entries.push_back(std::move(value));
    }
    if (!(sum == QuadNum(Rat(1))))
        throw std::logic_error("angle_row: entries do not sum to 1 (implementation bug)");
    return row;
}

std::optional<std::vector<std::pair<IntPoly, int>>> factor_into_eigenvalue_factors(
    const IntPoly& f) {
    std::vector<std::pair<IntPoly, int>> out;
    IntPoly rest = f;
    bool progress = true;
    while (rest.degree() > 2 && progress) {
        progress = false;
        Int c0 = abs(rest.coeff(0));
        if (sgn(c0) == 0) {
            out.emplace_back(IntPoly::linear_root(Int(0)), 1);
            rest = *exact_div(rest, IntPoly::linear_root(Int(0)));
            progress = true;
            continue;
        }
        for (Int r = 1; r * r <= c0 && !progress; ++r) {
            if (!mpz_divisible_p(c0.get_mpz_t(), r.get_mpz_t())) continue;
            const Int pair[2] = {r, Int(c0 / r)};
            for (const Int& cand : pair) {
                for (int sign : {1, -1}) {
                    Int root = sign * cand;
                    if (sgn(rest.eval(root)) == 0) {
                        out.emplace_back(IntPoly::linear_root(root), 1);
                        rest = *exact_div(rest, IntPoly::linear_root(root));
                        progress = true;
                        break;
                    }
                }
                if (progress) break;
            }
        }
    }
    while (rest.degree() >= 1 && rest.degree() <= 2) {
        if (rest.degree() == 1) {
            out.emplace_back(rest, 1);
            rest = IntPoly::constant(1);
            break;
        }
        // Try to split the quadratic into integer linear factors.
        Int b = rest.coeff(1), c = rest.coeff(0);
        Int disc = b * b - 4 * c;
        if (sgn(disc) >= 0) {
            Int sq = isqrt(disc);
            if (sq * sq == disc && mpz_even_p(Int(sq - b).get_mpz_t())) {
                out.emplace_back(IntPoly::linear_root((-b + sq) / 2), 1);
                out.emplace_back(IntPoly::linear_root((-b - sq) / 2), 1);
                rest = IntPoly::constant(1);
                break;
            }
        }
        out.emplace_back(rest, 1);
        rest = IntPoly::constant(1);
        break;
    }
    if (rest.degree() >= 1) return std::nullopt;
    return out;
}

namespace {

nlohmann::json verdict_json(const NonexistenceVerdict& v) {
    nlohmann::json j;
    j["spectrum"] = v.spectrum;
    j["order"] = v.order;
    j["enumerated"] = v.enumerated;
    nlohmann::json surv = nlohmann::json::array();
    for (const IntPoly& p : v.survivors)
        surv.push_back({{"coefficients", p.coeff_strings()}, {"text", p.str()}});
    j["survivors"] = surv;
    nlohmann::json rows = nlohmann::json::array();
    for (const AngleRow& r : v.rows) {
        nlohmann::json e = nlohmann::json::array();
        for (const QuadNum& q : r.entries) e.push_back(q.str());
        rows.push_back({{"entries", e}, {"valid", r.valid}});
    }
    j["rows"] = rows;
    j["feasible"] = v.feasible;
    j["certificate"] = v.certificate;
    nlohmann::json asg = nlohmann::json::array();
    for (const auto& a : v.assignments) {
        nlohmann::json one = nlohmann::json::array();
        for (const Int& x : a) one.push_back(x.get_str());
        asg.push_back(one);
    }
    j["assignments"] = asg;
    j["forced"] = v.forced;
    nlohmann::json subs = nlohmann::json::array();
    for (const NonexistenceVerdict& s : v.sub_verdicts) subs.push_back(verdict_json(s));
    j["sub_verdicts"] = subs;
    j["nonexistent"] = v.nonexistent;
    j["reason"] = v.reason;
    return j;
}

}  // namespace

std::string NonexistenceVerdict::to_json() const { return verdict_json(*this).dump(2); }

NonexistenceVerdict decide_nonexistence(const SpectrumCandidate& s, const VerdictOptions& opt) {
    if (opt.depth < 1) throw std::invalid_argument("decide_nonexistence: depth must be >= 1");
    NonexistenceVerdict v;
    v.spectrum = s.str();
    v.order = s.order;

    SubmatrixConstraints sc = submatrix_constraints(s);
    EnumResult enumerated = enumerate_submatrix_candidates(s, opt.jobs);
    if (!enumerated.diagnostic.empty())
        throw std::logic_error("decide_nonexistence: " + enumerated.diagnostic);
    v.enumerated = enumerated.polys.size();

    const int sub_order = s.order - 1;
    const ClassSet* classes = nullptr;
    if (sub_order % 2 != 0) {
        if (!opt.class_provider)
            throw std::invalid_argument("decide_nonexistence: class provider required");
        classes = opt.class_provider(sub_order);
    }
    v.survivors = submatrix_congruence_filter(enumerated.polys, sc, sub_order, classes);

    FeasibilityProblem problem;
    problem.total = s.order;
    for (int m : s.mults) problem.target.emplace_back(m);
    std::vector<size_t> row_to_survivor;
    for (size_t i = 0; i < v.survivors.size(); ++i) {
        AngleRow row = angle_row(s, v.survivors[i]);
        v.rows.push_back(row);
        if (row.valid) {
            problem.rows.push_back(row.entries);
            row_to_survivor.push_back(i);
        }
    }

    FeasibilityResult feas = solve_feasibility(problem);
    v.feasible = feas.feasible;
    v.certificate = feas.certificate;
    v.assignments = feas.assignments;

    if (!feas.feasible && feas.assignments_complete) {
        v.nonexistent = true;
        v.reason = "angle-row multiplicity system infeasible";
        return v;
    }
    if (!feas.feasible) {
        v.reason = "feasibility search incomplete";
        return v;
    }

    v.forced.assign(v.survivors.size(), false);
    for (size_t k = 0; k < feas.forced_positive.size(); ++k)
        if (feas.forced_positive[k]) v.forced[row_to_survivor[k]] = true;

    if (opt.depth <= 1) {
        v.reason = "feasible and depth budget exhausted";
        return v;
    }
    if (!feas.assignments_complete) {
        v.reason = "assignment enumeration incomplete; no forced submatrix spectra";
        return v;
    }
    for (size_t i = 0; i < v.survivors.size(); ++i) {
        if (!v.forced[i]) continue;
        auto f_factors = factor_into_eigenvalue_factors(v.survivors[i]);
        if (!f_factors) continue;
        std::vector<std::pair<IntPoly, int>> sub_factors = *f_factors;
        for (const auto& [f, m] : s.factors)
            if (m > 1) sub_factors.emplace_back(f, m - 1);
        SpectrumCandidate sub = SpectrumCandidate::from_factors(std::move(sub_factors));
        VerdictOptions sub_opt = opt;
        sub_opt.depth = opt.depth - 1;
        NonexistenceVerdict sv = decide_nonexistence(sub, sub_opt);
        bool closed = sv.nonexistent;
        v.sub_verdicts.push_back(std::move(sv));
        if (closed) {
            v.nonexistent = true;
            v.reason = "a forced submatrix spectrum is itself impossible";
            return v;
        }
    }
    v.reason = "feasible; no forced submatrix spectrum could be excluded";
    return v;
}

}  // namespace seidel
