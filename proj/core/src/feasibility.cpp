#include "seidel/feasibility.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace seidel {

namespace {

struct LinearSystem {
    std::vector<std::vector<Rat>> a;  // equations x coefficients
    std::vector<Rat> b;
};

LinearSystem build_system(const FeasibilityProblem& p) {
    const size_t cols = p.rows.size();
    const size_t m = p.target.size();
    for (const auto& row : p.rows)
        if (row.size() != m)
            throw std::invalid_argument("feasibility: row length does not match target");
    LinearSystem sys;
    for (size_t i = 0; i < m; ++i) {
        std::vector<Rat> rational(cols), surd(cols);
        bool any_surd = false;
        for (size_t j = 0; j < cols; ++j) {
            rational[j] = p.rows[j][i].rational_part();
            surd[j] = p.rows[j][i].surd_part();
            if (sgn(surd[j]) != 0) any_surd = true;
        }
        sys.a.push_back(std::move(rational));
        sys.b.emplace_back(p.target[i]);
        if (any_surd) {
            sys.a.push_back(std::move(surd));
            sys.b.emplace_back(0);
        }
    }
    sys.a.push_back(std::vector<Rat>(cols, Rat(1)));
    sys.b.emplace_back(p.total);
    return sys;
}

std::string rat_str(const Rat& q) {
    std::string s = q.get_num().get_str();
    if (q.get_den() != 1) s += "/" + q.get_den().get_str();
    return s;
}

}  // namespace

LpOutcome lp_phase1(const std::vector<std::vector<Rat>>& a_in, const std::vector<Rat>& b_in) {
    const size_t m = a_in.size(), n = a_in.empty() ? 0 : a_in[0].size();
    // Normalize to b >= 0, remembering flipped rows.
    std::vector<std::vector<Rat>> a = a_in;
    std::vector<Rat> b = b_in;
    std::vector<int> flip(m, 1);
    for (size_t i = 0; i < m; ++i) {
        if (sgn(b[i]) < 0) {
            flip[i] = -1;
            b[i] = -b[i];
            for (Rat& v : a[i]) v = -v;
        }
    }
    // Tableau: columns = n original + m artificial; basis starts artificial.
    const size_t total_cols = n + m;
    std::vector<std::vector<Rat>> t(m, std::vector<Rat>(total_cols + 1, Rat(0)));
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
        t[i][n + i] = 1;
        t[i][total_cols] = b[i];
    }
    std::vector<size_t> basis(m);
    for (size_t i = 0; i < m; ++i) basis[i] = n + i;
    // Reduced cost row for min sum(artificials): z_j - c_j.
    std::vector<Rat> cost(total_cols + 1, Rat(0));
    for (size_t j = 0; j <= total_cols; ++j) {
        Rat s = 0;
        for (size_t i = 0; i < m; ++i) s += t[i][j];
        cost[j] = s;  // sum of basic (artificial) rows
    }
    for (size_t j = n; j < total_cols; ++j) cost[j] -= 1;

    auto pivot = [&](size_t pr, size_t pc) {
        Rat piv = t[pr][pc];
        for (Rat& v : t[pr]) v /= piv;
        for (size_t i = 0; i < m; ++i) {
            if (i == pr || sgn(t[i][pc]) == 0) continue;
            Rat f = t[i][pc];
            for (size_t j = 0; j <= total_cols; ++j) t[i][j] -= f * t[pr][j];
        }
        if (sgn(cost[pc]) != 0) {
            Rat f = cost[pc];
            for (size_t j = 0; j <= total_cols; ++j) cost[j] -= f * t[pr][j];
        }
        basis[pr] = pc;
    };

    while (true) {
        // Bland: smallest index with positive reduced cost (maximizing -sum).
        size_t enter = total_cols;
        for (size_t j = 0; j < total_cols; ++j) {
            if (sgn(cost[j]) > 0) {
                enter = j;
                break;
            }
        }
        if (enter == total_cols) break;
        size_t leave = m;
        Rat best;
        for (size_t i = 0; i < m; ++i) {
            if (sgn(t[i][enter]) <= 0) continue;
            Rat ratio = t[i][total_cols] / t[i][enter];
            if (leave == m || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) break;  // unbounded cannot happen in phase 1
        pivot(leave, enter);
    }

    LpOutcome out;
    Rat objective = cost[total_cols];
    if (sgn(objective) == 0) {
        out.feasible = true;
        return out;
    }
    // cost[j] holds z_j - c_j; the artificial column i is e_i after flips,
    // so z_j = y_i and c_j = 1, giving y_i = cost[n+i] + 1.  Mapped back
    // through the row flips and verified explicitly before use.
    std::vector<Rat> y(m);
    for (size_t i = 0; i < m; ++i) y[i] = Rat(flip[i]) * (cost[n + i] + 1);
    bool ok = true;
    for (size_t j = 0; j < n && ok; ++j) {
        Rat s = 0;
        for (size_t i = 0; i < m; ++i) s += y[i] * a_in[i][j];
        if (sgn(s) > 0) ok = false;
    }
    Rat yb = 0;
    for (size_t i = 0; i < m; ++i) yb += y[i] * b_in[i];
    if (sgn(yb) <= 0) ok = false;
    out.feasible = false;
    out.farkas = std::move(y);
    out.farkas_valid = ok;
    return out;
}

FeasibilityResult solve_feasibility(const FeasibilityProblem& p) {
    FeasibilityResult result;
    const size_t cols = p.rows.size();
    if (cols == 0) {
        result.feasible = (sgn(p.total) == 0);
        bool all_zero = true;
        for (const Int& t : p.target) all_zero = all_zero && sgn(t) == 0;
        result.feasible = result.feasible && all_zero;
        result.assignments_complete = true;
        if (result.feasible) result.assignments.push_back({});
        else result.certificate = "no columns and nonzero totals";
        return result;
    }
    // A coordinate hit by exactly one row pins that row's count outright.
    for (size_t i = 0; i < p.target.size(); ++i) {
        size_t nonzero = 0, who = 0;
        for (size_t j = 0; j < cols; ++j)
            if (p.rows[j][i].sign() != 0) {
                ++nonzero;
                who = j;
            }
        if (nonzero == 0 && sgn(p.target[i]) != 0) {
            result.feasible = false;
            result.assignments_complete = true;
            result.certificate = "coordinate " + std::to_string(i + 1) +
                                 " has zero in every row but a nonzero target";
            return result;
        }
        if (nonzero != 1) continue;
        QuadNum required = QuadNum(Rat(p.target[i])) / p.rows[who][i];
        bool bad = !required.is_rational() || !is_integer(required.rational_part()) ||
                   sgn(required.rational_part()) < 0 ||
                   rat_num(required.rational_part()) > p.total;
        if (bad) {
            result.feasible = false;
            result.assignments_complete = true;
            std::ostringstream os;
            os << "coordinate " << (i + 1) << " forces n_" << (who + 1) << " = ";
            if (required.is_rational())
                os << rat_str(required.rational_part());
            else
                os << required.str();
            os << ", impossible with total " << p.total.get_str();
            result.certificate = os.str();
            return result;
        }
    }

    LinearSystem sys = build_system(p);
    const size_t m = sys.a.size();

    // Reduced row echelon form with multiplier tracking for certificates.
    std::vector<std::vector<Rat>> r = sys.a;
    std::vector<Rat> rb = sys.b;
    std::vector<std::vector<Rat>> mult(m, std::vector<Rat>(m, Rat(0)));
    for (size_t i = 0; i < m; ++i) mult[i][i] = 1;
    std::vector<int> pivot_col;
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < m; ++col) {
        size_t sel = m;
        for (size_t i = rank; i < m; ++i)
            if (sgn(r[i][col]) != 0) {
                sel = i;
                break;
            }
        if (sel == m) continue;
        std::swap(r[rank], r[sel]);
        std::swap(rb[rank], rb[sel]);
        std::swap(mult[rank], mult[sel]);
        Rat piv = r[rank][col];
        for (Rat& v : r[rank]) v /= piv;
        rb[rank] /= piv;
        for (Rat& v : mult[rank]) v /= piv;
        for (size_t i = 0; i < m; ++i) {
            if (i == rank || sgn(r[i][col]) == 0) continue;
            Rat f = r[i][col];
            for (size_t j = 0; j < cols; ++j) r[i][j] -= f * r[rank][j];
            rb[i] -= f * rb[rank];
            for (size_t j = 0; j < m; ++j) mult[i][j] -= f * mult[rank][j];
        }
        pivot_col.push_back(static_cast<int>(col));
        ++rank;
    }
    for (size_t i = rank; i < m; ++i) {
        if (sgn(rb[i]) != 0) {
            // 0 = nonzero: the multiplier row is a verified certificate.
            std::ostringstream os;
            os << "inconsistent equations; combination y with y^T A = 0, y^T b = "
               << rat_str(rb[i]) << ": [";
            for (size_t j = 0; j < m; ++j) os << (j ? "," : "") << rat_str(mult[i][j]);
            os << "]";
            result.feasible = false;
            result.assignments_complete = true;
            result.certificate = os.str();
            return result;
        }
    }

    LpOutcome lp = lp_phase1(sys.a, sys.b);
    if (!lp.feasible) {
        std::ostringstream os;
        os << "rational relaxation infeasible";
        if (lp.farkas_valid) {
            os << "; Farkas certificate y = [";
            for (size_t i = 0; i < lp.farkas.size(); ++i)
                os << (i ? "," : "") << rat_str(lp.farkas[i]);
            os << "] with y^T A <= 0, y^T b > 0";
        }
        result.feasible = false;
        result.assignments_complete = true;
        result.certificate = os.str();
        return result;
    }

    // Parametrized integer search over the free columns.
    std::vector<int> is_pivot(cols, -1);
    for (size_t i = 0; i < pivot_col.size(); ++i) is_pivot[pivot_col[i]] = static_cast<int>(i);
    std::vector<int> free_cols;
    for (size_t j = 0; j < cols; ++j)
        if (is_pivot[j] < 0) free_cols.push_back(static_cast<int>(j));

    const Int cap = p.total;
    std::vector<Int> free_vals(free_cols.size(), 0);
    std::uint64_t nodes = 0;
    const std::uint64_t node_budget = 200000000ULL;
    bool complete = true;

    std::function<void(size_t, Int)> dfs = [&](size_t idx, Int used) {
        if (!complete) return;
        if (++nodes > node_budget) {
            complete = false;
            return;
        }
        if (idx == free_cols.size()) {
            std::vector<Int> x(cols, 0);
            for (size_t f = 0; f < free_cols.size(); ++f) x[free_cols[f]] = free_vals[f];
            for (size_t i = 0; i < rank; ++i) {
                Rat v(rb[i]);
                for (int fc : free_cols) v -= r[i][fc] * Rat(x[fc]);
                if (!is_integer(v) || sgn(v) < 0) return;
                x[pivot_col[i]] = rat_num(v);
                if (x[pivot_col[i]] > cap) return;
            }
            result.assignments.push_back(std::move(x));
            return;
        }
        for (Int v = 0; used + v <= cap; ++v) {
            free_vals[idx] = v;
            dfs(idx + 1, used + v);
        }
        free_vals[idx] = 0;
    };
    dfs(0, Int(0));

    result.assignments_complete = complete;
    result.feasible = !result.assignments.empty();
    if (!result.feasible) {
        result.certificate = complete
                                 ? "no nonnegative integer solution (exhaustive bounded search)"
                                 : "search budget exhausted before any solution was found";
    } else {
        result.forced_positive.assign(cols, true);
        for (const auto& x : result.assignments)
            for (size_t j = 0; j < cols; ++j)
                if (sgn(x[j]) == 0) result.forced_positive[j] = false;
        if (!complete) result.forced_positive.assign(cols, false);
    }
    return result;
}

}  // namespace seidel
