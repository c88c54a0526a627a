#include "seidel/sign_split.hpp"

#include <algorithm>
#include <stdexcept>

#include "seidel/numthy.hpp"
#include "seidel/qinterval.hpp"
#include "seidel/sturm.hpp"

namespace seidel {

namespace {

// Rational lower/upper bounds for sqrt on a nonnegative interval, to about
// `bits` fractional bits.
QInterval sqrt_enclosure(const QInterval& x, unsigned bits) {
    Int scale = Int(1) << bits;
    Int sq = scale * scale;
    Rat lo = x.lo < 0 ? Rat(0) : x.lo;
    Int t_lo = floor_rat(Rat(sq) * lo);
    Int t_hi = ceil_rat(Rat(sq) * x.hi);
    Rat r_lo = make_rat(isqrt(t_lo), scale);
    Rat r_hi = make_rat(isqrt(t_hi) + 1, scale);
    return {r_lo, r_hi};
}

// Coefficient enclosures of prod (x - root_i) by incremental expansion.
std::vector<QInterval> product_coefficients(const std::vector<QInterval>& roots) {
    std::vector<QInterval> c{QInterval::point(1)};
    for (const QInterval& r : roots) {
        std::vector<QInterval> next(c.size() + 1);
        for (size_t i = 0; i < c.size(); ++i) {
            next[i + 1] = next[i + 1] + c[i];
            next[i] = next[i] - r * c[i];
        }
        c = std::move(next);
    }
    return c;
}

}  // namespace

std::vector<IntPoly> sign_split_factor(const IntPoly& g, const Int& c) {
    if (!g.is_monic()) throw std::invalid_argument("sign_split_factor: g must be monic");
    const int d = g.degree();
    IntPoly target = g.compose_square_shift(c);
    std::vector<IntPoly> found;
    if (d == 0) return found;
    if (d > 20) throw std::invalid_argument("sign_split_factor: degree too large");

    Int bound = cauchy_root_bound(g);
    std::vector<RatInterval> base =
        isolate_roots(g, Rat(0), Rat(bound), make_rat(1, Int(1) << 16));
    if (static_cast<int>(base.size()) != d)
        throw std::invalid_argument("sign_split_factor: g is not totally positive and square-free");

    const Rat quarter = make_rat(1, 4);
    auto chain = sturm_chain(g);

    for (unsigned bits = 64; bits <= 16384; bits *= 2) {
        Rat width = make_rat(1, Int(1) << bits);
        for (auto& iv : base) refine_enclosure(chain, g, iv, width);
        std::vector<QInterval> sqrts(d);
        for (int i = 0; i < d; ++i)
            sqrts[i] = sqrt_enclosure(QInterval(base[i].lo, base[i].hi), bits);

        found.clear();
        bool need_more_precision = false;
        // Sign patterns with the first root fixed to +: the complementary
        // pattern yields the cofactor, added after exact verification.
        for (std::uint64_t pattern = 0; pattern < (std::uint64_t(1) << (d - 1)); ++pattern) {
            std::vector<QInterval> roots(d);
            for (int i = 0; i < d; ++i) {
                bool plus = (i == 0) || !((pattern >> (i - 1)) & 1u);
                QInterval s = plus ? sqrts[i] : -sqrts[i];
                roots[i] = QInterval(Rat(c), Rat(c)) + s;
            }
            std::vector<QInterval> coeffs = product_coefficients(roots);
            IntPoly candidate;
            std::vector<Int> ic(coeffs.size());
            bool integral = true;
            for (size_t i = 0; i + 1 < coeffs.size() && integral; ++i) {
                const QInterval& ci = coeffs[i];
                if (ci.width() >= make_rat(1, 2)) {
                    need_more_precision = true;
                    integral = false;
                    break;
                }
                Rat mid = (ci.lo + ci.hi) / 2;
                Int k = floor_rat(mid + make_rat(1, 2));
                if (abs(mid - Rat(k)) > quarter || !ci.contains(Rat(k))) {
                    integral = false;  // certified non-integer coefficient
                    break;
                }
                ic[i] = k;
            }
            if (need_more_precision) break;
            if (!integral) continue;
            ic.back() = 1;
            candidate = IntPoly(std::move(ic));
            auto quotient = exact_div(target, candidate);
            if (!quotient) continue;
            found.push_back(candidate);
            found.push_back(*quotient);
        }
        if (!need_more_precision) {
            std::sort(found.begin(), found.end());
            found.erase(std::unique(found.begin(), found.end()), found.end());
            return found;
        }
    }
    throw std::runtime_error("sign_split_factor: precision escalation did not converge");
}

bool is_x2_irreducible(const IntPoly& g) { return sign_split_factor(g, Int(0)).empty(); }

}  // namespace seidel
