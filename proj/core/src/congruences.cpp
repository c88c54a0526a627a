#include "seidel/congruences.hpp"

#include <functional>
#include <stdexcept>

#include "seidel/charpoly.hpp"
#include "seidel/numthy.hpp"
#include "seidel/walks.hpp"

namespace seidel {

namespace {

[[noreturn]] void violation(const std::string& what) {
    throw std::logic_error("congruence violated: " + what);
}

bool divisible(const Int& a, const Int& m) {
    return mpz_divisible_p(a.get_mpz_t(), m.get_mpz_t());
}

std::vector<int> divisors(int n) {
    std::vector<int> out;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

bool is_euler(const Graph& g) {
    for (int i = 0; i < g.order(); ++i)
        if (g.degree(i) % 2 != 0) return false;
    return true;
}

std::vector<Int> top_coeffs(const IntPoly& p) {
    std::vector<Int> out(p.degree() + 1);
    for (int i = 0; i <= p.degree(); ++i) out[i] = p.coeff_from_top(i);
    return out;
}

}  // namespace

CheckReport verify_trace_congruences(const Graph& g, int N) {
    if (N < 3) throw std::invalid_argument("verify_trace_congruences: N must be >= 3");
    CheckReport report;
    WalkStats ws = walk_stats(g, N);
    const Int two_n = 2 * N;

    Int weighted = 0;
    for (int d : divisors(N)) weighted += totient(Int(N / d)) * ws.traces[d];

    if (N % 2 == 0 && N >= 4) {
        Int lhs = weighted + Int(N / 2) * ws.bilinear[N / 2];
        if (!divisible(lhs, two_n))
            violation("weighted trace sum mod 2N (even N=" + std::to_string(N) + ")");
        report.passed.push_back("weighted trace congruence mod 2N, N=" + std::to_string(N));
    }
    if (N % 2 == 1) {
        if (!divisible(weighted, two_n))
            violation("weighted trace sum mod 2N (odd N=" + std::to_string(N) + ")");
        report.passed.push_back("weighted trace congruence mod 2N, N=" + std::to_string(N));
    }

    if (is_euler(g)) {
        if (!divisible(ws.bilinear[1], Int(2))) violation("Euler graph: 1^T A 1 even");
        for (int i = 2; i <= N; ++i)
            if (!divisible(ws.bilinear[i], Int(4)))
                violation("Euler graph: 1^T A^" + std::to_string(i) + " 1 mod 4");
        report.passed.push_back("Euler walk counts mod 2 and mod 4");
        if (N % 2 == 0 && N >= 4) {
            Int rhs = 0;
            for (int d : divisors(N))
                if (d != N) rhs += totient(Int(N / d)) * ws.traces[d];
            if (!divisible(ws.traces[N] + rhs, two_n))
                violation("Euler trace rearrangement mod 2N, N=" + std::to_string(N));
            report.passed.push_back("Euler trace congruence mod 2N, N=" + std::to_string(N));
        }
    }
    return report;
}

std::vector<Int> coefficient_map(const std::vector<Int>& b_top, const std::vector<Int>& walks) {
    const int n = static_cast<int>(b_top.size()) - 1;
    if (static_cast<int>(walks.size()) < n)
        throw std::invalid_argument("coefficient_map: need walk counts up to 1^T A^(n-1) 1");
    std::vector<Int> a(n + 1);
    Int pow = 1;  // (-2)^r
    for (int r = 0; r <= n; ++r) {
        Int inner = 0;
        for (int i = 1; i <= r; ++i) inner += b_top[r - i] * walks[i - 1];
        if (mpz_odd_p(inner.get_mpz_t()))
            throw std::logic_error("coefficient_map: non-integer intermediate at r=" +
                                   std::to_string(r));
        a[r] = pow * (b_top[r] + inner / 2);
        pow *= -2;
    }
    return a;
}

CheckReport verify_parity_theorems(const SeidelMatrix& s) {
    CheckReport report;
    const int n = s.order();
    const Graph& g = s.underlying_graph();
    IntPoly chi_a = char_poly(adjacency_matrix(g));
    IntPoly chi_j2a = char_poly(j_minus_2a(g));
    std::vector<Int> a = top_coeffs(chi_j2a);
    std::vector<Int> b = top_coeffs(chi_a);

    if (a[0] != 1 || a[1] != -n || (n >= 2 && a[2] != 0))
        violation("top coefficients of chi_{J-2A} are (1, -n, 0)");
    report.passed.push_back("top coefficients (1, -n, 0)");

    for (int r = 1; r <= n; r += 2)
        if (mpz_odd_p(b[r].get_mpz_t())) violation("b_r even for odd r");
    report.passed.push_back("odd-index coefficients of chi_A even");

    for (int r = 0; r <= n; r += 2)
        if (!divisible(a[r], Int(1) << r)) violation("2^r | a_r for even r");
    report.passed.push_back("2^r divides a_r for even r");

    if (n % 2 == 0) {
        for (int r = 0; r <= n; ++r)
            if (!divisible(a[r], Int(1) << r)) violation("2^r | a_r (even order)");
        report.passed.push_back("2^r divides a_r for all r (even order)");
    } else {
        // Mod-4 relations on the Euler representative of the switching class.
        Graph eg = s.euler_representative();
        IntPoly e_chi_a = char_poly(adjacency_matrix(eg));
        IntPoly e_chi_j2a = char_poly(j_minus_2a(eg));
        std::vector<Int> ea = top_coeffs(e_chi_j2a);
        std::vector<Int> eb = top_coeffs(e_chi_a);
        for (int r = 1; 2 * r + 1 <= n; ++r) {
            Rat lhs_even(eb[2 * r]);
            Rat rhs_even = Rat(-ea[2 * r + 1]) / Rat((Int(1) << (2 * r)) * n);
            if (!congruent_mod_pow2(lhs_even, rhs_even, 2))
                violation("b_{2r} vs a_{2r+1} mod 4 at r=" + std::to_string(r));
            Rat lhs_odd(eb[2 * r - 1]);
            Rat rhs_odd =
                Rat(ea[2 * r + 1] + ea[2 * r] + ea[2 * r - 1] * ea[3]) / Rat(Int(1) << (2 * r - 1));
            if (!congruent_mod_pow2(lhs_odd, rhs_odd, 2))
                violation("b_{2r-1} vs a-combination mod 4 at r=" + std::to_string(r));
        }
        report.passed.push_back("odd-order mod-4 coefficient relations (Euler representative)");
    }
    return report;
}

namespace {

// Enumerate m_1..m_d >= 0 with sum i*m_i = d.
void for_each_weighted_composition(int d, std::vector<Int>& m, int index, int remaining,
                                   const std::function<void(const std::vector<Int>&)>& fn) {
    if (index > d) {
        if (remaining == 0) fn(m);
        return;
    }
    int max_count = remaining / index;
    for (int c = 0; c <= max_count; ++c) {
        m[index - 1] = c;
        for_each_weighted_composition(d, m, index + 1, remaining - c * index, fn);
    }
    m[index - 1] = 0;
}

Rat rat_factorial(const Int& n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n.get_ui());
    return Rat(r);
}

Rat rat_pow(const Rat& base, const Int& exp) {
    Rat acc = 1;
    for (Int i = 0; i < exp; ++i) acc *= base;
    return acc;
}

}  // namespace

CheckReport verify_euler_coefficient_congruence(const std::vector<Int>& a_top, int n, int k) {
    const int deg = static_cast<int>(a_top.size()) - 1;
    if (n % 2 == 0) throw std::invalid_argument("euler coefficient congruence: order must be odd");
    if (k < 2 || 2 * k + 1 > deg)
        throw std::invalid_argument("euler coefficient congruence: k out of range");

    Rat total = 0;
    for (int d : divisors(2 * k)) {
        Rat c_weight = Rat(Int(1) << (2 * k)) * Rat(d * totient(Int(2 * k / d))) / Rat(2 * k);
        std::vector<Int> m(d, 0);
        for_each_weighted_composition(
            d, m, 1, d, [&](const std::vector<Int>& parts) {
                if (2 * k <= d && sgn(parts[2 * k - 1]) != 0) return;  // m_{2k} = 0
                Int sum = 0;
                for (const Int& x : parts) sum += x;
                if (sgn(sum) == 0) return;
                Rat mult = rat_factorial(sum - 1);
                for (const Int& x : parts) mult /= rat_factorial(x);
                Rat cd = c_weight * mult;

                Rat pd = 1;
                for (int j = 1; 2 * j <= d; ++j) {
                    const Int& e = parts[2 * j - 1];  // exponent m_{2j}
                    if (sgn(e) == 0) continue;
                    Rat base = Rat(a_top[2 * j + 1]) / Rat((Int(1) << (2 * j)) * n);
                    pd *= rat_pow(base, e);
                }
                for (int j = 1; 2 * j - 1 <= d; ++j) {
                    const Int& e = parts[2 * j - 2];  // exponent m_{2j-1}
                    if (sgn(e) == 0) continue;
                    Rat base = Rat(a_top[2 * j + 1] + a_top[2 * j] + a_top[2 * j - 1] * a_top[3]) /
                               Rat(Int(1) << (2 * j - 1));
                    pd *= rat_pow(base, e);
                }
                total += cd * pd;
            });
    }

    if (!congruent_mod_pow2(Rat(a_top[2 * k + 1]), total, 2 * k + 1))
        violation("odd-order coefficient composition congruence at k=" + std::to_string(k));
    CheckReport report;
    report.passed.push_back("coefficient composition congruence mod 2^" +
                            std::to_string(2 * k + 1) + " at k=" + std::to_string(k));
    return report;
}

}  // namespace seidel
