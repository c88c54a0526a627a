#include "seidel/intpoly.hpp"

#include <algorithm>
#include <stdexcept>

#include "seidel/numthy.hpp"

namespace seidel {

namespace {
const Int kZero = 0;
}

IntPoly IntPoly::monomial(int degree, const Int& lead) {
    if (degree < 0) throw std::invalid_argument("IntPoly::monomial: negative degree");
    std::vector<Int> c(degree + 1, Int(0));
    c.back() = lead;
    return IntPoly(std::move(c));
}

void IntPoly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

const Int& IntPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[i];
}

bool IntPoly::operator<(const IntPoly& o) const {
    if (degree() != o.degree()) return degree() < o.degree();
    for (int i = degree(); i >= 0; --i)
        if (coeff(i) != o.coeff(i)) return coeff(i) < o.coeff(i);
    return false;
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (Int& x : r.c_) x = -x;
    return r;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (sgn(c_[i]) == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const Int& k) const {
    IntPoly r = *this;
    for (Int& x : r.c_) x *= k;
    r.trim();
    return r;
}

IntPoly IntPoly::derivative() const {
    if (degree() < 1) return IntPoly();
    std::vector<Int> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Int(static_cast<long>(i));
    return IntPoly(std::move(r));
}

Int IntPoly::eval(const Int& x) const {
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rat IntPoly::eval(const Rat& x) const {
    Rat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rat(*it);
    return acc;
}

QuadNum IntPoly::eval(const QuadNum& x) const {
    QuadNum acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + QuadNum(Rat(*it));
    return acc;
}

IntPoly IntPoly::taylor_shift(const Int& c) const {
    // Repeated synthetic division by (x - (-c)).
    std::vector<Int> a = c_;
    const int n = static_cast<int>(a.size());
    for (int i = 0; i < n; ++i)
        for (int j = n - 2; j >= i; --j) a[j] += c * a[j + 1];
    return IntPoly(std::move(a));
}

IntPoly IntPoly::compose_square_shift(const Int& c) const {
    IntPoly base({c * c, -2 * c, Int(1)});  // (x - c)^2
    IntPoly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * base + IntPoly::constant(*it);
    return acc;
}

IntPoly IntPoly::reflect_around(const Int& c) const {
    // q(x) = (-1)^deg p(2c - x): coefficients of p(2c + y) with y -> -x.
    IntPoly shifted = taylor_shift(2 * c);
    std::vector<Int> a = shifted.coeffs();
    const int d = degree();
    for (size_t i = 0; i < a.size(); ++i)
        if ((d - static_cast<int>(i)) % 2 != 0) a[i] = -a[i];
    return IntPoly(std::move(a));
}

Int IntPoly::content() const {
    Int g = 0;
    for (const Int& x : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return IntPoly();
    Int g = content();
    if (sgn(leading()) < 0) g = -g;
    IntPoly r = *this;
    std::vector<Int> a = r.c_;
    for (Int& x : a) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return IntPoly(std::move(a));
}

std::string IntPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Int& a = coeff(i);
        if (sgn(a) == 0) continue;
        Int mag = abs(a);
        if (out.empty()) {
            if (sgn(a) < 0) out += "-";
        } else {
            out += sgn(a) < 0 ? " - " : " + ";
        }
        bool show_coeff = (mag != 1) || i == 0;
        if (show_coeff) out += mag.get_str();
        if (i > 0) {
            if (show_coeff) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

std::vector<std::string> IntPoly::coeff_strings() const {
    std::vector<std::string> out;
    out.reserve(c_.size());
    for (const Int& x : c_) out.push_back(x.get_str());
    return out;
}

IntPoly IntPoly::from_coeff_strings(const std::vector<std::string>& s) {
    std::vector<Int> c;
    c.reserve(s.size());
    for (const std::string& t : s) c.emplace_back(t);
    return IntPoly(std::move(c));
}

std::optional<std::pair<IntPoly, IntPoly>> divrem_exact_steps(const IntPoly& num,
                                                              const IntPoly& den) {
    if (den.is_zero()) throw std::invalid_argument("divrem: division by zero polynomial");
    if (num.degree() < den.degree()) return std::make_pair(IntPoly(), num);
    std::vector<Int> rem = num.coeffs();
    const Int& lc = den.leading();
    const int dd = den.degree();
    std::vector<Int> quot(num.degree() - dd + 1, Int(0));
    for (int i = num.degree(); i >= dd; --i) {
        Int& top = rem[i];
        if (sgn(top) == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t())) return std::nullopt;
        Int q;
        mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
        quot[i - dd] = q;
        for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= q * den.coeff(j);
    }
    return std::make_pair(IntPoly(std::move(quot)), IntPoly(std::move(rem)));
}

std::optional<IntPoly> exact_div(const IntPoly& num, const IntPoly& den) {
    auto qr = divrem_exact_steps(num, den);
    if (!qr || !qr->second.is_zero()) return std::nullopt;
    return qr->first;
}

namespace {

// Pseudo-remainder prem(f, g) = (lc(g)^(deg f - deg g + 1) * f) mod g.
IntPoly pseudo_rem(const IntPoly& f, const IntPoly& g) {
    IntPoly r = f;
    const int dg = g.degree();
    const Int& lc = g.leading();
    while (!r.is_zero() && r.degree() >= dg) {
        int k = r.degree() - dg;
        IntPoly t = IntPoly::monomial(k, r.leading()) * g;
        r = r * lc - t;
    }
    return r;
}

}  // namespace

IntPoly poly_gcd(IntPoly a, IntPoly b) {
    a = a.is_zero() ? a : a.primitive_part();
    b = b.is_zero() ? b : b.primitive_part();
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPoly r = pseudo_rem(a, b);
        a = std::move(b);
        b = r.is_zero() ? IntPoly() : r.primitive_part();
    }
    if (sgn(a.leading()) < 0) a = -a;
    return a;
}

std::vector<IntPoly> squarefree_decomposition(const IntPoly& p) {
    std::vector<IntPoly> out;
    if (p.degree() < 1) return out;
    IntPoly f = p.primitive_part();
    IntPoly g = poly_gcd(f, f.derivative());
    IntPoly c = *exact_div(f, g);
    IntPoly d = *exact_div(f.derivative(), g) - c.derivative();
    while (c.degree() >= 1 || !d.is_zero()) {
        IntPoly q = poly_gcd(c, d);
        out.push_back(q);
        if (c.degree() == q.degree() && q.degree() == 0) break;
        c = *exact_div(c, q);
        d = *exact_div(d, q) - c.derivative();
        if (c.degree() == 0 && d.is_zero()) break;
    }
    while (!out.empty() && out.back().degree() == 0) out.pop_back();
    return out;
}

std::vector<Int> newton_power_sums(const IntPoly& p, int k) {
    if (!p.is_monic()) throw std::invalid_argument("newton_power_sums: polynomial not monic");
    if (k < 1) throw std::invalid_argument("newton_power_sums: k must be >= 1");
    const int d = p.degree();
    // e_i = (-1)^i a_i where p = sum a_i x^(d-i).
    std::vector<Int> e(d + 1);
    for (int i = 0; i <= d; ++i) e[i] = (i % 2 == 0) ? p.coeff_from_top(i) : -p.coeff_from_top(i);
    std::vector<Int> s(k + 1, Int(0));
    for (int m = 1; m <= k; ++m) {
        // s_m = e_1 s_{m-1} - e_2 s_{m-2} + ... + (-1)^m * m * e_m  (e_i = 0 for i > d)
        Int acc = 0;
        for (int i = 1; i < m; ++i) {
            if (i > d) break;
            Int term = e[i] * s[m - i];
            acc += (i % 2 == 1) ? term : -term;
        }
        if (m <= d) {
            Int term = Int(m) * e[m];
            acc += (m % 2 == 1) ? term : -term;
        }
        s[m] = acc;
    }
    return std::vector<Int>(s.begin() + 1, s.end());
}

std::optional<IntPoly> poly_from_power_sums(const std::vector<Int>& s) {
    const int d = static_cast<int>(s.size());
    std::vector<Int> e(d + 1);
    e[0] = 1;
    for (int m = 1; m <= d; ++m) {
        // m * e_m = sum_{i=1..m} (-1)^(i-1) e_{m-i} s_i
        Int acc = 0;
        for (int i = 1; i <= m; ++i) {
            Int term = e[m - i] * s[i - 1];
            acc += (i % 2 == 1) ? term : -term;
        }
        if (!mpz_divisible_ui_p(acc.get_mpz_t(), static_cast<unsigned long>(m)))
            return std::nullopt;
        mpz_divexact_ui(e[m].get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(m));
    }
    std::vector<Int> c(d + 1);
    for (int i = 0; i <= d; ++i) c[d - i] = (i % 2 == 0) ? e[i] : -e[i];
    return IntPoly(std::move(c));
}

bool ResiduePoly::operator<(const ResiduePoly& o) const {
    if (e != o.e) return e < o.e;
    return residues < o.residues;
}

std::string ResiduePoly::str() const {
    std::string out = "mod 2^" + std::to_string(e) + ": [";
    for (size_t i = 0; i < residues.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(residues[i]);
    }
    return out + "]";
}

ResiduePoly mod_reduce(const IntPoly& p, unsigned e) {
    if (e < 1 || e > 62) throw std::invalid_argument("mod_reduce: exponent out of range");
    const std::uint64_t mask = (std::uint64_t(1) << e) - 1;
    ResiduePoly r;
    r.e = e;
    r.residues.resize(p.degree() + 1);
    Int m = Int(1) << e;
    for (int i = 0; i <= p.degree(); ++i) {
        Int v = p.coeff(i) % m;
        if (sgn(v) < 0) v += m;
        r.residues[i] = v.get_ui() & mask;
    }
    return r;
}

bool parity_profile_check(const IntPoly& p, ParityPattern pattern) {
    if (!p.is_monic()) return false;
    const int n = p.degree();
    for (int i = 0; i <= n; ++i) {
        unsigned long want;
        if (pattern == ParityPattern::EvenOrder) {
            // (x+1)^n: coefficient of x^i is binom(n, i).
            want = ((static_cast<unsigned long>(i) & ~static_cast<unsigned long>(n)) == 0) ? 1 : 0;
        } else {
            // x(x+1)^(n-1): coefficient of x^i is binom(n-1, i-1) for i >= 1.
            if (i == 0) {
                want = 0;
            } else {
                unsigned long j = static_cast<unsigned long>(i - 1);
                unsigned long m = static_cast<unsigned long>(n - 1);
                want = ((j & ~m) == 0) ? 1 : 0;
            }
        }
        unsigned long got = mpz_odd_p(p.coeff(i).get_mpz_t()) ? 1 : 0;
        if (got != want) return false;
    }
    return true;
}

bool has_binomial_parity(const IntPoly& p) {
    return parity_profile_check(p, ParityPattern::EvenOrder);
}

Rat RatPoly::eval(const Rat& x) const {
    Rat acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RatPoly RatPoly::derivative() const {
    RatPoly r;
    if (c.size() <= 1) return r;
    r.c.resize(c.size() - 1);
    for (size_t i = 1; i < c.size(); ++i) r.c[i - 1] = c[i] * Rat(static_cast<long>(i));
    return r;
}

RatPoly to_rat_poly(const IntPoly& p) {
    RatPoly r;
    r.c.reserve(p.degree() + 1);
    for (int i = 0; i <= p.degree(); ++i) r.c.emplace_back(p.coeff(i));
    return r;
}

RatPoly rat_poly_scale(const RatPoly& p, const Rat& k) {
    RatPoly r = p;
    for (Rat& x : r.c) x *= k;
    return r;
}

RatPoly scaled_derivative(const IntPoly& p, int r) {
    if (!p.is_monic()) throw std::invalid_argument("scaled_derivative: polynomial not monic");
    const int d = p.degree();
    if (r < 1 || r > d) throw std::invalid_argument("scaled_derivative: r out of range");
    // Coefficient of x^(r-i) is a_i * binom(d-i, r-i) / binom(d, r).
    RatPoly out;
    out.c.assign(r + 1, Rat(0));
    Rat denom(binomial(d, r));
    for (int i = 0; i <= r; ++i) {
        Rat num(p.coeff_from_top(i) * binomial(d - i, r - i));
        out.c[r - i] = num / denom;
    }
    return out;
}

}  // namespace seidel
