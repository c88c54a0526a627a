#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "seidel/quadnum.hpp"
#include "seidel/rational.hpp"

namespace seidel {

// Univariate integer polynomial, coefficients in ascending degree order.
// The zero polynomial has an empty coefficient vector; otherwise the
// leading coefficient is nonzero.
class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
    static IntPoly zero() { return IntPoly(); }
    static IntPoly constant(Int a) { return IntPoly({std::move(a)}); }
    // x - r
    static IntPoly linear_root(const Int& r) { return IntPoly({-r, Int(1)}); }
    static IntPoly monomial(int degree, const Int& lead = Int(1));

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    const Int& leading() const { return c_.back(); }
    // Coefficient of x^i (0 for i beyond the degree).
    const Int& coeff(int i) const;
    // Coefficient a_i of x^(degree - i), the "i-th from the top" indexing.
    const Int& coeff_from_top(int i) const { return coeff(degree() - i); }
    const std::vector<Int>& coeffs() const { return c_; }

    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    // Lexicographic on (degree, coefficient list ascending); total order.
    bool operator<(const IntPoly& o) const;

    IntPoly operator-() const;
    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator*(const Int& k) const;

    IntPoly derivative() const;
    Int eval(const Int& x) const;
    Rat eval(const Rat& x) const;
    QuadNum eval(const QuadNum& x) const;
    // Sign of the value at x without materializing huge powers.
    int sign_at(const QuadNum& x) const { return eval(x).sign(); }

    // p(x + c)
    IntPoly taylor_shift(const Int& c) const;
    // p((x - c)^2); degree doubles.
    IntPoly compose_square_shift(const Int& c) const;
    // (-1)^deg * p(2c - x): the reflection of the root multiset around c.
    IntPoly reflect_around(const Int& c) const;

    Int content() const;
    IntPoly primitive_part() const;

    std::string str(const std::string& var = "x") const;
    std::vector<std::string> coeff_strings() const;
    static IntPoly from_coeff_strings(const std::vector<std::string>& s);

  private:
    std::vector<Int> c_;
    void trim();
};

// Division with remainder; requires the divisor's leading coefficient to
// divide exactly at every step (always true for monic divisors).  Returns
// nullopt if a step is not exactly divisible.
std::optional<std::pair<IntPoly, IntPoly>> divrem_exact_steps(const IntPoly& num,
                                                              const IntPoly& den);

// Exact quotient; nullopt when den does not divide num over Z[x].
std::optional<IntPoly> exact_div(const IntPoly& num, const IntPoly& den);

// Gcd over Z[x], primitive with positive leading coefficient.
IntPoly poly_gcd(IntPoly a, IntPoly b);

// Yun square-free decomposition: p = content * prod_i factors[i]^(i+1)
// with the factors pairwise coprime and square-free (entries may be 1).
std::vector<IntPoly> squarefree_decomposition(const IntPoly& p);

// Power sums s_1..s_k of the roots of a monic p (Newton's identities).
std::vector<Int> newton_power_sums(const IntPoly& p, int k);

// Monic polynomial of degree d with the given root power sums s_1..s_d.
// Fails (nullopt) when the implied coefficients are not integers.
std::optional<IntPoly> poly_from_power_sums(const std::vector<Int>& s);

// Coefficientwise residues modulo 2^e, e in [1, 62].
struct ResiduePoly {
    unsigned e = 1;
    std::vector<std::uint64_t> residues;  // ascending degree, reduced mod 2^e

    bool operator==(const ResiduePoly& o) const { return e == o.e && residues == o.residues; }
    bool operator<(const ResiduePoly& o) const;
    std::string str() const;
};

ResiduePoly mod_reduce(const IntPoly& p, unsigned e);

// Pattern of chi mod 2 for the two parity classes of the order.
enum class ParityPattern { EvenOrder, OddOrder };  // (x+1)^n vs x(x+1)^(n-1)

// True iff p is monic of degree n and p == (x+1)^n (even pattern) or
// p == x(x+1)^(n-1) (odd pattern) modulo 2.
bool parity_profile_check(const IntPoly& p, ParityPattern pattern);

// True iff p == (x+1)^d mod 2 where d = deg p (the coefficient condition
// a_i == binom(d, i) mod 2).
bool has_binomial_parity(const IntPoly& p);

// Monic polynomial with rational coefficients (ascending), used for the
// scaled derivatives p_r = r!/d! * p^(d-r).
struct RatPoly {
    std::vector<Rat> c;

    int degree() const { return static_cast<int>(c.size()) - 1; }
    Rat eval(const Rat& x) const;
    RatPoly derivative() const;
    bool operator==(const RatPoly& o) const { return c == o.c; }
};

RatPoly to_rat_poly(const IntPoly& p);
RatPoly rat_poly_scale(const RatPoly& p, const Rat& k);

// p_r = r!/d! * d^(d-r)/dx^(d-r) p for monic p of degree d, 1 <= r <= d.
// Monic of degree r; satisfies p_{r+1}' = (r+1) p_r.
RatPoly scaled_derivative(const IntPoly& p, int r);

}  // namespace seidel
