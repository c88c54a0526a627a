#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace seidel {

// Arbitrary-precision integers and rationals.  mpq_class values are kept
// canonical (reduced, positive denominator) by construction; every helper
// below preserves that invariant.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    if (sgn(den) == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Int rat_num(const Rat& q) { return q.get_num(); }
inline Int rat_den(const Rat& q) { return q.get_den(); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int floor_rat(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Int ceil_rat(const Rat& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

// 2-adic valuation value: either a finite integer or +infinity (the
// valuation of 0).  Additive under multiplication of the arguments.
struct Val2 {
    long v = 0;
    bool infinite = false;

    static Val2 infinity() { return Val2{0, true}; }
    static Val2 finite(long x) { return Val2{x, false}; }

    bool operator==(const Val2& o) const {
        return infinite == o.infinite && (infinite || v == o.v);
    }
    bool operator>=(const Val2& o) const {
        if (infinite) return true;
        if (o.infinite) return false;
        return v >= o.v;
    }
    Val2 operator+(const Val2& o) const {
        if (infinite || o.infinite) return infinity();
        return finite(v + o.v);
    }
    std::string str() const { return infinite ? "inf" : std::to_string(v); }
};

// Multiplicity of 2 in n; requires n != 0.
inline long nu2_int(const Int& n) {
    if (sgn(n) == 0) throw std::invalid_argument("nu2_int: zero");
    return static_cast<long>(mpz_scan1(n.get_mpz_t(), 0));
}

// 2-adic valuation of a rational; nu2(0) = infinity.  For a reduced
// fraction a/b this is nu2(a) when b is odd and -nu2(b) when b is even.
inline Val2 nu2(const Rat& q) {
    if (sgn(q) == 0) return Val2::infinity();
    return Val2::finite(nu2_int(q.get_num()) - nu2_int(q.get_den()));
}

inline Val2 nu2(const Int& n) {
    if (sgn(n) == 0) return Val2::infinity();
    return Val2::finite(nu2_int(n));
}

// Exact congruence of rationals with odd denominator modulo 2^e: both are
// mapped into Z/2^e via the inverse of the denominator.
inline bool congruent_mod_pow2(const Rat& a, const Rat& b, unsigned e) {
    Rat d = a - b;
    if (sgn(d) == 0) return true;
    Val2 v = nu2(d);
    return v >= Val2::finite(static_cast<long>(e));
}

}  // namespace seidel
