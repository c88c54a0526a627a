#include "seidel/numthy.hpp"

#include <stdexcept>

namespace seidel {

long binary_ones(const Int& a) {
    if (sgn(a) < 0) throw std::invalid_argument("binary_ones: negative input");
    return static_cast<long>(mpz_popcount(a.get_mpz_t()));
}

Int totient(const Int& a) {
    if (a < 1) throw std::invalid_argument("totient: input must be >= 1");
    Int n = a, result = 1;
    for (Int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            result *= p - 1;
            n /= p;
            while (n % p == 0) {
                result *= p;
                n /= p;
            }
        }
    }
    if (n > 1) result *= n - 1;
    return result;
}

Int factorial_val2(const Int& n) {
    if (sgn(n) < 0) throw std::invalid_argument("factorial_val2: negative input");
    return n - binary_ones(n);
}

Val2 multinomial_val2(const std::vector<Int>& m) {
    Int total = 0;
    for (const Int& mi : m) {
        if (sgn(mi) < 0) throw std::invalid_argument("multinomial_val2: negative part");
        total += mi;
    }
    if (sgn(total) == 0) throw std::invalid_argument("multinomial_val2: all parts zero");
    Int v = factorial_val2(total - 1);
    for (const Int& mi : m) v -= factorial_val2(mi);
    return Val2::finite(v.get_si());
}

Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

bool is_squarefree(const Int& d) {
    if (d < 1) return false;
    Int n = d;
    for (Int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return false;
        }
    }
    return true;
}

Int isqrt(const Int& n) {
    if (sgn(n) < 0) throw std::invalid_argument("isqrt: negative input");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

}  // namespace seidel
