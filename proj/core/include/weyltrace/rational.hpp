/*
 * rational.hpp
 * ------------
 * Exact rational coefficients for the whole engine, backed by GMP.
 *
 * Every computation in the library closes over Q: star products, simplex
 * integrals, wheel coefficients and characteristic-class coefficients are
 * all finite rational expressions.  Denominators grow factorially (the
 * simplex integral of a degree-d monomial carries (m+d)!), so coefficients
 * use arbitrary precision from the start.
 */
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace weyltrace {

using Rational = mpq_class;

// n! as an exact integer-valued rational.
inline Rational factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

// Binomial coefficient C(n, k); zero when k > n.
inline Rational binomial(unsigned n, unsigned k) {
    if (k > n) return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
}

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Canonical "p/q" (or "p" when q = 1) form used by every printer.
inline std::string to_string(const Rational& x) { return x.get_str(); }

// Bernoulli numbers B_0..B_kmax (B_1 = -1/2 convention), by the defining
// recurrence sum_{j=0}^{m} C(m+1, j) B_j = 0.
inline std::vector<Rational> bernoulli_numbers(unsigned kmax) {
    std::vector<Rational> B(kmax + 1);
    B[0] = 1;
    for (unsigned m = 1; m <= kmax; ++m) {
        Rational s = 0;
        for (unsigned j = 0; j < m; ++j) s += binomial(m + 1, j) * B[j];
        B[m] = -s / binomial(m + 1, m);
    }
    return B;
}

}  // namespace weyltrace
