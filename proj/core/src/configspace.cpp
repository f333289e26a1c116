/*
 * configspace.cpp
 * ---------------
 * Dirichlet simplex integrals, propagator polynomials, pattern integrals,
 * and wheel coefficients.
 */
#include "weyltrace/configspace.hpp"

#include <algorithm>
#include <numeric>

namespace weyltrace {

Rational simplex_monomial_integral(int m, const std::vector<int>& exponents) {
    if (m < 0) throw std::invalid_argument("simplex_monomial_integral: negative point count");
    if (exponents.size() > static_cast<std::size_t>(m) + 1)
        throw std::invalid_argument("simplex_monomial_integral: too many exponents");
    Rational num = 1;
    long total = 0;
    for (int a : exponents) {
        if (a < 0) throw std::invalid_argument("simplex_monomial_integral: negative exponent");
        num *= factorial(a);
        total += a;
    }
    return num / factorial(m + total);
}

SimplexPoly propagator_polynomial(int m, int alpha, int beta) {
    if (alpha == beta) throw std::invalid_argument("propagator_polynomial: equal endpoints");
    if (alpha < 0 || alpha > m || beta < 0 || beta > m)
        throw std::invalid_argument("propagator_polynomial: point index out of range");
    SimplexPoly p = SimplexPoly::constant(m, rat(-1, 2));
    for (int g = alpha; g != beta; g = (g + 1) % (m + 1)) {
        if (g < m) {
            p += SimplexPoly::gap(m, g);
        } else {
            // u_m = 1 - u_0 - ... - u_{m-1}
            p += SimplexPoly::constant(m, 1);
            for (int i = 0; i < m; ++i) p -= SimplexPoly::gap(m, i);
        }
    }
    return p;
}

Rational pattern_integral(const PropagatorPattern& p) {
    SimplexPoly acc = SimplexPoly::constant(p.m, 1);
    for (const auto& [a, b] : p.edges) acc = acc * propagator_polynomial(p.m, a, b);
    return acc.integrate();
}

Rational wheel_coefficient(int k) {
    if (k < 2) throw std::invalid_argument("wheel_coefficient: need at least two points");
    // Pin point 1 at circle position 0 and let points 2..k take the other
    // positions in every order; each order is one cyclic stratum.
    std::vector<int> rest(static_cast<std::size_t>(k) - 1);
    std::iota(rest.begin(), rest.end(), 2);
    Rational total = 0;
    std::vector<int> pos(static_cast<std::size_t>(k) + 1, 0);  // point -> position
    do {
        pos[1] = 0;
        for (int i = 0; i < k - 1; ++i) pos[static_cast<std::size_t>(rest[i])] = i + 1;
        PropagatorPattern pat;
        pat.m = k - 1;
        pat.edges.reserve(static_cast<std::size_t>(k));
        for (int v = 1; v <= k; ++v)
            pat.edges.emplace_back(pos[static_cast<std::size_t>(v)],
                                   pos[static_cast<std::size_t>(v % k + 1)]);
        total += pattern_integral(pat);
    } while (std::next_permutation(rest.begin(), rest.end()));
    return total;
}

}  // namespace weyltrace
