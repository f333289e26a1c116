/*
 * test_configspace.cpp
 * --------------------
 * Simplex integrals, propagator polynomials in gap coordinates, pattern
 * integrals and the wheel table: pinned anchors, symmetry properties, and
 * cross-checks against the independent recursive-integration and
 * Bernoulli oracles.
 */
#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles/oracle_bernoulli.hpp"
#include "oracles/oracle_simplex.hpp"
#include "weyltrace/configspace.hpp"
#include "weyltrace/rational.hpp"

using namespace weyltrace;

TEST_CASE("simplex monomial integral anchors", "[configspace]") {
    CHECK(simplex_monomial_integral(1, {1, 0}) == rat(1, 2));
    CHECK(simplex_monomial_integral(2, {1, 1, 0}) == rat(1, 24));
    CHECK(simplex_monomial_integral(0, {}) == 1);
    // Missing exponents are padded with zeros.
    CHECK(simplex_monomial_integral(2, {1, 1}) == rat(1, 24));
    CHECK(simplex_monomial_integral(2, {}) == rat(1, 2));
    CHECK_THROWS_AS(simplex_monomial_integral(1, {-1}), std::invalid_argument);
}

TEST_CASE("simplex integral matches the recursive oracle", "[configspace][oracle]") {
    std::mt19937_64 eng(101);
    for (int t = 0; t < 60; ++t) {
        const int m = static_cast<int>(eng() % 5);
        std::vector<int> a(static_cast<std::size_t>(m) + 1);
        for (int& e : a) e = static_cast<int>(eng() % 5);
        const Rational engine = simplex_monomial_integral(m, a);
        const mpq_class expected = oracle::simplex_integral(m, a);
        REQUIRE(engine == Rational(expected));
    }
}

TEST_CASE("propagator polynomial anchors", "[configspace]") {
    // Two points: the single free gap u_0, and its complement.
    SimplexPoly fwd = SimplexPoly::gap(1, 0);
    fwd += SimplexPoly::constant(1, rat(-1, 2));
    CHECK(propagator_polynomial(1, 0, 1) == fwd);

    SimplexPoly bwd = SimplexPoly::constant(1, rat(1, 2));
    bwd -= SimplexPoly::gap(1, 0);
    CHECK(propagator_polynomial(1, 1, 0) == bwd);

    // Three points: the arc 0 -> 2 crosses the first two gaps.
    SimplexPoly arc = SimplexPoly::gap(2, 0) + SimplexPoly::gap(2, 1);
    arc += SimplexPoly::constant(2, rat(-1, 2));
    CHECK(propagator_polynomial(2, 0, 2) == arc);

    CHECK_THROWS_AS(propagator_polynomial(2, 1, 1), std::invalid_argument);
}

TEST_CASE("propagator antisymmetry on the simplex", "[configspace]") {
    std::mt19937_64 eng(103);
    for (int t = 0; t < 40; ++t) {
        const int m = 1 + static_cast<int>(eng() % 4);
        const int a = static_cast<int>(eng() % (m + 1));
        int b = static_cast<int>(eng() % (m + 1));
        if (b == a) b = (b + 1) % (m + 1);
        REQUIRE((propagator_polynomial(m, a, b) + propagator_polynomial(m, b, a)).is_zero());
    }
}

TEST_CASE("pattern integral anchors", "[configspace]") {
    CHECK(pattern_integral({1, {{0, 1}}}) == 0);
    CHECK(pattern_integral({1, {{0, 1}, {1, 0}}}) == rat(-1, 12));
    CHECK(pattern_integral({2, {}}) == rat(1, 2));
    // A repeated edge squares the propagator.
    CHECK(pattern_integral({1, {{0, 1}, {0, 1}}}) == rat(1, 12));
}

TEST_CASE("pattern integral symmetries", "[configspace]") {
    std::mt19937_64 eng(107);
    for (int t = 0; t < 30; ++t) {
        const int m = 1 + static_cast<int>(eng() % 3);
        PropagatorPattern p;
        p.m = m;
        const int edges = 1 + static_cast<int>(eng() % 4);
        for (int e = 0; e < edges; ++e) {
            const int a = static_cast<int>(eng() % (m + 1));
            int b = static_cast<int>(eng() % (m + 1));
            if (b == a) b = (b + 1) % (m + 1);
            p.edges.emplace_back(a, b);
        }
        const Rational base = pattern_integral(p);

        // Simultaneous cyclic relabeling of the points.
        PropagatorPattern rotated = p;
        for (auto& [a, b] : rotated.edges) {
            a = (a + 1) % (m + 1);
            b = (b + 1) % (m + 1);
        }
        REQUIRE(pattern_integral(rotated) == base);

        // Reversing every edge multiplies by (-1)^edges.
        PropagatorPattern reversed = p;
        for (auto& [a, b] : reversed.edges) std::swap(a, b);
        const Rational sign = (edges % 2 == 0) ? 1 : -1;
        REQUIRE(pattern_integral(reversed) == base * sign);
    }
}

TEST_CASE("wheel table", "[configspace]") {
    CHECK(wheel_coefficient(2) == rat(-1, 12));
    CHECK(wheel_coefficient(3) == 0);
    CHECK(wheel_coefficient(4) == rat(1, 720));
    CHECK(wheel_coefficient(5) == 0);
    CHECK(wheel_coefficient(6) == rat(-1, 30240));
    CHECK(wheel_coefficient(7) == 0);
    CHECK(wheel_coefficient(8) == rat(1, 1209600));
    CHECK_THROWS_AS(wheel_coefficient(1), std::invalid_argument);
}

TEST_CASE("wheel values match the Bernoulli oracle", "[configspace][oracle]") {
    for (int k = 2; k <= 8; ++k) {
        const Rational expected = -Rational(oracle::bernoulli(k)) / factorial(static_cast<unsigned>(k));
        REQUIRE(wheel_coefficient(k) == expected);
    }
}
