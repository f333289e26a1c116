/*
 * test_liealg.cpp
 * ---------------
 * Membership and projection for the distinguished pair, the curvature of
 * the projection, the pointwise Lie cochain differential, and the
 * characteristic cochains: pinned anchors plus structural properties on
 * random inputs.
 */
#include <catch2/catch_amalgamated.hpp>

#include <array>

#include "helpers.hpp"
#include "oracles/oracle_bernoulli.hpp"
#include "weyltrace/liealg.hpp"
#include "weyltrace/sampler.hpp"

using namespace weyltrace;
using testutil::cst;
using testutil::pvar;
using testutil::qvar;
using testutil::sc;
using testutil::sv;

TEST_CASE("membership in the Lie algebra", "[liealg]") {
    CHECK(is_in_g(sc(1, pvar())));
    CHECK(is_in_g(sc(2, pvar()) + Matrix::unit(2, 0, 1, qvar()).h_shift(1)));
    CHECK_FALSE(is_in_g(sc(1, pvar().h_shift(-1))));
    CHECK_FALSE(is_in_g(Matrix::unit(2, 0, 1, pvar())));  // non-scalar hbar^0 part
}

TEST_CASE("decomposition of a Lie algebra element", "[liealg]") {
    const Matrix a = sc(2, pvar()) + Matrix::unit(2, 1, 0, qvar() * qvar()).h_shift(1);
    const GDecomposition dec = decompose_g(a);
    CHECK(dec.f == pvar());
    CHECK(dec.a == Matrix::unit(2, 1, 0, qvar() * qvar()));
}

TEST_CASE("projection anchors", "[liealg]") {
    const Form p = pvar(), q = qvar();

    {
        const HDecomposition h = pr(sc(1, p * p));
        CHECK(h.sp_part == p * p);
        CHECK(h.gl_part.is_zero());
        CHECK(h.constant == 0);
        CHECK(h.higher.is_zero());
    }
    {
        const HDecomposition h = pr(sc(1, p * p * p));
        CHECK(h.sp_part.is_zero());
        CHECK(h.gl_part.is_zero());
        CHECK(h.constant == 0);
        CHECK(h.higher.is_zero());
    }
    {
        // hbar times a constant matrix is its own gl part.
        const Matrix a = Matrix::unit(2, 0, 1, cst(2, 3)).h_shift(1);
        const HDecomposition h = pr(a);
        CHECK(h.sp_part.is_zero());
        CHECK(h.gl_part == a);
        CHECK(h.constant == 0);
        CHECK(h.higher.is_zero());
    }
    {
        // Mixed element: quadratic + constant + higher central parts.
        const Matrix a = sc(1, p * q + cst(2, 5) + cst(2, 7).h_shift(2));
        const HDecomposition h = pr(a);
        CHECK(h.sp_part == p * q);
        CHECK(h.constant == 5);
        CHECK(h.higher == sv(2, 0, 7));
    }
}

TEST_CASE("projection fixes the subalgebra", "[liealg]") {
    Sampler s(101, 2, 2);
    for (int t = 0; t < 20; ++t) {
        const Matrix a = s.h_element();
        REQUIRE(is_in_h(a));
        REQUIRE(embed(pr(a)) == a);
        REQUIRE(gamma_hat(a).is_zero());
    }
    CHECK_FALSE(is_in_h(sc(1, pvar() * pvar() * pvar())));
}

TEST_CASE("curvature anchors", "[liealg]") {
    const Form p = pvar(), q = qvar();

    CHECK(curvature(sc(1, p), sc(1, q)).r3 == sv(0, 0, 1));

    {
        const Matrix a = sc(2, p);
        const Matrix b = Matrix::unit(2, 0, 0, q).h_shift(1);
        const Curvature c = curvature(a, b);
        CHECK(c.r2 == Matrix::unit(2, 0, 0, cst(2, 1)).h_shift(1));
        CHECK(c.r1.is_zero());
        CHECK(c.r3.is_zero());
    }
    {
        const Curvature c = curvature(sc(1, p), sc(1, p * q * q));
        CHECK(c.r1 == p * q * cst(2, 2));
    }
}

TEST_CASE("curvature structure", "[liealg]") {
    Sampler s(103, 2, 2);
    for (int t = 0; t < 15; ++t) {
        const Matrix a = s.g_element(3), b = s.g_element(3);
        const Curvature ab = curvature(a, b), ba = curvature(b, a);
        REQUIRE(ab.r1 == -ba.r1);
        REQUIRE(ab.r2 == -ba.r2);
        REQUIRE(ab.r3 == -ba.r3);

        // The curvature vanishes against subalgebra members.
        const Curvature ha = curvature(s.h_element(), b);
        REQUIRE(ha.r1.is_zero());
        REQUIRE(ha.r2.is_zero());
        REQUIRE(ha.r3.is_zero());

        // Its components embed back into the subalgebra.
        const HDecomposition h{ab.r1, ab.r2, Rational(0), ab.r3};
        REQUIRE(is_in_h(embed(h)));
    }
}

TEST_CASE("complementary projection anchors", "[liealg]") {
    const Form p = pvar();
    CHECK(gamma_hat(sc(1, p)) == sc(1, p));
    CHECK(gamma_hat(sc(1, p * p)).is_zero());
    CHECK(gamma_hat(sc(1, p * p * p)) == sc(1, p * p * p));
}

TEST_CASE("pointwise cochain differential", "[liealg]") {
    const Matrix mp = sc(1, pvar()), mq = sc(1, qvar());

    // A constant 0-cochain has zero differential: with a trivial action the
    // single adjoint term drops and one argument admits no bracket pairs.
    {
        auto alpha = [](const std::vector<Matrix>&) { return ScalarValue::monomial(0, 0, 5); };
        const ScalarValue v = ce_differential_eval<ScalarValue>(alpha, {mp}, ScalarValue{});
        CHECK(v.is_zero());
    }
    // The symbol 1-cochain against the canonical pair.
    {
        auto alpha = [](const std::vector<Matrix>& xs) {
            return ScalarValue::from_form(symbol(xs[0]).trace());
        };
        const ScalarValue v =
            ce_differential_eval<ScalarValue>(alpha, {mp, mq}, ScalarValue{});
        CHECK(v == sv(0, 0, -1));
    }
}

TEST_CASE("identity cochain solves the structure equation", "[liealg]") {
    // The differential of the identity 1-cochain equals the antisymmetrized
    // bracket square (1/2)([a, b] - [b, a]) at every pair.
    Sampler s(107, 2, 2);
    auto theta = [](const std::vector<Matrix>& xs) { return xs[0]; };
    auto act = [](const Matrix& a, const Matrix& v) { return bracket(a, v); };
    for (int t = 0; t < 10; ++t) {
        const Matrix a = s.g_element(3), b = s.g_element(3);
        const Matrix lhs = ce_differential_eval<Matrix>(theta, {a, b}, CEAction::adjoint,
                                                        Matrix(2, 2), act);
        Matrix rhs = bracket(a, b);
        rhs -= bracket(b, a);
        rhs *= rat(1, 2);
        REQUIRE(lhs == rhs);
        REQUIRE(lhs == bracket(a, b));  // same thing, by antisymmetry of the bracket
    }
}

TEST_CASE("cochain differential squares to zero", "[liealg]") {
    Sampler s(109, 2, 1);

    // Trivial action, linear 1-cochain.
    auto alpha1 = [](const std::vector<Matrix>& xs) {
        return ScalarValue::from_form(symbol(xs[0]).trace());
    };
    auto dalpha1 = [&](const std::vector<Matrix>& xs) {
        return ce_differential_eval<ScalarValue>(alpha1, xs, ScalarValue{});
    };
    for (int t = 0; t < 10; ++t) {
        const std::vector<Matrix> args = {s.g_element(3), s.g_element(3), s.g_element(3)};
        REQUIRE(ce_differential_eval<ScalarValue>(dalpha1, args, ScalarValue{}).is_zero());
    }

    // Trivial action, antisymmetric 2-cochain.
    auto alpha2 = [](const std::vector<Matrix>& xs) {
        return ScalarValue::from_form(symbol(bracket(xs[0], xs[1])).trace());
    };
    auto dalpha2 = [&](const std::vector<Matrix>& xs) {
        return ce_differential_eval<ScalarValue>(alpha2, xs, ScalarValue{});
    };
    for (int t = 0; t < 8; ++t) {
        const std::vector<Matrix> args = {s.g_element(2), s.g_element(2), s.g_element(2),
                                          s.g_element(2)};
        REQUIRE(ce_differential_eval<ScalarValue>(dalpha2, args, ScalarValue{}).is_zero());
    }

    // Adjoint action on the identity 1-cochain.
    auto theta = [](const std::vector<Matrix>& xs) { return xs[0]; };
    auto act = [](const Matrix& a, const Matrix& v) { return bracket(a, v); };
    auto dtheta = [&](const std::vector<Matrix>& xs) {
        return ce_differential_eval<Matrix>(theta, xs, CEAction::adjoint, Matrix(2, 1), act);
    };
    for (int t = 0; t < 10; ++t) {
        const std::vector<Matrix> args = {s.g_element(2), s.g_element(2), s.g_element(2)};
        REQUIRE(ce_differential_eval<Matrix>(dtheta, args, CEAction::adjoint, Matrix(2, 1), act)
                    .is_zero());
    }
}

TEST_CASE("characteristic series coefficients", "[liealg][oracle]") {
    // Coefficient of tr(R^{2k}) in the logarithm of the square-root
    // determinant factor, cross-checked against the Bernoulli oracle:
    // -(1/2) 2^{-2k} [y^{2k}] log(sinh y / y) = -B_{2k} / (4k (2k)!).
    for (int k = 1; k <= 5; ++k) {
        const Rational expected =
            -Rational(oracle::bernoulli(2 * k)) /
            (factorial(static_cast<unsigned>(2 * k)) * rat(4 * k));
        REQUIRE(ahat_log_coefficient(k) == expected);
    }
    CHECK(ahat_log_coefficient(1) == rat(-1, 48));
    CHECK(ahat_log_coefficient(2) == rat(1, 5760));
    CHECK(ahat_log_coefficient(3) == rat(-1, 362880));
}

TEST_CASE("quadratic hamiltonians act by matrices", "[liealg]") {
    const Form p = pvar(), q = qvar();
    // [p^2, q] = 2p and [p^2, p] = 0.
    const Matrix m = sp_matrix(p * p);
    CHECK(m.at(0, 1) == cst(2, 2));
    CHECK(m.at(0, 0).is_zero());
    CHECK(m.at(1, 0).is_zero());
    CHECK(m.at(1, 1).is_zero());
    // pq acts diagonally with opposite signs.
    const Matrix d = sp_matrix(p * q);
    CHECK(d.at(0, 0) == cst(2, -1));
    CHECK(d.at(1, 1) == cst(2, 1));
    CHECK_THROWS_AS(sp_matrix(p * p * p), std::invalid_argument);
}

TEST_CASE("pair shuffles", "[liealg]") {
    CHECK(pair_shuffles(1).size() == 1);
    // Ordered sequences of two disjoint increasing pairs covering 0..3:
    // six of them, each unordered pairing twice with the same sign.
    const auto shuffles = pair_shuffles(2);
    REQUIRE(shuffles.size() == 6);
    int positive = 0, negative = 0;
    for (const PairShuffle& s : shuffles) {
        REQUIRE(s.pairs.size() == 2);
        std::array<bool, 4> seen{};
        for (const auto& [lo, hi] : s.pairs) {
            REQUIRE(lo < hi);
            seen[static_cast<std::size_t>(lo)] = true;
            seen[static_cast<std::size_t>(hi)] = true;
        }
        REQUIRE((seen[0] && seen[1] && seen[2] && seen[3]));
        (s.sign > 0 ? positive : negative) += 1;
    }
    CHECK(positive == 4);
    CHECK(negative == 2);
}

TEST_CASE("characteristic cochain anchors", "[liealg]") {
    const Form p = pvar(), q = qvar();

    CHECK(ahat_eval({}) == sv(0, 0, 1));
    CHECK(ahat_eval({sc(1, p), sc(1, q)}).is_zero());

    // Degree-2 trace-character value on the bundle pair.
    const Matrix a = sc(2, p);
    const Matrix b = Matrix::unit(2, 0, 0, q).h_shift(1);
    CHECK(ch_eval({a, b}, 2) == sv(0, 0, -1));
    CHECK(ch_eval({}, 2) == sv(0, 0, 2));

    // Degree-4 values on the mixed quadruple (cross-checked end to end by
    // the index comparison): the square-root-determinant side contributes
    // 1/2, the trace-character side nothing.
    const std::vector<Matrix> quad = {sc(1, p), sc(1, q), sc(1, p * p * q), sc(1, p * q * q)};
    CHECK(ahat_eval(quad) == sv(0, 0, 1, 2));
    CHECK(ch_eval(quad, 1).is_zero());
    CHECK_THROWS_AS(ahat_eval({sc(1, p)}), std::invalid_argument);
}
