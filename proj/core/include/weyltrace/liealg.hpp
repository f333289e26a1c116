/*
 * liealg.hpp
 * ----------
 * The Lie algebra g = W+ . Id + hbar gl_r(W+) of matrix Weyl elements with
 * scalar symbol at hbar^0, its distinguished subalgebra
 *   h = sp_2n (+) hbar gl_r (+) C (+)_{i >= 2} hbar^i C,
 * the equivariant projection pr onto h, the curvature of pr, the
 * complementary projection gamma_hat, the Chevalley-Eilenberg differential
 * evaluated pointwise, and the characteristic cochains (A-hat and Chern
 * character) built from the curvature by Chern-Weil pair evaluation.
 */
#pragma once

#include <functional>
#include <utility>

#include "weyltrace/weyl.hpp"

namespace weyltrace {

// Membership in g: entries free of negative hbar powers and of dy/u, and
// the hbar^0 component a scalar multiple of the identity matrix.
bool is_in_g(const Matrix& a);
void require_in_g(const Matrix& a);

// Unique splitting a = f . Id + hbar A with f hbar-free scalar and A a
// matrix over W+.
struct GDecomposition {
    Form f;    // scalar part, no hbar
    Matrix a;  // the A above (the hbar has been divided out)
};
GDecomposition decompose_g(const Matrix& a);

// The pr image, as the quadruple of h-components.
struct HDecomposition {
    Form sp_part;        // homogeneous quadratic, no hbar
    Matrix gl_part;      // hbar times a constant matrix
    Rational constant;   // hbar^0 central part
    ScalarValue higher;  // central hbar^i (i >= 2) trace part
};

HDecomposition pr(const Matrix& a);
// The h-element sp.Id + gl + (constant + higher).Id back in gl_r(W).
Matrix embed(const HDecomposition& d);
bool is_in_h(const Matrix& a);

// gamma_hat(a) = a - embed(pr(a)); kills h, fixes cubic-and-higher tails.
Matrix gamma_hat(const Matrix& a);

// Curvature of the projection, R := pr([a,b]) - [pr(a), pr(b)], split into
// its h-components (r1 quadratic scalar, r2 hbar x constant matrix, r3
// central scalar).  Antisymmetric; vanishes when either argument is in h.
struct Curvature {
    Form r1;
    Matrix r2;
    ScalarValue r3;
};
Curvature curvature(const Matrix& a, const Matrix& b);

// --- Chevalley-Eilenberg differential, evaluated pointwise -----------------
//
// (d alpha)(a_1,...,a_{k+1}) =
//     sum_i (-1)^{i-1} rho(a_i) alpha(..., a_i omitted, ...)
//   + sum_{i<j} (-1)^{i+j} alpha([a_i,a_j], ..., a_i, a_j omitted, ...).
//
// alpha is any evaluator of k-argument lists; act(a, v) realizes rho; zero
// supplies the additive identity of the value type.

enum class CEAction { trivial, adjoint };

template <class V, class Alpha, class Act>
V ce_differential_eval(Alpha&& alpha, const std::vector<Matrix>& args, CEAction action, V zero,
                       Act&& act) {
    V acc = std::move(zero);
    const int k1 = static_cast<int>(args.size());
    if (action == CEAction::adjoint) {
        for (int i = 0; i < k1; ++i) {
            std::vector<Matrix> rest;
            rest.reserve(static_cast<std::size_t>(k1) - 1);
            for (int t = 0; t < k1; ++t)
                if (t != i) rest.push_back(args[static_cast<std::size_t>(t)]);
            V v = act(args[static_cast<std::size_t>(i)], alpha(rest));
            acc = (i % 2 == 0) ? acc + v : acc - v;
        }
    }
    for (int i = 0; i < k1; ++i) {
        for (int j = i + 1; j < k1; ++j) {
            std::vector<Matrix> rest;
            rest.reserve(static_cast<std::size_t>(k1) - 1);
            rest.push_back(bracket(args[static_cast<std::size_t>(i)],
                                   args[static_cast<std::size_t>(j)]));
            for (int t = 0; t < k1; ++t)
                if (t != i && t != j) rest.push_back(args[static_cast<std::size_t>(t)]);
            V v = alpha(rest);
            acc = ((i + j) % 2 == 0) ? acc + v : acc - v;
        }
    }
    return acc;
}

template <class V, class Alpha>
V ce_differential_eval(Alpha&& alpha, const std::vector<Matrix>& args, V zero) {
    auto no_act = [](const Matrix&, const V& v) { return v; };
    return ce_differential_eval<V>(std::forward<Alpha>(alpha), args, CEAction::trivial,
                                   std::move(zero), no_act);
}

// --- characteristic cochains ----------------------------------------------

// Coefficient of tr(R1^{2k}) in log A-hat: -(1/2) * [y^{2k}] log(sinh y / y)
// * 2^{-2k}.  k = 1 gives -1/48.
Rational ahat_log_coefficient(int k);

// The 2n x 2n matrix of the bracket action of a quadratic Hamiltonian on
// the span of the linear coordinates: column l holds [H, y^l] expanded
// over the y^k basis.  Powers and traces of these realize tr(R1^{2k}).
Matrix sp_matrix(const Form& quadratic);

// All ordered sequences of m disjoint increasing index pairs covering
// 0..2m-1, each with the sign of the underlying permutation.  These are
// the (2,...,2)-shuffles used by cup products of 2-cochains.
struct PairShuffle {
    std::vector<std::pair<int, int>> pairs;
    int sign = 1;
};
std::vector<PairShuffle> pair_shuffles(int m);

// Bare shuffle (cup) evaluation of an invariant trace polynomial: the sum
// over pair_shuffles of sign * trace(product of insert(pair)).  No
// factorial normalization; exponential-series factors are the caller's.
ScalarValue chern_weil(const std::vector<Matrix>& args,
                       const std::function<Matrix(const Matrix&, const Matrix&)>& insert);

// Degree-|args| component of the A-hat cochain (no u-rescaling): 1 at
// degree 0, zero at degree 2, the leading log-term at degree 4.
ScalarValue ahat_eval(const std::vector<Matrix>& args);

// Degree-|args| component of the Chern character cochain tr(exp(-R2/hbar))
// (no u-rescaling); rank r is needed for the degree-0 trace of the
// identity.
ScalarValue ch_eval(const std::vector<Matrix>& args, int r);

}  // namespace weyltrace
