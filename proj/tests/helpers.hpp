/*
 * helpers.hpp
 * -----------
 * Shared shorthand for the unit tests: named generators of the
 * low-dimensional Weyl algebra, scalar matrices, bar-normalized chains
 * and scalar-value literals.
 */
#pragma once

#include <vector>

#include "weyltrace/cyclic.hpp"
#include "weyltrace/weyl.hpp"

namespace testutil {

using weyltrace::Chain;
using weyltrace::Form;
using weyltrace::Matrix;
using weyltrace::Rational;
using weyltrace::ScalarValue;

// y^1 (= p^1) and y^{n+1} (= q^1) in dimension 2n.
inline Form pvar(int dim = 2) { return Form::variable(dim, 1); }
inline Form qvar(int dim = 2) { return Form::variable(dim, dim / 2 + 1); }
inline Form cst(int dim, long num, long den = 1) {
    return Form::constant(dim, weyltrace::rat(num, den));
}
inline Form dy(int dim, int i) { return Form::dy_variable(dim, i); }

inline Matrix sc(int r, const Form& f) { return Matrix::scalar(r, f); }

inline Chain chain_of(const std::vector<Matrix>& entries) {
    return weyltrace::bar_normalize(Chain::from_matrices(entries));
}

inline ScalarValue sv(int h, int u, long num, long den = 1) {
    return ScalarValue::monomial(h, u, weyltrace::rat(num, den));
}

}  // namespace testutil
