/*
 * trace.hpp
 * ---------
 * The universal trace (BV integral of the interacting expectation), the
 * hbar-connection nabla = hbar d/d hbar + E (E the half-Euler vector field
 * grading y and dy by 1/2), and the executable identities built on them:
 * the cocycle residual, the Gauss-Manin residual, and the index comparison.
 */
#pragma once

#include "weyltrace/expectation.hpp"
#include "weyltrace/liealg.hpp"

namespace weyltrace {

// nabla on each carrier: every term is scaled by
// (hbar-exponent + (y-degree + dy-count)/2); on pure scalars this is
// hbar d/d hbar.  u is untouched.
Form nabla_hbar(const Form& f);
ScalarValue nabla_hbar(const ScalarValue& s);
Matrix nabla_hbar(const Matrix& m);
Chain nabla_hbar(const Chain& c);

// Tr-hat[args](c): BV integral of the interacting expectation.  With
// use_gamma set, each argument is first passed through gamma_hat; the
// values agree because pure h-insertions die under the trace.
ScalarValue universal_trace(const std::vector<Matrix>& args, const Chain& c,
                            bool use_gamma = false);

// Pointwise closedness residual of the trace cochain,
//   (d_Lie Tr-hat)(args)(c) + Tr-hat(args)((b + uB) c),
// with the Lie action pairing each argument with the chain slot-wise.  The
// argument insertions are odd relative to the chain entries, so the
// Lie-differential terms are graded by chain length: on a layer with s
// slots the adjoint terms carry (-1)^{s+i} and the bracket re-pairings
// carry (-1)^{s+i+j+1}.  Identically zero.
ScalarValue cocycle_residual(const std::vector<Matrix>& args, const Chain& c);

// Pointwise residual of the hbar-flatness identity for degrees 0 and 2:
//   nabla(Tr-hat(1)) + nabla(R3/(u hbar)) . Tr-hat[](1)
//     + u^{-1} theta([a1, a2]),
// where theta(a) = Tr-hat[](nabla(gamma_hat(a)/hbar) as a 0-chain).
// Identically zero.
ScalarValue gm_residual(const std::vector<Matrix>& args, int n, int r);

// Both sides of the index comparison at degree |args| (0, 2, or 4):
//   trace side:   degree component of e^{R3/(u hbar)} cup Tr-hat(1),
//   formula side: degree component of u^n (A-hat_u cup Ch_u),
// with the u-rescaling alpha_u = u^{-p/2} alpha_p on degree-p pieces and
// the Chern insertion -R2/(u hbar).
struct IndexReport {
    ScalarValue trace_side;
    ScalarValue formula_side;
    ScalarValue difference;
};
IndexReport index_report(int n, int r, const std::vector<Matrix>& args);

}  // namespace weyltrace
