/*
 * expectation.hpp
 * ---------------
 * The free and interacting expectation value maps from cyclic chains to
 * formal de Rham forms.
 *
 * Free map on a basis tensor A_0 (x) ... (x) A_m: place the slots at m+1
 * marked points of the circle, take A_0 (x) dA_1 (x) ... (x) dA_m, expand
 * the contraction exponential e^{hbar @_P} (each application of @_P picks
 * two distinct points, multiplies the weight polynomial by the propagator
 * between them and differentiates the two slots through the symplectic
 * pairing), integrate the weight over the gap simplex, multiply the slots
 * in cyclic order and take the matrix trace.  Extended K-linearly in the
 * global hbar and u exponents.
 *
 * Interacting map: sum over all order-preserving interleavings of the k
 * argument insertions among the chain slots after slot 0 and over all
 * signed bijections of arguments to insertion slots, of the free value of
 * the combined chain with each inserted argument divided by hbar.  No 1/k!
 * normalization.  Each interleaving carries a graded shuffle sign: both the
 * insertions and the differential-bearing chain entries are odd, so a term
 * is weighted by (-1)^{number of transpositions needed to move the
 * insertions from the end of the word to their interleaved positions}.
 * Antisymmetric in the arguments.
 */
#pragma once

#include "weyltrace/cyclic.hpp"
#include "weyltrace/forms.hpp"

namespace weyltrace {

// <A_0 (x) ... (x) A_m>_free as an element of the form algebra.
Form free_expectation(const Chain& c);

// <c>_int(args); args must be certified members of the Lie algebra g
// (no negative hbar powers; scalar symbol at hbar^0).
Form interacting_expectation(const std::vector<Matrix>& args, const Chain& c);

}  // namespace weyltrace
