/*
 * forms.hpp
 * ---------
 * Operators on the formal de Rham/BV algebra in 2n variables:
 *
 *   d      = dy^k d_{y^k}            (degree -1, odd, applied from the left)
 *   i_Pi   = (1/2) omega^{ij} i_i i_j  (degree +2; each i_i is an odd left
 *                                       derivation with i_i(dy^j) = delta_i^j)
 *   Delta  = omega^{ij} L_i i_j      (degree +1; equals [d, i_Pi])
 *
 * and the Berezin/BV integration  a -> sigma(u^n e^{hbar i_Pi / u} a), where
 * sigma sets all y and dy to zero, landing in K = C((hbar))[u, u^-1].
 *
 * The same operators extend to tensor powers of the form algebra with
 * Koszul signs (odd operators pick up a sign per odd slot they pass).
 */
#pragma once

#include <vector>

#include "weyltrace/weyl.hpp"

namespace weyltrace {

// De Rham differential, dy factors inserted from the left.
Form d(const Form& w);

// Contraction i_{d/d y^i} (1-based), an odd left derivation.
Form iota(const Form& w, int i);

// i_Pi = (1/2) omega^{ij} i_i i_j.
Form iota_pi(const Form& w);

// Delta = omega^{ij} L_{y^i} i_{y^j}; satisfies the graded commutator
// identity Delta = d i_Pi - i_Pi d (i_Pi is even).
Form delta(const Form& w);

// Entry-wise extensions to matrices of forms.
Matrix d(const Matrix& w);

// Berezin/BV integration for ambient half-dimension n (dim = 2n).
ScalarValue bv_integrate(const Form& w, int n);

// Ordered tensor products of forms with exact combination of like terms.
class FormTensor {
  public:
    FormTensor(int dim, std::size_t slot_count) : dim_(dim), slots_(slot_count) {}

    // The outer product f_1 (x) ... (x) f_k, expanded termwise.
    static FormTensor from_forms(const std::vector<Form>& factors);

    int dim() const { return dim_; }
    std::size_t slot_count() const { return slots_; }
    const std::map<std::vector<TermKey>, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    FormTensor& add_term(const std::vector<TermKey>& k, const Rational& c) {
        if (c == 0) return *this;
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
        return *this;
    }
    FormTensor& operator+=(const FormTensor& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    bool operator==(const FormTensor& o) const {
        return dim_ == o.dim_ && slots_ == o.slots_ && terms_ == o.terms_;
    }

    // Multiply the slots left-to-right into a single form.
    Form collapse() const;

  private:
    int dim_;
    std::size_t slots_;
    std::map<std::vector<TermKey>, Rational> terms_;
};

enum class TensorOp { d, iota_pi, delta };

// The Koszul-signed extension of d, i_Pi or Delta to tensors:
//   d      acts slot-wise,
//   i_Pi   = (1/2) sum_{a,b} omega^{ij} i_i at slot a, i_j at slot b,
//   Delta  =       sum_{a,b} omega^{ij} L_i at slot a, i_j at slot b,
// where the sums include a = b (the slot-wise part) and all cross terms.
FormTensor tensor_apply(TensorOp op, const FormTensor& t);

}  // namespace weyltrace
