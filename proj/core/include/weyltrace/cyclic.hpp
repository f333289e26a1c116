/*
 * cyclic.hpp
 * ----------
 * Cyclic tensors of gl_r(W_2n), the Hochschild differential b, the Connes
 * operator B, the periodic combination b + uB, and the shuffle product.
 *
 * A chain is a formal rational combination of ordered tensors
 *   hbar^h u^u (E_{a0 b0} y^alpha0) (x) ... (x) (E_{am bm} y^alpham),
 * expanded over matrix units and monomials.  Tensors are C((hbar))-linear,
 * so hbar (and u) exponents live globally on each summand, never in a slot.
 *
 * Slots 1..m are reduced modulo pure-hbar scalar multiples of the identity
 * matrix (bar-normalization): on a y-degree-0 slot the projection
 * A -> A - (tr A / r) Id is applied; slot 0 is unrestricted.
 */
#pragma once

#include <vector>

#include "weyltrace/weyl.hpp"

namespace weyltrace {

struct SlotKey {
    std::uint8_t row = 0, col = 0;           // matrix unit E_{row, col}, 0-based
    std::array<std::uint8_t, kMaxVars> y{};  // monomial exponents

    auto operator<=>(const SlotKey&) const = default;
    int y_degree() const {
        int d = 0;
        for (int e : y) d += e;
        return d;
    }
};

struct ChainKey {
    std::int16_t h = 0;          // global hbar exponent
    std::int16_t u = 0;          // global u exponent (periodic complex)
    std::vector<SlotKey> slots;  // slots 0..m

    auto operator<=>(const ChainKey&) const = default;
};

class Chain {
  public:
    Chain(int dim, int r) : dim_(dim), r_(r) {
        if (r < 1) throw std::invalid_argument("Chain: rank must be positive");
    }

    // Multilinear basis expansion of A_0 (x) ... (x) A_m.  Entries must be
    // Weyl elements (no dy, no u); their hbar content moves to the global
    // exponent.  The result is NOT bar-normalized (call bar_normalize).
    static Chain from_matrices(const std::vector<Matrix>& entries);

    // The 0-chain "1" (the identity matrix).
    static Chain unit(int dim, int r);

    int dim() const { return dim_; }
    int rank() const { return r_; }
    const std::map<ChainKey, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Chain& add_term(const ChainKey& k, const Rational& c) {
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

    Chain& operator+=(const Chain& o) {
        check_shape(o);
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    Chain& operator-=(const Chain& o) {
        check_shape(o);
        for (const auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }
    Chain& operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, v] : terms_) v *= c;
        return *this;
    }
    friend Chain operator+(Chain a, const Chain& b) { return a += b; }
    friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
    friend Chain operator*(Chain a, const Rational& c) { return a *= c; }
    friend Chain operator*(const Rational& c, Chain a) { return a *= c; }

    bool operator==(const Chain& o) const {
        return dim_ == o.dim_ && r_ == o.r_ && terms_ == o.terms_;
    }

    Chain h_shift(int k) const {
        Chain out(dim_, r_);
        for (const auto& [key, c] : terms_) {
            ChainKey nk = key;
            nk.h = static_cast<std::int16_t>(nk.h + k);
            out.add_term(nk, c);
        }
        return out;
    }
    Chain u_shift(int k) const {
        Chain out(dim_, r_);
        for (const auto& [key, c] : terms_) {
            ChainKey nk = key;
            nk.u = static_cast<std::int16_t>(nk.u + k);
            out.add_term(nk, c);
        }
        return out;
    }

    void check_shape(const Chain& o) const {
        if (dim_ != o.dim_ || r_ != o.r_)
            throw std::invalid_argument("Chain: dimension or rank mismatch");
    }

  private:
    int dim_, r_;
    std::map<ChainKey, Rational> terms_;
};

// Reduce slots >= 1 modulo C((hbar)) * Id: on every y-degree-0 slot apply
// the idempotent A -> A - (tr A / r) Id.  Canonical: equal chains modulo
// the degenerate subspace have equal normal forms.
Chain bar_normalize(const Chain& c);

// Hochschild differential (products are Moyal products); bar-normalized.
//   b(A_0 (x)...(x) A_m) = sum_i (-1)^i A_0 (x)..(x) A_i A_{i+1} (x)..(x) A_m
//                        + (-1)^m A_m A_0 (x) A_1 (x)..(x) A_{m-1}.
Chain hochschild_b(const Chain& c);

// Connes operator, bar-normalized:
//   B(A_0 (x)...(x) A_m) = sum_i (-1)^{m i} 1 (x) A_i (x)..(x) A_m (x) A_0 (x)..(x) A_{i-1}.
Chain connes_B(const Chain& c);

// b + uB, the periodic differential.
Chain boundary_periodic(const Chain& c);

// Shuffle product of pure tensor blocks (no slot-0 semantics): the sum over
// all interleavings preserving each block's internal order.  Entries of
// chains are even, so no signs arise.
Chain shuffle(const Chain& s, const Chain& t);

// The slot-wise adjoint action sum_s A_0 (x)..(x) [a, A_s] (x)..(x) A_m,
// bar-normalized.  Used by the Lie-cochain identities.
Chain ad_action(const Matrix& a, const Chain& c);

// Decompose into fixed-length layers: one sub-chain per slot count.  The
// closedness identities are graded by chain length, so callers evaluate
// them layer by layer.
std::map<int, Chain> slot_layers(const Chain& c);

}  // namespace weyltrace
