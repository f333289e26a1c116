/*
 * term.hpp
 * --------
 * The shared sparse-term key for Weyl-algebra elements and formal forms.
 *
 * A term is  c * h^k * u^l * y^alpha * dy^{i_1} ^ ... ^ dy^{i_m}  with the
 * dy factors stored as a bitmask and normalized to increasing index order
 * (the stored coefficient refers to that ordering).  Weyl-algebra elements
 * are exactly the terms with dy = 0 and u = 0.
 *
 * Member order gives the canonical term ordering for deterministic
 * serialization: h-exponent first, then lexicographic y-exponents.
 */
#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>

namespace weyltrace {

// Maximum number of y-variables (2n <= kMaxVars, i.e. n <= 4).
inline constexpr int kMaxVars = 8;

struct TermKey {
    std::int16_t h = 0;                    // hbar exponent (may be negative)
    std::array<std::uint8_t, kMaxVars> y{};  // exponents of y^1..y^{2n}
    std::uint8_t dy = 0;                   // bit (i-1) set <=> dy^i present
    std::int16_t u = 0;                    // u exponent (may be negative)

    auto operator<=>(const TermKey&) const = default;

    int y_degree() const {
        int d = 0;
        for (int e : y) d += e;
        return d;
    }
    int dy_count() const { return std::popcount(dy); }
    // The weight grading of the Weyl algebra: wt(y) = 1, wt(hbar) = 2.
    int weight() const { return y_degree() + 2 * h; }
};

// Sign of merging two increasing dy-products:  (dy's of a) ^ (dy's of b)
// reordered to increasing order.  Counts inversions, i.e. pairs i in a,
// j in b with i > j.  Returns 0 if the masks collide (dy^i ^ dy^i = 0).
inline int dy_merge_sign(std::uint8_t a, std::uint8_t b) {
    if (a & b) return 0;
    int inv = 0;
    for (int i = 0; i < 8; ++i)
        if (b & (1u << i)) inv += std::popcount(static_cast<unsigned>(a) >> (i + 1));
    return (inv % 2 == 0) ? 1 : -1;
}

// Sign of inserting a single dy^k (1-based index) from the left into an
// increasing dy-product: one transposition per present index below k.
inline int dy_insert_sign(std::uint8_t mask, int k) {
    int below = std::popcount(static_cast<unsigned>(mask) & ((1u << (k - 1)) - 1u));
    return (below % 2 == 0) ? 1 : -1;
}

}  // namespace weyltrace
