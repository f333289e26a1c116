/*
 * configspace.hpp
 * ---------------
 * Exact integration over cyclic configuration spaces of the circle.
 *
 * m+1 marked points in cyclic order cut the circle into gaps
 * u_0, ..., u_m with u_0 + ... + u_m = 1; the moduli of the gaps is the
 * standard simplex Delta_m (Lebesgue mass 1/m!).  Polynomials are stored
 * in the m FREE gaps u_0..u_{m-1}, with u_m eliminated as 1 - sum.  The
 * overall circle factor integrates to 1 and the orientation is fixed so
 * that the gap-coordinate volume form is +1 times Lebesgue measure.
 */
#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "weyltrace/rational.hpp"

namespace weyltrace {

// Integral over Delta_m of the monomial prod t_i^{a_i} in barycentric
// coordinates: (prod a_i!) / (m + sum a_i)!.  Fewer than m+1 exponents are
// padded with zeros.
Rational simplex_monomial_integral(int m, const std::vector<int>& exponents);

// Polynomial on the gap simplex, reduced to the m free gap variables.
class SimplexPoly {
  public:
    explicit SimplexPoly(int m) : m_(m) {
        if (m < 0) throw std::invalid_argument("SimplexPoly: negative point count");
    }
    static SimplexPoly constant(int m, const Rational& c) {
        SimplexPoly p(m);
        p.add_term(std::vector<std::uint8_t>(static_cast<std::size_t>(m), 0), c);
        return p;
    }
    // The free gap variable u_g, 0 <= g < m.
    static SimplexPoly gap(int m, int g) {
        if (g < 0 || g >= m) throw std::invalid_argument("SimplexPoly: gap index out of range");
        SimplexPoly p(m);
        std::vector<std::uint8_t> e(static_cast<std::size_t>(m), 0);
        e[static_cast<std::size_t>(g)] = 1;
        p.add_term(e, 1);
        return p;
    }

    int points() const { return m_ + 1; }
    const std::map<std::vector<std::uint8_t>, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    SimplexPoly& add_term(const std::vector<std::uint8_t>& e, const Rational& c) {
        if (e.size() != static_cast<std::size_t>(m_))
            throw std::invalid_argument("SimplexPoly: bad exponent tuple length");
        if (c == 0) return *this;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
        return *this;
    }

    SimplexPoly& operator+=(const SimplexPoly& o) {
        check(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    SimplexPoly& operator-=(const SimplexPoly& o) {
        check(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    SimplexPoly& operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, v] : terms_) v *= c;
        return *this;
    }
    friend SimplexPoly operator+(SimplexPoly a, const SimplexPoly& b) { return a += b; }
    friend SimplexPoly operator-(SimplexPoly a, const SimplexPoly& b) { return a -= b; }
    friend SimplexPoly operator*(SimplexPoly a, const Rational& c) { return a *= c; }
    friend SimplexPoly operator*(const Rational& c, SimplexPoly a) { return a *= c; }
    friend SimplexPoly operator*(const SimplexPoly& a, const SimplexPoly& b) {
        a.check(b);
        SimplexPoly out(a.m_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                std::vector<std::uint8_t> e(ea.size());
                for (std::size_t i = 0; i < e.size(); ++i)
                    e[i] = static_cast<std::uint8_t>(ea[i] + eb[i]);
                out.add_term(e, ca * cb);
            }
        }
        return out;
    }

    bool operator==(const SimplexPoly& o) const { return m_ == o.m_ && terms_ == o.terms_; }

    // Exact integral over Delta_m.
    Rational integrate() const {
        Rational total = 0;
        for (const auto& [e, c] : terms_) {
            std::vector<int> a(e.begin(), e.end());
            total += c * simplex_monomial_integral(m_, a);
        }
        return total;
    }

    void check(const SimplexPoly& o) const {
        if (m_ != o.m_) throw std::invalid_argument("SimplexPoly: point count mismatch");
    }

  private:
    int m_;
    std::map<std::vector<std::uint8_t>, Rational> terms_;
};

// A finite multiset of propagator edges on m+1 cyclically ordered points.
struct PropagatorPattern {
    int m = 0;                               // points are 0..m
    std::vector<std::pair<int, int>> edges;  // ordered pairs (alpha, beta), alpha != beta
};

// P_{alpha beta} = (sum of gaps crossed traveling anticlockwise from alpha
// to beta) - 1/2, in eliminated gap coordinates.  Antisymmetric on the
// simplex: P_{alpha beta} + P_{beta alpha} = 0 identically after
// elimination.
SimplexPoly propagator_polynomial(int m, int alpha, int beta);

// Integral over the gap simplex of the product of the pattern's propagators.
Rational pattern_integral(const PropagatorPattern& p);

// Integral of P_{12} P_{23} ... P_{k1} over configurations of k points on
// the circle: the sum over the (k-1)! cyclic orders (point 1 pinned) of the
// corresponding pattern integrals.  Vanishes for odd k; equals -B_k/k! for
// even k (B_k the Bernoulli numbers).
Rational wheel_coefficient(int k);

}  // namespace weyltrace
