/*
 * sampler.hpp
 * -----------
 * Deterministic random generators for the property suites and the CLI.
 *
 * All draws go through std::mt19937_64 with raw modulo reduction (never
 * std::uniform_int_distribution, whose mapping is implementation-defined),
 * so a fixed seed produces byte-identical samples on every platform.
 *
 * Elements are sampled homogeneously by the Weyl weight grading
 * (wt(y) = 1, wt(hbar) = 2) with small integer coefficients.
 */
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "weyltrace/cyclic.hpp"
#include "weyltrace/liealg.hpp"
#include "weyltrace/weyl.hpp"

namespace weyltrace {

class Sampler {
public:
    Sampler(std::uint64_t seed, int dim, int r)
        : eng_(seed), dim_(dim), r_(r) {
        if (dim < 2 || dim > kMaxVars || dim % 2 != 0)
            throw std::invalid_argument("Sampler: dimension must be even, 2..8");
        if (r < 1) throw std::invalid_argument("Sampler: rank must be >= 1");
    }

    int dim() const { return dim_; }
    int rank() const { return r_; }

    // Uniform integer in [lo, hi], inclusive.
    int uniform(int lo, int hi) {
        return lo + static_cast<int>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    // Nonzero rational with numerator in [-3,3] and denominator in {1,2}.
    Rational coefficient() {
        int num = uniform(1, 3) * (uniform(0, 1) == 0 ? 1 : -1);
        return rat(num, uniform(1, 2));
    }

    // A single monomial term of exact weight w (y-degree + 2 hbar-degree),
    // optionally with dy factors and a u power.
    TermKey term_key(int weight, bool allow_dy = false, bool allow_u = false) {
        TermKey k;
        k.h = static_cast<std::int16_t>(uniform(0, weight / 2));
        int ydeg = weight - 2 * k.h;
        for (int t = 0; t < ydeg; ++t)
            ++k.y[static_cast<std::size_t>(uniform(0, dim_ - 1))];
        if (allow_dy)
            for (int i = 0; i < dim_; ++i)
                if (uniform(0, 3) == 0) k.dy = static_cast<std::uint8_t>(k.dy | (1u << i));
        if (allow_u) k.u = static_cast<std::int16_t>(uniform(0, 1));
        return k;
    }

    // Polynomial Weyl element: one to three monomials of weight <= max_weight.
    Form weyl_element(int max_weight) {
        Form f(dim_);
        const int terms = uniform(1, 3);
        for (int t = 0; t < terms; ++t) {
            TermKey k = term_key(uniform(0, max_weight));
            f.add_term(k, coefficient());
        }
        return f;
    }

    // Form-algebra element, possibly carrying dy factors and u powers.
    Form form_element(int max_weight) {
        Form f(dim_);
        const int terms = uniform(1, 3);
        for (int t = 0; t < terms; ++t)
            f.add_term(term_key(uniform(0, max_weight), true, true), coefficient());
        return f;
    }

    // r x r matrix with Weyl-element entries; roughly half the entries vanish
    // when r > 1, and the result is never identically zero.
    Matrix weyl_matrix(int max_weight) {
        for (;;) {
            Matrix m(dim_, r_);
            bool nonzero = false;
            for (int i = 0; i < r_; ++i)
                for (int j = 0; j < r_; ++j) {
                    if (r_ > 1 && uniform(0, 1) == 0) continue;
                    m.at(i, j) = weyl_element(max_weight);
                    nonzero = nonzero || !m.at(i, j).is_zero();
                }
            if (nonzero) return m;
        }
    }

    // Member of the Lie algebra g: f * Id + hbar * A with f a scalar Weyl
    // element and A a Weyl-element matrix.
    Matrix g_element(int max_weight) {
        Matrix m = Matrix::scalar(r_, weyl_element(max_weight));
        if (uniform(0, 1) == 0) m += weyl_matrix(max_weight).h_shift(1);
        return m;
    }

    // Member of the subalgebra h: quadratic scalar + hbar * constant matrix
    // + constant + higher hbar scalars.
    Matrix h_element() {
        Form sp(dim_);
        const int quads = uniform(1, 2);
        for (int t = 0; t < quads; ++t) {
            TermKey k;
            ++k.y[static_cast<std::size_t>(uniform(0, dim_ - 1))];
            ++k.y[static_cast<std::size_t>(uniform(0, dim_ - 1))];
            sp.add_term(k, coefficient());
        }
        Matrix m = Matrix::scalar(r_, sp);
        Matrix gl(dim_, r_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < r_; ++j)
                if (uniform(0, 1) == 0)
                    gl.at(i, j) = Form::constant(dim_, coefficient());
        m += gl.h_shift(1);
        if (uniform(0, 1) == 0)
            m += Matrix::scalar(r_, Form::constant(dim_, coefficient()));
        if (uniform(0, 2) == 0)
            m += Matrix::scalar(r_, Form::constant(dim_, coefficient()).h_shift(2));
        return m;
    }

    // Cyclic chain with 1..max_slots tensor slots of bounded entry weight.
    Chain chain(int max_slots, int max_weight) {
        const int slots = uniform(1, max_slots);
        std::vector<Matrix> ms;
        ms.reserve(static_cast<std::size_t>(slots));
        for (int s = 0; s < slots; ++s) ms.push_back(weyl_matrix(max_weight));
        return bar_normalize(Chain::from_matrices(ms));
    }

private:
    std::mt19937_64 eng_;
    int dim_;
    int r_;
};

}  // namespace weyltrace
