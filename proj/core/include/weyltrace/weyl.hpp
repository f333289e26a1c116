/*
 * weyl.hpp
 * --------
 * Exact arithmetic for the (matrix-valued) Weyl algebra W_2n:
 * the Moyal star product, the rescaled Lie bracket, the symbol map and
 * the weight decomposition.
 *
 * Conventions: y^1..y^n = p^1..p^n, y^{n+1}..y^{2n} = q^1..q^n, and the
 * constant symplectic tensor has omega^{i, n+i} = +1.  The star product is
 *   f * g = m(e^{hbar Pi}(f (x) g)),   Pi = (1/2) omega^{ij} d_{y^i} (x) d_{y^j},
 * a finite bidifferential expansion on polynomials.  The bracket is
 *   [f, g] = (1/hbar)(f*g - g*f),
 * so hbar-exponents may become negative.
 */
#pragma once

#include <tuple>
#include <vector>

#include "weyltrace/form.hpp"

namespace weyltrace {

// The nonzero entries (i, j, omega^{ij}) of the symplectic tensor,
// 1-based: (i, n+i, +1) and (n+i, i, -1) for 1 <= i <= n.
inline std::vector<std::tuple<int, int, int>> symplectic_pairs(int dim) {
    if (dim % 2 != 0) throw std::invalid_argument("symplectic_pairs: odd dimension");
    std::vector<std::tuple<int, int, int>> out;
    int n = dim / 2;
    for (int i = 1; i <= n; ++i) {
        out.emplace_back(i, n + i, +1);
        out.emplace_back(n + i, i, -1);
    }
    return out;
}

// Moyal product of scalar Weyl elements (no dy, no u factors).
Form moyal_mul(const Form& f, const Form& g);

// [f, g] = (1/hbar)(f*g - g*f) for scalar Weyl elements.
Form bracket(const Form& f, const Form& g);

// r x r matrices over the form algebra; houses gl_r(W_2n) when the entries
// are Weyl elements, and matrix-valued forms during expectation evaluation.
class Matrix {
  public:
    Matrix() : dim_(0), r_(0) {}
    Matrix(int dim, int r) : dim_(dim), r_(r), e_(static_cast<size_t>(r) * r, Form(dim)) {
        if (r < 1) throw std::invalid_argument("Matrix: rank must be positive");
    }

    static Matrix identity(int dim, int r) {
        Matrix m(dim, r);
        for (int i = 0; i < r; ++i) m.at(i, i) = Form::constant(dim, 1);
        return m;
    }
    // f * Id for a scalar form f.
    static Matrix scalar(int r, const Form& f) {
        Matrix m(f.dim(), r);
        for (int i = 0; i < r; ++i) m.at(i, i) = f;
        return m;
    }
    // f * E_{ij} (0-based unit matrix positions).
    static Matrix unit(int r, int i, int j, const Form& f) {
        Matrix m(f.dim(), r);
        m.at(i, j) = f;
        return m;
    }

    int dim() const { return dim_; }
    int rank() const { return r_; }
    Form& at(int i, int j) { return e_[static_cast<size_t>(i) * r_ + j]; }
    const Form& at(int i, int j) const { return e_[static_cast<size_t>(i) * r_ + j]; }

    bool is_zero() const {
        for (const auto& f : e_)
            if (!f.is_zero()) return false;
        return true;
    }
    bool operator==(const Matrix& o) const { return dim_ == o.dim_ && r_ == o.r_ && e_ == o.e_; }

    Matrix& operator+=(const Matrix& o) {
        check_shape(o);
        for (size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_shape(o);
        for (size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
        return *this;
    }
    Matrix& operator*=(const Rational& c) {
        for (auto& f : e_) f *= c;
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const Rational& c) { return a *= c; }
    friend Matrix operator*(const Rational& c, Matrix a) { return a *= c; }
    friend Matrix operator-(Matrix a) { return a *= Rational(-1); }

    Matrix h_shift(int k) const {
        Matrix out(dim_, r_);
        for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i].h_shift(k);
        return out;
    }

    Form trace() const {
        Form t(dim_);
        for (int i = 0; i < r_; ++i) t += at(i, i);
        return t;
    }

    bool has_dy() const {
        for (const auto& f : e_)
            if (f.has_dy()) return true;
        return false;
    }
    bool has_u() const {
        for (const auto& f : e_)
            if (f.has_u()) return true;
        return false;
    }

    void check_shape(const Matrix& o) const {
        if (dim_ != o.dim_ || r_ != o.r_)
            throw std::invalid_argument("Matrix: dimension or rank mismatch");
    }

  private:
    int dim_, r_;
    std::vector<Form> e_;
};

// Matrix multiplication with Moyal products of the entries.
Matrix moyal_mul(const Matrix& a, const Matrix& b);

// Matrix multiplication with graded-commutative products of the entries
// (the product of matrix-valued forms; no star deformation).
Matrix wedge_mul(const Matrix& a, const Matrix& b);

// [a, b] = (1/hbar)(a*b - b*a), the Lie bracket of gl_r(W_2n).
Matrix bracket(const Matrix& a, const Matrix& b);

// Symbol map: keep only the y-degree-0 terms of every entry.
Matrix symbol(const Matrix& a);
Form symbol(const Form& f);

// Decomposition by weight (wt y = 1, wt hbar = 2), ascending; summing the
// components recovers the input.
std::vector<std::pair<int, Matrix>> weight_components(const Matrix& a);
std::vector<std::pair<int, Form>> weight_components(const Form& f);

}  // namespace weyltrace
