/*
 * form.hpp
 * --------
 * Sparse exact elements of the formal (negatively graded) de Rham algebra
 * in 2n variables: finite maps TermKey -> Rational with no zero entries.
 *
 * This one container carries every graded value in the engine:
 *   - Weyl-algebra elements are forms with no dy and no u factors,
 *   - formal forms add dy factors (cohomological degree -#dy + 2*u-exp),
 *   - pure (hbar, u)-scalars are the terms with no y and no dy.
 *
 * The product is the graded-commutative one (dy's anticommute, everything
 * else is even); the Moyal star product lives in weyl.hpp.
 */
#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "weyltrace/rational.hpp"
#include "weyltrace/term.hpp"

namespace weyltrace {

class Form {
  public:
    Form() : dim_(0) {}
    explicit Form(int dim) : dim_(dim) {
        if (dim < 0 || dim > kMaxVars)
            throw std::invalid_argument("Form: dimension out of range");
    }

    static Form constant(int dim, const Rational& c) {
        Form f(dim);
        f.add_term(TermKey{}, c);
        return f;
    }
    // The coordinate y^i (1-based).
    static Form variable(int dim, int i) {
        Form f(dim);
        TermKey k;
        f.check_index(i);
        k.y[i - 1] = 1;
        f.add_term(k, 1);
        return f;
    }
    // The generator dy^i (1-based).
    static Form dy_variable(int dim, int i) {
        Form f(dim);
        TermKey k;
        f.check_index(i);
        k.dy = static_cast<std::uint8_t>(1u << (i - 1));
        f.add_term(k, 1);
        return f;
    }

    int dim() const { return dim_; }
    const std::map<TermKey, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Accumulate c on key k, erasing the entry if it cancels.
    Form& add_term(const TermKey& k, const Rational& c) {
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

    Form& operator+=(const Form& o) {
        check_dim(o);
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    Form& operator-=(const Form& o) {
        check_dim(o);
        for (const auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }
    Form& operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, v] : terms_) v *= c;
        return *this;
    }

    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }
    friend Form operator*(Form a, const Rational& c) { return a *= c; }
    friend Form operator*(const Rational& c, Form a) { return a *= c; }
    friend Form operator-(Form a) { return a *= Rational(-1); }

    // Graded-commutative product: y's and scalars are even, dy's odd.
    friend Form operator*(const Form& a, const Form& b) {
        a.check_dim(b);
        Form out(a.dim_);
        for (const auto& [ka, ca] : a.terms_) {
            for (const auto& [kb, cb] : b.terms_) {
                int sign = dy_merge_sign(ka.dy, kb.dy);
                if (sign == 0) continue;
                TermKey k;
                k.h = static_cast<std::int16_t>(ka.h + kb.h);
                k.u = static_cast<std::int16_t>(ka.u + kb.u);
                k.dy = static_cast<std::uint8_t>(ka.dy | kb.dy);
                for (int i = 0; i < kMaxVars; ++i)
                    k.y[i] = static_cast<std::uint8_t>(ka.y[i] + kb.y[i]);
                out.add_term(k, ca * cb * sign);
            }
        }
        return out;
    }

    bool operator==(const Form& o) const { return dim_ == o.dim_ && terms_ == o.terms_; }

    // Multiply by h^k (resp. u^k): shift every exponent.
    Form h_shift(int k) const {
        Form out(dim_);
        for (const auto& [key, c] : terms_) {
            TermKey nk = key;
            nk.h = static_cast<std::int16_t>(nk.h + k);
            out.add_term(nk, c);
        }
        return out;
    }
    Form u_shift(int k) const {
        Form out(dim_);
        for (const auto& [key, c] : terms_) {
            TermKey nk = key;
            nk.u = static_cast<std::int16_t>(nk.u + k);
            out.add_term(nk, c);
        }
        return out;
    }

    // Partial derivative in y^i (1-based); even operator, ignores dy's.
    Form derivative(int i) const {
        check_index(i);
        Form out(dim_);
        for (const auto& [key, c] : terms_) {
            int e = key.y[i - 1];
            if (e == 0) continue;
            TermKey nk = key;
            nk.y[i - 1] = static_cast<std::uint8_t>(e - 1);
            out.add_term(nk, c * e);
        }
        return out;
    }

    // Restriction to terms selected by a predicate on the key.
    template <class Pred>
    Form filter(Pred&& keep) const {
        Form out(dim_);
        for (const auto& [key, c] : terms_)
            if (keep(key)) out.add_term(key, c);
        return out;
    }

    bool has_dy() const {
        for (const auto& [k, c] : terms_)
            if (k.dy) return true;
        return false;
    }
    bool has_u() const {
        for (const auto& [k, c] : terms_)
            if (k.u) return true;
        return false;
    }
    bool has_negative_h() const {
        for (const auto& [k, c] : terms_)
            if (k.h < 0) return true;
        return false;
    }
    int y_degree_max() const {
        int d = 0;
        for (const auto& [k, c] : terms_) d = std::max(d, k.y_degree());
        return d;
    }

    void check_dim(const Form& o) const {
        if (dim_ != o.dim_) throw std::invalid_argument("Form: dimension mismatch");
    }
    void check_index(int i) const {
        if (i < 1 || i > dim_) throw std::invalid_argument("Form: variable index out of range");
    }

  private:
    int dim_;
    std::map<TermKey, Rational> terms_;
};

// An element of K = C((hbar))[u, u^-1]: finite map (h-exp, u-exp) -> Rational.
class ScalarValue {
  public:
    ScalarValue() = default;
    static ScalarValue monomial(int h, int u, const Rational& c) {
        ScalarValue s;
        s.add(h, u, c);
        return s;
    }

    const std::map<std::pair<int, int>, Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    ScalarValue& add(int h, int u, const Rational& c) {
        if (c == 0) return *this;
        auto key = std::make_pair(h, u);
        auto it = c_.find(key);
        if (it == c_.end()) {
            c_.emplace(key, c);
        } else {
            it->second += c;
            if (it->second == 0) c_.erase(it);
        }
        return *this;
    }

    ScalarValue& operator+=(const ScalarValue& o) {
        for (const auto& [k, v] : o.c_) add(k.first, k.second, v);
        return *this;
    }
    ScalarValue& operator-=(const ScalarValue& o) {
        for (const auto& [k, v] : o.c_) add(k.first, k.second, -v);
        return *this;
    }
    ScalarValue& operator*=(const Rational& c) {
        if (c == 0) {
            c_.clear();
            return *this;
        }
        for (auto& [k, v] : c_) v *= c;
        return *this;
    }
    friend ScalarValue operator+(ScalarValue a, const ScalarValue& b) { return a += b; }
    friend ScalarValue operator-(ScalarValue a, const ScalarValue& b) { return a -= b; }
    friend ScalarValue operator*(ScalarValue a, const Rational& c) { return a *= c; }
    friend ScalarValue operator*(const Rational& c, ScalarValue a) { return a *= c; }
    friend ScalarValue operator-(ScalarValue a) { return a *= Rational(-1); }
    friend ScalarValue operator*(const ScalarValue& a, const ScalarValue& b) {
        ScalarValue out;
        for (const auto& [ka, ca] : a.c_)
            for (const auto& [kb, cb] : b.c_)
                out.add(ka.first + kb.first, ka.second + kb.second, ca * cb);
        return out;
    }

    bool operator==(const ScalarValue& o) const { return c_ == o.c_; }

    ScalarValue shift(int dh, int du) const {
        ScalarValue out;
        for (const auto& [k, v] : c_) out.add(k.first + dh, k.second + du, v);
        return out;
    }

    // hbar * d/d hbar: multiplies each term by its h-exponent.
    ScalarValue hbar_scaled() const {
        ScalarValue out;
        for (const auto& [k, v] : c_) out.add(k.first, k.second, v * k.first);
        return out;
    }

    // Canonical "c h^a u^b" sum, sorted by (h, u); "0" when empty.
    std::string to_string() const;

    // Conversion from a pure-scalar form (no y, no dy allowed).
    static ScalarValue from_form(const Form& f) {
        ScalarValue out;
        for (const auto& [k, c] : f.terms()) {
            if (k.y_degree() != 0 || k.dy != 0)
                throw std::invalid_argument("ScalarValue: form has residual y or dy content");
            out.add(k.h, k.u, c);
        }
        return out;
    }

  private:
    std::map<std::pair<int, int>, Rational> c_;
};

}  // namespace weyltrace
