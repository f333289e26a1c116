#include "weyltrace/forms.hpp"

#include <functional>

namespace weyltrace {

Form d(const Form& w) {
    Form out(w.dim());
    for (const auto& [key, c] : w.terms()) {
        for (int i = 1; i <= w.dim(); ++i) {
            int e = key.y[i - 1];
            if (e == 0) continue;
            std::uint8_t bit = static_cast<std::uint8_t>(1u << (i - 1));
            if (key.dy & bit) continue;  // dy^i ^ dy^i = 0
            TermKey nk = key;
            nk.y[i - 1] = static_cast<std::uint8_t>(e - 1);
            nk.dy = static_cast<std::uint8_t>(nk.dy | bit);
            out.add_term(nk, c * e * dy_insert_sign(key.dy, i));
        }
    }
    return out;
}

Form iota(const Form& w, int i) {
    w.check_index(i);
    Form out(w.dim());
    std::uint8_t bit = static_cast<std::uint8_t>(1u << (i - 1));
    for (const auto& [key, c] : w.terms()) {
        if (!(key.dy & bit)) continue;
        TermKey nk = key;
        nk.dy = static_cast<std::uint8_t>(nk.dy & ~bit);
        out.add_term(nk, c * dy_insert_sign(key.dy, i));
    }
    return out;
}

Form iota_pi(const Form& w) {
    Form out(w.dim());
    for (const auto& [i, j, s] : symplectic_pairs(w.dim()))
        out += iota(iota(w, j), i) * Rational(s, 2);
    return out;
}

Form delta(const Form& w) {
    Form out(w.dim());
    for (const auto& [i, j, s] : symplectic_pairs(w.dim()))
        out += iota(w, j).derivative(i) * Rational(s);
    return out;
}

Matrix d(const Matrix& w) {
    Matrix out(w.dim(), w.rank());
    for (int i = 0; i < w.rank(); ++i)
        for (int j = 0; j < w.rank(); ++j) out.at(i, j) = d(w.at(i, j));
    return out;
}

ScalarValue bv_integrate(const Form& w, int n) {
    if (w.dim() != 2 * n) throw std::invalid_argument("bv_integrate: dim must equal 2n");
    ScalarValue out;
    // sigma kills residual y's, and i_Pi never produces them, so only the
    // y-degree-0 part can survive.
    Form cur = w.filter([](const TermKey& k) { return k.y_degree() == 0; });
    Rational invfact = 1;
    for (int j = 0; !cur.is_zero(); ++j) {
        if (j > 0) invfact /= j;
        for (const auto& [key, c] : cur.terms())
            if (key.dy == 0) out.add(key.h + j, key.u + n - j, c * invfact);
        cur = iota_pi(cur);
    }
    return out;
}

FormTensor FormTensor::from_forms(const std::vector<Form>& factors) {
    if (factors.empty()) throw std::invalid_argument("FormTensor: at least one factor required");
    const int dim = factors.front().dim();
    FormTensor out(dim, factors.size());
    std::vector<TermKey> keys(factors.size());
    std::function<void(std::size_t, const Rational&)> rec = [&](std::size_t s, const Rational& c) {
        if (s == factors.size()) {
            out.add_term(keys, c);
            return;
        }
        factors[s].check_dim(factors.front());
        for (const auto& [k, v] : factors[s].terms()) {
            keys[s] = k;
            rec(s + 1, c * v);
        }
    };
    rec(0, 1);
    return out;
}

Form FormTensor::collapse() const {
    Form out(dim_);
    for (const auto& [keys, c] : terms_) {
        Form prod = Form::constant(dim_, c);
        for (const auto& k : keys) {
            Form single(dim_);
            single.add_term(k, 1);
            prod = prod * single;
            if (prod.is_zero()) break;
        }
        out += prod;
    }
    return out;
}

namespace {

// Apply a single-slot operator to every term; odd operators pick up the
// Koszul sign of passing the dy-content of the slots to the left.
FormTensor apply_one(const FormTensor& t, std::size_t slot, bool odd,
                     const std::function<Form(const Form&)>& op) {
    FormTensor out(t.dim(), t.slot_count());
    for (const auto& [keys, c] : t.terms()) {
        int presign = 1;
        if (odd) {
            int par = 0;
            for (std::size_t g = 0; g < slot; ++g) par += keys[g].dy_count();
            presign = (par % 2 == 0) ? 1 : -1;
        }
        Form single(t.dim());
        single.add_term(keys[slot], 1);
        Form res = op(single);
        for (const auto& [k2, c2] : res.terms()) {
            auto nk = keys;
            nk[slot] = k2;
            out.add_term(nk, c * c2 * presign);
        }
    }
    return out;
}

}  // namespace

FormTensor tensor_apply(TensorOp op, const FormTensor& t) {
    FormTensor out(t.dim(), t.slot_count());
    const std::size_t k = t.slot_count();
    switch (op) {
        case TensorOp::d:
            for (std::size_t a = 0; a < k; ++a)
                out += apply_one(t, a, true, [](const Form& f) { return d(f); });
            break;
        case TensorOp::iota_pi:
            // (1/2) sum_{a,b} omega^{ij} i_i at slot a after i_j at slot b.
            for (const auto& [i, j, s] : symplectic_pairs(t.dim())) {
                auto ci = [i = i](const Form& f) { return iota(f, i); };
                auto cj = [j = j](const Form& f) { return iota(f, j); };
                for (std::size_t a = 0; a < k; ++a)
                    for (std::size_t b = 0; b < k; ++b) {
                        FormTensor step = apply_one(apply_one(t, b, true, cj), a, true, ci);
                        for (const auto& [keys, c] : step.terms())
                            out.add_term(keys, c * Rational(s, 2));
                    }
            }
            break;
        case TensorOp::delta:
            // sum_{a,b} omega^{ij} L_i at slot a after i_j at slot b.
            for (const auto& [i, j, s] : symplectic_pairs(t.dim())) {
                auto li = [i = i](const Form& f) { return f.derivative(i); };
                auto cj = [j = j](const Form& f) { return iota(f, j); };
                for (std::size_t a = 0; a < k; ++a)
                    for (std::size_t b = 0; b < k; ++b) {
                        FormTensor step = apply_one(apply_one(t, b, true, cj), a, false, li);
                        for (const auto& [keys, c] : step.terms()) out.add_term(keys, c * s);
                    }
            }
            break;
    }
    return out;
}

}  // namespace weyltrace
