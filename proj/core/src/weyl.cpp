#include "weyltrace/weyl.hpp"

namespace weyltrace {

namespace {

void require_weyl(const Form& f, const char* who) {
    if (f.has_dy() || f.has_u())
        throw std::invalid_argument(std::string(who) + ": operand must be a Weyl element (no dy, no u)");
}

}  // namespace

Form moyal_mul(const Form& f, const Form& g) {
    f.check_dim(g);
    require_weyl(f, "moyal_mul");
    require_weyl(g, "moyal_mul");
    const int dim = f.dim();
    const auto pairs = symplectic_pairs(dim);

    // Iterate Pi on the list of tensor factors; each application removes one
    // y from each side, so the expansion terminates on polynomials.
    std::vector<std::pair<Form, Form>> state{{f, g}};
    Form result(dim);
    Rational invfact = 1;
    for (int k = 0; !state.empty(); ++k) {
        if (k > 0) invfact /= k;
        for (const auto& [F, G] : state) result += (F * G).h_shift(k) * invfact;
        std::vector<std::pair<Form, Form>> next;
        for (const auto& [F, G] : state) {
            for (const auto& [i, j, s] : pairs) {
                Form dF = F.derivative(i);
                if (dF.is_zero()) continue;
                Form dG = G.derivative(j);
                if (dG.is_zero()) continue;
                next.emplace_back(dF * Rational(s, 2), std::move(dG));
            }
        }
        state = std::move(next);
    }
    return result;
}

Form bracket(const Form& f, const Form& g) {
    return (moyal_mul(f, g) - moyal_mul(g, f)).h_shift(-1);
}

Matrix moyal_mul(const Matrix& a, const Matrix& b) {
    a.check_shape(b);
    const int r = a.rank();
    Matrix out(a.dim(), r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k) {
                if (a.at(i, k).is_zero() || b.at(k, j).is_zero()) continue;
                out.at(i, j) += moyal_mul(a.at(i, k), b.at(k, j));
            }
    return out;
}

Matrix wedge_mul(const Matrix& a, const Matrix& b) {
    a.check_shape(b);
    const int r = a.rank();
    Matrix out(a.dim(), r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k) {
                if (a.at(i, k).is_zero() || b.at(k, j).is_zero()) continue;
                out.at(i, j) += a.at(i, k) * b.at(k, j);
            }
    return out;
}

Matrix bracket(const Matrix& a, const Matrix& b) {
    return (moyal_mul(a, b) - moyal_mul(b, a)).h_shift(-1);
}

Form symbol(const Form& f) {
    return f.filter([](const TermKey& k) { return k.y_degree() == 0; });
}

Matrix symbol(const Matrix& a) {
    Matrix out(a.dim(), a.rank());
    for (int i = 0; i < a.rank(); ++i)
        for (int j = 0; j < a.rank(); ++j) out.at(i, j) = symbol(a.at(i, j));
    return out;
}

std::vector<std::pair<int, Form>> weight_components(const Form& f) {
    std::map<int, Form> by_weight;
    for (const auto& [k, c] : f.terms()) {
        auto it = by_weight.find(k.weight());
        if (it == by_weight.end()) it = by_weight.emplace(k.weight(), Form(f.dim())).first;
        it->second.add_term(k, c);
    }
    return {by_weight.begin(), by_weight.end()};
}

std::vector<std::pair<int, Matrix>> weight_components(const Matrix& a) {
    std::map<int, Matrix> by_weight;
    for (int i = 0; i < a.rank(); ++i)
        for (int j = 0; j < a.rank(); ++j)
            for (const auto& [k, c] : a.at(i, j).terms()) {
                auto it = by_weight.find(k.weight());
                if (it == by_weight.end())
                    it = by_weight.emplace(k.weight(), Matrix(a.dim(), a.rank())).first;
                it->second.at(i, j).add_term(k, c);
            }
    return {by_weight.begin(), by_weight.end()};
}

}  // namespace weyltrace
