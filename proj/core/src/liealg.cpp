/*
 * liealg.cpp
 * ----------
 * Membership and decomposition for g, the projection pr and its curvature,
 * gamma_hat, and the characteristic cochain evaluators.
 */
#include "weyltrace/liealg.hpp"

#include <algorithm>

namespace weyltrace {

namespace {

Form scalar_to_form(const ScalarValue& s, int dim) {
    Form f(dim);
    for (const auto& [k, c] : s.coeffs()) {
        TermKey t;
        t.h = static_cast<std::int16_t>(k.first);
        t.u = static_cast<std::int16_t>(k.second);
        f.add_term(t, c);
    }
    return f;
}

Form hbar_zero_part(const Form& f) {
    return f.filter([](const TermKey& k) { return k.h == 0; });
}

}  // namespace

bool is_in_g(const Matrix& a) {
    if (a.has_dy() || a.has_u()) return false;
    const int r = a.rank();
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            if (a.at(i, j).has_negative_h()) return false;
    const Form diag0 = hbar_zero_part(a.at(0, 0));
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) {
            const Form z = hbar_zero_part(a.at(i, j));
            if (i == j) {
                if (!(z == diag0)) return false;
            } else if (!z.is_zero()) {
                return false;
            }
        }
    }
    return true;
}

void require_in_g(const Matrix& a) {
    if (!is_in_g(a)) throw std::invalid_argument("liealg: element is not in g");
}

GDecomposition decompose_g(const Matrix& a) {
    require_in_g(a);
    GDecomposition d;
    d.f = hbar_zero_part(a.at(0, 0));
    d.a = (a - Matrix::scalar(a.rank(), d.f)).h_shift(-1);
    return d;
}

HDecomposition pr(const Matrix& m) {
    GDecomposition d = decompose_g(m);
    HDecomposition out{Form(m.dim()), Matrix(m.dim(), m.rank()), Rational(0), ScalarValue{}};
    out.sp_part = d.f.filter([](const TermKey& k) { return k.y_degree() == 2; });
    for (int i = 0; i < m.rank(); ++i)
        for (int j = 0; j < m.rank(); ++j)
            out.gl_part.at(i, j) =
                d.a.at(i, j)
                    .filter([](const TermKey& k) { return k.h == 0 && k.y_degree() == 0; })
                    .h_shift(1);
    for (const auto& [k, c] : d.f.terms())
        if (k.y_degree() == 0) out.constant = c;  // at most the one hbar-free constant term
    const Form higher = d.a.h_shift(1).trace().filter(
        [](const TermKey& k) { return k.h >= 2 && k.y_degree() == 0; });
    out.higher = ScalarValue::from_form(higher) * rat(1, m.rank());
    return out;
}

Matrix embed(const HDecomposition& d) {
    const int dim = d.gl_part.dim();
    Form scal(dim);
    scal += d.sp_part;
    scal += Form::constant(dim, d.constant);
    scal += scalar_to_form(d.higher, dim);
    return Matrix::scalar(d.gl_part.rank(), scal) + d.gl_part;
}

bool is_in_h(const Matrix& a) { return is_in_g(a) && embed(pr(a)) == a; }

Matrix gamma_hat(const Matrix& a) {
    require_in_g(a);
    return a - embed(pr(a));
}

Curvature curvature(const Matrix& a, const Matrix& b) {
    require_in_g(a);
    require_in_g(b);
    const HDecomposition d1 = pr(bracket(a, b));
    const HDecomposition d2 = pr(bracket(embed(pr(a)), embed(pr(b))));
    Curvature r{Form(a.dim()), Matrix(a.dim(), a.rank()), ScalarValue{}};
    r.r1 = d1.sp_part - d2.sp_part;
    r.r2 = d1.gl_part - d2.gl_part;
    r.r3 = ScalarValue::monomial(0, 0, d1.constant) + d1.higher -
           ScalarValue::monomial(0, 0, d2.constant) - d2.higher;
    return r;
}

Rational ahat_log_coefficient(int k) {
    if (k < 1) throw std::invalid_argument("ahat_log_coefficient: k must be positive");
    // Series in t = y^2, truncated at t^k: g = sinh(y)/y - 1.
    const std::size_t len = static_cast<std::size_t>(k) + 1;
    std::vector<Rational> g(len, Rational(0));
    for (int j = 1; j <= k; ++j) g[static_cast<std::size_t>(j)] = 1 / factorial(2 * j + 1);
    auto mul = [&](const std::vector<Rational>& x, const std::vector<Rational>& y) {
        std::vector<Rational> z(len, Rational(0));
        for (std::size_t i = 0; i < len; ++i) {
            if (x[i] == 0) continue;
            for (std::size_t j = 0; i + j < len; ++j) z[i + j] += x[i] * y[j];
        }
        return z;
    };
    std::vector<Rational> pw(len, Rational(0));
    pw[0] = 1;
    std::vector<Rational> lg(len, Rational(0));
    for (int m = 1; m <= k; ++m) {
        pw = mul(pw, g);
        const Rational s = (m % 2 == 1) ? rat(1, m) : rat(-1, m);
        for (std::size_t j = 0; j < len; ++j) lg[j] += pw[j] * s;
    }
    Rational quarter_pow = 1;  // 2^{-2k}
    for (int i = 0; i < k; ++i) quarter_pow *= rat(1, 4);
    return lg[static_cast<std::size_t>(k)] * rat(-1, 2) * quarter_pow;
}

Matrix sp_matrix(const Form& quadratic) {
    const int dim = quadratic.dim();
    Matrix out(dim, dim);
    for (int l = 1; l <= dim; ++l) {
        const Form br = bracket(quadratic, Form::variable(dim, l));
        for (const auto& [k, c] : br.terms()) {
            if (k.h != 0 || k.u != 0 || k.dy != 0 || k.y_degree() != 1)
                throw std::invalid_argument("sp_matrix: input is not homogeneous quadratic");
            int row = -1;
            for (int i = 0; i < dim; ++i)
                if (k.y[static_cast<std::size_t>(i)] == 1) row = i;
            out.at(row, l - 1) += Form::constant(dim, c);
        }
    }
    return out;
}

std::vector<PairShuffle> pair_shuffles(int m) {
    std::vector<PairShuffle> out;
    const int total = 2 * m;
    std::vector<int> flat;
    std::vector<bool> used(static_cast<std::size_t>(total), false);
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(flat.size()) == total) {
            PairShuffle s;
            int inv = 0;
            for (std::size_t i = 0; i < flat.size(); ++i)
                for (std::size_t j = i + 1; j < flat.size(); ++j)
                    if (flat[i] > flat[j]) ++inv;
            s.sign = (inv % 2 == 0) ? 1 : -1;
            for (int t = 0; t < m; ++t)
                s.pairs.emplace_back(flat[static_cast<std::size_t>(2 * t)],
                                     flat[static_cast<std::size_t>(2 * t + 1)]);
            out.push_back(std::move(s));
            return;
        }
        for (int i = 0; i < total; ++i) {
            if (used[static_cast<std::size_t>(i)]) continue;
            for (int j = i + 1; j < total; ++j) {
                if (used[static_cast<std::size_t>(j)]) continue;
                used[static_cast<std::size_t>(i)] = used[static_cast<std::size_t>(j)] = true;
                flat.push_back(i);
                flat.push_back(j);
                self(self);
                flat.pop_back();
                flat.pop_back();
                used[static_cast<std::size_t>(i)] = used[static_cast<std::size_t>(j)] = false;
            }
        }
    };
    if (m == 0) {
        out.push_back(PairShuffle{});
        return out;
    }
    rec(rec);
    return out;
}

ScalarValue chern_weil(const std::vector<Matrix>& args,
                       const std::function<Matrix(const Matrix&, const Matrix&)>& insert) {
    if (args.size() % 2 != 0)
        throw std::invalid_argument("chern_weil: need an even number of arguments");
    const int m = static_cast<int>(args.size()) / 2;
    if (m == 0) throw std::invalid_argument("chern_weil: degree-0 values are the caller's");
    ScalarValue total;
    for (const PairShuffle& s : pair_shuffles(m)) {
        Matrix prod = insert(args[static_cast<std::size_t>(s.pairs[0].first)],
                             args[static_cast<std::size_t>(s.pairs[0].second)]);
        for (int t = 1; t < m; ++t)
            prod = wedge_mul(prod, insert(args[static_cast<std::size_t>(s.pairs[t].first)],
                                          args[static_cast<std::size_t>(s.pairs[t].second)]));
        total += ScalarValue::from_form(prod.trace()) * Rational(s.sign);
    }
    return total;
}

ScalarValue ahat_eval(const std::vector<Matrix>& args) {
    if (args.size() == 0) return ScalarValue::monomial(0, 0, 1);
    if (args.size() == 2) return ScalarValue{};  // log A-hat starts in degree 4
    if (args.size() == 4) {
        auto insert = [](const Matrix& a, const Matrix& b) {
            return sp_matrix(curvature(a, b).r1);
        };
        return chern_weil(args, insert) * ahat_log_coefficient(1);
    }
    throw std::invalid_argument("ahat_eval: degree beyond engine scope");
}

ScalarValue ch_eval(const std::vector<Matrix>& args, int r) {
    auto insert = [](const Matrix& a, const Matrix& b) {
        return (curvature(a, b).r2 * Rational(-1)).h_shift(-1);
    };
    if (args.size() == 0) return ScalarValue::monomial(0, 0, r);
    if (args.size() == 2) return chern_weil(args, insert);
    if (args.size() == 4) return chern_weil(args, insert) * rat(1, 2);
    throw std::invalid_argument("ch_eval: degree beyond engine scope");
}

}  // namespace weyltrace
