/*
 * trace.cpp
 * ---------
 * Universal trace, nabla, and the executable identity residuals.
 */
#include "weyltrace/trace.hpp"

#include "weyltrace/forms.hpp"

namespace weyltrace {

namespace {

Rational term_weight(int h, int ydeg, int dyc) { return Rational(h) + rat(ydeg + dyc, 2); }

}  // namespace

Form nabla_hbar(const Form& f) {
    Form out(f.dim());
    for (const auto& [k, c] : f.terms())
        out.add_term(k, c * term_weight(k.h, k.y_degree(), k.dy_count()));
    return out;
}

ScalarValue nabla_hbar(const ScalarValue& s) { return s.hbar_scaled(); }

Matrix nabla_hbar(const Matrix& m) {
    Matrix out(m.dim(), m.rank());
    for (int i = 0; i < m.rank(); ++i)
        for (int j = 0; j < m.rank(); ++j) out.at(i, j) = nabla_hbar(m.at(i, j));
    return out;
}

Chain nabla_hbar(const Chain& c) {
    Chain out(c.dim(), c.rank());
    for (const auto& [key, coeff] : c.terms()) {
        int ydeg = 0;
        for (const SlotKey& s : key.slots) ydeg += s.y_degree();
        out.add_term(key, coeff * term_weight(key.h, ydeg, 0));
    }
    return out;
}

ScalarValue universal_trace(const std::vector<Matrix>& args, const Chain& c, bool use_gamma) {
    std::vector<Matrix> in = args;
    if (use_gamma)
        for (Matrix& a : in) a = gamma_hat(a);
    const Form v = interacting_expectation(in, c);
    return bv_integrate(v, c.dim() / 2);
}

ScalarValue cocycle_residual(const std::vector<Matrix>& args, const Chain& c) {
    const int k1 = static_cast<int>(args.size());
    ScalarValue acc = universal_trace(args, boundary_periodic(c));
    // The argument insertions are odd relative to the chain entries, so the
    // Lie-differential terms carry the parity of the chain length: on a
    // layer with s slots the adjoint terms enter as (-1)^{s+i} and the
    // bracket re-pairings as (-1)^{s+i+j+1}.
    for (const auto& [slots, layer] : slot_layers(c)) {
        for (int i = 0; i < k1; ++i) {
            std::vector<Matrix> rest;
            rest.reserve(static_cast<std::size_t>(k1) - 1);
            for (int t = 0; t < k1; ++t)
                if (t != i) rest.push_back(args[static_cast<std::size_t>(t)]);
            const ScalarValue v =
                universal_trace(rest, ad_action(args[static_cast<std::size_t>(i)], layer));
            acc = ((slots + i) % 2 == 0) ? acc + v : acc - v;
        }
        for (int i = 0; i < k1; ++i) {
            for (int j = i + 1; j < k1; ++j) {
                std::vector<Matrix> rest;
                rest.reserve(static_cast<std::size_t>(k1) - 1);
                rest.push_back(
                    bracket(args[static_cast<std::size_t>(i)], args[static_cast<std::size_t>(j)]));
                for (int t = 0; t < k1; ++t)
                    if (t != i && t != j) rest.push_back(args[static_cast<std::size_t>(t)]);
                const ScalarValue v = universal_trace(rest, layer);
                acc = ((slots + i + j) % 2 == 0) ? acc - v : acc + v;
            }
        }
    }
    return acc;
}

namespace {

// theta(a) = Tr-hat[](nabla(gamma_hat(a)/hbar) as a 0-chain).
ScalarValue theta_primitive(const Matrix& a) {
    const Matrix g = nabla_hbar(gamma_hat(a).h_shift(-1));
    if (g.is_zero()) return ScalarValue{};
    return universal_trace({}, Chain::from_matrices({g}));
}

}  // namespace

ScalarValue gm_residual(const std::vector<Matrix>& args, int n, int r) {
    const Chain one = Chain::unit(2 * n, r);
    if (args.empty()) return universal_trace({}, one).hbar_scaled();
    if (args.size() != 2)
        throw std::invalid_argument("gm_residual: only degrees 0 and 2 are in engine scope");
    const Matrix& a1 = args[0];
    const Matrix& a2 = args[1];
    ScalarValue res = universal_trace(args, one).hbar_scaled();
    const ScalarValue rho = curvature(a1, a2).r3.shift(-1, -1);  // R3/(u hbar)
    res += rho.hbar_scaled() * universal_trace({}, one);
    res += theta_primitive(bracket(a1, a2)).shift(0, -1);
    return res;
}

IndexReport index_report(int n, int r, const std::vector<Matrix>& args) {
    const Chain one = Chain::unit(2 * n, r);
    const std::size_t degree = args.size();
    IndexReport rep;
    auto rho = [&](const Matrix& a, const Matrix& b) {
        return curvature(a, b).r3.shift(-1, -1);  // R3/(u hbar)
    };
    if (degree == 0) {
        rep.trace_side = universal_trace({}, one);
        rep.formula_side = ScalarValue::monomial(0, n, r);
    } else if (degree == 2) {
        rep.trace_side = universal_trace(args, one) + rho(args[0], args[1]) * universal_trace({}, one);
        rep.formula_side = ch_eval(args, r).shift(0, n - 1);
    } else if (degree == 4) {
        ScalarValue side = universal_trace(args, one);
        for (const PairShuffle& s : pair_shuffles(2)) {
            const auto& [i1, j1] = s.pairs[0];
            const auto& [i2, j2] = s.pairs[1];
            const ScalarValue second =
                universal_trace({args[static_cast<std::size_t>(i2)],
                                 args[static_cast<std::size_t>(j2)]},
                                one);
            const ScalarValue first = rho(args[static_cast<std::size_t>(i1)],
                                          args[static_cast<std::size_t>(j1)]);
            side += first * second * Rational(s.sign);
            // rho cup rho / 2, times the degree-0 trace
            side += first *
                    rho(args[static_cast<std::size_t>(i2)], args[static_cast<std::size_t>(j2)]) *
                    universal_trace({}, one) * rat(s.sign, 2);
        }
        rep.trace_side = side;
        rep.formula_side =
            (ahat_eval(args) * Rational(r) + ch_eval(args, r)).shift(0, n - 2);
    } else {
        throw std::invalid_argument("index_report: degree must be 0, 2, or 4");
    }
    rep.difference = rep.trace_side - rep.formula_side;
    return rep;
}

}  // namespace weyltrace
