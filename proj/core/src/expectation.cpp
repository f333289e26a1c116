/*
 * expectation.cpp
 * ---------------
 * The contraction-exponential engine behind the free expectation map and
 * the insertion sum behind the interacting one.
 */
#include "weyltrace/expectation.hpp"

#include <algorithm>
#include <numeric>

#include "weyltrace/configspace.hpp"
#include "weyltrace/liealg.hpp"

namespace weyltrace {

namespace {

struct ContractionState {
    Rational c;
    SimplexPoly w;
    std::vector<Form> slots;
    ContractionState(const Rational& c0, SimplexPoly w0) : c(c0), w(std::move(w0)) {}
};

}  // namespace

Form free_expectation(const Chain& chain) {
    const int dim = chain.dim();
    Form out(dim);
    for (const auto& [key, coeff] : chain.terms()) {
        if (key.slots.empty())
            throw std::invalid_argument("free_expectation: chain term has no slots");
        const int m = static_cast<int>(key.slots.size()) - 1;
        // Matrix part: the trace of the product of units is a cyclic delta.
        bool cyclic = true;
        for (int i = 0; i <= m; ++i) {
            if (key.slots[static_cast<std::size_t>(i)].col !=
                key.slots[static_cast<std::size_t>((i + 1) % (m + 1))].row) {
                cyclic = false;
                break;
            }
        }
        if (!cyclic) continue;
        // Scalar slots: the zeroth plain, the rest under the de Rham d.
        ContractionState start(1, SimplexPoly::constant(m, 1));
        start.slots.reserve(static_cast<std::size_t>(m) + 1);
        for (int i = 0; i <= m; ++i) {
            Form f(dim);
            TermKey tk;
            tk.y = key.slots[static_cast<std::size_t>(i)].y;
            f.add_term(tk, 1);
            start.slots.push_back(i == 0 ? f : d(f));
        }
        std::vector<ContractionState> states;
        states.push_back(std::move(start));
        Rational invfact = 1;
        for (int k = 0; !states.empty(); ++k) {
            if (k > 0) invfact /= k;
            for (const ContractionState& s : states) {
                const Rational wint = s.w.integrate();
                if (wint == 0) continue;
                Form prod = s.slots[0];
                for (int i = 1; i <= m; ++i) prod = prod * s.slots[static_cast<std::size_t>(i)];
                if (prod.is_zero()) continue;
                prod *= s.c * wint * invfact * coeff;
                out += prod.h_shift(key.h + k).u_shift(key.u);
            }
            std::vector<ContractionState> next;
            for (const ContractionState& s : states) {
                for (int a = 0; a <= m; ++a) {
                    for (int b = a + 1; b <= m; ++b) {
                        for (const auto& [i, j, sg] : symplectic_pairs(dim)) {
                            Form da = s.slots[static_cast<std::size_t>(a)].derivative(i);
                            if (da.is_zero()) continue;
                            Form db = s.slots[static_cast<std::size_t>(b)].derivative(j);
                            if (db.is_zero()) continue;
                            // The propagator leg order is fixed by the
                            // b-vs-hbar-Delta intertwining identity: oriented
                            // from the second derivative point to the first.
                            ContractionState ns(s.c * sg, s.w * propagator_polynomial(m, b, a));
                            ns.slots = s.slots;
                            ns.slots[static_cast<std::size_t>(a)] = std::move(da);
                            ns.slots[static_cast<std::size_t>(b)] = std::move(db);
                            next.push_back(std::move(ns));
                        }
                    }
                }
            }
            states = std::move(next);
        }
    }
    return out;
}

Form interacting_expectation(const std::vector<Matrix>& args, const Chain& chain) {
    const int k = static_cast<int>(args.size());
    if (k == 0) return free_expectation(chain);
    const int dim = chain.dim();
    const int r = chain.rank();
    for (const Matrix& a : args) {
        require_in_g(a);
        if (a.dim() != dim || a.rank() != r)
            throw std::invalid_argument("interacting_expectation: argument shape mismatch");
    }
    // One-slot basis atoms of each argument, already divided by hbar.
    std::vector<std::vector<std::pair<ChainKey, Rational>>> atoms(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        const Chain ci = Chain::from_matrices({args[static_cast<std::size_t>(i)]}).h_shift(-1);
        atoms[static_cast<std::size_t>(i)].assign(ci.terms().begin(), ci.terms().end());
        if (atoms[static_cast<std::size_t>(i)].empty()) return Form(dim);
    }
    // Signed bijections of arguments to insertion slots.
    std::vector<std::pair<std::vector<int>, int>> perms;
    std::vector<int> p(static_cast<std::size_t>(k));
    std::iota(p.begin(), p.end(), 0);
    do {
        int inv = 0;
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = i + 1; j < p.size(); ++j)
                if (p[i] > p[j]) ++inv;
        perms.emplace_back(p, inv % 2 == 0 ? 1 : -1);
    } while (std::next_permutation(p.begin(), p.end()));

    Chain big(dim, r);
    for (const auto& [key, coeff] : chain.terms()) {
        if (key.slots.empty())
            throw std::invalid_argument("interacting_expectation: chain term has no slots");
        const int m = static_cast<int>(key.slots.size()) - 1;
        const int total = m + k;  // positions after slot 0 in the combined tensor
        std::vector<int> sel;     // insertion positions, increasing
        auto choose = [&](auto&& self, int from) -> void {
            if (static_cast<int>(sel.size()) == k) {
                // Insertions and the differential-bearing chain entries are
                // both odd, so each interleaving carries the sign of shuffling
                // the insertions (taken from the tail of the word) past the
                // chain entries that end up after them.
                int crossings = 0;
                for (int j = 0; j < k; ++j)
                    crossings += (total - 1 - sel[static_cast<std::size_t>(j)]) - (k - 1 - j);
                const int kappa = (crossings % 2 == 0) ? 1 : -1;
                for (const auto& [perm, sgn] : perms) {
                    // Odometer over the atom choices of each insertion.
                    std::vector<std::size_t> pick(static_cast<std::size_t>(k), 0);
                    for (;;) {
                        ChainKey nk;
                        nk.h = key.h;
                        nk.u = key.u;
                        Rational c = coeff * (sgn * kappa);
                        for (int j = 0; j < k; ++j) {
                            const auto& [ak, ac] =
                                atoms[static_cast<std::size_t>(
                                    perm[static_cast<std::size_t>(j)])][pick[static_cast<std::size_t>(j)]];
                            nk.h = static_cast<std::int16_t>(nk.h + ak.h);
                            c *= ac;
                        }
                        if (c != 0) {
                            nk.slots.reserve(static_cast<std::size_t>(total) + 1);
                            nk.slots.push_back(key.slots[0]);
                            int next_chain = 1, next_ins = 0;
                            for (int pos = 0; pos < total; ++pos) {
                                if (next_ins < k && sel[static_cast<std::size_t>(next_ins)] == pos) {
                                    const auto& [ak, ac] = atoms[static_cast<std::size_t>(
                                        perm[static_cast<std::size_t>(next_ins)])]
                                        [pick[static_cast<std::size_t>(next_ins)]];
                                    nk.slots.push_back(ak.slots[0]);
                                    ++next_ins;
                                } else {
                                    nk.slots.push_back(
                                        key.slots[static_cast<std::size_t>(next_chain)]);
                                    ++next_chain;
                                }
                            }
                            big.add_term(nk, c);
                        }
                        // advance the odometer
                        int j = 0;
                        while (j < k) {
                            const std::size_t arg_idx =
                                static_cast<std::size_t>(perm[static_cast<std::size_t>(j)]);
                            if (++pick[static_cast<std::size_t>(j)] < atoms[arg_idx].size()) break;
                            pick[static_cast<std::size_t>(j)] = 0;
                            ++j;
                        }
                        if (j == k) break;
                    }
                }
                return;
            }
            for (int pos = from; pos < total; ++pos) {
                sel.push_back(pos);
                self(self, pos + 1);
                sel.pop_back();
            }
        };
        choose(choose, 0);
    }
    return free_expectation(big);
}

}  // namespace weyltrace
