/*
 * cyclic.cpp
 * ----------
 * Chain expansion over matrix units, bar-normalization, the Hochschild and
 * Connes operators, the shuffle product, and the slot-wise adjoint action.
 */
#include "weyltrace/cyclic.hpp"

#include <tuple>

namespace weyltrace {

namespace {

struct Atom {
    SlotKey slot;
    int h = 0;
    Rational c;
};

// Basis expansion of a matrix of Weyl elements: coefficients on units
// E_{row,col} y^alpha, with the hbar exponent carried separately.
std::vector<Atom> matrix_basis(const Matrix& m) {
    if (m.has_dy() || m.has_u())
        throw std::invalid_argument("Chain: entries must be Weyl elements (no dy, no u)");
    std::vector<Atom> out;
    for (int i = 0; i < m.rank(); ++i) {
        for (int j = 0; j < m.rank(); ++j) {
            for (const auto& [k, c] : m.at(i, j).terms()) {
                Atom a;
                a.slot.row = static_cast<std::uint8_t>(i);
                a.slot.col = static_cast<std::uint8_t>(j);
                a.slot.y = k.y;
                a.h = k.h;
                a.c = c;
                out.push_back(std::move(a));
            }
        }
    }
    return out;
}

Form slot_form(const SlotKey& s, int dim) {
    Form f(dim);
    TermKey k;
    k.y = s.y;
    f.add_term(k, 1);
    return f;
}

// Moyal product of two adjacent slots.  Yields (merged slot, extra hbar
// exponent, coefficient) triples; empty when the matrix units do not chain.
std::vector<std::tuple<SlotKey, int, Rational>> star_slots(const SlotKey& a, const SlotKey& b,
                                                           int dim) {
    std::vector<std::tuple<SlotKey, int, Rational>> out;
    if (a.col != b.row) return out;
    Form prod = moyal_mul(slot_form(a, dim), slot_form(b, dim));
    for (const auto& [k, c] : prod.terms()) {
        SlotKey ns;
        ns.row = a.row;
        ns.col = b.col;
        ns.y = k.y;
        out.emplace_back(ns, k.h, c);
    }
    return out;
}

}  // namespace

Chain Chain::from_matrices(const std::vector<Matrix>& entries) {
    if (entries.empty()) throw std::invalid_argument("Chain: need at least one tensor slot");
    const int dim = entries.front().dim();
    const int r = entries.front().rank();
    struct Partial {
        ChainKey key;
        Rational c;
    };
    std::vector<Partial> acc{{ChainKey{}, Rational(1)}};
    for (const Matrix& m : entries) {
        if (m.dim() != dim || m.rank() != r)
            throw std::invalid_argument("Chain: mixed dimensions or ranks in tensor");
        std::vector<Atom> atoms = matrix_basis(m);
        std::vector<Partial> next;
        next.reserve(acc.size() * atoms.size());
        for (const Partial& p : acc) {
            for (const Atom& a : atoms) {
                Partial q = p;
                q.key.h = static_cast<std::int16_t>(q.key.h + a.h);
                q.key.slots.push_back(a.slot);
                q.c *= a.c;
                next.push_back(std::move(q));
            }
        }
        acc = std::move(next);
    }
    Chain out(dim, r);
    for (Partial& p : acc) out.add_term(p.key, p.c);
    return out;
}

Chain Chain::unit(int dim, int r) { return from_matrices({Matrix::identity(dim, r)}); }

Chain bar_normalize(const Chain& c) {
    const int r = c.rank();
    Chain out(c.dim(), c.rank());
    for (const auto& [key, coeff] : c.terms()) {
        // Per slot, the list of replacements under the projection.
        std::vector<std::vector<std::pair<SlotKey, Rational>>> options;
        options.reserve(key.slots.size());
        bool dead = false;
        for (std::size_t i = 0; i < key.slots.size(); ++i) {
            const SlotKey& s = key.slots[i];
            std::vector<std::pair<SlotKey, Rational>> opt;
            if (i >= 1 && s.y_degree() == 0) {
                if (s.row != s.col) {
                    opt.emplace_back(s, Rational(1));  // traceless already
                } else {
                    for (int cc = 0; cc < r; ++cc) {
                        Rational w = (cc == s.row) ? Rational(Rational(1) - rat(1, r))
                                                   : Rational(-rat(1, r));
                        if (w == 0) continue;
                        SlotKey ns = s;
                        ns.row = ns.col = static_cast<std::uint8_t>(cc);
                        opt.emplace_back(ns, w);
                    }
                }
            } else {
                opt.emplace_back(s, Rational(1));
            }
            if (opt.empty()) {
                dead = true;
                break;
            }
            options.push_back(std::move(opt));
        }
        if (dead) continue;
        // Cartesian product over the slot options.
        ChainKey work = key;
        auto expand = [&](auto&& self, std::size_t i, const Rational& c0) -> void {
            if (i == options.size()) {
                out.add_term(work, c0);
                return;
            }
            for (const auto& [slot, w] : options[i]) {
                work.slots[i] = slot;
                self(self, i + 1, c0 * w);
            }
            work.slots[i] = key.slots[i];
        };
        expand(expand, 0, coeff);
    }
    return out;
}

Chain hochschild_b(const Chain& c) {
    const int dim = c.dim();
    Chain out(c.dim(), c.rank());
    for (const auto& [key, coeff] : c.terms()) {
        const int m = static_cast<int>(key.slots.size()) - 1;
        if (m <= 0) continue;  // b vanishes on 0-chains
        for (int i = 0; i < m; ++i) {
            const Rational sgn = (i % 2 == 0) ? 1 : -1;
            for (const auto& [merged, dh, sc] : star_slots(key.slots[i], key.slots[i + 1], dim)) {
                ChainKey nk;
                nk.h = static_cast<std::int16_t>(key.h + dh);
                nk.u = key.u;
                nk.slots.reserve(key.slots.size() - 1);
                for (int s = 0; s < i; ++s) nk.slots.push_back(key.slots[s]);
                nk.slots.push_back(merged);
                for (int s = i + 2; s <= m; ++s) nk.slots.push_back(key.slots[s]);
                out.add_term(nk, coeff * sgn * sc);
            }
        }
        const Rational sgn = (m % 2 == 0) ? 1 : -1;
        for (const auto& [merged, dh, sc] : star_slots(key.slots[m], key.slots[0], dim)) {
            ChainKey nk;
            nk.h = static_cast<std::int16_t>(key.h + dh);
            nk.u = key.u;
            nk.slots.reserve(key.slots.size() - 1);
            nk.slots.push_back(merged);
            for (int s = 1; s < m; ++s) nk.slots.push_back(key.slots[s]);
            out.add_term(nk, coeff * sgn * sc);
        }
    }
    return bar_normalize(out);
}

Chain connes_B(const Chain& c) {
    const int r = c.rank();
    Chain out(c.dim(), c.rank());
    for (const auto& [key, coeff] : c.terms()) {
        const int m = static_cast<int>(key.slots.size()) - 1;
        for (int i = 0; i <= m; ++i) {
            const Rational sgn = ((m * i) % 2 == 0) ? 1 : -1;
            for (int a = 0; a < r; ++a) {
                ChainKey nk;
                nk.h = key.h;
                nk.u = key.u;
                nk.slots.reserve(key.slots.size() + 1);
                SlotKey unit;
                unit.row = unit.col = static_cast<std::uint8_t>(a);
                nk.slots.push_back(unit);
                for (int s = i; s <= m; ++s) nk.slots.push_back(key.slots[s]);
                for (int s = 0; s < i; ++s) nk.slots.push_back(key.slots[s]);
                out.add_term(nk, coeff * sgn);
            }
        }
    }
    return bar_normalize(out);
}

Chain boundary_periodic(const Chain& c) { return hochschild_b(c) + connes_B(c).u_shift(1); }

Chain shuffle(const Chain& s, const Chain& t) {
    s.check_shape(t);
    Chain out(s.dim(), s.rank());
    for (const auto& [k1, c1] : s.terms()) {
        for (const auto& [k2, c2] : t.terms()) {
            ChainKey base;
            base.h = static_cast<std::int16_t>(k1.h + k2.h);
            base.u = static_cast<std::int16_t>(k1.u + k2.u);
            base.slots.reserve(k1.slots.size() + k2.slots.size());
            const Rational c = c1 * c2;
            auto merge = [&](auto&& self, std::size_t i, std::size_t j) -> void {
                if (i == k1.slots.size() && j == k2.slots.size()) {
                    out.add_term(base, c);
                    return;
                }
                if (i < k1.slots.size()) {
                    base.slots.push_back(k1.slots[i]);
                    self(self, i + 1, j);
                    base.slots.pop_back();
                }
                if (j < k2.slots.size()) {
                    base.slots.push_back(k2.slots[j]);
                    self(self, i, j + 1);
                    base.slots.pop_back();
                }
            };
            merge(merge, 0, 0);
        }
    }
    return out;
}

Chain ad_action(const Matrix& a, const Chain& c) {
    if (a.dim() != c.dim() || a.rank() != c.rank())
        throw std::invalid_argument("ad_action: dimension or rank mismatch");
    const int dim = c.dim();
    const int r = c.rank();
    Chain out(dim, r);
    for (const auto& [key, coeff] : c.terms()) {
        for (std::size_t s = 0; s < key.slots.size(); ++s) {
            const SlotKey& slot = key.slots[s];
            Matrix m = Matrix::unit(r, slot.row, slot.col, slot_form(slot, dim));
            Matrix br = bracket(a, m);
            for (const Atom& atom : matrix_basis(br)) {
                ChainKey nk = key;
                nk.h = static_cast<std::int16_t>(nk.h + atom.h);
                nk.slots[s] = atom.slot;
                out.add_term(nk, coeff * atom.c);
            }
        }
    }
    return bar_normalize(out);
}

std::map<int, Chain> slot_layers(const Chain& c) {
    std::map<int, Chain> layers;
    for (const auto& [key, coeff] : c.terms()) {
        auto [it, fresh] =
            layers.try_emplace(static_cast<int>(key.slots.size()), Chain(c.dim(), c.rank()));
        it->second.add_term(key, coeff);
    }
    return layers;
}

}  // namespace weyltrace
