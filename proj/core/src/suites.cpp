/*
 * suites.cpp
 * ----------
 * The randomized property suites.  Each check draws its inputs from a
 * sampler seeded by (config seed XOR check-name hash), so results are
 * independent of check ordering and fully reproducible.
 */
#include "weyltrace/suites.hpp"

#include <functional>
#include <optional>
#include <sstream>

#include "weyltrace/cyclic.hpp"
#include "weyltrace/expectation.hpp"
#include "weyltrace/forms.hpp"
#include "weyltrace/liealg.hpp"
#include "weyltrace/literals.hpp"
#include "weyltrace/sampler.hpp"
#include "weyltrace/trace.hpp"
#include "weyltrace/weyl.hpp"

namespace weyltrace {

namespace {

std::uint64_t fnv1a(const char* s) {
    std::uint64_t h = 14695981039346656037ull;
    for (; *s; ++s) h = (h ^ static_cast<unsigned char>(*s)) * 1099511628211ull;
    return h;
}

// One named check: `body` returns a failure description or nullopt.
struct Check {
    const char* name;
    int default_cases;
    std::function<std::optional<std::string>(Sampler&)> body;
};

std::vector<CheckResult> run_checks(const std::vector<Check>& checks, const SuiteConfig& cfg) {
    std::vector<CheckResult> out;
    out.reserve(checks.size());
    for (const Check& ck : checks) {
        CheckResult r;
        r.name = ck.name;
        const int cases = cfg.cases > 0 ? cfg.cases : ck.default_cases;
        Sampler smp(cfg.seed ^ fnv1a(ck.name), 2 * cfg.n, cfg.r);
        for (int t = 0; t < cases; ++t) {
            std::optional<std::string> fail = ck.body(smp);
            if (fail) {
                r.pass = false;
                std::ostringstream os;
                os << "case " << t << ": " << *fail;
                r.detail = os.str();
                break;
            }
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::optional<std::string> ok() { return std::nullopt; }

// ---------------------------------------------------------------- weyl ----

std::vector<Check> weyl_checks(const SuiteConfig& cfg) {
    const int w = cfg.max_weight;
    return {
        {"moyal-associativity", 25,
         [w](Sampler& s) -> std::optional<std::string> {
             Form f = s.weyl_element(w), g = s.weyl_element(w), h = s.weyl_element(w);
             if (moyal_mul(moyal_mul(f, g), h) == moyal_mul(f, moyal_mul(g, h))) return ok();
             return "f=" + to_string(f) + "  g=" + to_string(g) + "  h=" + to_string(h);
         }},
        {"weight-additivity", 25,
         [w](Sampler& s) -> std::optional<std::string> {
             const int wf = s.uniform(0, w), wg = s.uniform(0, w);
             Form f(s.dim()), g(s.dim());
             f.add_term(s.term_key(wf), s.coefficient());
             g.add_term(s.term_key(wg), s.coefficient());
             for (const auto& [k, c] : moyal_mul(f, g).terms())
                 if (k.weight() != wf + wg)
                     return "f=" + to_string(f) + "  g=" + to_string(g);
             return ok();
         }},
        {"star-commutator-is-hbar-bracket", 25,
         [w](Sampler& s) -> std::optional<std::string> {
             Form f = s.weyl_element(w), g = s.weyl_element(w);
             if (moyal_mul(f, g) - moyal_mul(g, f) == bracket(f, g).h_shift(1)) return ok();
             return "f=" + to_string(f) + "  g=" + to_string(g);
         }},
        {"jacobi", 25,
         [w](Sampler& s) -> std::optional<std::string> {
             Form f = s.weyl_element(w), g = s.weyl_element(w), h = s.weyl_element(w);
             Form acc = bracket(bracket(f, g), h);
             acc += bracket(bracket(g, h), f);
             acc += bracket(bracket(h, f), g);
             if (acc.is_zero()) return ok();
             return "f=" + to_string(f) + "  g=" + to_string(g) + "  h=" + to_string(h);
         }},
        {"centrality-of-hbar-scalars", 25,
         [w](Sampler& s) -> std::optional<std::string> {
             Form f = s.weyl_element(w);
             Form c = Form::constant(s.dim(), s.coefficient()).h_shift(s.uniform(0, 2));
             if (bracket(f, c).is_zero() && bracket(c, f).is_zero()) return ok();
             return "f=" + to_string(f) + "  c=" + to_string(c);
         }},
    };
}

// --------------------------------------------------------------- forms ----

std::vector<Check> forms_checks(const SuiteConfig& cfg) {
    const int w = cfg.max_weight;
    const int n = cfg.n;
    return {
        {"d-squares-to-zero", 40,
         [w](Sampler& s) -> std::optional<std::string> {
             Form a = s.form_element(w);
             if (d(d(a)).is_zero()) return ok();
             return "a=" + to_string(a);
         }},
        {"delta-squares-to-zero", 40,
         [w](Sampler& s) -> std::optional<std::string> {
             Form a = s.form_element(w);
             if (delta(delta(a)).is_zero()) return ok();
             return "a=" + to_string(a);
         }},
        {"delta-is-d-commutator-iota-pi", 40,
         [w](Sampler& s) -> std::optional<std::string> {
             // iota_pi is even, so the graded commutator is the difference.
             Form a = s.form_element(w);
             if (delta(a) == d(iota_pi(a)) - iota_pi(d(a))) return ok();
             return "a=" + to_string(a);
         }},
        {"d-odd-derivation", 40,
         [w](Sampler& s) -> std::optional<std::string> {
             Form a(s.dim());
             a.add_term(s.term_key(s.uniform(0, w), true, true), s.coefficient());
             Form b = s.form_element(w);
             int par = 0;
             for (const auto& [k, c] : a.terms()) par = k.dy_count() % 2;
             Form rhs = d(a) * b + (par == 0 ? a * d(b) : -(a * d(b)));
             if (d(a * b) == rhs) return ok();
             return "a=" + to_string(a) + "  b=" + to_string(b);
         }},
        {"bv-annihilates-hbar-delta-plus-u-d", 40,
         [w, n](Sampler& s) -> std::optional<std::string> {
             Form a = s.form_element(w);
             const ScalarValue v =
                 bv_integrate(delta(a).h_shift(1) + d(a).u_shift(1), n);
             if (v.is_zero()) return ok();
             return "a=" + to_string(a) + "  value=" + v.to_string();
         }},
        {"tensor-d-squares-to-zero", 25,
         [w](Sampler& s) -> std::optional<std::string> {
             std::vector<Form> fs;
             const int k = s.uniform(1, 3);
             for (int i = 0; i < k; ++i) fs.push_back(s.form_element(w));
             FormTensor t = FormTensor::from_forms(fs);
             if (tensor_apply(TensorOp::d, tensor_apply(TensorOp::d, t)).is_zero()) return ok();
             return "slots=" + std::to_string(k);
         }},
    };
}

// -------------------------------------------------------------- cyclic ----

std::vector<Check> cyclic_checks(const SuiteConfig& cfg) {
    const int w = cfg.max_weight;
    return {
        {"hochschild-b-squares-to-zero", 20,
         [w](Sampler& s) -> std::optional<std::string> {
             Chain c = s.chain(4, w);
             if (hochschild_b(hochschild_b(c)).is_zero()) return ok();
             return "c=" + to_string(c);
         }},
        {"connes-B-squares-to-zero", 20,
         [w](Sampler& s) -> std::optional<std::string> {
             Chain c = s.chain(4, w);
             if (connes_B(connes_B(c)).is_zero()) return ok();
             return "c=" + to_string(c);
         }},
        {"b-B-anticommute", 20,
         [w](Sampler& s) -> std::optional<std::string> {
             Chain c = s.chain(4, w);
             if ((hochschild_b(connes_B(c)) + connes_B(hochschild_b(c))).is_zero()) return ok();
             return "c=" + to_string(c);
         }},
        {"periodic-boundary-squares-to-zero", 20,
         [w](Sampler& s) -> std::optional<std::string> {
             Chain c = s.chain(4, w);
             if (boundary_periodic(boundary_periodic(c)).is_zero()) return ok();
             return "c=" + to_string(c);
         }},
        {"bar-normalization-idempotent", 20,
         [w](Sampler& s) -> std::optional<std::string> {
             Chain c = s.chain(4, w);
             if (bar_normalize(c) == c) return ok();
             return "c=" + to_string(c);
         }},
        {"shuffle-commutative", 15,
         [w](Sampler& s) -> std::optional<std::string> {
             Chain x = s.chain(2, w), y = s.chain(2, w);
             if (shuffle(x, y) == shuffle(y, x)) return ok();
             return "x=" + to_string(x) + "  y=" + to_string(y);
         }},
        {"shuffle-associative", 10,
         [w](Sampler& s) -> std::optional<std::string> {
             Chain x = s.chain(2, w), y = s.chain(2, w), z = s.chain(2, w);
             if (shuffle(shuffle(x, y), z) == shuffle(x, shuffle(y, z))) return ok();
             return "x=" + to_string(x) + "  y=" + to_string(y) + "  z=" + to_string(z);
         }},
    };
}

// ---------------------------------------------------------------- free ----

std::vector<Check> free_checks(const SuiteConfig& cfg) {
    const int w = std::min(cfg.max_weight, 3);
    const int n = cfg.n;
    return {
        {"free-intertwines-B-with-d", 15,
         [w](Sampler& s) -> std::optional<std::string> {
             Chain c = s.chain(3, w);
             if (free_expectation(connes_B(c)) == d(free_expectation(c))) return ok();
             return "c=" + to_string(c);
         }},
        {"free-intertwines-b-with-hbar-delta", 15,
         [w](Sampler& s) -> std::optional<std::string> {
             Chain c = s.chain(3, w);
             if (free_expectation(hochschild_b(c)) == delta(free_expectation(c)).h_shift(1))
                 return ok();
             return "c=" + to_string(c);
         }},
        {"free-output-dy-count", 15,
         [w](Sampler& s) -> std::optional<std::string> {
             const int slots = s.uniform(1, 3);
             std::vector<Matrix> ms;
             for (int i = 0; i < slots; ++i) ms.push_back(s.weyl_matrix(w));
             Chain c = bar_normalize(Chain::from_matrices(ms));
             Form v = free_expectation(c);
             for (const auto& [k, coeff] : v.terms())
                 if (k.dy_count() != slots - 1) return "c=" + to_string(c);
             return ok();
         }},
        {"nabla-commutes-with-free-expectation", 15,
         [w](Sampler& s) -> std::optional<std::string> {
             Chain c = s.chain(3, w);
             if (nabla_hbar(free_expectation(c)) == free_expectation(nabla_hbar(c))) return ok();
             return "c=" + to_string(c);
         }},
        {"nabla-commutes-with-bv-integration", 40,
         [w, n](Sampler& s) -> std::optional<std::string> {
             Form a = s.form_element(w);
             if (nabla_hbar(bv_integrate(a, n)) == bv_integrate(nabla_hbar(a), n)) return ok();
             return "a=" + to_string(a);
         }},
    };
}

// --------------------------------------------------------- interacting ----

// The Lie part of the closedness identity: adjoint re-pairings plus bracket
// contractions, mirroring the trace-level cocycle assembly.  The argument
// insertions are odd relative to the chain entries, so both sums are graded
// by chain length: on a layer with s slots the adjoint terms carry
// (-1)^{s+i} and the bracket re-pairings carry (-1)^{s+i+j+1}.
Form lie_differential_term(const std::vector<Matrix>& args, const Chain& c) {
    const int k1 = static_cast<int>(args.size());
    Form acc(c.dim());
    for (const auto& [slots, layer] : slot_layers(c)) {
        for (int i = 0; i < k1; ++i) {
            std::vector<Matrix> rest;
            for (int t = 0; t < k1; ++t)
                if (t != i) rest.push_back(args[static_cast<std::size_t>(t)]);
            Form v =
                interacting_expectation(rest, ad_action(args[static_cast<std::size_t>(i)], layer));
            acc += ((slots + i) % 2 == 0) ? v : -v;
        }
        for (int i = 0; i < k1; ++i)
            for (int j = i + 1; j < k1; ++j) {
                std::vector<Matrix> rest;
                rest.push_back(
                    bracket(args[static_cast<std::size_t>(i)], args[static_cast<std::size_t>(j)]));
                for (int t = 0; t < k1; ++t)
                    if (t != i && t != j) rest.push_back(args[static_cast<std::size_t>(t)]);
                Form v = interacting_expectation(rest, layer);
                acc += ((slots + i + j) % 2 == 0) ? -v : v;
            }
    }
    return acc;
}

std::vector<Check> interacting_checks(const SuiteConfig& cfg) {
    const int w = std::min(cfg.max_weight, 3);
    return {
        {"closed-under-b-and-hbar-delta", 10,
         [w](Sampler& s) -> std::optional<std::string> {
             const int k = s.uniform(1, 2);
             std::vector<Matrix> args;
             for (int i = 0; i < k; ++i) args.push_back(s.g_element(w));
             Chain c = s.chain(2, w);
             Form acc = lie_differential_term(args, c);
             acc += interacting_expectation(args, hochschild_b(c));
             acc -= delta(interacting_expectation(args, c)).h_shift(1);
             if (acc.is_zero()) return ok();
             return "k=" + std::to_string(k) + "  c=" + to_string(c) +
                    "  residual=" + to_string(acc);
         }},
        {"intertwines-B-with-d", 10,
         [w](Sampler& s) -> std::optional<std::string> {
             const int k = s.uniform(1, 2);
             std::vector<Matrix> args;
             for (int i = 0; i < k; ++i) args.push_back(s.g_element(w));
             Chain c = s.chain(2, w);
             if (interacting_expectation(args, connes_B(c)) ==
                 d(interacting_expectation(args, c)))
                 return ok();
             return "k=" + std::to_string(k) + "  c=" + to_string(c);
         }},
        {"antisymmetric-in-arguments", 10,
         [w](Sampler& s) -> std::optional<std::string> {
             Matrix a = s.g_element(w), b = s.g_element(w);
             Chain c = s.chain(2, w);
             if (interacting_expectation({a, b}, c) ==
                 -interacting_expectation({b, a}, c))
                 return ok();
             return "a=" + to_string(a) + "  b=" + to_string(b);
         }},
    };
}

// --------------------------------------------------------------- trace ----

std::vector<Check> trace_checks(const SuiteConfig& cfg) {
    const int w = std::min(cfg.max_weight, 3);
    return {
        {"vanishes-on-stabilizer-argument", 15,
         [w](Sampler& s) -> std::optional<std::string> {
             const int k = s.uniform(1, 2);
             std::vector<Matrix> args;
             for (int i = 0; i < k; ++i) args.push_back(s.g_element(w));
             args[static_cast<std::size_t>(s.uniform(0, k - 1))] = s.h_element();
             Chain c = s.chain(2, w);
             const ScalarValue v = universal_trace(args, c);
             if (v.is_zero()) return ok();
             return "c=" + to_string(c) + "  value=" + v.to_string();
         }},
        {"gamma-insertion-agrees", 10,
         [w](Sampler& s) -> std::optional<std::string> {
             const int k = s.uniform(1, 2);
             std::vector<Matrix> args;
             for (int i = 0; i < k; ++i) args.push_back(s.g_element(w));
             Chain c = s.chain(2, w);
             if (universal_trace(args, c) == universal_trace(args, c, true)) return ok();
             return "c=" + to_string(c);
         }},
        {"antisymmetric-in-arguments", 10,
         [w](Sampler& s) -> std::optional<std::string> {
             Matrix a = s.g_element(w), b = s.g_element(w);
             Chain c = s.chain(2, w);
             if (universal_trace({a, b}, c) + universal_trace({b, a}, c) == ScalarValue())
                 return ok();
             return "a=" + to_string(a) + "  b=" + to_string(b);
         }},
        {"parity-selection-rule", 15,
         [w](Sampler& s) -> std::optional<std::string> {
             // k arguments against an (m+1)-slot chain vanish when k+m is odd.
             const int k = s.uniform(0, 2);
             const int slots = (k % 2 == 0) ? 2 : (s.uniform(0, 1) == 0 ? 1 : 3);
             std::vector<Matrix> args;
             for (int i = 0; i < k; ++i) args.push_back(s.g_element(w));
             std::vector<Matrix> ms;
             for (int i = 0; i < slots; ++i) ms.push_back(s.weyl_matrix(w));
             const Chain c = bar_normalize(Chain::from_matrices(ms));
             const ScalarValue v = universal_trace(args, c);
             if (v.is_zero()) return ok();
             return "k=" + std::to_string(k) + "  c=" + to_string(c);
         }},
        {"cocycle-residual-vanishes", 8,
         [w](Sampler& s) -> std::optional<std::string> {
             const int k = s.uniform(1, 2);
             std::vector<Matrix> args;
             for (int i = 0; i < k; ++i) args.push_back(s.g_element(w));
             Chain c = s.chain(2, w);
             const ScalarValue v = cocycle_residual(args, c);
             if (v.is_zero()) return ok();
             return "c=" + to_string(c) + "  residual=" + v.to_string();
         }},
    };
}

// ------------------------------------------------------------------ gm ----

std::vector<Check> gm_checks(const SuiteConfig& cfg) {
    const int w = std::min(cfg.max_weight, 3);
    const int n = cfg.n, r = cfg.r;
    return {
        {"gauss-manin-residual-vanishes", 10,
         [w, n, r](Sampler& s) -> std::optional<std::string> {
             Matrix a = s.g_element(w), b = s.g_element(w);
             const ScalarValue v = gm_residual({a, b}, n, r);
             if (v.is_zero()) return ok();
             return "a=" + to_string(a) + "  b=" + to_string(b) +
                    "  residual=" + v.to_string();
         }},
    };
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"weyl",        "forms", "cyclic", "free",
                                                   "interacting", "trace", "gm"};
    return names;
}

std::vector<CheckResult> run_suite(const std::string& which, const SuiteConfig& cfg) {
    if (which == "weyl") return run_checks(weyl_checks(cfg), cfg);
    if (which == "forms") return run_checks(forms_checks(cfg), cfg);
    if (which == "cyclic") return run_checks(cyclic_checks(cfg), cfg);
    if (which == "free") return run_checks(free_checks(cfg), cfg);
    if (which == "interacting") return run_checks(interacting_checks(cfg), cfg);
    if (which == "trace") return run_checks(trace_checks(cfg), cfg);
    if (which == "gm") return run_checks(gm_checks(cfg), cfg);
    throw std::invalid_argument("run_suite: unknown suite '" + which + "'");
}

}  // namespace weyltrace
