/*
 * acceptance_main.cpp
 * -------------------
 * End-to-end acceptance gate for the engine: ten numbered criteria, one
 * line each, covering the star product, the cyclic complex, the free and
 * interacting expectations, the wheel coefficients, the universal trace
 * and its closedness, the hbar-flatness residual, and the two-sided index
 * comparison.  Criteria 1-9 decide the exit code; criterion 10 prints a
 * degree-4 comparison report.  All sampling is seeded, so the output is
 * byte-identical across runs.
 */
#include <cstdio>
#include <string>
#include <vector>

#include "weyltrace/configspace.hpp"
#include "weyltrace/literals.hpp"
#include "weyltrace/sampler.hpp"
#include "weyltrace/trace.hpp"

using namespace weyltrace;

namespace {

bool g_all_ok = true;

void report(int num, bool ok, const std::string& desc) {
    std::printf("[%2d] %s  %s\n", num, ok ? "PASS" : "FAIL", desc.c_str());
    if (!ok) g_all_ok = false;
}

Matrix scalar1(const Form& f) { return Matrix::scalar(1, f); }

// --- 1: star associativity and bracket Jacobi -------------------------------

bool star_identities() {
    for (int n : {1, 2}) {
        for (int r : {1, 2}) {
            Sampler s(1100 + 10 * n + r, 2 * n, r);
            for (int t = 0; t < 50; ++t) {
                const Matrix a = s.weyl_matrix(4);
                const Matrix b = s.weyl_matrix(4);
                const Matrix c = s.weyl_matrix(4);
                if (!(moyal_mul(moyal_mul(a, b), c) == moyal_mul(a, moyal_mul(b, c))))
                    return false;
                Matrix jac = bracket(a, bracket(b, c));
                jac += bracket(b, bracket(c, a));
                jac += bracket(c, bracket(a, b));
                if (!jac.is_zero()) return false;
            }
        }
    }
    return true;
}

// --- 2: mixed-complex axioms -------------------------------------------------

bool complex_identities() {
    for (int n : {1, 2}) {
        for (int r : {1, 2}) {
            Sampler s(1200 + 10 * n + r, 2 * n, r);
            for (int t = 0; t < 25; ++t) {
                const Chain c = s.chain(4, 3);
                if (!hochschild_b(hochschild_b(c)).is_zero()) return false;
                if (!connes_B(connes_B(c)).is_zero()) return false;
                if (!(hochschild_b(connes_B(c)) + connes_B(hochschild_b(c))).is_zero())
                    return false;
            }
        }
    }
    return true;
}

// --- 3: free expectation intertwines the differentials ----------------------

bool expectation_intertwining() {
    int done = 0;
    for (int n : {1, 2}) {
        for (int r : {1, 2}) {
            Sampler s(1300 + 10 * n + r, 2 * n, r);
            const int count = (done < 2) ? 13 : 12;  // 50 total
            ++done;
            for (int t = 0; t < count; ++t) {
                const Chain c = s.chain(3, 3);
                if (!(free_expectation(connes_B(c)) == d(free_expectation(c)))) return false;
                if (!(free_expectation(hochschild_b(c)) ==
                      delta(free_expectation(c)).h_shift(1)))
                    return false;
            }
        }
    }
    return true;
}

// --- 4: wheel coefficients ---------------------------------------------------

bool wheel_table() {
    const std::vector<Rational> expected = {rat(-1, 12),    rat(0), rat(1, 720),      rat(0),
                                            rat(-1, 30240), rat(0), rat(1, 1209600)};
    for (int k = 2; k <= 8; ++k)
        if (!(wheel_coefficient(k) == expected[static_cast<std::size_t>(k - 2)])) return false;
    return true;
}

// --- 5: trace vanishes on the subalgebra; the trace cochain is closed -------

bool trace_stabilizer_vanishing() {
    for (int r : {1, 2}) {
        Sampler s(1500 + r, 2, r);
        for (int t = 0; t < 25; ++t) {
            const Matrix h = s.h_element();
            const Matrix b = s.g_element(2);
            std::vector<Matrix> args = (s.uniform(0, 1) == 0)
                                           ? std::vector<Matrix>{h, b}
                                           : std::vector<Matrix>{b, h};
            if (!universal_trace(args, s.chain(2, 2)).is_zero()) return false;
        }
    }
    return true;
}

bool trace_closedness() {
    int done = 0;
    for (int r : {1, 2}) {
        Sampler s(1550 + r, 2, r);
        const int count = (done == 0) ? 13 : 12;  // 25 total
        ++done;
        for (int t = 0; t < count; ++t) {
            const int k = s.uniform(1, 2);
            std::vector<Matrix> args;
            for (int i = 0; i < k; ++i) args.push_back(s.g_element(2));
            if (!cocycle_residual(args, s.chain(2, 2)).is_zero()) return false;
        }
    }
    return true;
}

// --- 6: normalization of the trace ------------------------------------------

bool trace_normalization() {
    for (int n : {1, 2})
        for (int r : {1, 2})
            if (!(universal_trace({}, Chain::unit(2 * n, r)) ==
                  ScalarValue::monomial(0, n, r)))
                return false;
    return true;
}

// --- 7: two-point value and the degree-2 index comparison -------------------

bool degree_two_index() {
    const Form p = Form::variable(2, 1), q = Form::variable(2, 2);
    if (!(universal_trace({scalar1(p), scalar1(q)}, Chain::unit(2, 1)) ==
          ScalarValue::monomial(-1, 0, -1)))
        return false;
    if (!index_report(1, 1, {scalar1(p), scalar1(q)}).difference.is_zero()) return false;
    const Matrix a = Matrix::scalar(2, p);
    const Matrix b = Matrix::unit(2, 0, 0, q).h_shift(1);
    if (!index_report(1, 2, {a, b}).difference.is_zero()) return false;
    return true;
}

// --- 8: hbar-flatness residual -----------------------------------------------

bool flatness_residual() {
    for (int r : {1, 2}) {
        Sampler s(1800 + r, 2, r);
        for (int t = 0; t < 10; ++t) {
            const Matrix a = s.g_element(3);
            const Matrix b = s.g_element(3);
            if (!gm_residual({a, b}, 1, r).is_zero()) return false;
        }
    }
    return true;
}

// --- 9: the hbar-connection commutes with evaluation -------------------------

bool connection_compatibility() {
    int done = 0;
    for (int n : {1, 2}) {
        for (int r : {1, 2}) {
            Sampler s(1900 + 10 * n + r, 2 * n, r);
            const int count = (done < 2) ? 13 : 12;  // 50 total
            ++done;
            for (int t = 0; t < count; ++t) {
                const Chain c = s.chain(3, 3);
                if (!(nabla_hbar(free_expectation(c)) == free_expectation(nabla_hbar(c))))
                    return false;
                const Form a = s.form_element(3);
                if (!(nabla_hbar(bv_integrate(a, n)) == bv_integrate(nabla_hbar(a), n)))
                    return false;
            }
        }
    }
    return true;
}

// --- 10: degree-4 index comparison report -----------------------------------

void degree_four_report() {
    const Form p = Form::variable(2, 1), q = Form::variable(2, 2);
    const std::vector<Matrix> mixed = {scalar1(p), scalar1(q), scalar1(p * p * q),
                                       scalar1(p * q * q)};
    const std::vector<Matrix> cubes = {scalar1(p * p * p), scalar1(p * p * q),
                                       scalar1(p * q * q), scalar1(q * q * q)};
    const IndexReport m = index_report(1, 1, mixed);
    const IndexReport c = index_report(1, 1, cubes);

    std::printf("[10] REPORT  degree-4 index comparison, n=1 r=1\n");
    std::printf("     mixed quadruple (y1, y2, y1^2 y2, y1 y2^2):\n");
    std::printf("       wheel-sum side   = %s\n", m.trace_side.to_string().c_str());
    std::printf("       closed-form side = %s\n", m.formula_side.to_string().c_str());
    if (!m.formula_side.is_zero() && m.trace_side == m.formula_side) {
        std::printf("       ratio = 1: the one-loop comparison closes under the definitional\n");
        std::printf("       normalization of the quadratic-curvature insertion\n");
    } else {
        std::printf("       sides differ by %s\n", m.difference.to_string().c_str());
    }
    std::printf("     cubic quadruple (y1^3, y1^2 y2, y1 y2^2, y2^3):\n");
    std::printf("       wheel-sum side   = %s\n", c.trace_side.to_string().c_str());
    std::printf("       closed-form side = %s\n", c.formula_side.to_string().c_str());
    std::printf("       no one-loop ratio: cubic pairs have no quadratic curvature, and the\n");
    std::printf("       remaining hbar^2 term sits one loop order beyond the truncation\n");
    std::printf("     the overall normalization of the quadratic-curvature insertion remains\n");
    std::printf("     an open calibration question; these values are reported, not asserted\n");
}

}  // namespace

int main() {
    report(1, star_identities(),
           "star product is associative and the bracket satisfies Jacobi "
           "(200 random matrix triples, weight <= 4)");
    report(2, complex_identities(),
           "b^2 = 0, B^2 = 0, bB + Bb = 0 (100 random chains, up to 4 slots)");
    report(3, expectation_intertwining(),
           "free expectation sends B to d and b to hbar delta (50 random chains)");
    report(4, wheel_table(), "wheel coefficients k = 2..8 match their closed forms");
    report(5, trace_stabilizer_vanishing() && trace_closedness(),
           "trace vanishes on subalgebra insertions (50 instances) and its cochain "
           "is closed (25 instances)");
    report(6, trace_normalization(), "trace of the unit chain is r u^n for n, r in {1, 2}");
    report(7, degree_two_index(),
           "two-point trace equals -1/hbar and the degree-2 index comparison closes "
           "for the symplectic and rank-2 pairs");
    report(8, flatness_residual(), "hbar-flatness residual vanishes on 20 random pairs");
    report(9, connection_compatibility(),
           "hbar-connection commutes with expectation and fiber integration "
           "(50 random inputs)");
    degree_four_report();
    return g_all_ok ? 0 : 1;
}
