/*
 * wtrace_main.cpp
 * ---------------
 * Command-line front end for the engine.
 *
 * Subcommands:
 *   verify  run property suites over seeded random inputs
 *   wheel   print wheel coefficients as TSV
 *   expect  evaluate the expectation of a chain literal
 *   trace   evaluate the universal trace of a chain literal
 *   index   print both sides of the index comparison
 *
 * Exit codes: 0 success, 1 usage or input error, 2 identity violation
 * (the first failing instance is printed).  Output for a fixed seed is
 * byte-identical across runs and platforms.
 */
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "weyltrace/configspace.hpp"
#include "weyltrace/literals.hpp"
#include "weyltrace/suites.hpp"
#include "weyltrace/trace.hpp"

using namespace weyltrace;

namespace {

struct CommonOpts {
    int n = 1;
    int r = 1;
    std::uint64_t seed = 1;
    int max_weight = 3;
};

void add_common(CLI::App* sub, CommonOpts& o) {
    sub->add_option("--n", o.n, "half-dimension (variables y1..y2n)")
        ->check(CLI::Range(1, 4))
        ->capture_default_str();
    sub->add_option("--r", o.r, "matrix rank")->check(CLI::Range(1, 8))->capture_default_str();
    sub->add_option("--seed", o.seed, "random seed for sampled inputs")->capture_default_str();
    sub->add_option("--max-weight", o.max_weight, "weight bound on sampled elements")
        ->check(CLI::Range(0, 6))
        ->capture_default_str();
}

int run_verify(const std::string& which, const CommonOpts& o) {
    SuiteConfig cfg;
    cfg.n = o.n;
    cfg.r = o.r;
    cfg.seed = o.seed;
    cfg.max_weight = o.max_weight;
    std::vector<std::string> selected;
    if (which == "all")
        selected = suite_names();
    else
        selected.push_back(which);
    bool ok = true;
    for (const std::string& name : selected) {
        for (const CheckResult& res : run_suite(name, cfg)) {
            if (res.pass) {
                std::printf("%s/%s: ok\n", name.c_str(), res.name.c_str());
            } else {
                std::printf("%s/%s: FAIL  %s\n", name.c_str(), res.name.c_str(),
                            res.detail.c_str());
                ok = false;
            }
        }
    }
    return ok ? 0 : 2;
}

int run_wheel(int max_k) {
    for (int k = 2; k <= max_k; ++k)
        std::printf("%d\t%s\n", k, to_string(wheel_coefficient(k)).c_str());
    return 0;
}

// Shared literal handling for `expect` and `trace`.
struct Evaluation {
    Chain chain;
    std::vector<Matrix> args;
};

Evaluation parse_inputs(const std::string& chain_text, const std::string& args_text, int n) {
    Evaluation ev{bar_normalize(parse_chain(chain_text, 2 * n)), {}};
    if (!args_text.empty()) ev.args = parse_args(args_text, 2 * n);
    return ev;
}

int run_expect(const std::string& chain_text, const std::string& args_text, const CommonOpts& o) {
    const Evaluation ev = parse_inputs(chain_text, args_text, o.n);
    std::printf("%s\n", to_string(interacting_expectation(ev.args, ev.chain)).c_str());
    return 0;
}

int run_trace(const std::string& chain_text, const std::string& args_text, const CommonOpts& o) {
    const Evaluation ev = parse_inputs(chain_text, args_text, o.n);
    std::printf("%s\n", universal_trace(ev.args, ev.chain).to_string().c_str());
    return 0;
}

std::vector<Matrix> default_index_args(int degree, int n, int r) {
    const int dim = 2 * n;
    const Form p = Form::variable(dim, 1);
    const Form q = Form::variable(dim, n + 1);
    if (degree == 0) return {};
    if (degree == 2) return {Matrix::scalar(r, p), Matrix::scalar(r, q)};
    return {Matrix::scalar(r, p), Matrix::scalar(r, q), Matrix::scalar(r, p * p * q),
            Matrix::scalar(r, p * q * q)};
}

int run_index(int degree, const std::string& args_text, const CommonOpts& o) {
    std::vector<Matrix> args;
    if (!args_text.empty()) {
        args = parse_args(args_text, 2 * o.n);
        degree = static_cast<int>(args.size());
    } else {
        args = default_index_args(degree, o.n, o.r);
    }
    const IndexReport rep = index_report(o.n, o.r, args);
    std::printf("trace side   = %s\n", rep.trace_side.to_string().c_str());
    std::printf("formula side = %s\n", rep.formula_side.to_string().c_str());
    std::printf("difference   = %s\n", rep.difference.to_string().c_str());
    if (degree <= 2 && !rep.difference.is_zero()) {
        std::printf("index comparison failed at degree %d\n", degree);
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symbolic engine for star products, cyclic chains, and trace identities"};
    app.require_subcommand(1);

    CommonOpts opts;

    auto* verify = app.add_subcommand("verify", "run property suites on seeded random inputs");
    std::string suite = "all";
    verify->add_option("--suite", suite, "suite to run, or 'all'")
        ->check(CLI::IsMember(
            {"all", "weyl", "forms", "cyclic", "free", "interacting", "trace", "gm"}))
        ->capture_default_str();
    add_common(verify, opts);

    auto* wheel = app.add_subcommand("wheel", "print wheel coefficients as 'k<TAB>value' lines");
    int max_k = 8;
    wheel->add_option("--max-k", max_k, "largest wheel size")
        ->check(CLI::Range(2, 12))
        ->capture_default_str();

    std::string chain_text, args_text;
    auto* expect = app.add_subcommand("expect", "evaluate the expectation of a chain literal");
    expect->add_option("chain", chain_text, "chain literal, e.g. 'chain [ mat 1 [[y1]] ]'")
        ->required();
    expect->add_option("--args", args_text, "argument list literal, e.g. 'args [ mat 1 [[y1]] ]'");
    add_common(expect, opts);

    auto* trace = app.add_subcommand("trace", "evaluate the universal trace of a chain literal");
    trace->add_option("chain", chain_text, "chain literal, e.g. 'chain [ mat 1 [[1]] ]'")
        ->required();
    trace->add_option("--args", args_text, "argument list literal");
    add_common(trace, opts);

    auto* index = app.add_subcommand("index", "print both sides of the index comparison");
    int degree = 2;
    index->add_option("--degree", degree, "comparison degree")
        ->check(CLI::IsMember({0, 2, 4}))
        ->capture_default_str();
    index->add_option("--args", args_text, "argument list literal overriding the defaults");
    add_common(index, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (verify->parsed()) return run_verify(suite, opts);
        if (wheel->parsed()) return run_wheel(max_k);
        if (expect->parsed()) return run_expect(chain_text, args_text, opts);
        if (trace->parsed()) return run_trace(chain_text, args_text, opts);
        return run_index(degree, args_text, opts);
    } catch (const ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
