/*
 * suites.hpp
 * ----------
 * Named property suites over seeded random inputs: every structural
 * identity of the engine, grouped by module, evaluated in exact
 * arithmetic.  Used by the CLI `verify` subcommand and the acceptance
 * tests.
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace weyltrace {

struct SuiteConfig {
    int n = 1;                 // half-dimension; variables y^1..y^{2n}
    int r = 1;                 // matrix rank
    std::uint64_t seed = 1;    // fully determines all samples
    int max_weight = 3;        // weight bound on sampled elements
    int cases = 0;             // iterations per check; 0 = per-check default
};

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string detail;  // first failing instance, empty when pass
};

// Suite identifiers accepted by run_suite, in canonical order.
const std::vector<std::string>& suite_names();

// Run one named suite; throws std::invalid_argument for an unknown name.
std::vector<CheckResult> run_suite(const std::string& which, const SuiteConfig& cfg);

}  // namespace weyltrace
