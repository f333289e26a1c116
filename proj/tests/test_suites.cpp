/*
 * test_suites.cpp
 * ---------------
 * The named property suites: every check of every suite passes on small
 * seeded configurations, results are deterministic per seed, and unknown
 * suite names are rejected.
 */
#include <catch2/catch_amalgamated.hpp>

#include "weyltrace/suites.hpp"

using namespace weyltrace;

TEST_CASE("canonical suite list", "[suites]") {
    const std::vector<std::string> expected = {"weyl",        "forms", "cyclic", "free",
                                               "interacting", "trace", "gm"};
    CHECK(suite_names() == expected);
    CHECK_THROWS_AS(run_suite("nonsense", SuiteConfig{}), std::invalid_argument);
}

TEST_CASE("every suite passes on small configurations", "[suites]") {
    for (const SuiteConfig cfg : {SuiteConfig{1, 1, 42, 2, 2}, SuiteConfig{1, 2, 7, 2, 2}}) {
        for (const std::string& name : suite_names()) {
            const std::vector<CheckResult> results = run_suite(name, cfg);
            REQUIRE(!results.empty());
            for (const CheckResult& res : results) {
                INFO(name << "/" << res.name << ": " << res.detail);
                REQUIRE(res.pass);
            }
        }
    }
}

TEST_CASE("suite runs are deterministic per seed", "[suites]") {
    const SuiteConfig cfg{1, 1, 99, 2, 2};
    const auto a = run_suite("weyl", cfg);
    const auto b = run_suite("weyl", cfg);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].name == b[i].name);
        CHECK(a[i].pass == b[i].pass);
        CHECK(a[i].detail == b[i].detail);
    }
}
