/**
 * @file verify.hpp
 * @brief Identity suites shared by the CLI `verify` command and the
 * acceptance tests.
 *
 * Every row carries a human-readable anchor (the equation being checked).
 * Randomized rows draw from a seeded generator so runs are reproducible.
 */
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace qsphere {

struct VerifyRow {
    std::string id;
    std::string anchor;  // the identity in CLI syntax
    bool passed = false;
    std::string counterexample;  // empty when passed
};

struct VerifyReport {
    std::string suite;
    std::vector<VerifyRow> rows;
    int passed = 0;
    int failed = 0;
    bool ok() const { return failed == 0; }
};

struct VerifyOptions {
    int max_degree = 6;
    std::uint64_t seed = 20240101;
    int random_words = 500;
    double quad_tol = 1e-10;
};

std::vector<std::string> suite_names();

// runs one suite ("all" concatenates every suite); unknown names raise
// EngineError("Domain", ...)
std::vector<VerifyReport> run_suites(const std::string& selector, const VerifyOptions& opts = {});

}  // namespace qsphere
