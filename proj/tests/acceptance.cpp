// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion carries its wall-clock budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "qsphere/expression.hpp"
#include "qsphere/integration.hpp"
#include "qsphere/verify.hpp"

using namespace qsphere;

namespace {

struct Criterion {
    int number;
    std::string description;
    double budget_seconds;
    std::function<std::string()> run;  // empty string = pass, else failure text
};

// run the named suites and fail on any row matching the predicate that did
// not pass; fail if no row matched at all
std::string run_filtered(const std::vector<std::string>& suites,
                         const std::function<bool(const VerifyRow&)>& pred,
                         const VerifyOptions& opts) {
    int matched = 0;
    std::string failures;
    for (const std::string& name : suites) {
        for (const VerifyReport& report : run_suites(name, opts)) {
            for (const VerifyRow& row : report.rows) {
                if (!pred(row)) continue;
                ++matched;
                if (!row.passed)
                    failures += "\n      " + report.suite + "/" + row.id + ": " +
                                row.counterexample;
            }
        }
    }
    if (matched == 0) return "no checks matched the criterion filter";
    return failures;
}

bool id_starts_with(const VerifyRow& row, const char* prefix) {
    return row.id.rfind(prefix, 0) == 0;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria;

    criteria.push_back({1, "Podles relations and star structure, both realizations", 1.0, [] {
        std::string err;
        try {
            podles_generators();         // verifies Eqs (1)-(4) + star in the z-patch
            stereographic_elements();    // verifies the same for the SU_q(2) images
        } catch (const EngineError& e) {
            err = e.what();
        }
        return err;
    }});

    criteria.push_back({2, "stereographic origin of z, zb", 1.0, [] {
        std::string err;
        try {
            StereographicElements s = stereographic_elements();
            // Eq (zz) re-checked explicitly at this level
            SUq2Element lhs = mul(s.z_img, s.zb_img);
            SUq2Element rhs = mul(s.zb_img, s.z_img).scaled(Scalar::q_pow(-2)) +
                              SUq2Element(Scalar::q_pow(-2) - Scalar::one());
            if (lhs != rhs) return std::string("z zb relation mismatch");
            SUq2Element cleared = mul(s.z_img, SUq2Element::one() - s.b_3);
            if (cleared != s.b_minus.scaled(-Scalar::q_pow(1)))
                return std::string("projection identity mismatch");
            if (select_convention() != SUConvention::QPlus)
                return std::string("wrong convention selected");
        } catch (const EngineError& e) {
            err = e.what();
        }
        return err;
    }});

    VerifyOptions base;
    base.max_degree = 6;

    criteria.push_back({3, "calculus suite (relations, stars, gauge, d^2 = 0 to degree 6)", 10.0,
                        [base] {
                            return run_filtered({"calculus"}, [](const VerifyRow&) { return true; },
                                                base);
                        }});
    criteria.push_back({4, "Xi suite (derivation property to degree 6, closed forms)", 10.0,
                        [base] {
                            return run_filtered({"xi"}, [](const VerifyRow&) { return true; },
                                                base);
                        }});
    criteria.push_back({5, "vector fields (PBW, actions, covariance, Xi interaction)", 30.0,
                        [base] {
                            return run_filtered({"vfields"}, [](const VerifyRow&) { return true; },
                                                base);
                        }});
    criteria.push_back({6, "pseudo-differential realizations to degree 5, inverses to 8", 60.0,
                        [base] {
                            return run_filtered({"pseudodiff"},
                                                [](const VerifyRow&) { return true; }, base);
                        }});
    criteria.push_back({7, "integration (moments to l = 12, plane invariance)", 10.0, [base] {
        return run_filtered({"integration"}, [](const VerifyRow&) { return true; }, base);
    }});
    criteria.push_back({8, "w-patch localization and xi closed forms", 10.0, [base] {
        return run_filtered({"wpatch"}, [](const VerifyRow&) { return true; }, base);
    }});
    criteria.push_back({9, "Poisson brackets from commutator limits, Jacobi, Leibniz", 10.0,
                        [base] {
                            return run_filtered({"poisson"},
                                                [](const VerifyRow& row) {
                                                    return !id_starts_with(row, "numeric");
                                                },
                                                base);
                        }});
    criteria.push_back({10, "numeric circle and area integrals", 10.0, [base] {
        return run_filtered({"poisson"},
                            [](const VerifyRow& row) { return id_starts_with(row, "numeric"); },
                            base);
    }});
    criteria.push_back({11, "confluence on 500 seeded words per algebra, parser round trip",
                        30.0, [base] {
        VerifyOptions opts = base;
        opts.random_words = 500;
        return run_filtered({"zalgebra", "vfields", "suq2", "robustness"},
                            [](const VerifyRow& row) {
                                return id_starts_with(row, "confluence") ||
                                       id_starts_with(row, "pbw-confluence") ||
                                       id_starts_with(row, "roundtrip") ||
                                       id_starts_with(row, "parse-error");
                            },
                            opts);
    }});

    int failures = 0;
    for (const Criterion& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string err = c.run();
        double elapsed = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start).count();
        bool within_budget = elapsed < c.budget_seconds;
        bool ok = err.empty() && within_budget;
        if (!ok) ++failures;
        std::printf("%s  criterion %2d: %s (%.2f s, budget %.0f s)%s\n", ok ? "PASS" : "FAIL",
                    c.number, c.description.c_str(), elapsed, c.budget_seconds,
                    err.empty() ? "" : err.c_str());
        if (!within_budget && err.empty())
            std::printf("      exceeded the time budget\n");
    }
    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all %zu criteria passed\n", criteria.size());
    return 0;
}
