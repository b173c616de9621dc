#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace oscillab {

// Outcome of one randomized or exhaustive verification suite.
struct SuiteResult {
    std::string name;
    std::uint64_t cases = 0;
    std::uint64_t violations = 0;
    std::string first_failure; // empty when clean

    bool passed() const { return violations == 0; }
};

// Randomized suites; `cases` is the number of sampled instances and `seed`
// drives the documented splitmix64 generator, so equal (seed, cases) give
// byte-identical results.
SuiteResult pseudometric_suite(std::uint64_t seed, std::uint64_t cases);
SuiteResult mm_structure_suite(std::uint64_t seed, std::uint64_t cases);
SuiteResult witness_suite(std::uint64_t seed, std::uint64_t cases);
SuiteResult isometry_suite(std::uint64_t seed, std::uint64_t cases);
SuiteResult orbit_approx_suite(std::uint64_t seed, std::uint64_t cases);
SuiteResult sphere_approx_suite(std::uint64_t seed, std::uint64_t cases);
SuiteResult embedding_suite(std::uint64_t seed, std::uint64_t cases);
SuiteResult prefix_agreement_suite(std::uint64_t seed, std::uint64_t cases);

// Exhaustive desk-scale combinatorics: Stirling counts, the factorization
// / coarsening equivalence, and dual-Ramsey witness verification.
SuiteResult combinatorics_suite();

// The full battery with per-suite case counts derived from `cases` the same
// way the acceptance gate pins them at cases = 1000.
std::vector<SuiteResult> run_all_suites(std::uint64_t seed, std::uint64_t cases);

std::string render_report_table(const std::vector<SuiteResult>& results);
std::string render_report_json(const std::vector<SuiteResult>& results,
                               std::uint64_t seed, std::uint64_t cases);

} // namespace oscillab
