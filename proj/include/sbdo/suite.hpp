#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sbdo/checks.hpp"
#include "sbdo/jrep.hpp"

namespace sbdo {

struct SuiteConfig {
    std::size_t n = 4;  // spin dimension
    RepSpec rep = RepSpec::clifford(4, 2);
    std::size_t p = 1;
    std::size_t samples = 20;
    std::uint64_t seed = 1;

    // Testing mutations for the negative controls.
    enum class Mutation { None, PerturbCoeff, SymbolY1 };
    Mutation mutation = Mutation::None;
    std::size_t perturb_index = 1;
};

struct VerificationReport {
    std::string suite;
    std::string params;  // human-readable configuration line
    std::vector<CheckResult> checks;
    std::vector<double> timings_ms;  // parallel to checks; kept out of the JSON
    bool all_pass = true;

    int exit_code() const { return all_pass ? 0 : 1; }
    std::string to_json() const;
    std::string to_text() const;
};

// Runs, in order: algebra axioms, representation axioms, regularity, symbol
// solve, delta cross-checks, translation/structure/rotation equivariance,
// Hecke (constant and symbol), inversion. Checks whose inputs failed to
// materialize are recorded as skipped failures.
VerificationReport run_suite(const SuiteConfig& config);

// Pipeline used by the construct/solve CLI paths: solve the symbol space and
// return the oracle-validated coefficients (plus the paper-rule vector for
// side-by-side reporting).
struct SolveOutcome {
    CoeffVector oracle;      // nullspace solution, a0-normalized
    CoeffVector derived;     // derived recurrence
    CoeffVector paper;       // printed recurrence
    bool oracle_matches_derived = false;
    bool derived_matches_paper = false;
};
SolveOutcome solve_rank2(const RepSpec& rep_spec, std::size_t n, std::size_t p);

}  // namespace sbdo
