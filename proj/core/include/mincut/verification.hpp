#ifndef MINCUT_VERIFICATION_HPP_
#define MINCUT_VERIFICATION_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "mincut/oracle.hpp"

namespace mincut {

/// Corpus sweep comparing the pipeline answer against reference cut
/// oracles on deterministic generated families.
struct OracleEquivalenceSummary {
    /// Pipeline vs Stoer-Wagner on graphs with n <= max_n.
    std::size_t stoer_wagner_total = 0;
    std::size_t stoer_wagner_mismatches = 0;
    /// Pipeline vs the exhaustive oracle on graphs with n <= 14.
    std::size_t exhaustive_total = 0;
    std::size_t exhaustive_mismatches = 0;
    /// Larger planted instances that exercise the decomposition path
    /// (minimum degree above the oracle-only cutoff).
    std::size_t decompose_path_total = 0;
    std::size_t decompose_path_mismatches = 0;
    std::vector<std::string> failures;

    bool ok() const {
        return stoer_wagner_mismatches == 0 && exhaustive_mismatches == 0 &&
               decompose_path_mismatches == 0;
    }
};

/// Runs gnp (p in {0.1, 0.3, 0.6}), cycle, hypercube, and clique-pair
/// families until at least `trials` graphs with n <= max_n were compared
/// against Stoer-Wagner and at least `min_exhaustive` graphs with n <= 14
/// against the exhaustive oracle, plus a fixed planted block on the
/// decomposition path.
OracleEquivalenceSummary run_oracle_equivalence(std::size_t trials,
                                                std::size_t max_n,
                                                std::uint64_t seed,
                                                OracleChoice oracle,
                                                std::size_t min_exhaustive = 300);

/// Contraction-safety property sweep: decompose at phi = 40/delta, trim
/// and shave every part, and check against every non-trivial minimum cut
/// C (from the exhaustive oracle) and every part X with X' = trim(X),
/// X'' = shave(X'):
///   (1) 40 * min(|X n C|, |X \ C|) <= lambda,
///   (2) min(|X' n C|, |X' \ C|) <= 2,
///   (3) min(|X'' n C|, |X'' \ C|) = 0.
/// An instance is non-vacuous when it is connected, every part passes
/// exhaustive certification at 40/delta, and a non-trivial minimum cut
/// exists; checks are counted per (part, cut) pair. A planted block of
/// large clique-pairs (known unique non-trivial minimum cut) exercises
/// the same assertions where the decomposition actually runs.
struct ContractionSafetySummary {
    std::size_t instances = 0;
    std::size_t nonvacuous_instances = 0;
    std::size_t checks = 0;
    std::size_t violations = 0;
    std::size_t planted_instances = 0;
    std::size_t planted_checks = 0;
    std::size_t planted_violations = 0;
    std::vector<std::string> failures;

    bool ok(std::size_t min_checks) const {
        return violations == 0 && planted_violations == 0 &&
               checks >= min_checks;
    }
};

ContractionSafetySummary run_contraction_safety_checks(std::uint64_t seed);

}  // namespace mincut

#endif  // MINCUT_VERIFICATION_HPP_
