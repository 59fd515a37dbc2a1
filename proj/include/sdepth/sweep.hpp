#ifndef SDEPTH_SWEEP_HPP
#define SDEPTH_SWEEP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sdepth/common.hpp"
#include "sdepth/theorems.hpp"

namespace sdepth {

struct SweepConfig {
    RandomIdealParams params;
    int count = 100;
    std::uint64_t seed = 0;
    std::string findings_dir;       // empty: do not persist counterexamples
    bool check_conjectures = true;  // the sdepth-heavy half of the battery
    Limits limits;
};

/// Aggregated outcome of the per-instance invariant battery. Violations are
/// failed theorems (hard errors); notables are conjecture counterexamples or
/// research-grade observations, which are expected to stay possible.
struct SweepSummary {
    int instances = 0;

    int depth_agreement_checks = 0;
    int generator_decomposition_checks = 0;
    int collapse_checks = 0;
    int pipelines_completed = 0;
    int pipelines_without_slot = 0;
    int pipeline_steps_checked = 0;
    int exact_sequence_pairs = 0;
    int jahan_checks = 0;
    int depth_nminus2_checks = 0;
    int conjecture_checks = 0;
    int strong_conjecture_checks = 0;

    std::vector<std::string> violations;  // theorem failures, deterministic order
    std::vector<std::string> notables;

    bool ok() const { return violations.empty(); }
};

/// Runs the full battery over `count` seeded random linear-quotient ideals.
/// Deterministic for fixed config.
SweepSummary run_sweep(const SweepConfig& config);

/// Renders the summary as stable key: value lines.
std::string format_summary(const SweepConfig& config, const SweepSummary& summary);

/// Compares the reduced-box verdict of verify_decomposition against a box
/// enlarged by one in every coordinate, over `count` random decompositions,
/// half of them deliberately corrupted. Returns the number of mismatches
/// (zero means the box reduction is sound on the sample).
int box_soundness_mismatches(int count, std::uint64_t seed);

/// Writes one self-describing finding file; returns the path.
std::string write_finding(const std::string& dir, const std::string& stem,
                          const std::string& body);

} // namespace sdepth

#endif
