#ifndef SDEPTH_THEOREMS_HPP
#define SDEPTH_THEOREMS_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "sdepth/common.hpp"
#include "sdepth/linear_quotients.hpp"
#include "sdepth/monomial.hpp"
#include "sdepth/stanley.hpp"

namespace sdepth {

/// Witness that I collapses to a principal ideal modulo s variables:
/// I + (x_i : i in tau) = (u) + (x_i : i in tau).
struct CollapseWitness {
    std::vector<int> tau;
    Monomial u;
};

/// Exhaustive search over tau (ascending lexicographic, |tau| = s with
/// depth(S/I) = n - s - 1 from the Betti oracle) and u over the generators:
/// first pair where every other generator lies in (x_i : i in tau) and u does
/// not. nullopt would falsify the collapse proposition; callers treat it as
/// a reportable violation, not an exception.
std::optional<CollapseWitness> find_principal_collapse(const AdmissibleOrder& o,
                                                       const Limits& limits = {});

/// Independent re-check of the witness by two-way generator membership.
bool check_collapse_witness(const MonomialIdeal& I, const CollapseWitness& w);

struct DepthCodim2Verdict {
    int depth;
    int sdepth;
    bool holds() const { return sdepth == depth; }
};

/// For an ideal with linear quotients and depth(S/I) = n - 2, the Stanley
/// depth must match. Throws std::invalid_argument when the precondition
/// fails; a non-holding verdict would be a counterexample (in practice, a
/// bug).
DepthCodim2Verdict verify_depth_nminus2(const MonomialIdeal& I, const Limits& limits = {});

/// One step of the incremental decomposition pipeline: after absorbing u_j
/// the decomposition of S/I_j, the slot it consumed, and both invariants of
/// the prefix ideal.
struct PipelineStep {
    MonomialIdeal prefix_ideal;
    StanleyDecomposition decomposition;
    int slot;  // piece index consumed to produce this step; -1 for the first
    int sdepth;
    int depth;
};

struct PipelineResult {
    std::vector<PipelineStep> steps;
    std::optional<int> failed_step;  // 0-based order index with no slot
    bool completed() const { return !failed_step.has_value(); }
};

/// Walks an admissible order: starts from the staircase decomposition of
/// S/(u_1) and applies the quotient transform once per generator. Stops at
/// the first generator with no qualifying slot (this only means the method's
/// hypothesis failed, not a contradiction).
PipelineResult run_iterative_pipeline(const AdmissibleOrder& o);

/// Per-variable scan data for the depth/sdepth conjectures on (I, x_i).
struct ConjectureScanEntry {
    int var;
    int depth_added;
    std::optional<int> sdepth_added;  // only in strong scans
    bool qualifies;
};

struct ConjectureReport {
    MonomialIdeal ideal;
    bool strong;
    int base_depth;
    std::optional<int> base_sdepth;
    std::vector<ConjectureScanEntry> per_variable;
    std::optional<int> witness;  // smallest qualifying variable
};

/// Full scan (all variables, reproducible values) for reporting.
ConjectureReport conjecture_scan(const MonomialIdeal& I, bool strong,
                                 const Limits& limits = {});

/// Smallest i with depth(S/(I, x_i)) >= depth(S/I); nullopt is a
/// counterexample to the weak conjecture and worth persisting.
std::optional<int> conjecture_witness(const MonomialIdeal& I, const Limits& limits = {});

/// Smallest i satisfying additionally sdepth(S/(I, x_i)) <= sdepth(S/I).
/// sdepth(S/(I, x_i)) is evaluated in n-1 variables through the reduction
/// (x_i, I) = (x_i, J).
std::optional<int> strong_conjecture_witness(const MonomialIdeal& I,
                                             const Limits& limits = {});

/// sdepth(S/(I, x_i)) computed as sdepth(S'/J) where J lives in n-1
/// variables; n-1 when every generator is divisible by x_i.
int sdepth_after_adding_variable(const MonomialIdeal& I, int var, const Limits& limits = {});

/// The order-combinatorial form of the weak conjecture: smallest i such that
/// no step k has x_i not dividing u_k, x_i free at step k, and |Z_k| minimal
/// (= n - s). When it returns a variable, that variable is a depth witness.
std::optional<int> combinatorial_witness(const AdmissibleOrder& o);

/// One level of the inductive certification: values of both invariants for
/// S/I, S/(I, x_i) and S'/J, plus the chain inequalities between them.
struct ChainLevel {
    int n;
    MonomialIdeal ideal;
    std::optional<int> witness;
    int depth_full, sdepth_full;
    int depth_added = -1, sdepth_added = -1;  // meaningful when witness is set
    int depth_sub = -1, sdepth_sub = -1;
    bool inequalities_hold = true;
};

struct ChainVerdict {
    bool certified;              // all levels found witnesses and all checks hold
    std::optional<int> stuck_n;  // ambient size where no witness existed
    std::vector<ChainLevel> levels;
};

/// Recursively picks a strong witness, reduces to n-1 variables, and checks
/// sdepth(S/I) >= sdepth(S/(I,x_i)) = sdepth(S'/J) >= depth(S'/J) =
/// depth(S/(I,x_i)) >= depth(S/I) with exactly computed values, down to a
/// principal ideal.
ChainVerdict conditional_chain_verify(const MonomialIdeal& I, const Limits& limits = {});

/// Exact values around the sequence 0 -> S/(I:x_i) -> S/I -> S/(I,x_i) -> 0.
/// nullopt values mean the colon collapsed to the unit ideal (zero module,
/// both invariants treated as +infinity).
struct ExactSequenceReport {
    int var;
    int depth_base, sdepth_base;
    int depth_added, sdepth_added;
    std::optional<int> depth_colon, sdepth_colon;
    bool depth_min_inequality, sdepth_min_inequality;
    bool depth_colon_monotone, sdepth_colon_monotone;

    bool all_hold() const {
        return depth_min_inequality && sdepth_min_inequality && depth_colon_monotone &&
               sdepth_colon_monotone;
    }
};

ExactSequenceReport exact_sequence_checks(const MonomialIdeal& I, int var,
                                          const Limits& limits = {});

struct RandomIdealParams {
    int n = 4;
    int m = 4;
    int max_degree = 3;
    int retry_cap = 200;
};

/// Grows a random linear-quotient ideal: each step samples (seeded) among
/// monomials keeping the generating set minimal and the colon generated by
/// variables. May return fewer than m generators when the retry cap is
/// exhausted. Deterministic for a fixed seed.
std::pair<MonomialIdeal, AdmissibleOrder> random_linear_quotient_ideal(
    const RandomIdealParams& params, std::uint64_t seed);

} // namespace sdepth

#endif
