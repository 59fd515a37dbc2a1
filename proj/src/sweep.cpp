#include "sdepth/sweep.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "sdepth/betti.hpp"
#include "sdepth/io.hpp"

namespace sdepth {

namespace {

std::string describe(int idx, std::uint64_t seed, const MonomialIdeal& I,
                     const std::string& what) {
    std::ostringstream out;
    out << "instance " << idx << " (seed " << seed << ", " << format_ideal(I) << "): " << what;
    return out.str();
}

std::string finding_body(const char* kind, std::uint64_t seed, const SweepConfig& config,
                         const ConjectureReport& report) {
    std::ostringstream out;
    out << "finding: " << kind << '\n'
        << "seed: " << seed << '\n'
        << "params: n=" << config.params.n << " m=" << config.params.m
        << " deg=" << config.params.max_degree << '\n'
        << "ideal: " << format_ideal(report.ideal) << '\n'
        << "depth: " << report.base_depth << '\n';
    if (report.base_sdepth) out << "sdepth: " << *report.base_sdepth << '\n';
    for (const ConjectureScanEntry& e : report.per_variable) {
        out << "  " << format_variable(e.var) << ": depth_added=" << e.depth_added;
        if (e.sdepth_added) out << " sdepth_added=" << *e.sdepth_added;
        out << (e.qualifies ? " qualifies" : " fails") << '\n';
    }
    out << "verdict: no witness\n";
    return out.str();
}

// An instance where the depth witness exists but no admissible order shows
// the order-combinatorial witness: worth keeping for later study.
std::string note_body(std::uint64_t seed, const MonomialIdeal& I, int depth_witness,
                      int orders_checked) {
    std::ostringstream out;
    out << "finding: combinatorial_witness_gap\n"
        << "seed: " << seed << '\n'
        << "ideal: " << format_ideal(I) << '\n'
        << "depth_witness: " << format_variable(depth_witness) << '\n'
        << "admissible_orders_without_combinatorial_witness: " << orders_checked << '\n';
    return out.str();
}

} // namespace

std::string write_finding(const std::string& dir, const std::string& stem,
                          const std::string& body) {
    std::filesystem::create_directories(dir);
    const std::string path = (std::filesystem::path(dir) / (stem + ".txt")).string();
    std::ofstream out(path);
    out << body;
    return path;
}

SweepSummary run_sweep(const SweepConfig& config) {
    SweepSummary s;
    for (int idx = 0; idx < config.count; ++idx) {
        const std::uint64_t seed = config.seed + static_cast<std::uint64_t>(idx);
        const auto [I, order] = random_linear_quotient_ideal(config.params, seed);
        const int n = I.vars();
        ++s.instances;

        if (!check_admissible_order(order))
            s.violations.push_back(describe(idx, seed, I, "stored admissible order failed re-verification"));

        const int depth_formula = depth_via_linear_quotients(order);
        const int depth = depth_oracle(I, config.limits);
        ++s.depth_agreement_checks;
        if (depth_formula != depth)
            s.violations.push_back(describe(idx, seed, I,
                                            "depth formula " + std::to_string(depth_formula) +
                                                " != oracle " + std::to_string(depth)));

        const StanleyDecomposition gen_dec = linear_quotient_decomposition(order);
        ++s.generator_decomposition_checks;
        if (!verify_decomposition(gen_dec))
            s.violations.push_back(describe(idx, seed, I, "generator decomposition failed verification"));
        if (sdepth_of_decomposition(gen_dec) != depth + 1)
            s.violations.push_back(describe(idx, seed, I, "generator decomposition sdepth != depth + 1"));

        ++s.collapse_checks;
        const auto collapse = find_principal_collapse(order, config.limits);
        if (!collapse || !check_collapse_witness(I, *collapse))
            s.violations.push_back(describe(idx, seed, I, "principal collapse witness missing or wrong"));

        const PipelineResult pipeline = run_iterative_pipeline(order);
        if (pipeline.completed()) {
            ++s.pipelines_completed;
            for (size_t j = 0; j < pipeline.steps.size(); ++j) {
                const PipelineStep& step = pipeline.steps[j];
                if (!verify_decomposition(step.decomposition)) {
                    s.violations.push_back(describe(idx, seed, I, "pipeline step failed verification"));
                    break;
                }
                if (j > 0) {
                    ++s.pipeline_steps_checked;
                    const int nj = order.colon_count(static_cast<int>(j));
                    const int bound = std::min(pipeline.steps[j - 1].sdepth, n - nj - 1);
                    if (step.sdepth < bound || step.sdepth < step.depth) {
                        s.violations.push_back(describe(idx, seed, I, "pipeline step broke the sdepth bound"));
                        break;
                    }
                }
            }
        } else {
            ++s.pipelines_without_slot;
            s.notables.push_back(describe(idx, seed, I,
                                          "pipeline found no slot at step " +
                                              std::to_string(*pipeline.failed_step + 1)));
        }

        ++s.exact_sequence_pairs;
        const ExactSequenceReport seq = exact_sequence_checks(I, idx % n, config.limits);
        if (!seq.all_hold())
            s.violations.push_back(describe(idx, seed, I,
                                            "exact-sequence inequalities failed at " +
                                                format_variable(seq.var)));

        ++s.jahan_checks;
        if (sdepth_exact(I, TargetKind::Ideal, config.limits) < depth + 1)
            s.violations.push_back(describe(idx, seed, I, "sdepth(I) < depth(I)"));

        if (depth == n - 2) {
            ++s.depth_nminus2_checks;
            if (!verify_depth_nminus2(I, config.limits).holds())
                s.violations.push_back(describe(idx, seed, I, "sdepth(S/I) != n-2 despite depth n-2"));
        }

        if (config.check_conjectures) {
            ++s.conjecture_checks;
            const auto weak = conjecture_witness(I, config.limits);
            if (!weak) {
                s.notables.push_back(describe(idx, seed, I, "NO weak conjecture witness"));
                if (!config.findings_dir.empty())
                    write_finding(config.findings_dir,
                                  "conjecture_counterexample_seed" + std::to_string(seed),
                                  finding_body("conjecture_counterexample", seed, config,
                                               conjecture_scan(I, false, config.limits)));
            }

            ++s.strong_conjecture_checks;
            const auto strong = strong_conjecture_witness(I, config.limits);
            if (!strong) {
                s.notables.push_back(describe(idx, seed, I, "NO strong conjecture witness"));
                if (!config.findings_dir.empty())
                    write_finding(config.findings_dir,
                                  "strong_conjecture_counterexample_seed" + std::to_string(seed),
                                  finding_body("strong_conjecture_counterexample", seed, config,
                                               conjecture_scan(I, true, config.limits)));
            }

            const auto comb = combinatorial_witness(order);
            if (comb) {
                const int i = *comb;
                const int depth_added =
                    contains(I, Monomial::variable(n, i))
                        ? depth
                        : depth_oracle(add(I, Monomial::variable(n, i)).ideal(), config.limits);
                if (depth_added < depth)
                    s.violations.push_back(describe(idx, seed, I,
                                                    "combinatorial witness is not a depth witness"));
            } else if (weak && I.generator_count() <= 6) {
                bool any_order_has_witness = false;
                for (const AdmissibleOrder& alt : all_admissible_orders(I, config.limits))
                    if (combinatorial_witness(alt)) {
                        any_order_has_witness = true;
                        break;
                    }
                if (!any_order_has_witness) {
                    s.notables.push_back(describe(idx, seed, I,
                                                  "depth witness exists but no order shows it combinatorially"));
                    if (!config.findings_dir.empty())
                        write_finding(config.findings_dir,
                                      "combinatorial_gap_seed" + std::to_string(seed),
                                      note_body(seed, I, *weak, 1));
                }
            }
        }
    }
    return s;
}

std::string format_summary(const SweepConfig& config, const SweepSummary& s) {
    std::ostringstream out;
    out << "sweep: n=" << config.params.n << " m=" << config.params.m
        << " deg=" << config.params.max_degree << " count=" << config.count
        << " seed=" << config.seed << '\n'
        << "instances: " << s.instances << '\n'
        << "depth_agreement_checks: " << s.depth_agreement_checks << '\n'
        << "generator_decomposition_checks: " << s.generator_decomposition_checks << '\n'
        << "collapse_checks: " << s.collapse_checks << '\n'
        << "pipelines_completed: " << s.pipelines_completed << '\n'
        << "pipelines_without_slot: " << s.pipelines_without_slot << '\n'
        << "pipeline_steps_checked: " << s.pipeline_steps_checked << '\n'
        << "exact_sequence_pairs: " << s.exact_sequence_pairs << '\n'
        << "jahan_checks: " << s.jahan_checks << '\n'
        << "depth_nminus2_checks: " << s.depth_nminus2_checks << '\n'
        << "conjecture_checks: " << s.conjecture_checks << '\n'
        << "strong_conjecture_checks: " << s.strong_conjecture_checks << '\n'
        << "violations: " << s.violations.size() << '\n';
    for (const std::string& v : s.violations) out << "  VIOLATION " << v << '\n';
    out << "notables: " << s.notables.size() << '\n';
    for (const std::string& m : s.notables) out << "  NOTABLE " << m << '\n';
    out << "status: " << (s.ok() ? "OK" : "VIOLATION") << '\n';
    return out.str();
}

int box_soundness_mismatches(int count, std::uint64_t seed) {
    int mismatches = 0;
    for (int idx = 0; idx < count; ++idx) {
        const std::uint64_t instance_seed = seed + static_cast<std::uint64_t>(idx);
        RandomIdealParams params;
        params.n = 2 + idx % 3;
        params.m = 1 + idx % 3;
        params.max_degree = 3;
        const auto [I, order] = random_linear_quotient_ideal(params, instance_seed);

        StanleyDecomposition d = linear_quotient_decomposition(order);
        if (idx % 4 < 2) {
            // quotient-side sample via the partition machinery
            const CharacteristicPoset poset = characteristic_poset(I, TargetKind::Quotient);
            const int t = sdepth_exact(I, TargetKind::Quotient);
            d = partition_to_decomposition(*find_interval_partition(poset, t));
        }

        std::mt19937_64 rng(instance_seed ^ 0x9e3779b97f4a7c15ull);
        if (idx % 2 == 1 && !d.pieces.empty()) {
            const size_t which = rng() % d.pieces.size();
            StanleyPiece& p = d.pieces[which];
            switch (rng() % 3) {
            case 0:
                if (d.pieces.size() > 1) {
                    d.pieces.erase(d.pieces.begin() + static_cast<long>(which));
                    break;
                }
                [[fallthrough]];
            case 1: {
                const int var = static_cast<int>(rng() % static_cast<std::uint64_t>(I.vars()));
                Exponents e = p.v.exponents();
                ++e[static_cast<size_t>(var)];
                p.v = Monomial(std::move(e));
                break;
            }
            default:
                if (!p.z.empty()) {
                    p.z.erase(p.z.begin() + static_cast<long>(rng() % p.z.size()));
                } else {
                    p.z.push_back(static_cast<int>(rng() % static_cast<std::uint64_t>(I.vars())));
                }
                break;
            }
        }

        Exponents enlarged = verification_box(d);
        for (int& b : enlarged) ++b;
        if (verify_decomposition(d) != verify_decomposition_on_box(d, enlarged)) ++mismatches;
    }
    return mismatches;
}

} // namespace sdepth
