#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "sdepth/betti.hpp"
#include "sdepth/io.hpp"
#include "sdepth/report.hpp"
#include "sdepth/sweep.hpp"

namespace {

using nlohmann::json;
using namespace sdepth;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;
constexpr int kExitResource = 3;

struct Options {
    std::string ideal_text;
    std::string file;
    std::string target = "quotient";
    std::string findings_dir;
    bool json_output = false;
    bool skip_sdepth = false;
    bool strong = false;
    std::uint64_t seed = 0;
    std::uint64_t max_states = Limits{}.max_partition_nodes;

    // sweep parameters
    int sweep_n = 4;
    int sweep_m = 4;
    int sweep_deg = 3;
    int sweep_count = 100;
    bool no_conjectures = false;
};

Limits make_limits(const Options& opt) {
    Limits limits;
    limits.max_partition_nodes = opt.max_states;
    return limits;
}

TargetKind target_kind(const Options& opt) {
    if (opt.target == "ideal") return TargetKind::Ideal;
    if (opt.target == "quotient") return TargetKind::Quotient;
    throw CLI::ValidationError("--target must be 'ideal' or 'quotient'");
}

MonomialIdeal input_ideal(const Options& opt) {
    std::string text = opt.ideal_text;
    if (!opt.file.empty()) {
        std::ifstream in(opt.file);
        if (!in) throw parse_error("cannot open file " + opt.file, 0);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    return parse_ideal(text);
}

void add_ideal_arg(CLI::App* cmd, Options& opt) {
    cmd->add_option("ideal", opt.ideal_text, "ideal, e.g. \"n=4; x1^2, x1*x2^2\"");
    cmd->add_option("--file", opt.file, "read the ideal from a file instead");
}

void emit(const Options& opt, const json& j, const std::string& text) {
    if (opt.json_output)
        std::cout << j.dump(2) << '\n';
    else
        std::cout << text;
}

int cmd_analyze(const Options& opt) {
    AnalysisOptions a;
    a.target = target_kind(opt);
    a.skip_sdepth = opt.skip_sdepth;
    a.seed = opt.seed;
    a.limits = make_limits(opt);
    const AnalysisReport report = analyze(input_ideal(opt), a);
    emit(opt, render_json(report), render_text(report));
    return kExitOk;
}

int cmd_sdepth(const Options& opt) {
    const MonomialIdeal I = input_ideal(opt);
    const TargetKind kind = target_kind(opt);
    const int value = sdepth_exact(I, kind, make_limits(opt));
    json j{{"ideal", format_generators(I)}, {"n", I.vars()}, {"target", opt.target},
           {"sdepth", value}};
    std::ostringstream text;
    text << "sdepth(" << (kind == TargetKind::Ideal ? "I" : "S/I") << "): " << value << '\n';
    emit(opt, j, text.str());
    return kExitOk;
}

int cmd_depth(const Options& opt) {
    const MonomialIdeal I = input_ideal(opt);
    const Limits limits = make_limits(opt);
    const BettiTable betti = betti_numbers(I, limits);
    const auto order = find_admissible_order(I, limits);
    json j{{"ideal", format_generators(I)},
           {"n", I.vars()},
           {"pd", betti.pd_module()},
           {"depth_oracle", betti.depth_module()}};
    std::ostringstream text;
    text << "depth_oracle: " << betti.depth_module() << '\n';
    if (order) {
        j["depth_formula"] = depth_via_linear_quotients(*order);
        text << "depth_formula: " << depth_via_linear_quotients(*order) << '\n';
    }
    emit(opt, j, text.str());
    return kExitOk;
}

int cmd_lq(const Options& opt) {
    const MonomialIdeal I = input_ideal(opt);
    const auto order = find_admissible_order(I, make_limits(opt));
    json j{{"ideal", format_generators(I)}, {"linear_quotients", order.has_value()}};
    std::ostringstream text;
    if (!order) {
        text << "linear_quotients: no\n";
    } else {
        text << "linear_quotients: yes\n";
        std::ostringstream line;
        for (int k = 0; k < order->size(); ++k) {
            if (k) line << ", ";
            line << format_monomial(order->order[static_cast<size_t>(k)]);
        }
        j["admissible_order"] = line.str();
        text << "admissible_order: " << line.str() << '\n';
        for (int k = 1; k < order->size(); ++k)
            text << "colon_variables[" << (k + 1)
                 << "]: " << format_variable_set(order->colon_vars[static_cast<size_t>(k)]) << '\n';
    }
    emit(opt, j, text.str());
    return kExitOk;
}

int cmd_decompose(const Options& opt) {
    const MonomialIdeal I = input_ideal(opt);
    const TargetKind kind = target_kind(opt);
    const Limits limits = make_limits(opt);

    StanleyDecomposition d = [&] {
        if (kind == TargetKind::Ideal) {
            if (const auto order = find_admissible_order(I, limits))
                return linear_quotient_decomposition(*order);
        }
        const CharacteristicPoset poset = characteristic_poset(I, kind);
        const int t = sdepth_exact(I, kind, limits);
        return partition_to_decomposition(*find_interval_partition(poset, t, limits));
    }();

    const bool ok = verify_decomposition(d);
    json j{{"ideal", format_generators(I)},
           {"target", opt.target},
           {"sdepth", sdepth_of_decomposition(d)},
           {"verified", ok}};
    json pieces = json::array();
    for (const StanleyPiece& p : d.pieces)
        pieces.push_back(format_monomial(p.v) + " | " + format_variable_set(p.z));
    j["pieces"] = pieces;
    std::ostringstream text;
    text << format_decomposition(d);
    text << "sdepth: " << sdepth_of_decomposition(d) << '\n';
    text << "verified: " << (ok ? "yes" : "no") << '\n';
    emit(opt, j, text.str());
    return ok ? kExitOk : kExitViolation;
}

int cmd_betti(const Options& opt) {
    const MonomialIdeal I = input_ideal(opt);
    const BettiTable table = betti_numbers(I, make_limits(opt));
    json j{{"ideal", format_generators(I)},
           {"n", I.vars()},
           {"pd_ideal", table.pd_ideal()},
           {"pd_module", table.pd_module()},
           {"depth", table.depth_module()}};
    json rows = json::array();
    std::ostringstream text;
    for (const auto& [key, rank] : table.ideal_ranks) {
        const std::string degree = format_monomial(Monomial(key.second));
        text << "b[" << key.first << ", " << degree << "]: " << rank << '\n';
        rows.push_back({{"i", key.first}, {"multidegree", degree}, {"rank", rank}});
    }
    j["ranks"] = rows;
    for (int i = 0; i <= table.pd_ideal(); ++i)
        text << "b_" << i << "(I): " << table.total_ideal(i) << '\n';
    text << "pd_ideal: " << table.pd_ideal() << '\n';
    text << "pd_module: " << table.pd_module() << '\n';
    text << "depth: " << table.depth_module() << '\n';
    emit(opt, j, text.str());
    return kExitOk;
}

int cmd_collapse(const Options& opt) {
    const MonomialIdeal I = input_ideal(opt);
    const Limits limits = make_limits(opt);
    const auto order = find_admissible_order(I, limits);
    if (!order) {
        std::cerr << "collapse requires linear quotients\n";
        return kExitUsage;
    }
    const auto witness = find_principal_collapse(*order, limits);
    if (!witness || !check_collapse_witness(I, *witness)) {
        std::cout << "VIOLATION: no principal collapse witness found\n";
        return kExitViolation;
    }
    json j{{"ideal", format_generators(I)},
           {"tau", format_variable_set(witness->tau)},
           {"u", format_monomial(witness->u)}};
    std::ostringstream text;
    text << "tau: {" << format_variable_set(witness->tau) << "}\n";
    text << "u: " << format_monomial(witness->u) << '\n';
    emit(opt, j, text.str());
    return kExitOk;
}

int cmd_conjecture(const Options& opt) {
    const MonomialIdeal I = input_ideal(opt);
    const ConjectureReport report = conjecture_scan(I, opt.strong, make_limits(opt));
    json j{{"ideal", format_generators(I)},
           {"strong", opt.strong},
           {"depth", report.base_depth}};
    if (report.base_sdepth) j["sdepth"] = *report.base_sdepth;
    std::ostringstream text;
    text << "depth: " << report.base_depth << '\n';
    if (report.base_sdepth) text << "sdepth: " << *report.base_sdepth << '\n';
    json scan = json::array();
    for (const ConjectureScanEntry& e : report.per_variable) {
        json row{{"var", format_variable(e.var)},
                 {"depth_added", e.depth_added},
                 {"qualifies", e.qualifies}};
        if (e.sdepth_added) row["sdepth_added"] = *e.sdepth_added;
        scan.push_back(row);
        text << "  " << format_variable(e.var) << ": depth_added=" << e.depth_added;
        if (e.sdepth_added) text << " sdepth_added=" << *e.sdepth_added;
        text << (e.qualifies ? " qualifies" : " fails") << '\n';
    }
    j["scan"] = scan;
    j["witness"] = report.witness ? json(format_variable(*report.witness)) : json(nullptr);
    text << "witness: "
         << (report.witness ? format_variable(*report.witness) : std::string("NONE (notable)"))
         << '\n';
    emit(opt, j, text.str());
    if (!report.witness && !opt.findings_dir.empty()) {
        SweepConfig config;  // carries defaults for the header only
        config.params.n = I.vars();
        const std::string stem =
            std::string(opt.strong ? "strong_" : "") + "conjecture_counterexample_cli";
        write_finding(opt.findings_dir, stem,
                      std::string("source: cli\n") +
                          (opt.strong ? "finding: strong_conjecture_counterexample\n"
                                      : "finding: conjecture_counterexample\n") +
                          "ideal: " + format_ideal(I) + "\n");
    }
    return kExitOk;  // a missing witness is notable, not an error
}

int cmd_pipeline(const Options& opt) {
    const MonomialIdeal I = input_ideal(opt);
    const Limits limits = make_limits(opt);
    const auto order = find_admissible_order(I, limits);
    if (!order) {
        std::cerr << "pipeline requires linear quotients\n";
        return kExitUsage;
    }
    const PipelineResult result = run_iterative_pipeline(*order);
    json steps = json::array();
    std::ostringstream text;
    for (size_t k = 0; k < result.steps.size(); ++k) {
        const PipelineStep& step = result.steps[k];
        text << "step " << (k + 1) << ": I_" << (k + 1) << " = ("
             << format_generators(step.prefix_ideal) << "), sdepth=" << step.sdepth
             << ", depth=" << step.depth;
        if (step.slot >= 0) text << ", slot=" << step.slot;
        text << '\n';
        steps.push_back({{"prefix", format_generators(step.prefix_ideal)},
                         {"slot", step.slot},
                         {"sdepth", step.sdepth},
                         {"depth", step.depth}});
    }
    json j{{"ideal", format_generators(I)}, {"completed", result.completed()}, {"steps", steps}};
    if (result.completed()) {
        text << "final decomposition:\n" << format_decomposition(result.steps.back().decomposition);
    } else {
        j["failed_step"] = *result.failed_step + 1;
        text << "no slot at step " << (*result.failed_step + 1) << '\n';
    }
    emit(opt, j, text.str());
    return kExitOk;
}

int cmd_sweep(const Options& opt) {
    SweepConfig config;
    config.params.n = opt.sweep_n;
    config.params.m = opt.sweep_m;
    config.params.max_degree = opt.sweep_deg;
    config.count = opt.sweep_count;
    config.seed = opt.seed;
    config.findings_dir = opt.findings_dir;
    config.check_conjectures = !opt.no_conjectures;
    config.limits = make_limits(opt);
    const SweepSummary summary = run_sweep(config);
    if (opt.json_output) {
        json j{{"instances", summary.instances},
               {"violations", summary.violations},
               {"notables", summary.notables},
               {"status", summary.ok() ? "OK" : "VIOLATION"}};
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << format_summary(config, summary);
    }
    return summary.ok() ? kExitOk : kExitViolation;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stanley depth toolkit for monomial ideals with linear quotients"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* analyze_cmd = app.add_subcommand("analyze", "full report for one ideal");
    add_ideal_arg(analyze_cmd, opt);
    analyze_cmd->add_option("--target", opt.target, "sdepth target: quotient|ideal");
    analyze_cmd->add_flag("--skip-sdepth", opt.skip_sdepth, "omit the exponential searches");

    CLI::App* sdepth_cmd = app.add_subcommand("sdepth", "exact Stanley depth");
    add_ideal_arg(sdepth_cmd, opt);
    sdepth_cmd->add_option("--target", opt.target, "quotient|ideal");

    CLI::App* depth_cmd = app.add_subcommand("depth", "depth via Betti oracle (and formula)");
    add_ideal_arg(depth_cmd, opt);

    CLI::App* lq_cmd = app.add_subcommand("lq", "find an admissible order");
    add_ideal_arg(lq_cmd, opt);

    CLI::App* decompose_cmd = app.add_subcommand("decompose", "print a Stanley decomposition");
    add_ideal_arg(decompose_cmd, opt);
    decompose_cmd->add_option("--target", opt.target, "quotient|ideal");

    CLI::App* betti_cmd = app.add_subcommand("betti", "multigraded Betti table");
    add_ideal_arg(betti_cmd, opt);

    CLI::App* collapse_cmd = app.add_subcommand("collapse", "principal collapse witness");
    add_ideal_arg(collapse_cmd, opt);

    CLI::App* conjecture_cmd = app.add_subcommand("conjecture", "variable-adjunction witness scan");
    add_ideal_arg(conjecture_cmd, opt);
    conjecture_cmd->add_flag("--strong", opt.strong, "also require the sdepth condition");
    conjecture_cmd->add_option("--findings-dir", opt.findings_dir,
                               "persist counterexamples here");

    CLI::App* pipeline_cmd = app.add_subcommand("pipeline", "incremental decomposition pipeline");
    add_ideal_arg(pipeline_cmd, opt);

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "randomized invariant battery");
    sweep_cmd->add_option("--n", opt.sweep_n, "ambient variables");
    sweep_cmd->add_option("--m", opt.sweep_m, "generators per instance");
    sweep_cmd->add_option("--deg", opt.sweep_deg, "max generator degree");
    sweep_cmd->add_option("--count", opt.sweep_count, "number of instances");
    sweep_cmd->add_option("--findings-dir", opt.findings_dir, "persist counterexamples here");
    sweep_cmd->add_flag("--no-conjectures", opt.no_conjectures, "skip the conjecture scans");

    for (CLI::App* cmd : {analyze_cmd, sdepth_cmd, depth_cmd, lq_cmd, decompose_cmd, betti_cmd,
                          collapse_cmd, conjecture_cmd, pipeline_cmd, sweep_cmd}) {
        cmd->add_flag("--json", opt.json_output, "emit JSON with sorted keys");
        cmd->add_option("--seed", opt.seed, "seed recorded in reports / sweep seed");
        cmd->add_option("--max-states", opt.max_states, "partition search node budget");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (analyze_cmd->parsed()) return cmd_analyze(opt);
        if (sdepth_cmd->parsed()) return cmd_sdepth(opt);
        if (depth_cmd->parsed()) return cmd_depth(opt);
        if (lq_cmd->parsed()) return cmd_lq(opt);
        if (decompose_cmd->parsed()) return cmd_decompose(opt);
        if (betti_cmd->parsed()) return cmd_betti(opt);
        if (collapse_cmd->parsed()) return cmd_collapse(opt);
        if (conjecture_cmd->parsed()) return cmd_conjecture(opt);
        if (pipeline_cmd->parsed()) return cmd_pipeline(opt);
        if (sweep_cmd->parsed()) return cmd_sweep(opt);
    } catch (const parse_error& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const resource_limit_error& e) {
        std::cerr << "resource cap: " << e.what() << '\n';
        return kExitResource;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
