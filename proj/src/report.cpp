#include "sdepth/report.hpp"

#include <sstream>

#include "sdepth/betti.hpp"
#include "sdepth/io.hpp"

namespace sdepth {

namespace {

const char* target_name(TargetKind kind) {
    return kind == TargetKind::Ideal ? "ideal" : "quotient";
}

std::string order_line(const AdmissibleOrder& o) {
    std::ostringstream out;
    for (int k = 0; k < o.size(); ++k) {
        if (k) out << ", ";
        out << format_monomial(o.order[static_cast<size_t>(k)]);
    }
    return out.str();
}

std::string colon_line(const AdmissibleOrder& o) {
    std::ostringstream out;
    for (int k = 1; k < o.size(); ++k) {
        if (k > 1) out << " | ";
        out << "step " << (k + 1) << ": " << format_variable_set(o.colon_vars[static_cast<size_t>(k)]);
    }
    return out.str();
}

} // namespace

AnalysisReport analyze(const MonomialIdeal& I, const AnalysisOptions& options) {
    AnalysisReport report{SDEPTH_VERSION, options.seed, I};
    report.target = options.target;

    const BettiTable betti = betti_numbers(I, options.limits);
    report.depth_oracle_value = betti.depth_module();
    report.pd_value = betti.pd_module();

    report.order = find_admissible_order(I, options.limits);
    if (report.order) {
        report.depth_formula_value = depth_via_linear_quotients(*report.order);
        report.generator_decomposition_sdepth =
            sdepth_of_decomposition(linear_quotient_decomposition(*report.order));
        report.pipeline = run_iterative_pipeline(*report.order);
        report.collapse = find_principal_collapse(*report.order, options.limits);
    }

    if (options.skip_sdepth) {
        report.omissions.push_back("sdepth_exact (--skip-sdepth)");
        report.omissions.push_back("strong_conjecture_witness (--skip-sdepth)");
    } else {
        try {
            report.sdepth_value = sdepth_exact(I, options.target, options.limits);
        } catch (const resource_limit_error&) {
            report.omissions.push_back("sdepth_exact (search budget exceeded)");
        }
    }

    report.conjectures_scanned = true;
    report.conjecture_witness_var = conjecture_witness(I, options.limits);
    if (!options.skip_sdepth) {
        try {
            report.strong_conjecture_witness_var = strong_conjecture_witness(I, options.limits);
            report.strong_scanned = true;
        } catch (const resource_limit_error&) {
            report.omissions.push_back("strong_conjecture_witness (search budget exceeded)");
        }
    }
    return report;
}

std::string render_text(const AnalysisReport& r) {
    std::ostringstream out;
    out << "tool: sdepth " << r.tool_version << '\n';
    out << "seed: " << r.seed << '\n';
    out << "ideal: " << format_generators(r.ideal) << '\n';
    out << "n: " << r.ideal.vars() << '\n';
    out << "m: " << r.ideal.generator_count() << '\n';
    out << "linear_quotients: " << (r.order ? "yes" : "no") << '\n';
    if (r.order) {
        out << "admissible_order: " << order_line(*r.order) << '\n';
        if (r.order->size() > 1) out << "colon_variables: " << colon_line(*r.order) << '\n';
    }
    out << "pd: " << r.pd_value << '\n';
    out << "depth_oracle: " << r.depth_oracle_value << '\n';
    if (r.depth_formula_value) out << "depth_formula: " << *r.depth_formula_value << '\n';
    out << "sdepth_target: " << target_name(r.target) << '\n';
    if (r.sdepth_value) out << "sdepth_exact: " << *r.sdepth_value << '\n';
    if (r.generator_decomposition_sdepth)
        out << "generator_decomposition_sdepth: " << *r.generator_decomposition_sdepth << '\n';
    if (r.pipeline) {
        if (r.pipeline->completed())
            out << "pipeline: completed, steps=" << r.pipeline->steps.size()
                << ", final_sdepth=" << r.pipeline->steps.back().sdepth << '\n';
        else
            out << "pipeline: no slot at step " << (*r.pipeline->failed_step + 1) << '\n';
    }
    if (r.collapse)
        out << "collapse_witness: tau={" << format_variable_set(r.collapse->tau)
            << "}, u=" << format_monomial(r.collapse->u) << '\n';
    if (r.conjectures_scanned)
        out << "conjecture_witness: "
            << (r.conjecture_witness_var ? format_variable(*r.conjecture_witness_var)
                                         : std::string("NONE (notable)"))
            << '\n';
    if (r.strong_scanned)
        out << "strong_conjecture_witness: "
            << (r.strong_conjecture_witness_var
                    ? format_variable(*r.strong_conjecture_witness_var)
                    : std::string("NONE (notable)"))
            << '\n';
    for (const std::string& o : r.omissions) out << "omitted: " << o << '\n';
    return out.str();
}

nlohmann::json render_json(const AnalysisReport& r) {
    nlohmann::json j;
    j["tool"] = std::string("sdepth ") + r.tool_version;
    j["seed"] = r.seed;
    j["ideal"] = format_generators(r.ideal);
    j["n"] = r.ideal.vars();
    j["m"] = r.ideal.generator_count();
    j["linear_quotients"] = r.order.has_value();
    if (r.order) {
        j["admissible_order"] = order_line(*r.order);
        nlohmann::json colons = nlohmann::json::array();
        for (int k = 1; k < r.order->size(); ++k)
            colons.push_back(format_variable_set(r.order->colon_vars[static_cast<size_t>(k)]));
        j["colon_variables"] = colons;
    }
    j["pd"] = r.pd_value;
    j["depth_oracle"] = r.depth_oracle_value;
    if (r.depth_formula_value) j["depth_formula"] = *r.depth_formula_value;
    j["sdepth_target"] = target_name(r.target);
    if (r.sdepth_value) j["sdepth_exact"] = *r.sdepth_value;
    if (r.generator_decomposition_sdepth)
        j["generator_decomposition_sdepth"] = *r.generator_decomposition_sdepth;
    if (r.pipeline) {
        j["pipeline_completed"] = r.pipeline->completed();
        if (r.pipeline->completed())
            j["pipeline_final_sdepth"] = r.pipeline->steps.back().sdepth;
        else
            j["pipeline_failed_step"] = *r.pipeline->failed_step + 1;
    }
    if (r.collapse) {
        j["collapse_tau"] = format_variable_set(r.collapse->tau);
        j["collapse_u"] = format_monomial(r.collapse->u);
    }
    if (r.conjectures_scanned)
        j["conjecture_witness"] =
            r.conjecture_witness_var ? nlohmann::json(format_variable(*r.conjecture_witness_var))
                                     : nlohmann::json(nullptr);
    if (r.strong_scanned)
        j["strong_conjecture_witness"] =
            r.strong_conjecture_witness_var
                ? nlohmann::json(format_variable(*r.strong_conjecture_witness_var))
                : nlohmann::json(nullptr);
    j["omissions"] = r.omissions;
    return j;
}

} // namespace sdepth
