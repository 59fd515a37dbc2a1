#ifndef SDEPTH_REPORT_HPP
#define SDEPTH_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sdepth/common.hpp"
#include "sdepth/linear_quotients.hpp"
#include "sdepth/theorems.hpp"

namespace sdepth {

struct AnalysisOptions {
    TargetKind target = TargetKind::Quotient;
    bool skip_sdepth = false;  // omit the exponential searches
    std::uint64_t seed = 0;    // recorded only; analysis itself is deterministic
    Limits limits;
};

/// Everything the `analyze` command reports. Every value is recomputable
/// from the input ideal; omitted fields are listed under `omissions`.
struct AnalysisReport {
    std::string tool_version;
    std::uint64_t seed = 0;
    MonomialIdeal ideal;
    int depth_oracle_value = 0;
    int pd_value = 0;
    std::optional<AdmissibleOrder> order;
    std::optional<int> depth_formula_value;
    TargetKind target = TargetKind::Quotient;
    std::optional<int> sdepth_value;
    std::optional<int> generator_decomposition_sdepth;  // sdepth of the order decomposition
    std::optional<PipelineResult> pipeline;
    std::optional<CollapseWitness> collapse;
    std::optional<int> conjecture_witness_var;
    std::optional<int> strong_conjecture_witness_var;
    bool conjectures_scanned = false;
    bool strong_scanned = false;
    std::vector<std::string> omissions;
};

AnalysisReport analyze(const MonomialIdeal& I, const AnalysisOptions& options);

std::string render_text(const AnalysisReport& report);
nlohmann::json render_json(const AnalysisReport& report);

} // namespace sdepth

#endif
