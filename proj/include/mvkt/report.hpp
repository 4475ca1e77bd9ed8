#pragma once

#include <string>
#include <vector>

#include "mvkt/scenario.hpp"
#include "mvkt/specseq.hpp"
#include "mvkt/twist.hpp"

namespace mvkt {

/**
 * Complete outcome of one scenario run: the canonical scenario echo, the
 * twisting class, all three pages, both assembled K-theories and the
 * obstruction verdict. Reports serialize losslessly, so two reports are
 * equal exactly when their canonical JSON forms coincide.
 */
struct RunReport {
    Scenario scenario;  // effective scenario (cocycle cleared on baseline runs)
    bool baseline_only = false;
    CocycleClass cocycle_class;
    SpectralPage e1, e2, e3;
    AssembledKTheory assembled;
    AssembledKTheory baseline;
    Verdict verdict = Verdict::inconclusive;
    std::vector<std::string> reasons;
};

bool operator==(const RunReport& a, const RunReport& b);

/// resolve + run_pipeline + baseline comparison. baseline_only replaces the
/// cocycle by the trivial one before running.
RunReport run_scenario(const Scenario& sc, bool baseline_only = false);

Json report_to_json(const RunReport& report);

/// Inverse of report_to_json; structural problems raise SchemaError, group
/// or matrix inconsistencies surface as validation errors.
RunReport report_from_json(const Json& doc);

/// 2-space indented dump with a trailing newline (byte-stable).
std::string render_json(const RunReport& report);

/// Human-readable summary; page tables included when dump_pages is set.
std::string render_text(const RunReport& report, bool dump_pages);

}  // namespace mvkt
