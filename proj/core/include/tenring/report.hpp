#pragma once

#include "tenring/definition.hpp"

namespace tenring {

/// Exit-code contract: 0 = pass / verdict holds, 1 = failure or
/// disagreement or a "no" on a membership query, 2 = inconclusive or error.
struct TaskResult {
    std::string name;
    std::string verdict;  // "pass" | "fail" | "inconclusive" | "error"
    int exit_code = 0;
    std::string witness;
    nlohmann::json data = nlohmann::json::object();
    double millis = 0.0;
};

struct Report {
    WorkbenchConfig config;
    std::vector<TaskResult> tasks;

    /// Structured form; timings are included only when the config asks for
    /// them, so default reports are byte-identical across runs.
    nlohmann::json to_json() const;
    int exit_code() const;
};

/// Run one task ("condition-t", "pgf <module>", "gf <module>",
/// "gp <module>", "phi <pair>", "verify theorem-a", "verify theorem-b",
/// "verify lemma-1.6", "verify cor-1.7", "verify section-4") against a
/// built definition. Never throws: errors become exit-code-2 results.
TaskResult run_task(const BuiltDefinition& def, const std::string& task,
                    const WorkbenchConfig& cfg);

/// Deterministic human-readable rendering of a structured report.
std::string render_report(const nlohmann::json& structured);

}  // namespace tenring
