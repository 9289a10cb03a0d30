// Orchestration: execute a configured run, write its artifacts, evaluate
// report verdicts over a finished run directory, sweep config batches.
#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"

#include "inls/config.hpp"
#include "inls/exponents.hpp"
#include "inls/observables.hpp"

namespace inls {

struct RunOutcome {
    int exit_code = 0;  // 0 ok, 1 config error, 2 numerical guard
    std::string message;
    std::filesystem::path run_dir;
};

// Resolves config.output_dir against INLS_OUTPUT_ROOT (if set).
std::filesystem::path resolve_output_dir(const std::string& output_dir);

// Runs the evolution, writing series.csv, manifest.json, checkpoint fields
// and snapshots into the run directory.  Never throws for guard trips or
// config errors; the outcome carries the exit code.
RunOutcome run_simulate(const RunConfig& config);

enum class ReportKind { virial, pseudoconformal, decay, gdecay, scatter, strichartz };

std::optional<ReportKind> report_kind_from_string(const std::string& s);

struct ReportOptions {
    double t_min = 0;
    double t_max = 0;   // 0 = auto (kind-dependent default)
    Rat q = Rat::inf(); // decay: which norm; strichartz: space exponent
    Rat p = Rat(8);     // strichartz: time exponent
    double rel_tol = 1e-3;     // virial / pseudoconformal
    double slope_rel_tol = 0.15;  // decay, target != 0
    double slope_abs_tol = 0.02;  // decay, target == 0
    double gdecay_slack = 0.2;
    double ratio_bound = 0.5;  // scatter final/first
};

// Loads the run directory (manifest + CSV + stored fields) and evaluates
// one diagnostic; returns the verdict document.  Throws SchemaError when
// the directory lacks the pieces the kind requires.
nlohmann::json run_report(const std::filesystem::path& run_dir, ReportKind kind,
                          const ReportOptions& opt = {});

// Runs every *.json config under config_dir (up to `jobs` concurrently).
// Returns the max exit code across runs.
int run_sweep(const std::filesystem::path& config_dir, int jobs);

// JSON forms of the exponent-engine outputs (rationals as strings, inf as
// "inf").
nlohmann::json to_json(const ExponentPair& p);
nlohmann::json to_json(const FeasibilityReport& r);
nlohmann::json params_json(const ProblemParams& p);

}  // namespace inls
