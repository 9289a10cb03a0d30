// Run configuration: a flat JSON document, validated against every module
// invariant, canonically hashed for reproducible manifests.
//
// Rationals (b, alpha, q entries) are accepted as integers or "num/den"
// strings; "inf" is allowed where an infinite exponent makes sense.
#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "inls/exponents.hpp"

namespace inls {

struct RunConfig {
    ProblemParams params;
    double L = 256;
    int n = 4096;
    double dt = 1e-3;
    double t_final = 8;
    int sample_every = 10;
    double amplitude = 1;
    double sigma = 1;
    std::array<double, 3> center{0, 0, 0};
    std::array<double, 3> phase{0, 0, 0};
    std::vector<Rat> q_list;
    std::vector<double> checkpoints;
    int snapshot_every = 0;
    std::string output_dir = "run";

    // Guard thresholds (see solver.hpp); overridable per run.
    int boundary_cells = 8;
    double boundary_tol = 1e-4;
    double spectral_tail_tol = 1e-2;
    double overflow_factor = 1e6;

    // Canonical JSON echo: sorted keys, no whitespace, rationals as strings.
    nlohmann::json to_json() const;
    std::string canonical() const;
    std::string content_hash() const;  // fnv1a-64 over canonical()
};

// Parses and validates; throws ConfigError with the offending field named.
RunConfig load_config(const std::filesystem::path& path);
RunConfig config_from_json(const nlohmann::json& j);

struct RunManifest {
    nlohmann::json config_echo;
    std::string code_version;
    std::string started_utc;
    std::string finished_utc;
    std::string config_hash;
    std::string outcome;  // "ok", "guard:<Kind>", or "error:<message>"
    int exit_code = 0;

    nlohmann::json to_json() const;
};

std::uint64_t fnv1a64(std::string_view s);
std::string utc_now_iso();

extern const char* kCodeVersion;

}  // namespace inls
