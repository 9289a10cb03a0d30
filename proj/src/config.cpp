#include "inls/config.hpp"

#include <chrono>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>

namespace inls {

const char* kCodeVersion = "inls 0.1.0";

std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string utc_now_iso() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

namespace {

Rat parse_rat_field(const nlohmann::json& j, const std::string& key) {
    const auto& v = j.at(key);
    try {
        if (v.is_number_integer()) return Rat(v.get<long>());
        if (v.is_string()) return Rat::parse(v.get<std::string>());
    } catch (const RatError& e) {
        throw ConfigError("field '" + key + "': " + e.what());
    }
    throw ConfigError("field '" + key + "' must be an integer or a \"num/den\" string");
}

double get_number(const nlohmann::json& j, const std::string& key, double fallback,
                  bool* present = nullptr) {
    if (!j.contains(key)) {
        if (present) *present = false;
        return fallback;
    }
    if (present) *present = true;
    const auto& v = j.at(key);
    if (!v.is_number()) throw ConfigError("field '" + key + "' must be a number");
    return v.get<double>();
}

std::array<double, 3> get_vec(const nlohmann::json& j, const std::string& key, int d) {
    std::array<double, 3> out{0, 0, 0};
    if (!j.contains(key)) return out;
    const auto& v = j.at(key);
    if (!v.is_array() || static_cast<int>(v.size()) != d)
        throw ConfigError("field '" + key + "' must be an array of length d");
    for (int i = 0; i < d; ++i) out[i] = v[i].get<double>();
    return out;
}

nlohmann::json rat_json(const Rat& r) {
    if (r.is_integer()) return std::stol(r.str());
    return r.str();
}

}  // namespace

RunConfig config_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    RunConfig c;
    for (const auto& key : {"d", "b", "alpha", "L", "n", "dt", "t_final"})
        if (!j.contains(key)) throw ConfigError(std::string("missing required field '") + key + "'");

    c.params.d = j.at("d").get<int>();
    c.params.b = parse_rat_field(j, "b");
    c.params.alpha = parse_rat_field(j, "alpha");
    c.params.mu = j.contains("mu") ? j.at("mu").get<int>() : -1;
    c.params.validate();
    if (!(c.params.b > Rat(0))) throw ConfigError("simulation requires b > 0");
    if (c.params.d > 3) throw ConfigError("simulation grids support d <= 3");

    c.L = get_number(j, "L", c.L);
    if (j.at("n").is_number_integer())
        c.n = j.at("n").get<int>();
    else
        throw ConfigError("field 'n' must be an integer");
    c.dt = get_number(j, "dt", c.dt);
    c.t_final = get_number(j, "t_final", c.t_final);
    c.sample_every = static_cast<int>(get_number(j, "sample_every", 10));
    c.amplitude = get_number(j, "A", 1.0);
    c.sigma = get_number(j, "sigma", 1.0);
    c.center = get_vec(j, "center", c.params.d);
    c.phase = get_vec(j, "phase", c.params.d);
    c.snapshot_every = static_cast<int>(get_number(j, "snapshot_every", 0));
    c.boundary_cells = static_cast<int>(get_number(j, "boundary_cells", c.boundary_cells));
    c.boundary_tol = get_number(j, "boundary_tol", c.boundary_tol);
    c.spectral_tail_tol = get_number(j, "spectral_tail_tol", c.spectral_tail_tol);
    c.overflow_factor = get_number(j, "overflow_factor", c.overflow_factor);
    if (j.contains("output_dir")) c.output_dir = j.at("output_dir").get<std::string>();

    if (j.contains("q_list")) {
        for (const auto& v : j.at("q_list")) {
            if (v.is_number_integer())
                c.q_list.push_back(Rat(v.get<long>()));
            else if (v.is_string())
                c.q_list.push_back(Rat::parse(v.get<std::string>()));
            else
                throw ConfigError("q_list entries must be integers or \"num/den\"/\"inf\" strings");
        }
    } else {
        c.q_list = {Rat(2), Rat(4)};
        if (c.params.d == 1) c.q_list.push_back(Rat::inf());
    }
    if (j.contains("checkpoints"))
        for (const auto& v : j.at("checkpoints")) c.checkpoints.push_back(v.get<double>());

    // grid invariants
    if (c.n < 8 || (c.n & (c.n - 1)) != 0)
        throw ConfigError("n must be a power of two >= 8");
    if (!(c.L > 0)) throw ConfigError("L must be positive");
    if (!(c.dt > 0)) throw ConfigError("dt must be positive");
    if (!(c.t_final > 0)) throw ConfigError("t_final must be positive");
    if (c.sample_every < 1) throw ConfigError("sample_every must be >= 1");
    if (c.snapshot_every < 0) throw ConfigError("snapshot_every must be >= 0");
    if (c.boundary_cells < 1 || c.boundary_cells > c.n / 2)
        throw ConfigError("boundary_cells must be in [1, n/2]");
    if (!(c.sigma > 0)) throw ConfigError("sigma must be positive");

    // q_list must lie inside the decay-estimate window for this dimension
    for (const auto& q : c.q_list) {
        try {
            (void)decay_exponent(c.params, q);
        } catch (const QOutOfRange& e) {
            throw ConfigError("q_list entry " + q.str() + " out of range: " + e.what());
        }
    }
    for (double tc : c.checkpoints) {
        if (!(tc >= 0) || tc > c.t_final + 1e-12)
            throw ConfigError("checkpoints must lie in [0, t_final]");
        double steps = tc / c.dt;
        if (std::abs(steps - std::round(steps)) > 1e-6)
            throw ConfigError("checkpoints must be integer multiples of dt");
    }
    return c;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot open config file " + path.string());
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(f);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("JSON parse error: ") + e.what());
    }
    try {
        return config_from_json(j);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config field error: ") + e.what());
    }
}

nlohmann::json RunConfig::to_json() const {
    nlohmann::json j;
    j["d"] = params.d;
    j["b"] = rat_json(params.b);
    j["alpha"] = rat_json(params.alpha);
    j["mu"] = params.mu;
    j["L"] = L;
    j["n"] = n;
    j["dt"] = dt;
    j["t_final"] = t_final;
    j["sample_every"] = sample_every;
    j["A"] = amplitude;
    j["sigma"] = sigma;
    j["center"] = std::vector<double>(center.begin(), center.begin() + params.d);
    j["phase"] = std::vector<double>(phase.begin(), phase.begin() + params.d);
    nlohmann::json ql = nlohmann::json::array();
    for (const auto& q : q_list) ql.push_back(q.is_inf() ? nlohmann::json("inf") : rat_json(q));
    j["q_list"] = ql;
    j["checkpoints"] = checkpoints;
    j["snapshot_every"] = snapshot_every;
    j["output_dir"] = output_dir;
    j["boundary_cells"] = boundary_cells;
    j["boundary_tol"] = boundary_tol;
    j["spectral_tail_tol"] = spectral_tail_tol;
    j["overflow_factor"] = overflow_factor;
    return j;
}

std::string RunConfig::canonical() const {
    // nlohmann::json stores object keys sorted; dump() emits no whitespace.
    return to_json().dump();
}

std::string RunConfig::content_hash() const {
    char buf[24];
    std::snprintf(buf, sizeof buf, "%016" PRIx64, fnv1a64(canonical()));
    return buf;
}

nlohmann::json RunManifest::to_json() const {
    nlohmann::json j;
    j["config"] = config_echo;
    j["code_version"] = code_version;
    j["started_utc"] = started_utc;
    j["finished_utc"] = finished_utc;
    j["config_hash"] = config_hash;
    j["outcome"] = outcome;
    j["exit_code"] = exit_code;
    return j;
}

}  // namespace inls
