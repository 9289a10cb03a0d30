#include "inls/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <thread>

#include "inls/scattering.hpp"
#include "inls/series_io.hpp"
#include "inls/solver.hpp"
#include "inls/weight.hpp"

namespace inls {

namespace fs = std::filesystem;

std::filesystem::path resolve_output_dir(const std::string& output_dir) {
    fs::path p(output_dir);
    const char* root = std::getenv("INLS_OUTPUT_ROOT");
    if (root && *root && p.is_relative()) return fs::path(root) / p;
    return p;
}

namespace {

std::string time_label(double t) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", t);
    return buf;
}

void write_json(const fs::path& p, const nlohmann::json& j) {
    std::ofstream f(p);
    f << j.dump(2) << "\n";
}

ProblemParams params_from_manifest(const nlohmann::json& man) {
    const auto& cf = man.at("config");
    ProblemParams p;
    p.d = cf.at("d").get<int>();
    auto rat_of = [](const nlohmann::json& v) {
        return v.is_string() ? Rat::parse(v.get<std::string>()) : Rat(v.get<long>());
    };
    p.b = rat_of(cf.at("b"));
    p.alpha = rat_of(cf.at("alpha"));
    p.mu = cf.at("mu").get<int>();
    return p;
}

}  // namespace

RunOutcome run_simulate(const RunConfig& config) {
    RunOutcome out;
    out.run_dir = resolve_output_dir(config.output_dir);

    RunManifest man;
    man.config_echo = config.to_json();
    man.code_version = kCodeVersion;
    man.config_hash = config.content_hash();
    man.started_utc = utc_now_iso();

    EvolveResult result;
    try {
        fs::create_directories(out.run_dir);
        auto grid = std::make_shared<const Grid>(config.params.d, config.L, config.n);
        auto weight = std::make_shared<const SingularWeight>(
            sample_weight(grid, config.params.b.to_double()));
        SolverState state;
        state.t = 0;
        state.params = config.params;
        state.weight = weight;
        state.dt = config.dt;
        state.field = gaussian_data(grid, config.amplitude, config.sigma, config.center,
                                    config.phase);

        EvolveOptions opt;
        opt.sample_every = config.sample_every;
        for (const auto& q : config.q_list) {
            opt.q_values.push_back(q.to_double());
            opt.q_labels.push_back(q.str());
        }
        opt.checkpoint_times = config.checkpoints;
        opt.snapshot_every = config.snapshot_every;
        opt.boundary_cells = config.boundary_cells;
        opt.boundary_tol = config.boundary_tol;
        opt.spectral_tail_tol = config.spectral_tail_tol;
        opt.overflow_factor = config.overflow_factor;

        try {
            result = evolve(state, config.t_final, opt);
            man.outcome = "ok";
            out.exit_code = 0;
        } catch (const GuardError& e) {
            man.outcome = std::string("guard:") + guard_kind_name(e.kind);
            out.exit_code = 2;
            out.message = e.what();
        }

        if (!result.series.samples.empty())
            write_series_csv(out.run_dir / "series.csv", result.series);
        if (!result.checkpoints.empty()) {
            fs::create_directories(out.run_dir / "checkpoints");
            for (const auto& snap : result.checkpoints)
                write_field(out.run_dir / "checkpoints" / ("t" + time_label(snap.t) + ".fld"),
                            snap.field);
        }
        if (!result.snapshots.empty()) {
            fs::create_directories(out.run_dir / "snapshots");
            std::ofstream index(out.run_dir / "snapshots" / "index.csv");
            index << "t,file\n";
            char name[32];
            for (std::size_t i = 0; i < result.snapshots.size(); ++i) {
                std::snprintf(name, sizeof name, "%06zu.fld", i);
                write_field(out.run_dir / "snapshots" / name, result.snapshots[i].field);
                char tbuf[40];
                std::snprintf(tbuf, sizeof tbuf, "%.17g", result.snapshots[i].t);
                index << tbuf << ',' << name << "\n";
            }
        }
    } catch (const ConfigError& e) {
        man.outcome = std::string("error:") + e.what();
        out.exit_code = 1;
        out.message = e.what();
    } catch (const Error& e) {
        man.outcome = std::string("error:") + e.what();
        out.exit_code = 1;
        out.message = e.what();
    }

    man.finished_utc = utc_now_iso();
    man.exit_code = out.exit_code;
    std::error_code ec;
    fs::create_directories(out.run_dir, ec);
    if (!ec) write_json(out.run_dir / "manifest.json", man.to_json());
    return out;
}

std::optional<ReportKind> report_kind_from_string(const std::string& s) {
    if (s == "virial") return ReportKind::virial;
    if (s == "pseudoconformal") return ReportKind::pseudoconformal;
    if (s == "decay") return ReportKind::decay;
    if (s == "gdecay") return ReportKind::gdecay;
    if (s == "scatter") return ReportKind::scatter;
    if (s == "strichartz") return ReportKind::strichartz;
    return std::nullopt;
}

namespace {

std::vector<FieldSnapshot> load_snapshots(const fs::path& run_dir) {
    fs::path index = run_dir / "snapshots" / "index.csv";
    std::ifstream f(index);
    if (!f) throw SchemaError("run has no snapshots/index.csv (set snapshot_every)");
    std::string line;
    std::getline(f, line);  // header
    std::vector<FieldSnapshot> out;
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        auto comma = line.find(',');
        if (comma == std::string::npos) throw SchemaError("bad snapshot index row");
        FieldSnapshot snap;
        snap.t = std::stod(line.substr(0, comma));
        snap.field = read_field(run_dir / "snapshots" / line.substr(comma + 1));
        out.push_back(std::move(snap));
    }
    if (out.empty()) throw SchemaError("snapshot index is empty");
    return out;
}

double max_abs_rel(const std::vector<ResidualPoint>& pts, double ta, double tb) {
    double m = 0;
    for (const auto& r : pts)
        if (r.t >= ta - 1e-12 && r.t <= tb + 1e-12) m = std::max(m, std::abs(r.rel));
    return m;
}

TimeSeries decimate(const TimeSeries& s, int stride) {
    TimeSeries out = s;
    out.samples.clear();
    for (std::size_t i = 0; i < s.samples.size(); i += stride) out.samples.push_back(s.samples[i]);
    return out;
}

}  // namespace

nlohmann::json run_report(const fs::path& run_dir, ReportKind kind, const ReportOptions& opt) {
    std::ifstream mf(run_dir / "manifest.json");
    if (!mf) throw SchemaError("no manifest.json in " + run_dir.string());
    nlohmann::json man = nlohmann::json::parse(mf);
    ProblemParams params = params_from_manifest(man);

    nlohmann::json rep;
    rep["run_dir"] = run_dir.string();

    auto need_series = [&]() {
        return read_series_csv(run_dir / "series.csv", params);
    };

    switch (kind) {
        case ReportKind::virial: {
            auto s = need_series();
            double ta = opt.t_min > 0 ? opt.t_min : 0.2;
            double tb = opt.t_max > 0 ? opt.t_max : 2.0;
            auto res = virial_residual(s);
            double m1 = max_abs_rel(res, ta, tb);
            double m2 = max_abs_rel(virial_residual(decimate(s, 2)), ta, tb);
            rep["kind"] = "virial";
            rep["window"] = {ta, tb};
            rep["max_rel_residual"] = m1;
            rep["max_rel_residual_2x_interval"] = m2;
            rep["shrink_factor_on_halving"] = m1 > 0 ? m2 / m1 : 0.0;
            rep["tol"] = opt.rel_tol;
            rep["pass"] = m1 < opt.rel_tol;
            break;
        }
        case ReportKind::pseudoconformal: {
            auto s = need_series();
            double tb = opt.t_max > 0 ? opt.t_max : 2.0;
            auto res = pseudoconformal_residual(s);
            double m = max_abs_rel(res, 0, tb);
            auto th = alpha_thresholds(params);
            rep["kind"] = "pseudoconformal";
            rep["window"] = {0.0, tb};
            rep["max_rel_residual"] = m;
            rep["tol"] = opt.rel_tol;
            rep["conserved"] = params.alpha == th.mass_critical;
            rep["pass"] = m < opt.rel_tol;
            break;
        }
        case ReportKind::decay: {
            auto s = need_series();
            double ta = opt.t_min > 0 ? opt.t_min : 2.0;
            double tb = opt.t_max > 0 ? opt.t_max : s.samples.back().t;
            auto fit = decay_fit(s, opt.q, ta, tb);
            rep["kind"] = "decay";
            rep["q"] = opt.q.str();
            rep["window"] = {ta, tb};
            rep["slope"] = fit.slope;
            rep["stderr"] = fit.stderr_slope;
            rep["target"] = fit.target;
            rep["points"] = fit.points;
            bool pass = fit.target == 0 ? std::abs(fit.slope) <= opt.slope_abs_tol
                                        : std::abs(fit.slope - fit.target) <=
                                              opt.slope_rel_tol * std::abs(fit.target);
            rep["pass"] = pass;
            break;
        }
        case ReportKind::gdecay: {
            auto s = need_series();
            double ta = opt.t_min > 0 ? opt.t_min : 2.0;
            double tb = opt.t_max > 0 ? opt.t_max : s.samples.back().t;
            auto fit = g_decay_fit(s, ta, tb);
            rep["kind"] = "gdecay";
            rep["window"] = {ta, tb};
            rep["g_slope"] = fit.g_slope;
            rep["g_target"] = fit.g_target;
            rep["gradv_slope"] = fit.gradv_slope;
            rep["gradv_target"] = fit.gradv_target;
            rep["slack"] = opt.gdecay_slack;
            rep["pass"] = fit.g_slope <= fit.g_target + opt.gdecay_slack;
            break;
        }
        case ReportKind::scatter: {
            fs::path cpdir = run_dir / "checkpoints";
            std::vector<FieldSnapshot> run;
            std::vector<double> cps;
            const auto& cfg = man.at("config");
            for (const auto& tc : cfg.at("checkpoints")) cps.push_back(tc.get<double>());
            std::sort(cps.begin(), cps.end());
            for (double tc : cps) {
                fs::path p = cpdir / ("t" + time_label(tc) + ".fld");
                if (!fs::exists(p)) throw SchemaError("missing checkpoint field " + p.string());
                run.push_back({tc, read_field(p)});
            }
            auto sr = cauchy_defect(run, cps);
            rep["kind"] = "scatter";
            rep["checkpoints"] = sr.checkpoints;
            rep["h1_defects"] = sr.h1_defects;
            rep["sigma_defects"] = sr.sigma_defects;
            std::vector<double> dh, ds;
            for (std::size_t i = 0; i + 1 < cps.size(); ++i) {
                dh.push_back(sr.h1_defects[i][i + 1]);
                ds.push_back(sr.sigma_defects[i][i + 1]);
            }
            rep["consecutive_h1"] = dh;
            rep["consecutive_sigma"] = ds;
            bool mono = true;
            for (std::size_t i = 0; i + 1 < dh.size(); ++i)
                mono = mono && dh[i + 1] < dh[i] && ds[i + 1] < ds[i];
            double ratio = dh.back() / dh.front();
            rep["monotone"] = mono;
            rep["final_first_ratio"] = ratio;
            rep["ratio_bound"] = opt.ratio_bound;
            rep["pass"] = mono && ratio < opt.ratio_bound;
            write_field(run_dir / "scatter_state.fld", sr.state_estimate);
            rep["state_estimate"] = (run_dir / "scatter_state.fld").string();
            break;
        }
        case ReportKind::strichartz: {
            auto snaps = load_snapshots(run_dir);
            double t_end = snaps.back().t;
            rep["kind"] = "strichartz";
            rep["p"] = opt.p.str();
            rep["q"] = opt.q.is_inf() ? Rat(4).str() : opt.q.str();
            Rat q = opt.q.is_inf() ? Rat(4) : opt.q;
            // unit windows for w, dyadic windows for u
            nlohmann::json wins = nlohmann::json::array();
            bool all_finite = true;
            for (double a = 0; a + 1 <= t_end + 1e-9; a += 1) {
                std::vector<FieldSnapshot> wfields;
                for (const auto& s : snaps)
                    if (s.t >= a - 1e-9 && s.t <= a + 1 + 1e-9) {
                        auto comps = weighted_field(s.field, s.t);
                        // stack the components as one field per snapshot via
                        // the root-sum-square modulus (norms only need |w|)
                        ComplexField mod = ComplexField::zero(s.field.grid);
                        for (std::size_t m = 0; m < mod.values.size(); ++m) {
                            double acc = 0;
                            for (const auto& c : comps) acc += std::norm(c.values[m]);
                            mod.values[m] = std::sqrt(acc);
                        }
                        wfields.push_back({s.t, std::move(mod)});
                    }
                if (wfields.size() < 2) continue;
                double nw = strichartz_window_norm(wfields, opt.p, q, a, a + 1);
                all_finite = all_finite && std::isfinite(nw);
                wins.push_back({{"window", {a, a + 1}}, {"w_norm", nw}});
            }
            rep["w_windows"] = wins;
            nlohmann::json uw = nlohmann::json::array();
            std::vector<double> unorms;
            for (double a = 2; 2 * a <= t_end + 1e-9; a *= 2) {
                double nu = strichartz_window_norm(snaps, opt.p, q, a, 2 * a);
                unorms.push_back(nu);
                uw.push_back({{"window", {a, 2 * a}}, {"u_norm", nu}});
            }
            rep["u_dyadic_windows"] = uw;
            bool dec = unorms.size() >= 2;
            for (std::size_t i = 0; i + 1 < unorms.size(); ++i) dec = dec && unorms[i + 1] < unorms[i];
            rep["all_finite"] = all_finite;
            rep["u_windows_decreasing"] = dec;
            rep["pass"] = all_finite && dec;
            break;
        }
    }
    return rep;
}

int run_sweep(const fs::path& config_dir, int jobs) {
    std::vector<fs::path> configs;
    for (const auto& e : fs::directory_iterator(config_dir))
        if (e.is_regular_file() && e.path().extension() == ".json") configs.push_back(e.path());
    std::sort(configs.begin(), configs.end());
    if (configs.empty()) throw ConfigError("no .json configs in " + config_dir.string());

    std::atomic<std::size_t> next{0};
    std::atomic<int> worst{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= configs.size()) return;
            int code;
            try {
                RunConfig c = load_config(configs[i]);
                if (c.output_dir == "run") c.output_dir = configs[i].stem().string();
                code = run_simulate(c).exit_code;
            } catch (const Error&) {
                code = 1;
            }
            int cur = worst.load();
            while (code > cur && !worst.compare_exchange_weak(cur, code)) {
            }
        }
    };
    jobs = std::max(1, jobs);
    std::vector<std::thread> pool;
    for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return worst.load();
}

nlohmann::json to_json(const ExponentPair& p) {
    return {{"p", p.p.str()}, {"q", p.q.str()}};
}

nlohmann::json to_json(const FeasibilityReport& r) {
    nlohmann::json j;
    j["feasible"] = r.feasible;
    j["witness_epsilon"] = r.witness_epsilon.str();
    j["witness_tau"] = r.witness_tau.str();
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& p : r.pairs) pairs.push_back(to_json(p));
    j["pairs"] = pairs;
    nlohmann::json conds = nlohmann::json::array();
    for (const auto& c : r.conditions)
        conds.push_back({{"id", c.id}, {"ok", c.ok}, {"margin", c.margin.str()}});
    j["conditions"] = conds;
    if (!r.reason.empty()) j["reason"] = r.reason;
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j;
}

nlohmann::json params_json(const ProblemParams& p) {
    auto th = alpha_thresholds(p);
    nlohmann::json j;
    j["d"] = p.d;
    j["b"] = p.b.str();
    j["alpha"] = p.alpha.str();
    j["mu"] = p.mu;
    j["alpha_mass_critical"] = th.mass_critical.str();
    j["alpha_energy_critical"] = th.energy_critical.str();
    j["critical_sobolev"] = critical_sobolev(p).str();
    j["strauss_exponent"] = strauss_exponent(p.d, p.b);
    auto reg = lwp_regime(p);
    j["lwp_branch"] = to_string(reg.lwp_branch);
    j["mass_class"] = to_string(reg.mass_class);
    return j;
}

}  // namespace inls
