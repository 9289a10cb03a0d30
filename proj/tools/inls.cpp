// inls: simulate / exponents / report / sweep
#include <cstdio>
#include <iostream>

#include "CLI11.hpp"

#include "inls/runner.hpp"

using namespace inls;

int main(int argc, char** argv) {
    CLI::App app{"desk-scale lab for the inhomogeneous NLS"};
    app.require_subcommand(1);

    // simulate
    std::string config_path;
    auto* sim = app.add_subcommand("simulate", "run a configured evolution");
    sim->add_option("config", config_path, "flat JSON config file")->required();

    // exponents
    int d = 3;
    std::string b_str = "1/2", alpha_str = "1", lemma = "local";
    int mu = -1;
    auto* expc = app.add_subcommand("exponents", "exact exponent feasibility report");
    expc->add_option("--d", d, "dimension")->required();
    expc->add_option("--b", b_str, "singularity power (rational)")->required();
    expc->add_option("--alpha", alpha_str, "nonlinearity power (rational)")->required();
    expc->add_option("--mu", mu, "sign (+1 focusing, -1 defocusing)");
    expc->add_option("--lemma", lemma, "local | scattering | weighted")
        ->check(CLI::IsMember({"local", "scattering", "weighted"}));

    // report
    std::string run_dir, kind_str = "virial";
    ReportOptions ropt;
    std::string rq = "inf", rp = "8";
    auto* repc = app.add_subcommand("report", "evaluate a diagnostic over a run directory");
    repc->add_option("run_dir", run_dir)->required();
    repc->add_option("--kind", kind_str,
                     "virial | pseudoconformal | decay | gdecay | scatter | strichartz")
        ->required();
    repc->add_option("--t-min", ropt.t_min);
    repc->add_option("--t-max", ropt.t_max);
    repc->add_option("--q", rq, "L^q exponent (rational or inf)");
    repc->add_option("--p", rp, "time exponent for strichartz");
    repc->add_option("--rel-tol", ropt.rel_tol);
    repc->add_option("--slope-rel-tol", ropt.slope_rel_tol);
    repc->add_option("--slope-abs-tol", ropt.slope_abs_tol);
    repc->add_option("--gdecay-slack", ropt.gdecay_slack);
    repc->add_option("--ratio-bound", ropt.ratio_bound);

    // sweep
    std::string sweep_dir;
    int jobs = 2;
    auto* swc = app.add_subcommand("sweep", "run every config in a directory");
    swc->add_option("dir", sweep_dir)->required();
    swc->add_option("--jobs", jobs, "concurrent runs");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*sim) {
            RunConfig cfg = load_config(config_path);
            RunOutcome out = run_simulate(cfg);
            if (!out.message.empty()) std::fprintf(stderr, "%s\n", out.message.c_str());
            std::printf("%s\n", out.run_dir.string().c_str());
            return out.exit_code;
        }
        if (*expc) {
            ProblemParams p;
            p.d = d;
            p.b = Rat::parse(b_str);
            p.alpha = Rat::parse(alpha_str);
            p.mu = mu;
            p.validate();
            FeasibilityReport rep;
            if (lemma == "local")
                rep = lemma_local_pairs(p);
            else if (lemma == "scattering")
                rep = lemma_scattering_pairs(p);
            else
                rep = lemma_weighted_pairs(p);
            nlohmann::json j = to_json(rep);
            j["lemma"] = lemma;
            j["params"] = params_json(p);
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (*repc) {
            auto kind = report_kind_from_string(kind_str);
            if (!kind) throw ConfigError("unknown report kind " + kind_str);
            ropt.q = Rat::parse(rq);
            ropt.p = Rat::parse(rp);
            auto j = run_report(run_dir, *kind, ropt);
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (*swc) return run_sweep(sweep_dir, jobs);
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 1;
    } catch (const SchemaError& e) {
        std::fprintf(stderr, "schema error: %s\n", e.what());
        return 1;
    } catch (const GuardError& e) {
        std::fprintf(stderr, "numerical guard: %s\n", e.what());
        return 2;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
