#include "inls/exponents.hpp"

#include <functional>

namespace inls {

namespace {

constexpr int kWitnessMaxK = 40;

Rat two_dd2(int d) {  // 2d/(d-2), inf for d <= 2
    if (d <= 2) return Rat::inf();
    return Rat(2 * d, d - 2);
}

// Collects the condition trace while and-ing all verdict rows together.
struct Trace {
    std::vector<Condition> rows;
    bool all_ok = true;

    bool require(const std::string& id, const Rat& margin, bool strict = true) {
        bool ok = strict ? margin.sign() > 0 : margin.sign() >= 0;
        rows.push_back({id, ok, margin});
        all_ok = all_ok && ok;
        return ok;
    }
    void info(const std::string& id, const Rat& value) { rows.push_back({id, true, value}); }
    void append(const Trace& other) {
        rows.insert(rows.end(), other.rows.begin(), other.rows.end());
        all_ok = all_ok && other.all_ok;
    }
};

FeasibilityReport infeasible(Trace trace, std::string reason) {
    FeasibilityReport r;
    r.feasible = false;
    r.conditions = std::move(trace.rows);
    r.reason = std::move(reason);
    return r;
}

// Runs the witness search: minimize k for eps = 2^-k first, then tau = 2^-k
// (use_tau=false searches eps alone).  `trial` fills a Trace and the pairs
// for one candidate witness.
FeasibilityReport search_witness(
    const Trace& gates, bool use_tau,
    const std::function<void(const Rat&, const Rat&, Trace&, std::vector<ExponentPair>&)>& trial) {
    std::vector<Condition> first_trial_rows;
    for (int ke = 1; ke <= kWitnessMaxK; ++ke) {
        Rat eps = Rat::pow2(-ke);
        int kt_max = use_tau ? kWitnessMaxK : 1;
        for (int kt = 1; kt <= kt_max; ++kt) {
            Rat tau = use_tau ? Rat::pow2(-kt) : Rat(0);
            Trace t;
            std::vector<ExponentPair> pairs;
            trial(eps, tau, t, pairs);
            if (ke == 1 && kt == 1) first_trial_rows = t.rows;
            if (t.all_ok) {
                FeasibilityReport r;
                r.feasible = true;
                r.witness_epsilon = eps;
                r.witness_tau = tau;
                r.pairs = std::move(pairs);
                r.conditions = gates.rows;
                r.conditions.insert(r.conditions.end(), t.rows.begin(), t.rows.end());
                return r;
            }
        }
    }
    Trace combined = gates;
    combined.rows.insert(combined.rows.end(), first_trial_rows.begin(), first_trial_rows.end());
    return infeasible(std::move(combined),
                      "no witness (eps, tau) of the form 2^-k, k <= 40, satisfies every condition");
}

void trace_pair(Trace& t, const std::string& tag, const Rat& p, const Rat& alpha) {
    // Hoelder time exponent m = alpha p / (p - 2); recorded for inspection.
    if (p.is_inf() || p <= Rat(2)) return;
    t.info(tag + ".m", alpha * p / (p - Rat(2)));
}

Rat scattering_cubic(const ProblemParams& pp) {
    Rat d(pp.d);
    const Rat &a = pp.alpha, &b = pp.b;
    return d * d * a * a * a + Rat(4) * b * d * a * a +
           (Rat(4) * d - Rat(8) + Rat(4) * b * b) * a + Rat(8) * b - Rat(16);
}

}  // namespace

void ProblemParams::validate() const {
    if (d < 1 || d > 6) throw ConfigError("d must be in 1..6, got " + std::to_string(d));
    if (mu != 1 && mu != -1) throw ConfigError("mu must be +1 or -1");
    if (b.is_inf() || alpha.is_inf()) throw ConfigError("b and alpha must be finite");
    // b = 0 is admitted as the classical-NLS limit of the exponent formulas;
    // the simulation path separately requires b > 0.
    if (!(b >= Rat(0)) || !(b < min(Rat(2), Rat(d))))
        throw ConfigError("b must satisfy 0 <= b < min(2, d), got b = " + b.str());
    if (!(alpha > Rat(0))) throw ConfigError("alpha must be positive, got " + alpha.str());
}

const char* to_string(LwpBranch b) {
    switch (b) {
        case LwpBranch::D4plus: return "D4plus";
        case LwpBranch::D3smallB: return "D3smallB";
        case LwpBranch::D3midB: return "D3midB";
        case LwpBranch::D2: return "D2";
        case LwpBranch::OutOfTheorem: return "OutOfTheorem";
    }
    return "?";
}

const char* to_string(MassClass m) {
    switch (m) {
        case MassClass::subcritical: return "subcritical";
        case MassClass::critical: return "critical";
        case MassClass::intercritical: return "intercritical";
    }
    return "?";
}

Rat critical_sobolev(const ProblemParams& p) {
    p.validate();
    return Rat(p.d, 2) - (Rat(2) - p.b) / p.alpha;
}

AlphaThresholds alpha_thresholds(const ProblemParams& p) {
    p.validate();
    Rat num = Rat(4) - Rat(2) * p.b;
    AlphaThresholds t;
    t.mass_critical = num / Rat(p.d);
    t.energy_critical = p.d >= 3 ? num / Rat(p.d - 2) : Rat::inf();
    return t;
}

double strauss_exponent(int d, const Rat& b) {
    if (d < 1 || !(b >= Rat(0)) || !(b < min(Rat(2), Rat(d))))
        throw ConfigError("strauss_exponent requires 0 <= b < min(2, d)");
    Rat dd(d);
    auto f = [&](const Rat& a) { return dd * a * a + (dd - Rat(2) + Rat(2) * b) * a + Rat(2) * b - Rat(4); };
    // f(0) = 2b-4 < 0 and f(alpha_star) = 2(4-2b)/d > 0, so the positive
    // root lies in (0, (4-2b)/d); bisect to width 2^-48.
    Rat lo(0);
    Rat hi = (Rat(4) - Rat(2) * b) / dd;
    Rat width_goal = Rat::pow2(-48);
    while (hi - lo > width_goal) {
        Rat mid = (lo + hi) / Rat(2);
        if (f(mid).sign() >= 0)
            hi = mid;
        else
            lo = mid;
    }
    return ((lo + hi) / Rat(2)).to_double();
}

bool is_admissible(const ExponentPair& pair, int d) {
    const Rat &p = pair.p, &q = pair.q;
    if (p < Rat(2) || q < Rat(2)) return false;
    if (d == 2 && p == Rat(2) && q.is_inf()) return false;
    return Rat(2) * p.inv() + Rat(d) * q.inv() == Rat(d, 2);
}

bool singularity_integrability(int d, const Rat& gamma, const Rat& b, Region region) {
    if (gamma < Rat(1)) throw ConfigError("gamma must be in [1, inf]");
    Rat ratio = Rat(d) * gamma.inv();
    return region == Region::unit_ball ? ratio > b : ratio < b;
}

Regime lwp_regime(const ProblemParams& p) {
    p.validate();
    auto th = alpha_thresholds(p);
    Regime r;
    r.critical_sobolev = critical_sobolev(p);
    if (p.alpha < th.mass_critical)
        r.mass_class = MassClass::subcritical;
    else if (p.alpha == th.mass_critical)
        r.mass_class = MassClass::critical;
    else
        r.mass_class = MassClass::intercritical;

    const Rat& a = p.alpha;
    const Rat& b = p.b;
    if (p.d >= 4 && b < Rat(2) && a < th.energy_critical)
        r.lwp_branch = LwpBranch::D4plus;
    else if (p.d == 3 && b < Rat(1) && a < th.energy_critical)
        r.lwp_branch = LwpBranch::D3smallB;
    else if (p.d == 3 && b >= Rat(1) && b < Rat(3, 2) &&
             a < (Rat(6) - Rat(4) * b) / (Rat(2) * b - Rat(1)))
        r.lwp_branch = LwpBranch::D3midB;
    else if (p.d == 2 && b < Rat(1) && a < th.energy_critical)
        r.lwp_branch = LwpBranch::D2;
    else
        r.lwp_branch = LwpBranch::OutOfTheorem;
    return r;
}

Rat decay_exponent(const ProblemParams& p, const Rat& q) {
    p.validate();
    if (q < Rat(2)) throw QOutOfRange("q must be >= 2");
    if (p.d >= 3 && q > two_dd2(p.d))
        throw QOutOfRange("q must be <= 2d/(d-2) for d >= 3");
    if (p.d == 2 && q.is_inf()) throw QOutOfRange("q must be finite for d = 2");
    Rat half_minus = Rat(1, 2) - q.inv();
    auto th = alpha_thresholds(p);
    if (p.alpha >= th.mass_critical) return Rat(p.d) * half_minus;
    Rat rate = Rat(p.d) * (Rat(2) * p.b + Rat(p.d) * p.alpha) / Rat(4);
    return rate * half_minus;
}

Rat admissible_partner(const Rat& q, int d) {
    Rat rhs = Rat(d, 2) - Rat(d) * q.inv();
    if (rhs.is_zero()) return Rat::inf();
    return Rat(2) / rhs;
}

// ---------------------------------------------------------------------------
// Local-theory pair constructions.
// ---------------------------------------------------------------------------

FeasibilityReport lemma_local_pairs(const ProblemParams& pp) {
    pp.validate();
    Regime reg = lwp_regime(pp);
    const Rat &a = pp.alpha, &b = pp.b;
    Rat d(pp.d);
    auto th = alpha_thresholds(pp);

    if (reg.lwp_branch == LwpBranch::OutOfTheorem) {
        Trace t;
        t.require("hyp.lwp_branch", Rat(-1));
        return infeasible(std::move(t),
                          pp.d == 1 ? "no Strichartz local theory in d = 1 (the |x|^{-b-1} "
                                      "term is not integrable near the origin)"
                                    : "parameters fall outside every local-theory branch");
    }

    if (reg.lwp_branch == LwpBranch::D4plus || reg.lwp_branch == LwpBranch::D3smallB) {
        Trace gates;
        if (pp.d == 3)
            gates.require("hyp.b_lt_1", Rat(1) - b);
        else
            gates.require("hyp.b_lt_2", Rat(2) - b);
        gates.require("hyp.alpha_lt_energy_critical", th.energy_critical - a);
        gates.require("hyp.d_gt_b_plus_2", d - b - Rat(2));
        if (!gates.all_ok) return infeasible(std::move(gates), "hypothesis violated");

        Rat q1_base = d * (a + Rat(2)) / (d + a - b);
        Rat p2 = Rat(4) * (a + Rat(2)) / ((d - Rat(2)) * a);
        Rat q2 = d * (a + Rat(2)) / (d + a);
        auto trial = [&](const Rat& eps, const Rat&, Trace& t, std::vector<ExponentPair>& pairs) {
            Rat q1 = q1_base + eps;
            t.require("q1.lt_d", d - q1);
            t.require("q1.gt_2", q1 - Rat(2));
            t.require("q1.lt_2d_dm2", two_dd2(pp.d) - q1);
            // theta1 > 0 written as the cleared-denominator polynomial.
            t.require("theta1.pos", d * (a + Rat(2)) * (Rat(4) - Rat(2) * b - (d - Rat(2)) * a) +
                                        eps * (d + a - b) * (Rat(4) - d * (a + Rat(2))));
            Rat p1 = admissible_partner(q1, pp.d);
            t.require("theta2.pos", (Rat(4) - (d - Rat(2)) * a) / Rat(4));
            t.require("pair2.admissible",
                      is_admissible({p2, q2}, pp.d) ? Rat(1) : Rat(-1));
            trace_pair(t, "pair1", p1, a);
            trace_pair(t, "pair2", p2, a);
            pairs = {{p1, q1}, {p2, q2}};
        };
        return search_witness(gates, /*use_tau=*/false, trial);
    }

    if (reg.lwp_branch == LwpBranch::D3midB) {
        Trace gates;
        gates.require("hyp.b_ge_1", b - Rat(1), /*strict=*/false);
        gates.require("hyp.b_lt_3_2", Rat(3, 2) - b);
        gates.require("hyp.alpha_lt_bound", (Rat(6) - Rat(4) * b) / (Rat(2) * b - Rat(1)) - a);
        // tau-free reductions of the two theta_1 > 0 requirements.
        gates.require("f0.pos", Rat(8) - Rat(4) * b - Rat(2) * b * a);
        gates.require("g0.pos", Rat(6) - Rat(4) * b + a * (Rat(1) - Rat(2) * b));
        if (!gates.all_ok) return infeasible(std::move(gates), "hypothesis violated");

        Rat p2 = Rat(4) * (a + Rat(2)) / a;
        Rat q2 = Rat(3) * (a + Rat(2)) / (Rat(3) + a);
        auto trial = [&](const Rat& eps, const Rat& tau, Trace& t,
                         std::vector<ExponentPair>& pairs) {
            Rat c23 = Rat(2) + Rat(3) * a;
            Rat q1a = Rat(3) * (Rat(2) + a * tau) / (Rat(3) - b) + eps;
            t.require("q1a.ge_3", q1a - Rat(3), /*strict=*/false);
            t.require("q1a.lt_6", Rat(6) - q1a);
            t.require("f.pos", Rat(3) * (Rat(8) - Rat(4) * b - Rat(2) * b * a - a * tau * c23) -
                                   eps * (Rat(3) - b) * c23);
            Rat q1b = Rat(3) * (Rat(1) + (a + Rat(1)) * tau) / (Rat(2) - b) + eps;
            t.require("q1b.ge_3", q1b - Rat(3), /*strict=*/false);
            t.require("q1b.lt_6", Rat(6) - q1b);
            t.require("g.pos",
                      Rat(3) * (Rat(6) - Rat(4) * b + a * (Rat(1) - Rat(2) * b) -
                                (a + Rat(1)) * tau * c23) -
                          eps * (Rat(2) - b) * c23);
            t.require("theta2.pos", (Rat(4) - a) / Rat(4));
            t.require("pair2.admissible", is_admissible({p2, q2}, 3) ? Rat(1) : Rat(-1));
            Rat p1a = admissible_partner(q1a, 3);
            Rat p1b = admissible_partner(q1b, 3);
            trace_pair(t, "pair1a", p1a, a);
            trace_pair(t, "pair1b", p1b, a);
            pairs = {{p1a, q1a}, {p1b, q1b}, {p2, q2}};
        };
        return search_witness(gates, /*use_tau=*/true, trial);
    }

    // d = 2 branch: any alpha > 0, 0 < b < 1.
    Trace gates;
    gates.require("hyp.b_lt_1", Rat(1) - b);
    if (!gates.all_ok) return infeasible(std::move(gates), "hypothesis violated");

    Rat p2 = Rat(2) * (a + Rat(2)) / a;
    Rat q2 = a + Rat(2);
    auto trial = [&](const Rat& eps, const Rat& tau, Trace& t, std::vector<ExponentPair>& pairs) {
        Rat den_a = Rat(1) - b - a * tau;
        if (!t.require("a.denom.pos", den_a)) return;
        Rat q1a = Rat(2) / den_a + eps;
        t.require("q1a.gt_2", q1a - Rat(2));
        t.require("a.holder.strict", den_a - Rat(2) / q1a);
        Rat den_b = Rat(1) - b - (a + Rat(1)) * tau;
        if (!t.require("b.denom.pos", den_b)) return;
        Rat q1b = Rat(2) / den_b + eps;
        t.require("q1b.gt_2", q1b - Rat(2));
        t.require("b.holder.strict", den_b - Rat(2) / q1b);
        t.require("theta2.pos", Rat(2) / (a + Rat(2)));
        t.require("pair2.admissible", is_admissible({p2, q2}, 2) ? Rat(1) : Rat(-1));
        Rat p1a = admissible_partner(q1a, 2);
        Rat p1b = admissible_partner(q1b, 2);
        trace_pair(t, "pair1a", p1a, a);
        trace_pair(t, "pair1b", p1b, a);
        pairs = {{p1a, q1a}, {p1b, q1b}, {p2, q2}};
    };
    return search_witness(gates, /*use_tau=*/true, trial);
}

// ---------------------------------------------------------------------------
// Scattering pair constructions (window p < 2 alpha + 2).
// ---------------------------------------------------------------------------

FeasibilityReport lemma_scattering_pairs(const ProblemParams& pp) {
    pp.validate();
    const Rat &a = pp.alpha, &b = pp.b;
    Rat d(pp.d);
    auto th = alpha_thresholds(pp);

    if (pp.d == 1) {
        Trace t;
        t.require("hyp.d_ge_2", Rat(-1));
        return infeasible(std::move(t), "no scattering construction in d = 1");
    }

    if (pp.d >= 4) {
        Trace gates;
        gates.require("hyp.alpha_ge_mass_critical", a - th.mass_critical, /*strict=*/false);
        gates.require("hyp.alpha_lt_energy_critical", th.energy_critical - a);
        Rat quad = d * a * a + (d - Rat(2) + Rat(2) * b) * a + Rat(2) * b - Rat(4);
        gates.require("quad.pos", quad);
        gates.info("remark.cubic", scattering_cubic(pp));
        if (!gates.all_ok) return infeasible(std::move(gates), "hypothesis violated");

        Rat base = d * (a + Rat(2)) / (d - b);
        auto trial = [&](const Rat& eps, const Rat&, Trace& t, std::vector<ExponentPair>& pairs) {
            Rat q1 = base + eps, q2 = base - eps;
            t.require("q1.gt_2", q1 - Rat(2));
            t.require("q1.lt_2d_dm2", two_dd2(pp.d) - q1);
            t.require("q1.lt_d", d - q1);
            t.require("q2.gt_2", q2 - Rat(2));
            t.require("q2.lt_2d_dm2", two_dd2(pp.d) - q2);
            Rat swing = eps * (d - b) * (d * (a + Rat(1)) - Rat(2));
            t.require("ineq.plus", d * quad + swing);
            t.require("ineq.minus", d * quad - swing);
            Rat p1 = admissible_partner(q1, pp.d);
            Rat p2 = admissible_partner(q2, pp.d);
            trace_pair(t, "pair1", p1, a);
            trace_pair(t, "pair2", p2, a);
            pairs = {{p1, q1}, {p2, q2}};
        };
        return search_witness(gates, /*use_tau=*/false, trial);
    }

    if (pp.d == 3) {
        Trace gates;
        gates.require("hyp.b_lt_5_4", Rat(5, 4) - b);
        gates.require("hyp.alpha_ge_mass_critical", a - th.mass_critical, /*strict=*/false);
        gates.require("hyp.alpha_lt_3_minus_2b", Rat(3) - Rat(2) * b - a);
        Rat quad = Rat(3) * a * a + Rat(2) * b * a + Rat(2) * b - Rat(3);
        gates.require("quad.pos", quad);
        gates.info("remark.cubic", scattering_cubic(pp));
        if (!gates.all_ok) return infeasible(std::move(gates), "hypothesis violated");

        auto trial = [&](const Rat& eps, const Rat& tau, Trace& t,
                         std::vector<ExponentPair>& pairs) {
            Rat base = Rat(3) * (a + Rat(1) + tau) / (Rat(2) - b);
            Rat q1 = base + eps, q2 = base - eps;
            t.require("q1.gt_3", q1 - Rat(3));
            t.require("q1.lt_6", Rat(6) - q1);
            t.require("q2.gt_3", q2 - Rat(3));
            t.require("q2.lt_6", Rat(6) - q2);
            Rat c = Rat(3) * a + Rat(1);
            Rat body = Rat(3) * (quad + tau * c);
            Rat swing = eps * (Rat(2) - b) * c;
            t.require("ineq.plus", body + swing);
            t.require("ineq.minus", body - swing);
            Rat p1 = admissible_partner(q1, 3);
            Rat p2 = admissible_partner(q2, 3);
            trace_pair(t, "pair1", p1, a);
            trace_pair(t, "pair2", p2, a);
            pairs = {{p1, q1}, {p2, q2}};
        };
        return search_witness(gates, /*use_tau=*/true, trial);
    }

    // d = 2
    Trace gates;
    gates.require("hyp.b_lt_1", Rat(1) - b);
    gates.require("hyp.alpha_ge_mass_critical", a - th.mass_critical, /*strict=*/false);
    Rat quad = a * a + b * a + b - Rat(1);
    gates.require("quad.pos", quad);
    gates.info("remark.cubic", scattering_cubic(pp));
    if (!gates.all_ok) return infeasible(std::move(gates), "hypothesis violated");

    auto trial = [&](const Rat& eps, const Rat& tau, Trace& t, std::vector<ExponentPair>& pairs) {
        Rat base = Rat(2) * (a + Rat(1) + tau) / (Rat(1) - b);
        Rat q1 = base + eps, q2 = base - eps;
        t.require("q1.gt_2", q1 - Rat(2));
        t.require("q2.gt_2", q2 - Rat(2));
        Rat body = Rat(2) * (quad + tau * a);
        Rat swing = eps * a * (Rat(1) - b);
        t.require("ineq.plus", body + swing);
        t.require("ineq.minus", body - swing);
        Rat p1 = admissible_partner(q1, 2);
        Rat p2 = admissible_partner(q2, 2);
        trace_pair(t, "pair1", p1, a);
        trace_pair(t, "pair2", p2, a);
        pairs = {{p1, q1}, {p2, q2}};
    };
    return search_witness(gates, /*use_tau=*/true, trial);
}

// ---------------------------------------------------------------------------
// Weighted-solution pair constructions (window p < alpha + 1), d in {2, 3}.
// ---------------------------------------------------------------------------

FeasibilityReport lemma_weighted_pairs(const ProblemParams& pp) {
    pp.validate();
    const Rat &a = pp.alpha, &b = pp.b;
    auto th = alpha_thresholds(pp);

    if (pp.d != 2 && pp.d != 3) {
        Trace t;
        t.require("hyp.d_in_2_3", Rat(-1));
        return infeasible(std::move(t), "weighted construction is defined for d = 2, 3 only");
    }

    if (pp.d == 3) {
        Trace gates;
        gates.require("hyp.b_lt_1", Rat(1) - b);
        gates.require("hyp.alpha_gt_lower", a - (Rat(5) - Rat(2) * b) / Rat(3));
        gates.require("hyp.alpha_lt_3_minus_2b", Rat(3) - Rat(2) * b - a);
        Rat quad = Rat(3) * a * a + Rat(2) * (b - Rat(1)) * a + Rat(2) * b - Rat(5);
        gates.require("quad.pos", quad);
        if (!gates.all_ok) return infeasible(std::move(gates), "hypothesis violated");

        auto trial = [&](const Rat& eps, const Rat& tau, Trace& t,
                         std::vector<ExponentPair>& pairs) {
            Rat base = Rat(3) * (a + Rat(1) + tau) / (Rat(2) - b);
            Rat q1 = base + eps, q2 = base - eps;
            t.require("q1.gt_3", q1 - Rat(3));
            t.require("q1.lt_6", Rat(6) - q1);
            t.require("q2.gt_3", q2 - Rat(3));
            t.require("q2.lt_6", Rat(6) - q2);
            Rat c = Rat(3) * a - Rat(1);
            Rat body = Rat(3) * (quad + tau * c);
            Rat swing = eps * (Rat(2) - b) * c;
            t.require("ineq.plus", body + swing);
            t.require("ineq.minus", body - swing);
            Rat p1 = admissible_partner(q1, 3);
            Rat p2 = admissible_partner(q2, 3);
            trace_pair(t, "pair1", p1, a);
            trace_pair(t, "pair2", p2, a);
            pairs = {{p1, q1}, {p2, q2}};
        };
        return search_witness(gates, /*use_tau=*/true, trial);
    }

    // d = 2
    Trace gates;
    gates.require("hyp.b_lt_1", Rat(1) - b);
    gates.require("hyp.alpha_ge_mass_critical", a - th.mass_critical, /*strict=*/false);
    Rat quad = a * a + (b - Rat(1)) * a + b - Rat(2);
    gates.require("quad.pos", quad);
    auto finish_note = [&](FeasibilityReport r) {
        // The displayed quadratic a^2 + (b-1)a + (b-2) has positive root
        // 2 - b, so strict positivity needs alpha > 2 - b; the weaker bound
        // alpha > 1 - b does not suffice.  Checked exactly as displayed.
        r.notes.push_back("d=2 quadratic a^2+(b-1)a+(b-2) is positive iff alpha > 2-b; "
                          "the bound alpha > 1-b is not sufficient");
        return r;
    };
    if (!gates.all_ok) return finish_note(infeasible(std::move(gates), "hypothesis violated"));

    auto trial = [&](const Rat& eps, const Rat& tau, Trace& t, std::vector<ExponentPair>& pairs) {
        Rat base = Rat(2) * (a + Rat(1) + tau) / (Rat(1) - b);
        Rat q1 = base + eps, q2 = base - eps;
        t.require("q1.gt_2", q1 - Rat(2));
        t.require("q2.gt_2", q2 - Rat(2));
        Rat body = Rat(2) * (quad + tau * (a - Rat(1)));
        Rat swing = eps * (Rat(1) - b) * (a - Rat(1));
        t.require("ineq.plus", body + swing);
        t.require("ineq.minus", body - swing);
        Rat p1 = admissible_partner(q1, 2);
        Rat p2 = admissible_partner(q2, 2);
        trace_pair(t, "pair1", p1, a);
        trace_pair(t, "pair2", p2, a);
        pairs = {{p1, q1}, {p2, q2}};
    };
    return finish_note(search_witness(gates, /*use_tau=*/true, trial));
}

}  // namespace inls
