// Exact exponent calculus for i u_t + Lap u + mu |x|^{-b} |u|^alpha u = 0.
//
// Everything here is rational arithmetic over the triple (d, b, alpha):
// critical exponents, Schroedinger-admissible pairs, the regime classifier
// for the H^1 local theory, and the feasibility engines that reconstruct the
// exponent pairs used inside the local/scattering/weighted estimates.  The
// single irrational output is the Strauss exponent, computed by bisection.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "inls/errors.hpp"
#include "inls/rational.hpp"

namespace inls {

struct ProblemParams {
    int d = 1;       // spatial dimension, 1..6
    Rat b;           // singularity power, 0 < b < min(2, d)
    Rat alpha;       // nonlinearity power, > 0
    int mu = -1;     // +1 focusing, -1 defocusing

    void validate() const;  // throws ConfigError on violation
};

struct ExponentPair {
    Rat p;
    Rat q;
};

// Mass-critical and energy-critical thresholds (alpha_star, alpha_sup);
// alpha_sup is inf for d in {1, 2}.
struct AlphaThresholds {
    Rat mass_critical;
    Rat energy_critical;
};

enum class LwpBranch { D4plus, D3smallB, D3midB, D2, OutOfTheorem };
enum class MassClass { subcritical, critical, intercritical };

struct Regime {
    LwpBranch lwp_branch = LwpBranch::OutOfTheorem;
    MassClass mass_class = MassClass::subcritical;
    Rat critical_sobolev;
};

const char* to_string(LwpBranch);
const char* to_string(MassClass);

// One evaluated inequality: `margin` is the exact value of LHS - RHS, so a
// strict condition holds iff margin > 0.  Informational rows (derived
// quantities like the Hoelder exponents m_i) carry ok = true.
struct Condition {
    std::string id;
    bool ok;
    Rat margin;
};

struct FeasibilityReport {
    bool feasible = false;
    Rat witness_epsilon;
    Rat witness_tau;
    std::vector<ExponentPair> pairs;
    std::vector<Condition> conditions;
    std::string reason;              // nonempty iff infeasible
    std::vector<std::string> notes;  // flagged oddities, never verdict-bearing
};

// s_c = d/2 - (2-b)/alpha.
Rat critical_sobolev(const ProblemParams& p);

// (alpha_star, alpha_sup) = ((4-2b)/d, (4-2b)/(d-2) or inf).
AlphaThresholds alpha_thresholds(const ProblemParams& p);

// Positive root of d a^2 + (d-2+2b) a + 2b-4 = 0, by bisection on exact
// rationals to bracket width 2^-48.  Always < (4-2b)/d.
double strauss_exponent(int d, const Rat& b);

// Schroedinger admissibility: p, q in [2, inf], 2/p + d/q = d/2, and
// (p, q, d) != (2, inf, 2).
bool is_admissible(const ExponentPair& pair, int d);

enum class Region { unit_ball, complement };

// Finiteness of || |x|^-b ||_{L^gamma} on the unit ball (d/gamma > b) or on
// its complement (d/gamma < b).
bool singularity_integrability(int d, const Rat& gamma, const Rat& b, Region region);

// Classifies (d, b, alpha) into the four H^1 local-theory branches.
Regime lwp_regime(const ProblemParams& p);

// Decay exponent of ||u(t)||_q: d(1/2 - 1/q) for alpha >= alpha_star, else
// (d(2b+d alpha)/4)(1/2 - 1/q).  Throws QOutOfRange outside the q-window
// for the given dimension.
Rat decay_exponent(const ProblemParams& p, const Rat& q);

// Exponent-pair constructions from the local theory (witness search over
// eps, tau in {2^-k : k <= 40}, smallest k first).
FeasibilityReport lemma_local_pairs(const ProblemParams& p);

// Scattering pair constructions (window p_i < 2 alpha + 2).
FeasibilityReport lemma_scattering_pairs(const ProblemParams& p);

// Weighted-solution pair constructions (stricter window p_i < alpha + 1),
// d in {2, 3} only.
FeasibilityReport lemma_weighted_pairs(const ProblemParams& p);

// The admissible partner of q: p with 2/p = d/2 - d/q.
Rat admissible_partner(const Rat& q, int d);

}  // namespace inls
