// Scalar diagnostics of a field: mass, kinetic term, weighted potential G,
// energy, variance, the weighted field (x + 2it grad)u, the pseudo-conformal
// quantity, L^q norms, residuals of the virial and pseudo-conformal
// identities, decay-slope fits, and windowed space-time (Strichartz) norms.
#pragma once

#include <string>
#include <vector>

#include "inls/exponents.hpp"
#include "inls/grid.hpp"
#include "inls/weight.hpp"

namespace inls {

struct ObservableSample {
    double t = 0;
    double mass = 0;              // h^d sum |u|^2
    double kinetic = 0;           // ||grad u||^2
    double G = 0;                 // (1/(alpha+2)) int W |u|^{alpha+2}
    double energy = 0;            // kinetic/2 - mu G
    double variance = 0;          // ||x u||^2
    double weighted_norm_sq = 0;  // ||(x + 2it grad) u||^2
    double pc_quantity = 0;       // weighted_norm_sq + 8 t^2 G
    double h1_norm = 0;           // sqrt(mass + kinetic)
    std::vector<double> lq;       // aligned with TimeSeries::q_labels
};

struct TimeSeries {
    ProblemParams params;
    std::vector<std::string> q_labels;  // e.g. "2", "4", "inf"
    std::vector<double> q_values;       // numeric q, inf for "inf"
    double initial_weighted = 0;        // ||x u0||^2
    std::vector<ObservableSample> samples;
};

struct FieldSnapshot {
    double t;
    ComplexField field;
};

double mass(const ComplexField& f);
double potential_G(const ComplexField& f, const SingularWeight& w, double alpha);
double kinetic_energy(const ComplexField& f);
double energy(const ComplexField& f, const SingularWeight& w, const ProblemParams& p);
double variance(const ComplexField& f);

// Component j is x_j u + 2 i t (d_j u); the stack's squared L^2 norms sum to
// ||(x + 2it grad) u||^2.
std::vector<ComplexField> weighted_field(const ComplexField& f, double t);
double weighted_norm_sq(const ComplexField& f, double t);

// v = e^{-i |x|^2 / (4t)} u; throws ZeroTime at t = 0.
ComplexField v_transform(const ComplexField& f, double t);

// Discrete L^q norm with the h^{d/q} weighting; q = inf gives max modulus.
double lq_norm(const ComplexField& f, double q);

// Builds one full sample at time t.
ObservableSample observe(const ComplexField& f, const SingularWeight& w, const ProblemParams& p,
                         double t, const std::vector<double>& q_values);

struct ResidualPoint {
    double t;
    double raw;
    double rel;
};

// Central second difference of the variance against 16 E0 + 4(d a + 2b - 4) G;
// relative values are scaled by 16 |E0|.  Throws NonUniform if the sample
// spacing wobbles.
std::vector<ResidualPoint> virial_residual(const TimeSeries& s);

// Two-sided defect of the pseudo-conformal law, trapezoid rule for
// int_0^t s G(s) ds; relative values are scaled by ||x u0||^2.
std::vector<ResidualPoint> pseudoconformal_residual(const TimeSeries& s);

struct DecayFit {
    double slope = 0;
    double stderr_slope = 0;
    double target = 0;  // -decay_exponent(params, q)
    int points = 0;
};

// Least-squares slope of log ||u||_q against log t over [t_a, t_b]
// (>= 8 samples, all t > 0; otherwise WindowTooShort).
DecayFit decay_fit(const TimeSeries& s, const Rat& q, double t_a, double t_b);

struct GDecayFit {
    double g_slope = 0;
    double g_target = 0;  // -(2b + d alpha)/2
    double gradv_slope = 0;
    double gradv_target = 0;  // -(2b + d alpha)/4
    int points = 0;
};

// Slopes of log G and log ||grad v|| against log t; requires alpha < alpha_star
// (else WrongRegime) and a window inside t > 1.
GDecayFit g_decay_fit(const TimeSeries& s, double t_a, double t_b);

// Discrete mixed norm ( sum_t ||f(t)||_q^p dt )^{1/p} over snapshots with
// t in [t_a, t_b]; p = inf takes the sup.  (p, q) must be Schroedinger
// admissible for the snapshot dimension (else NotAdmissible).
double strichartz_window_norm(const std::vector<FieldSnapshot>& snaps, const Rat& p, const Rat& q,
                              double t_a, double t_b);

}  // namespace inls
