// Strang-split time integration of i u_t + Lap u + mu |x|^{-b} |u|^alpha u = 0.
//
// Both substeps are exactly unitary: the linear flow is the Fourier
// multiplier e^{-i |k|^2 tau}, and the nonlinear flow is the pointwise phase
// rotation u -> u e^{i mu W |u|^alpha tau} (the modulus is a pointwise
// invariant of that ODE, so the substep is solved in closed form).
#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "inls/exponents.hpp"
#include "inls/grid.hpp"
#include "inls/observables.hpp"
#include "inls/weight.hpp"

namespace inls {

struct SolverState {
    double t = 0;
    ComplexField field;
    ProblemParams params;
    std::shared_ptr<const SingularWeight> weight;
    double dt = 1e-3;
};

// Multiplies spectral coefficients by e^{-i |k|^2 tau}.
void linear_substep(SolverState& s, double tau);

// Pointwise u <- u e^{i mu W |u|^alpha tau}; throws GuardError(Overflow)
// if |u|^alpha is not finite.
void nonlinear_substep(SolverState& s, double tau);

// nonlinear(dt/2), linear(dt), nonlinear(dt/2); advances t by dt.
void strang_step(SolverState& s);

struct EvolveOptions {
    int sample_every = 10;             // steps between observable samples
    std::vector<double> q_values;      // L^q norms recorded per sample
    std::vector<std::string> q_labels;
    std::vector<double> checkpoint_times;  // fields stored at these times
    int snapshot_every = 0;                // store field every k-th sample (0 = off)

    // Numerical guards, checked at sample times.
    int boundary_cells = 8;           // width (in cells/side) of the edge zone
    double boundary_tol = 1e-4;       // mass fraction allowed in that zone
    double spectral_tail_tol = 1e-2;  // |u-hat|^2 fraction in the top octave
    double overflow_factor = 1e6;     // L^inf growth bound
};

struct EvolveResult {
    TimeSeries series;
    std::vector<FieldSnapshot> checkpoints;
    std::vector<FieldSnapshot> snapshots;
};

// Repeated strang_step with sampling every sample_every steps; samples
// always include t = start and t = t_final.  Throws GuardError when a
// monitor trips.  t_final must be an integer number of steps away.
EvolveResult evolve(SolverState& s, double t_final, const EvolveOptions& opt);

// Monitor primitives (exposed for tests).
double boundary_mass_fraction(const ComplexField& f, int edge_cells = 8);
double spectral_tail_fraction(const ComplexField& f);

}  // namespace inls
