// Scattering-state diagnostics: the backward free propagation
// psi(t) = e^{-it Lap} u(t) and its Cauchy defects in H^1 and Sigma.
#pragma once

#include <vector>

#include "inls/grid.hpp"
#include "inls/observables.hpp"

namespace inls {

// Applies the multiplier e^{+i |k|^2 t}, undoing the free flow.
ComplexField free_propagate_back(const ComplexField& f, double t);

// ||u||_Sigma = sqrt(mass + kinetic) + ||x u||_2.
double sigma_norm(const ComplexField& f);

struct ScatterReport {
    std::vector<double> checkpoints;
    std::vector<std::vector<double>> h1_defects;     // ||psi_i - psi_j||_{H^1}
    std::vector<std::vector<double>> sigma_defects;  // + ||x (psi_i - psi_j)||
    ComplexField state_estimate;                     // psi at the largest t
};

// Computes psi(t_i) = free_propagate_back(u(t_i), t_i) from the stored run
// checkpoints and fills the defect matrices.  Checkpoints must be
// increasing, at least 3, and all present in `run` (else HorizonExceeded).
ScatterReport cauchy_defect(const std::vector<FieldSnapshot>& run,
                            const std::vector<double>& checkpoints);

}  // namespace inls
