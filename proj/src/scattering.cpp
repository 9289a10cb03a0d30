#include "inls/scattering.hpp"

#include <cmath>

namespace inls {

ComplexField free_propagate_back(const ComplexField& f, double t) {
    if (t == 0) return f;
    const Grid& g = *f.grid;
    const auto& k = g.axis_wavenumbers();
    auto spec = transform_forward(f);
    for (std::size_t idx = 0; idx < spec.size(); ++idx) {
        auto ii = g.unflatten(idx);
        double k2 = 0;
        for (int ax = 0; ax < g.dim(); ++ax) k2 += k[ii[ax]] * k[ii[ax]];
        spec[idx] *= std::polar(1.0, k2 * t);
    }
    return transform_inverse(f.grid, std::move(spec));
}

double sigma_norm(const ComplexField& f) {
    return std::sqrt(mass(f) + kinetic_energy(f)) + std::sqrt(variance(f));
}

ScatterReport cauchy_defect(const std::vector<FieldSnapshot>& run,
                            const std::vector<double>& checkpoints) {
    if (checkpoints.size() < 3) throw ConfigError("need at least 3 checkpoints");
    for (std::size_t i = 1; i < checkpoints.size(); ++i)
        if (!(checkpoints[i] > checkpoints[i - 1]))
            throw ConfigError("checkpoints must be strictly increasing");

    std::vector<ComplexField> psi;
    for (double tc : checkpoints) {
        const FieldSnapshot* found = nullptr;
        for (const auto& snap : run)
            if (std::abs(snap.t - tc) < 1e-9 * std::max(1.0, std::abs(tc))) found = &snap;
        if (!found)
            throw HorizonExceeded("no stored field at checkpoint t = " + std::to_string(tc));
        psi.push_back(free_propagate_back(found->field, tc));
    }

    std::size_t n = psi.size();
    ScatterReport rep;
    rep.checkpoints = checkpoints;
    rep.h1_defects.assign(n, std::vector<double>(n, 0.0));
    rep.sigma_defects.assign(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            ComplexField diff = psi[i];
            for (std::size_t m = 0; m < diff.values.size(); ++m)
                diff.values[m] -= psi[j].values[m];
            double h1 = std::sqrt(mass(diff) + kinetic_energy(diff));
            double sg = h1 + std::sqrt(variance(diff));
            rep.h1_defects[i][j] = rep.h1_defects[j][i] = h1;
            rep.sigma_defects[i][j] = rep.sigma_defects[j][i] = sg;
        }
    }
    rep.state_estimate = psi.back();
    return rep;
}

}  // namespace inls
