#include "inls/solver.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

namespace inls {

namespace {

using lcplx = std::complex<long double>;

// Linear-multiplier table e^{-i k^2 tau} in extended precision.
std::vector<lcplx> linear_multiplier(const Grid& g, double tau) {
    const auto& k = g.axis_wavenumbers();
    std::vector<lcplx> mult(g.size());
    for (std::size_t idx = 0; idx < mult.size(); ++idx) {
        auto ii = g.unflatten(idx);
        long double k2 = 0;
        for (int ax = 0; ax < g.dim(); ++ax)
            k2 += static_cast<long double>(k[ii[ax]]) * k[ii[ax]];
        mult[idx] = std::polar(1.0L, -k2 * static_cast<long double>(tau));
    }
    return mult;
}

// Shared table cache; an evolution hits the same (grid, tau) every step.
const std::vector<lcplx>& cached_multiplier(const Grid& g, double tau) {
    struct Key {
        int d;
        int n;
        double L;
        double tau;
        bool operator<(const Key& o) const {
            return std::tie(d, n, L, tau) < std::tie(o.d, o.n, o.L, o.tau);
        }
    };
    static std::mutex m;
    static std::map<Key, std::vector<lcplx>> cache;
    std::lock_guard<std::mutex> lock(m);
    Key key{g.dim(), g.n(), g.extent(), tau};
    auto it = cache.find(key);
    if (it == cache.end()) {
        if (cache.size() > 64) cache.clear();
        it = cache.emplace(key, linear_multiplier(g, tau)).first;
    }
    return it->second;
}

thread_local std::vector<lcplx> linear_workspace;

}  // namespace

void linear_substep(SolverState& s, double tau) {
    if (tau == 0) return;
    auto& vals = s.field.values;
    auto spec = spectral_long_for(*s.field.grid);
    const auto& mult = cached_multiplier(*s.field.grid, tau);
    auto& wk = linear_workspace;
    wk.resize(vals.size());
    for (std::size_t i = 0; i < vals.size(); ++i) wk[i] = vals[i];
    spec->forward(wk);
    for (std::size_t i = 0; i < wk.size(); ++i) wk[i] *= mult[i];
    spec->inverse(wk);
    for (std::size_t i = 0; i < vals.size(); ++i)
        vals[i] = cplx(static_cast<double>(wk[i].real()), static_cast<double>(wk[i].imag()));
}

void nonlinear_substep(SolverState& s, double tau) {
    if (tau == 0) return;
    const double alpha = s.params.alpha.to_double();
    const double mu = s.params.mu;
    const auto& W = s.weight->values;
    auto& vals = s.field.values;
    for (std::size_t i = 0; i < vals.size(); ++i) {
        double amp = std::pow(std::norm(vals[i]), alpha / 2);
        if (!std::isfinite(amp))
            throw GuardError(GuardError::Kind::Overflow, s.t,
                             "|u|^alpha overflowed in the nonlinear substep");
        vals[i] *= std::polar(1.0, mu * W[i] * amp * tau);
    }
}

void strang_step(SolverState& s) {
    nonlinear_substep(s, s.dt / 2);
    linear_substep(s, s.dt);
    nonlinear_substep(s, s.dt / 2);
    s.t += s.dt;
}

double boundary_mass_fraction(const ComplexField& f, int edge_cells) {
    const Grid& g = *f.grid;
    double total = 0, edge = 0;
    for (std::size_t idx = 0; idx < f.values.size(); ++idx) {
        double m = std::norm(f.values[idx]);
        total += m;
        auto ii = g.unflatten(idx);
        for (int ax = 0; ax < g.dim(); ++ax) {
            if (ii[ax] < edge_cells || ii[ax] >= g.n() - edge_cells) {
                edge += m;
                break;
            }
        }
    }
    return total > 0 ? edge / total : 0.0;
}

double spectral_tail_fraction(const ComplexField& f) {
    const Grid& g = *f.grid;
    auto spec = transform_forward(f);
    double total = 0, tail = 0;
    for (std::size_t idx = 0; idx < spec.size(); ++idx) {
        double m = std::norm(spec[idx]);
        total += m;
        auto ii = g.unflatten(idx);
        bool top = false;
        for (int ax = 0; ax < g.dim(); ++ax) {
            int mode = ii[ax] < g.n() / 2 ? ii[ax] : ii[ax] - g.n();
            if (std::abs(mode) >= g.n() / 4) top = true;
        }
        if (top) tail += m;
    }
    return total > 0 ? tail / total : 0.0;
}

EvolveResult evolve(SolverState& s, double t_final, const EvolveOptions& opt) {
    if (!(t_final >= s.t)) throw ConfigError("t_final must be >= current time");
    const double t0 = s.t;
    const long nsteps = std::lround((t_final - t0) / s.dt);
    if (std::abs(t0 + nsteps * s.dt - t_final) > 1e-9 * std::max(1.0, std::abs(t_final)))
        throw ConfigError("t_final must be an integer number of steps from t");

    EvolveResult out;
    out.series.params = s.params;
    out.series.q_values = opt.q_values;
    out.series.q_labels = opt.q_labels;

    double linf0 = 0;
    for (const auto& z : s.field.values) linf0 = std::max(linf0, std::abs(z));

    auto checkpoint_due = [&](double t) {
        for (double tc : opt.checkpoint_times)
            if (std::abs(t - tc) < s.dt / 2) return true;
        return false;
    };

    long sample_count = 0;
    auto take_sample = [&](double t) {
        auto smp = observe(s.field, *s.weight, s.params, t, opt.q_values);
        out.series.samples.push_back(smp);
        ++sample_count;
        if (opt.snapshot_every > 0 && (sample_count - 1) % opt.snapshot_every == 0)
            out.snapshots.push_back({t, s.field});

        double bf = boundary_mass_fraction(s.field, opt.boundary_cells);
        if (bf > opt.boundary_tol)
            throw GuardError(GuardError::Kind::BoundaryContamination, t,
                             "mass fraction near the box edge is " + std::to_string(bf));
        double st = spectral_tail_fraction(s.field);
        if (st > opt.spectral_tail_tol)
            throw GuardError(GuardError::Kind::SpectralTail, t,
                             "top-octave spectral fraction is " + std::to_string(st));
        double linf = 0;
        for (const auto& z : s.field.values) linf = std::max(linf, std::abs(z));
        if (linf > opt.overflow_factor * std::max(linf0, 1e-300))
            throw GuardError(GuardError::Kind::Overflow, t,
                             "L^inf grew by more than the overflow factor");
    };

    take_sample(t0);
    out.series.initial_weighted = out.series.samples.front().weighted_norm_sq;
    if (checkpoint_due(t0)) out.checkpoints.push_back({t0, s.field});

    for (long i = 1; i <= nsteps; ++i) {
        strang_step(s);
        s.t = t0 + i * s.dt;  // keep sample spacing exact to rounding
        bool last = i == nsteps;
        if (i % opt.sample_every == 0 || last) take_sample(s.t);
        if (checkpoint_due(s.t)) out.checkpoints.push_back({s.t, s.field});
    }
    return out;
}

}  // namespace inls
