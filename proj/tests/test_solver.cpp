#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "inls/solver.hpp"

using namespace inls;

namespace {

constexpr double kPi = 3.14159265358979323846;

SolverState make_state(int d, double L, int n, Rat b, Rat alpha, int mu, double dt,
                       double sigma = 1.0, double A = 1.0) {
    auto g = std::make_shared<const Grid>(d, L, n);
    SolverState s;
    s.t = 0;
    s.params.d = d;
    s.params.b = b;
    s.params.alpha = alpha;
    s.params.mu = mu;
    s.weight = std::make_shared<const SingularWeight>(sample_weight(g, b.to_double()));
    s.dt = dt;
    s.field = gaussian_data(g, A, sigma);
    return s;
}

SingularWeight unit_weight(std::shared_ptr<const Grid> g) {
    SingularWeight w;
    w.grid = g;
    w.b = 0;
    w.values.assign(g->size(), 1.0);
    return w;
}

}  // namespace

TEST_CASE("linear substep: identity, plane wave, free gaussian") {
    auto s = make_state(1, 64.0, 512, Rat(1, 2), Rat(3), -1, 1e-3);
    auto before = s.field.values;
    linear_substep(s, 0.0);
    CHECK(s.field.values == before);

    // plane wave e^{ikx} picks up exactly e^{-i k^2 tau}
    auto g = s.field.grid;
    double k = g->axis_wavenumbers()[3];
    for (std::size_t j = 0; j < g->size(); ++j)
        s.field.values[j] = std::polar(1.0, k * g->axis_coords()[j]);
    double tau = 0.37;
    linear_substep(s, tau);
    for (std::size_t j = 0; j < g->size(); ++j) {
        cplx expect = std::polar(1.0, k * g->axis_coords()[j] - k * k * tau);
        CHECK(std::abs(s.field.values[j] - expect) < 1e-12);
    }

    // free gaussian against the closed form
    s.field = gaussian_data(g, 1.0, 1.0);
    double m0 = mass(s.field);
    double t = 0.5;
    linear_substep(s, t);
    CHECK(mass(s.field) == doctest::Approx(m0).epsilon(1e-13));
    double worst = 0;
    for (std::size_t j = 0; j < g->size(); ++j) {
        double x = g->axis_coords()[j];
        cplx denom(1.0, 2 * t);
        cplx expect = std::exp(-x * x / (2.0 * denom)) / std::sqrt(denom);
        worst = std::max(worst, std::abs(s.field.values[j] - expect));
    }
    CHECK(worst < 1e-8);
}

TEST_CASE("nonlinear substep: identity, modulus invariance, scalar closed form") {
    auto s = make_state(1, 64.0, 512, Rat(1, 2), Rat(3), -1, 1e-3);
    auto before = s.field.values;
    nonlinear_substep(s, 0.0);
    CHECK(s.field.values == before);

    nonlinear_substep(s, 0.2);
    for (std::size_t j = 0; j < before.size(); ++j)
        CHECK(std::abs(std::abs(s.field.values[j]) - std::abs(before[j])) <
              1e-15 + 1e-14 * std::abs(before[j]));

    // constant field with W = 1, alpha = 2, mu = -1, tau = 0.1 -> e^{-0.1 i}
    auto g = std::make_shared<const Grid>(1, 16.0, 8);
    SolverState c;
    c.params.d = 1;
    c.params.b = Rat(1, 2);
    c.params.alpha = Rat(2);
    c.params.mu = -1;
    c.weight = std::make_shared<const SingularWeight>(unit_weight(g));
    c.dt = 0.1;
    c.field = ComplexField::zero(g);
    for (auto& z : c.field.values) z = 1.0;
    nonlinear_substep(c, 0.1);
    for (const auto& z : c.field.values)
        CHECK(std::abs(z - std::polar(1.0, -0.1)) < 1e-15);
}

TEST_CASE("strang step: reversibility") {
    auto s = make_state(1, 128.0, 1024, Rat(1, 2), Rat(3), -1, 1e-3);
    auto initial = s.field.values;

    strang_step(s);
    s.dt = -s.dt;
    strang_step(s);
    double worst = 0;
    for (std::size_t j = 0; j < initial.size(); ++j)
        worst = std::max(worst, std::abs(s.field.values[j] - initial[j]));
    CHECK(worst < 1e-12);

    // forward then backward over 500 + 500 steps
    s = make_state(1, 128.0, 1024, Rat(1, 2), Rat(3), -1, 1e-3);
    for (int i = 0; i < 500; ++i) strang_step(s);
    s.dt = -s.dt;
    for (int i = 0; i < 500; ++i) strang_step(s);
    worst = 0;
    for (std::size_t j = 0; j < initial.size(); ++j)
        worst = std::max(worst, std::abs(s.field.values[j] - initial[j]));
    CHECK(worst < 1e-10);
}

TEST_CASE("evolve: cadence, endpoint sample, mass conservation") {
    auto s = make_state(1, 128.0, 1024, Rat(1, 2), Rat(3), -1, 1e-3);
    EvolveOptions opt;
    opt.sample_every = 10;
    opt.q_values = {2.0};
    opt.q_labels = {"2"};
    auto res = evolve(s, 0.5, opt);
    CHECK(res.series.samples.size() == 51);
    CHECK(res.series.samples.front().t == 0.0);
    CHECK(res.series.samples.back().t == doctest::Approx(0.5));
    double m0 = res.series.samples.front().mass;
    for (const auto& smp : res.series.samples)
        CHECK(std::abs(smp.mass / m0 - 1) < 1e-13 * 500);

    // t_final equal to start time: a single sample
    auto s2 = make_state(1, 128.0, 1024, Rat(1, 2), Rat(3), -1, 1e-3);
    auto res2 = evolve(s2, 0.0, opt);
    CHECK(res2.series.samples.size() == 1);
}

TEST_CASE("strang step: field self-convergence is second order") {
    auto final_field = [&](double dt) {
        auto s = make_state(1, 128.0, 1024, Rat(1, 2), Rat(3), -1, dt);
        int steps = static_cast<int>(std::lround(0.5 / dt));
        for (int i = 0; i < steps; ++i) strang_step(s);
        return s.field;
    };
    auto a = final_field(2e-3), b = final_field(1e-3), c = final_field(5e-4);
    auto l2diff = [&](const ComplexField& u, const ComplexField& v) {
        double s = 0;
        for (std::size_t j = 0; j < u.values.size(); ++j) s += std::norm(u.values[j] - v.values[j]);
        return std::sqrt(s * u.grid->spacing());
    };
    double ratio = l2diff(a, b) / l2diff(b, c);
    CHECK(ratio > 3.2);
    CHECK(ratio < 4.8);
}

TEST_CASE("evolve: self-convergence of the energy drift is second order") {
    auto drift = [&](double dt) {
        auto s = make_state(1, 256.0, 4096, Rat(1, 2), Rat(3), -1, dt);
        EvolveOptions opt;
        opt.sample_every = static_cast<int>(std::lround(0.01 / dt));
        auto res = evolve(s, 1.0, opt);
        double e0 = res.series.samples.front().energy, worst = 0;
        for (const auto& smp : res.series.samples)
            worst = std::max(worst, std::abs(smp.energy / e0 - 1));
        return worst;
    };
    double d1 = drift(1e-3), d2 = drift(5e-4);
    CHECK(d1 / d2 > 3.2);
    CHECK(d1 / d2 < 4.8);
}

TEST_CASE("evolve guards") {
    // focusing blow-up (mass-supercritical power): with the other guards
    // disarmed, the sup-norm overflow guard fires in finite time
    auto s = make_state(1, 32.0, 512, Rat(1, 2), Rat(4), +1, 1e-4, 1.0, 2.0);
    {
        EvolveOptions opt;
        opt.sample_every = 5;
        opt.boundary_tol = 2.0;
        opt.spectral_tail_tol = 2.0;
        // the discrete collapse arrests near 2.9x once it reaches the grid
        // scale, so a 2x bound is what the guard can be exercised against
        opt.overflow_factor = 2.0;
        bool overflow = false;
        try {
            (void)evolve(s, 1.0, opt);
        } catch (const GuardError& e) {
            overflow = true;
            CHECK(e.kind == GuardError::Kind::Overflow);
        }
        CHECK(overflow);
    }

    // a box too small for the dispersive spread contaminates the boundary
    auto s2 = make_state(1, 16.0, 128, Rat(1, 2), Rat(3), -1, 1e-3);
    {
        EvolveOptions opt;
        opt.sample_every = 5;
        bool hit = false;
        try {
            (void)evolve(s2, 4.0, opt);
        } catch (const GuardError& e) {
            hit = true;
            CHECK(e.kind == GuardError::Kind::BoundaryContamination);
        }
        CHECK(hit);
    }

    // a concentrated top-octave wave packet trips the spectral-tail monitor
    auto s3 = make_state(1, 32.0, 256, Rat(1, 2), Rat(2), -1, 1e-3);
    auto g = s3.field.grid;
    int m = g->n() / 3;
    double k = 2 * kPi * m / g->extent();
    for (std::size_t j = 0; j < g->size(); ++j) {
        double x = g->axis_coords()[j];
        s3.field.values[j] = 0.1 * std::exp(-x * x / 8.0) * std::polar(1.0, k * x);
    }
    {
        EvolveOptions opt;
        opt.sample_every = 5;
        bool tail = false;
        try {
            (void)evolve(s3, 0.1, opt);
        } catch (const GuardError& e) {
            tail = true;
            CHECK(e.kind == GuardError::Kind::SpectralTail);
        }
        CHECK(tail);
    }
}

TEST_CASE("evolve: checkpoints and snapshots are recorded") {
    auto s = make_state(1, 128.0, 512, Rat(1, 2), Rat(3), -1, 1e-3);
    EvolveOptions opt;
    opt.sample_every = 10;
    opt.checkpoint_times = {0.1, 0.2};
    opt.snapshot_every = 2;
    auto res = evolve(s, 0.3, opt);
    REQUIRE(res.checkpoints.size() == 2);
    CHECK(res.checkpoints[0].t == doctest::Approx(0.1));
    CHECK(res.checkpoints[1].t == doctest::Approx(0.2));
    CHECK(res.snapshots.size() >= 10);
}
