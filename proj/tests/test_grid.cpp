#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "inls/grid.hpp"
#include "inls/observables.hpp"
#include "inls/weight.hpp"

using namespace inls;

namespace {

constexpr double kPi = 3.14159265358979323846;

std::shared_ptr<const Grid> grid(int d, double L, int n) {
    return std::make_shared<const Grid>(d, L, n);
}

ComplexField random_field(std::shared_ptr<const Grid> g, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> dist;
    auto f = ComplexField::zero(g);
    for (auto& z : f.values) z = {dist(rng), dist(rng)};
    return f;
}

// adaptive Simpson on [a, b], used as the quadrature oracle in these tests
double simpson(const std::function<double(double)>& f, double a, double b, double tol,
               int depth = 0) {
    double m = 0.5 * (a + b);
    auto s = [&](double x0, double x2) {
        double x1 = 0.5 * (x0 + x2);
        return (x2 - x0) / 6 * (f(x0) + 4 * f(x1) + f(x2));
    };
    double whole = s(a, b), left = s(a, m), right = s(m, b);
    if (depth > 48 || std::abs(left + right - whole) < 15 * tol)
        return left + right + (left + right - whole) / 15;
    return simpson(f, a, m, tol / 2, depth + 1) + simpson(f, m, b, tol / 2, depth + 1);
}

}  // namespace

TEST_CASE("grid construction") {
    auto g = grid(1, 16, 16);
    CHECK(g->spacing() == doctest::Approx(1.0));
    CHECK(g->axis_coords().front() == doctest::Approx(-8.0));

    auto g2 = grid(2, 2 * kPi, 8);
    // wavenumbers are the integers -4..3 in FFT order
    const auto& k = g2->axis_wavenumbers();
    CHECK(k[0] == doctest::Approx(0.0));
    CHECK(k[1] == doctest::Approx(1.0));
    CHECK(k[4] == doctest::Approx(-4.0));
    CHECK(k[7] == doctest::Approx(-1.0));

    CHECK_THROWS_AS(Grid(3, 16, 4), BadSize);
    CHECK_THROWS_AS(Grid(1, 16, 24), BadSize);   // not a power of two
    CHECK_THROWS_AS(Grid(4, 16, 16), BadSize);   // d > 3
}

TEST_CASE("transform round trip and Parseval") {
    for (int d : {1, 2}) {
        auto g = grid(d, 20.0, d == 1 ? 256 : 64);
        auto f = random_field(g, 7 + d);
        auto spec = transform_forward(f);
        auto back = transform_inverse(g, spec);
        double worst = 0, scale = 0;
        for (std::size_t i = 0; i < f.values.size(); ++i) {
            worst = std::max(worst, std::abs(back.values[i] - f.values[i]));
            scale = std::max(scale, std::abs(f.values[i]));
        }
        CHECK(worst / scale < 1e-12);

        double direct = 0;
        for (const auto& z : f.values) direct += std::norm(z);
        double spectral = 0;
        for (const auto& z : spec) spectral += std::norm(z);
        spectral /= static_cast<double>(g->size());
        CHECK(direct == doctest::Approx(spectral).epsilon(1e-12));
    }
}

TEST_CASE("constant and plane-wave spectra") {
    auto g = grid(1, 2 * kPi, 16);
    auto f = ComplexField::zero(g);
    for (auto& z : f.values) z = 2.5;
    auto spec = transform_forward(f);
    CHECK(std::abs(spec[0] - cplx(2.5 * 16, 0)) < 1e-12);
    for (std::size_t m = 1; m < spec.size(); ++m) CHECK(std::abs(spec[m]) < 1e-12);

    for (std::size_t j = 0; j < f.values.size(); ++j)
        f.values[j] = std::polar(1.0, g->axis_coords()[j]);
    spec = transform_forward(f);
    for (std::size_t m = 0; m < spec.size(); ++m)
        if (m != 1) CHECK(std::abs(spec[m]) < 1e-10);
    CHECK(std::abs(spec[1]) == doctest::Approx(16.0));
}

TEST_CASE("spectral gradient") {
    auto g = grid(1, 2 * kPi, 64);
    auto f = ComplexField::zero(g);
    for (auto& z : f.values) z = 3.0;
    auto grad = spectral_gradient(f);
    for (const auto& z : grad[0].values) CHECK(std::abs(z) < 1e-12);

    // d/dx e^{ix} = i e^{ix}, exact for a resolved mode
    for (std::size_t j = 0; j < f.values.size(); ++j)
        f.values[j] = std::polar(1.0, g->axis_coords()[j]);
    grad = spectral_gradient(f);
    for (std::size_t j = 0; j < f.values.size(); ++j)
        CHECK(std::abs(grad[0].values[j] - cplx(0, 1) * f.values[j]) < 1e-12);

    // Gaussian derivative against the analytic formula
    auto gg = grid(1, 40.0, 512);
    auto u = gaussian_data(gg, 1.0, 1.5);
    auto du = spectral_gradient(u);
    double worst = 0;
    for (std::size_t j = 0; j < u.values.size(); ++j) {
        double x = gg->axis_coords()[j];
        double expect = -(x / (1.5 * 1.5)) * std::exp(-x * x / (2 * 1.5 * 1.5));
        worst = std::max(worst, std::abs(du[0].values[j].real() - expect));
    }
    CHECK(worst < 1e-8);
}

TEST_CASE("gaussian data") {
    auto g = grid(1, 32.0, 1024);
    auto u = gaussian_data(g, 1.0, 1.0);
    CHECK(mass(u) == doctest::Approx(std::sqrt(kPi)).epsilon(1e-10));

    auto z = gaussian_data(g, 0.0, 1.0);
    for (const auto& v : z.values) CHECK(std::abs(v) == 0.0);

    CHECK_THROWS_AS((void)gaussian_data(g, 1.0, 64.0), TailTooFat);

    // phase factor shifts the spectrum but not the modulus
    auto up = gaussian_data(g, 1.0, 1.0, {0, 0, 0}, {2.0, 0, 0});
    for (std::size_t j = 0; j < u.values.size(); ++j)
        CHECK(std::abs(std::abs(up.values[j]) - std::abs(u.values[j])) < 1e-14);
}

TEST_CASE("singular weight: 1d values and origin cell") {
    auto g = grid(1, 32.0, 256);  // h = 1/8
    double h = g->spacing();
    auto w = sample_weight(g, 0.5);
    // at x = 1 the weight is exactly 1
    std::size_t j1 = 0;
    for (std::size_t j = 0; j < g->size(); ++j)
        if (std::abs(g->axis_coords()[j] - 1.0) < 1e-12) j1 = j;
    CHECK(w.values[j1] == doctest::Approx(1.0));

    // origin cell: closed form (1/h) int_{-h/2}^{h/2} |x|^{-1/2} = 2 sqrt(2/h)
    std::size_t j0 = g->size() / 2;
    CHECK(g->axis_coords()[j0] == doctest::Approx(0.0));
    CHECK(w.values[j0] == doctest::Approx(2 * std::sqrt(2 / h)).epsilon(1e-10));

    // and against the independent quadrature oracle
    double oracle = 2 * simpson([&](double x) { return std::pow(std::abs(x) + 1e-300, -0.5); },
                                1e-14, h / 2, 1e-13) /
                    h;
    CHECK(w.values[j0] == doctest::Approx(oracle).epsilon(1e-6));

    // b -> 0 limit: all values -> 1
    auto w0 = sample_weight(g, 1e-9);
    for (std::size_t j = 0; j < g->size(); ++j) CHECK(w0.values[j] == doctest::Approx(1.0).epsilon(1e-6));

    CHECK_THROWS_AS((void)sample_weight(g, 1.0), BadExponent);  // b >= d
    CHECK_THROWS_AS((void)origin_cell_average(2, 0.5, 2.0), BadExponent);
}

TEST_CASE("singular weight: symmetry and origin dominance") {
    for (int d : {1, 2}) {
        auto g = grid(d, 16.0, d == 1 ? 64 : 32);
        auto w = sample_weight(g, d == 1 ? 0.5 : 1.2);
        int n = g->n();
        if (d == 1) {
            for (int j = 1; j < n; ++j) CHECK(w.values[j] == doctest::Approx(w.values[n - j]));
        } else {
            auto at = [&](int i, int j) { return w.values[static_cast<std::size_t>(i) * n + j]; };
            for (int i = 1; i < n; ++i)
                for (int j = 1; j < n; ++j)
                    CHECK(at(i, j) == doctest::Approx(at(n - i, n - j)));
        }
        // cell-averaged origin value dominates the nearest off-origin sample
        std::size_t j0 = 0;
        double r_best = 1e30;
        for (std::size_t j = 0; j < g->size(); ++j) {
            auto ii = g->unflatten(j);
            double r2 = 0;
            for (int ax = 0; ax < d; ++ax) {
                double x = g->axis_coords()[ii[ax]];
                r2 += x * x;
            }
            if (r2 < r_best) {
                r_best = r2;
                j0 = j;
            }
        }
        std::size_t jn = j0 + 1;
        CHECK(w.values[j0] >= w.values[jn]);
    }
}

TEST_CASE("origin cell average: d=2 polar oracle and d=3 consistency") {
    // d=2: int_{[-s,s]^2} |x|^{-b} = (s^{2-b}/(2-b)) * 8 int_0^{pi/4} cos(t)^{b-2} dt
    double h = 0.5, b = 0.5, s = h / 2;
    double oracle = std::pow(s, 2 - b) / (2 - b) * 8 *
                    simpson([&](double t) { return std::pow(std::cos(t), b - 2); }, 0, kPi / 4,
                            1e-13);
    CHECK(origin_cell_average(2, h, b) == doctest::Approx(oracle / (h * h)).epsilon(1e-9));

    // d=3: midpoint Riemann oracle over one octant (integrand smooth away
    // from the origin corner; midpoint converges through the |x|^{-b} there)
    double b3 = 1.2;
    auto riemann = [&](int n) {
        double sum = 0, step = s / n;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    double x = (i + 0.5) * step, y = (j + 0.5) * step, z = (k + 0.5) * step;
                    sum += std::pow(x * x + y * y + z * z, -b3 / 2);
                }
        return 8 * sum * step * step * step;
    };
    // Richardson-extrapolate two resolutions
    double c1 = riemann(96), c2 = riemann(192);
    double extrap = c2 + (c2 - c1) / 2.3;
    CHECK(origin_cell_average(3, h, b3) == doctest::Approx(extrap / (h * h * h)).epsilon(3e-4));
}
