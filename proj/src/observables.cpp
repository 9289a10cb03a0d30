#include "inls/observables.hpp"

#include <algorithm>
#include <cmath>

namespace inls {

namespace {

double cell_volume(const Grid& g) {
    double v = 1;
    for (int ax = 0; ax < g.dim(); ++ax) v *= g.spacing();
    return v;
}

double radius_sq(const Grid& g, std::size_t idx) {
    auto ii = g.unflatten(idx);
    const auto& x = g.axis_coords();
    double r2 = 0;
    for (int ax = 0; ax < g.dim(); ++ax) r2 += x[ii[ax]] * x[ii[ax]];
    return r2;
}

void check_series_spacing(const TimeSeries& s) {
    if (s.samples.size() < 3) throw NonUniform("need at least 3 samples");
    double delta = s.samples[1].t - s.samples[0].t;
    for (std::size_t i = 2; i < s.samples.size(); ++i) {
        double di = s.samples[i].t - s.samples[i - 1].t;
        if (std::abs(di - delta) > 1e-12 * std::max(1.0, std::abs(delta)))
            throw NonUniform("sample spacing varies beyond 1e-12");
    }
}

}  // namespace

double mass(const ComplexField& f) {
    double s = 0;
    for (const auto& z : f.values) s += std::norm(z);
    return s * cell_volume(*f.grid);
}

double potential_G(const ComplexField& f, const SingularWeight& w, double alpha) {
    double s = 0;
    for (std::size_t i = 0; i < f.values.size(); ++i)
        s += w.values[i] * std::pow(std::abs(f.values[i]), alpha + 2);
    return s * cell_volume(*f.grid) / (alpha + 2);
}

double kinetic_energy(const ComplexField& f) {
    auto grad = spectral_gradient(f);
    double s = 0;
    for (const auto& comp : grad)
        for (const auto& z : comp.values) s += std::norm(z);
    return s * cell_volume(*f.grid);
}

double energy(const ComplexField& f, const SingularWeight& w, const ProblemParams& p) {
    return 0.5 * kinetic_energy(f) - p.mu * potential_G(f, w, p.alpha.to_double());
}

double variance(const ComplexField& f) {
    double s = 0;
    for (std::size_t i = 0; i < f.values.size(); ++i)
        s += radius_sq(*f.grid, i) * std::norm(f.values[i]);
    return s * cell_volume(*f.grid);
}

std::vector<ComplexField> weighted_field(const ComplexField& f, double t) {
    auto grad = spectral_gradient(f);
    const Grid& g = *f.grid;
    const auto& x = g.axis_coords();
    for (int ax = 0; ax < g.dim(); ++ax) {
        for (std::size_t i = 0; i < f.values.size(); ++i) {
            auto ii = g.unflatten(i);
            grad[ax].values[i] = x[ii[ax]] * f.values[i] + cplx(0, 2 * t) * grad[ax].values[i];
        }
    }
    return grad;
}

double weighted_norm_sq(const ComplexField& f, double t) {
    auto comps = weighted_field(f, t);
    double s = 0;
    for (const auto& c : comps)
        for (const auto& z : c.values) s += std::norm(z);
    return s * cell_volume(*f.grid);
}

ComplexField v_transform(const ComplexField& f, double t) {
    if (t == 0) throw ZeroTime("v transform undefined at t = 0");
    ComplexField v = f;
    for (std::size_t i = 0; i < v.values.size(); ++i)
        v.values[i] *= std::polar(1.0, -radius_sq(*f.grid, i) / (4 * t));
    return v;
}

double lq_norm(const ComplexField& f, double q) {
    if (q < 2) throw ConfigError("lq_norm requires q >= 2");
    if (std::isinf(q)) {
        double m = 0;
        for (const auto& z : f.values) m = std::max(m, std::abs(z));
        return m;
    }
    double s = 0;
    for (const auto& z : f.values) s += std::pow(std::abs(z), q);
    return std::pow(s * cell_volume(*f.grid), 1.0 / q);
}

ObservableSample observe(const ComplexField& f, const SingularWeight& w, const ProblemParams& p,
                         double t, const std::vector<double>& q_values) {
    ObservableSample s;
    s.t = t;
    s.mass = mass(f);
    s.G = potential_G(f, w, p.alpha.to_double());
    s.variance = variance(f);

    // kinetic and the weighted stack share one gradient evaluation
    auto grad = spectral_gradient(f);
    const Grid& g = *f.grid;
    const auto& x = g.axis_coords();
    double kin = 0, wns = 0;
    for (int ax = 0; ax < g.dim(); ++ax) {
        for (std::size_t i = 0; i < f.values.size(); ++i) {
            kin += std::norm(grad[ax].values[i]);
            auto ii = g.unflatten(i);
            wns += std::norm(x[ii[ax]] * f.values[i] + cplx(0, 2 * t) * grad[ax].values[i]);
        }
    }
    s.kinetic = kin * cell_volume(g);
    s.weighted_norm_sq = wns * cell_volume(g);
    s.energy = 0.5 * s.kinetic - p.mu * s.G;
    s.pc_quantity = s.weighted_norm_sq + 8 * t * t * s.G;
    s.h1_norm = std::sqrt(s.mass + s.kinetic);
    s.lq.reserve(q_values.size());
    for (double q : q_values) s.lq.push_back(lq_norm(f, q));
    return s;
}

std::vector<ResidualPoint> virial_residual(const TimeSeries& s) {
    check_series_spacing(s);
    double E0 = s.samples.front().energy;
    double co = s.params.d * s.params.alpha.to_double() + 2 * s.params.b.to_double() - 4;
    double delta = s.samples[1].t - s.samples[0].t;
    double scale = 16 * std::abs(E0);
    std::vector<ResidualPoint> out;
    for (std::size_t i = 1; i + 1 < s.samples.size(); ++i) {
        double fd = (s.samples[i + 1].variance - 2 * s.samples[i].variance +
                     s.samples[i - 1].variance) /
                    (delta * delta);
        double raw = fd - 16 * E0 - 4 * co * s.samples[i].G;
        out.push_back({s.samples[i].t, raw, raw / scale});
    }
    return out;
}

std::vector<ResidualPoint> pseudoconformal_residual(const TimeSeries& s) {
    if (s.samples.empty() || std::abs(s.samples.front().t) > 1e-12)
        throw Error("pseudo-conformal residual needs samples starting at t = 0");
    double co = 4 * (4 - 2 * s.params.b.to_double() - s.params.d * s.params.alpha.to_double());
    double scale = std::abs(s.initial_weighted);
    std::vector<ResidualPoint> out;
    double integral = 0;
    out.push_back({s.samples[0].t, s.samples[0].pc_quantity - s.initial_weighted,
                   (s.samples[0].pc_quantity - s.initial_weighted) / scale});
    for (std::size_t i = 1; i < s.samples.size(); ++i) {
        const auto &a = s.samples[i - 1], &b = s.samples[i];
        integral += 0.5 * (b.t - a.t) * (a.t * a.G + b.t * b.G);
        double raw = b.pc_quantity - (s.initial_weighted + co * integral);
        out.push_back({b.t, raw, raw / scale});
    }
    return out;
}

namespace {

// (slope, stderr) of y against x by least squares.
std::pair<double, double> ls_slope(const std::vector<double>& x, const std::vector<double>& y) {
    std::size_t n = x.size();
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    double slope = sxy / sxx;
    double rss = 0;
    for (std::size_t i = 0; i < n; ++i) {
        double r = y[i] - my - slope * (x[i] - mx);
        rss += r * r;
    }
    double se = n > 2 ? std::sqrt(rss / (n - 2) / sxx) : 0.0;
    return {slope, se};
}

}  // namespace

DecayFit decay_fit(const TimeSeries& s, const Rat& q, double t_a, double t_b) {
    double qd = q.to_double();
    std::size_t col = 0;
    bool found = false;
    for (std::size_t i = 0; i < s.q_values.size(); ++i) {
        if (s.q_values[i] == qd || (std::isinf(qd) && std::isinf(s.q_values[i]))) {
            col = i;
            found = true;
            break;
        }
    }
    if (!found) throw ConfigError("series has no L^q column for q = " + q.str());
    std::vector<double> lx, ly;
    for (const auto& smp : s.samples) {
        if (smp.t >= t_a && smp.t <= t_b) {
            if (smp.t <= 0) throw WindowTooShort("decay window must be in t > 0");
            lx.push_back(std::log(smp.t));
            ly.push_back(std::log(smp.lq[col]));
        }
    }
    if (lx.size() < 8) throw WindowTooShort("need at least 8 samples in the fit window");
    auto [slope, se] = ls_slope(lx, ly);
    DecayFit f;
    f.slope = slope;
    f.stderr_slope = se;
    f.target = -decay_exponent(s.params, q).to_double();
    f.points = static_cast<int>(lx.size());
    return f;
}

GDecayFit g_decay_fit(const TimeSeries& s, double t_a, double t_b) {
    auto th = alpha_thresholds(s.params);
    if (!(s.params.alpha < th.mass_critical))
        throw WrongRegime("g_decay_fit applies to alpha < alpha_star only");
    if (t_a <= 1.0) throw WindowTooShort("window must lie in t > 1");
    std::vector<double> lx, lg, lv;
    for (const auto& smp : s.samples) {
        if (smp.t >= t_a && smp.t <= t_b) {
            lx.push_back(std::log(smp.t));
            lg.push_back(std::log(smp.G));
            lv.push_back(std::log(std::sqrt(smp.weighted_norm_sq) / (2 * smp.t)));
        }
    }
    if (lx.size() < 8) throw WindowTooShort("need at least 8 samples in the fit window");
    GDecayFit f;
    f.g_slope = ls_slope(lx, lg).first;
    f.gradv_slope = ls_slope(lx, lv).first;
    double rate = 2 * s.params.b.to_double() + s.params.d * s.params.alpha.to_double();
    f.g_target = -rate / 2;
    f.gradv_target = -rate / 4;
    f.points = static_cast<int>(lx.size());
    return f;
}

double strichartz_window_norm(const std::vector<FieldSnapshot>& snaps, const Rat& p, const Rat& q,
                              double t_a, double t_b) {
    if (snaps.empty()) throw WindowTooShort("no snapshots");
    int d = snaps.front().field.grid->dim();
    if (!is_admissible({p, q}, d))
        throw NotAdmissible("(" + p.str() + ", " + q.str() + ") is not admissible in d = " +
                            std::to_string(d));
    double qd = q.to_double();
    std::vector<double> norms;
    for (const auto& snap : snaps) {
        if (snap.t >= t_a - 1e-12 && snap.t <= t_b + 1e-12)
            norms.push_back(lq_norm(snap.field, qd));
    }
    if (norms.empty()) throw WindowTooShort("window contains no snapshots");
    if (p.is_inf()) return *std::max_element(norms.begin(), norms.end());
    // the time quadrature uses the series cadence, not the window extent
    if (snaps.size() < 2) throw WindowTooShort("cadence undefined with a single snapshot");
    double dt = snaps[1].t - snaps[0].t;
    double pd = p.to_double();
    double s = 0;
    for (double nq : norms) s += std::pow(nq, pd) * dt;
    return std::pow(s, 1.0 / pd);
}

}  // namespace inls
