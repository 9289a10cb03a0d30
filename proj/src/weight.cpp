#include "inls/weight.hpp"

#include <cmath>
#include <functional>

namespace inls {

namespace {

struct Box {
    double lo[3];
    double hi[3];
};

// 16-point Gauss-Legendre nodes/weights on [-1, 1].
constexpr int kGL = 16;
constexpr double kNode[kGL] = {
    -0.9894009349916499, -0.9445750230732326, -0.8656312023878318, -0.7554044083550030,
    -0.6178762444026438, -0.4580167776572274, -0.2816035507792589, -0.0950125098376374,
    0.0950125098376374,  0.2816035507792589,  0.4580167776572274,  0.6178762444026438,
    0.7554044083550030,  0.8656312023878318,  0.9445750230732326,  0.9894009349916499};
constexpr double kWeight[kGL] = {
    0.0271524594117541, 0.0622535239386479, 0.0951585116824928, 0.1246289712555339,
    0.1495959888165767, 0.1691565193950025, 0.1826034150449236, 0.1894506104550685,
    0.1894506104550685, 0.1826034150449236, 0.1691565193950025, 0.1495959888165767,
    0.1246289712555339, 0.0951585116824928, 0.0622535239386479, 0.0271524594117541};

double gl_box(int d, const Box& box, const std::function<double(const double*)>& f) {
    double mid[3], rad[3];
    for (int ax = 0; ax < d; ++ax) {
        mid[ax] = 0.5 * (box.lo[ax] + box.hi[ax]);
        rad[ax] = 0.5 * (box.hi[ax] - box.lo[ax]);
    }
    double sum = 0;
    int count = 1;
    for (int ax = 0; ax < d; ++ax) count *= kGL;
    for (int flat = 0; flat < count; ++flat) {
        int rem = flat;
        double x[3], w = 1;
        for (int ax = 0; ax < d; ++ax) {
            int i = rem % kGL;
            rem /= kGL;
            x[ax] = mid[ax] + rad[ax] * kNode[i];
            w *= kWeight[i] * rad[ax];
        }
        sum += w * f(x);
    }
    return sum;
}

double adaptive_box(int d, const Box& box, const std::function<double(const double*)>& f,
                    double tol, int depth) {
    double whole = gl_box(d, box, f);
    if (depth >= 12) return whole;
    // split every axis in half and compare
    int children = 1 << d;
    double refined = 0;
    for (int c = 0; c < children; ++c) {
        Box sub;
        for (int ax = 0; ax < d; ++ax) {
            double m = 0.5 * (box.lo[ax] + box.hi[ax]);
            if (c & (1 << ax)) {
                sub.lo[ax] = m;
                sub.hi[ax] = box.hi[ax];
            } else {
                sub.lo[ax] = box.lo[ax];
                sub.hi[ax] = m;
            }
        }
        refined += gl_box(d, sub, f);
    }
    if (std::abs(refined - whole) <= tol * std::max(1e-300, std::abs(refined))) return refined;
    double sum = 0;
    for (int c = 0; c < children; ++c) {
        Box sub;
        for (int ax = 0; ax < d; ++ax) {
            double m = 0.5 * (box.lo[ax] + box.hi[ax]);
            if (c & (1 << ax)) {
                sub.lo[ax] = m;
                sub.hi[ax] = box.hi[ax];
            } else {
                sub.lo[ax] = box.lo[ax];
                sub.hi[ax] = m;
            }
        }
        sum += adaptive_box(d, sub, f, tol, depth + 1);
    }
    return sum;
}

// Integral over [-s,s]^d minus [-s/2,s/2]^d, where |x| >= s/2.
double shell_integral(int d, double s, double b, double tol) {
    auto f = [d, b](const double* x) {
        double r2 = 0;
        for (int ax = 0; ax < d; ++ax) r2 += x[ax] * x[ax];
        return std::pow(r2, -b / 2);
    };
    const double cuts[5] = {-s, -s / 2, 0, s / 2, s};
    double total = 0;
    int boxes = 1;
    for (int ax = 0; ax < d; ++ax) boxes *= 4;
    for (int flat = 0; flat < boxes; ++flat) {
        int rem = flat;
        Box box;
        bool inner = true;
        for (int ax = 0; ax < d; ++ax) {
            int i = rem % 4;
            rem /= 4;
            box.lo[ax] = cuts[i];
            box.hi[ax] = cuts[i + 1];
            inner = inner && (i == 1 || i == 2);
        }
        if (inner) continue;
        total += adaptive_box(d, box, f, tol, 0);
    }
    return total;
}

}  // namespace

double origin_cell_average(int d, double h, double b) {
    if (!(b < d)) throw BadExponent("cell average of |x|^-b diverges for b >= d");
    double s = h / 2;
    double shell = shell_integral(d, s, b, 1e-12);
    double integral = shell / (1.0 - std::pow(2.0, b - d));
    return integral / std::pow(h, d);
}

SingularWeight sample_weight(std::shared_ptr<const Grid> g, double b) {
    if (!(b > 0) || !(b < g->dim()))
        throw BadExponent("weight exponent must satisfy 0 < b < d");
    SingularWeight w;
    w.grid = g;
    w.b = b;
    w.values.resize(g->size());
    const auto& x = g->axis_coords();
    const double h = g->spacing();
    const double origin = origin_cell_average(g->dim(), h, b);
    for (std::size_t idx = 0; idx < w.values.size(); ++idx) {
        auto ii = g->unflatten(idx);
        double r2 = 0;
        for (int ax = 0; ax < g->dim(); ++ax) r2 += x[ii[ax]] * x[ii[ax]];
        // the origin lands exactly on a grid point (n even); match it by
        // distance below half a spacing to be robust to rounding
        if (r2 < (h * h) / 16)
            w.values[idx] = origin;
        else
            w.values[idx] = std::pow(r2, -b / 2);
    }
    return w;
}

}  // namespace inls
