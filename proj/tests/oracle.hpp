// Test-side brute-force oracle for the lemma feasibility engines.
//
// Independent decision route: instead of the cleared-denominator
// polynomials the engine evaluates, this oracle derives each pair's time
// exponent p from admissibility and compares p against the stated window
// (p > alpha+2 for the local estimates, p < 2 alpha+2 for scattering,
// p < alpha+1 for the weighted bounds), scanning every witness
// eps, tau in {2^-k : k <= 20}.
#pragma once

#include "inls/exponents.hpp"

namespace oracle {

using inls::ProblemParams;
using inls::Rat;

constexpr int kMaxK = 20;

inline Rat partner_p(const Rat& q, int d) {
    // 2/p = d/2 - d/q
    Rat rhs = Rat(d, 2) - Rat(d) * q.inv();
    if (rhs.is_zero()) return Rat::inf();
    return Rat(2) / rhs;
}

inline bool in_open(const Rat& v, const Rat& lo, const Rat& hi) { return v > lo && v < hi; }

template <typename F>
bool scan_eps(F&& ok) {
    for (int k = 1; k <= kMaxK; ++k)
        if (ok(Rat::pow2(-k))) return true;
    return false;
}

template <typename F>
bool scan_eps_tau(F&& ok) {
    for (int ke = 1; ke <= kMaxK; ++ke)
        for (int kt = 1; kt <= kMaxK; ++kt)
            if (ok(Rat::pow2(-ke), Rat::pow2(-kt))) return true;
    return false;
}

inline bool local_feasible(const ProblemParams& pp) {
    const Rat &a = pp.alpha, &b = pp.b;
    Rat d(pp.d);
    Rat a_sup = pp.d >= 3 ? (Rat(4) - Rat(2) * b) / Rat(pp.d - 2) : Rat::inf();

    if (pp.d >= 4 || (pp.d == 3 && b < Rat(1))) {
        if (!(a < a_sup)) return false;
        Rat q2 = d * (a + Rat(2)) / (d + a);
        Rat p2 = partner_p(q2, pp.d);
        if (!(p2 > a + Rat(2))) return false;
        return scan_eps([&](const Rat& eps) {
            Rat q1 = d * (a + Rat(2)) / (d + a - b) + eps;
            if (!(q1 < d)) return false;
            if (!in_open(q1, Rat(2), Rat(2 * pp.d, pp.d - 2))) return false;
            return partner_p(q1, pp.d) > a + Rat(2);
        });
    }
    if (pp.d == 3) {  // 1 <= b < 3/2 branch
        if (!(b >= Rat(1) && b < Rat(3, 2))) return false;
        if (!(a < (Rat(6) - Rat(4) * b) / (Rat(2) * b - Rat(1)))) return false;
        Rat q2 = Rat(3) * (a + Rat(2)) / (Rat(3) + a);
        if (!(partner_p(q2, 3) > a + Rat(2))) return false;
        return scan_eps_tau([&](const Rat& eps, const Rat& tau) {
            Rat q1a = Rat(3) * (Rat(2) + a * tau) / (Rat(3) - b) + eps;
            Rat q1b = Rat(3) * (Rat(1) + (a + Rat(1)) * tau) / (Rat(2) - b) + eps;
            if (!(q1a >= Rat(3) && q1a < Rat(6))) return false;
            if (!(q1b >= Rat(3) && q1b < Rat(6))) return false;
            return partner_p(q1a, 3) > a + Rat(2) && partner_p(q1b, 3) > a + Rat(2);
        });
    }
    if (pp.d == 2) {
        if (!(b < Rat(1))) return false;
        return scan_eps_tau([&](const Rat& eps, const Rat& tau) {
            Rat da = Rat(1) - b - a * tau;
            Rat db = Rat(1) - b - (a + Rat(1)) * tau;
            if (!(da > Rat(0) && db > Rat(0))) return false;
            Rat q1a = Rat(2) / da + eps;
            Rat q1b = Rat(2) / db + eps;
            return q1a > Rat(2) && q1b > Rat(2) && Rat(2) / q1a < da && Rat(2) / q1b < db;
        });
    }
    return false;
}

inline bool scattering_feasible(const ProblemParams& pp) {
    const Rat &a = pp.alpha, &b = pp.b;
    Rat d(pp.d);
    Rat a_star = (Rat(4) - Rat(2) * b) / d;

    if (pp.d >= 4) {
        Rat a_sup = (Rat(4) - Rat(2) * b) / Rat(pp.d - 2);
        if (!(a >= a_star && a < a_sup)) return false;
        if (!(d * a * a + (d - Rat(2) + Rat(2) * b) * a + Rat(2) * b - Rat(4) > Rat(0)))
            return false;
        return scan_eps([&](const Rat& eps) {
            Rat q1 = d * (a + Rat(2)) / (d - b) + eps;
            Rat q2 = d * (a + Rat(2)) / (d - b) - eps;
            Rat hi(2 * pp.d, pp.d - 2);
            if (!(in_open(q1, Rat(2), hi) && in_open(q2, Rat(2), hi) && q1 < d)) return false;
            return partner_p(q1, pp.d) < Rat(2) * a + Rat(2) &&
                   partner_p(q2, pp.d) < Rat(2) * a + Rat(2);
        });
    }
    if (pp.d == 3) {
        if (!(b < Rat(5, 4))) return false;
        if (!(a >= a_star && a < Rat(3) - Rat(2) * b)) return false;
        if (!(Rat(3) * a * a + Rat(2) * b * a + Rat(2) * b - Rat(3) > Rat(0))) return false;
        return scan_eps_tau([&](const Rat& eps, const Rat& tau) {
            Rat base = Rat(3) * (a + Rat(1) + tau) / (Rat(2) - b);
            Rat q1 = base + eps, q2 = base - eps;
            if (!(in_open(q1, Rat(3), Rat(6)) && in_open(q2, Rat(3), Rat(6)))) return false;
            return partner_p(q1, 3) < Rat(2) * a + Rat(2) &&
                   partner_p(q2, 3) < Rat(2) * a + Rat(2);
        });
    }
    if (pp.d == 2) {
        if (!(b < Rat(1))) return false;
        if (!(a >= a_star)) return false;
        if (!(a * a + b * a + b - Rat(1) > Rat(0))) return false;
        return scan_eps_tau([&](const Rat& eps, const Rat& tau) {
            Rat base = Rat(2) * (a + Rat(1) + tau) / (Rat(1) - b);
            Rat q1 = base + eps, q2 = base - eps;
            if (!(q1 > Rat(2) && q2 > Rat(2))) return false;
            return partner_p(q1, 2) < Rat(2) * a + Rat(2) &&
                   partner_p(q2, 2) < Rat(2) * a + Rat(2);
        });
    }
    return false;
}

inline bool weighted_feasible(const ProblemParams& pp) {
    const Rat &a = pp.alpha, &b = pp.b;
    if (pp.d == 3) {
        if (!(b < Rat(1))) return false;
        if (!(a > (Rat(5) - Rat(2) * b) / Rat(3) && a < Rat(3) - Rat(2) * b)) return false;
        if (!(Rat(3) * a * a + Rat(2) * (b - Rat(1)) * a + Rat(2) * b - Rat(5) > Rat(0)))
            return false;
        return scan_eps_tau([&](const Rat& eps, const Rat& tau) {
            Rat base = Rat(3) * (a + Rat(1) + tau) / (Rat(2) - b);
            Rat q1 = base + eps, q2 = base - eps;
            if (!(in_open(q1, Rat(3), Rat(6)) && in_open(q2, Rat(3), Rat(6)))) return false;
            return partner_p(q1, 3) < a + Rat(1) && partner_p(q2, 3) < a + Rat(1);
        });
    }
    if (pp.d == 2) {
        if (!(b < Rat(1))) return false;
        if (!(a >= (Rat(4) - Rat(2) * b) / Rat(2))) return false;
        if (!(a * a + (b - Rat(1)) * a + b - Rat(2) > Rat(0))) return false;
        return scan_eps_tau([&](const Rat& eps, const Rat& tau) {
            Rat base = Rat(2) * (a + Rat(1) + tau) / (Rat(1) - b);
            Rat q1 = base + eps, q2 = base - eps;
            if (!(q1 > Rat(2) && q2 > Rat(2))) return false;
            return partner_p(q1, 2) < a + Rat(1) && partner_p(q2, 2) < a + Rat(1);
        });
    }
    return false;
}

// The shared rational grid for engine-vs-oracle comparison.
inline std::vector<ProblemParams> comparison_grid() {
    std::vector<ProblemParams> grid;
    auto add = [&](int d, Rat b, Rat a) {
        if (!(a > Rat(0))) return;
        ProblemParams p;
        p.d = d;
        p.b = b;
        p.alpha = a;
        p.mu = -1;
        grid.push_back(p);
    };
    for (int d : {2, 3, 4}) {
        std::vector<Rat> bs;
        if (d == 2) {
            for (int i = 1; i <= 15; ++i) bs.push_back(Rat(i, 16));
        } else {
            for (int i = 1; i <= 15; ++i) bs.push_back(Rat(i, 8));
        }
        for (const Rat& b : bs) {
            if (!(b < inls::min(Rat(2), Rat(d)))) continue;
            for (int k = 1; k <= 12; ++k) add(d, b, Rat(k, 4));
            // exact threshold and boundary points
            add(d, b, (Rat(4) - Rat(2) * b) / Rat(d));  // alpha_star
            if (d == 2) add(d, b, Rat(2) - b);          // weighted quadratic root
            if (d == 3) {
                add(d, b, (Rat(5) - Rat(2) * b) / Rat(3));
                add(d, b, (Rat(3) - Rat(2) * b) / Rat(3));
            }
        }
    }
    return grid;
}

}  // namespace oracle
