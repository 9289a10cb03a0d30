// Exact rational arithmetic with a first-class point at +infinity.
//
// All exponent and threshold computations in this project are done over Q:
// every feasibility inequality is a polynomial with rational coefficients,
// so exact comparisons remove tolerance questions entirely.  The extended
// value +inf exists because Lebesgue exponents live in [2, inf] and the
// convention 1/inf = 0 is used throughout.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace inls {

struct RatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Rat {
  public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(long n, long d) {
        if (d == 0) throw RatError("rational with zero denominator");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }

    static Rat inf() {
        Rat r;
        r.inf_ = true;
        return r;
    }

    // 2^k for any integer k (k < 0 gives 1/2^|k|).
    static Rat pow2(int k) {
        Rat r(1);
        if (k >= 0)
            mpq_mul_2exp(r.v_.get_mpq_t(), r.v_.get_mpq_t(), static_cast<unsigned long>(k));
        else
            mpq_div_2exp(r.v_.get_mpq_t(), r.v_.get_mpq_t(), static_cast<unsigned long>(-k));
        return r;
    }

    // Accepts "inf", "n", "n/d" (optionally signed).
    static Rat parse(std::string_view s);

    bool is_inf() const { return inf_; }
    bool is_zero() const { return !inf_ && v_ == 0; }
    bool is_integer() const { return !inf_ && v_.get_den() == 1; }

    // 1/x with inv(inf) = 0 and inv(0) = inf.
    Rat inv() const {
        if (inf_) return Rat(0);
        if (v_ == 0) return inf();
        Rat r;
        r.v_ = 1 / v_;
        return r;
    }

    double to_double() const {
        if (inf_) return std::numeric_limits<double>::infinity();
        return v_.get_d();
    }

    // "inf", "n" for integers, otherwise "n/d" in lowest terms.
    std::string str() const {
        if (inf_) return "inf";
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    int sign() const {
        if (inf_) return 1;
        return sgn(v_);
    }

    friend Rat operator-(const Rat& a) {
        if (a.inf_) throw RatError("negating inf");
        Rat r;
        r.v_ = -a.v_;
        return r;
    }
    friend Rat operator+(const Rat& a, const Rat& b) {
        if (a.inf_ || b.inf_) {
            if (a.inf_ && b.inf_) return inf();
            return inf();  // inf + finite
        }
        Rat r;
        r.v_ = a.v_ + b.v_;
        return r;
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        if (b.inf_) throw RatError("subtracting inf");
        if (a.inf_) return inf();
        Rat r;
        r.v_ = a.v_ - b.v_;
        return r;
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        if (a.inf_ || b.inf_) {
            const Rat& fin = a.inf_ ? b : a;
            if (!fin.inf_ && fin.sign() <= 0) throw RatError("inf * nonpositive");
            return inf();
        }
        Rat r;
        r.v_ = a.v_ * b.v_;
        return r;
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.inf_) {
            if (a.inf_) throw RatError("inf/inf");
            return Rat(0);
        }
        if (b.v_ == 0) throw RatError("division by zero");
        if (a.inf_) {
            if (sgn(b.v_) <= 0) throw RatError("inf / nonpositive");
            return inf();
        }
        Rat r;
        r.v_ = a.v_ / b.v_;
        return r;
    }

    friend bool operator==(const Rat& a, const Rat& b) {
        if (a.inf_ || b.inf_) return a.inf_ && b.inf_;
        return a.v_ == b.v_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        if (a.inf_) return false;
        if (b.inf_) return true;
        return a.v_ < b.v_;
    }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

  private:
    mpq_class v_;
    bool inf_ = false;
};

inline Rat min(const Rat& a, const Rat& b) { return a < b ? a : b; }
inline Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }

}  // namespace inls
