// Algebra of 2x2 symmetric matrices: reduced norm |.|_r, dual norm |.|_*,
// the associated scalar product, and the von Mises yield ball.
#pragma once

#include <cmath>

namespace plp {

// Symmetric 2x2 matrix stored as the three independent entries.
// Frobenius contractions count a12 twice.
struct Sym2 {
    double a11 = 0.0;
    double a22 = 0.0;
    double a12 = 0.0;

    constexpr Sym2() = default;
    constexpr Sym2(double m11, double m22, double m12) : a11(m11), a22(m22), a12(m12) {}

    static constexpr Sym2 identity() { return {1.0, 1.0, 0.0}; }
    static constexpr Sym2 zero() { return {}; }

    constexpr Sym2 operator+(const Sym2& o) const { return {a11 + o.a11, a22 + o.a22, a12 + o.a12}; }
    constexpr Sym2 operator-(const Sym2& o) const { return {a11 - o.a11, a22 - o.a22, a12 - o.a12}; }
    constexpr Sym2 operator*(double s) const { return {s * a11, s * a22, s * a12}; }
    constexpr Sym2 operator-() const { return {-a11, -a22, -a12}; }
    Sym2& operator+=(const Sym2& o) {
        a11 += o.a11;
        a22 += o.a22;
        a12 += o.a12;
        return *this;
    }
    Sym2& operator-=(const Sym2& o) {
        a11 -= o.a11;
        a22 -= o.a22;
        a12 -= o.a12;
        return *this;
    }
    Sym2& operator*=(double s) {
        a11 *= s;
        a22 *= s;
        a12 *= s;
        return *this;
    }
};

inline constexpr Sym2 operator*(double s, const Sym2& x) { return x * s; }

inline constexpr double trace(const Sym2& x) { return x.a11 + x.a22; }

// Frobenius contraction xi : zeta (shear entry counted twice).
inline constexpr double ddot(const Sym2& x, const Sym2& z) {
    return x.a11 * z.a11 + x.a22 * z.a22 + 2.0 * x.a12 * z.a12;
}

inline double norm_frobenius(const Sym2& x) { return std::sqrt(ddot(x, x)); }

// Reduced scalar product (xi, zeta)_r = xi : zeta - (1/3) tr xi tr zeta.
inline constexpr double inner_r(const Sym2& x, const Sym2& z) {
    return ddot(x, z) - trace(x) * trace(z) / 3.0;
}

// |xi|_r = sqrt(|xi|^2 - (1/3)(tr xi)^2).  Satisfies |xi|_r <= |xi| <= sqrt(3) |xi|_r.
inline double norm_r(const Sym2& x) {
    const double v = inner_r(x, x);
    return v > 0.0 ? std::sqrt(v) : 0.0;
}

// Dual norm |xi|_* = sqrt(|xi|^2 + (tr xi)^2) = sup_{|eta|_r <= 1} xi : eta.
inline double norm_dual(const Sym2& x) {
    const double t = trace(x);
    return std::sqrt(ddot(x, x) + t * t);
}

// xi - (1/3)(tr xi) I.  Satisfies |dev_r(xi)|_* = |xi|_r.  Note: not trace-free
// in the reduced 2x2 setting (its trace is tr(xi)/3).
inline constexpr Sym2 dev_r(const Sym2& x) {
    const double t = trace(x) / 3.0;
    return {x.a11 - t, x.a22 - t, x.a12};
}

// xi + (tr xi) I, the two-sided inverse of dev_r.  Satisfies |lift_dual(xi)|_r = |xi|_*.
inline constexpr Sym2 lift_dual(const Sym2& x) {
    const double t = trace(x);
    return {x.a11 + t, x.a22 + t, x.a12};
}

// The reduced von Mises admissible set K_r = { xi : |xi|_r <= alpha0 }.
struct YieldSurface {
    double alpha0;

    // Default tolerance absorbs floating-point boundary cases.
    double default_tol() const { return 1e-9 * alpha0; }
};

inline bool in_yield_set(const Sym2& x, const YieldSurface& K, double tol) {
    return norm_r(x) <= K.alpha0 + tol;
}

inline bool in_yield_set(const Sym2& x, const YieldSurface& K) {
    return in_yield_set(x, K, K.default_tol());
}

// Support function of K_r: H_r(xi) = alpha0 |xi|_*.
inline double support_Hr(const Sym2& x, const YieldSurface& K) { return K.alpha0 * norm_dual(x); }

}  // namespace plp
