// Dissipation potentials: the power-law potential phi_N, its quadratic
// truncation psi_lambda, the exact conjugate F_lambda = psi_lambda^*, and the
// matching differentials.
#pragma once

#include <cmath>
#include <stdexcept>

#include "plastiplate/sym2.hpp"

namespace plp {

struct NortonHoffParams {
    int N;
    double alpha0;

    NortonHoffParams(int exponent, double yield_radius) : N(exponent), alpha0(yield_radius) {
        if (N < 4) throw std::invalid_argument("NortonHoffParams: N >= 4 required");
        if (!(alpha0 > 0.0)) throw std::invalid_argument("NortonHoffParams: alpha0 > 0 required");
    }
};

struct TruncationParams {
    NortonHoffParams base;
    double lambda;

    TruncationParams(NortonHoffParams b, double lam) : base(b), lambda(lam) {
        if (!(lambda > 0.0)) throw std::invalid_argument("TruncationParams: lambda > 0 required");
    }
};

// phi_N(xi) = |xi|_r^N / (N alpha0^(N-1))
inline double phi_N(const Sym2& xi, const NortonHoffParams& p) {
    const double s = norm_r(xi);
    return std::pow(s, p.N) / (p.N * std::pow(p.alpha0, p.N - 1));
}

// D phi_N(xi) = |xi|_r^(N-2) / alpha0^(N-1) * dev_r(xi)
inline Sym2 dphi_N(const Sym2& xi, const NortonHoffParams& p) {
    const double s = norm_r(xi);
    const double c = std::pow(s, p.N - 2) / std::pow(p.alpha0, p.N - 1);
    return c * dev_r(xi);
}

// psi_lambda(xi) = (|xi|_r^N ^ lambda^N)/(N alpha0^(N-1))
//                + lambda^(N-2)/(2 alpha0^(N-1)) (|xi|_r^2 - lambda^2)^+
inline double psi_lambda(const Sym2& xi, const TruncationParams& p) {
    const int N = p.base.N;
    const double a = p.base.alpha0;
    const double s = norm_r(xi);
    const double aN1 = std::pow(a, N - 1);
    double v = std::pow(std::min(s, p.lambda), N) / (N * aN1);
    if (s > p.lambda) v += std::pow(p.lambda, N - 2) * (s * s - p.lambda * p.lambda) / (2.0 * aN1);
    return v;
}

// Capped modulus factor (|xi|_r^(N-2) ^ lambda^(N-2)) / alpha0^(N-1),
// evaluated at s = |xi|_r.  Shared by dpsi_lambda and the return map.
inline double dpsi_factor(double s, const TruncationParams& p) {
    return std::pow(std::min(s, p.lambda), p.base.N - 2) / std::pow(p.base.alpha0, p.base.N - 1);
}

// One-sided derivative of dpsi_factor in s (zero on the capped branch).
inline double dpsi_factor_prime(double s, const TruncationParams& p) {
    if (s >= p.lambda) return 0.0;
    return (p.base.N - 2) * std::pow(s, p.base.N - 3) / std::pow(p.base.alpha0, p.base.N - 1);
}

// D psi_lambda(xi) = dpsi_factor(|xi|_r) * dev_r(xi)
inline Sym2 dpsi_lambda(const Sym2& xi, const TruncationParams& p) {
    return dpsi_factor(norm_r(xi), p) * dev_r(xi);
}

// F_lambda(y) = psi_lambda^*(y)
//   = (N-1)/N * alpha0 * (|y|_*^(N/(N-1)) ^ (lambda/alpha0)^N)
//   + alpha0^(N-1)/(2 lambda^(N-2)) * (|y|_*^2 - (lambda/alpha0)^(2N-2))^+
// The branch switch sits at |y|_* = (lambda/alpha0)^(N-1), where both
// expressions agree.
inline double F_lambda(const Sym2& y, const TruncationParams& p) {
    const int N = p.base.N;
    const double a = p.base.alpha0;
    const double t = norm_dual(y);
    const double thr = std::pow(p.lambda / a, N - 1);
    double v;
    if (t <= thr) {
        v = (N - 1.0) / N * a * std::pow(t, double(N) / (N - 1));
    } else {
        v = (N - 1.0) / N * a * std::pow(p.lambda / a, N) +
            std::pow(a, N - 1) / (2.0 * std::pow(p.lambda, N - 2)) * (t * t - thr * thr);
    }
    return v;
}

// D F_lambda(y) = alpha0 * factor(|y|_*) * lift_dual(y), the two-sided inverse
// of D psi_lambda.  The value at y = 0 is 0, the unique element of the
// subdifferential there.
inline Sym2 dF_lambda(const Sym2& y, const TruncationParams& p) {
    const int N = p.base.N;
    const double a = p.base.alpha0;
    const double t = norm_dual(y);
    if (t == 0.0) return Sym2::zero();
    const double thr = std::pow(p.lambda / a, N - 1);
    const double factor = (t <= thr) ? a * std::pow(t, (2.0 - N) / (N - 1))
                                     : a * std::pow(p.lambda / a, 2 - N);
    return factor * lift_dual(y);
}

}  // namespace plp
