#include "plastiplate/material.hpp"

#include <algorithm>
#include <cmath>

namespace plp {

CoercivityConstants coercivity_constants(const Elasticity& e) {
    // Rayleigh quotient of 1/2 A_r xi : xi against |xi|_r^2 on the orthogonal
    // split xi = xi0 + (tr xi / 2) I with xi0 trace-free.
    const double dev_ratio = 1.0 / (4.0 * e.mu);
    const double sph_ratio = 3.0 / (2.0 * (2.0 * e.mu + 2.0 * e.ell));
    return {std::min(dev_ratio, sph_ratio), std::max(dev_ratio, sph_ratio)};
}

namespace {

struct Split {
    Sym2 dev;     // 2D trace-free part
    double tr;    // trace
    double dev2;  // Frobenius square of dev
};

Split split2(const Sym2& x) {
    const double t = trace(x);
    const Sym2 d{x.a11 - 0.5 * t, x.a22 - 0.5 * t, x.a12};
    return {d, t, ddot(d, d)};
}

}  // namespace

ReturnMapResult return_map(const Sym2& eta, double dt, const Elasticity& e,
                           const TruncationParams& p, double tol) {
    if (!(dt > 0.0) || !(tol > 0.0)) throw std::invalid_argument("return_map: dt > 0 and tol > 0 required");

    const Split h = split2(eta);
    const double a_el = 1.0 / (2.0 * e.mu);
    const double b_el = 1.0 / (2.0 * e.mu + 2.0 * e.ell);

    // |sigma|_r^2 = |dev|^2 / A(s)^2 + (tr eta)^2 / (6 B(s)^2) with
    // A(s) = a_el + dt c(s), B(s) = b_el + dt c(s)/3; f below is increasing.
    auto eval = [&](double s, double& f, double& fp) {
        const double c = dpsi_factor(s, p);
        const double cp = dpsi_factor_prime(s, p);
        const double A = a_el + dt * c;
        const double B = b_el + dt * c / 3.0;
        const double q_dev = h.dev2 / (A * A);
        const double q_tr = h.tr * h.tr / (6.0 * B * B);
        f = s * s - q_dev - q_tr;
        fp = 2.0 * s + 2.0 * q_dev * dt * cp / A + q_tr * dt * cp / B;
    };

    const double s_el = std::sqrt(h.dev2 / (a_el * a_el) + h.tr * h.tr / (6.0 * b_el * b_el));
    double s = s_el, lo = 0.0, hi = s_el;
    int it = 0;
    if (s_el > 0.0) {
        for (it = 1; it <= 200; ++it) {
            double f, fp;
            eval(s, f, fp);
            if (f > 0.0)
                hi = s;
            else
                lo = s;
            double snew = (fp > 0.0) ? s - f / fp : 0.5 * (lo + hi);
            if (!(snew > lo && snew < hi)) snew = 0.5 * (lo + hi);
            if (std::abs(snew - s) <= 1e-15 * (1.0 + s)) {
                s = snew;
                break;
            }
            s = snew;
        }
    } else {
        s = 0.0;
    }

    const double c = dpsi_factor(s, p);
    const double A = a_el + dt * c;
    const double B = b_el + dt * c / 3.0;
    ReturnMapResult r;
    r.s = s;
    r.iterations = it;
    const Sym2 dev_sigma = (1.0 / A) * h.dev;
    const double tr_sigma = h.tr / B;
    r.sigma = {dev_sigma.a11 + 0.5 * tr_sigma, dev_sigma.a22 + 0.5 * tr_sigma, dev_sigma.a12};
    const Sym2 res = apply_A(r.sigma, e) + dt * dpsi_lambda(r.sigma, p) - eta;
    r.residual = norm_frobenius(res);
    if (r.residual > tol * (1.0 + norm_frobenius(eta)))
        throw std::runtime_error("return_map: scalar solve did not converge, residual " +
                                 std::to_string(r.residual));
    return r;
}

Sym2Operator return_map_tangent(const Sym2& eta, const ReturnMapResult& r, double dt,
                                const Elasticity& e, const TruncationParams& p) {
    (void)eta;
    const double a_el = 1.0 / (2.0 * e.mu);
    const double b_el = 1.0 / (2.0 * e.mu + 2.0 * e.ell);
    const double c = dpsi_factor(r.s, p);
    const double cp = dpsi_factor_prime(r.s, p);
    const double A = a_el + dt * c;
    const double B = b_el + dt * c / 3.0;

    Sym2Operator T{};
    // Elastic-like block: dev part scaled by 1/A, trace part by 1/(2B).
    const double iA = 1.0 / A;
    const double i2B = 1.0 / (2.0 * B);
    T.m[0][0] = 0.5 * iA + i2B;
    T.m[0][1] = -0.5 * iA + i2B;
    T.m[1][0] = -0.5 * iA + i2B;
    T.m[1][1] = 0.5 * iA + i2B;
    T.m[2][2] = iA;

    if (cp != 0.0 && r.s > 0.0) {
        const Split ss = split2(r.sigma);
        const double Ap = dt * cp;
        const double Bp = dt * cp / 3.0;
        const double D = 2.0 * r.s + 2.0 * ss.dev2 * Ap / A + ss.tr * ss.tr * Bp / (3.0 * B);
        // dsigma -= u * (row . deta), with u and row as below.
        const double u[3] = {ss.dev.a11 * Ap / A + 0.5 * ss.tr * Bp / B,
                             ss.dev.a22 * Ap / A + 0.5 * ss.tr * Bp / B, ss.dev.a12 * Ap / A};
        const double row[3] = {2.0 * ss.dev.a11 / (A * D) + ss.tr / (3.0 * B * D),
                               2.0 * ss.dev.a22 / (A * D) + ss.tr / (3.0 * B * D),
                               4.0 * ss.dev.a12 / (A * D)};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) T.m[i][j] -= u[i] * row[j];
    }
    return T;
}

}  // namespace plp
