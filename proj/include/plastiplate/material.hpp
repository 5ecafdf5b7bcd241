// Reduced isotropic elasticity C_r, its inverse A_r, and the pointwise
// visco-plastic return map A_r sigma + dt D psi_lambda(sigma) = eta.
#pragma once

#include <stdexcept>

#include "plastiplate/potentials.hpp"
#include "plastiplate/sym2.hpp"

namespace plp {

// C_r xi = 2 mu xi + ell (tr xi) I.  Requires 2mu > 0 and 2mu + 2ell > 0 so
// that C_r is positive definite on Sym2.
struct Elasticity {
    double mu;
    double ell;

    Elasticity(double mu_, double ell_) : mu(mu_), ell(ell_) {
        if (!(2.0 * mu > 0.0) || !(2.0 * mu + 2.0 * ell > 0.0))
            throw std::invalid_argument("Elasticity: need 2mu > 0 and 2mu + 2ell > 0");
    }
};

inline Sym2 apply_C(const Sym2& xi, const Elasticity& e) {
    const double t = e.ell * trace(xi);
    return {2.0 * e.mu * xi.a11 + t, 2.0 * e.mu * xi.a22 + t, 2.0 * e.mu * xi.a12};
}

inline Sym2 apply_A(const Sym2& s, const Elasticity& e) {
    const double c = e.ell / (2.0 * e.mu * (2.0 * e.mu + 2.0 * e.ell));
    const double t = c * trace(s);
    return {s.a11 / (2.0 * e.mu) - t, s.a22 / (2.0 * e.mu) - t, s.a12 / (2.0 * e.mu)};
}

// Tight constants of alpha_A |xi|_r^2 <= 1/2 A_r xi : xi <= beta_A |xi|_r^2.
// A_r acts as 1/(2mu) on trace-free matrices and 1/(2mu+2ell) on multiples of
// the identity; the ratio (A_r xi : xi)/|xi|_r^2 is extremal on those two
// lines (with the r-norm weights 1 and 1/3 on the identity line).
struct CoercivityConstants {
    double alphaA;
    double betaA;
};
CoercivityConstants coercivity_constants(const Elasticity& e);

// Consistent tangent d sigma / d eta of the return map, as a symmetric linear
// operator on Sym2 in plain component coordinates (a11, a22, a12).
struct Sym2Operator {
    double m[3][3];

    Sym2 apply(const Sym2& x) const {
        return {m[0][0] * x.a11 + m[0][1] * x.a22 + m[0][2] * x.a12,
                m[1][0] * x.a11 + m[1][1] * x.a22 + m[1][2] * x.a12,
                m[2][0] * x.a11 + m[2][1] * x.a22 + m[2][2] * x.a12};
    }
};

struct ReturnMapResult {
    Sym2 sigma;
    double s;          // |sigma|_r
    int iterations;
    double residual;   // Frobenius norm of A_r sigma + dt Dpsi(sigma) - eta
};

// Solves A_r sigma + dt D psi_lambda(sigma) = eta for the unique sigma.
// The trace-free part and the trace decouple once |sigma|_r is known, so the
// solve reduces to a scalar semismooth Newton with a bisection safeguard.
ReturnMapResult return_map(const Sym2& eta, double dt, const Elasticity& e,
                           const TruncationParams& p, double tol);

// Tangent of the map eta -> sigma at the solved state.
Sym2Operator return_map_tangent(const Sym2& eta, const ReturnMapResult& r, double dt,
                                const Elasticity& e, const TruncationParams& p);

}  // namespace plp
