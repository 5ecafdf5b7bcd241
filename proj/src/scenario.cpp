#include "plastiplate/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "plastiplate/kinematics.hpp"
#include "plastiplate/stencils.hpp"

namespace plp {

namespace {

double interior_max(const ScalarField& f, const PlateGrid& g, int margin) {
    double m = 0.0;
    for (int j = margin; j < g.ny - margin; ++j)
        for (int i = margin; i < g.nx - margin; ++i) m = std::max(m, std::abs(f.at(i, j)));
    return m;
}

double field_max(const ScalarField& f) {
    double m = 0.0;
    for (double v : f.v) m = std::max(m, std::abs(v));
    return m;
}

// Checks that sigma balances the loads (f, g) in the stencil sense, with a
// 10% relative slack that absorbs the truncation error of the one-sided
// boundary closures.  Evaluated away from the outermost node ring.
void check_equilibrium(const LayeredField& sigma, const VecField& f, const ScalarField& gl,
                       const PlateGrid& g, const std::string& what) {
    const Sym2Field sbar = moment_zero(sigma, g);
    const Sym2Field shat = moment_first(sigma, g);
    const VecField div_bar = div_sym2(sbar, g);
    const ScalarField divdiv_hat = divdiv_sym2(shat, g);

    ScalarField r1(g), r2(g), r3(g);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            r1.at(i, j) = div_bar.x.at(i, j) + f.x.at(i, j);
            r2.at(i, j) = div_bar.y.at(i, j) + f.y.at(i, j);
            r3.at(i, j) = divdiv_hat.at(i, j) / 12.0 + gl.at(i, j);
        }
    const double m1 = std::max(interior_max(r1, g, 2), interior_max(r2, g, 2));
    double scale_m = field_max(f.x) + field_max(f.y);
    for (const Sym2& s : sbar.v) scale_m = std::max(scale_m, norm_frobenius(s) / std::min(g.Lx, g.Ly));
    if (m1 > 0.10 * scale_m + 1e-9)
        throw ScenarioError(what + ": membrane equilibrium residual " + std::to_string(m1) +
                            " exceeds 10% of the load scale " + std::to_string(scale_m));

    const double m2 = interior_max(r3, g, 2);
    double scale_b = field_max(gl);
    for (const Sym2& s : shat.v)
        scale_b = std::max(scale_b, norm_frobenius(s) / (12.0 * std::min(g.Lx, g.Ly) * std::min(g.Lx, g.Ly)));
    if (m2 > 0.10 * scale_b + 1e-9)
        throw ScenarioError(what + ": bending equilibrium residual " + std::to_string(m2) +
                            " exceeds 10% of the load scale " + std::to_string(scale_b));
}

}  // namespace

void Scenario::validate() const {
    grid.validate();
    time.validate();
    if (!(gamma_safe > 0.0 && gamma_safe < 1.0))
        throw ScenarioError("Scenario: gamma_safe must lie in (0, 1)");
    require_shape(u0.u3, grid);
    require_shape(sigma0, grid);
    require_shape(v0_3, grid);
    if (!rho_at) throw ScenarioError("Scenario: safe-load field rho_at is required");

    const YieldSurface K{trunc.base.alpha0};
    const double bound = trunc.base.alpha0 * (1.0 - gamma_safe) + K.default_tol();

    for (int i = 0; i <= time.k; ++i) {
        const LayeredField rho = rho_at(i);
        require_shape(rho, grid);
        for (const Sym2& s : rho.v)
            if (norm_r(s) > bound)
                throw ScenarioError("Scenario: safe-load field leaves (1 - gamma) K_r at step " +
                                    std::to_string(i) + " (|rho|_r = " + std::to_string(norm_r(s)) + ")");
        const VecField f = f_at ? f_at(i) : VecField(grid);
        const ScalarField gl = g_at ? g_at(i) : ScalarField(grid);
        check_equilibrium(rho, f, gl, grid, "Scenario: safe-load field, step " + std::to_string(i));
    }

    for (const Sym2& s : sigma0.v)
        if (!in_yield_set(s, K))
            throw ScenarioError("Scenario: initial stress leaves K_r (|sigma0|_r = " +
                                std::to_string(norm_r(s)) + ")");
    {
        const VecField f0 = f_at ? f_at(0) : VecField(grid);
        const ScalarField g0 = g_at ? g_at(0) : ScalarField(grid);
        check_equilibrium(sigma0, f0, g0, grid, "Scenario: initial stress");
    }

    // The initial displacement must carry the Dirichlet datum at t_0.
    const KLDisplacement w0 = w_at ? w_at(0) : KLDisplacement(grid);
    double scale = 1.0;
    for (double v : u0.u3.v) scale = std::max(scale, std::abs(v));
    for (int j = 0; j < grid.ny; ++j)
        for (int i = 0; i < grid.nx; ++i) {
            if (grid.on_dirichlet_edge(i, j)) {
                if (std::abs(u0.ubar.x.at(i, j) - w0.ubar.x.at(i, j)) > 1e-9 * scale ||
                    std::abs(u0.ubar.y.at(i, j) - w0.ubar.y.at(i, j)) > 1e-9 * scale)
                    throw ScenarioError("Scenario: u0 does not match the datum w(0) on gamma_d");
            }
            if (grid.on_dirichlet_band(i, j) &&
                std::abs(u0.u3.at(i, j) - w0.u3.at(i, j)) > 1e-9 * scale)
                throw ScenarioError("Scenario: u0_3 does not match the datum w_3(0) on the clamp band");
        }
}

}  // namespace plp
