// Problem data for one evolution: geometry, material, yield and truncation
// parameters, time grid, loads, boundary datum, safe-load field, initial data.
#pragma once

#include <functional>
#include <string>

#include "plastiplate/fields.hpp"
#include "plastiplate/grid.hpp"
#include "plastiplate/material.hpp"
#include "plastiplate/potentials.hpp"

namespace plp {

struct TimeGrid {
    double T = 1.0;
    int k = 2;

    double delta() const { return T / k; }
    double t(int i) const { return i * (T / k); }

    void validate() const {
        if (!(T > 0.0) || k < 2) throw std::invalid_argument("TimeGrid: T > 0 and k >= 2 required");
    }
};

struct Scenario {
    std::string name = "unnamed";
    PlateGrid grid;
    Elasticity elasticity{0.5, 0.0};
    TruncationParams trunc{NortonHoffParams{4, 1.0}, 1.0};
    TimeGrid time;
    double gamma_safe = 0.1;

    // Data sampled at the nodal times t_i, i = 0..k.
    std::function<VecField(int)> f_at;       // horizontal load on omega
    std::function<ScalarField(int)> g_at;    // vertical load on omega
    std::function<KLDisplacement(int)> w_at; // Dirichlet / bulk datum
    std::function<LayeredField(int)> rho_at; // safe-load stress field

    KLDisplacement u0;
    LayeredField sigma0;
    ScalarField v0_3;  // third component of the initial velocity

    // Checks the sampled-data hypotheses: safe-load bound, discrete
    // equilibrium of rho and of sigma0, sigma0 in K_r, and w consistency on
    // gamma_d.  Throws std::invalid_argument with the offending rule.
    void validate() const;
};

struct ScenarioError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace plp
