// Slow independent reference paths used only by tests: a brute-force numeric
// Fenchel conjugate and a dense accelerated-gradient minimizer of the full
// incremental functional over (u, p) that never touches the return map.
#pragma once

#include "plastiplate/solver.hpp"

namespace plp::oracle {

// sup_xi (y : xi - psi_lambda(xi)) by cube search plus gradient ascent.
// Throws std::runtime_error when the search cube turns out too small.
double conjugate_numeric(const Sym2& y, const TruncationParams& p);

struct OracleResult {
    KLDisplacement u;
    LayeredField plastic;
    LayeredField sigma;
    int iterations = 0;
    double objective = 0.0;
    double grad_norm = 0.0;
};

// Minimizes the step-i incremental functional jointly in the free
// displacement dofs and the plastic increment at every material point.
// Dense linear algebra, restarted FISTA with Lipschitz backtracking; meant
// for grids with a few hundred unknowns.
OracleResult minimize_incremental(const Scenario& S, const PlateState& prev, int i,
                                  int max_iter = 400000, double grad_tol = 1e-11);

}  // namespace plp::oracle
