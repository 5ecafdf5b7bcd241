// Runtime verification: per-step energy ledger, strong-form residuals,
// yield-set excess, flow-rule gap, difference-quotient regularity probes,
// and the stress-strain duality pairing defect.
#pragma once

#include <array>
#include <string>
#include <vector>

#include "plastiplate/solver.hpp"

namespace plp {

struct StepDiagnostics {
    int step = 0;
    double time = 0.0;
    double kinetic = 0.0;      // 1/2 ||v3^i||^2
    double elastic = 0.0;      // 1/2 <A_r sigma^i, sigma^i>
    double dissipation = 0.0;  // delta <sigma^i, Dpsi_lambda(sigma^i)> = <sigma^i, p^i - p^{i-1}>
    double ledger_lhs = 0.0;   // energy increment plus dissipation
    double ledger_rhs = 0.0;   // external work terms of the step
    double slack = 0.0;        // rhs - lhs, nonnegative up to solver tolerance
    double max_excess = 0.0;   // max (|sigma|_r - alpha0)^+
    double max_flow_gap = 0.0; // max H_r(q) - sigma : q, q = Dpsi_lambda(sigma)
    double res_kinematic = 0.0;  // max |E u - e - p|
    double res_flow = 0.0;       // max |(p - p_prev)/delta - Dpsi_lambda(sigma)|
    double res_membrane = 0.0;   // interior L2 of Div sigma_bar + f
    double res_bending = 0.0;    // interior L2 of accel - (1/12) DivDiv sigma_hat - g
    int newton_iterations = 0;
};

// Evaluates every per-step check for the transition prev -> cur (cur.step >= 1).
StepDiagnostics step_diagnostics(const Scenario& S, const PlateState& prev, const PlateState& cur);

std::string diagnostics_csv_header();
std::string diagnostics_csv_row(const StepDiagnostics& d);

double max_yield_excess(const LayeredField& sigma, double alpha0);
// max over points of H_r(q) - sigma : q with q = Dpsi_lambda(sigma); equals
// (|sigma|_r ^ lambda)^{N-2}/alpha0^{N-1} * |sigma|_r * (alpha0 - |sigma|_r).
double max_flow_gap(const LayeredField& sigma, const TruncationParams& p);

// Difference-quotient norms of the stress on the interior subdomain that sits
// at least `margin` grid steps from the boundary.
struct RegularityReport {
    std::array<double, 3> space_x{};  // offsets 1, 2, 4 grid steps; max over steps
    std::array<double, 3> space_y{};
    double space_x3 = 0.0;            // adjacent-layer quotient (0 with < 2 layers)
    std::vector<double> time_series;  // per step: L2 of (sigma^i - sigma^{i-1})/delta
    std::vector<double> velocity_series;  // per step: L2 of (u3^i - u3^{i-1})/delta
};
RegularityReport regularity_monitor(const Scenario& S, const Trajectory& tr, int margin = 4);

// Both sides of the integration-by-parts identity behind the duality pairing
// <sigma, p>_r, evaluated with the solver's stencils and quadrature.  For
// smooth fields with u - w and sigma vanishing near the boundary the defect
// decays at stencil order.
struct DualityReport {
    double lhs = 0.0;  // <sigma,p>_r + <sigma, e - Ew>
    double rhs = 0.0;  // -<Div sigma_bar, ubar - wbar> - (1/12) <DivDiv sigma_hat, u3 - w3>
    double defect = 0.0;
};
DualityReport duality_pairing_defect(const PlateGrid& g, const LayeredField& sigma,
                                     const KLDisplacement& u, const LayeredField& e,
                                     const LayeredField& p, const KLDisplacement& w);

}  // namespace plp
