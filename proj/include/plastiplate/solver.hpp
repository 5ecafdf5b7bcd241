// Implicit-Euler incremental solver.  Each step minimizes the incremental
// functional over admissible displacements; the plastic increment is
// eliminated pointwise through the return map, so the outer iteration is a
// damped Newton method on (ubar, u3) with a consistent tangent.
#pragma once

#include <memory>
#include <vector>

#include "plastiplate/scenario.hpp"

namespace plp {

enum class LinearSolverKind { ldlt, cg };
enum class NewtonInit { previous, zero };

struct SolverOptions {
    double newton_xtol = 1e-10;    // displacement increment, relative
    double newton_rtol = 1e-11;    // first-order residual, relative
    int newton_max_iter = 50;
    int line_search_max = 20;
    double return_map_tol = 1e-12;
    LinearSolverKind linear = LinearSolverKind::ldlt;
    NewtonInit init = NewtonInit::previous;
    double tol_scale = 1.0;  // multiplies both Newton tolerances
};

struct PlateState {
    KLDisplacement u;
    LayeredField strain;   // elastic strain e^i = A_r sigma^i
    LayeredField plastic;  // p^i
    LayeredField sigma;
    ScalarField u3_prev;   // deflection one step back (u3^{i-1})
    int step = 0;
    double time = 0.0;
    int newton_iterations = 0;
};

// State at t_0 with the seeded deflection history u3^{-1} = u3^0 - delta v0_3.
PlateState seed_history(const Scenario& S);

class IncrementalSolver {
  public:
    IncrementalSolver(const Scenario& S, const SolverOptions& opt = {});
    ~IncrementalSolver();
    IncrementalSolver(const IncrementalSolver&) = delete;
    IncrementalSolver& operator=(const IncrementalSolver&) = delete;

    // Solves step i (1 <= i <= k) from the converged state at t_{i-1}.
    // Throws std::runtime_error when Newton or the return map fails, or when
    // a line search cannot decrease the incremental energy.
    PlateState step(const PlateState& prev, int i) const;

    const Scenario& scenario() const;
    const SolverOptions& options() const;

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

struct Trajectory {
    std::vector<PlateState> states;  // states[i] is the state at t_i, i = 0..k
};

Trajectory evolve(const Scenario& S, const SolverOptions& opt = {});

}  // namespace plp
