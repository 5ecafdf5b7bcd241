// Acceptance gate: one pass/fail line per top-level claim the simulator is
// required to certify at runtime. Exit code 0 only when every line passes.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "plastiplate/config.hpp"
#include "plastiplate/diagnostics.hpp"
#include "plastiplate/kinematics.hpp"
#include "plastiplate/oracle.hpp"
#include "plastiplate/solver.hpp"

using namespace plp;

namespace {

int failures = 0;

void report(int idx, const std::string& what, bool ok, const std::string& detail) {
    std::printf("%s criterion %2d: %s (%s)\n", ok ? "PASS" : "FAIL", idx, what.c_str(),
                detail.c_str());
    if (!ok) ++failures;
}

Sym2 random_sym2(std::mt19937& rng, double scale) {
    std::uniform_real_distribution<double> d(-scale, scale);
    return {d(rng), d(rng), d(rng)};
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

// ---------------------------------------------------------------- criterion 1
// Closed-form conjugate pair: Fenchel-Young defect, brute-force conjugate,
// and gradient round trip.
void criterion_conjugate() {
    std::mt19937 rng(41);
    double fy = 0.0, rt = 0.0, brute = 0.0;
    for (const int N : {4, 6, 9}) {
        for (const double lam : {0.5, 1.0, 2.0}) {
            const TruncationParams p(NortonHoffParams(N, 1.0), lam);
            for (int it = 0; it < 1200; ++it) {
                const Sym2 xi = random_sym2(rng, 2.0);
                const Sym2 y = dpsi_lambda(xi, p);
                const double gap = psi_lambda(xi, p) + F_lambda(y, p) - ddot(xi, y);
                fy = std::max(fy, std::abs(gap) / (1.0 + std::abs(ddot(xi, y))));
                const Sym2 back = dF_lambda(y, p);
                rt = std::max(rt, norm_frobenius(back - xi) / (1.0 + norm_frobenius(xi)));
            }
            for (int it = 0; it < 8; ++it) {
                const Sym2 y = random_sym2(rng, 1.5);
                const double ref = oracle::conjugate_numeric(y, p);
                brute = std::max(brute,
                                 std::abs(F_lambda(y, p) - ref) / (1.0 + std::abs(ref)));
            }
        }
    }
    const bool ok = fy <= 1e-10 && rt <= 1e-10 && brute <= 1e-4;
    report(1, "truncated-potential conjugate is exact", ok,
           "fenchel-young " + fmt(fy) + ", round trip " + fmt(rt) + ", brute force " +
               fmt(brute));
}

// ---------------------------------------------------------------- criterion 2
// Reduced/dual norm algebra used everywhere else.
void criterion_norms() {
    std::mt19937 rng(42);
    double worst = 0.0;
    for (int it = 0; it < 10000; ++it) {
        const Sym2 x = random_sym2(rng, 3.0);
        const Sym2 y = random_sym2(rng, 3.0);
        const double n = 1.0 + norm_frobenius(x);
        worst = std::max(worst, norm_frobenius(lift_dual(dev_r(x)) - x) / n);
        worst = std::max(worst, std::abs(norm_dual(dev_r(x)) - norm_r(x)) / n);
        worst = std::max(worst, std::abs(norm_r(lift_dual(x)) - norm_dual(x)) / n);
        worst = std::max(worst, std::max(0.0, norm_r(x) - norm_frobenius(x)) / n);
        worst = std::max(worst,
                         std::max(0.0, norm_frobenius(x) - std::sqrt(3.0) * norm_r(x)) / n);
        worst = std::max(worst, std::max(0.0, ddot(x, y) - norm_r(x) * norm_dual(y)) /
                                    (1.0 + norm_frobenius(x) * norm_frobenius(y)));
        const YieldSurface K{1.0};
        worst = std::max(worst, std::max(0.0, support_Hr(x + y, K) - support_Hr(x, K) -
                                                  support_Hr(y, K)));
    }
    report(2, "reduced and dual tensor norm identities", worst <= 1e-12,
           "max defect " + fmt(worst));
}

Scenario tiny_scenario(unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    Scenario S;
    S.name = "tiny";
    S.grid.nx = S.grid.ny = 3;
    S.grid.layers = gauss_legendre_layers(2);
    S.grid.dirichlet = {true, false, true, false};
    S.elasticity = Elasticity(0.5, 0.2);
    S.trunc = TruncationParams(NortonHoffParams(4, 0.4), 2.0);
    S.time = TimeGrid{0.2, 2};
    const PlateGrid g = S.grid;
    const double a1 = d(rng), a2 = d(rng), a3 = d(rng);
    S.g_at = [g, a1, a2](int i) {
        ScalarField out(g);
        for (int j = 0; j < g.ny; ++j)
            for (int ii = 0; ii < g.nx; ++ii)
                out.at(ii, j) = (0.5 + 0.5 * i) * (a1 * g.x(ii) + a2 * g.y(j));
        return out;
    };
    S.f_at = [g, a3](int i) {
        VecField out(g);
        for (int j = 0; j < g.ny; ++j)
            for (int ii = 0; ii < g.nx; ++ii) out.x.at(ii, j) = 0.4 * i * a3 * g.y(j);
        return out;
    };
    S.u0 = KLDisplacement(g);
    S.sigma0 = LayeredField(g);
    S.v0_3 = ScalarField(g);
    return S;
}

// ---------------------------------------------------------------- criterion 3
// The displacement-only Newton step solves the same minimization as a dense
// joint minimizer over (u, p) that never touches the return map.
void criterion_oracle() {
    double worst = 0.0;
    for (unsigned seed : {11u, 22u, 33u, 44u, 55u}) {
        const Scenario S = tiny_scenario(seed);
        const IncrementalSolver solver(S);
        PlateState st = seed_history(S);
        for (int i = 1; i <= S.time.k; ++i) {
            const PlateState next = solver.step(st, i);
            const auto ref = oracle::minimize_incremental(S, st, i);
            for (size_t q = 0; q < next.sigma.size(); ++q)
                worst = std::max(worst, norm_frobenius(next.sigma.v[q] - ref.sigma.v[q]));
            for (size_t q = 0; q < next.u.u3.size(); ++q)
                worst = std::max(worst, std::abs(next.u.u3.v[q] - ref.u.u3.v[q]));
            st = next;
        }
    }
    report(3, "incremental step equals the dense joint minimizer", worst <= 1e-6,
           "max field difference " + fmt(worst));
}

struct RunRecord {
    int N = 0;
    double lambda = 0.0;
    Trajectory tr;
    Scenario S;
    double max_excess = 0.0;
    double max_gap = 0.0;
    double max_s = 0.0;
    double min_slack = 0.0;
    double slack_scale = 1.0;
    double state_scale = 1.0;
    double res_kin = 0.0, res_flow = 0.0, res_memb = 0.0, res_bend = 0.0;
};

RunRecord run_scenario(const Config& c, int N, double lam) {
    RunRecord r;
    r.N = N;
    r.lambda = lam;
    r.S = make_scenario(c, N, lam);
    r.S.validate();
    r.tr = evolve(r.S, c.solver);
    for (int i = 1; i <= r.S.time.k; ++i) {
        const StepDiagnostics d = step_diagnostics(r.S, r.tr.states[i - 1], r.tr.states[i]);
        r.max_excess = std::max(r.max_excess, d.max_excess);
        r.max_gap = std::max(r.max_gap, d.max_flow_gap);
        r.min_slack = std::min(r.min_slack, d.slack);
        r.slack_scale =
            std::max({r.slack_scale, std::abs(d.ledger_lhs), std::abs(d.ledger_rhs)});
        r.state_scale = std::max(
            {r.state_scale, std::sqrt(2.0 * d.elastic), std::sqrt(2.0 * d.kinetic)});
        r.res_kin = std::max(r.res_kin, d.res_kinematic);
        r.res_flow = std::max(r.res_flow, d.res_flow);
        r.res_memb = std::max(r.res_memb, d.res_membrane);
        r.res_bend = std::max(r.res_bend, d.res_bending);
    }
    for (const auto& st : r.tr.states)
        for (const Sym2& s : st.sigma.v) r.max_s = std::max(r.max_s, norm_r(s));
    return r;
}

// ---------------------------------------------------------------- criteria 4-8
// Shared benchmark runs: the yield-exercising bending ladder plus the other
// builtin scenarios.
void criteria_benchmarks() {
    const Config pb = builtin_config("plastic_bend");

    std::vector<RunRecord> ladder;
    for (double lam : pb.lambdas)
        for (int N : pb.Ns) ladder.push_back(run_scenario(pb, N, lam));

    std::vector<RunRecord> others;
    for (const std::string& name :
         {"quiescent", "elastic_bend", "inertial_ring", "static_f", "datum_shear"}) {
        const Config c = builtin_config(name);
        others.push_back(run_scenario(c, c.Ns.front(), c.lambdas.front()));
    }

    // 4: Euler-Lagrange residuals of every run, including refined meshes.
    {
        Config eb = builtin_config("elastic_bend");
        eb.nx = eb.ny = 33;
        Config sf = builtin_config("static_f");
        sf.nx = sf.ny = 33;
        sf.Ns = {4};
        std::vector<RunRecord> refined;
        refined.push_back(run_scenario(eb, eb.Ns.front(), eb.lambdas.front()));
        refined.push_back(run_scenario(sf, 4, sf.lambdas.front()));

        double kin = 0.0, flow = 0.0, eq = 0.0;
        double kin_scale = 1.0;
        const auto fold = [&](const std::vector<RunRecord>& v) {
            for (const auto& r : v) {
                kin = std::max(kin, r.res_kin / r.state_scale);
                flow = std::max(flow, r.res_flow / r.state_scale);
                eq = std::max({eq, r.res_memb, r.res_bend});
                kin_scale = std::max(kin_scale, r.state_scale);
            }
        };
        fold(ladder);
        fold(others);
        fold(refined);
        const bool ok = kin <= 1e-9 && flow <= 1e-9 && eq <= 1e-4;
        report(4, "Euler-Lagrange residuals vanish to solver tolerance", ok,
               "kinematic " + fmt(kin) + ", flow " + fmt(flow) + ", equilibrium " + fmt(eq));
    }

    // 5: per-step energy ledger.
    {
        double worst = 0.0;
        const auto fold = [&](const std::vector<RunRecord>& v) {
            for (const auto& r : v) worst = std::min(worst, r.min_slack / r.slack_scale);
        };
        fold(ladder);
        fold(others);
        report(5, "energy ledger slack is nonnegative on every step", worst >= -1e-8,
               "min relative slack " + fmt(worst));
    }

    // 6: perfect-plasticity trend of the yield excess and the flow-rule gap.
    {
        const double a0 = pb.alpha0;
        bool monotone = true, nontrivial = true, small16 = true, gap_ok = true;
        std::string detail;
        for (double lam : pb.lambdas) {
            double prev = -1.0;
            for (int N : pb.Ns) {
                for (const auto& r : ladder) {
                    if (r.N != N || r.lambda != lam) continue;
                    if (prev >= 0.0 && r.max_excess > prev + 1e-3 * a0) monotone = false;
                    prev = r.max_excess;
                    if (N == 4 && r.max_excess <= 1e-3 * a0) nontrivial = false;
                    if (N == 16 && r.max_excess >= 0.05 * a0) small16 = false;
                    // Closed-form pointwise bound, valid while truncation idle.
                    if (r.max_s < r.lambda) {
                        const double bound =
                            std::pow((N - 1.0) / N, N - 1) * a0 / N;
                        if (r.max_gap > bound * (1.0 + 1e-9)) gap_ok = false;
                    }
                    if (lam == pb.lambdas.front())
                        detail += "N=" + std::to_string(N) + ":" + fmt(r.max_excess) + " ";
                }
            }
        }
        report(6, "yield excess decays in N; flow gap obeys the closed-form bound",
               monotone && nontrivial && small16 && gap_ok, detail + (gap_ok ? "" : "gap!"));
    }

    // 7: uniqueness of (sigma, u3) - the trajectory is independent of linear
    // solver and Newton initialization on every builtin scenario. Agreement
    // is limited by the Newton stopping tolerance amplified by the bending
    // stiffness, so the paths run with tightened tolerances.
    {
        double worst = 0.0;
        for (const char* name : {"quiescent", "elastic_bend", "plastic_bend",
                                 "inertial_ring", "static_f", "datum_shear"}) {
            const Config c = builtin_config(name);
            const Scenario S = make_scenario(c, c.Ns.front(), c.lambdas.front());
            SolverOptions tight = c.solver;
            tight.newton_rtol = 1e-12;
            tight.newton_xtol = 1e-11;
            SolverOptions cg = tight;
            cg.linear = LinearSolverKind::cg;
            SolverOptions zero = tight;
            zero.init = NewtonInit::zero;

            const Trajectory t0 = evolve(S, tight);
            const Trajectory t1 = evolve(S, cg);
            const Trajectory t2 = evolve(S, zero);
            double diff = 0.0, scale = 1.0;
            for (size_t i = 0; i < t0.states.size(); ++i) {
                for (size_t q = 0; q < t0.states[i].sigma.size(); ++q) {
                    diff = std::max(
                        {diff,
                         norm_frobenius(t0.states[i].sigma.v[q] - t1.states[i].sigma.v[q]),
                         norm_frobenius(t0.states[i].sigma.v[q] - t2.states[i].sigma.v[q])});
                    scale = std::max(scale, norm_frobenius(t0.states[i].sigma.v[q]));
                }
                for (size_t q = 0; q < t0.states[i].u.u3.size(); ++q)
                    diff = std::max(
                        {diff, std::abs(t0.states[i].u.u3.v[q] - t1.states[i].u.u3.v[q]),
                         std::abs(t0.states[i].u.u3.v[q] - t2.states[i].u.u3.v[q])});
            }
            worst = std::max(worst, diff / scale);
        }
        report(7, "trajectory independent of linear solver and Newton start",
               worst <= 1e-7, "max relative difference " + fmt(worst));
    }

    // 8: interior difference-quotient monitors. Compared at matched physical
    // margin (0.25) and offset (1/8) across mesh halvings: monitor m on mesh
    // 9*2^k with margin 2*2^k and quotient offset 2^k probes the same
    // continuum quantity. Bounded uniformly = the refinement sequence settles
    // (successive changes contract) and the finest-mesh values stay within a
    // fixed factor across N.
    {
        bool ok = true;
        std::string detail;
        std::vector<std::array<double, 5>> finest;  // per N: x, y, x3, time, vel
        for (int N : pb.Ns) {
            std::array<std::array<double, 3>, 5> q{};  // monitor x mesh level
            int mi = 0;
            for (int n : {9, 17, 33}) {
                Config c = pb;
                c.nx = c.ny = n;
                const RunRecord r = run_scenario(c, N, pb.lambdas.front());
                const RegularityReport rep = regularity_monitor(r.S, r.tr, 2 << mi);
                q[0][mi] = rep.space_x[mi];
                q[1][mi] = rep.space_y[mi];
                q[2][mi] = rep.space_x3;
                q[3][mi] = *std::max_element(rep.time_series.begin(),
                                             rep.time_series.end());
                q[4][mi] = *std::max_element(rep.velocity_series.begin(),
                                             rep.velocity_series.end());
                ++mi;
            }
            for (const auto& series : q) {
                for (double v : series)
                    if (!std::isfinite(v)) ok = false;
                // No growth trend: refinement changes contract by at least 0.6.
                const double d0 = std::abs(series[1] - series[0]);
                const double d1 = std::abs(series[2] - series[1]);
                if (d1 > 0.6 * d0 + 1e-12) ok = false;
            }
            finest.push_back({q[0][2], q[1][2], q[2][2], q[3][2], q[4][2]});
            detail += "N=" + std::to_string(N) + ":x" + fmt(q[0][2]) + " ";
        }
        for (int c = 0; c < 5; ++c) {
            const double lo = std::min({finest[0][c], finest[1][c], finest[2][c]});
            const double hi = std::max({finest[0][c], finest[1][c], finest[2][c]});
            if (lo > 0.0 && hi / lo > 1.25) ok = false;
        }
        report(8, "stress and velocity regularity monitors uniform in N and h", ok, detail);
    }

    // 9: time-independent in-plane force keeps the step quotients flat. The
    // first step re-equilibrates the analytic certificate stress against the
    // discrete operators (an O(1) initial-data artifact, identical for every
    // N) and is excluded.
    {
        const Config sf = builtin_config("static_f");
        bool ok = true;
        std::string detail;
        double max_over_N[2] = {0.0, 0.0};
        for (int N : sf.Ns) {
            const RunRecord r = run_scenario(sf, N, sf.lambdas.front());
            const RegularityReport rep = regularity_monitor(r.S, r.tr, 2);
            int which = 0;
            for (const auto* series : {&rep.time_series, &rep.velocity_series}) {
                std::vector<double> sorted(series->begin() + 1, series->end());
                std::sort(sorted.begin(), sorted.end());
                const double median = sorted[sorted.size() / 2];
                const double top = sorted.back();
                const double floor = 1e-12 * r.state_scale;
                if (top > 2.0 * median + floor) ok = false;
                max_over_N[which] = std::max(max_over_N[which], top);
                if (which == 0)
                    detail +=
                        "N=" + std::to_string(N) + ":" + fmt(top) + "/" + fmt(median) + " ";
                ++which;
            }
        }
        // Uniform over N: the largest stress quotient occurs at the smallest
        // N (fastest creep) and must stay at the N=4 level.
        if (!std::isfinite(max_over_N[0]) || !std::isfinite(max_over_N[1])) ok = false;
        report(9, "static-force runs have uniformly bounded step quotients", ok, detail);
    }
}

// --------------------------------------------------------------- criterion 10
// Discretization orders: implicit Euler in time, second-order stencils in
// space, and the duality-pairing defect.
void criterion_orders() {
    // Time: purely elastic oscillation, error against a fine reference.
    double terr[3];
    {
        Config c = builtin_config("elastic_bend");
        c.alpha0 = 1e6;  // keeps the flow inactive: pure elastodynamics
        c.lambdas = {1.0};
        c.loads.shape = "constant";
        c.T = 0.5;
        std::vector<int> ks = {20, 40, 80, 320};
        std::vector<ScalarField> finals;
        for (int k : ks) {
            Config ck = c;
            ck.k = k;
            const Scenario S = make_scenario(ck, ck.Ns.front(), 1.0);
            const Trajectory tr = evolve(S, ck.solver);
            finals.push_back(tr.states.back().u.u3);
        }
        for (int m = 0; m < 3; ++m) {
            double e = 0.0;
            for (size_t q = 0; q < finals[m].size(); ++q)
                e = std::max(e, std::abs(finals[m].v[q] - finals[3].v[q]));
            terr[m] = e;
        }
    }
    const double t_order = 0.5 * (std::log2(terr[0] / terr[1]) + std::log2(terr[1] / terr[2]));

    // Space: manufactured elastic membrane solution ubar = (a b, c b) with
    // b = (sin pi x sin pi y)^3, driven by the analytic load f = -Div C(E u).
    // The displacement vanishes to third order at the clamped band, so the
    // boundary ring stays consistent and the interior stencil order shows.
    double serr[3];
    {
        const double mu = 0.5, ell = 0.3, a = 1.0, cc = -0.7;
        int idx = 0;
        for (int n : {9, 17, 33}) {
            Scenario S;
            S.name = "manufactured";
            S.grid.nx = S.grid.ny = n;
            S.grid.layers = gauss_legendre_layers(2);
            S.grid.dirichlet = {true, true, true, true};
            S.elasticity = Elasticity(mu, ell);
            S.trunc = TruncationParams(NortonHoffParams(4, 1e6), 1e7);
            S.time = TimeGrid{0.1, 2};
            const PlateGrid g = S.grid;
            S.f_at = [g, mu, ell, a, cc](int) {
                VecField f(g);
                for (int j = 0; j < g.ny; ++j)
                    for (int i = 0; i < g.nx; ++i) {
                        const double x = g.x(i), y = g.y(j);
                        const double sx = std::sin(M_PI * x), sy = std::sin(M_PI * y);
                        const double cx = std::cos(M_PI * x), cy = std::cos(M_PI * y);
                        const double bxx =
                            3 * M_PI * M_PI * sx * (2 * cx * cx - sx * sx) * sy * sy * sy;
                        const double byy =
                            3 * M_PI * M_PI * sx * sx * sx * sy * (2 * cy * cy - sy * sy);
                        const double bxy = 9 * M_PI * M_PI * sx * sx * cx * sy * sy * cy;
                        f.x.at(i, j) = -(2 * mu * a * bxx + ell * (a * bxx + cc * bxy) +
                                         mu * (a * byy + cc * bxy));
                        f.y.at(i, j) = -(mu * (a * bxy + cc * bxx) + 2 * mu * cc * byy +
                                         ell * (a * bxy + cc * byy));
                    }
                return f;
            };
            S.u0 = KLDisplacement(g);
            S.sigma0 = LayeredField(g);
            S.v0_3 = ScalarField(g);
            const PlateState& fin = evolve(S).states.back();
            double e = 0.0;
            for (int j = 0; j < n; ++j)
                for (int i = 0; i < n; ++i) {
                    const double b =
                        std::pow(std::sin(M_PI * g.x(i)) * std::sin(M_PI * g.y(j)), 3);
                    e = std::max(e, std::abs(fin.u.ubar.x.at(i, j) - a * b));
                    e = std::max(e, std::abs(fin.u.ubar.y.at(i, j) - cc * b));
                }
            serr[idx++] = e;
        }
    }
    const double s_order = 0.5 * (std::log2(serr[0] / serr[1]) + std::log2(serr[1] / serr[2]));

    // Duality defect against mesh refinement on manufactured smooth fields.
    double derr[2];
    {
        int idx = 0;
        for (const int n : {17, 33}) {
            PlateGrid g;
            g.nx = g.ny = n;
            g.layers = gauss_legendre_layers(3);
            KLDisplacement u(g), w(g);
            LayeredField sigma(g), e(g), p(g);
            for (int j = 0; j < g.ny; ++j)
                for (int i = 0; i < g.nx; ++i) {
                    const double x = g.x(i), y = g.y(j);
                    const double sx = std::sin(M_PI * x), sy = std::sin(M_PI * y);
                    const double cx = std::cos(M_PI * x), cy = std::cos(M_PI * y);
                    const double b = sx * sx * sx * sy * sy * sy;
                    const double bx = 3.0 * M_PI * sx * sx * cx * sy * sy * sy;
                    const double by = 3.0 * M_PI * sx * sx * sx * sy * sy * cy;
                    const double bxx =
                        3.0 * M_PI * M_PI * sx * (2.0 * cx * cx - sx * sx) * sy * sy * sy;
                    const double byy =
                        3.0 * M_PI * M_PI * sx * sx * sx * sy * (2.0 * cy * cy - sy * sy);
                    const double bxy = 9.0 * M_PI * M_PI * sx * sx * cx * sy * sy * cy;
                    u.ubar.x.at(i, j) = 0.5 * b;
                    u.u3.at(i, j) = b * b;
                    const Sym2 Eub{0.5 * bx, 0.0, 0.25 * by};
                    const Sym2 H{2.0 * (bx * bx + b * bxx), 2.0 * (by * by + b * byy),
                                 2.0 * (bx * by + b * bxy)};
                    for (int l = 0; l < g.nlayers(); ++l) {
                        const double x3 = g.layers[l].x3;
                        const Sym2 Eu = Eub - x3 * H;
                        const Sym2 pl = b * Sym2{0.2, -0.1, 0.15};
                        p.at(i, j, l) = pl;
                        e.at(i, j, l) = Eu - pl;
                        sigma.at(i, j, l) =
                            b * Sym2{1.0, 0.4, -0.6} + (x3 * b) * Sym2{-0.3, 0.8, 0.2};
                    }
                }
            derr[idx++] = std::abs(duality_pairing_defect(g, sigma, u, e, p, w).defect);
        }
    }
    const double d_order = std::log2(derr[0] / derr[1]);

    const bool ok = t_order >= 0.8 && s_order >= 1.8 && d_order >= 1.6 && d_order <= 3.2;
    report(10, "discretization orders: time, space, duality defect", ok,
           "time " + fmt(t_order) + ", space " + fmt(s_order) + ", duality " + fmt(d_order));
}

}  // namespace

int main() {
    criterion_conjugate();
    criterion_norms();
    criterion_oracle();
    criteria_benchmarks();
    criterion_orders();
    if (failures == 0)
        std::printf("acceptance: all criteria passed\n");
    else
        std::printf("acceptance: %d criterion(s) FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
