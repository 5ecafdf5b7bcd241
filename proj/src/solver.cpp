#include "plastiplate/solver.hpp"

#include <Eigen/Sparse>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "plastiplate/kinematics.hpp"
#include "plastiplate/material.hpp"
#include "plastiplate/stencils.hpp"

namespace plp {

namespace {

using SpMat = Eigen::SparseMatrix<double>;
using Triplet = Eigen::Triplet<double>;

// n x n first or second derivative matrix along one grid axis.
SpMat axis_matrix(const PlateGrid& g, bool along_x, bool second) {
    const int n = g.nodes();
    std::vector<Triplet> trip;
    trip.reserve(static_cast<size_t>(n) * 4);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            const int axis_n = along_x ? g.nx : g.ny;
            const int axis_i = along_x ? i : j;
            const double h = along_x ? g.hx() : g.hy();
            const StencilRow r = second ? d2_row(axis_n, axis_i, h) : d1_row(axis_n, axis_i, h);
            for (int k = 0; k < r.len; ++k) {
                const int ii = along_x ? i + r.off[k] : i;
                const int jj = along_x ? j : j + r.off[k];
                trip.emplace_back(g.id(i, j), g.id(ii, jj), r.c[k]);
            }
        }
    SpMat m(n, n);
    m.setFromTriplets(trip.begin(), trip.end());
    return m;
}

void append_block(std::vector<Triplet>& trip, const SpMat& m, int row0, int col0, double scale) {
    for (int k = 0; k < m.outerSize(); ++k)
        for (SpMat::InnerIterator it(m, k); it; ++it)
            trip.emplace_back(row0 + static_cast<int>(it.row()), col0 + static_cast<int>(it.col()),
                              scale * it.value());
}

}  // namespace

struct IncrementalSolver::Impl {
    Scenario S;
    SolverOptions opt;
    int n;   // omega nodes
    int nl;  // thickness layers
    SpMat Sm;  // x -> (E11, E22, E12) of ubar, stacked by component
    SpMat Km;  // x -> (H11, H22, H12) of u3
    std::vector<int> free_idx;    // free dof indices into x
    std::vector<char> is_fixed;   // size 3n
    SpMat P;                      // 3n x nf selection of free dofs

    Impl(const Scenario& sc, const SolverOptions& o) : S(sc), opt(o) {
        const PlateGrid& g = S.grid;
        n = g.nodes();
        nl = g.nlayers();

        const SpMat D1 = axis_matrix(g, true, false);
        const SpMat D2 = axis_matrix(g, false, false);
        const SpMat Dxx = axis_matrix(g, true, true);
        const SpMat Dyy = axis_matrix(g, false, true);
        const SpMat M12 = D2 * D1;  // matches the dxy kernel (dy after dx)

        std::vector<Triplet> ts;
        append_block(ts, D1, 0, 0, 1.0);
        append_block(ts, D2, n, n, 1.0);
        append_block(ts, D2, 2 * n, 0, 0.5);
        append_block(ts, D1, 2 * n, n, 0.5);
        Sm = SpMat(3 * n, 3 * n);
        Sm.setFromTriplets(ts.begin(), ts.end());

        ts.clear();
        append_block(ts, Dxx, 0, 2 * n, 1.0);
        append_block(ts, Dyy, n, 2 * n, 1.0);
        append_block(ts, M12, 2 * n, 2 * n, 1.0);
        Km = SpMat(3 * n, 3 * n);
        Km.setFromTriplets(ts.begin(), ts.end());

        is_fixed.assign(static_cast<size_t>(3) * n, 0);
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) {
                const int m = g.id(i, j);
                if (g.on_dirichlet_edge(i, j)) {
                    is_fixed[m] = 1;
                    is_fixed[n + m] = 1;
                }
                if (g.on_dirichlet_band(i, j)) is_fixed[2 * n + m] = 1;
            }
        for (int d = 0; d < 3 * n; ++d)
            if (!is_fixed[d]) free_idx.push_back(d);

        std::vector<Triplet> tp;
        tp.reserve(free_idx.size());
        for (size_t c = 0; c < free_idx.size(); ++c)
            tp.emplace_back(free_idx[c], static_cast<int>(c), 1.0);
        P = SpMat(3 * n, static_cast<int>(free_idx.size()));
        P.setFromTriplets(tp.begin(), tp.end());
    }

    // Writes the Dirichlet datum of step i into the fixed entries of x.
    void apply_datum(Eigen::VectorXd& x, const KLDisplacement& w) const {
        const PlateGrid& g = S.grid;
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) {
                const int m = g.id(i, j);
                if (is_fixed[m]) x[m] = w.ubar.x.at(i, j);
                if (is_fixed[n + m]) x[n + m] = w.ubar.y.at(i, j);
                if (is_fixed[2 * n + m]) x[2 * n + m] = w.u3.at(i, j);
            }
    }

    // One sweep over all material points: return map at the trial strains,
    // incremental energy, and (optionally) the first-order residual and the
    // per-node tangent moments for the Hessian.
    struct SweepResult {
        double energy = 0.0;
        double internal_norm = 0.0;  // inf-norm of the internal force part
        bool ok = true;
        std::string error;
    };

    SweepResult sweep(const Eigen::VectorXd& x, const LayeredField& p_prev,
                      const ScalarField& u3_prev, const ScalarField& u3_prev2,
                      const VecField& f, const ScalarField& gl, LayeredField* sigma_out,
                      Eigen::VectorXd* grad, std::vector<double>* mt_blocks) const {
        const PlateGrid& g = S.grid;
        const double delta = S.time.delta();
        const Elasticity& el = S.elasticity;
        SweepResult res;

        const Eigen::VectorXd sv = Sm * x;
        const Eigen::VectorXd cv = Km * x;

        Eigen::VectorXd Rs, Rk;
        if (grad) {
            Rs = Eigen::VectorXd::Zero(3 * n);
            Rk = Eigen::VectorXd::Zero(3 * n);
            if (mt_blocks) mt_blocks->assign(static_cast<size_t>(n) * 27, 0.0);
        }

        double energy = 0.0;
        bool failed = false;
        std::string failmsg;
#pragma omp parallel for reduction(+ : energy)
        for (int m = 0; m < n; ++m) {
            if (failed) continue;
            const int i = m % g.nx;
            const int j = m / g.nx;
            const double a = g.node_weight(i, j);
            const Sym2 memb{sv[m], sv[n + m], sv[2 * n + m]};
            const Sym2 curv{cv[m], cv[n + m], cv[2 * n + m]};
            Sym2 rs_acc, rk_acc;
            double mt_s[9] = {0}, mt_k[9] = {0}, mt_kk[9] = {0};
            for (int l = 0; l < nl; ++l) {
                const double x3 = g.layers[l].x3;
                const double wl = g.layers[l].weight;
                const Sym2 eta = memb - x3 * curv - p_prev.at(i, j, l);
                ReturnMapResult rm;
                try {
                    rm = return_map(eta, delta, el, S.trunc, opt.return_map_tol);
                } catch (const std::exception& ex) {
#pragma omp critical
                    {
                        failed = true;
                        failmsg = ex.what();
                    }
                    break;
                }
                if (sigma_out) sigma_out->at(i, j, l) = rm.sigma;
                energy += a * wl * (0.5 * ddot(rm.sigma, apply_A(rm.sigma, el)) +
                                    delta * F_lambda(dpsi_lambda(rm.sigma, S.trunc), S.trunc));
                if (grad) {
                    const Sym2 ms{rm.sigma.a11, rm.sigma.a22, 2.0 * rm.sigma.a12};
                    rs_acc += (a * wl) * ms;
                    rk_acc += (a * wl * x3) * ms;
                    if (mt_blocks) {
                        const Sym2Operator T = return_map_tangent(eta, rm, delta, el, S.trunc);
                        for (int r = 0; r < 3; ++r) {
                            const double mw = (r == 2) ? 2.0 : 1.0;
                            for (int c = 0; c < 3; ++c) {
                                const double v = mw * T.m[r][c];
                                mt_s[r * 3 + c] += a * wl * v;
                                mt_k[r * 3 + c] += a * wl * x3 * v;
                                mt_kk[r * 3 + c] += a * wl * x3 * x3 * v;
                            }
                        }
                    }
                }
            }
            if (grad) {
                Rs[m] = rs_acc.a11;
                Rs[n + m] = rs_acc.a22;
                Rs[2 * n + m] = rs_acc.a12;
                Rk[m] = rk_acc.a11;
                Rk[n + m] = rk_acc.a22;
                Rk[2 * n + m] = rk_acc.a12;
                if (mt_blocks) {
                    double* b = mt_blocks->data() + static_cast<size_t>(m) * 27;
                    for (int q = 0; q < 9; ++q) {
                        b[q] = mt_s[q];
                        b[9 + q] = mt_k[q];
                        b[18 + q] = mt_kk[q];
                    }
                }
            }
            // Kinetic and load terms.
            const double quot = (x[2 * n + m] - 2.0 * u3_prev.at(i, j) + u3_prev2.at(i, j)) / delta;
            energy += 0.5 * a * quot * quot;
            energy -= a * (f.x.at(i, j) * x[m] + f.y.at(i, j) * x[n + m] + gl.at(i, j) * x[2 * n + m]);
        }
        if (failed) {
            res.ok = false;
            res.error = failmsg;
            return res;
        }
        res.energy = energy;

        if (grad) {
            Eigen::VectorXd gvec = Sm.transpose() * Rs - Km.transpose() * Rk;
            res.internal_norm = gvec.lpNorm<Eigen::Infinity>();
            double ext_norm = 0.0;
            for (int m = 0; m < n; ++m) {
                const int i = m % g.nx;
                const int j = m / g.nx;
                const double a = g.node_weight(i, j);
                const double quot2 = (x[2 * n + m] - 2.0 * u3_prev.at(i, j) + u3_prev2.at(i, j));
                gvec[2 * n + m] += a * quot2 / (delta * delta);
                gvec[m] -= a * f.x.at(i, j);
                gvec[n + m] -= a * f.y.at(i, j);
                gvec[2 * n + m] -= a * gl.at(i, j);
                ext_norm = std::max(ext_norm, a * std::max({std::abs(f.x.at(i, j)), std::abs(f.y.at(i, j)),
                                                            std::abs(gl.at(i, j))}));
            }
            res.internal_norm = std::max(res.internal_norm, ext_norm);
            *grad = std::move(gvec);
        }
        return res;
    }

    SpMat hessian(const std::vector<double>& mt_blocks, double delta) const {
        const PlateGrid& g = S.grid;
        std::vector<Triplet> ts, tk, tkk;
        ts.reserve(static_cast<size_t>(n) * 9);
        tk.reserve(static_cast<size_t>(n) * 9);
        tkk.reserve(static_cast<size_t>(n) * 9);
        for (int m = 0; m < n; ++m) {
            const double* b = mt_blocks.data() + static_cast<size_t>(m) * 27;
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 3; ++c) {
                    if (b[r * 3 + c] != 0.0) ts.emplace_back(r * n + m, c * n + m, b[r * 3 + c]);
                    if (b[9 + r * 3 + c] != 0.0) tk.emplace_back(r * n + m, c * n + m, b[9 + r * 3 + c]);
                    if (b[18 + r * 3 + c] != 0.0) tkk.emplace_back(r * n + m, c * n + m, b[18 + r * 3 + c]);
                }
        }
        SpMat Bs(3 * n, 3 * n), Bk(3 * n, 3 * n), Bkk(3 * n, 3 * n);
        Bs.setFromTriplets(ts.begin(), ts.end());
        Bk.setFromTriplets(tk.begin(), tk.end());
        Bkk.setFromTriplets(tkk.begin(), tkk.end());

        const SpMat cross = Sm.transpose() * (Bk * Km);
        SpMat H = SpMat(Sm.transpose() * (Bs * Sm)) - cross - SpMat(cross.transpose()) +
                  SpMat(Km.transpose() * (Bkk * Km));

        std::vector<Triplet> td;
        td.reserve(n);
        for (int m = 0; m < n; ++m) {
            const int i = m % g.nx;
            const int j = m / g.nx;
            td.emplace_back(2 * n + m, 2 * n + m, g.node_weight(i, j) / (delta * delta));
        }
        SpMat Dk(3 * n, 3 * n);
        Dk.setFromTriplets(td.begin(), td.end());
        return H + Dk;
    }
};

PlateState seed_history(const Scenario& S) {
    const PlateGrid& g = S.grid;
    require_shape(S.u0.u3, g);
    require_shape(S.sigma0, g);
    require_shape(S.v0_3, g);

    PlateState st;
    st.u = S.u0;
    st.sigma = S.sigma0;
    st.strain = LayeredField(g);
    for (size_t q = 0; q < st.strain.size(); ++q) st.strain.v[q] = apply_A(S.sigma0.v[q], S.elasticity);
    const LayeredField total = kl_strain(S.u0, g);
    st.plastic = LayeredField(g);
    for (size_t q = 0; q < st.plastic.size(); ++q) st.plastic.v[q] = total.v[q] - st.strain.v[q];

    const double delta = S.time.delta();
    st.u3_prev = ScalarField(g);
    for (size_t q = 0; q < st.u3_prev.size(); ++q)
        st.u3_prev.v[q] = S.u0.u3.v[q] - delta * S.v0_3.v[q];
    st.step = 0;
    st.time = 0.0;
    return st;
}

IncrementalSolver::IncrementalSolver(const Scenario& S, const SolverOptions& opt)
    : impl_(std::make_unique<Impl>(S, opt)) {
    S.grid.validate();
    S.time.validate();
}

IncrementalSolver::~IncrementalSolver() = default;

const Scenario& IncrementalSolver::scenario() const { return impl_->S; }
const SolverOptions& IncrementalSolver::options() const { return impl_->opt; }

PlateState IncrementalSolver::step(const PlateState& prev, int i) const {
    const Impl& im = *impl_;
    const Scenario& S = im.S;
    const PlateGrid& g = S.grid;
    const int n = im.n;
    if (i < 1 || i > S.time.k) throw std::invalid_argument("step index out of range");

    const VecField f = S.f_at ? S.f_at(i) : VecField(g);
    const ScalarField gl = S.g_at ? S.g_at(i) : ScalarField(g);
    const KLDisplacement w = S.w_at ? S.w_at(i) : KLDisplacement(g);
    require_shape(f.x, g);
    require_shape(gl, g);
    require_shape(w.u3, g);

    Eigen::VectorXd x(3 * n);
    if (im.opt.init == NewtonInit::previous) {
        for (int m = 0; m < n; ++m) {
            const int ii = m % g.nx;
            const int jj = m / g.nx;
            x[m] = prev.u.ubar.x.at(ii, jj);
            x[n + m] = prev.u.ubar.y.at(ii, jj);
            x[2 * n + m] = prev.u.u3.at(ii, jj);
        }
    } else {
        x.setZero();
    }
    im.apply_datum(x, w);

    LayeredField sigma(g);
    const double xtol = im.opt.newton_xtol * im.opt.tol_scale;
    const double rtol = im.opt.newton_rtol * im.opt.tol_scale;
    double step_norm = 0.0;
    bool converged = false;
    int iters = 0;

    for (int it = 0; it < im.opt.newton_max_iter; ++it) {
        Eigen::VectorXd grad;
        std::vector<double> mt;
        const auto sw = im.sweep(x, prev.plastic, prev.u.u3, prev.u3_prev, f, gl, &sigma, &grad, &mt);
        if (!sw.ok) throw std::runtime_error("step " + std::to_string(i) + ": " + sw.error);

        const Eigen::VectorXd gf = im.P.transpose() * grad;
        const double rnorm = gf.lpNorm<Eigen::Infinity>();
        const double rscale = 1.0 + sw.internal_norm;
        const double xscale = 1.0 + x.lpNorm<Eigen::Infinity>();
        iters = it;
        if (rnorm <= rtol * rscale && (it == 0 || step_norm <= xtol * xscale)) {
            converged = true;
            break;
        }

        const SpMat H = im.hessian(mt, S.time.delta());
        const SpMat Hff = SpMat(im.P.transpose() * H * im.P);
        Eigen::VectorXd d;
        if (im.opt.linear == LinearSolverKind::ldlt) {
            Eigen::SimplicialLDLT<SpMat> solver(Hff);
            if (solver.info() != Eigen::Success)
                throw std::runtime_error("step " + std::to_string(i) + ": LDLT factorization failed");
            d = solver.solve(-gf);
        } else {
            Eigen::ConjugateGradient<SpMat, Eigen::Lower | Eigen::Upper> solver;
            solver.setTolerance(1e-13);
            solver.setMaxIterations(20 * Hff.rows());
            solver.compute(Hff);
            d = solver.solve(-gf);
            if (solver.info() != Eigen::Success)
                throw std::runtime_error("step " + std::to_string(i) + ": CG did not converge");
        }

        const double slope = gf.dot(d);
        // Predicted decrease below the energy's roundoff floor: the iterate is
        // the minimizer to working precision.
        if (-slope <= 4.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::abs(sw.energy))) {
            converged = true;
            break;
        }
        const Eigen::VectorXd dir = im.P * d;
        double t = 1.0;
        bool accepted = false;
        for (int ls = 0; ls <= im.opt.line_search_max; ++ls) {
            const Eigen::VectorXd xt = x + t * dir;
            const auto swt =
                im.sweep(xt, prev.plastic, prev.u.u3, prev.u3_prev, f, gl, nullptr, nullptr, nullptr);
            if (swt.ok && swt.energy <= sw.energy + 1e-4 * t * slope +
                              4.0 * std::numeric_limits<double>::epsilon() * std::abs(sw.energy)) {
                x = xt;
                step_norm = t * d.lpNorm<Eigen::Infinity>();
                accepted = true;
                break;
            }
            t *= 0.5;
        }
        if (!accepted)
            throw std::runtime_error("step " + std::to_string(i) +
                                     ": line search failed to decrease the incremental energy");
    }
    if (!converged)
        throw std::runtime_error("step " + std::to_string(i) + ": Newton did not converge in " +
                                 std::to_string(im.opt.newton_max_iter) + " iterations");

    // Final consistent fields at the accepted displacement.
    {
        const auto sw = im.sweep(x, prev.plastic, prev.u.u3, prev.u3_prev, f, gl, &sigma, nullptr, nullptr);
        if (!sw.ok) throw std::runtime_error("step " + std::to_string(i) + ": " + sw.error);
    }

    PlateState st;
    st.u = KLDisplacement(g);
    for (int m = 0; m < n; ++m) {
        const int ii = m % g.nx;
        const int jj = m / g.nx;
        st.u.ubar.x.at(ii, jj) = x[m];
        st.u.ubar.y.at(ii, jj) = x[n + m];
        st.u.u3.at(ii, jj) = x[2 * n + m];
    }
    st.sigma = sigma;
    st.strain = LayeredField(g);
    st.plastic = LayeredField(g);
    const double delta = S.time.delta();
    for (size_t q = 0; q < sigma.size(); ++q) {
        st.strain.v[q] = apply_A(sigma.v[q], S.elasticity);
        st.plastic.v[q] = prev.plastic.v[q] + delta * dpsi_lambda(sigma.v[q], S.trunc);
    }
    st.u3_prev = prev.u.u3;
    st.step = i;
    st.time = S.time.t(i);
    st.newton_iterations = iters;
    return st;
}

Trajectory evolve(const Scenario& S, const SolverOptions& opt) {
    IncrementalSolver solver(S, opt);
    Trajectory tr;
    tr.states.reserve(S.time.k + 1);
    tr.states.push_back(seed_history(S));
    for (int i = 1; i <= S.time.k; ++i) tr.states.push_back(solver.step(tr.states.back(), i));
    return tr;
}

}  // namespace plp
