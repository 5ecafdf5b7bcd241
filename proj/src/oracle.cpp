#include "plastiplate/oracle.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "plastiplate/material.hpp"
#include "plastiplate/stencils.hpp"

namespace plp::oracle {

double conjugate_numeric(const Sym2& y, const TruncationParams& p) {
    const int N = p.base.N;
    const double a = p.base.alpha0;
    const double t = norm_dual(y);
    // Radius bound from the stationarity condition c(|xi|_r) |xi|_r = |y|_*.
    const double r_low = a * std::pow(1.0 + t, 1.0 / (N - 1)) * (1.0 + t);
    const double r_high = t * std::pow(a, N - 1) / std::pow(p.lambda, N - 2);
    const double R = 3.0 * (r_low + r_high + p.lambda);

    auto obj = [&](double x11, double x22, double x12) {
        const Sym2 xi{x11, x22, x12};
        return ddot(y, xi) - psi_lambda(xi, p);
    };

    const int steps = 24;
    double best = obj(0.0, 0.0, 0.0);
    double b11 = 0.0, b22 = 0.0, b12 = 0.0;
    bool on_boundary = false;
    for (int i = 0; i <= steps; ++i)
        for (int j = 0; j <= steps; ++j)
            for (int k = 0; k <= steps; ++k) {
                const double x11 = -R + 2.0 * R * i / steps;
                const double x22 = -R + 2.0 * R * j / steps;
                const double x12 = -R + 2.0 * R * k / steps;
                const double v = obj(x11, x22, x12);
                if (v > best) {
                    best = v;
                    b11 = x11;
                    b22 = x22;
                    b12 = x12;
                    on_boundary = (i == 0 || i == steps || j == 0 || j == steps || k == 0 || k == steps);
                }
            }
    if (on_boundary)
        throw std::runtime_error("conjugate_numeric: maximizer hit the search cube boundary");

    // Gradient ascent with backtracking on the concave objective.
    double x11 = b11, x22 = b22, x12 = b12;
    double step = R / steps;
    for (int it = 0; it < 20000; ++it) {
        const Sym2 d = dpsi_lambda({x11, x22, x12}, p);
        const double g11 = y.a11 - d.a11;
        const double g22 = y.a22 - d.a22;
        const double g12 = 2.0 * (y.a12 - d.a12);
        const double gn = std::sqrt(g11 * g11 + g22 * g22 + g12 * g12);
        if (gn <= 1e-13 * (1.0 + t)) break;
        double cur = obj(x11, x22, x12);
        bool moved = false;
        for (int ls = 0; ls < 60; ++ls) {
            const double v = obj(x11 + step * g11, x22 + step * g22, x12 + step * g12);
            if (v > cur) {
                x11 += step * g11;
                x22 += step * g22;
                x12 += step * g12;
                step *= 1.5;
                moved = true;
                break;
            }
            step *= 0.5;
        }
        if (!moved) break;
    }
    return std::max(best, obj(x11, x22, x12));
}

namespace {

// Dense derivative matrices built from the same stencil rows as the solver.
Eigen::MatrixXd axis_matrix_dense(const PlateGrid& g, bool along_x, bool second) {
    const int n = g.nodes();
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            const int axis_n = along_x ? g.nx : g.ny;
            const int axis_i = along_x ? i : j;
            const double h = along_x ? g.hx() : g.hy();
            const StencilRow r = second ? d2_row(axis_n, axis_i, h) : d1_row(axis_n, axis_i, h);
            for (int k = 0; k < r.len; ++k) {
                const int ii = along_x ? i + r.off[k] : i;
                const int jj = along_x ? j : j + r.off[k];
                m(g.id(i, j), g.id(ii, jj)) += r.c[k];
            }
        }
    return m;
}

}  // namespace

OracleResult minimize_incremental(const Scenario& S, const PlateState& prev, int i, int max_iter,
                                  double grad_tol) {
    const PlateGrid& g = S.grid;
    const int n = g.nodes();
    const int nl = g.nlayers();
    const double delta = S.time.delta();
    const Elasticity& el = S.elasticity;

    const Eigen::MatrixXd D1 = axis_matrix_dense(g, true, false);
    const Eigen::MatrixXd D2 = axis_matrix_dense(g, false, false);
    const Eigen::MatrixXd Dxx = axis_matrix_dense(g, true, true);
    const Eigen::MatrixXd Dyy = axis_matrix_dense(g, false, true);
    const Eigen::MatrixXd M12 = D2 * D1;

    Eigen::MatrixXd Sm = Eigen::MatrixXd::Zero(3 * n, 3 * n);
    Sm.block(0, 0, n, n) = D1;
    Sm.block(n, n, n, n) = D2;
    Sm.block(2 * n, 0, n, n) = 0.5 * D2;
    Sm.block(2 * n, n, n, n) = 0.5 * D1;
    Eigen::MatrixXd Km = Eigen::MatrixXd::Zero(3 * n, 3 * n);
    Km.block(0, 2 * n, n, n) = Dxx;
    Km.block(n, 2 * n, n, n) = Dyy;
    Km.block(2 * n, 2 * n, n, n) = M12;

    const VecField f = S.f_at ? S.f_at(i) : VecField(g);
    const ScalarField gl = S.g_at ? S.g_at(i) : ScalarField(g);
    const KLDisplacement w = S.w_at ? S.w_at(i) : KLDisplacement(g);

    std::vector<char> is_fixed(static_cast<size_t>(3) * n, 0);
    Eigen::VectorXd xfix = Eigen::VectorXd::Zero(3 * n);
    std::vector<int> free_idx;
    for (int j = 0; j < g.ny; ++j)
        for (int ii = 0; ii < g.nx; ++ii) {
            const int m = g.id(ii, j);
            if (g.on_dirichlet_edge(ii, j)) {
                is_fixed[m] = 1;
                is_fixed[n + m] = 1;
                xfix[m] = w.ubar.x.at(ii, j);
                xfix[n + m] = w.ubar.y.at(ii, j);
            }
            if (g.on_dirichlet_band(ii, j)) {
                is_fixed[2 * n + m] = 1;
                xfix[2 * n + m] = w.u3.at(ii, j);
            }
        }
    for (int d = 0; d < 3 * n; ++d)
        if (!is_fixed[d]) free_idx.push_back(d);
    const int nf = static_cast<int>(free_idx.size());
    const int nq = 3 * n * nl;  // plastic increment components, (node, layer) blocks
    const int nz = nf + nq;

    auto expand = [&](const Eigen::VectorXd& z) {
        Eigen::VectorXd x = xfix;
        for (int c = 0; c < nf; ++c) x[free_idx[c]] = z[c];
        return x;
    };

    // Objective and gradient of the incremental functional in (x_free, q).
    auto eval = [&](const Eigen::VectorXd& z, Eigen::VectorXd* grad) {
        const Eigen::VectorXd x = expand(z);
        const Eigen::VectorXd sv = Sm * x;
        const Eigen::VectorXd cv = Km * x;
        Eigen::VectorXd Rs, Rk;
        if (grad) {
            grad->setZero(nz);
            Rs = Eigen::VectorXd::Zero(3 * n);
            Rk = Eigen::VectorXd::Zero(3 * n);
        }
        double val = 0.0;
        for (int m = 0; m < n; ++m) {
            const int ii = m % g.nx;
            const int j = m / g.nx;
            const double a = g.node_weight(ii, j);
            const Sym2 memb{sv[m], sv[n + m], sv[2 * n + m]};
            const Sym2 curv{cv[m], cv[n + m], cv[2 * n + m]};
            Sym2 rs, rk;
            for (int l = 0; l < nl; ++l) {
                const double x3 = g.layers[l].x3;
                const double wl = g.layers[l].weight;
                const int qb = nf + 3 * (m * nl + l);
                const Sym2 qcur{z[qb], z[qb + 1], z[qb + 2]};
                const Sym2 ee = memb - x3 * curv - prev.plastic.at(ii, j, l) - qcur;
                const Sym2 sig = apply_C(ee, el);
                val += a * wl * (0.5 * ddot(sig, ee) + delta * F_lambda(qcur * (1.0 / delta), S.trunc));
                if (grad) {
                    const Sym2 ms{sig.a11, sig.a22, 2.0 * sig.a12};
                    rs += (a * wl) * ms;
                    rk += (a * wl * x3) * ms;
                    const Sym2 df = dF_lambda(qcur * (1.0 / delta), S.trunc);
                    (*grad)[qb] = a * wl * (-sig.a11 + df.a11);
                    (*grad)[qb + 1] = a * wl * (-sig.a22 + df.a22);
                    (*grad)[qb + 2] = a * wl * 2.0 * (-sig.a12 + df.a12);
                }
            }
            const double quot = (x[2 * n + m] - 2.0 * prev.u.u3.at(ii, j) + prev.u3_prev.at(ii, j)) / delta;
            val += 0.5 * a * quot * quot;
            val -= a * (f.x.at(ii, j) * x[m] + f.y.at(ii, j) * x[n + m] + gl.at(ii, j) * x[2 * n + m]);
            if (grad) {
                Rs[m] = rs.a11;
                Rs[n + m] = rs.a22;
                Rs[2 * n + m] = rs.a12;
                Rk[m] = rk.a11;
                Rk[n + m] = rk.a22;
                Rk[2 * n + m] = rk.a12;
            }
        }
        if (grad) {
            Eigen::VectorXd gfull = Sm.transpose() * Rs - Km.transpose() * Rk;
            for (int m = 0; m < n; ++m) {
                const int ii = m % g.nx;
                const int j = m / g.nx;
                const double a = g.node_weight(ii, j);
                const double quot =
                    (x[2 * n + m] - 2.0 * prev.u.u3.at(ii, j) + prev.u3_prev.at(ii, j));
                gfull[2 * n + m] += a * quot / (delta * delta);
                gfull[m] -= a * f.x.at(ii, j);
                gfull[n + m] -= a * f.y.at(ii, j);
                gfull[2 * n + m] -= a * gl.at(ii, j);
            }
            for (int c = 0; c < nf; ++c) (*grad)[c] = gfull[free_idx[c]];
        }
        return val;
    };

    // Restarted FISTA with backtracked Lipschitz estimate.
    Eigen::VectorXd zc = Eigen::VectorXd::Zero(nz);
    {
        // warm start from the previous displacement
        Eigen::VectorXd x0(3 * n);
        for (int m = 0; m < n; ++m) {
            const int ii = m % g.nx;
            const int j = m / g.nx;
            x0[m] = prev.u.ubar.x.at(ii, j);
            x0[n + m] = prev.u.ubar.y.at(ii, j);
            x0[2 * n + m] = prev.u.u3.at(ii, j);
        }
        for (int c = 0; c < nf; ++c) zc[c] = x0[free_idx[c]];
    }
    Eigen::VectorXd zy = zc;
    double L = 1.0, theta = 1.0;
    Eigen::VectorXd gradv(nz);
    double fbest = eval(zc, nullptr);
    int it = 0;
    double gnorm = 0.0, gscale = 1.0;
    for (it = 0; it < max_iter; ++it) {
        const double fy = eval(zy, &gradv);
        gnorm = gradv.lpNorm<Eigen::Infinity>();
        if (it == 0) gscale = 1.0 + gnorm;
        if (gnorm <= grad_tol * gscale) {
            zc = zy;
            break;
        }
        Eigen::VectorXd znew;
        double fnew;
        for (;;) {
            znew = zy - gradv / L;
            fnew = eval(znew, nullptr);
            if (fnew <= fy - 0.5 / L * gradv.squaredNorm()) break;
            L *= 2.0;
            if (L > 1e30) throw std::runtime_error("oracle: Lipschitz backtracking diverged");
        }
        const double theta_new = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * theta * theta));
        Eigen::VectorXd zn = znew + ((theta - 1.0) / theta_new) * (znew - zc);
        if (fnew > fbest) {  // function-value restart
            zn = znew;
            theta = 1.0;
        } else {
            theta = theta_new;
            fbest = fnew;
        }
        zc = znew;
        zy = zn;
        L *= 0.9;
    }

    OracleResult res;
    res.iterations = it;
    res.grad_norm = gnorm;
    Eigen::VectorXd grad_final(nz);
    res.objective = eval(zc, &grad_final);
    res.grad_norm = grad_final.lpNorm<Eigen::Infinity>();

    const Eigen::VectorXd x = expand(zc);
    const Eigen::VectorXd sv = Sm * x;
    const Eigen::VectorXd cv = Km * x;
    res.u = KLDisplacement(g);
    res.plastic = LayeredField(g);
    res.sigma = LayeredField(g);
    for (int m = 0; m < n; ++m) {
        const int ii = m % g.nx;
        const int j = m / g.nx;
        res.u.ubar.x.at(ii, j) = x[m];
        res.u.ubar.y.at(ii, j) = x[n + m];
        res.u.u3.at(ii, j) = x[2 * n + m];
        const Sym2 memb{sv[m], sv[n + m], sv[2 * n + m]};
        const Sym2 curv{cv[m], cv[n + m], cv[2 * n + m]};
        for (int l = 0; l < nl; ++l) {
            const int qb = nf + 3 * (m * nl + l);
            const Sym2 qcur{zc[qb], zc[qb + 1], zc[qb + 2]};
            res.plastic.at(ii, j, l) = prev.plastic.at(ii, j, l) + qcur;
            const Sym2 eta = memb - g.layers[l].x3 * curv - prev.plastic.at(ii, j, l);
            res.sigma.at(ii, j, l) = apply_C(eta - qcur, el);
        }
    }
    return res;
}

}  // namespace plp::oracle
