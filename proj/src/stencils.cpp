#include "plastiplate/stencils.hpp"

namespace plp {

StencilRow d1_row(int n, int i, double h) {
    StencilRow r{};
    if (i == 0) {
        if (n >= 3) {
            r = {{0, 1, 2, 0}, {-1.5 / h, 2.0 / h, -0.5 / h, 0.0}, 3};
        } else {
            r = {{0, 1, 0, 0}, {-1.0 / h, 1.0 / h, 0.0, 0.0}, 2};
        }
    } else if (i == n - 1) {
        if (n >= 3) {
            r = {{0, -1, -2, 0}, {1.5 / h, -2.0 / h, 0.5 / h, 0.0}, 3};
        } else {
            r = {{0, -1, 0, 0}, {1.0 / h, -1.0 / h, 0.0, 0.0}, 2};
        }
    } else {
        r = {{-1, 1, 0, 0}, {-0.5 / h, 0.5 / h, 0.0, 0.0}, 2};
    }
    return r;
}

StencilRow d2_row(int n, int i, double h) {
    const double h2 = h * h;
    StencilRow r{};
    if (i == 0) {
        if (n >= 4) {
            r = {{0, 1, 2, 3}, {2.0 / h2, -5.0 / h2, 4.0 / h2, -1.0 / h2}, 4};
        } else {
            r = {{0, 1, 2, 0}, {1.0 / h2, -2.0 / h2, 1.0 / h2, 0.0}, 3};
        }
    } else if (i == n - 1) {
        if (n >= 4) {
            r = {{0, -1, -2, -3}, {2.0 / h2, -5.0 / h2, 4.0 / h2, -1.0 / h2}, 4};
        } else {
            r = {{0, -1, -2, 0}, {1.0 / h2, -2.0 / h2, 1.0 / h2, 0.0}, 3};
        }
    } else {
        r = {{-1, 0, 1, 0}, {1.0 / h2, -2.0 / h2, 1.0 / h2, 0.0}, 3};
    }
    return r;
}

namespace {

enum class Axis { x, y };

template <bool Parallel>
ScalarField apply_axis(const ScalarField& f, const PlateGrid& g, Axis axis, bool second) {
    require_shape(f, g);
    ScalarField out(g);
    const int nx = g.nx, ny = g.ny;
    const int n = (axis == Axis::x) ? nx : ny;
    const double h = (axis == Axis::x) ? g.hx() : g.hy();

#pragma omp parallel for if (Parallel)
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            const int k = (axis == Axis::x) ? i : j;
            const StencilRow r = second ? d2_row(n, k, h) : d1_row(n, k, h);
            double acc = 0.0;
            for (int t = 0; t < r.len; ++t) {
                const int ii = (axis == Axis::x) ? i + r.off[t] : i;
                const int jj = (axis == Axis::y) ? j + r.off[t] : j;
                acc += r.c[t] * f.at(ii, jj);
            }
            out.at(i, j) = acc;
        }
    }
    return out;
}

template <bool Parallel>
Sym2Field sym_grad_impl(const VecField& u, const PlateGrid& g) {
    const ScalarField e11 = apply_axis<Parallel>(u.x, g, Axis::x, false);
    const ScalarField e22 = apply_axis<Parallel>(u.y, g, Axis::y, false);
    const ScalarField du1dy = apply_axis<Parallel>(u.x, g, Axis::y, false);
    const ScalarField du2dx = apply_axis<Parallel>(u.y, g, Axis::x, false);
    Sym2Field out(g);
#pragma omp parallel for if (Parallel)
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
            out.at(i, j) = {e11.at(i, j), e22.at(i, j), 0.5 * (du1dy.at(i, j) + du2dx.at(i, j))};
    return out;
}

template <bool Parallel>
Sym2Field hessian_impl(const ScalarField& u3, const PlateGrid& g) {
    const ScalarField h11 = apply_axis<Parallel>(u3, g, Axis::x, true);
    const ScalarField h22 = apply_axis<Parallel>(u3, g, Axis::y, true);
    const ScalarField h12 =
        apply_axis<Parallel>(apply_axis<Parallel>(u3, g, Axis::x, false), g, Axis::y, false);
    Sym2Field out(g);
#pragma omp parallel for if (Parallel)
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
            out.at(i, j) = {h11.at(i, j), h22.at(i, j), h12.at(i, j)};
    return out;
}

}  // namespace

ScalarField dx(const ScalarField& f, const PlateGrid& g) { return apply_axis<true>(f, g, Axis::x, false); }
ScalarField dy(const ScalarField& f, const PlateGrid& g) { return apply_axis<true>(f, g, Axis::y, false); }
ScalarField dxx(const ScalarField& f, const PlateGrid& g) { return apply_axis<true>(f, g, Axis::x, true); }
ScalarField dyy(const ScalarField& f, const PlateGrid& g) { return apply_axis<true>(f, g, Axis::y, true); }
ScalarField dxy(const ScalarField& f, const PlateGrid& g) { return dy(dx(f, g), g); }

Sym2Field sym_grad(const VecField& u, const PlateGrid& g) { return sym_grad_impl<true>(u, g); }
Sym2Field hessian(const ScalarField& u3, const PlateGrid& g) { return hessian_impl<true>(u3, g); }

VecField div_sym2(const Sym2Field& s, const PlateGrid& g) {
    require_shape(s, g);
    ScalarField s11(g), s22(g), s12(g);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            s11.at(i, j) = s.at(i, j).a11;
            s22.at(i, j) = s.at(i, j).a22;
            s12.at(i, j) = s.at(i, j).a12;
        }
    const ScalarField a = dx(s11, g), b = dy(s12, g), c = dx(s12, g), d = dy(s22, g);
    VecField out(g);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            out.x.at(i, j) = a.at(i, j) + b.at(i, j);
            out.y.at(i, j) = c.at(i, j) + d.at(i, j);
        }
    return out;
}

ScalarField divdiv_sym2(const Sym2Field& s, const PlateGrid& g) {
    require_shape(s, g);
    ScalarField s11(g), s22(g), s12(g);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            s11.at(i, j) = s.at(i, j).a11;
            s22.at(i, j) = s.at(i, j).a22;
            s12.at(i, j) = s.at(i, j).a12;
        }
    const ScalarField a = dxx(s11, g), b = dyy(s22, g), c = dxy(s12, g);
    ScalarField out(g);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) out.at(i, j) = a.at(i, j) + b.at(i, j) + 2.0 * c.at(i, j);
    return out;
}

namespace serial {
ScalarField dx(const ScalarField& f, const PlateGrid& g) { return apply_axis<false>(f, g, Axis::x, false); }
ScalarField dy(const ScalarField& f, const PlateGrid& g) { return apply_axis<false>(f, g, Axis::y, false); }
ScalarField dxx(const ScalarField& f, const PlateGrid& g) { return apply_axis<false>(f, g, Axis::x, true); }
ScalarField dyy(const ScalarField& f, const PlateGrid& g) { return apply_axis<false>(f, g, Axis::y, true); }
Sym2Field sym_grad(const VecField& u, const PlateGrid& g) { return sym_grad_impl<false>(u, g); }
Sym2Field hessian(const ScalarField& u3, const PlateGrid& g) { return hessian_impl<false>(u3, g); }
}  // namespace serial

}  // namespace plp
