// Second-order finite-difference stencils on the plate grid.  Interior nodes
// use central differences, boundary nodes one-sided closures of the same
// order (first order only on degenerate 3-node axes, needed by the tiny
// oracle grids).
//
// The OpenMP kernels in plp:: are the production path; plp::serial holds the
// plain-loop reference implementations the tests compare against.
#pragma once

#include "plastiplate/fields.hpp"
#include "plastiplate/grid.hpp"

namespace plp {

// One row of stencil coefficients: f'(i) ~ sum_k c[k] * f(i + off[k]) etc.
struct StencilRow {
    int off[4];
    double c[4];
    int len;
};

// First derivative along an axis with n nodes and spacing h.
StencilRow d1_row(int n, int i, double h);
// Second derivative along an axis with n nodes and spacing h.
StencilRow d2_row(int n, int i, double h);

// Derivatives of scalar fields (OpenMP over rows).
ScalarField dx(const ScalarField& f, const PlateGrid& g);
ScalarField dy(const ScalarField& f, const PlateGrid& g);
ScalarField dxx(const ScalarField& f, const PlateGrid& g);
ScalarField dyy(const ScalarField& f, const PlateGrid& g);
ScalarField dxy(const ScalarField& f, const PlateGrid& g);  // dy applied after dx

// E(ubar) = sym(D ubar)
Sym2Field sym_grad(const VecField& ubar, const PlateGrid& g);
// D^2 u3
Sym2Field hessian(const ScalarField& u3, const PlateGrid& g);

// Div of a Sym2 field: (Div s)_a = d_b s_ab.
VecField div_sym2(const Sym2Field& s, const PlateGrid& g);
// Div Div of a Sym2 field.
ScalarField divdiv_sym2(const Sym2Field& s, const PlateGrid& g);

namespace serial {
ScalarField dx(const ScalarField& f, const PlateGrid& g);
ScalarField dy(const ScalarField& f, const PlateGrid& g);
ScalarField dxx(const ScalarField& f, const PlateGrid& g);
ScalarField dyy(const ScalarField& f, const PlateGrid& g);
Sym2Field sym_grad(const VecField& ubar, const PlateGrid& g);
Sym2Field hessian(const ScalarField& u3, const PlateGrid& g);
}  // namespace serial

}  // namespace plp
