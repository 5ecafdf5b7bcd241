// Kirchhoff-Love kinematics and thickness moments.
#pragma once

#include "plastiplate/fields.hpp"
#include "plastiplate/stencils.hpp"

namespace plp {

// E u(x', x3) = E ubar(x') - x3 D^2 u3(x') at every quadrature layer.
LayeredField kl_strain(const KLDisplacement& u, const PlateGrid& g);

// fbar = integral over the thickness.
Sym2Field moment_zero(const LayeredField& f, const PlateGrid& g);
// fhat = 12 * integral of x3 f over the thickness.
Sym2Field moment_first(const LayeredField& f, const PlateGrid& g);
// f_perp = f - fbar - x3 fhat; both moments of the result vanish.
LayeredField perp_part(const LayeredField& f, const PlateGrid& g);

namespace serial {
LayeredField kl_strain(const KLDisplacement& u, const PlateGrid& g);
Sym2Field moment_zero(const LayeredField& f, const PlateGrid& g);
Sym2Field moment_first(const LayeredField& f, const PlateGrid& g);
}  // namespace serial

}  // namespace plp
