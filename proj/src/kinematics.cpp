#include "plastiplate/kinematics.hpp"

namespace plp {

namespace {

template <bool Parallel>
LayeredField kl_strain_impl(const KLDisplacement& u, const PlateGrid& g) {
    require_shape(u.u3, g);
    const Sym2Field membrane = Parallel ? sym_grad(u.ubar, g) : serial::sym_grad(u.ubar, g);
    const Sym2Field curv = Parallel ? hessian(u.u3, g) : serial::hessian(u.u3, g);
    LayeredField out(g);
    const int nl = g.nlayers();
#pragma omp parallel for if (Parallel)
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
            for (int l = 0; l < nl; ++l)
                out.at(i, j, l) = membrane.at(i, j) - g.layers[l].x3 * curv.at(i, j);
    return out;
}

template <bool Parallel>
Sym2Field moment_impl(const LayeredField& f, const PlateGrid& g, bool first) {
    require_shape(f, g);
    Sym2Field out(g);
    const int nl = g.nlayers();
#pragma omp parallel for if (Parallel)
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            Sym2 acc;
            for (int l = 0; l < nl; ++l) {
                const double w = first ? 12.0 * g.layers[l].weight * g.layers[l].x3 : g.layers[l].weight;
                acc += w * f.at(i, j, l);
            }
            out.at(i, j) = acc;
        }
    return out;
}

}  // namespace

LayeredField kl_strain(const KLDisplacement& u, const PlateGrid& g) { return kl_strain_impl<true>(u, g); }
Sym2Field moment_zero(const LayeredField& f, const PlateGrid& g) { return moment_impl<true>(f, g, false); }
Sym2Field moment_first(const LayeredField& f, const PlateGrid& g) { return moment_impl<true>(f, g, true); }

LayeredField perp_part(const LayeredField& f, const PlateGrid& g) {
    const Sym2Field fbar = moment_zero(f, g);
    const Sym2Field fhat = moment_first(f, g);
    LayeredField out(g);
    const int nl = g.nlayers();
#pragma omp parallel for
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
            for (int l = 0; l < nl; ++l)
                out.at(i, j, l) = f.at(i, j, l) - fbar.at(i, j) - g.layers[l].x3 * fhat.at(i, j);
    return out;
}

namespace serial {
LayeredField kl_strain(const KLDisplacement& u, const PlateGrid& g) { return kl_strain_impl<false>(u, g); }
Sym2Field moment_zero(const LayeredField& f, const PlateGrid& g) { return moment_impl<false>(f, g, false); }
Sym2Field moment_first(const LayeredField& f, const PlateGrid& g) { return moment_impl<false>(f, g, true); }
}  // namespace serial

}  // namespace plp
