// Grid-sampled fields: scalar and 2-vector fields on omega, Sym2 fields on
// omega, and layered Sym2 fields on omega x thickness.
#pragma once

#include <stdexcept>
#include <vector>

#include "plastiplate/grid.hpp"
#include "plastiplate/sym2.hpp"

namespace plp {

struct ScalarField {
    int nx = 0, ny = 0;
    std::vector<double> v;

    ScalarField() = default;
    ScalarField(int nx_, int ny_) : nx(nx_), ny(ny_), v(static_cast<size_t>(nx_) * ny_, 0.0) {}
    explicit ScalarField(const PlateGrid& g) : ScalarField(g.nx, g.ny) {}

    double& at(int i, int j) { return v[static_cast<size_t>(j) * nx + i]; }
    double at(int i, int j) const { return v[static_cast<size_t>(j) * nx + i]; }
    size_t size() const { return v.size(); }
};

struct VecField {
    ScalarField x, y;

    VecField() = default;
    VecField(int nx, int ny) : x(nx, ny), y(nx, ny) {}
    explicit VecField(const PlateGrid& g) : VecField(g.nx, g.ny) {}
};

struct Sym2Field {
    int nx = 0, ny = 0;
    std::vector<Sym2> v;

    Sym2Field() = default;
    Sym2Field(int nx_, int ny_) : nx(nx_), ny(ny_), v(static_cast<size_t>(nx_) * ny_) {}
    explicit Sym2Field(const PlateGrid& g) : Sym2Field(g.nx, g.ny) {}

    Sym2& at(int i, int j) { return v[static_cast<size_t>(j) * nx + i]; }
    const Sym2& at(int i, int j) const { return v[static_cast<size_t>(j) * nx + i]; }
};

// Sym2 value per (omega node, thickness layer); layer index is fastest.
struct LayeredField {
    int nx = 0, ny = 0, nl = 0;
    std::vector<Sym2> v;

    LayeredField() = default;
    LayeredField(int nx_, int ny_, int nl_)
        : nx(nx_), ny(ny_), nl(nl_), v(static_cast<size_t>(nx_) * ny_ * nl_) {}
    explicit LayeredField(const PlateGrid& g) : LayeredField(g.nx, g.ny, g.nlayers()) {}

    Sym2& at(int i, int j, int l) { return v[(static_cast<size_t>(j) * nx + i) * nl + l]; }
    const Sym2& at(int i, int j, int l) const { return v[(static_cast<size_t>(j) * nx + i) * nl + l]; }
    size_t size() const { return v.size(); }
};

// Kirchhoff-Love displacement: in-plane average ubar and deflection u3.
struct KLDisplacement {
    VecField ubar;
    ScalarField u3;

    KLDisplacement() = default;
    explicit KLDisplacement(const PlateGrid& g) : ubar(g), u3(g) {}
};

inline void require_shape(const ScalarField& f, const PlateGrid& g) {
    if (f.nx != g.nx || f.ny != g.ny) throw std::invalid_argument("field shape does not match grid");
}
inline void require_shape(const Sym2Field& f, const PlateGrid& g) {
    if (f.nx != g.nx || f.ny != g.ny) throw std::invalid_argument("field shape does not match grid");
}
inline void require_shape(const LayeredField& f, const PlateGrid& g) {
    if (f.nx != g.nx || f.ny != g.ny || f.nl != g.nlayers())
        throw std::invalid_argument("layered field shape does not match grid");
}

}  // namespace plp
