// Uniform rectangular grid over the plate mid-surface, thickness quadrature
// layers, and the Dirichlet edge mask.
#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace plp {

struct Layer {
    double x3;      // quadrature node in (-1/2, 1/2)
    double weight;  // quadrature weight, weights sum to 1
};

// Gauss-Legendre rule on (-1/2, 1/2) with n points.  Exact through degree
// 2n-1; two points already integrate the moments of affine-in-x3 fields
// exactly (sum w = 1, sum w x3^2 = 1/12).
std::vector<Layer> gauss_legendre_layers(int n);

enum class Edge : int { left = 0, right = 1, bottom = 2, top = 3 };

struct PlateGrid {
    double Lx = 1.0;
    double Ly = 1.0;
    int nx = 2;  // node count along x, boundary included
    int ny = 2;  // node count along y, boundary included
    std::vector<Layer> layers;
    std::array<bool, 4> dirichlet = {true, true, true, true};  // gamma_d edges

    int nodes() const { return nx * ny; }
    int nlayers() const { return static_cast<int>(layers.size()); }
    double hx() const { return Lx / (nx - 1); }
    double hy() const { return Ly / (ny - 1); }
    int id(int i, int j) const { return j * nx + i; }
    double x(int i) const { return i * hx(); }
    double y(int j) const { return j * hy(); }

    bool on_dirichlet_edge(int i, int j) const {
        return (dirichlet[0] && i == 0) || (dirichlet[1] && i == nx - 1) ||
               (dirichlet[2] && j == 0) || (dirichlet[3] && j == ny - 1);
    }
    // Clamped-plate condition for u3: the edge nodes and the row of nodes
    // adjacent to a Dirichlet edge carry the datum (discrete normal-derivative
    // clamp, consistent with u = w on Gamma_d through the thickness).
    bool on_dirichlet_band(int i, int j) const {
        return (dirichlet[0] && i <= 1) || (dirichlet[1] && i >= nx - 2) ||
               (dirichlet[2] && j <= 1) || (dirichlet[3] && j >= ny - 2);
    }

    // Trapezoidal nodal weight for L^2(omega) sums.
    double node_weight(int i, int j) const {
        const double cx = (i == 0 || i == nx - 1) ? 0.5 : 1.0;
        const double cy = (j == 0 || j == ny - 1) ? 0.5 : 1.0;
        return cx * cy * hx() * hy();
    }

    void validate() const {
        if (nx < 3 || ny < 3) throw std::invalid_argument("PlateGrid: nx, ny >= 3 required");
        if (!(Lx > 0.0) || !(Ly > 0.0)) throw std::invalid_argument("PlateGrid: positive side lengths required");
        if (layers.empty()) throw std::invalid_argument("PlateGrid: at least one thickness layer required");
        if (!(dirichlet[0] || dirichlet[1] || dirichlet[2] || dirichlet[3]))
            throw std::invalid_argument("PlateGrid: gamma_d needs at least one full edge");
        double w = 0.0, wx2 = 0.0;
        for (const auto& l : layers) {
            w += l.weight;
            wx2 += l.weight * l.x3 * l.x3;
        }
        if (std::abs(w - 1.0) > 1e-12 || std::abs(wx2 - 1.0 / 12.0) > 1e-12)
            throw std::invalid_argument("PlateGrid: thickness quadrature must have sum w = 1, sum w x3^2 = 1/12");
    }
};

}  // namespace plp
