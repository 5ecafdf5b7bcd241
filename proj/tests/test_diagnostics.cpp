#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "plastiplate/config.hpp"
#include "plastiplate/diagnostics.hpp"
#include "plastiplate/kinematics.hpp"

using namespace plp;

namespace {

PlateGrid make_grid(int n, int layers = 3) {
    PlateGrid g;
    g.nx = g.ny = n;
    g.layers = gauss_legendre_layers(layers);
    g.validate();
    return g;
}

// Smooth window vanishing to third order on the boundary of the unit square.
double bump(double x, double y) {
    const double s = std::sin(M_PI * x) * std::sin(M_PI * y);
    return s * s * s;
}

// Manufactured compatible data: analytic u, arbitrary smooth p, e = Eu - p.
struct Manufactured {
    KLDisplacement u, w;
    LayeredField sigma, e, p;
};

Manufactured manufacture(const PlateGrid& g) {
    Manufactured m{KLDisplacement(g), KLDisplacement(g), LayeredField(g), LayeredField(g),
                   LayeredField(g)};
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            const double x = g.x(i), y = g.y(j);
            const double b = bump(x, y);
            m.u.ubar.x.at(i, j) = 0.5 * b;
            m.u.ubar.y.at(i, j) = -0.3 * b;
            m.u.u3.at(i, j) = b * b;

            // Analytic first and second derivatives of the bump powers.
            const double sx = std::sin(M_PI * x), sy = std::sin(M_PI * y);
            const double cx = std::cos(M_PI * x), cy = std::cos(M_PI * y);
            const double bx = 3.0 * M_PI * sx * sx * cx * sy * sy * sy;
            const double by = 3.0 * M_PI * sx * sx * sx * sy * sy * cy;
            const double bxx =
                3.0 * M_PI * M_PI * sx * (2.0 * cx * cx - sx * sx) * sy * sy * sy;
            const double byy =
                3.0 * M_PI * M_PI * sx * sx * sx * sy * (2.0 * cy * cy - sy * sy);
            const double bxy = 9.0 * M_PI * M_PI * sx * sx * cx * sy * sy * cy;

            // E ubar and D^2(b^2) in closed form.
            const Sym2 Eub{0.5 * bx, -0.3 * by, 0.5 * (0.5 * by - 0.3 * bx)};
            const Sym2 H{2.0 * (bx * bx + b * bxx), 2.0 * (by * by + b * byy),
                         2.0 * (bx * by + b * bxy)};

            for (int l = 0; l < g.nlayers(); ++l) {
                const double x3 = g.layers[l].x3;
                const Sym2 Eu = Eub - x3 * H;
                const Sym2 pl = b * Sym2{0.2, -0.1, 0.15} + (x3 * b) * Sym2{0.05, 0.3, -0.2};
                m.p.at(i, j, l) = pl;
                m.e.at(i, j, l) = Eu - pl;
                m.sigma.at(i, j, l) =
                    b * Sym2{1.0, 0.4, -0.6} + (x3 * b) * Sym2{-0.3, 0.8, 0.2} +
                    (x3 * x3 * b) * Sym2{0.1, -0.2, 0.4};
            }
        }
    return m;
}

}  // namespace

TEST_CASE("duality pairing defect decays at stencil order") {
    double defect[2];
    int idx = 0;
    for (const int n : {17, 33}) {
        const PlateGrid g = make_grid(n);
        const Manufactured m = manufacture(g);
        const DualityReport rep = duality_pairing_defect(g, m.sigma, m.u, m.e, m.p, m.w);
        CHECK(std::abs(rep.lhs) > 1e-4);  // the identity is not vacuous
        defect[idx++] = std::abs(rep.defect);
    }
    const double slope = std::log2(defect[0] / defect[1]);
    CHECK(slope >= 1.6);
    CHECK(slope <= 3.2);
}

TEST_CASE("yield excess and flow gap closed forms") {
    const PlateGrid g = make_grid(3, 2);
    LayeredField sigma(g);
    const double c = 1.3 / std::sqrt(2.0);
    sigma.at(1, 1, 0) = Sym2{c, -c, 0.0};  // |.|_r = 1.3
    CHECK(max_yield_excess(sigma, 1.0) == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(max_yield_excess(sigma, 2.0) == 0.0);

    const TruncationParams p(NortonHoffParams(4, 1.0), 10.0);
    // gap(s) = s^{N-1}(1 - s) for trace-free stress below the cap.
    double expect = 0.0;
    for (const Sym2& s : sigma.v) {
        const double r = norm_r(s);
        expect = std::max(expect, std::pow(r, 3) * (1.0 - r));
    }
    CHECK(max_flow_gap(sigma, p) == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("energy ledger and per-step residuals on a short run") {
    Config c = builtin_config("elastic_bend");
    c.k = 8;
    c.T = 0.4;
    const Scenario S = make_scenario(c, c.Ns.front(), c.lambdas.front());
    S.validate();

    const Trajectory tr = evolve(S);
    for (int i = 1; i <= S.time.k; ++i) {
        const StepDiagnostics d = step_diagnostics(S, tr.states[i - 1], tr.states[i]);
        const double scale =
            1.0 + std::abs(d.ledger_lhs) + std::abs(d.ledger_rhs);
        CHECK(d.slack >= -1e-8 * scale);
        CHECK(d.res_kinematic <= 1e-10);
        CHECK(d.res_flow <= 1e-10);
        CHECK(d.res_membrane <= 1e-4);
        CHECK(d.res_bending <= 1e-4);
        CHECK(d.dissipation >= -1e-12);
        CHECK(d.kinetic >= 0.0);
        CHECK(d.elastic >= 0.0);
    }

    const RegularityReport rep = regularity_monitor(S, tr);
    for (int c2 = 0; c2 < 3; ++c2) {
        CHECK(std::isfinite(rep.space_x[c2]));
        CHECK(std::isfinite(rep.space_y[c2]));
    }
    CHECK(rep.time_series.size() == static_cast<size_t>(S.time.k));
    for (double v : rep.time_series) CHECK(std::isfinite(v));
    for (double v : rep.velocity_series) CHECK(std::isfinite(v));
}

TEST_CASE("csv row shape matches the header") {
    StepDiagnostics d;
    d.step = 3;
    d.time = 0.25;
    const std::string header = diagnostics_csv_header();
    const std::string row = diagnostics_csv_row(d);
    const auto count = [](const std::string& s) {
        size_t n = 1;
        for (char ch : s)
            if (ch == ',') ++n;
        return n;
    };
    CHECK(count(header) == count(row));
}
