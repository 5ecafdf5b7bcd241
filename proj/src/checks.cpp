#include "plastiplate/checks.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "plastiplate/kinematics.hpp"
#include "plastiplate/material.hpp"
#include "plastiplate/oracle.hpp"
#include "plastiplate/potentials.hpp"
#include "plastiplate/solver.hpp"

namespace plp {

namespace {

Sym2 random_sym2(std::mt19937& rng, double scale) {
    std::uniform_real_distribution<double> d(-scale, scale);
    return {d(rng), d(rng), d(rng)};
}

CheckResult tensor_identities(std::mt19937& rng) {
    CheckResult r{"tensor_identities", true, ""};
    double worst = 0.0;
    for (int it = 0; it < 10000; ++it) {
        const Sym2 x = random_sym2(rng, 2.0);
        worst = std::max(worst, std::abs(norm_dual(dev_r(x)) - norm_r(x)));
        worst = std::max(worst, std::abs(norm_r(lift_dual(x)) - norm_dual(x)));
        worst = std::max(worst, norm_frobenius(dev_r(lift_dual(x)) - x));
        worst = std::max(worst, norm_frobenius(lift_dual(dev_r(x)) - x));
        const double nr = norm_r(x), nf = norm_frobenius(x);
        if (nr > nf + 1e-12 || nf > std::sqrt(3.0) * nr + 1e-12) worst = std::max(worst, 1.0);
    }
    r.passed = worst <= 1e-12;
    std::ostringstream os;
    os << "max identity defect " << worst;
    r.detail = os.str();
    return r;
}

CheckResult potential_relations(std::mt19937& rng) {
    CheckResult r{"potential_relations", true, ""};
    double worst = 0.0;
    const int Ns[3] = {4, 6, 8};
    const double lams[4] = {0.5, 1.0, 2.0, 10.0};
    for (int it = 0; it < 10000; ++it) {
        const TruncationParams p(NortonHoffParams(Ns[it % 3], 1.0), lams[it % 4]);
        const Sym2 xi = random_sym2(rng, 3.0);
        const Sym2 y = dpsi_lambda(xi, p);
        // Fenchel-Young equality at y = Dpsi(xi).
        const double fy = psi_lambda(xi, p) + F_lambda(y, p) - ddot(xi, y);
        const double scale = 1.0 + std::abs(psi_lambda(xi, p)) + std::abs(F_lambda(y, p));
        worst = std::max(worst, std::abs(fy) / scale);
        // dF inverts dpsi.
        const Sym2 back = dF_lambda(y, p);
        worst = std::max(worst, norm_frobenius(back - xi) / (1.0 + norm_frobenius(xi)));
    }
    r.passed = worst <= 1e-10;
    std::ostringstream os;
    os << "max relative defect " << worst;
    r.detail = os.str();
    return r;
}

CheckResult conjugate_bruteforce(std::mt19937& rng) {
    CheckResult r{"conjugate_bruteforce", true, ""};
    double worst = 0.0;
    for (int it = 0; it < 20; ++it) {
        const TruncationParams p(NortonHoffParams(4 + 2 * (it % 3), 1.0), 0.5 + (it % 4));
        const Sym2 y = random_sym2(rng, 1.5);
        const double ref = oracle::conjugate_numeric(y, p);
        const double val = F_lambda(y, p);
        worst = std::max(worst, std::abs(ref - val) / (1.0 + std::abs(val)));
    }
    r.passed = worst <= 1e-4;
    std::ostringstream os;
    os << "max relative gap vs brute force " << worst;
    r.detail = os.str();
    return r;
}

CheckResult moment_identities(std::mt19937& rng) {
    CheckResult r{"moment_identities", true, ""};
    PlateGrid g;
    g.Lx = g.Ly = 1.0;
    g.nx = g.ny = 5;
    g.layers = gauss_legendre_layers(3);
    g.validate();
    double worst = 0.0;
    for (int rep = 0; rep < 50; ++rep) {
        const Sym2 A = random_sym2(rng, 1.0), B = random_sym2(rng, 1.0);
        LayeredField f(g);
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i)
                for (int l = 0; l < g.nlayers(); ++l)
                    f.at(i, j, l) = A + g.layers[l].x3 * B;  // affine in x3
        const Sym2Field fb = moment_zero(f, g);
        const Sym2Field fh = moment_first(f, g);
        const LayeredField fp = perp_part(f, g);
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) {
                worst = std::max(worst, norm_frobenius(fb.at(i, j) - A));
                worst = std::max(worst, norm_frobenius(fh.at(i, j) - B));
                for (int l = 0; l < g.nlayers(); ++l)
                    worst = std::max(worst, norm_frobenius(fp.at(i, j, l)));
            }
    }
    r.passed = worst <= 1e-13;
    std::ostringstream os;
    os << "max affine-moment defect " << worst;
    r.detail = os.str();
    return r;
}

Scenario tiny_scenario(std::mt19937& rng) {
    Scenario S;
    S.name = "tiny_random";
    S.grid.Lx = S.grid.Ly = 1.0;
    S.grid.nx = S.grid.ny = 3;
    S.grid.layers = gauss_legendre_layers(2);
    S.grid.dirichlet = {true, false, false, false};
    std::uniform_real_distribution<double> dmu(0.3, 0.8), dl(-0.1, 0.4);
    S.elasticity = Elasticity(dmu(rng), dl(rng));
    S.trunc = TruncationParams(NortonHoffParams(4, 1.0), 2.0);
    S.time = TimeGrid{0.2, 2};
    std::uniform_real_distribution<double> dload(-0.5, 0.5), dw(-0.05, 0.05);

    VecField f(S.grid);
    ScalarField gl(S.grid);
    KLDisplacement w(S.grid);
    for (size_t q = 0; q < gl.size(); ++q) {
        f.x.v[q] = dload(rng);
        f.y.v[q] = dload(rng);
        gl.v[q] = dload(rng);
        w.ubar.x.v[q] = dw(rng);
        w.ubar.y.v[q] = dw(rng);
        w.u3.v[q] = dw(rng);
    }
    S.f_at = [f](int) { return f; };
    S.g_at = [gl](int) { return gl; };
    S.w_at = [w, S_time = S.time](int i) {
        KLDisplacement wi = w;
        const double s = static_cast<double>(i) / S_time.k;
        for (auto& v : wi.ubar.x.v) v *= s;
        for (auto& v : wi.ubar.y.v) v *= s;
        for (auto& v : wi.u3.v) v *= s;
        return wi;
    };
    S.u0 = KLDisplacement(S.grid);
    S.sigma0 = LayeredField(S.grid);
    for (Sym2& s : S.sigma0.v) {
        Sym2 c = random_sym2(rng, 0.4);
        if (norm_r(c) > 0.8) c *= 0.8 / norm_r(c);
        s = c;
    }
    S.v0_3 = ScalarField(S.grid);
    std::uniform_real_distribution<double> dv(-0.1, 0.1);
    for (double& v : S.v0_3.v) v = dv(rng);
    return S;
}

CheckResult oracle_equivalence(std::mt19937& rng) {
    CheckResult r{"oracle_equivalence", true, ""};
    double worst = 0.0;
    for (int rep = 0; rep < 2; ++rep) {
        const Scenario S = tiny_scenario(rng);
        const PlateState s0 = seed_history(S);
        IncrementalSolver solver(S);
        const PlateState s1 = solver.step(s0, 1);
        const auto ref = oracle::minimize_incremental(S, s0, 1);
        for (size_t q = 0; q < s1.sigma.size(); ++q) {
            worst = std::max(worst, norm_frobenius(s1.sigma.v[q] - ref.sigma.v[q]));
            worst = std::max(worst, norm_frobenius(s1.plastic.v[q] - ref.plastic.v[q]));
        }
        for (size_t q = 0; q < s1.u.u3.size(); ++q) {
            worst = std::max(worst, std::abs(s1.u.u3.v[q] - ref.u.u3.v[q]));
            worst = std::max(worst, std::abs(s1.u.ubar.x.v[q] - ref.u.ubar.x.v[q]));
            worst = std::max(worst, std::abs(s1.u.ubar.y.v[q] - ref.u.ubar.y.v[q]));
        }
    }
    r.passed = worst <= 1e-6;
    std::ostringstream os;
    os << "max field difference vs dense minimizer " << worst;
    r.detail = os.str();
    return r;
}

}  // namespace

std::vector<CheckResult> run_property_checks(unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<CheckResult> out;
    out.push_back(tensor_identities(rng));
    out.push_back(potential_relations(rng));
    out.push_back(conjugate_bruteforce(rng));
    out.push_back(moment_identities(rng));
    out.push_back(oracle_equivalence(rng));
    return out;
}

}  // namespace plp
