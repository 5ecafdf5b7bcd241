#include "plastiplate/config.hpp"

#include <cmath>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace plp {

namespace {

using nlohmann::json;

const char* edge_name(int e) {
    static const char* names[4] = {"left", "right", "bottom", "top"};
    return names[e];
}

int edge_index(const std::string& s) {
    for (int e = 0; e < 4; ++e)
        if (s == edge_name(e)) return e;
    throw ConfigError("geometry.dirichlet: unknown edge '" + s + "'");
}

template <typename T>
T get_or(const json& j, const std::string& key, const T& fallback, const std::string& path) {
    if (!j.contains(key)) return fallback;
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw ConfigError(path + "." + key + ": wrong type");
    }
}

// Time profile factor in [0, 1].
double profile(const std::string& shape, double t0, double t) {
    if (shape == "constant") return 1.0;
    if (shape == "ramp") return t0 <= 0.0 ? 1.0 : std::min(t / t0, 1.0);
    if (shape == "pulse") {
        if (t0 <= 0.0 || t <= 0.0 || t >= 2.0 * t0) return 0.0;
        return t < t0 ? t / t0 : 2.0 - t / t0;
    }
    if (shape == "sine") return t0 > 0.0 ? std::sin(2.0 * M_PI * t / t0) : 0.0;
    throw ConfigError("loads.shape: unknown profile '" + shape + "'");
}

}  // namespace

Config parse_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }

    Config c;
    c.name = get_or<std::string>(j, "name", c.name, "config");

    if (j.contains("geometry")) {
        const json& g = j.at("geometry");
        c.Lx = get_or(g, "Lx", c.Lx, "geometry");
        c.Ly = get_or(g, "Ly", c.Ly, "geometry");
        c.nx = get_or(g, "nx", c.nx, "geometry");
        c.ny = get_or(g, "ny", c.ny, "geometry");
        c.layers = get_or(g, "layers", c.layers, "geometry");
        if (g.contains("dirichlet")) {
            c.dirichlet = {false, false, false, false};
            for (const auto& e : g.at("dirichlet")) c.dirichlet[edge_index(e.get<std::string>())] = true;
        }
    }
    if (j.contains("material")) {
        const json& m = j.at("material");
        c.mu = get_or(m, "mu", c.mu, "material");
        c.ell = get_or(m, "ell", c.ell, "material");
    }
    if (j.contains("yield")) {
        const json& y = j.at("yield");
        c.alpha0 = get_or(y, "alpha0", c.alpha0, "yield");
        if (y.contains("N_list"))
            c.Ns = y.at("N_list").get<std::vector<int>>();
        else
            c.Ns = {get_or(y, "N", c.Ns[0], "yield")};
        if (y.contains("lambda_list"))
            c.lambdas = y.at("lambda_list").get<std::vector<double>>();
        else
            c.lambdas = {get_or(y, "lambda", c.lambdas[0], "yield")};
    }
    if (j.contains("time")) {
        const json& t = j.at("time");
        c.T = get_or(t, "T", c.T, "time");
        c.k = get_or(t, "k", c.k, "time");
    }
    c.gamma = get_or(j, "gamma", c.gamma, "config");
    if (j.contains("loads")) {
        const json& l = j.at("loads");
        c.loads.preset = get_or<std::string>(l, "preset", c.loads.preset, "loads");
        c.loads.g0 = get_or(l, "g0", c.loads.g0, "loads");
        c.loads.f0 = get_or(l, "f0", c.loads.f0, "loads");
        c.loads.shape = get_or<std::string>(l, "shape", c.loads.shape, "loads");
        c.loads.t0 = get_or(l, "t0", c.loads.t0, "loads");
    }
    if (j.contains("w")) {
        c.w.preset = get_or<std::string>(j.at("w"), "preset", c.w.preset, "w");
        c.w.rate = get_or(j.at("w"), "rate", c.w.rate, "w");
    }
    if (j.contains("rho")) {
        c.rho.preset = get_or<std::string>(j.at("rho"), "preset", c.rho.preset, "rho");
        c.rho.c = get_or(j.at("rho"), "c", c.rho.c, "rho");
    }
    if (j.contains("init"))
        c.init.preset = get_or<std::string>(j.at("init"), "preset", c.init.preset, "init");
    if (j.contains("solver")) {
        const json& s = j.at("solver");
        c.solver.newton_xtol = get_or(s, "newton_xtol", c.solver.newton_xtol, "solver");
        c.solver.newton_rtol = get_or(s, "newton_rtol", c.solver.newton_rtol, "solver");
        c.solver.newton_max_iter = get_or(s, "max_iter", c.solver.newton_max_iter, "solver");
        c.solver.line_search_max = get_or(s, "line_search_max", c.solver.line_search_max, "solver");
        c.solver.return_map_tol = get_or(s, "return_map_tol", c.solver.return_map_tol, "solver");
        const std::string lin = get_or<std::string>(s, "linear", "ldlt", "solver");
        if (lin == "ldlt")
            c.solver.linear = LinearSolverKind::ldlt;
        else if (lin == "cg")
            c.solver.linear = LinearSolverKind::cg;
        else
            throw ConfigError("solver.linear: expected 'ldlt' or 'cg'");
        const std::string init = get_or<std::string>(s, "init", "previous", "solver");
        if (init == "previous")
            c.solver.init = NewtonInit::previous;
        else if (init == "zero")
            c.solver.init = NewtonInit::zero;
        else
            throw ConfigError("solver.init: expected 'previous' or 'zero'");
    }
    if (j.contains("output")) {
        c.output.stride = get_or(j.at("output"), "stride", c.output.stride, "output");
        c.output.dir = get_or<std::string>(j.at("output"), "dir", c.output.dir, "output");
    }

    // Hypotheses checkable at load time.
    for (int N : c.Ns)
        if (N < 4) throw ConfigError("yield.N: N >= 4 required, got " + std::to_string(N));
    for (double lam : c.lambdas)
        if (!(lam > 0.0)) throw ConfigError("yield.lambda: positive value required");
    if (!(c.alpha0 > 0.0)) throw ConfigError("yield.alpha0: positive value required");
    if (!(c.gamma > 0.0 && c.gamma < 1.0)) throw ConfigError("gamma: value in (0,1) required");
    if (c.nx < 3 || c.ny < 3) throw ConfigError("geometry: nx, ny >= 3 required");
    if (c.layers < 1 || c.layers > 16) throw ConfigError("geometry.layers: 1..16 required");
    if (c.k < 2) throw ConfigError("time.k: k >= 2 required");
    if (!(c.T > 0.0)) throw ConfigError("time.T: positive horizon required");
    if (c.output.stride < 1) throw ConfigError("output.stride: >= 1 required");
    return c;
}

Config load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string serialize_config(const Config& c) {
    json j;
    j["name"] = c.name;
    json dir = json::array();
    for (int e = 0; e < 4; ++e)
        if (c.dirichlet[e]) dir.push_back(edge_name(e));
    j["geometry"] = {{"Lx", c.Lx}, {"Ly", c.Ly}, {"nx", c.nx}, {"ny", c.ny},
                     {"layers", c.layers}, {"dirichlet", dir}};
    j["material"] = {{"mu", c.mu}, {"ell", c.ell}};
    j["yield"] = {{"alpha0", c.alpha0}, {"N_list", c.Ns}, {"lambda_list", c.lambdas}};
    j["time"] = {{"T", c.T}, {"k", c.k}};
    j["gamma"] = c.gamma;
    j["loads"] = {{"preset", c.loads.preset}, {"g0", c.loads.g0}, {"f0", c.loads.f0},
                  {"shape", c.loads.shape}, {"t0", c.loads.t0}};
    j["w"] = {{"preset", c.w.preset}, {"rate", c.w.rate}};
    j["rho"] = {{"preset", c.rho.preset}, {"c", c.rho.c}};
    j["init"] = {{"preset", c.init.preset}};
    j["solver"] = {{"newton_xtol", c.solver.newton_xtol},
                   {"newton_rtol", c.solver.newton_rtol},
                   {"max_iter", c.solver.newton_max_iter},
                   {"line_search_max", c.solver.line_search_max},
                   {"return_map_tol", c.solver.return_map_tol},
                   {"linear", c.solver.linear == LinearSolverKind::ldlt ? "ldlt" : "cg"},
                   {"init", c.solver.init == NewtonInit::previous ? "previous" : "zero"}};
    j["output"] = {{"stride", c.output.stride}, {"dir", c.output.dir}};
    return j.dump(2);
}

Scenario make_scenario(const Config& c, int N, double lambda) {
    Scenario S;
    S.name = c.name;
    S.grid.Lx = c.Lx;
    S.grid.Ly = c.Ly;
    S.grid.nx = c.nx;
    S.grid.ny = c.ny;
    S.grid.layers = gauss_legendre_layers(c.layers);
    S.grid.dirichlet = c.dirichlet;
    S.elasticity = Elasticity(c.mu, c.ell);
    S.trunc = TruncationParams(NortonHoffParams(N, c.alpha0), lambda);
    S.time = TimeGrid{c.T, c.k};
    S.gamma_safe = c.gamma;

    const PlateGrid grid = S.grid;  // captured by value below
    const double delta = S.time.delta();
    const LoadSpec loads = c.loads;
    const double kappa =
        M_PI * M_PI * (1.0 / (grid.Lx * grid.Lx) + 1.0 / (grid.Ly * grid.Ly));

    auto phi = [grid](int i, int j) {
        return std::sin(M_PI * grid.x(i) / grid.Lx) * std::sin(M_PI * grid.y(j) / grid.Ly);
    };

    if (loads.preset == "zero") {
        // defaults: null f_at / g_at mean zero fields
    } else if (loads.preset == "sine_bend") {
        S.g_at = [grid, loads, delta, phi](int i) {
            const double amp = loads.g0 * profile(loads.shape, loads.t0, i * delta);
            ScalarField g(grid);
            for (int j = 0; j < grid.ny; ++j)
                for (int ii = 0; ii < grid.nx; ++ii) g.at(ii, j) = amp * phi(ii, j);
            return g;
        };
    } else if (loads.preset == "sine_membrane") {
        S.f_at = [grid, loads, delta](int i) {
            const double amp = loads.f0 * profile(loads.shape, loads.t0, i * delta);
            VecField f(grid);
            for (int j = 0; j < grid.ny; ++j)
                for (int ii = 0; ii < grid.nx; ++ii)
                    f.x.at(ii, j) = amp * std::sin(M_PI * grid.x(ii) / grid.Lx);
            return f;
        };
    } else {
        throw ConfigError("loads.preset: unknown preset '" + loads.preset + "'");
    }

    const RhoSpec rho = c.rho;
    if (rho.preset == "matched") {
        if (loads.preset == "sine_bend") {
            // Blend two equilibrated moment patterns with disjoint peaks: a
            // diagonal sin*sin field (peaks at the center) and an off-diagonal
            // cos*cos field (peaks at the corners). The matrix directions are
            // orthogonal in the reduced inner product, so equalizing the two
            // peak norms minimizes the max of the blend and leaves ~60% more
            // load headroom under the safe-load bound than either part alone.
            S.rho_at = [grid, loads, delta, kappa, phi](int i) {
                const double amp = loads.g0 * profile(loads.shape, loads.t0, i * delta);
                const double beta = 12.0 * amp / kappa;  // -(1/12) DivDiv (beta phi I) = amp phi
                const double coff = -6.0 * amp * grid.Lx * grid.Ly / (M_PI * M_PI);
                const double p1 = std::abs(beta) * std::sqrt(2.0 / 3.0);
                const double p2 = std::abs(coff) * std::sqrt(2.0);
                const double theta = p1 + p2 > 0.0 ? p2 / (p1 + p2) : 0.0;
                LayeredField r(grid);
                for (int j = 0; j < grid.ny; ++j)
                    for (int ii = 0; ii < grid.nx; ++ii) {
                        const double v = theta * beta * phi(ii, j);
                        const double s = (1.0 - theta) * coff *
                                         std::cos(M_PI * grid.x(ii) / grid.Lx) *
                                         std::cos(M_PI * grid.y(j) / grid.Ly);
                        for (int l = 0; l < grid.nlayers(); ++l) {
                            const double x3 = grid.layers[l].x3;
                            r.at(ii, j, l) = Sym2{x3 * v, x3 * v, x3 * s};
                        }
                    }
                return r;
            };
        } else if (loads.preset == "sine_membrane") {
            S.rho_at = [grid, loads, delta](int i) {
                const double amp = loads.f0 * profile(loads.shape, loads.t0, i * delta);
                const double cmag = amp * grid.Lx / M_PI;  // -d/dx of cmag cos = amp sin
                LayeredField r(grid);
                for (int j = 0; j < grid.ny; ++j)
                    for (int ii = 0; ii < grid.nx; ++ii) {
                        const double v = cmag * std::cos(M_PI * grid.x(ii) / grid.Lx);
                        for (int l = 0; l < grid.nlayers(); ++l)
                            r.at(ii, j, l) = Sym2{v, 0.0, 0.0};
                    }
                return r;
            };
        } else {
            S.rho_at = [grid](int) { return LayeredField(grid); };
        }
    } else if (rho.preset == "uniform_membrane") {
        S.rho_at = [grid, rho](int) {
            LayeredField r(grid);
            for (Sym2& s : r.v) s = Sym2{rho.c, rho.c, 0.0};
            return r;
        };
    } else {
        throw ConfigError("rho.preset: unknown preset '" + rho.preset + "'");
    }

    const WSpec w = c.w;
    if (w.preset == "zero") {
        // null w_at means zero datum
    } else if (w.preset == "bend_ramp") {
        // Uniform-curvature transverse datum growing linearly in time. With the
        // matching interior state the stress is spatially uniform per layer, so
        // the plastic plateau follows the pointwise rate law in N exactly.
        S.w_at = [grid, w, delta](int i) {
            const double t = i * delta;
            KLDisplacement d(grid);
            for (int j = 0; j < grid.ny; ++j)
                for (int ii = 0; ii < grid.nx; ++ii) {
                    const double xc = grid.x(ii) - 0.5 * grid.Lx;
                    const double yc = grid.y(j) - 0.5 * grid.Ly;
                    d.u3.at(ii, j) = 0.5 * t * w.rate * (xc * xc + yc * yc);
                }
            return d;
        };
    } else if (w.preset == "shear_ramp") {
        S.w_at = [grid, w, delta](int i) {
            const double t = i * delta;
            KLDisplacement d(grid);
            for (int j = 0; j < grid.ny; ++j)
                for (int ii = 0; ii < grid.nx; ++ii)
                    d.ubar.x.at(ii, j) = t * w.rate * grid.y(j);
            return d;
        };
    } else {
        throw ConfigError("w.preset: unknown preset '" + w.preset + "'");
    }

    S.u0 = KLDisplacement(S.grid);
    S.sigma0 = LayeredField(S.grid);
    S.v0_3 = ScalarField(S.grid);
    if (c.init.preset == "equilibrium") {
        S.sigma0 = S.rho_at(0);
    } else if (c.init.preset != "zero") {
        throw ConfigError("init.preset: unknown preset '" + c.init.preset + "'");
    }
    return S;
}

std::vector<std::string> builtin_scenario_names() {
    return {"quiescent", "elastic_bend", "plastic_bend", "inertial_ring", "static_f", "datum_shear"};
}

Config builtin_config(const std::string& name) {
    Config c;
    c.name = name;
    if (name == "quiescent") {
        c.nx = c.ny = 9;
        c.layers = 2;
        c.dirichlet = {true, false, false, false};
        c.T = 0.5;
        c.k = 10;
        c.Ns = {4};
        c.lambdas = {5.0};
    } else if (name == "elastic_bend") {
        c.nx = c.ny = 17;
        c.layers = 2;
        c.T = 1.0;
        c.k = 20;
        c.Ns = {8};
        c.lambdas = {5.0};
        c.loads = {"sine_bend", 0.3, 0.0, "ramp", 0.5};
    } else if (name == "plastic_bend") {
        c.nx = c.ny = 17;
        c.layers = 4;
        // Quasi-static response to an admissible safe load alone stays inside
        // the yield set (the static stress field is itself a certificate), so
        // the transverse load is combined with a uniform-curvature datum ramp
        // that carries |sigma|_r past alpha0 in the outer layers at a
        // controlled strain rate.
        c.T = 4.5;
        c.k = 450;
        c.Ns = {4, 8, 16};
        c.lambdas = {5.0, 50.0};
        c.loads = {"sine_bend", 3.0, 0.0, "ramp", 0.5};
        c.w = {"bend_ramp", 1.0};
    } else if (name == "inertial_ring") {
        c.nx = c.ny = 17;
        c.layers = 2;
        c.T = 1.0;
        c.k = 40;
        c.Ns = {8};
        c.lambdas = {5.0};
        c.loads = {"sine_bend", 1.0, 0.0, "pulse", 0.15};
    } else if (name == "static_f") {
        c.nx = c.ny = 17;
        c.layers = 4;
        c.T = 1.0;
        c.k = 40;
        c.Ns = {4, 8, 16};
        c.lambdas = {5.0};
        c.loads = {"sine_membrane", 0.0, 1.0, "constant", 0.0};
        c.init.preset = "equilibrium";
    } else if (name == "datum_shear") {
        c.nx = c.ny = 9;
        c.layers = 2;
        // Clamp all edges so the linear shear datum is the exact solution;
        // with a free edge the nonzero traction there induces boundary layers.
        c.dirichlet = {true, true, true, true};
        c.T = 1.0;
        c.k = 10;
        c.Ns = {8};
        c.lambdas = {5.0};
        c.w = {"shear_ramp", 0.2};
    } else {
        throw ConfigError("unknown builtin scenario '" + name + "'");
    }
    return c;
}

}  // namespace plp
