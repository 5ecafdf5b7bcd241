// JSON configuration: parsing, validation, serialization, scenario
// construction from analytic presets, and the builtin benchmark scenarios.
#pragma once

#include <string>
#include <vector>

#include "plastiplate/scenario.hpp"
#include "plastiplate/solver.hpp"

namespace plp {

struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct LoadSpec {
    std::string preset = "zero";  // zero | sine_bend | sine_membrane
    double g0 = 0.0;              // transverse amplitude (sine_bend)
    double f0 = 0.0;              // in-plane amplitude (sine_membrane)
    std::string shape = "ramp";   // ramp | pulse | constant | sine (time profile)
    double t0 = 0.0;              // ramp length / pulse half-width; 0 means instant
};

struct WSpec {
    std::string preset = "zero";  // zero | shear_ramp | bend_ramp
    double rate = 0.0;            // shear_ramp: wbar = t * rate * (y, 0)
                                  // bend_ramp: w3 = t * rate * |x - center|^2 / 2
};

struct RhoSpec {
    std::string preset = "matched";  // matched (derived from loads) | uniform_membrane
    double c = 0.0;                  // uniform_membrane: rho_bar = c * I
};

struct InitSpec {
    std::string preset = "zero";  // zero | equilibrium (sigma0 = rho(0))
};

struct OutputOptions {
    int stride = 1;
    std::string dir;
};

struct Config {
    std::string name = "unnamed";
    double Lx = 1.0, Ly = 1.0;
    int nx = 9, ny = 9;
    int layers = 2;
    std::array<bool, 4> dirichlet = {true, true, true, true};
    double mu = 0.5, ell = 0.0;
    double alpha0 = 1.0;
    std::vector<int> Ns = {4};
    std::vector<double> lambdas = {5.0};
    double T = 1.0;
    int k = 10;
    double gamma = 0.1;
    LoadSpec loads;
    WSpec w;
    RhoSpec rho;
    InitSpec init;
    SolverOptions solver;
    OutputOptions output;
};

Config load_config(const std::string& path);
Config parse_config(const std::string& json_text);
std::string serialize_config(const Config& c);

// Instantiates the scenario for one (N, lambda) pair of the config's ladder.
Scenario make_scenario(const Config& c, int N, double lambda);

std::vector<std::string> builtin_scenario_names();
Config builtin_config(const std::string& name);

}  // namespace plp
