// Command-line driver: simulate / sweep / check / inspect.
#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "plastiplate/checks.hpp"
#include "plastiplate/config.hpp"
#include "plastiplate/diagnostics.hpp"
#include "plastiplate/io.hpp"
#include "plastiplate/solver.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

plp::Config resolve_config(const std::string& ref) {
    if (fs::exists(ref)) return plp::load_config(ref);
    const auto names = plp::builtin_scenario_names();
    if (std::find(names.begin(), names.end(), ref) != names.end()) return plp::builtin_config(ref);
    throw plp::ConfigError("'" + ref + "' is neither a config file nor a builtin scenario");
}

fs::path output_root(const std::string& flag_out, const plp::Config& c) {
    if (!flag_out.empty()) return flag_out;
    if (!c.output.dir.empty()) return c.output.dir;
    if (const char* env = std::getenv("PLASTIPLATE_OUT")) return env;
    return "plastiplate_out";
}

struct RunSummary {
    int N = 0;
    double lambda = 0.0;
    double max_excess = 0.0;
    double max_flow_gap = 0.0;
    double min_slack = 0.0;
    double slack_scale = 1.0;
    double max_res_kinematic = 0.0;
    double max_res_flow = 0.0;
    double max_res_membrane = 0.0;
    double max_res_bending = 0.0;
    double final_elastic = 0.0;
    double final_kinetic = 0.0;
    double dissipation_total = 0.0;
    int max_newton_iterations = 0;
    bool ledger_ok = true;
    bool residuals_ok = true;
};

// Runs one evolution, streams diagnostics and snapshots, returns the summary.
RunSummary run_one(const plp::Scenario& S, const plp::SolverOptions& opt, const fs::path& dir,
                   int stride) {
    fs::create_directories(dir);
    std::ofstream csv(dir / "diagnostics.csv");
    csv << plp::diagnostics_csv_header() << '\n';

    plp::IncrementalSolver solver(S, opt);
    plp::PlateState state = plp::seed_history(S);
    plp::io::write_snapshot(dir / "snap_0", plp::io::make_snapshot(S.grid, state));

    RunSummary sum;
    sum.N = S.trunc.base.N;
    sum.lambda = S.trunc.lambda;
    double ledger_scale = 1.0;
    double state_scale = 1.0;

    for (int i = 1; i <= S.time.k; ++i) {
        plp::PlateState next = solver.step(state, i);
        const plp::StepDiagnostics d = plp::step_diagnostics(S, state, next);
        csv << plp::diagnostics_csv_row(d) << '\n';

        sum.max_excess = std::max(sum.max_excess, d.max_excess);
        sum.max_flow_gap = std::max(sum.max_flow_gap, d.max_flow_gap);
        sum.min_slack = std::min(sum.min_slack, d.slack);
        ledger_scale = std::max({ledger_scale, std::abs(d.ledger_lhs), std::abs(d.ledger_rhs)});
        state_scale = std::max({state_scale, std::sqrt(2.0 * d.elastic), std::sqrt(2.0 * d.kinetic)});
        sum.max_res_kinematic = std::max(sum.max_res_kinematic, d.res_kinematic);
        sum.max_res_flow = std::max(sum.max_res_flow, d.res_flow);
        sum.max_res_membrane = std::max(sum.max_res_membrane, d.res_membrane);
        sum.max_res_bending = std::max(sum.max_res_bending, d.res_bending);
        sum.dissipation_total += d.dissipation;
        sum.max_newton_iterations = std::max(sum.max_newton_iterations, d.newton_iterations);
        sum.final_elastic = d.elastic;
        sum.final_kinetic = d.kinetic;

        state = std::move(next);
        if (i % stride == 0 || i == S.time.k)
            plp::io::write_snapshot(dir / ("snap_" + std::to_string(i)),
                                    plp::io::make_snapshot(S.grid, state));
    }
    sum.slack_scale = ledger_scale;
    sum.ledger_ok = sum.min_slack >= -1e-8 * ledger_scale;
    // Equilibrium residuals are already relative to their term magnitudes.
    sum.residuals_ok = sum.max_res_kinematic <= 1e-9 * state_scale &&
                       sum.max_res_flow <= 1e-9 * state_scale &&
                       sum.max_res_membrane <= 1e-4 && sum.max_res_bending <= 1e-4;

    json j;
    j["scenario"] = S.name;
    j["N"] = sum.N;
    j["lambda"] = sum.lambda;
    j["steps"] = S.time.k;
    j["max_excess"] = sum.max_excess;
    j["max_flow_gap"] = sum.max_flow_gap;
    j["min_ledger_slack"] = sum.min_slack;
    j["ledger_scale"] = sum.slack_scale;
    j["max_res_kinematic"] = sum.max_res_kinematic;
    j["max_res_flow"] = sum.max_res_flow;
    j["max_res_membrane"] = sum.max_res_membrane;
    j["max_res_bending"] = sum.max_res_bending;
    j["final_elastic_energy"] = sum.final_elastic;
    j["final_kinetic_energy"] = sum.final_kinetic;
    j["total_dissipation"] = sum.dissipation_total;
    j["max_newton_iterations"] = sum.max_newton_iterations;
    j["ledger_ok"] = sum.ledger_ok;
    j["residuals_ok"] = sum.residuals_ok;
    std::ofstream(dir / "summary.json") << j.dump(2) << '\n';
    return sum;
}

std::string combo_dirname(int N, double lambda) {
    std::ostringstream os;
    os << "N" << N << "_lam" << lambda;
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"plastiplate: dynamic perfectly plastic Kirchhoff-Love plate simulator"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    int threads = 0;
    std::string out_flag;
    int stride_flag = 0;
    unsigned seed = 20260823u;
    double tol_scale = 1.0;
    app.add_option("--threads", threads, "OpenMP thread count (0 = runtime default)");
    app.add_option("--out", out_flag, "output root directory");
    app.add_option("--stride", stride_flag, "snapshot stride override");
    app.add_option("--seed", seed, "seed for randomized property suites");
    app.add_option("--tol-scale", tol_scale, "multiplier on the Newton tolerances");

    std::string sim_config, sweep_config, inspect_path, inspect_out;
    auto* sim = app.add_subcommand("simulate", "run one evolution with diagnostics");
    sim->add_option("config", sim_config, "config file or builtin scenario name")->required();
    auto* swp = app.add_subcommand("sweep", "run the (N, lambda) ladder of a config");
    swp->add_option("config", sweep_config, "config file or builtin scenario name")->required();
    auto* chk = app.add_subcommand("check", "run the randomized property suite");
    auto* insp = app.add_subcommand("inspect", "dump a snapshot to CSV");
    insp->add_option("snapshot", inspect_path, "path to a .plp snapshot")->required();
    insp->add_option("--csv-out", inspect_out, "CSV output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#endif

    try {
        if (sim->parsed() || swp->parsed()) {
            const plp::Config cfg = resolve_config(sim->parsed() ? sim_config : sweep_config);
            plp::SolverOptions opt = cfg.solver;
            opt.tol_scale = tol_scale;
            const int stride = stride_flag > 0 ? stride_flag : cfg.output.stride;
            const fs::path root = output_root(out_flag, cfg) / cfg.name;

            std::vector<std::pair<int, double>> combos;
            if (sim->parsed()) {
                combos = {{cfg.Ns.front(), cfg.lambdas.front()}};
            } else {
                for (int N : cfg.Ns)
                    for (double lam : cfg.lambdas) combos.emplace_back(N, lam);
            }

            bool ok = true;
            std::vector<RunSummary> sums;
            for (const auto& [N, lam] : combos) {
                plp::Scenario S = plp::make_scenario(cfg, N, lam);
                S.validate();
                const fs::path dir = root / combo_dirname(N, lam);
                const RunSummary sum = run_one(S, opt, dir, stride);
                std::cout << cfg.name << " N=" << N << " lambda=" << lam
                          << " max_excess=" << sum.max_excess << " min_slack=" << sum.min_slack
                          << (sum.ledger_ok && sum.residuals_ok ? " ok" : " FAILED") << '\n';
                ok = ok && sum.ledger_ok && sum.residuals_ok;
                sums.push_back(sum);
            }

            if (swp->parsed()) {
                // Monotone excess trend in N per lambda value.
                json rep;
                rep["scenario"] = cfg.name;
                json rows = json::array();
                bool monotone = true;
                for (double lam : cfg.lambdas) {
                    double prev = -1.0;
                    for (int N : cfg.Ns) {
                        for (const auto& s : sums)
                            if (s.N == N && s.lambda == lam) {
                                rows.push_back({{"N", N}, {"lambda", lam}, {"max_excess", s.max_excess},
                                                {"max_flow_gap", s.max_flow_gap},
                                                {"min_slack", s.min_slack}});
                                if (prev >= 0.0 && s.max_excess > prev + 1e-3 * cfg.alpha0)
                                    monotone = false;
                                prev = s.max_excess;
                            }
                    }
                }
                rep["rows"] = rows;
                rep["excess_monotone_in_N"] = monotone;
                fs::create_directories(root);
                std::ofstream(root / "sweep_report.json") << rep.dump(2) << '\n';
                ok = ok && monotone;
            }
            return ok ? 0 : 1;
        }

        if (chk->parsed()) {
            const auto results = plp::run_property_checks(seed);
            bool ok = true;
            for (const auto& r : results) {
                std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.detail << ")\n";
                ok = ok && r.passed;
            }
            return ok ? 0 : 1;
        }

        if (insp->parsed()) {
            const plp::io::Snapshot s = plp::io::read_snapshot(inspect_path);
            if (inspect_out.empty()) {
                plp::io::export_csv(s, std::cout);
            } else {
                std::ofstream out(inspect_out);
                if (!out) throw std::runtime_error("cannot open " + inspect_out);
                plp::io::export_csv(s, out);
            }
            return 0;
        }
    } catch (const plp::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const plp::ScenarioError& e) {
        std::cerr << "scenario error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
