#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "prony/experiments.hpp"
#include "prony/jacobian.hpp"
#include "prony/model.hpp"
#include "prony/serialize.hpp"
#include "prony/solvers.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0, kExitUsage = 1, kExitDomain = 2;

json load_json(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    json j;
    in >> j;
    return j;
}

int cmd_generate(const std::string& config_path, std::uint64_t seed, const fs::path& out)
{
    const json cfg = load_json(config_path);
    const prony::PronySignal sig = prony::signal_from_json(cfg.at("signal"));
    const prony::SamplingGrid grid = prony::grid_from_json(cfg.at("grid"));
    prony::NoiseSpec noise{prony::NoiseSpec::Law::UniformBox, 0.0, seed};
    if (cfg.contains("noise"))
    {
        const auto& n = cfg.at("noise");
        noise.level   = n.value("eps", n.value("sigma", 0.0));
        if (n.contains("sigma")) noise.law = prony::NoiseSpec::Law::ComplexGaussian;
        if (n.contains("seed")) noise.seed = n.at("seed").get<std::uint64_t>();
    }

    fs::create_directories(out);
    const prony::MeasurementVector clean = prony::forward(sig, grid);
    const prony::MeasurementVector noisy = prony::add_noise(clean, noise);

    std::ofstream sj(out / "signal.json");
    sj << prony::signal_to_json(sig).dump(2) << "\n";
    std::ofstream gj(out / "grid.json");
    gj << prony::grid_to_json(grid).dump(2) << "\n";
    std::ofstream cc(out / "clean.csv");
    prony::write_measurements_csv(cc, clean);
    std::ofstream nc(out / "noisy.csv");
    prony::write_measurements_csv(nc, noisy);
    std::cout << "wrote " << (out / "signal.json").string() << ", clean.csv, noisy.csv\n";
    return kExitOk;
}

int cmd_solve(const std::string& meas_path, const std::string& signal_path,
              const std::string& solver, long p, const fs::path& out)
{
    std::ifstream mf(meas_path);
    if (!mf)
    {
        std::cerr << "cannot open measurement file: " << meas_path << "\n";
        return kExitUsage;
    }
    prony::MeasurementVector meas = prony::read_measurements_csv(mf);
    const prony::PronySignal initial = prony::signal_from_json(load_json(signal_path));

    prony::InnerSolver inner;
    if (solver == "prony")
        inner = prony::InnerSolver::Prony;
    else if (solver == "esprit")
        inner = prony::InnerSolver::Esprit;
    else if (solver == "nls")
        inner = prony::InnerSolver::Nls;
    else
    {
        std::cerr << "unknown solver: " << solver << "\n";
        return kExitUsage;
    }

    prony::SolveResult res;
    if (p > 1)
    {
        res = prony::solve_decimated(meas, {initial, p}, inner);
    }
    else
    {
        switch (inner)
        {
            case prony::InnerSolver::Prony:
                res = prony::solve_classical_prony(meas, initial.mults, initial.kind);
                break;
            case prony::InnerSolver::Esprit:
                res = prony::solve_esprit(meas, initial.mults, initial.kind);
                break;
            case prony::InnerSolver::Nls:
                res = prony::solve_nls(meas, initial);
                break;
        }
    }

    json j;
    j["recovered"]  = prony::signal_to_json(res.recovered);
    j["residual"]   = res.residual;
    j["iterations"] = res.iterations;
    j["converged"]  = res.converged;
    j["message"]    = res.message;
    fs::create_directories(out);
    std::ofstream rf(out / "result.json");
    rf << j.dump(2) << "\n";
    std::cout << j.dump(2) << "\n";
    return res.converged ? kExitOk : kExitDomain;
}

int cmd_bounds(const std::string& signal_path, long t, long p, double eps, const fs::path& out)
{
    const prony::PronySignal sig = prony::signal_from_json(load_json(signal_path));
    const std::string failure    = prony::regularity_failure(sig, p);
    if (!failure.empty())
    {
        std::cerr << "signal is not a regular point at step p=" << p << ": " << failure << "\n";
        return kExitDomain;
    }
    const bool conf = sig.kind == prony::SignalKind::Confluent;
    const prony::StabilityReport rep =
        conf ? prony::bound_confluent(sig, t, p, eps) : prony::bound_polynomial(sig, t, p, eps);
    prony::SamplingGrid grid{t, p, sig.order_R()};
    const std::vector<double> exact = prony::acc_loc_exact(sig, grid, eps);

    json j;
    j["delta"]   = rep.delta;
    j["delta_p"] = rep.delta_p;
    j["t"]       = t;
    j["p"]       = p;
    j["eps"]     = eps;
    j["rho"]     = rep.rho;
    j["params"]  = json::array();
    for (std::size_t r = 0; r < rep.bound.size(); ++r)
        j["params"].push_back({{"param_id", r},
                               {"bound", rep.bound[r]},
                               {"exact", exact[r]},
                               {"dominates", rep.bound[r] >= exact[r]}});
    fs::create_directories(out);
    std::ofstream bf(out / "bounds.json");
    bf << j.dump(2) << "\n";
    std::ofstream bc(out / "bounds.csv");
    bc << "param_id,kind,bound,exact,ratio,delta,delta_p,t,p,eps\n";
    for (std::size_t r = 0; r < rep.bound.size(); ++r)
        bc << r << "," << (conf ? "confluent" : "polynomial") << "," << rep.bound[r] << ","
           << exact[r] << "," << rep.bound[r] / exact[r] << "," << rep.delta << ","
           << rep.delta_p << "," << t << "," << p << "," << eps << "\n";
    std::cout << j.dump(2) << "\n";
    return kExitOk;
}

int cmd_experiment(const std::string& config_path, std::uint64_t seed, const fs::path& out,
                   const std::string& scenario_flag)
{
    prony::ExperimentConfig cfg;
    if (!config_path.empty())
    {
        const json j = load_json(config_path);
        cfg.scenario = j.value("scenario", cfg.scenario);
        cfg.trials   = j.value("trials", cfg.trials);
        cfg.seed     = j.value("seed", seed);
        cfg.threads  = j.value("threads", cfg.threads);
        cfg.samples  = j.value("samples", cfg.samples);
        cfg.gap      = j.value("gap", cfg.gap);
        cfg.top_index = j.value("top_index", cfg.top_index);
        if (j.contains("noise")) cfg.noise = j.at("noise").get<std::vector<double>>();
        if (j.contains("sweep")) cfg.sweep = j.at("sweep").get<std::vector<long>>();
        if (j.contains("solvers"))
            cfg.solvers = j.at("solvers").get<std::vector<std::string>>();
    }
    else
    {
        cfg.seed = seed;
    }
    if (!scenario_flag.empty()) cfg.scenario = scenario_flag;

    fs::create_directories(out);
    std::ofstream csv(out / (cfg.scenario + ".csv"));
    if (cfg.scenario == "fixed_samples")
    {
        const auto cells = prony::run_fixed_samples(cfg, &csv);
        for (const auto& c : cells)
            std::cout << c.solver << " p=" << c.p << " eps=" << c.eps
                      << " median_error=" << c.median_error << "\n";
    }
    else if (cfg.scenario == "fixed_budget")
    {
        const auto cells = prony::run_fixed_budget(cfg, &csv);
        for (const auto& c : cells)
            std::cout << c.solver << " p=" << c.p << " samples=" << c.sample_count
                      << " median_error=" << c.median_error
                      << " runtime_ms=" << c.mean_runtime_ms << "\n";
    }
    else if (cfg.scenario == "dominance")
    {
        const auto rep = prony::run_dominance(cfg, &csv);
        std::cout << "tested=" << rep.tested << " violations=" << rep.violations
                  << " worst_margin=" << rep.worst_margin << "\n";
        if (rep.violations > 0) return kExitDomain;
    }
    else if (cfg.scenario == "factorizations")
    {
        const auto rep = prony::run_factorizations(cfg, &csv);
        std::cout << "tested=" << rep.tested << " worst_residual=" << rep.worst_residual << "\n";
        if (rep.worst_residual > 1e-10) return kExitDomain;
    }
    else
    {
        std::cerr << "unknown scenario: " << cfg.scenario << "\n";
        return kExitUsage;
    }
    std::cout << "wrote " << (out / (cfg.scenario + ".csv")).string() << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Prony-type system generation, solving, and stability analysis"};
    app.require_subcommand(1);

    std::string config_path, out_dir = ".";
    std::uint64_t seed = 1;
    app.add_option("--config", config_path, "JSON config file");
    app.add_option("--seed", seed, "RNG seed");
    app.add_option("--out", out_dir, "output directory");

    auto* gen = app.add_subcommand("generate", "write signal JSON and measurement CSVs");

    std::string meas_path, signal_path, solver = "nls";
    long p_flag = 1;
    auto* slv   = app.add_subcommand("solve", "recover parameters from measurements");
    slv->add_option("--meas", meas_path, "measurement CSV")->required();
    slv->add_option("--signal", signal_path, "initial/reference signal JSON")->required();
    slv->add_option("--solver", solver, "prony|esprit|nls");
    slv->add_option("-p", p_flag, "decimation step (routes through the decimation wrapper)");

    std::string bsignal;
    long bt = 0, bp = 1;
    double beps = 1e-3;
    auto* bnd   = app.add_subcommand("bounds", "stability report for a signal");
    bnd->add_option("--signal", bsignal, "signal JSON")->required();
    bnd->add_option("--t", bt, "grid start");
    bnd->add_option("--p", bp, "grid step");
    bnd->add_option("--eps", beps, "noise bound");

    std::string scenario;
    auto* exp = app.add_subcommand("experiment", "run a sweep scenario");
    exp->add_option("--scenario", scenario,
                    "fixed_samples|fixed_budget|dominance|factorizations");

    CLI11_PARSE(app, argc, argv);

    try
    {
        const fs::path out(out_dir);
        if (gen->parsed())
        {
            if (config_path.empty())
            {
                std::cerr << "generate requires --config\n";
                return kExitUsage;
            }
            return cmd_generate(config_path, seed, out);
        }
        if (slv->parsed()) return cmd_solve(meas_path, signal_path, solver, p_flag, out);
        if (bnd->parsed()) return cmd_bounds(bsignal, bt, bp, beps, out);
        if (exp->parsed()) return cmd_experiment(config_path, seed, out, scenario);
    }
    catch (const std::invalid_argument& e)
    {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    }
    catch (const std::exception& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
