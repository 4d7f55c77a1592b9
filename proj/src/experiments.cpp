#include "prony/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <ostream>
#include <thread>

#include "prony/jacobian.hpp"
#include "prony/model.hpp"
#include "prony/structmat.hpp"

namespace prony {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t trial)
{
    // splitmix64 over the combined stream id.
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (trial + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double median(std::vector<double> v)
{
    if (v.empty()) return 0.0;
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

PronySignal random_regular_signal(std::mt19937_64& rng, SignalKind kind, int kmin, int kmax,
                                  int lmax, double delta_min)
{
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto uni = [&](double lo, double hi) { return lo + (hi - lo) * unit(rng); };

    const int K = kmin + static_cast<int>(rng() % (kmax - kmin + 1));
    PronySignal sig;
    sig.kind = kind;
    for (int attempt = 0; attempt < 500; ++attempt)
    {
        sig.nodes.clear();
        for (int j = 0; j < K; ++j)
        {
            const double mod = kind == SignalKind::Polynomial ? 1.0 : uni(0.5, 1.0);
            sig.nodes.push_back(std::polar(mod, uni(0.0, 2.0 * M_PI)));
        }
        if (separation(sig.nodes, 1).delta >= delta_min) break;
    }
    for (int j = 0; j < K; ++j)
    {
        const int lj = kind == SignalKind::Basic ? 1 : 1 + static_cast<int>(rng() % lmax);
        sig.mults.push_back(lj);
        std::vector<cx> c;
        for (int l = 0; l < lj; ++l) c.emplace_back(uni(-1.0, 1.0), uni(-1.0, 1.0));
        while (std::abs(c.back()) < 0.1) c.back() = cx(uni(-1.0, 1.0), uni(-1.0, 1.0));
        sig.coeffs.push_back(c);
    }
    return sig;
}

namespace {

struct TrialRow {
    std::string solver;
    long p;
    double eps;
    int trial;
    double node_err;
    double coeff_err;
    double runtime_ms;
    double snr_db;
    int sample_count;
};

void write_rows(std::ostream* csv, const std::vector<TrialRow>& rows, bool with_count)
{
    if (!csv) return;
    *csv << "solver,p,eps,trial,node_error,coeff_error,runtime_ms,snr_db";
    if (with_count) *csv << ",sample_count";
    *csv << "\n";
    for (const auto& r : rows)
    {
        *csv << r.solver << "," << r.p << "," << r.eps << "," << r.trial << ","
             << r.node_err << "," << r.coeff_err << "," << r.runtime_ms << "," << r.snr_db;
        if (with_count) *csv << "," << r.sample_count;
        *csv << "\n";
    }
}

void write_summary(std::ostream* csv, const std::vector<SweepCell>& cells, bool with_count)
{
    if (!csv) return;
    for (const auto& c : cells)
    {
        *csv << c.solver << "," << c.p << "," << c.eps << ",median," << c.median_error
             << ",," << c.mean_runtime_ms << ",";
        if (with_count) *csv << "," << c.sample_count;
        *csv << "\n";
    }
}

InnerSolver solver_from_name(const std::string& name)
{
    if (name == "prony") return InnerSolver::Prony;
    if (name == "esprit") return InnerSolver::Esprit;
    if (name == "nls") return InnerSolver::Nls;
    throw std::invalid_argument("unknown solver: " + name);
}

// Runs fn(trial) over [0, trials) on a worker pool; results keyed by trial
// index so parallelism never changes the output.
void parallel_trials(int trials, int threads, const std::function<void(int)>& fn)
{
    int nthreads = threads > 0 ? threads
                               : static_cast<int>(std::thread::hardware_concurrency());
    nthreads     = std::max(1, std::min(nthreads, trials));
    if (nthreads == 1)
    {
        for (int t = 0; t < trials; ++t) fn(t);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < nthreads; ++w)
        pool.emplace_back([&] {
            for (int t = next.fetch_add(1); t < trials; t = next.fetch_add(1)) fn(t);
        });
    for (auto& th : pool) th.join();
}

struct TrialOutcome {
    double node_err;
    double coeff_err;
    double runtime_ms;
};

// One decimated solve against a two-node unit-circle truth.
TrialOutcome run_trial(const PronySignal& truth, const MeasurementVector& noisy,
                       long p, int count, InnerSolver inner)
{
    const auto start = std::chrono::steady_clock::now();
    DecimationPlan plan{truth, p};
    const SolveResult res = solve_decimated(noisy, plan, inner, {}, count);
    const auto stop = std::chrono::steady_clock::now();

    TrialOutcome out;
    out.runtime_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    out.node_err   = node_error(res.recovered.nodes, truth.nodes);
    const std::vector<int> perm = match_nodes(res.recovered.nodes, truth.nodes);
    out.coeff_err = 0.0;
    for (int j = 0; j < truth.num_nodes(); ++j)
        for (int l = 0; l < truth.mults[j]; ++l)
            out.coeff_err = std::fmax(
                out.coeff_err, std::abs(res.recovered.coeffs[perm[j]][l] - truth.coeffs[j][l]));
    return out;
}

PronySignal two_node_truth(double gap)
{
    PronySignal truth;
    truth.kind   = SignalKind::Basic;
    truth.nodes  = {cx(1.0, 0.0), std::polar(1.0, gap)};
    truth.mults  = {1, 1};
    truth.coeffs = {{cx(1.0, 0.0)}, {cx(1.0, 0.0)}};
    return truth;
}

std::vector<SweepCell> run_two_node_sweep(const ExperimentConfig& cfg, std::ostream* csv,
                                          bool fixed_budget)
{
    ExperimentConfig c = cfg;
    if (c.noise.empty()) c.noise = {fixed_budget ? 1e-6 : 1e-9};
    if (c.sweep.empty())
        c.sweep = fixed_budget ? std::vector<long>{1, 4, 10, 25, 50, 100}
                               : std::vector<long>{1, 3, 9, 21};
    if (c.solvers.empty())
        c.solvers = fixed_budget ? std::vector<std::string>{"esprit", "nls"}
                                 : std::vector<std::string>{"nls"};

    const PronySignal truth = two_node_truth(c.gap);
    const int R             = truth.order_R();
    const int N             = fixed_budget ? c.top_index : c.samples;
    const SamplingGrid full{0, 1, N};
    const MeasurementVector clean = forward_polynomial(truth, full);
    const double signal_power     = clean.values.squaredNorm() / N;

    std::vector<TrialRow> rows;
    std::vector<SweepCell> cells;
    for (double eps : c.noise)
    {
        // Noisy draws are shared across (solver, p) cells within a trial.
        std::vector<MeasurementVector> noisy(c.trials);
        for (int t = 0; t < c.trials; ++t)
            noisy[t] = add_noise(clean, {NoiseSpec::Law::UniformBox, eps, mix_seed(c.seed, t)});
        const double snr_db =
            10.0 * std::log10(signal_power / (2.0 * eps * eps / 3.0));

        for (const std::string& sname : c.solvers)
        {
            const InnerSolver inner = solver_from_name(sname);
            for (long p : c.sweep)
            {
                const int count = fixed_budget ? (N + static_cast<int>(p) - 1) / static_cast<int>(p)
                                               : R;
                if (static_cast<long>(count - 1) * p > N - 1) continue;
                std::vector<TrialOutcome> out(c.trials);
                parallel_trials(c.trials, c.threads, [&](int t) {
                    out[t] = run_trial(truth, noisy[t], p, count, inner);
                });
                std::vector<double> errs, times;
                for (int t = 0; t < c.trials; ++t)
                {
                    rows.push_back({sname, p, eps, t, out[t].node_err, out[t].coeff_err,
                                    out[t].runtime_ms, snr_db, count});
                    errs.push_back(out[t].node_err);
                    times.push_back(out[t].runtime_ms);
                }
                SweepCell cell;
                cell.solver          = sname;
                cell.p               = p;
                cell.eps             = eps;
                cell.sample_count    = count;
                cell.median_error    = median(errs);
                cell.mean_runtime_ms = 0.0;
                for (double v : times) cell.mean_runtime_ms += v / times.size();
                cells.push_back(cell);
            }
        }
    }
    write_rows(csv, rows, fixed_budget);
    write_summary(csv, cells, fixed_budget);
    return cells;
}

}  // namespace

std::vector<SweepCell> run_fixed_samples(const ExperimentConfig& cfg, std::ostream* csv)
{
    return run_two_node_sweep(cfg, csv, false);
}

std::vector<SweepCell> run_fixed_budget(const ExperimentConfig& cfg, std::ostream* csv)
{
    return run_two_node_sweep(cfg, csv, true);
}

DominanceReport run_dominance(const ExperimentConfig& cfg, std::ostream* csv)
{
    DominanceConfig dc;
    dc.seed   = cfg.seed;
    dc.points = cfg.trials;
    if (!cfg.noise.empty()) dc.eps = cfg.noise.front();
    const DominanceReport rep = dominance_sweep(dc);
    if (csv)
    {
        *csv << "tested,violations,skipped_deltap,skipped_cond,worst_margin\n";
        *csv << rep.tested << "," << rep.violations << "," << rep.skipped_deltap << ","
             << rep.skipped_cond << "," << rep.worst_margin << "\n";
    }
    return rep;
}

FactorizationSweepReport run_factorizations(const ExperimentConfig& cfg, std::ostream* csv)
{
    std::mt19937_64 rng(cfg.seed);
    FactorizationSweepReport rep;
    if (csv) *csv << "config,vandermonde_residual,data_matrix_residual,jacobian_residual\n";
    for (int i = 0; i < cfg.trials; ++i)
    {
        const bool conf  = (rng() & 1u) != 0;
        PronySignal sig  = random_regular_signal(
            rng, conf ? SignalKind::Confluent : SignalKind::Polynomial, 1, 3, 3, 0.2);
        const long t = static_cast<long>(rng() % 21);
        const long p = 1 + static_cast<long>(rng() % 50);

        const double vres =
            vandermonde_factorizations_check(sig.nodes, sig.mults, t, p).max();
        const double dres = data_matrix(sig, t, p).factorization_residual;
        SamplingGrid grid{t, p, sig.order_R()};
        double jres = 0.0;
        for (int route = 1; route <= 3; ++route)
            jres = std::fmax(jres, rel_residual(jacobian_factorized(sig, grid, route),
                                                jacobian_direct(sig, grid)));
        const double worst = std::fmax(vres, std::fmax(dres, jres));
        rep.worst_residual = std::fmax(rep.worst_residual, worst);
        ++rep.tested;
        if (csv) *csv << i << "," << vres << "," << dres << "," << jres << "\n";
    }
    return rep;
}

}  // namespace prony
