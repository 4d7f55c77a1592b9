#ifndef PRONY_EXPERIMENTS_HPP
#define PRONY_EXPERIMENTS_HPP

#include <iosfwd>
#include <random>

#include "prony/bounds.hpp"
#include "prony/solvers.hpp"
#include "prony/types.hpp"

namespace prony {

struct ExperimentConfig {
    std::string scenario = "fixed_samples";  // fixed_samples | fixed_budget |
                                             // dominance | factorizations
    int trials = 200;
    std::vector<double> noise;        // eps ladder (uniform box)
    std::vector<long> sweep;          // decimation steps p
    std::vector<std::string> solvers; // subset of {"prony","esprit","nls"}
    std::uint64_t seed = 1;
    int threads = 0;                  // 0 -> hardware concurrency
    // fixed_samples: total sample budget N and angular node gap xi.
    int samples    = 66;
    double gap     = 1e-2;
    // fixed_budget: top sample index.
    int top_index  = 1600;
};

struct SweepCell {
    std::string solver;
    long p = 1;
    double eps = 0.0;
    int sample_count = 0;
    double median_error = 0.0;
    double mean_runtime_ms = 0.0;
};

// Deterministic per-trial RNG stream derived from (seed, trial).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t trial);

// Fixed sample budget N: square decimated systems S_{0,p} inside [0, N-1].
// Writes per-trial CSV rows when csv is non-null; returns per-cell medians.
std::vector<SweepCell> run_fixed_samples(const ExperimentConfig& cfg, std::ostream* csv);

// Fixed top index: decimation shrinks the sample count (all decimated
// samples are used).  Tracks wall time per solve.
std::vector<SweepCell> run_fixed_budget(const ExperimentConfig& cfg, std::ostream* csv);

// CSV wrappers around the bounds/structmat sweeps for the CLI.
DominanceReport run_dominance(const ExperimentConfig& cfg, std::ostream* csv);

struct FactorizationSweepReport {
    int tested = 0;
    double worst_residual = 0.0;
};
FactorizationSweepReport run_factorizations(const ExperimentConfig& cfg, std::ostream* csv);

// Random regular signal generator shared by the sweeps (K in [kmin, kmax],
// l_j <= lmax, |z_j| in [0.5, 1] or unit circle, delta >= delta_min,
// |leading coeff| >= 0.1).
PronySignal random_regular_signal(std::mt19937_64& rng, SignalKind kind, int kmin, int kmax,
                                  int lmax, double delta_min);

double median(std::vector<double> v);

}  // namespace prony

#endif
