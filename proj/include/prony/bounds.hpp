#ifndef PRONY_BOUNDS_HPP
#define PRONY_BOUNDS_HPP

#include "prony/types.hpp"

namespace prony {

struct Separation {
    double delta;    // min_{i<j} |z_i - z_j|
    double delta_p;  // min_{i!=j} |z_i^p - z_j^p|
};

// Single-node signals return +infinity for both by convention.
Separation separation(const std::vector<cx>& nodes, long p);

// Explicit constants in the coefficient accuracy bounds.
double constant_C1(int l, int lj);
double constant_C2(int l, int lj);

struct StabilityReport {
    std::vector<double> bound;  // theoretical per-parameter accuracy bound
    std::vector<double> exact;  // exact first-order accuracy (filled by caller/sweep)
    double delta;
    double delta_p;
    std::vector<double> rho;  // improvement factor per node
    long t;
    long p;
    double eps;
};

// Per-parameter accuracy bounds for the polynomial map (blockwise parameter
// order).  delta_p = 0 yields infinite bounds.  For a single node the
// separation-dependent factors are taken as 1.
StabilityReport bound_polynomial(const PronySignal& sig, long t, long p, double eps);

// Confluent version; requires 0 < |z_j| <= 1.
StabilityReport bound_confluent(const PronySignal& sig, long t, long p, double eps);

// rho = (delta_p / delta)^R p^{l_j}: ratio of non-decimated to decimated
// first-order error amplification for node j.
double improvement_rho(const PronySignal& sig, int j, long p);

// Two unit-circle nodes with angular gap xi: (sin(p xi/2)/sin(xi/2))^R p^{l_j}.
double improvement_rho_two_node(double xi, long p, int R, int lj);

double alpha(double r);

struct SuperresCheck {
    bool lemma_holds;      // delta_p > alpha(r0) p delta0
    bool corollary_holds;  // rho > alpha(r0)^R p^{R + l_j}
    double delta_p;
    double rho;
};

// Two unit-circle nodes with gap delta0 = |z_1 - z_2| ~ xi; requires p*delta0 < r0.
SuperresCheck superres_check(double delta0, long p, double r0, int R, int lj);

// Search p0 in (n, n + ceil(2 pi / xi)] with |sin(p0 xi / 2)| > 1/2.
struct WitnessResult {
    bool found;
    long p0;
    double rho;
};
WitnessResult corollary_witness(double xi, long n, int R, int lj);

struct ComparatorReport {
    // Small-sample CRB approximations (unspecified constants taken as 1).
    std::vector<double> crb_small_nodes;
    std::vector<std::vector<double>> crb_small_coeffs;  // l = 1..l_j-1
    // Asymptotic CRB in the sample count M.
    std::vector<double> crb_asymptotic_nodes;
    std::vector<std::vector<double>> crb_asymptotic_coeffs;
    double sigma;
    long samples;
};

ComparatorReport crb_comparators(const PronySignal& sig, double sigma, long samples);

struct DonohoReport {
    double undecimated;  // C1 R 4^{R+1} (1/Delta)^{2R+1} eps
    double decimated;    // C3 R (4/C2)^{R+1} (2R-1)^{2R+1} (1/(Delta Omega))^{2R+1} eps
    long p;              // floor(Omega / (2R-1))
    bool precondition_ok;  // p * Delta < 1/2
};

DonohoReport donoho_comparators(int R, double Omega, double Delta, double eps);

struct DominanceConfig {
    std::uint64_t seed = 1;
    int points         = 1000;
    double eps         = 1e-3;
};

struct DominanceReport {
    int tested          = 0;
    int violations      = 0;
    int skipped_deltap  = 0;  // delta_p outside (1e-6, 1]
    int skipped_cond    = 0;  // jacobian condition > 1e12
    double worst_margin = std::numeric_limits<double>::infinity();  // min bound/exact
};

// Randomized dominance check of both stability bounds against the exact
// inverse-Jacobian accuracy; generator keeps K in {2,3}, l_j <= 3,
// delta >= 0.1, |leading coeff| >= 0.1, t <= 10, p <= 20.
DominanceReport dominance_sweep(const DominanceConfig& cfg);

}  // namespace prony

#endif
