#ifndef PRONY_SOLVERS_HPP
#define PRONY_SOLVERS_HPP

#include "prony/types.hpp"

namespace prony {

struct SolveResult {
    PronySignal recovered;
    double residual     = 0.0;   // l2 norm of the fit error
    int iterations      = 0;
    double cond         = 0.0;
    double subspace_gap = 0.0;   // sigma_C / sigma_{C+1} for subspace methods
    bool converged      = false;
    std::string message;
};

enum class InnerSolver { Prony, Esprit, Nls };

struct NlsOptions {
    int max_iter        = 200;
    double damping_init = 1e-3;
    double step_tol     = 1e-12;
};

// Minimal-total-distance bijection: perm[i] = index into `recovered` matched
// to reference node i (exhaustive search, K <= 8).
std::vector<int> match_nodes(const std::vector<cx>& recovered, const std::vector<cx>& reference);

// Max node distance after optimal matching.
double node_error(const std::vector<cx>& recovered, const std::vector<cx>& reference);

// Hankel-nullspace method: polynomial roots give the nodes; roots within
// 1e-4 are clustered to realize the declared multiplicities; coefficients by
// linear back-solve through the (Pascal or confluent) Vandermonde system.
// Requires grid.p == 1 (decimated inputs are remapped by solve_decimated).
SolveResult solve_classical_prony(const MeasurementVector& meas, const std::vector<int>& mults,
                                  SignalKind kind);

// Subspace method on the max-overlap Hankel window (ceil((n+1)/2) rows).
// Multiplicity structure beyond l_j = 1 is handled by a classical-Prony
// initialization refined with NLS.
SolveResult solve_esprit(const MeasurementVector& meas, const std::vector<int>& mults,
                         SignalKind kind);

// Damped Gauss-Newton on the analytic Jacobian.  Unit-circle nodes are
// optimized through their angles when initial.kind == Polynomial; otherwise
// all parameters are complex holomorphic variables.  Accepted steps never
// increase the residual; convergence is declared on an accepted step of norm
// <= step_tol * max(1, |x|).  A speculative undamped polish follows, whose
// endpoint is accepted only if it strictly lowers the residual.
SolveResult solve_nls(const MeasurementVector& meas, const PronySignal& initial,
                      const NlsOptions& opts = {});

struct DecimationPlan {
    PronySignal initial;  // a-priori approximation (nodes guide root selection)
    long p = 1;
};

// Decimation wrapper: subsamples m_0, m_p, m_{2p}, ..., feeds the inner
// solver in the w = z^p domain (coefficients scaled by p^i), then selects the
// p-th root of each w_j nearest to the corresponding initial node and
// un-scales the coefficients.  `count` limits the decimated sample count
// (< 0 takes every index that fits).
SolveResult solve_decimated(const MeasurementVector& meas_full, const DecimationPlan& plan,
                            InnerSolver inner, const NlsOptions& opts = {}, int count = -1);

// Grid-searches p in [1, floor((N-1)/(R-1))] maximizing delta_p of the
// initial nodes.
long choose_p(int N, int R, const std::vector<cx>& initial_nodes);

// p-th root of w nearest to z0; sets `ambiguous` when the two nearest roots
// are within 1e-9 of equidistant.
cx nearest_pth_root(cx w, long p, cx z0, bool* ambiguous = nullptr);

}  // namespace prony

#endif
