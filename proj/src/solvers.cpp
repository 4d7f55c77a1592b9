#include "prony/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Dense>

#include "prony/jacobian.hpp"
#include "prony/model.hpp"
#include "prony/structmat.hpp"

namespace prony {

std::vector<int> match_nodes(const std::vector<cx>& recovered, const std::vector<cx>& reference)
{
    const int K = static_cast<int>(reference.size());
    if (static_cast<int>(recovered.size()) != K || K > 8)
        throw std::invalid_argument("match_nodes requires equal-length lists, K <= 8");
    std::vector<int> perm(K), best(K);
    std::iota(perm.begin(), perm.end(), 0);
    double best_cost = std::numeric_limits<double>::infinity();
    do
    {
        double cost = 0.0;
        for (int i = 0; i < K; ++i) cost += std::abs(recovered[perm[i]] - reference[i]);
        if (cost < best_cost)
        {
            best_cost = cost;
            best      = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

double node_error(const std::vector<cx>& recovered, const std::vector<cx>& reference)
{
    const std::vector<int> perm = match_nodes(recovered, reference);
    double e                    = 0.0;
    for (std::size_t i = 0; i < reference.size(); ++i)
        e = std::fmax(e, std::abs(recovered[perm[i]] - reference[i]));
    return e;
}

namespace {

int total_order(const std::vector<int>& mults)
{
    int c = 0;
    for (int m : mults) c += m;
    return c;
}

// Least-squares coefficient back-solve through the appropriate Vandermonde
// system on the measurement grid.
void backsolve_coeffs(PronySignal& sig, const MeasurementVector& meas)
{
    const bool conf = sig.kind == SignalKind::Confluent;
    const cmat Phi  = conf ? confluent_vandermonde(sig.nodes, sig.mults, meas.grid.t,
                                                   meas.grid.p, meas.grid.n)
                           : pascal_vandermonde(sig.nodes, sig.mults, meas.grid.t,
                                                meas.grid.p, meas.grid.n);
    const cvec a = Phi.colPivHouseholderQr().solve(meas.values);
    int pos      = 0;
    for (int j = 0; j < sig.num_nodes(); ++j)
        for (int l = 0; l < sig.mults[j]; ++l) sig.coeffs[j][l] = a(pos++);
}

cvec forward_values_relaxed(const PronySignal& sig, const SamplingGrid& grid)
{
    return forward_values_unchecked(sig, grid);
}

std::vector<cx> polynomial_roots(const cvec& coeffs)
{
    // coeffs(i) multiplies w^i; trims a (near-)zero leading coefficient.
    int deg = static_cast<int>(coeffs.size()) - 1;
    const double scale = coeffs.cwiseAbs().maxCoeff();
    while (deg > 0 && std::abs(coeffs(deg)) < 1e-12 * scale) --deg;
    std::vector<cx> roots;
    if (deg == 0) return roots;
    cmat comp = cmat::Zero(deg, deg);
    for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -coeffs(i) / coeffs(deg);
    Eigen::ComplexEigenSolver<cmat> es(comp, false);
    for (int i = 0; i < deg; ++i) roots.push_back(es.eigenvalues()(i));
    return roots;
}

// Clusters roots within 1e-4 of each other (transitively) and returns centroids
// with cluster sizes, largest clusters first.
std::vector<std::pair<cx, int>> cluster_roots(const std::vector<cx>& roots)
{
    const int n = static_cast<int>(roots.size());
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(roots[i] - roots[j]) < 1e-4) parent[find(i)] = find(j);
    std::vector<std::pair<cx, int>> clusters;
    std::vector<int> root_of;
    for (int i = 0; i < n; ++i)
    {
        const int r = find(i);
        int idx     = -1;
        for (std::size_t c = 0; c < root_of.size(); ++c)
            if (root_of[c] == r) idx = static_cast<int>(c);
        if (idx < 0)
        {
            root_of.push_back(r);
            clusters.emplace_back(cx(0.0, 0.0), 0);
            idx = static_cast<int>(clusters.size()) - 1;
        }
        clusters[idx].first += roots[i];
        clusters[idx].second += 1;
    }
    for (auto& c : clusters) c.first /= static_cast<double>(c.second);
    std::sort(clusters.begin(), clusters.end(),
              [](const auto& a, const auto& b) { return a.second > b.second; });
    return clusters;
}

PronySignal assign_clusters(const std::vector<std::pair<cx, int>>& clusters,
                            const std::vector<int>& mults, SignalKind kind, bool* order_ok)
{
    // Pair the largest clusters with the largest declared multiplicities.
    const int K = static_cast<int>(mults.size());
    std::vector<int> idx(K);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return mults[a] > mults[b]; });

    PronySignal sig;
    sig.kind = kind;
    sig.nodes.resize(K);
    sig.mults = mults;
    sig.coeffs.resize(K);
    *order_ok = static_cast<int>(clusters.size()) >= K;
    for (int r = 0; r < K; ++r)
    {
        const cx node = r < static_cast<int>(clusters.size()) ? clusters[r].first
                                                              : cx(1.0, 0.0);
        if (r < static_cast<int>(clusters.size()) && clusters[r].second != mults[idx[r]])
            *order_ok = false;
        sig.nodes[idx[r]] = node;
        sig.coeffs[idx[r]].assign(mults[idx[r]], cx(0.0, 0.0));
    }
    return sig;
}

double fit_residual(const PronySignal& sig, const MeasurementVector& meas)
{
    return (forward_values_relaxed(sig, meas.grid) - meas.values).norm();
}

}  // namespace

SolveResult solve_classical_prony(const MeasurementVector& meas, const std::vector<int>& mults,
                                  SignalKind kind)
{
    if (meas.grid.p != 1)
        throw std::invalid_argument("solve_classical_prony expects a remapped grid with p = 1");
    const int C = total_order(mults);
    const int n = meas.grid.n;
    if (n < 2 * C)
        throw std::invalid_argument("solve_classical_prony needs at least 2C samples");

    SolveResult res;
    // Hankel with C+1 columns; its nullspace vector is the node polynomial.
    const int rows = n - C;
    cmat H(rows, C + 1);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j <= C; ++j) H(i, j) = meas.values(i + j);
    Eigen::JacobiSVD<cmat> svd(H, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    if (sv(C - 1) < 1e-10 * sv(0))
    {
        res.message = "hankel rank below model order (model-order mismatch)";
        return res;
    }
    res.cond = sv(0) / sv(C);

    const cvec q            = svd.matrixV().col(C);
    std::vector<cx> roots   = polynomial_roots(q);
    auto clusters           = cluster_roots(roots);
    bool order_ok           = false;
    PronySignal sig         = assign_clusters(clusters, mults, kind, &order_ok);
    if (!order_ok) res.message = "root clustering did not match declared multiplicities";
    backsolve_coeffs(sig, meas);
    res.recovered = sig;
    res.residual  = fit_residual(sig, meas);
    res.converged = order_ok;
    return res;
}

SolveResult solve_esprit(const MeasurementVector& meas, const std::vector<int>& mults,
                         SignalKind kind)
{
    if (meas.grid.p != 1)
        throw std::invalid_argument("solve_esprit expects a remapped grid with p = 1");
    bool multiple = false;
    for (int m : mults) multiple |= m > 1;
    if (multiple)
    {
        // The subspace pencil is only formed for simple nodes; multiplicity
        // structure goes through a Prony initialization refined by NLS.
        SolveResult init = solve_classical_prony(meas, mults, kind);
        SolveResult out  = solve_nls(meas, init.recovered);
        out.message      = "multiplicities handled by prony-initialized nls";
        return out;
    }

    const int K = static_cast<int>(mults.size());
    const int n = meas.grid.n;
    if (n < 2 * K)
        throw std::invalid_argument("solve_esprit needs at least 2C samples");
    const int L    = (n + 1) / 2;       // Hankel rows (max-overlap window)
    const int cols = n - L + 1;

    cmat H(L, cols);
    for (int i = 0; i < L; ++i)
        for (int j = 0; j < cols; ++j) H(i, j) = meas.values(i + j);

    // Signal subspace from the Hermitian eigendecomposition of H H^*.
    Eigen::SelfAdjointEigenSolver<cmat> eig(H * H.adjoint());
    SolveResult res;
    const auto& ev = eig.eigenvalues();  // ascending
    const double sK  = std::sqrt(std::fmax(ev(L - K), 0.0));
    const double sK1 = L > K ? std::sqrt(std::fmax(ev(L - K - 1), 0.0)) : 0.0;
    res.subspace_gap = sK1 > 0.0 ? sK / sK1 : std::numeric_limits<double>::infinity();
    if (res.subspace_gap < 10.0)
        res.message = "subspace gap below 10: separation unreliable";

    cmat W(L, K);
    for (int k = 0; k < K; ++k) W.col(k) = eig.eigenvectors().col(L - 1 - k);
    const cmat W0 = W.topRows(L - 1);
    const cmat W1 = W.bottomRows(L - 1);
    const cmat pencil = (W0.adjoint() * W0).partialPivLu().solve(W0.adjoint() * W1);
    Eigen::ComplexEigenSolver<cmat> pes(pencil, false);

    PronySignal sig;
    sig.kind = kind;
    for (int k = 0; k < K; ++k)
    {
        sig.nodes.push_back(pes.eigenvalues()(k));
        sig.mults.push_back(1);
        sig.coeffs.push_back({cx(0.0, 0.0)});
    }
    backsolve_coeffs(sig, meas);
    res.recovered = sig;
    res.residual  = fit_residual(sig, meas);
    res.converged = true;
    return res;
}

namespace {

// Complex holomorphic damped Gauss-Newton (Basic / Confluent kinds).
// The damped step solves the stacked least-squares system [J; sqrt(lam) D]
// by QR: forming J^* J would square the conditioning and, near the optimum
// of ill-conditioned square systems, destroy the gradient components that
// still carry signal.
SolveResult nls_complex(const MeasurementVector& meas, const PronySignal& initial,
                        const NlsOptions& opts)
{
    PronySignal sig = initial;
    SolveResult res;
    double lam  = opts.damping_init;
    const int R = sig.order_R();

    auto apply_step = [](const PronySignal& s, const cvec& dx, double* xnorm) {
        PronySignal cand = s;
        int pos          = 0;
        double xn        = 0.0;
        for (int j = 0; j < cand.num_nodes(); ++j)
        {
            for (int l = 0; l < cand.mults[j]; ++l)
            {
                cand.coeffs[j][l] -= dx(pos++);
                xn += std::norm(cand.coeffs[j][l]);
            }
            cand.nodes[j] -= dx(pos++);
            xn += std::norm(cand.nodes[j]);
        }
        if (xnorm) *xnorm = std::sqrt(xn);
        return cand;
    };
    auto resid = [&](const PronySignal& s) {
        return cvec(forward_values_relaxed(s, meas.grid) - meas.values);
    };

    cvec r    = resid(sig);
    double rn = r.norm();
    for (int it = 0; it < opts.max_iter; ++it)
    {
        res.iterations = it + 1;
        const cmat J = jacobian_direct(sig, meas.grid);
        rvec D(R);
        for (int c = 0; c < R; ++c) D(c) = std::sqrt(J.col(c).squaredNorm() + 1e-30);
        bool accepted = false;
        for (int tries = 0; tries < 60; ++tries)
        {
            cmat Js = cmat::Zero(meas.grid.n + R, R);
            Js.topRows(meas.grid.n) = J;
            for (int c = 0; c < R; ++c) Js(meas.grid.n + c, c) = std::sqrt(lam) * D(c);
            cvec rs = cvec::Zero(meas.grid.n + R);
            rs.head(meas.grid.n) = r;
            const cvec dx = Js.colPivHouseholderQr().solve(rs);

            double xnorm           = 0.0;
            const PronySignal cand = apply_step(sig, dx, &xnorm);
            const cvec r2          = resid(cand);
            const double r2n       = r2.norm();
            if (r2n <= rn)
            {
                sig = cand;
                r   = r2;
                rn  = r2n;
                lam = std::fmax(lam * 0.3, 1e-16);
                accepted = true;
                // Convergence is judged on accepted steps only.
                if (dx.norm() <= opts.step_tol * std::fmax(1.0, xnorm))
                {
                    res.converged = true;
                    it            = opts.max_iter;
                }
                break;
            }
            lam *= 10.0;
            if (lam > 1e14)
            {
                res.message = "damping underflow: no acceptable step";
                it          = opts.max_iter;
                break;
            }
        }
        if (!accepted) break;
        if (res.converged) break;
    }
    if (!res.converged && res.message.empty()) res.converged = true;  // iteration budget spent

    // Speculative undamped polish: the strictly monotone damped path can
    // stall in a flat valley short of the interpolating optimum.  Run plain
    // Gauss-Newton on the side and accept the endpoint only if it lowers the
    // residual, so accepted iterates still never increase it.
    for (int round = 0; round < 3; ++round)
    {
        PronySignal best = sig;
        double best_rn   = rn;
        PronySignal cur  = sig;
        for (int k = 0; k < 30; ++k)
        {
            const cmat J  = jacobian_direct(cur, meas.grid);
            const cvec rc = resid(cur);
            const cvec dx = J.colPivHouseholderQr().solve(rc);
            cur           = apply_step(cur, dx, nullptr);
            const double rcn = resid(cur).norm();
            if (rcn < best_rn)
            {
                best    = cur;
                best_rn = rcn;
            }
        }
        if (best_rn < rn)
        {
            sig = best;
            rn  = best_rn;
        }
        else
        {
            break;
        }
    }
    res.recovered = sig;
    res.residual  = rn;
    return res;
}

// Real-parameter damped Gauss-Newton with unit-circle nodes through their
// angles (Polynomial kind).
SolveResult nls_angles(const MeasurementVector& meas, const PronySignal& initial,
                       const NlsOptions& opts)
{
    PronySignal sig = initial;
    const int K     = sig.num_nodes();
    const int C     = sig.order_C();
    const int npar  = 2 * C + K;
    SolveResult res;
    double lam = opts.damping_init;

    std::vector<double> xi(K);
    for (int j = 0; j < K; ++j)
    {
        xi[j]        = std::arg(sig.nodes[j]);
        sig.nodes[j] = std::polar(1.0, xi[j]);
    }

    auto resid = [&](const PronySignal& s) {
        return cvec(forward_values_relaxed(s, meas.grid) - meas.values);
    };
    const int n = meas.grid.n;
    auto real_jacobian = [&](const PronySignal& s) {
        const cmat Jc = jacobian_direct(s, meas.grid);
        rmat Jr(2 * n, npar);
        int col = 0, ccol = 0;
        for (int j = 0; j < K; ++j)
        {
            for (int l = 0; l < s.mults[j]; ++l)
            {
                const cvec d = Jc.col(ccol);
                Jr.col(col).head(n)     = d.real();
                Jr.col(col).tail(n)     = d.imag();
                Jr.col(col + 1).head(n) = (cx(0, 1) * d).real();
                Jr.col(col + 1).tail(n) = (cx(0, 1) * d).imag();
                col += 2;
                ++ccol;
            }
            const cvec d = Jc.col(ccol) * (cx(0, 1) * s.nodes[j]);  // d m / d xi_j
            Jr.col(col).head(n) = d.real();
            Jr.col(col).tail(n) = d.imag();
            ++col;
            ++ccol;
        }
        return Jr;
    };
    auto real_resid = [&](const cvec& rc) {
        rvec rr(2 * n);
        rr.head(n) = rc.real();
        rr.tail(n) = rc.imag();
        return rr;
    };
    auto apply_step = [&](const PronySignal& s, const std::vector<double>& xis,
                          const rvec& dx, std::vector<double>* xiout, double* xnorm) {
        PronySignal cand        = s;
        std::vector<double> xic = xis;
        int pos                 = 0;
        double xn               = 0.0;
        for (int j = 0; j < K; ++j)
        {
            for (int l = 0; l < cand.mults[j]; ++l)
            {
                cand.coeffs[j][l] -= cx(dx(pos), dx(pos + 1));
                xn += std::norm(cand.coeffs[j][l]);
                pos += 2;
            }
            xic[j] -= dx(pos);
            xn += xic[j] * xic[j];
            ++pos;
            cand.nodes[j] = std::polar(1.0, xic[j]);
        }
        *xiout = xic;
        if (xnorm) *xnorm = std::sqrt(xn);
        return cand;
    };

    cvec r    = resid(sig);
    double rn = r.norm();

    for (int it = 0; it < opts.max_iter; ++it)
    {
        res.iterations = it + 1;
        const rmat Jr = real_jacobian(sig);
        rvec D(npar);
        for (int c = 0; c < npar; ++c) D(c) = std::sqrt(Jr.col(c).squaredNorm() + 1e-30);
        const rvec rr = real_resid(r);

        bool accepted = false;
        for (int tries = 0; tries < 60; ++tries)
        {
            rmat Js = rmat::Zero(2 * n + npar, npar);
            Js.topRows(2 * n) = Jr;
            for (int c = 0; c < npar; ++c) Js(2 * n + c, c) = std::sqrt(lam) * D(c);
            rvec rs = rvec::Zero(2 * n + npar);
            rs.head(2 * n) = rr;
            const rvec dx  = Js.colPivHouseholderQr().solve(rs);

            std::vector<double> xic;
            double xnorm           = 0.0;
            const PronySignal cand = apply_step(sig, xi, dx, &xic, &xnorm);
            const cvec r2          = resid(cand);
            const double r2n       = r2.norm();
            if (r2n <= rn)
            {
                sig = cand;
                xi  = xic;
                r   = r2;
                rn  = r2n;
                lam = std::fmax(lam * 0.3, 1e-16);
                accepted = true;
                if (dx.norm() <= opts.step_tol * std::fmax(1.0, xnorm))
                {
                    res.converged = true;
                    it            = opts.max_iter;
                }
                break;
            }
            lam *= 10.0;
            if (lam > 1e14)
            {
                res.message = "damping underflow: no acceptable step";
                it          = opts.max_iter;
                break;
            }
        }
        if (!accepted) break;
        if (res.converged) break;
    }
    if (!res.converged && res.message.empty()) res.converged = true;

    // Speculative undamped polish; see nls_complex for the rationale.
    for (int round = 0; round < 3; ++round)
    {
        PronySignal best          = sig;
        std::vector<double> xib   = xi;
        double best_rn            = rn;
        PronySignal cur           = sig;
        std::vector<double> xicur = xi;
        for (int k = 0; k < 30; ++k)
        {
            const rmat Jr = real_jacobian(cur);
            const rvec rr = real_resid(resid(cur));
            const rvec dx = Jr.colPivHouseholderQr().solve(rr);
            std::vector<double> xic;
            cur   = apply_step(cur, xicur, dx, &xic, nullptr);
            xicur = xic;
            const double rcn = resid(cur).norm();
            if (rcn < best_rn)
            {
                best    = cur;
                xib     = xicur;
                best_rn = rcn;
            }
        }
        if (best_rn < rn)
        {
            sig = best;
            xi  = xib;
            rn  = best_rn;
        }
        else
        {
            break;
        }
    }
    res.recovered = sig;
    res.residual  = rn;
    return res;
}

}  // namespace

SolveResult solve_nls(const MeasurementVector& meas, const PronySignal& initial,
                      const NlsOptions& opts)
{
    if (meas.grid.n < initial.order_R())
        throw std::invalid_argument("solve_nls needs at least R samples");
    if (!is_regular_point(initial, meas.grid.p))
        throw std::invalid_argument("solve_nls requires a regular initial point: " +
                                    regularity_failure(initial, meas.grid.p));
    return initial.kind == SignalKind::Polynomial ? nls_angles(meas, initial, opts)
                                                  : nls_complex(meas, initial, opts);
}

cx nearest_pth_root(cx w, long p, cx z0, bool* ambiguous)
{
    const double r  = std::pow(std::abs(w), 1.0 / static_cast<double>(p));
    const double th = std::arg(w);
    cx best(0.0, 0.0);
    double d1 = std::numeric_limits<double>::infinity();
    double d2 = std::numeric_limits<double>::infinity();
    for (long k = 0; k < p; ++k)
    {
        const cx cand  = std::polar(r, (th + 2.0 * M_PI * k) / static_cast<double>(p));
        const double d = std::abs(cand - z0);
        if (d < d1)
        {
            d2   = d1;
            d1   = d;
            best = cand;
        }
        else if (d < d2)
        {
            d2 = d;
        }
    }
    if (ambiguous) *ambiguous = p > 1 && (d2 - d1) < 1e-9;
    return best;
}

long choose_p(int N, int R, const std::vector<cx>& initial_nodes)
{
    const long pmax = std::max(1L, static_cast<long>((N - 1) / (R - 1)));
    long best_p     = 1;
    double best_dp  = -1.0;
    for (long p = 1; p <= pmax; ++p)
    {
        double dp = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < initial_nodes.size(); ++i)
            for (std::size_t j = i + 1; j < initial_nodes.size(); ++j)
                dp = std::fmin(dp, std::abs(cx_pow(initial_nodes[i], p) -
                                            cx_pow(initial_nodes[j], p)));
        if (dp > best_dp)
        {
            best_dp = dp;
            best_p  = p;
        }
    }
    return best_p;
}

SolveResult solve_decimated(const MeasurementVector& meas_full, const DecimationPlan& plan,
                            InnerSolver inner, const NlsOptions& opts, int count)
{
    const int N  = meas_full.grid.n;
    const long p = plan.p;
    if (meas_full.grid.p != 1 || meas_full.grid.t != 0)
        throw std::invalid_argument("solve_decimated expects the full grid t=0, p=1");
    const int fit = static_cast<int>((N - 1) / p) + 1;
    const int n   = count > 0 ? count : fit;
    if (n > fit || n < plan.initial.order_R())
        throw std::invalid_argument("decimated grid does not fit the sample budget");

    double delta_p = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < plan.initial.nodes.size(); ++i)
        for (std::size_t j = i + 1; j < plan.initial.nodes.size(); ++j)
            delta_p = std::fmin(delta_p, std::abs(cx_pow(plan.initial.nodes[i], p) -
                                                  cx_pow(plan.initial.nodes[j], p)));
    if (plan.initial.num_nodes() > 1 && delta_p <= 1e-12)
    {
        SolveResult res;
        res.message = "aliasing: delta_p vanishes for the chosen p";
        return res;
    }

    MeasurementVector dec;
    dec.grid        = {0, 1, n};
    dec.noise_bound = meas_full.noise_bound;
    dec.values.resize(n);
    for (int k = 0; k < n; ++k) dec.values(k) = meas_full.values(k * p);

    const PronySignal winit = change_of_variables_nonshifted(plan.initial, p);
    SolveResult res;
    switch (inner)
    {
        case InnerSolver::Prony:
            res = solve_classical_prony(dec, plan.initial.mults, winit.kind);
            break;
        case InnerSolver::Esprit:
            res = solve_esprit(dec, plan.initial.mults, winit.kind);
            break;
        case InnerSolver::Nls:
            res = solve_nls(dec, winit, opts);
            break;
    }
    if (p == 1)
    {
        res.recovered.kind = plan.initial.kind;
        return res;
    }

    // Align the recovered w-nodes with the predicted ones, then undo the
    // change of variables.
    PronySignal out = plan.initial;
    const std::vector<int> perm = match_nodes(res.recovered.nodes, winit.nodes);
    bool ambiguous              = false;
    for (int j = 0; j < out.num_nodes(); ++j)
    {
        bool amb      = false;
        out.nodes[j]  = nearest_pth_root(res.recovered.nodes[perm[j]], p,
                                         plan.initial.nodes[j], &amb);
        ambiguous |= amb;
        out.coeffs[j] = res.recovered.coeffs[perm[j]];
        for (int i = 0; i < out.mults[j]; ++i) out.coeffs[j][i] /= int_pow(p, i);
    }
    if (out.kind == SignalKind::Polynomial)
        for (cx& z : out.nodes) z /= std::abs(z);
    if (ambiguous) res.message = "root selection ambiguous: two p-th roots nearly equidistant";
    res.recovered = out;
    return res;
}

}  // namespace prony
