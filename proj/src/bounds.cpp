#include "prony/bounds.hpp"

#include <cmath>
#include <random>

#include "prony/jacobian.hpp"
#include "prony/model.hpp"
#include "prony/structmat.hpp"

namespace prony {

namespace {

double factorial(int n)
{
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

Separation separation(const std::vector<cx>& nodes, long p)
{
    const int K = static_cast<int>(nodes.size());
    if (K < 2) return {kInf, kInf};
    double d = kInf, dp = kInf;
    for (int i = 0; i < K; ++i)
        for (int j = i + 1; j < K; ++j)
        {
            d  = std::fmin(d, std::abs(nodes[i] - nodes[j]));
            dp = std::fmin(dp, std::abs(cx_pow(nodes[i], p) - cx_pow(nodes[j], p)));
        }
    return {d, dp};
}

double constant_C1(int l, int lj)
{
    return (2.0 / factorial(l)) * std::pow(static_cast<double>(lj - l), 3) *
           std::fmax(1.0, static_cast<double>(binomial(lj - 1, lj - l))) *
           std::fmax(1.0, static_cast<double>(stirling_first_unsigned(lj, l)));
}

double constant_C2(int l, int lj)
{
    return (2.0 / factorial(l)) * std::pow(static_cast<double>(lj - l), 4) *
           std::fmax(1.0, static_cast<double>(binomial(lj - 1, lj - l))) *
           std::fmax(1.0, static_cast<double>(stirling_first_unsigned(lj, l))) *
           std::fmax(1.0, static_cast<double>(stirling_second(lj, l)));
}

namespace {

StabilityReport bound_impl(const PronySignal& sig, long t, long p, double eps, bool conf)
{
    sig.validate();
    if (conf)
        for (const cx& z : sig.nodes)
            if (std::abs(z) > 1.0 + 1e-12)
                throw std::invalid_argument("confluent bound requires 0 < |z_j| <= 1");

    const int K = sig.num_nodes();
    const int R = sig.order_R();
    const Separation sep = separation(sig.nodes, p);

    StabilityReport rep;
    rep.delta   = sep.delta;
    rep.delta_p = sep.delta_p;
    rep.t       = t;
    rep.p       = p;
    rep.eps     = eps;

    // Single-node convention: the separation-dependent factors are 1.
    const bool single = K < 2;
    const double sep_factor =
        single ? 1.0 : (sep.delta_p > 0.0 ? std::pow(2.0 / sep.delta_p, R) : kInf);

    for (int j = 0; j < K; ++j)
    {
        const int lj        = sig.mults[j];
        const double alead  = std::abs(sig.coeffs[j][lj - 1]);
        const double absz   = std::abs(sig.nodes[j]);
        for (int l = 0; l < lj; ++l)
        {
            const double C     = conf ? constant_C2(l, lj) : constant_C1(l, lj);
            const double ratio = l == 0 ? 1.0 : 1.0 + std::abs(sig.coeffs[j][l - 1]) / alead;
            const double half =
                single ? 1.0 : std::pow(0.5 + R / sep.delta_p, lj - l);
            double b = C * sep_factor * half * ratio *
                       std::fmax(1.0, std::pow(static_cast<double>(t), lj - l)) /
                       std::pow(static_cast<double>(p), l) * eps;
            if (conf) b *= std::pow(absz, static_cast<double>(l - t) - static_cast<double>(p) * lj);
            rep.bound.push_back(b);
        }
        double b = (2.0 / factorial(lj)) * sep_factor /
                   (alead * std::pow(static_cast<double>(p), lj)) * eps;
        if (conf) b *= std::pow(absz, static_cast<double>(lj - t) - static_cast<double>(p) * lj);
        rep.bound.push_back(b);
        if (K >= 2 && sep.delta > 0.0) rep.rho.push_back(improvement_rho(sig, j, p));
    }
    return rep;
}

}  // namespace

StabilityReport bound_polynomial(const PronySignal& sig, long t, long p, double eps)
{
    return bound_impl(sig, t, p, eps, false);
}

StabilityReport bound_confluent(const PronySignal& sig, long t, long p, double eps)
{
    return bound_impl(sig, t, p, eps, true);
}

double improvement_rho(const PronySignal& sig, int j, long p)
{
    const Separation sep = separation(sig.nodes, p);
    const int R          = sig.order_R();
    return std::pow(sep.delta_p / sep.delta, R) *
           std::pow(static_cast<double>(p), sig.mults[j]);
}

double improvement_rho_two_node(double xi, long p, int R, int lj)
{
    return std::pow(std::sin(p * xi / 2.0) / std::sin(xi / 2.0), R) *
           std::pow(static_cast<double>(p), lj);
}

double alpha(double r)
{
    // sqrt(2(1 - cos r)) = 2|sin(r/2)|, which avoids cancellation near 0.
    return 2.0 * std::abs(std::sin(r / 2.0)) / r;
}

SuperresCheck superres_check(double delta0, long p, double r0, int R, int lj)
{
    if (p * delta0 >= r0)
        throw std::invalid_argument("superres_check requires p * delta0 < r0");
    SuperresCheck out;
    out.delta_p = 2.0 * std::abs(std::sin(p * delta0 / 2.0));
    const double delta1 = 2.0 * std::sin(delta0 / 2.0);
    out.rho             = std::pow(out.delta_p / delta1, R) * std::pow(static_cast<double>(p), lj);
    out.lemma_holds     = out.delta_p > alpha(r0) * p * delta0;
    out.corollary_holds = out.rho > std::pow(alpha(r0), R) * std::pow(static_cast<double>(p), R + lj);
    return out;
}

WitnessResult corollary_witness(double xi, long n, int R, int lj)
{
    const long span = static_cast<long>(std::ceil(2.0 * M_PI / xi));
    for (long p0 = n + 1; p0 <= n + span; ++p0)
    {
        if (std::abs(std::sin(p0 * xi / 2.0)) > 0.5)
        {
            const double rho = std::pow(static_cast<double>(p0), lj) /
                               std::pow(2.0 * std::sin(xi / 2.0), R) *
                               std::pow(2.0 * std::abs(std::sin(p0 * xi / 2.0)), R);
            return {true, p0, rho};
        }
    }
    return {false, 0, 0.0};
}

ComparatorReport crb_comparators(const PronySignal& sig, double sigma, long samples)
{
    if (sigma <= 0.0 || samples < 1)
        throw std::invalid_argument("crb_comparators requires sigma > 0, samples >= 1");
    ComparatorReport rep;
    rep.sigma   = sigma;
    rep.samples = samples;
    const double s2 = sigma * sigma;
    for (int j = 0; j < sig.num_nodes(); ++j)
    {
        const int lj    = sig.mults[j];
        const cx alead  = sig.coeffs[j][lj - 1];
        const double a2 = std::norm(alead);
        rep.crb_small_nodes.push_back(s2 / a2);
        rep.crb_asymptotic_nodes.push_back(s2 / (a2 * std::pow(static_cast<double>(samples), 2 * lj + 1)));
        std::vector<double> small, asym;
        for (int l = 1; l <= lj - 1; ++l)
        {
            const cx ratio = sig.coeffs[j][l - 1] / alead;
            small.push_back(s2 * (std::norm(ratio) + ratio.real() + 1.0));
            asym.push_back(s2 / std::pow(static_cast<double>(samples), 2 * l + 1));
        }
        rep.crb_small_coeffs.push_back(small);
        rep.crb_asymptotic_coeffs.push_back(asym);
    }
    return rep;
}

DonohoReport donoho_comparators(int R, double Omega, double Delta, double eps)
{
    if (Omega <= 2.0 * M_PI) throw std::invalid_argument("donoho_comparators requires Omega > 2 pi");
    DonohoReport rep;
    rep.p = static_cast<long>(std::floor(Omega / (2 * R - 1)));
    rep.precondition_ok = rep.p * Delta < 0.5;
    rep.undecimated =
        R * std::pow(4.0, R + 1) * std::pow(1.0 / Delta, 2 * R + 1) * eps;
    const double C2 = alpha(0.5);
    rep.decimated = R * std::pow(4.0 / C2, R + 1) * std::pow(2.0 * R - 1.0, 2 * R + 1) *
                    std::pow(1.0 / (Delta * Omega), 2 * R + 1) * eps;
    return rep;
}

DominanceReport dominance_sweep(const DominanceConfig& cfg)
{
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto uni = [&](double lo, double hi) { return lo + (hi - lo) * unit(rng); };

    DominanceReport rep;
    int done = 0;
    while (done < cfg.points)
    {
        const bool conf = (rng() & 1u) != 0;
        const int K     = 2 + static_cast<int>(rng() % 2);  // 2 or 3 nodes

        std::vector<cx> nodes;
        for (int attempt = 0; attempt < 200; ++attempt)
        {
            nodes.clear();
            for (int j = 0; j < K; ++j)
            {
                const double arg = uni(0.0, 2.0 * M_PI);
                const double mod = conf ? uni(0.5, 1.0) : 1.0;
                nodes.push_back(std::polar(mod, arg));
            }
            if (separation(nodes, 1).delta >= 0.1) break;
        }
        if (separation(nodes, 1).delta < 0.1) continue;

        PronySignal sig;
        sig.kind  = conf ? SignalKind::Confluent : SignalKind::Polynomial;
        sig.nodes = nodes;
        for (int j = 0; j < K; ++j)
        {
            const int lj = 1 + static_cast<int>(rng() % 3);
            sig.mults.push_back(lj);
            std::vector<cx> c;
            for (int l = 0; l < lj; ++l) c.emplace_back(uni(-1.0, 1.0), uni(-1.0, 1.0));
            while (std::abs(c.back()) < 0.1) c.back() = cx(uni(-1.0, 1.0), uni(-1.0, 1.0));
            sig.coeffs.push_back(c);
        }
        const long t = static_cast<long>(rng() % 11);
        const long p = 1 + static_cast<long>(rng() % 20);

        const Separation sep = separation(sig.nodes, p);
        // The proofs' row-norm estimates require separations at most 1;
        // configurations outside that validity domain are excluded and counted.
        if (!(sep.delta_p > 1e-6 && sep.delta_p <= 1.0))
        {
            ++rep.skipped_deltap;
            continue;
        }

        SamplingGrid grid{t, p, sig.order_R()};
        InverseRowReport inv = inverse_jacobian_rows(sig, grid);
        if (!inv.ok)
        {
            ++rep.skipped_cond;
            continue;
        }
        const StabilityReport b =
            conf ? bound_confluent(sig, t, p, cfg.eps) : bound_polynomial(sig, t, p, cfg.eps);
        ++rep.tested;
        ++done;
        for (std::size_t r = 0; r < b.bound.size(); ++r)
        {
            const double exact = cfg.eps * inv.row_norms[r];
            const double m     = b.bound[r] / exact;
            rep.worst_margin   = std::fmin(rep.worst_margin, m);
            if (m < 1.0)
            {
                ++rep.violations;
            }
        }
    }
    return rep;
}

}  // namespace prony
