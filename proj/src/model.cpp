#include "prony/model.hpp"

#include <cmath>
#include <random>

namespace prony {

std::string to_string(SignalKind k)
{
    switch (k)
    {
        case SignalKind::Basic:
            return "basic";
        case SignalKind::Polynomial:
            return "polynomial";
        case SignalKind::Confluent:
            return "confluent";
    }
    return "basic";
}

SignalKind kind_from_string(const std::string& s)
{
    if (s == "basic") return SignalKind::Basic;
    if (s == "polynomial") return SignalKind::Polynomial;
    if (s == "confluent") return SignalKind::Confluent;
    throw std::invalid_argument("unknown signal kind: " + s);
}

void PronySignal::validate() const
{
    const std::size_t K = nodes.size();
    if (K < 1) throw std::invalid_argument("signal needs at least one node");
    if (mults.size() != K || coeffs.size() != K)
        throw std::invalid_argument("nodes/mults/coeffs length mismatch");
    for (std::size_t j = 0; j < K; ++j)
    {
        if (nodes[j] == cx(0.0, 0.0)) throw std::invalid_argument("node must be nonzero");
        if (mults[j] < 1) throw std::invalid_argument("multiplicity must be >= 1");
        if (coeffs[j].size() != static_cast<std::size_t>(mults[j]))
            throw std::invalid_argument("coefficient block length must equal multiplicity");
        if (kind == SignalKind::Basic && mults[j] != 1)
            throw std::invalid_argument("basic signals require all multiplicities = 1");
        if (kind == SignalKind::Polynomial && std::abs(std::abs(nodes[j]) - 1.0) > 1e-12)
            throw std::invalid_argument("polynomial signals require |z_j| = 1");
    }
}

double falling_factorial(long k, int l)
{
    double r = 1.0;
    for (int i = 0; i < l; ++i) r *= static_cast<double>(k - i);
    return r;
}

double int_pow(long k, int l)
{
    if (l == 0) return 1.0;  // covers 0^0 := 1
    return std::pow(static_cast<double>(k), l);
}

cx cx_pow(cx z, long k)
{
    if (k == 0) return cx(1.0, 0.0);
    return std::pow(z, static_cast<double>(k));
}

MeasurementVector forward_polynomial(const PronySignal& sig, const SamplingGrid& grid)
{
    sig.validate();
    grid.validate();
    if (sig.kind == SignalKind::Confluent)
        throw std::invalid_argument("forward_polynomial rejects confluent signals");
    cvec m(grid.n);
    for (int k = 0; k < grid.n; ++k)
    {
        const long s = grid.index(k);
        cx acc(0.0, 0.0);
        for (int j = 0; j < sig.num_nodes(); ++j)
        {
            cx poly(0.0, 0.0);
            for (int l = 0; l < sig.mults[j]; ++l) poly += sig.coeffs[j][l] * int_pow(s, l);
            acc += cx_pow(sig.nodes[j], s) * poly;
        }
        m(k) = acc;
    }
    return {m, grid, 0.0};
}

MeasurementVector forward_confluent(const PronySignal& sig, const SamplingGrid& grid)
{
    sig.validate();
    grid.validate();
    if (sig.kind == SignalKind::Polynomial)
    {
        for (int mj : sig.mults)
            if (mj > 1)
                throw std::invalid_argument("forward_confluent rejects polynomial signals with multiplicities > 1");
    }
    cvec m(grid.n);
    for (int k = 0; k < grid.n; ++k)
    {
        const long s = grid.index(k);
        cx acc(0.0, 0.0);
        for (int j = 0; j < sig.num_nodes(); ++j)
        {
            for (int l = 0; l < sig.mults[j]; ++l)
            {
                const double ff = falling_factorial(s, l);
                if (ff != 0.0) acc += sig.coeffs[j][l] * ff * cx_pow(sig.nodes[j], s - l);
            }
        }
        m(k) = acc;
    }
    return {m, grid, 0.0};
}

MeasurementVector forward(const PronySignal& sig, const SamplingGrid& grid)
{
    return sig.kind == SignalKind::Confluent ? forward_confluent(sig, grid)
                                             : forward_polynomial(sig, grid);
}

cvec forward_values_unchecked(const PronySignal& sig, const SamplingGrid& grid)
{
    const bool conf = sig.kind == SignalKind::Confluent;
    cvec m(grid.n);
    for (int k = 0; k < grid.n; ++k)
    {
        const long s = grid.index(k);
        cx acc(0.0, 0.0);
        for (int j = 0; j < sig.num_nodes(); ++j)
        {
            if (conf)
            {
                for (int l = 0; l < sig.mults[j]; ++l)
                {
                    const double ff = falling_factorial(s, l);
                    if (ff != 0.0) acc += sig.coeffs[j][l] * ff * cx_pow(sig.nodes[j], s - l);
                }
            }
            else
            {
                cx poly(0.0, 0.0);
                for (int l = 0; l < sig.mults[j]; ++l)
                    poly += sig.coeffs[j][l] * int_pow(s, l);
                acc += cx_pow(sig.nodes[j], s) * poly;
            }
        }
        m(k) = acc;
    }
    return m;
}

std::string regularity_failure(const PronySignal& sig, long p)
{
    const int K = sig.num_nodes();
    for (int i = 0; i < K; ++i)
        for (int j = i + 1; j < K; ++j)
            if (std::abs(cx_pow(sig.nodes[i], p) - cx_pow(sig.nodes[j], p)) <= 1e-12)
                return "condition 1: z_j^p values collide";
    for (int j = 0; j < K; ++j)
        if (std::abs(sig.coeffs[j][sig.mults[j] - 1]) <= 1e-12)
            return "condition 2: leading coefficient vanishes";
    return "";
}

bool is_regular_point(const PronySignal& sig, long p)
{
    return regularity_failure(sig, p).empty();
}

PronySignal change_of_variables_nonshifted(const PronySignal& sig, long p)
{
    PronySignal out = sig;
    for (int j = 0; j < sig.num_nodes(); ++j)
    {
        out.nodes[j] = cx_pow(sig.nodes[j], p);
        for (int i = 0; i < sig.mults[j]; ++i)
            out.coeffs[j][i] = sig.coeffs[j][i] * int_pow(p, i);
    }
    return out;
}

PronySignal unscale_coefficients(const PronySignal& sig, long p)
{
    PronySignal out = sig;
    for (int j = 0; j < sig.num_nodes(); ++j)
        for (int i = 0; i < sig.mults[j]; ++i)
            out.coeffs[j][i] = sig.coeffs[j][i] / int_pow(p, i);
    return out;
}

MeasurementVector add_noise(const MeasurementVector& clean, const NoiseSpec& noise)
{
    MeasurementVector out = clean;
    std::mt19937_64 rng(noise.seed);
    if (noise.law == NoiseSpec::Law::UniformBox)
    {
        std::uniform_real_distribution<double> u(-noise.level, noise.level);
        for (int k = 0; k < out.values.size(); ++k)
        {
            const double re = u(rng), im = u(rng);
            out.values(k) += cx(re, im);
        }
        out.noise_bound = noise.level;
    }
    else
    {
        std::normal_distribution<double> g(0.0, noise.level / std::sqrt(2.0));
        for (int k = 0; k < out.values.size(); ++k)
        {
            const double re = g(rng), im = g(rng);
            out.values(k) += cx(re, im);
        }
        out.noise_bound = noise.level;
    }
    return out;
}

}  // namespace prony
