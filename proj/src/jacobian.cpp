#include "prony/jacobian.hpp"

#include <cmath>

#include <Eigen/Dense>

#include "prony/model.hpp"
#include "prony/structmat.hpp"

namespace prony {

namespace {

bool confluent_map(const PronySignal& sig)
{
    return sig.kind == SignalKind::Confluent;
}

std::vector<cx> flatten_params(const PronySignal& sig)
{
    std::vector<cx> x;
    for (int j = 0; j < sig.num_nodes(); ++j)
    {
        for (const cx& a : sig.coeffs[j]) x.push_back(a);
        x.push_back(sig.nodes[j]);
    }
    return x;
}

PronySignal unflatten_params(const PronySignal& proto, const std::vector<cx>& x)
{
    PronySignal out = proto;
    std::size_t pos = 0;
    for (int j = 0; j < out.num_nodes(); ++j)
    {
        for (int l = 0; l < out.mults[j]; ++l) out.coeffs[j][l] = x[pos++];
        out.nodes[j] = x[pos++];
    }
    return out;
}

cvec forward_values(const PronySignal& sig, const SamplingGrid& grid)
{
    return forward_values_unchecked(sig, grid);
}

}  // namespace

cmat jacobian_direct(const PronySignal& sig, const SamplingGrid& grid)
{
    const bool conf = confluent_map(sig);
    const int R     = sig.order_R();
    cmat J          = cmat::Zero(grid.n, R);
    for (int k = 0; k < grid.n; ++k)
    {
        const long s = grid.index(k);
        int col      = 0;
        for (int j = 0; j < sig.num_nodes(); ++j)
        {
            const cx z  = sig.nodes[j];
            const int l = sig.mults[j];
            cx dz(0.0, 0.0);
            for (int i = 0; i < l; ++i)
            {
                if (conf)
                {
                    const double ff = falling_factorial(s, i);
                    J(k, col++)     = ff != 0.0 ? ff * cx_pow(z, s - i) : cx(0.0, 0.0);
                    const double fg = falling_factorial(s, i + 1);
                    if (fg != 0.0) dz += sig.coeffs[j][i] * fg * cx_pow(z, s - i - 1);
                }
                else
                {
                    J(k, col++) = cx_pow(z, s) * int_pow(s, i);
                    dz += sig.coeffs[j][i] * int_pow(s, i + 1);
                }
            }
            J(k, col++) = conf ? dz : dz * cx_pow(z, s - 1);
        }
    }
    return J;
}

cmat jacobian_factorized(const PronySignal& sig, const SamplingGrid& grid, int route)
{
    const bool conf = confluent_map(sig);
    const long t = grid.t, p = grid.p;
    std::vector<int> aug(sig.mults);
    for (int& m : aug) ++m;

    std::vector<cmat> blocks;
    for (int j = 0; j < sig.num_nodes(); ++j)
    {
        const int l  = aug[j];
        const cx z   = sig.nodes[j];
        const cx zt  = cx_pow(z, t);
        const cx w   = cx_pow(z, p);
        const cmat C = conf ? coeff_block_D(sig.coeffs[j]) : coeff_block_E(z, sig.coeffs[j]);
        cmat block;
        if (route == 1)
        {
            block = C;
        }
        else
        {
            const cmat mid = power_diag_T(cx(static_cast<double>(p), 0.0), l) *
                             shift_matrix_Q(-t, l);  // T_p Q_{t}^{-1}
            const cmat reduce = conf ? stirling_matrix_inverse(l) * power_diag_T(1.0 / z, l) * C
                                     : C;
            if (route == 2)
                block = conf ? reduce
                             : zt * mid * C;
            else
                block = zt * power_diag_T(w, l) * stirling_matrix(l) * mid * reduce;
        }
        blocks.push_back(block);
    }
    cmat V;
    if (route == 1)
        V = conf ? confluent_vandermonde(sig.nodes, aug, t, p, grid.n)
                 : pascal_vandermonde(sig.nodes, aug, t, p, grid.n);
    else if (route == 2)
        V = conf ? pascal_vandermonde(sig.nodes, aug, t, p, grid.n)
                 : usharp_vandermonde(sig.nodes, aug, p, grid.n);
    else
        V = vsharp_vandermonde(sig.nodes, aug, p, grid.n);
    return V * block_diag(blocks);
}

cmat jacobian_fd(const PronySignal& sig, const SamplingGrid& grid)
{
    std::vector<cx> x = flatten_params(sig);
    const int R       = static_cast<int>(x.size());
    cmat J            = cmat::Zero(grid.n, R);
    for (int c = 0; c < R; ++c)
    {
        const double h = 1e-6 * std::max(1.0, std::abs(x[c]));
        auto probe = [&](cx dx) {
            std::vector<cx> xp = x;
            xp[c] += dx;
            return forward_values(unflatten_params(sig, xp), grid);
        };
        const cvec dre = (probe(cx(h, 0.0)) - probe(cx(-h, 0.0))) / (2.0 * h);
        const cvec dim = (probe(cx(0.0, h)) - probe(cx(0.0, -h))) / (2.0 * h);
        // Holomorphic derivative from the two real directions.
        J.col(c) = 0.5 * (dre - cx(0.0, 1.0) * dim);
    }
    return J;
}

namespace {

JacobianBundle bundle(const PronySignal& sig, const SamplingGrid& grid)
{
    return {jacobian_direct(sig, grid), jacobian_factorized(sig, grid, 1),
            jacobian_fd(sig, grid)};
}

}  // namespace

JacobianBundle jacobian_polynomial(const PronySignal& sig, const SamplingGrid& grid)
{
    if (sig.kind == SignalKind::Confluent)
        throw std::invalid_argument("jacobian_polynomial rejects confluent signals");
    return bundle(sig, grid);
}

JacobianBundle jacobian_confluent(const PronySignal& sig, const SamplingGrid& grid)
{
    PronySignal s = sig;
    s.kind        = SignalKind::Confluent;
    return bundle(s, grid);
}

InverseRowReport inverse_jacobian_rows(const PronySignal& sig, const SamplingGrid& grid)
{
    const int R = sig.order_R();
    if (grid.n != R)
        throw std::invalid_argument("inverse_jacobian_rows requires a square grid (n = R)");
    const cmat J = jacobian_direct(sig, grid);
    Eigen::JacobiSVD<cmat> svd(J);
    const double cond = svd.singularValues()(0) / svd.singularValues()(R - 1);
    InverseRowReport rep;
    rep.cond = cond;
    rep.ok   = cond <= 1e12;
    if (!rep.ok) return rep;
    const cmat Ji = J.partialPivLu().inverse();
    for (int r = 0; r < R; ++r) rep.row_norms.push_back(Ji.row(r).cwiseAbs().sum());
    return rep;
}

std::vector<double> acc_loc_exact(const PronySignal& sig, const SamplingGrid& grid, double eps)
{
    InverseRowReport rep = inverse_jacobian_rows(sig, grid);
    if (!rep.ok)
        throw std::runtime_error("jacobian numerically singular (condition > 1e12)");
    std::vector<double> out;
    for (double n : rep.row_norms) out.push_back(eps * n);
    return out;
}

}  // namespace prony
