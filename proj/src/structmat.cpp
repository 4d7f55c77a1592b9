#include "prony/structmat.hpp"

#include <cmath>

#include <Eigen/Dense>

#include "prony/model.hpp"

namespace prony {

namespace {

constexpr int kMaxTable = 21;

struct Tables {
    std::int64_t binom[kMaxTable][kMaxTable]   = {};
    std::int64_t s2[kMaxTable][kMaxTable]      = {};
    std::int64_t s1u[kMaxTable][kMaxTable]     = {};

    Tables()
    {
        for (int n = 0; n < kMaxTable; ++n)
        {
            binom[n][0] = 1;
            for (int k = 1; k <= n; ++k)
                binom[n][k] = binom[n - 1][k - 1] + (k < n ? binom[n - 1][k] : 0);
        }
        s2[0][0]  = 1;
        s1u[0][0] = 1;
        for (int n = 1; n < kMaxTable; ++n)
            for (int k = 1; k <= n; ++k)
            {
                s2[n][k]  = k * s2[n - 1][k] + s2[n - 1][k - 1];
                s1u[n][k] = (n - 1) * s1u[n - 1][k] + s1u[n - 1][k - 1];
            }
    }
};

const Tables& tables()
{
    static const Tables t;
    return t;
}

void check_table_range(int n, int k)
{
    if (n < 0 || n >= kMaxTable || k < 0 || k >= kMaxTable)
        throw std::invalid_argument("combinatorial table supports 0 <= n,k <= 20");
}

}  // namespace

std::int64_t binomial(int n, int k)
{
    if (k < 0 || k > n) return 0;
    check_table_range(n, k);
    return tables().binom[n][k];
}

std::int64_t stirling_second(int n, int k)
{
    if (k < 0 || k > n) return 0;
    check_table_range(n, k);
    return tables().s2[n][k];
}

std::int64_t stirling_first_unsigned(int n, int k)
{
    if (k < 0 || k > n) return 0;
    check_table_range(n, k);
    return tables().s1u[n][k];
}

std::int64_t stirling_first_signed(int n, int k)
{
    const std::int64_t u = stirling_first_unsigned(n, k);
    return ((n - k) % 2 == 0) ? u : -u;
}

cmat stirling_matrix(int m)
{
    if (m < 1) throw std::invalid_argument("stirling_matrix requires m >= 1");
    cmat S = cmat::Zero(m, m);
    for (int n = 0; n < m; ++n)
        for (int i = 0; i <= n; ++i)
            S(i, n) = static_cast<double>(stirling_second(n, i));
    return S;
}

cmat stirling_matrix_inverse(int m)
{
    if (m < 1) throw std::invalid_argument("stirling_matrix_inverse requires m >= 1");
    cmat S = cmat::Zero(m, m);
    for (int n = 0; n < m; ++n)
        for (int i = 0; i <= n; ++i)
            S(i, n) = static_cast<double>(stirling_first_signed(n, i));
    return S;
}

cmat shift_matrix_Q(long t, int r)
{
    if (r < 1) throw std::invalid_argument("shift_matrix_Q requires r >= 1");
    cmat Q = cmat::Zero(r, r);
    for (int m = 1; m <= r; ++m)
        for (int n = m; n <= r; ++n)
            Q(m - 1, n - 1) = std::pow(static_cast<double>(-t), n - m) *
                              static_cast<double>(binomial(n - 1, n - m));
    return Q;
}

cmat power_diag_T(cx x, int c)
{
    if (c < 1) throw std::invalid_argument("power_diag_T requires c >= 1");
    if (x == cx(0.0, 0.0)) throw std::invalid_argument("power_diag_T requires x != 0");
    cmat T = cmat::Zero(c, c);
    cx v(1.0, 0.0);
    for (int i = 0; i < c; ++i)
    {
        T(i, i) = v;
        v *= x;
    }
    return T;
}

namespace {

cmat last_column_block(const std::vector<cx>& col)
{
    const int n = static_cast<int>(col.size());
    cmat M      = cmat::Identity(n, n);
    for (int i = 0; i < n; ++i) M(i, n - 1) = col[i];
    return M;
}

}  // namespace

cmat coeff_block_E(cx z, const std::vector<cx>& a)
{
    if (z == cx(0.0, 0.0)) throw std::invalid_argument("coeff_block_E requires z != 0");
    std::vector<cx> col(a.size() + 1, cx(0.0, 0.0));
    for (std::size_t i = 0; i < a.size(); ++i) col[i + 1] = a[i] / z;
    return last_column_block(col);
}

cmat coeff_block_E_inverse(cx z, const std::vector<cx>& a)
{
    const cx lead = a.back();
    if (std::abs(lead) == 0.0)
        throw std::invalid_argument("coeff block is singular: leading coefficient is zero");
    std::vector<cx> col(a.size() + 1, cx(0.0, 0.0));
    for (std::size_t i = 0; i + 1 < a.size(); ++i) col[i + 1] = -a[i] / lead;
    col.back() = z / lead;
    return last_column_block(col);
}

cmat coeff_block_D(const std::vector<cx>& a)
{
    std::vector<cx> col(a.size() + 1, cx(0.0, 0.0));
    for (std::size_t i = 0; i < a.size(); ++i) col[i + 1] = a[i];
    return last_column_block(col);
}

cmat coeff_block_D_inverse(const std::vector<cx>& a)
{
    const cx lead = a.back();
    if (std::abs(lead) == 0.0)
        throw std::invalid_argument("coeff block is singular: leading coefficient is zero");
    std::vector<cx> col(a.size() + 1, cx(0.0, 0.0));
    for (std::size_t i = 0; i + 1 < a.size(); ++i) col[i + 1] = -a[i] / lead;
    col.back() = cx(1.0, 0.0) / lead;
    return last_column_block(col);
}

cmat hankel_block_A(const std::vector<cx>& a)
{
    const int l = static_cast<int>(a.size());
    cmat A      = cmat::Zero(l, l);
    for (int m = 1; m <= l; ++m)
        for (int n = 1; n <= l; ++n)
        {
            const int idx = m + n - 2;
            if (idx <= l - 1)
                A(m - 1, n - 1) = static_cast<double>(binomial(idx, m - 1)) * a[idx];
        }
    return A;
}

namespace {

int total_order(const std::vector<int>& mults)
{
    int c = 0;
    for (int m : mults) c += m;
    return c;
}

}  // namespace

cmat pascal_vandermonde(const std::vector<cx>& nodes, const std::vector<int>& mults,
                        long t, long p, int rows)
{
    const int C = total_order(mults);
    const int R = rows < 0 ? C : rows;
    cmat U      = cmat::Zero(R, C);
    for (int k = 0; k < R; ++k)
    {
        const long s = t + static_cast<long>(k) * p;
        int col      = 0;
        for (std::size_t j = 0; j < nodes.size(); ++j)
        {
            const cx zs = cx_pow(nodes[j], s);
            for (int l = 0; l < mults[j]; ++l) U(k, col++) = zs * int_pow(s, l);
        }
    }
    return U;
}

cmat confluent_vandermonde(const std::vector<cx>& nodes, const std::vector<int>& mults,
                           long t, long p, int rows)
{
    const int C = total_order(mults);
    const int R = rows < 0 ? C : rows;
    cmat V      = cmat::Zero(R, C);
    for (int k = 0; k < R; ++k)
    {
        const long s = t + static_cast<long>(k) * p;
        int col      = 0;
        for (std::size_t j = 0; j < nodes.size(); ++j)
            for (int l = 0; l < mults[j]; ++l)
            {
                const double ff = falling_factorial(s, l);
                V(k, col++)     = ff != 0.0 ? ff * cx_pow(nodes[j], s - l) : cx(0.0, 0.0);
            }
    }
    return V;
}

cmat usharp_vandermonde(const std::vector<cx>& nodes, const std::vector<int>& mults,
                        long p, int rows)
{
    std::vector<cx> w(nodes.size());
    for (std::size_t j = 0; j < nodes.size(); ++j) w[j] = cx_pow(nodes[j], p);
    return pascal_vandermonde(w, mults, 0, 1, rows);
}

cmat vsharp_vandermonde(const std::vector<cx>& nodes, const std::vector<int>& mults,
                        long p, int rows)
{
    std::vector<cx> w(nodes.size());
    for (std::size_t j = 0; j < nodes.size(); ++j) w[j] = cx_pow(nodes[j], p);
    return confluent_vandermonde(w, mults, 0, 1, rows);
}

cmat block_diag(const std::vector<cmat>& blocks)
{
    int n = 0;
    for (const auto& b : blocks) n += static_cast<int>(b.rows());
    cmat M  = cmat::Zero(n, n);
    int off = 0;
    for (const auto& b : blocks)
    {
        const int s = static_cast<int>(b.rows());
        M.block(off, off, s, s) = b;
        off += s;
    }
    return M;
}

double rel_residual(const cmat& A, const cmat& B)
{
    const double scale = std::max(1.0, B.cwiseAbs().maxCoeff());
    return (A - B).cwiseAbs().maxCoeff() / scale;
}

double FactorizationReport::max() const
{
    double m = shift_identity;
    m        = std::fmax(m, decimation_identity);
    m        = std::fmax(m, single_node_identity);
    m        = std::fmax(m, pascal_confluent_u);
    return std::fmax(m, pascal_confluent_us);
}

FactorizationReport vandermonde_factorizations_check(const std::vector<cx>& nodes,
                                                     const std::vector<int>& mults,
                                                     long t, long p)
{
    FactorizationReport rep{};
    const cmat Utp = pascal_vandermonde(nodes, mults, t, p);
    const cmat U0p = pascal_vandermonde(nodes, mults, 0, p);
    const cmat Us  = usharp_vandermonde(nodes, mults, p);
    const cmat Vtp = confluent_vandermonde(nodes, mults, t, p);
    const cmat Vs  = vsharp_vandermonde(nodes, mults, p);

    std::vector<cmat> shift_blocks, dec_blocks, ps_u_blocks, ps_us_blocks;
    for (std::size_t j = 0; j < nodes.size(); ++j)
    {
        const int l = mults[j];
        // Q_{t,r}^{-1} has the (+t) entries, i.e. Q_{-t,r}.
        shift_blocks.push_back(cx_pow(nodes[j], t) * shift_matrix_Q(-t, l));
        dec_blocks.push_back(power_diag_T(cx(static_cast<double>(p), 0.0), l));
        ps_u_blocks.push_back(power_diag_T(nodes[j], l) * stirling_matrix(l));
        ps_us_blocks.push_back(power_diag_T(cx_pow(nodes[j], p), l) * stirling_matrix(l));
    }
    rep.shift_identity      = rel_residual(U0p * block_diag(shift_blocks), Utp);
    rep.decimation_identity = rel_residual(Us * block_diag(dec_blocks), U0p);
    rep.pascal_confluent_u  = rel_residual(Vtp * block_diag(ps_u_blocks), Utp);
    rep.pascal_confluent_us = rel_residual(Vs * block_diag(ps_us_blocks), Us);

    rep.single_node_identity = 0.0;
    for (std::size_t j = 0; j < nodes.size(); ++j)
    {
        const int l              = mults[j];
        const std::vector<cx> zn = {nodes[j]};
        const std::vector<int> ml = {l};
        const cmat lhs = usharp_vandermonde(zn, ml, p);
        const cmat rhs = power_diag_T(cx_pow(nodes[j], p - 1), l) * pascal_vandermonde(zn, ml, 0, 1);
        rep.single_node_identity = std::fmax(rep.single_node_identity, rel_residual(rhs, lhs));
    }
    return rep;
}

RowNormResult inverse_row_norm(const std::vector<cx>& nodes, const std::vector<int>& mults,
                               int j, int k)
{
    const int N = total_order(mults);
    const cmat V = confluent_vandermonde(nodes, mults, 0, 1);

    Eigen::JacobiSVD<cmat> svd(V);
    const double cond = svd.singularValues()(0) / svd.singularValues()(N - 1);

    const cmat Vi = V.partialPivLu().inverse();
    int row       = 0;
    for (int i = 0; i < j; ++i) row += mults[i];
    row += k;
    const double exact = Vi.row(row).cwiseAbs().sum();

    double sep_pow = 1.0, half = std::pow(0.5, mults[j] - 1 - k);
    if (nodes.size() > 1)
    {
        double delta = std::numeric_limits<double>::infinity();
        for (std::size_t a = 0; a < nodes.size(); ++a)
            for (std::size_t b = a + 1; b < nodes.size(); ++b)
                delta = std::fmin(delta, std::abs(nodes[a] - nodes[b]));
        sep_pow = std::pow(2.0 / delta, N);
        half    = std::pow(0.5 + N / delta, mults[j] - 1 - k);
    }
    double fact = 1.0;
    for (int i = 2; i <= k; ++i) fact *= i;
    const double bound = sep_pow * (2.0 / fact) * half;
    return {exact, bound, cond, cond <= 1e12};
}

DerivativeBoundReport h_derivative_bound_check(const std::vector<cx>& nodes,
                                               const std::vector<int>& mults, int j, int kmax)
{
    // N is the degree of the denominator of h_j, i.e. the multiplicities of
    // all nodes other than x_j itself.
    const int N  = total_order(mults) - mults[j];
    const cx xj  = nodes[j];
    double delta = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < nodes.size(); ++a)
        for (std::size_t b = a + 1; b < nodes.size(); ++b)
            delta = std::fmin(delta, std::abs(nodes[a] - nodes[b]));

    // g = (log h)', so h^{(k+1)} = sum_r binom(k,r) h^{(r)} g^{(k-r)} by Leibnitz.
    std::vector<cx> g(kmax + 1, cx(0.0, 0.0));
    for (std::size_t i = 0; i < nodes.size(); ++i)
    {
        if (static_cast<int>(i) == j) continue;
        const cx d = xj - nodes[i];
        double fm  = 1.0;
        for (int m = 0; m <= kmax; ++m)
        {
            const double sign = (m % 2 == 0) ? 1.0 : -1.0;
            g[m] += -static_cast<double>(mults[i]) * sign * fm / cx_pow(d, m + 1);
            fm *= (m + 1);
        }
    }
    std::vector<cx> h(kmax + 1, cx(0.0, 0.0));
    h[0] = cx(1.0, 0.0);
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (static_cast<int>(i) != j) h[0] /= cx_pow(xj - nodes[i], mults[i]);
    for (int k = 0; k < kmax; ++k)
    {
        cx acc(0.0, 0.0);
        for (int r = 0; r <= k; ++r)
            acc += static_cast<double>(binomial(k, r)) * h[r] * g[k - r];
        h[k + 1] = acc;
    }

    DerivativeBoundReport rep;
    rep.ok = true;
    double rising = 1.0;
    for (int k = 0; k <= kmax; ++k)
    {
        const double b = rising * std::pow(delta, -static_cast<double>(N + k));
        rep.values.push_back(std::abs(h[k]));
        rep.bounds.push_back(b);
        if (std::abs(h[k]) > b * (1.0 + 1e-12)) rep.ok = false;
        rising *= (N + k);
    }
    return rep;
}

double chain_product_bound(const cmat& B, const std::vector<cmat>& As, const cvec& c,
                           int j, int num_strictly_diagonal)
{
    const int n   = static_cast<int>(B.rows());
    const int row = j - 1;
    double cmax   = 0.0;
    for (int i = row; i < n; ++i) cmax = std::fmax(cmax, std::abs(c(i)));
    double bsum = 0.0;
    for (int i = row; i < n; ++i) bsum += std::abs(B(row, i));
    double prod = 1.0;
    for (const auto& A : As)
    {
        double amax = 0.0;
        for (int i = row; i < n; ++i)
            for (int r = row; r < n; ++r) amax = std::fmax(amax, std::abs(A(i, r)));
        prod *= amax;
    }
    const int k = static_cast<int>(As.size());
    return std::pow(static_cast<double>(n - j + 1), k - num_strictly_diagonal) * cmax * bsum * prod;
}

DataMatrixReport data_matrix(const PronySignal& sig, long t, long p)
{
    const int C = sig.order_C();
    SamplingGrid grid{t, p, 2 * C - 1};
    const bool conf = sig.kind == SignalKind::Confluent;
    const cvec m    = (conf ? forward_confluent(sig, grid) : forward_polynomial(sig, grid)).values;

    DataMatrixReport rep;
    rep.hankel = cmat::Zero(C, C);
    for (int i = 0; i < C; ++i)
        for (int j = 0; j < C; ++j) rep.hankel(i, j) = m(i + j);

    std::vector<cmat> blocks;
    for (int j = 0; j < sig.num_nodes(); ++j) blocks.push_back(hankel_block_A(sig.coeffs[j]));
    const cmat A = block_diag(blocks);
    cmat left, right;
    if (conf)
    {
        left  = confluent_vandermonde(sig.nodes, sig.mults, t, p);
        right = confluent_vandermonde(sig.nodes, sig.mults, 0, p);
    }
    else
    {
        left  = pascal_vandermonde(sig.nodes, sig.mults, t, p);
        right = pascal_vandermonde(sig.nodes, sig.mults, 0, p);
    }
    rep.factorization_residual = rel_residual(left * A * right.transpose(), rep.hankel);
    return rep;
}

}  // namespace prony
