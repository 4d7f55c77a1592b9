#ifndef PRONY_STRUCTMAT_HPP
#define PRONY_STRUCTMAT_HPP

#include "prony/types.hpp"

namespace prony {

// Exact small combinatorial tables (64-bit integer recurrences, n <= 20).
std::int64_t binomial(int n, int k);
std::int64_t stirling_second(int n, int k);            // {n k}
std::int64_t stirling_first_unsigned(int n, int k);    // [n k]
std::int64_t stirling_first_signed(int n, int k);      // s(n,k) = (-1)^{n-k} [n k]

// Upper-triangular Stirling matrix S_m: entry (n,i), 1-indexed, is {n-1, i-1};
// its inverse carries the signed first-kind numbers.
cmat stirling_matrix(int m);
cmat stirling_matrix_inverse(int m);

// Unipotent shift matrix Q_{t,r}: entry (m,n), 1-indexed, (-t)^{n-m} binom(n-1, n-m).
cmat shift_matrix_Q(long t, int r);

// T_{x,c} = diag{1, x, ..., x^{c-1}}; x must be nonzero.
cmat power_diag_T(cx x, int c);

// Per-node coefficient blocks of size (l_j+1) x (l_j+1): identity except the
// last column, which carries (0, a_0/z, ..., a_{l_j-1}/z)^T for E_j and
// (0, a_0, ..., a_{l_j-1})^T for D_j.  Closed-form inverses included.
cmat coeff_block_E(cx z, const std::vector<cx>& a);
cmat coeff_block_E_inverse(cx z, const std::vector<cx>& a);
cmat coeff_block_D(const std::vector<cx>& a);
cmat coeff_block_D_inverse(const std::vector<cx>& a);

// Anti-triangular l_j x l_j block: entry (m,n), 1-indexed, is
// binom(m+n-2, m-1) a_{m+n-2}, zero once m+n-2 > l_j-1.
cmat hankel_block_A(const std::vector<cx>& a);

// Shifted decimated Pascal-Vandermonde: row k carries, for node j,
// z_j^{t+kp} [1, (t+kp), ..., (t+kp)^{l_j-1}].  rows < 0 means square (sum l_j).
cmat pascal_vandermonde(const std::vector<cx>& nodes, const std::vector<int>& mults,
                        long t, long p, int rows = -1);

// Shifted decimated confluent Vandermonde: row k carries, for node j,
// [z^s, s z^{s-1}, (s)_2 z^{s-2}, ...] with s = t+kp.
cmat confluent_vandermonde(const std::vector<cx>& nodes, const std::vector<int>& mults,
                           long t, long p, int rows = -1);

// Decimation-normalized variants: row k carries powers of k itself against
// the p-th powers of the nodes (U_p^# and V_p^#).
cmat usharp_vandermonde(const std::vector<cx>& nodes, const std::vector<int>& mults,
                        long p, int rows = -1);
cmat vsharp_vandermonde(const std::vector<cx>& nodes, const std::vector<int>& mults,
                        long p, int rows = -1);

// Block-diagonal assembly from per-node square blocks.
cmat block_diag(const std::vector<cmat>& blocks);

// Max entrywise residual |A - B| / max(1, max|B|).
double rel_residual(const cmat& A, const cmat& B);

struct FactorizationReport {
    double shift_identity;        // U_{t,p} = U_{0,p} diag{z_j^t Q_{t,l_j}^{-1}}
    double decimation_identity;   // U_{0,p} = U_p^# diag{T_{p,l_j}}
    double single_node_identity;  // U_p^#(z,l) = T_{z^{p-1},l} U_{0,1}(z,l), per node
    double pascal_confluent_u;    // U_{t,p} = V_{t,p} diag{T_{z_j,l_j} S_{l_j}}
    double pascal_confluent_us;   // U_p^#  = V_p^#  diag{T_{z_j^p,l_j} S_{l_j}}
    double max() const;
};

FactorizationReport vandermonde_factorizations_check(const std::vector<cx>& nodes,
                                                     const std::vector<int>& mults,
                                                     long t, long p);

struct RowNormResult {
    double exact;   // l1 norm of row u_{j,k} of V_{0,1}^{-1}
    double bound;   // (2/delta)^N (2/k!) (1/2 + N/delta)^{l_j-1-k}
    double cond;    // condition estimate of V_{0,1}
    bool reliable;  // cond <= 1e12
};

RowNormResult inverse_row_norm(const std::vector<cx>& nodes, const std::vector<int>& mults,
                               int j, int k);

struct DerivativeBoundReport {
    std::vector<double> values;  // |h_j^{(k)}(x_j)|, k = 0..kmax
    std::vector<double> bounds;  // N(N+1)...(N+k-1) delta^{-N-k}
    bool ok;                     // every value <= bound
};

// h_j(x) = prod_{i != j} (x - x_i)^{-l_i}; derivatives at x_j via the
// logarithmic-derivative recurrence h' = h * sum(-l_i/(x - x_i)) and Leibnitz.
DerivativeBoundReport h_derivative_bound_check(const std::vector<cx>& nodes,
                                               const std::vector<int>& mults, int j, int kmax);

// Componentwise bound for d = B A_k ... A_1 c with upper-triangular factors,
// m of them strictly diagonal:
// |d_j| <= (n-j+1)^{k-m} max_{i>=j}|c_i| (sum_{i>=j}|b_{j,i}|) prod_l max_{i,r>=j}|a^(l)_{i,r}|
// (1-indexed j).
double chain_product_bound(const cmat& B, const std::vector<cmat>& As, const cvec& c,
                           int j, int num_strictly_diagonal);

struct DataMatrixReport {
    cmat hankel;                  // C x C Hankel of m_{t+(i+j)p}
    double factorization_residual;
};

// Builds the Hankel data matrix from the signal's own forward map and checks
// it against V_{t,p} diag{A_j} V_{0,p}^T (confluent) or the U version (polynomial).
DataMatrixReport data_matrix(const PronySignal& sig, long t, long p);

}  // namespace prony

#endif
