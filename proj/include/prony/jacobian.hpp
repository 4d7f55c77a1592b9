#ifndef PRONY_JACOBIAN_HPP
#define PRONY_JACOBIAN_HPP

#include "prony/types.hpp"

namespace prony {

// All Jacobians are taken with respect to the blockwise parameter vector
// (a_{0,j}, ..., a_{l_j-1,j}, z_j) per node, as complex (holomorphic) derivatives.
struct JacobianBundle {
    cmat direct;      // closed-form partial derivatives
    cmat factorized;  // Vandermonde-times-block-diagonal assembly
    cmat fd;          // central finite differences on re/im parts
};

// Closed-form Jacobian of the chosen forward map on the grid (rows = grid.n).
cmat jacobian_direct(const PronySignal& sig, const SamplingGrid& grid);

// Factorized assembly; route selects among the three equivalent factorizations
// (1: shifted Vandermonde times coefficient blocks, 2: through the shift/
// decimation identities, 3: fully reduced to the p-th power nodes).
cmat jacobian_factorized(const PronySignal& sig, const SamplingGrid& grid, int route = 1);

// Central finite differences, step 1e-6 * max(1, |param|) on re and im parts.
cmat jacobian_fd(const PronySignal& sig, const SamplingGrid& grid);

JacobianBundle jacobian_polynomial(const PronySignal& sig, const SamplingGrid& grid);
JacobianBundle jacobian_confluent(const PronySignal& sig, const SamplingGrid& grid);

struct InverseRowReport {
    std::vector<double> row_norms;  // l1 norm of each row of J^{-1}
    double cond;
    bool ok;  // cond <= 1e12
};

// Square grid (n = R) required.  The l1 row norms realize the supremum of
// |[J^{-1} delta]_r| over the componentwise complex noise ball |delta_k| <= 1.
InverseRowReport inverse_jacobian_rows(const PronySignal& sig, const SamplingGrid& grid);

// Exact first-order accuracy per parameter: eps * row norm of J^{-1}.
std::vector<double> acc_loc_exact(const PronySignal& sig, const SamplingGrid& grid, double eps);

}  // namespace prony

#endif
