#ifndef PRONY_MODEL_HPP
#define PRONY_MODEL_HPP

#include "prony/types.hpp"

namespace prony {

// Falling factorial (k)_l = k(k-1)...(k-l+1), (k)_0 = 1.
double falling_factorial(long k, int l);

// Integer power with the 0^0 = 1 convention used by the polynomial map.
double int_pow(long k, int l);
cx cx_pow(cx z, long k);

// m_k = sum_j z_j^k sum_l a_{l,j} k^l, sampled on the grid.
MeasurementVector forward_polynomial(const PronySignal& sig, const SamplingGrid& grid);

// m_k = sum_j sum_l a_{l,j} (k)_l z_j^{k-l}, sampled on the grid.
MeasurementVector forward_confluent(const PronySignal& sig, const SamplingGrid& grid);

// Dispatch on sig.kind (Basic goes through the polynomial map; the two
// coincide when every l_j = 1).
MeasurementVector forward(const PronySignal& sig, const SamplingGrid& grid);

// Evaluation without kind validation, for iterates and finite-difference
// probes whose polynomial-kind nodes drift off the unit circle.  Basic and
// Polynomial kinds use the polynomial map, Confluent the confluent map.
cvec forward_values_unchecked(const PronySignal& sig, const SamplingGrid& grid);

// Both conditions for the Jacobian to be invertible at step p:
// z_j^p distinct and leading coefficients nonzero (tolerance 1e-12).
bool is_regular_point(const PronySignal& sig, long p);

// Names the violated condition, or returns an empty string when regular.
std::string regularity_failure(const PronySignal& sig, long p);

// For t = 0 decimation by p: w_j = z_j^p, b_{i,j} = a_{i,j} p^i, so that
// sampling the new signal at step 1 equals sampling the original at step p.
PronySignal change_of_variables_nonshifted(const PronySignal& sig, long p);

// Inverse of the coefficient scaling above: a_{i,j} = b_{i,j} / p^i.
// (Nodes are handled separately by the p-th root selection.)
PronySignal unscale_coefficients(const PronySignal& sig, long p);

// Adds noise to the samples; UniformBox draws re and im independently uniform on
// [-eps, eps], ComplexGaussian draws each part N(0, sigma^2/2).
MeasurementVector add_noise(const MeasurementVector& clean, const NoiseSpec& noise);

}  // namespace prony

#endif
