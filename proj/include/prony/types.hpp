#ifndef PRONY_TYPES_HPP
#define PRONY_TYPES_HPP

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace prony {

using cx   = std::complex<double>;
using cvec = Eigen::VectorXcd;
using cmat = Eigen::MatrixXcd;
using rvec = Eigen::VectorXd;
using rmat = Eigen::MatrixXd;

enum class SignalKind { Basic, Polynomial, Confluent };

std::string to_string(SignalKind k);
SignalKind kind_from_string(const std::string& s);

// Exponential-sum model: K nodes z_j, multiplicities l_j, and a ragged
// coefficient table a_{l,j}, 0 <= l <= l_j-1.  Parameters are ordered
// blockwise (a_{0,j},...,a_{l_j-1,j}, z_j) throughout.
struct PronySignal {
    std::vector<cx> nodes;
    std::vector<int> mults;
    std::vector<std::vector<cx>> coeffs;
    SignalKind kind = SignalKind::Basic;

    int num_nodes() const { return static_cast<int>(nodes.size()); }
    int order_C() const
    {
        int c = 0;
        for (int m : mults) c += m;
        return c;
    }
    int order_R() const { return order_C() + num_nodes(); }

    // Throws std::invalid_argument when a structural invariant fails.
    void validate() const;
};

// Arithmetic-progression sampling set {t, t+p, ..., t+(n-1)p}.
struct SamplingGrid {
    long t = 0;
    long p = 1;
    int n  = 1;

    long index(int k) const { return t + static_cast<long>(k) * p; }
    void validate() const
    {
        if (t < 0 || p < 1 || n < 1)
            throw std::invalid_argument("sampling grid requires t >= 0, p >= 1, n >= 1");
    }
};

struct MeasurementVector {
    cvec values;
    SamplingGrid grid;
    double noise_bound = 0.0;
};

struct NoiseSpec {
    enum class Law { UniformBox, ComplexGaussian };
    Law law      = Law::UniformBox;
    double level = 0.0;  // eps for UniformBox, sigma for ComplexGaussian
    std::uint64_t seed = 0;
};

// Dense matrix tagged with the recipe that produced it.
struct StructuredMatrix {
    cmat data;
    std::string recipe;
};

}  // namespace prony

#endif
