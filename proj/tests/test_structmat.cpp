#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <Eigen/Dense>

#include "prony/model.hpp"
#include "prony/structmat.hpp"

using namespace prony;

namespace {

double identity_residual(const cmat& m)
{
    return (m - cmat::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff();
}

// Second-kind Stirling recurrence oracle {n,k} = k {n-1,k} + {n-1,k-1}.
std::int64_t s2_oracle(int n, int k)
{
    if (n == 0 && k == 0) return 1;
    if (n <= 0 || k <= 0 || k > n) return 0;
    return k * s2_oracle(n - 1, k) + s2_oracle(n - 1, k - 1);
}

}  // namespace

TEST_CASE("stirling matrices")
{
    CHECK(stirling_matrix(1)(0, 0) == cx(1, 0));

    const cmat s3 = stirling_matrix(3);
    for (int n = 0; n < 3; ++n)
        for (int i = 0; i < 3; ++i)
        {
            CHECK(s3(i, n).real() == doctest::Approx(double(s2_oracle(n, i))));
            if (i > n) CHECK(s3(i, n) == cx(0, 0));
        }

    CHECK(identity_residual(stirling_matrix(4) * stirling_matrix_inverse(4)) < 1e-13);
    CHECK(stirling_second(4, 2) == 7);
    CHECK(stirling_first_unsigned(4, 2) == 11);
    CHECK(stirling_first_signed(4, 2) == 11);
    CHECK(stirling_first_signed(4, 3) == -6);
}

TEST_CASE("shift matrix Q")
{
    const long t  = 3;
    const cmat q5 = shift_matrix_Q(t, 5);
    const double td = static_cast<double>(t);
    CHECK(q5(0, 0) == cx(1, 0));
    CHECK(q5(0, 1).real() == doctest::Approx(-td));
    CHECK(q5(0, 2).real() == doctest::Approx(td * td));
    CHECK(q5(0, 3).real() == doctest::Approx(-td * td * td));
    CHECK(q5(0, 4).real() == doctest::Approx(td * td * td * td));
    CHECK(q5(1, 2).real() == doctest::Approx(-2.0 * td));  // entry (2,3), 1-indexed
    for (int i = 0; i < 5; ++i) CHECK(q5(i, i) == cx(1, 0));

    CHECK(identity_residual(shift_matrix_Q(0, 4)) == 0.0);
    CHECK(identity_residual(shift_matrix_Q(t, 4) * shift_matrix_Q(-t, 4)) <= 1e-12);
}

TEST_CASE("power diagonal T")
{
    CHECK(identity_residual(power_diag_T(cx(1, 0), 4)) == 0.0);
    const cmat t23 = power_diag_T(cx(2, 0), 3);
    CHECK(t23(0, 0) == cx(1, 0));
    CHECK(t23(1, 1) == cx(2, 0));
    CHECK(t23(2, 2) == cx(4, 0));
    CHECK_THROWS_AS(power_diag_T(cx(0, 0), 3), std::invalid_argument);

    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 2.0 * M_PI);
    for (int rep = 0; rep < 10; ++rep)
    {
        const cx x = std::polar(1.0, u(rng));
        CHECK(identity_residual(power_diag_T(x, 5) * power_diag_T(1.0 / x, 5)) < 1e-14);
    }
}

TEST_CASE("coefficient blocks E and D")
{
    const cx z(0.8, 0.3);
    const std::vector<cx> a1 = {cx(2, -1)};
    const cmat e1 = coeff_block_E(z, a1);
    CHECK(e1.rows() == 2);
    CHECK(e1(0, 0) == cx(1, 0));
    CHECK(e1(0, 1) == cx(0, 0));
    CHECK(e1(1, 0) == cx(0, 0));
    CHECK(std::abs(e1(1, 1) - a1[0] / z) < 1e-15);

    const std::vector<cx> a3 = {cx(1, 1), cx(-2, 0), cx(0.5, -0.5)};
    const cmat d3 = coeff_block_D(a3);
    CHECK(d3.rows() == 4);
    CHECK(d3(0, 3) == cx(0, 0));
    for (int i = 0; i < 3; ++i)
    {
        CHECK(std::abs(d3(i + 1, 3) - a3[i]) < 1e-15);
        CHECK(d3(i, i) == cx(1, 0));
    }

    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int rep = 0; rep < 20; ++rep)
    {
        std::vector<cx> a;
        const int lj = 1 + static_cast<int>(rng() % 3);
        for (int l = 0; l < lj; ++l) a.emplace_back(u(rng), u(rng));
        while (std::abs(a.back()) < 0.1) a.back() = cx(u(rng), u(rng));
        const cx zz(0.5 + 0.5 * std::abs(u(rng)), u(rng));
        CHECK(identity_residual(coeff_block_E(zz, a) * coeff_block_E_inverse(zz, a)) <= 1e-12);
        CHECK(identity_residual(coeff_block_D(a) * coeff_block_D_inverse(a)) <= 1e-12);
    }
}

TEST_CASE("hankel block A")
{
    CHECK(hankel_block_A({cx(3, -2)})(0, 0) == cx(3, -2));

    const std::vector<cx> a2 = {cx(1, 2), cx(3, 4)};
    const cmat b2 = hankel_block_A(a2);
    CHECK(std::abs(b2(0, 0) - a2[0]) < 1e-15);
    CHECK(std::abs(b2(0, 1) - a2[1]) < 1e-15);
    CHECK(std::abs(b2(1, 0) - a2[1]) < 1e-15);
    CHECK(b2(1, 1) == cx(0, 0));

    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int lj = 1; lj <= 4; ++lj)
    {
        std::vector<cx> a;
        for (int l = 0; l < lj; ++l) a.emplace_back(u(rng), u(rng));
        a.back() = cx(0.7, -0.3);
        CHECK(std::abs(hankel_block_A(a).determinant()) > 1e-10);
        a.back() = cx(0, 0);
        CHECK(std::abs(hankel_block_A(a).determinant()) < 1e-12);
    }
}

TEST_CASE("vandermonde constructors")
{
    const cmat v = pascal_vandermonde({cx(1, 0), cx(-1, 0)}, {1, 1}, 0, 1);
    CHECK(std::abs(v(0, 0) - cx(1, 0)) < 1e-15);
    CHECK(std::abs(v(0, 1) - cx(1, 0)) < 1e-15);
    CHECK(std::abs(v(1, 0) - cx(1, 0)) < 1e-15);
    CHECK(std::abs(v(1, 1) - cx(-1, 0)) < 1e-15);

    const cx z(0.6, 0.4);
    const cmat c = confluent_vandermonde({z}, {2}, 0, 1);
    CHECK(std::abs(c(0, 0) - cx(1, 0)) < 1e-15);
    CHECK(std::abs(c(0, 1) - cx(0, 0)) < 1e-15);
    CHECK(std::abs(c(1, 0) - z) < 1e-15);
    CHECK(std::abs(c(1, 1) - cx(1, 0)) < 1e-15);

    // Per-entry scalar formula oracle at t=1, p=2.
    const std::vector<cx> nodes = {cx(0.9, 0.1), cx(-0.4, 0.6)};
    const std::vector<int> mults = {2, 1};
    const cmat up = pascal_vandermonde(nodes, mults, 1, 2);
    const cmat vp = confluent_vandermonde(nodes, mults, 1, 2);
    for (int k = 0; k < 3; ++k)
    {
        const long s = 1 + 2L * k;
        CHECK(std::abs(up(k, 0) - cx_pow(nodes[0], s)) < 1e-13);
        CHECK(std::abs(up(k, 1) - cx_pow(nodes[0], s) * double(s)) < 1e-13);
        CHECK(std::abs(up(k, 2) - cx_pow(nodes[1], s)) < 1e-13);
        CHECK(std::abs(vp(k, 0) - cx_pow(nodes[0], s)) < 1e-13);
        CHECK(std::abs(vp(k, 1) - double(s) * cx_pow(nodes[0], s - 1)) < 1e-13);
        CHECK(std::abs(vp(k, 2) - cx_pow(nodes[1], s)) < 1e-13);
    }
}

TEST_CASE("vandermonde factorization identities")
{
    const std::vector<cx> nodes = {cx(0.9, 0.1), std::polar(0.8, 2.1), std::polar(1.0, 4.0)};
    const std::vector<int> mults = {2, 1, 3};

    const auto trivial_t = vandermonde_factorizations_check(nodes, mults, 0, 3);
    CHECK(trivial_t.shift_identity <= 1e-13);
    const auto trivial_p = vandermonde_factorizations_check(nodes, mults, 0, 1);
    CHECK(trivial_p.decimation_identity <= 1e-13);

    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int rep = 0; rep < 30; ++rep)
    {
        std::vector<cx> zs;
        std::vector<int> ls;
        const int K = 1 + static_cast<int>(rng() % 3);
        for (int j = 0; j < K; ++j)
        {
            zs.push_back(std::polar(0.5 + 0.5 * u(rng), 2.0 * M_PI * u(rng)));
            ls.push_back(1 + static_cast<int>(rng() % 3));
        }
        const long t = static_cast<long>(rng() % 21);
        const long p = 1 + static_cast<long>(rng() % 50);
        CHECK(vandermonde_factorizations_check(zs, ls, t, p).max() <= 1e-11);
    }
}

TEST_CASE("inverse vandermonde row norms against the closed-form bound")
{
    const auto pm = inverse_row_norm({cx(1, 0), cx(-1, 0)}, {1, 1}, 0, 0);
    CHECK(pm.exact == doctest::Approx(1.0));
    CHECK(pm.bound == doctest::Approx(2.0));
    CHECK(pm.reliable);

    const auto single = inverse_row_norm({cx(0.5, 0.5)}, {1}, 0, 0);
    CHECK(single.exact == doctest::Approx(1.0));
    CHECK(single.exact <= single.bound);

    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(0.0, 2.0 * M_PI);
    for (int rep = 0; rep < 20; ++rep)
    {
        std::vector<cx> zs;
        for (int j = 0; j < 6; ++j) zs.push_back(std::polar(1.0, u(rng)));
        double delta = 1e9;
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j) delta = std::min(delta, std::abs(zs[i] - zs[j]));
        if (delta < 0.5) continue;
        const std::vector<int> ls(6, 1);
        for (int j = 0; j < 6; ++j)
        {
            const auto r = inverse_row_norm(zs, ls, j, 0);
            if (!r.reliable) continue;
            CHECK(r.exact <= r.bound * (1 + 1e-12));
        }
    }
}

TEST_CASE("derivative bounds for the partial-fraction function h_j")
{
    const auto pm = h_derivative_bound_check({cx(1, 0), cx(-1, 0)}, {1, 1}, 0, 1);
    CHECK(pm.values[1] == doctest::Approx(0.25));  // |h_1'(1)| for h_1(x) = 1/(x+1)
    CHECK(pm.bounds[1] == doctest::Approx(0.25));  // N delta^{-N-1} = 1 * 2^{-2}
    CHECK(pm.ok);

    std::mt19937_64 rng(37);
    std::uniform_real_distribution<double> u(0.0, 2.0 * M_PI);
    for (int rep = 0; rep < 40; ++rep)
    {
        std::vector<cx> zs;
        std::vector<int> ls;
        const int K = 2 + static_cast<int>(rng() % 2);
        for (int j = 0; j < K; ++j)
        {
            zs.push_back(std::polar(1.0, u(rng)));
            ls.push_back(1 + static_cast<int>(rng() % 3));
        }
        double delta = 1e9;
        for (int i = 0; i < K; ++i)
            for (int j = i + 1; j < K; ++j) delta = std::min(delta, std::abs(zs[i] - zs[j]));
        if (delta < 0.3 || delta > 1.0) continue;
        for (int j = 0; j < K; ++j)
        {
            const auto rep5 = h_derivative_bound_check(zs, ls, j, 5);
            CHECK(rep5.ok);
            // k = 0 case: |h_j(x_j)| <= delta^{-N}.
            int N = 0;
            for (int i = 0; i < K; ++i)
                if (i != j) N += ls[i];
            CHECK(rep5.values[0] <= std::pow(delta, -N) * (1 + 1e-12));
        }
    }
}

TEST_CASE("upper-triangular chain product bound")
{
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int rep = 0; rep < 200; ++rep)
    {
        const int n = 2 + static_cast<int>(rng() % 5);
        const int k = 1 + static_cast<int>(rng() % 4);
        const int m = static_cast<int>(rng() % (k + 1));
        auto random_ut = [&](bool strict) {
            cmat a = cmat::Zero(n, n);
            for (int i = 0; i < n; ++i)
                for (int c = i + (strict ? 1 : 0); c < n; ++c) a(i, c) = cx(u(rng), u(rng));
            return a;
        };
        std::vector<cmat> as;
        for (int l = 0; l < k; ++l) as.push_back(random_ut(l < m));
        const cmat b = random_ut(false);
        cvec c(n);
        for (int i = 0; i < n; ++i) c(i) = cx(u(rng), u(rng));

        cvec d = c;
        for (const auto& a : as) d = a * d;
        d = b * d;
        for (int j = 1; j <= n; ++j)
            CHECK(std::abs(d(j - 1)) <= chain_product_bound(b, as, c, j, m) * (1 + 1e-12));
    }
}

TEST_CASE("hankel data matrix and its factorization")
{
    PronySignal one;
    one.kind   = SignalKind::Basic;
    one.nodes  = {cx(1, 0)};
    one.mults  = {1};
    one.coeffs = {{cx(1, 0)}};
    const auto d1 = data_matrix(one, 0, 1);
    CHECK(d1.hankel.rows() == 1);
    CHECK(std::abs(d1.hankel(0, 0) - cx(1, 0)) < 1e-15);
    CHECK(d1.factorization_residual <= 1e-12);

    PronySignal two;
    two.kind   = SignalKind::Basic;
    two.nodes  = {cx(0.9, 0), cx(-0.8, 0)};
    two.mults  = {1, 1};
    two.coeffs = {{cx(2, 0)}, {cx(3, 0)}};
    const auto d2 = data_matrix(two, 0, 1);
    const Eigen::JacobiSVD<cmat> svd(d2.hankel);
    const auto& sv = svd.singularValues();
    CHECK(sv(sv.size() - 1) > 1e-10 * sv(0));  // numerical rank = C

    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int rep = 0; rep < 20; ++rep)
    {
        PronySignal sig;
        sig.kind = SignalKind::Confluent;
        const int K = 1 + static_cast<int>(rng() % 2);
        for (int j = 0; j < K; ++j)
        {
            sig.nodes.push_back(std::polar(0.5 + 0.5 * u(rng), 2.0 * M_PI * u(rng)));
            const int lj = 1 + static_cast<int>(rng() % 3);
            sig.mults.push_back(lj);
            std::vector<cx> a;
            for (int l = 0; l < lj; ++l) a.emplace_back(u(rng) - 0.5, u(rng) - 0.5);
            a.back() += cx(1.0, 0.0);
            sig.coeffs.push_back(a);
        }
        const long t = static_cast<long>(rng() % 10);
        const long p = 1 + static_cast<long>(rng() % 10);
        CHECK(data_matrix(sig, t, p).factorization_residual <= 1e-10);
    }
}
