#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "prony/model.hpp"

using namespace prony;

namespace {

PronySignal make_signal(SignalKind kind, std::vector<cx> nodes, std::vector<int> mults,
                        std::vector<std::vector<cx>> coeffs)
{
    PronySignal s;
    s.kind   = kind;
    s.nodes  = std::move(nodes);
    s.mults  = std::move(mults);
    s.coeffs = std::move(coeffs);
    return s;
}

// Independent scalar-loop oracle for the polynomial map.
cx poly_oracle(const PronySignal& s, long k)
{
    cx m = 0.0;
    for (int j = 0; j < s.num_nodes(); ++j)
    {
        cx inner = 0.0;
        for (int l = 0; l < s.mults[j]; ++l) inner += s.coeffs[j][l] * int_pow(k, l);
        m += cx_pow(s.nodes[j], k) * inner;
    }
    return m;
}

// Independent scalar-loop oracle for the confluent map.
cx conf_oracle(const PronySignal& s, long k)
{
    cx m = 0.0;
    for (int j = 0; j < s.num_nodes(); ++j)
        for (int l = 0; l < s.mults[j]; ++l)
        {
            const double ff = falling_factorial(k, l);
            if (ff != 0.0) m += s.coeffs[j][l] * ff * cx_pow(s.nodes[j], k - l);
        }
    return m;
}

}  // namespace

TEST_CASE("falling factorial and power conventions")
{
    CHECK(falling_factorial(5, 2) == doctest::Approx(20.0));
    CHECK(falling_factorial(3, 0) == doctest::Approx(1.0));
    CHECK(falling_factorial(2, 3) == doctest::Approx(0.0));
    CHECK(int_pow(0, 0) == doctest::Approx(1.0));
    CHECK(int_pow(2, 3) == doctest::Approx(8.0));
}

TEST_CASE("forward_polynomial closed-form cases")
{
    const SamplingGrid g{0, 1, 3};

    const auto constant = make_signal(SignalKind::Polynomial, {cx(1, 0)}, {1}, {{cx(1, 0)}});
    const cvec mc       = forward_polynomial(constant, g).values;
    for (int k = 0; k < 3; ++k) CHECK(std::abs(mc(k) - cx(1, 0)) < 1e-15);

    const auto ramp = make_signal(SignalKind::Polynomial, {cx(1, 0)}, {2},
                                  {{cx(1, 0), cx(1, 0)}});
    const cvec mr   = forward_polynomial(ramp, g).values;
    CHECK(std::abs(mr(0) - cx(1, 0)) < 1e-15);
    CHECK(std::abs(mr(1) - cx(2, 0)) < 1e-15);
    CHECK(std::abs(mr(2) - cx(3, 0)) < 1e-15);
}

TEST_CASE("forward_polynomial matches scalar oracle")
{
    const auto sig = make_signal(SignalKind::Basic, {cx(0.9, 0), cx(-0.8, 0)}, {1, 1},
                                 {{cx(2, 0)}, {cx(3, 0)}});
    const SamplingGrid g{0, 1, 4};
    const cvec m = forward_polynomial(sig, g).values;
    for (int k = 0; k < 4; ++k)
    {
        const cx expect = 2.0 * std::pow(0.9, k) + 3.0 * std::pow(-0.8, k);
        CHECK(std::abs(m(k) - expect) < 1e-13);
        CHECK(std::abs(m(k) - poly_oracle(sig, k)) < 1e-13);
    }
}

TEST_CASE("forward_polynomial rejects confluent kind")
{
    auto sig = make_signal(SignalKind::Confluent, {cx(0.5, 0)}, {2}, {{cx(1, 0), cx(1, 0)}});
    CHECK_THROWS_AS(forward_polynomial(sig, SamplingGrid{0, 1, 3}), std::invalid_argument);
}

TEST_CASE("forward_confluent closed-form and oracle cases")
{
    const auto z1 = make_signal(SignalKind::Confluent, {cx(1, 0)}, {2}, {{cx(1, 0), cx(1, 0)}});
    const cvec m1 = forward_confluent(z1, SamplingGrid{0, 1, 3}).values;
    CHECK(std::abs(m1(0) - cx(1, 0)) < 1e-15);
    CHECK(std::abs(m1(1) - cx(2, 0)) < 1e-15);
    CHECK(std::abs(m1(2) - cx(3, 0)) < 1e-15);

    const auto sig = make_signal(SignalKind::Confluent, {cx(0.5, 0)}, {2},
                                 {{cx(1, 0), cx(2, 0)}});
    const SamplingGrid g{1, 2, 3};
    const cvec m = forward_confluent(sig, g).values;
    for (int k = 0; k < 3; ++k)
        CHECK(std::abs(m(k) - conf_oracle(sig, g.index(k))) < 1e-14);
}

TEST_CASE("forward_confluent rejects polynomial kind with multiplicity")
{
    auto sig  = make_signal(SignalKind::Polynomial, {cx(1, 0)}, {2}, {{cx(1, 0), cx(1, 0)}});
    CHECK_THROWS_AS(forward_confluent(sig, SamplingGrid{0, 1, 3}), std::invalid_argument);
}

TEST_CASE("kind collapse: both maps agree when all multiplicities are 1")
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int rep = 0; rep < 20; ++rep)
    {
        PronySignal sig;
        sig.kind = SignalKind::Basic;
        for (int j = 0; j < 3; ++j)
        {
            sig.nodes.push_back(cx(u(rng), u(rng)) + cx(1.5, 0));
            sig.mults.push_back(1);
            sig.coeffs.push_back({cx(u(rng), u(rng))});
        }
        const SamplingGrid g{2, 3, 5};
        const cvec a = forward_polynomial(sig, g).values;
        const cvec b = forward_confluent(sig, g).values;
        const double scale = a.cwiseAbs().maxCoeff();
        CHECK((a - b).cwiseAbs().maxCoeff() <= 1e-13 * scale);
    }
}

TEST_CASE("is_regular_point conditions")
{
    auto sig = make_signal(SignalKind::Basic, {cx(1, 0), cx(-1, 0)}, {1, 1},
                           {{cx(1, 0)}, {cx(1, 0)}});
    CHECK_FALSE(is_regular_point(sig, 2));
    CHECK(regularity_failure(sig, 2).find("condition 1") != std::string::npos);
    CHECK(is_regular_point(sig, 1));
    CHECK(regularity_failure(sig, 1).empty());

    auto zero = make_signal(SignalKind::Basic, {cx(0.7, 0.1)}, {1}, {{cx(0, 0)}});
    CHECK_FALSE(is_regular_point(zero, 1));
    CHECK(regularity_failure(zero, 1).find("condition 2") != std::string::npos);
}

TEST_CASE("change of variables for nonshifted decimation")
{
    const auto a = make_signal(SignalKind::Basic, {cx(0.3, 0.4)}, {1}, {{cx(2, -1)}});
    const auto id = change_of_variables_nonshifted(a, 1);
    CHECK(std::abs(id.nodes[0] - a.nodes[0]) < 1e-15);
    CHECK(std::abs(id.coeffs[0][0] - a.coeffs[0][0]) < 1e-15);

    const auto im = make_signal(SignalKind::Polynomial, {cx(0, 1)}, {1}, {{cx(1, 0)}});
    const auto sq = change_of_variables_nonshifted(im, 2);
    CHECK(std::abs(sq.nodes[0] - cx(-1, 0)) < 1e-14);
    CHECK(std::abs(sq.coeffs[0][0] - cx(1, 0)) < 1e-15);

    const auto ramp = make_signal(SignalKind::Polynomial, {cx(1, 0)}, {2},
                                  {{cx(1, 0), cx(1, 0)}});
    const auto dec3 = change_of_variables_nonshifted(ramp, 3);
    CHECK(std::abs(dec3.coeffs[0][0] - cx(1, 0)) < 1e-15);
    CHECK(std::abs(dec3.coeffs[0][1] - cx(3, 0)) < 1e-15);
    const cvec lhs = forward_polynomial(ramp, SamplingGrid{0, 3, 5}).values;
    const cvec rhs = forward_polynomial(dec3, SamplingGrid{0, 1, 5}).values;
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-12 * lhs.cwiseAbs().maxCoeff());
}

TEST_CASE("decimation equivalence on random polynomial signals")
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 2.0 * M_PI);
    std::uniform_real_distribution<double> c(-1.0, 1.0);
    for (int rep = 0; rep < 20; ++rep)
    {
        PronySignal sig;
        sig.kind = SignalKind::Polynomial;
        for (int j = 0; j < 2; ++j)
        {
            sig.nodes.push_back(std::polar(1.0, u(rng)));
            const int lj = 1 + static_cast<int>(rng() % 3);
            sig.mults.push_back(lj);
            std::vector<cx> a;
            for (int l = 0; l < lj; ++l) a.emplace_back(c(rng), c(rng));
            a.back() += cx(1.0, 0.0);
            sig.coeffs.push_back(a);
        }
        const long p     = 2 + static_cast<long>(rng() % 6);
        const int n      = 7;
        const auto mapped = change_of_variables_nonshifted(sig, p);
        const cvec lhs   = forward_polynomial(sig, SamplingGrid{0, p, n}).values;
        const cvec rhs   = forward_polynomial(mapped, SamplingGrid{0, 1, n}).values;
        CHECK((lhs - rhs).cwiseAbs().maxCoeff() <=
              1e-12 * std::max(1.0, lhs.cwiseAbs().maxCoeff()));
    }
}

TEST_CASE("coefficient unscaling inverts the change of variables")
{
    const auto ramp = make_signal(SignalKind::Polynomial, {cx(1, 0)}, {2},
                                  {{cx(1, 0), cx(2, 0)}});
    const auto back = unscale_coefficients(change_of_variables_nonshifted(ramp, 7), 7);
    CHECK(std::abs(back.coeffs[0][0] - ramp.coeffs[0][0]) < 1e-14);
    CHECK(std::abs(back.coeffs[0][1] - ramp.coeffs[0][1]) < 1e-14);
}

TEST_CASE("coefficient homogeneity")
{
    auto sig = make_signal(SignalKind::Confluent, {cx(0.6, 0.2)}, {3},
                           {{cx(1, 1), cx(-2, 0.5), cx(0.3, -0.7)}});
    const SamplingGrid g{1, 2, 6};
    const cvec base = forward_confluent(sig, g).values;
    const cx scale(2.0, -3.0);
    for (auto& a : sig.coeffs[0]) a *= scale;
    const cvec scaled = forward_confluent(sig, g).values;
    CHECK((scaled - scale * base).cwiseAbs().maxCoeff() <=
          1e-13 * scaled.cwiseAbs().maxCoeff());
}

TEST_CASE("noise respects bounds and determinism")
{
    MeasurementVector clean;
    clean.grid = SamplingGrid{0, 1, 64};
    clean.values = cvec::Zero(64);

    const NoiseSpec spec{NoiseSpec::Law::UniformBox, 1e-3, 42};
    const auto a = add_noise(clean, spec);
    const auto b = add_noise(clean, spec);
    CHECK((a.values - b.values).cwiseAbs().maxCoeff() == 0.0);
    CHECK(a.noise_bound == doctest::Approx(1e-3));
    for (int k = 0; k < 64; ++k)
    {
        CHECK(std::abs(a.values(k).real()) <= 1e-3);
        CHECK(std::abs(a.values(k).imag()) <= 1e-3);
    }

    const auto c = add_noise(clean, {NoiseSpec::Law::UniformBox, 1e-3, 43});
    CHECK((a.values - c.values).cwiseAbs().maxCoeff() > 0.0);
}

TEST_CASE("signal validation enforces structural invariants")
{
    auto bad_basic = make_signal(SignalKind::Basic, {cx(1, 0)}, {2}, {{cx(1, 0), cx(1, 0)}});
    CHECK_THROWS_AS(bad_basic.validate(), std::invalid_argument);

    auto off_circle = make_signal(SignalKind::Polynomial, {cx(0.5, 0)}, {1}, {{cx(1, 0)}});
    CHECK_THROWS_AS(off_circle.validate(), std::invalid_argument);

    auto ok = make_signal(SignalKind::Confluent, {cx(0.5, 0)}, {2}, {{cx(1, 0), cx(1, 0)}});
    CHECK_NOTHROW(ok.validate());
}
