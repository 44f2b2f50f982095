#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <gtest/gtest.h>

#include "obslab/errors.hpp"
#include "obslab/inequalities.hpp"

using namespace obslab;
using std::numbers::pi;

namespace {

ObservationSpec wave(Region r, Field f, double T) { return {std::move(r), f, T, Model::wave}; }

double sine_square_quadrature(int n, double a, double b) {
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        [n](double y) { return std::sin(n * y) * std::sin(n * y); }, a, b, 15, 1e-15);
}

}  // namespace

TEST(EmpiricalConstants, IdentityPencil) {
    const auto modes = build_mode_set({pi, pi}, 3, 2);
    const EnergyWeight w = EnergyWeight::wave();
    const Eigen::VectorXd d = w.diagonal(*modes);
    const GramForm gram(modes, d.cast<Complex>().asDiagonal(), {});
    const auto r = empirical_constants(gram, w);
    EXPECT_NEAR(r.c_min, 1.0, 1e-13);
    EXPECT_NEAR(r.c_max, 1.0, 1e-13);
}

TEST(EmpiricalConstants, SingleModeClosedForm) {
    const auto modes = build_mode_set({pi, pi}, 1, 1);
    const double T = 7.0;
    const auto gram = assemble_gram(wave(region::VerticalLine{pi / 2.0}, Field::velocity, T), modes);
    const auto r = empirical_constants(gram, EnergyWeight::wave());
    // 2x2 pencil: observation (pi/2) * 2 * [T, -K; -conj K, T] over energy pi^2 (|a|^2 + |b|^2)
    const double k = std::abs(time_kernel(std::sqrt(2.0), -std::sqrt(2.0), T));
    EXPECT_NEAR(r.c_min, (T - k) / pi, 1e-13);
    EXPECT_NEAR(r.c_max, (T + k) / pi, 1e-13);
}

TEST(EmpiricalConstants, CertificateAndScaling) {
    const auto modes = build_mode_set({pi, pi}, 6, 6);
    const auto gram = assemble_gram(wave(region::VerticalStrip{{1.0, 2.0}}, Field::velocity, 30.0), modes);
    const auto r = empirical_constants(gram, EnergyWeight::wave());
    EXPECT_GT(r.c_min, 0.0);
    EXPECT_LE(r.c_min, r.c_max);
    EXPECT_LE(r.rayleigh_residual, 1e-8 * r.c_max);
    ASSERT_TRUE(r.argmin_state.has_value());
    for (int s = 0; s < 100; ++s) {
        const auto state = random_state(modes, 300u + s);
        const double ratio = gram.quadratic(state) / energy_seminorm_sq(state, EnergyWeight::wave());
        EXPECT_GE(ratio, r.c_min * (1 - 1e-10));
        EXPECT_LE(ratio, r.c_max * (1 + 1e-10));
    }
    EnergyWeight scaled = EnergyWeight::wave();
    scaled.scale = 4.0;
    const auto r4 = empirical_constants(gram, scaled);
    EXPECT_NEAR(r4.c_min, r.c_min / 4.0, 1e-12 * r.c_max);
    EXPECT_NEAR(r4.c_max, r.c_max / 4.0, 1e-12 * r.c_max);
    const auto v = r.argmin_state->vector(), v4 = r4.argmin_state->vector();
    EXPECT_NEAR(std::abs(v.dot(v4)) / (v.norm() * v4.norm()), 1.0, 1e-8);
}

TEST(EmpiricalConstants, ZeroWeightRejected) {
    const auto modes = build_mode_set({pi, pi}, 2, 2);
    const auto gram = assemble_gram(wave(region::VerticalLine{1.0}, Field::velocity, 3.0), modes);
    EnergyWeight zero = EnergyWeight::wave();
    zero.scale = 0.0;
    EXPECT_THROW(empirical_constants(gram, zero), InvalidArgument);
}

TEST(EmpiricalConstants, MaskRestrictsSubspace) {
    const auto modes = build_mode_set({pi, pi}, 4, 4);
    const auto gram = assemble_gram(wave(region::VerticalLine{pi / 2.0}, Field::velocity, 20.0), modes);
    const auto all = empirical_constants(gram, EnergyWeight::wave());
    const auto odd = empirical_constants(gram, EnergyWeight::wave(), symmetry_mask(*modes, 2, 0));
    EXPECT_LT(all.c_min, 1e-10);  // even k1 vanish on the line
    EXPECT_GT(odd.c_min, 0.5);
    EXPECT_EQ(odd.admissible_dimension, modes->dimension() / 2);
    EXPECT_TRUE(state_respects_mask(*odd.argmin_state, symmetry_mask(*modes, 2, 0)));
}

TEST(Mab, Examples) {
    const auto full = m_ab(0.0, pi);
    EXPECT_NEAR(full.value, pi / 2.0, 1e-15);
    EXPECT_TRUE(full.certified);
    const auto mid = m_ab(pi / 4.0, 3.0 * pi / 4.0);
    EXPECT_NEAR(mid.value, pi / 4.0 - 1.0 / 6.0, 1e-14);
    EXPECT_EQ(mid.attained_n, 3);
    EXPECT_TRUE(mid.certified);
    const auto half = m_ab(0.0, pi / 2.0);
    EXPECT_GT(half.value, 0.0);
    EXPECT_LE(half.value, pi / 4.0);
    EXPECT_THROW(m_ab(1.0, 1.0), InvalidArgument);
    EXPECT_THROW(m_ab(-0.1, 1.0), InvalidArgument);
    EXPECT_THROW(m_ab(0.0, 3.5), InvalidArgument);
}

TEST(Mab, PerNValuesMatchQuadrature) {
    for (auto [a, b] : {std::pair{pi / 4.0, 3.0 * pi / 4.0}, std::pair{1.0, 2.0}, std::pair{0.1, 0.4}}) {
        double oracle = 1e300;
        for (int n = 1; n <= 100; ++n) {
            const double q = sine_square_quadrature(n, a, b);
            EXPECT_NEAR(sine_square_integral(n, a, b), q, 1e-13);
            oracle = std::min(oracle, q);
        }
        const auto r = m_ab(a, b);
        EXPECT_NEAR(r.value, oracle, 1e-13) << a << ' ' << b;
        EXPECT_GT(r.value, 0.0);
        EXPECT_LE(r.value, pi / 2.0);
    }
}

TEST(Symmetry, Constants) {
    const auto two = symmetry_constants(2, pi / 2.0);
    EXPECT_NEAR(two.m_p, 1.0, 1e-15);
    EXPECT_NEAR(two.M_p, 1.0, 1e-15);
    const auto three = symmetry_constants(3, pi / 3.0);
    EXPECT_NEAR(three.m_p, 0.75, 1e-15);
    EXPECT_NEAR(three.M_p, 0.75, 1e-15);
    const auto five = symmetry_constants(5, pi / 5.0);
    EXPECT_NEAR(five.m_p, std::pow(std::sin(pi / 5.0), 2), 1e-15);
    EXPECT_NEAR(five.M_p, std::pow(std::sin(2.0 * pi / 5.0), 2), 1e-15);
    EXPECT_THROW(symmetry_constants(1, pi / 2.0), InvalidArgument);
    EXPECT_THROW(symmetry_constants(4, pi / 2.0), InvalidArgument);
}

TEST(Prediction, TwoLinesClosedForm) {
    ScenarioParams p;
    p.T = 9.0 * pi;
    p.m_p = p.M_p = p.m_q = p.M_q = 1.0;
    const auto r = predicted_constant(Scenario::two_lines, p);
    ASSERT_TRUE(r.c.has_value());
    EXPECT_NEAR(*r.c, 34.0 / (9.0 * pi), 1e-14);
    EXPECT_NEAR(r.T_threshold, 8.0 * pi, 1e-13);
    EXPECT_NEAR(combined_symmetry_bound(p), 2.0, 0.0);
}

TEST(Prediction, CrossStripsSignCorrection) {
    ScenarioParams p;
    p.m_ab = p.m_cd = pi / 2.0;
    const double m = pi / 2.0;
    const double T2 = 2.0 * (32.0 * pi * pi + 16.0 * pi * pi * pi / m);
    p.T = std::sqrt(T2);
    const auto r = predicted_constant(Scenario::cross_strips, p);
    ASSERT_TRUE(r.c.has_value());
    EXPECT_NEAR(*r.c, 2.0 * m / (pi * pi * p.T) * (T2 - 32.0 * pi * pi - 16.0 * pi * pi * pi / m), 1e-13);
    EXPECT_NEAR(*r.c, m / (pi * pi * p.T) * T2, 1e-12);
    p.paper_literal = true;
    const auto lit = predicted_constant(Scenario::cross_strips, p);
    EXPECT_NEAR(*lit.c, 2.0 * m / (pi * pi * p.T) * (T2 - 32.0 * pi * pi + 16.0 * pi * pi * pi / m), 1e-12);
}

TEST(Prediction, PositiveExactlyAboveThreshold) {
    ScenarioParams p;
    p.m_ab = 0.3;
    p.m_cd = 0.5;
    p.m_p = 0.75;
    p.M_p = 0.75;
    p.m_q = 0.5;
    p.M_q = 1.0;
    for (Scenario s : {Scenario::cross_strips, Scenario::bottom_edge_and_strip, Scenario::line_and_strip,
                       Scenario::line_and_bottom_edge, Scenario::two_lines}) {
        p.T = 1.0;
        const double threshold = predicted_constant(s, p).T_threshold;
        p.T = threshold * 0.999;
        EXPECT_FALSE(predicted_constant(s, p).c.has_value()) << to_string(s);
        p.T = threshold * 1.001;
        const auto above = predicted_constant(s, p);
        ASSERT_TRUE(above.c.has_value()) << to_string(s);
        EXPECT_GT(*above.c, 0.0) << to_string(s);
    }
    EXPECT_FALSE(predicted_constant(Scenario::boundary_gamma0, p).has_formula);
}

TEST(Prediction, ScenarioNamesRoundTrip) {
    for (Scenario s : {Scenario::plate_segments, Scenario::boundary_gamma0, Scenario::cross_strips,
                       Scenario::bottom_edge_and_strip, Scenario::line_and_strip, Scenario::line_and_bottom_edge,
                       Scenario::two_lines}) {
        EXPECT_EQ(scenario_from_string(to_string(s)), s);
    }
    EXPECT_THROW(scenario_from_string("nope"), InvalidArgument);
}

TEST(Verify, GuardsAndZeroStates) {
    const auto modes = build_mode_set({pi, pi}, 4, 4);
    ScenarioParams p;
    p.m_p = p.M_p = p.m_q = p.M_q = 1.0;
    p.T = 20.0;  // below 8 pi
    const std::vector<ObservationSpec> specs{wave(region::VerticalLine{pi / 2.0}, Field::velocity, p.T),
                                             wave(region::HorizontalLine{pi / 2.0}, Field::velocity, p.T)};
    const auto mask = symmetry_mask(*modes, 2, 2);
    EXPECT_THROW(verify_observability(Scenario::two_lines, assemble_gram(specs, modes), EnergyWeight::wave(), {}, p, mask),
                 PreconditionError);

    p.T = 9.0 * pi;
    const std::vector<ObservationSpec> at_T{wave(region::VerticalLine{pi / 2.0}, Field::velocity, p.T),
                                            wave(region::HorizontalLine{pi / 2.0}, Field::velocity, p.T)};
    const auto gram = assemble_gram(at_T, modes);
    EXPECT_THROW(verify_observability(Scenario::two_lines, gram, EnergyWeight::wave(), {random_state(modes, 1)}, p, mask),
                 InvalidArgument);

    SpectralState single(modes);
    single.set(modes->index_of(1, 1), 1.0, 0.0);
    const auto r = verify_observability(Scenario::two_lines, gram, EnergyWeight::wave(),
                                        {SpectralState(modes), single}, p, mask);
    EXPECT_EQ(r.zero_states_skipped, 1u);
    EXPECT_EQ(r.states_checked, 1u);
    // a single (1,1) mode with b = 0 observed on both lines: 2 * (pi/2) * 2 * T over pi^2
    EXPECT_NEAR(*r.min_ratio, 2.0 * p.T / pi, 1e-12);
    EXPECT_TRUE(r.pass);

    const auto only_eigen = verify_observability(Scenario::two_lines, gram, EnergyWeight::wave(), {}, p, mask);
    EXPECT_FALSE(only_eigen.min_ratio.has_value());
    EXPECT_TRUE(only_eigen.pass);
}

TEST(Verify, QualitativeScenarioUsesPositivity) {
    const auto modes = build_mode_set({pi, pi}, 5, 5);
    const auto gram = assemble_gram(wave(region::BoundaryGamma0{}, Field::normal_derivative, 12.0), modes);
    const auto r = verify_observability(Scenario::boundary_gamma0, gram, EnergyWeight::wave(),
                                        {random_state(modes, 2)}, ScenarioParams{12.0});
    EXPECT_TRUE(r.pass);
    EXPECT_FALSE(r.prediction.has_formula);
}

TEST(Mehrenberger, SingleExponential) {
    ExponentialSum sum;
    sum.exponents = {0.0, 1.0};
    sum.coefficients = {{1.0, 0.0}, {0.0, 0.0}};
    sum.gamma = 1.0;
    const double T = 7.0;
    const auto r = mehrenberger_check(sum, T);
    EXPECT_NEAR(r.lhs, T, 1e-14);
    EXPECT_NEAR(r.rhs, 2.0 * T / pi * (1.0 - std::pow(2.0 * pi / T, 2)), 1e-14);
    EXPECT_TRUE(r.holds);
    EXPECT_THROW(mehrenberger_check(sum, 2.0 * pi), InvalidArgument);
    sum.gamma = 2.0;
    EXPECT_THROW(mehrenberger_check(sum, 7.0), InvalidArgument);  // gap condition violated for gamma = 2
}

TEST(Mehrenberger, RandomIntegerFrequencies) {
    UniformSource rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        ExponentialSum sum;
        sum.first_index = 1;
        sum.n = 5;
        sum.gamma = 1.0;
        for (int k = 1; k <= 50; ++k) {
            sum.exponents.push_back(k);
            sum.coefficients.push_back(rng.unit_disc());
        }
        EXPECT_TRUE(mehrenberger_check(sum, 2.5 * 2.0 * pi).holds);
    }
}

TEST(Mehrenberger, EnergyMatchesDirectSum) {
    const std::vector<double> w{0.3, 1.9, -2.2};
    const std::vector<Complex> a{{1.0, 0.5}, {-0.4, 0.2}, {0.1, -0.9}};
    const double T = 3.3;
    const double quad = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        [&](double t) {
            Complex f{};
            for (std::size_t k = 0; k < w.size(); ++k) f += a[k] * std::polar(1.0, w[k] * t);
            return std::norm(f);
        },
        0.0, T, 10, 1e-14);
    EXPECT_NEAR(exponential_sum_energy(w, a, T), quad, 1e-12);
}

TEST(RowIngham, Cases) {
    const double T = 4.0 * std::numbers::sqrt2 * pi * 1.2;
    const std::vector<Complex> zero(5);
    const auto z = row_ingham_check(2, zero, zero, T);
    EXPECT_EQ(z.lhs, 0.0);
    EXPECT_TRUE(z.holds);
    const std::vector<Complex> one{1.0}, none{0.0};
    const auto s = row_ingham_check(1, one, none, T);
    EXPECT_NEAR(s.lhs, T, 1e-13);
    EXPECT_NEAR(s.rhs, 2.0 * T / pi - 64.0 * pi / T, 1e-13);
    EXPECT_TRUE(s.holds);
    UniformSource rng(4);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Complex> a, b;
        for (int i = 0; i < 30; ++i) {
            a.push_back(rng.unit_disc());
            b.push_back(rng.unit_disc());
        }
        EXPECT_TRUE(row_ingham_check(1 + trial % 5, a, b, T).holds);
    }
    EXPECT_THROW(row_ingham_check(1, one, none, 4.0 * std::numbers::sqrt2 * pi), InvalidArgument);
}

TEST(SinSum, LowerBound) {
    const std::vector<double> alphas{pi * (std::numbers::sqrt2 - 1.0)};
    const double gamma = 6.0 - 4.0 * std::numbers::sqrt2;
    EXPECT_TRUE(sin_sum_lower_bound_check(1, alphas, pi, 1, gamma));
    EXPECT_TRUE(sin_sum_lower_bound_check(7, alphas, pi, 1, 0.0));
    EXPECT_FALSE(sin_sum_lower_bound_check(1, alphas, pi, 1, 1.0));
}
