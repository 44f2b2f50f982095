// Acceptance gate: one PASS/FAIL line per criterion; exit status is the number of failures.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "obslab/diophantine.hpp"
#include "obslab/inequalities.hpp"
#include "obslab/observation.hpp"
#include "obslab/states.hpp"

using namespace obslab;
using std::numbers::pi;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char* format, auto... args) {
    char buffer[512];
    std::snprintf(buffer, sizeof buffer, format, args...);
    return buffer;
}

const RectangleGeometry square{pi, pi};

// 1
Outcome oracle_equivalence() {
    const auto modes = build_mode_set(square, 8, 8);
    const double T = 5.0;
    struct Kind {
        const char* name;
        std::vector<ObservationSpec> specs;
    };
    const auto wave = [&](Region r, Field f) { return ObservationSpec{std::move(r), f, T, Model::wave}; };
    const std::vector<Kind> kinds{
        {"segments",
         {{region::VerticalSegments{{{pi * (std::numbers::sqrt2 - 1.0), {1.0, 2.0}}, {2.2, {0.3, 0.9}}}},
           Field::displacement, T, Model::plate}}},
        {"gamma0", {wave(region::BoundaryGamma0{}, Field::normal_derivative)}},
        {"strips",
         {wave(region::VerticalStrip{{1.0, 2.0}}, Field::velocity),
          wave(region::HorizontalStrip{{0.4, 1.1}}, Field::velocity)}},
        {"cross-strips", {wave(region::CrossStrips{{1.0, 2.0}, {1.0, 2.0}}, Field::velocity)}},
        {"lines",
         {wave(region::VerticalLine{pi / 3.0}, Field::velocity), wave(region::HorizontalLine{1.2}, Field::velocity)}},
        {"open-rect", {{region::OpenRect{{0.0, T}, {0.5, 1.5}, 1.3}, Field::displacement, T, Model::plate}}},
    };
    double worst = 0.0;
    std::string worst_kind;
    for (const auto& kind : kinds) {
        for (const auto& spec : kind.specs) {
            const GramForm gram = assemble_gram(spec, modes);
            for (int s = 0; s < 20; ++s) {
                const SpectralState state = random_state(modes, 1000u + static_cast<unsigned>(s));
                const double exact = gram.quadratic(state);
                const double quad = quadrature_oracle(state, spec, 2048);
                const double rel = std::abs(exact - quad) / std::max(std::abs(exact), 1e-300);
                if (rel > worst) {
                    worst = rel;
                    worst_kind = kind.name;
                }
            }
        }
    }
    return {worst <= 1e-6, fmt("max rel err %.3e (%s), 6 kinds x 20 states, K=8, T=5, resolution 2048", worst,
                               worst_kind.c_str())};
}

// 2: |grad u0|^2 + |u1|^2 on a 2048^2 Simpson grid, evaluated independently of the library.
Outcome energy_identity() {
    const auto modes = build_mode_set(square, 8, 8);
    const int n = 2048;
    const double h = pi / n;
    std::vector<double> w(n + 1);
    for (int i = 0; i <= n; ++i) w[i] = (i == 0 || i == n ? 1.0 : (i % 2 ? 4.0 : 2.0)) * h / 3.0;
    std::vector<double> s(static_cast<std::size_t>((n + 1) * 8)), c(s.size());
    for (int i = 0; i <= n; ++i) {
        for (int k = 1; k <= 8; ++k) {
            s[static_cast<std::size_t>(i * 8 + k - 1)] = std::sin(k * i * h);
            c[static_cast<std::size_t>(i * 8 + k - 1)] = std::cos(k * i * h);
        }
    }
    double worst = 0.0;
    for (int trial = 0; trial < 4; ++trial) {
        const SpectralState state = random_state(modes, 77u + static_cast<unsigned>(trial));
        std::vector<Complex> d(modes->size()), v(modes->size());
        for (std::size_t m = 0; m < modes->size(); ++m) {
            d[m] = state.a(m) + state.b(m);
            v[m] = Complex(0.0, (*modes)[m].wave_freq) * (state.a(m) - state.b(m));
        }
        double integral = 0.0;
        for (int i = 0; i <= n; ++i) {
            double row = 0.0;
            for (int j = 0; j <= n; ++j) {
                Complex gx{}, gy{}, u1{};
                for (std::size_t m = 0; m < modes->size(); ++m) {
                    const int k1 = (*modes)[m].k1;
                    const int k2 = (*modes)[m].k2;
                    const double s1 = s[static_cast<std::size_t>(i * 8 + k1 - 1)];
                    const double c1 = c[static_cast<std::size_t>(i * 8 + k1 - 1)];
                    const double s2 = s[static_cast<std::size_t>(j * 8 + k2 - 1)];
                    const double c2 = c[static_cast<std::size_t>(j * 8 + k2 - 1)];
                    gx += d[m] * (k1 * c1 * s2);
                    gy += d[m] * (k2 * s1 * c2);
                    u1 += v[m] * (s1 * s2);
                }
                row += w[j] * (std::norm(gx) + std::norm(gy) + std::norm(u1));
            }
            integral += w[i] * row;
        }
        const double spectral = energy_seminorm_sq(state, EnergyWeight::wave());
        worst = std::max(worst, std::abs(spectral - integral) / integral);
    }
    return {worst <= 1e-8, fmt("max rel err %.3e over 4 states, K=8, 2048^2 grid", worst)};
}

// 3
Outcome gap_lemma() {
    long long checked = 0, failures = 0;
    for (int k2 = 1; k2 <= 200; ++k2) {
        for (int k1 = 1; k1 <= 200; ++k1) {
            for (int k1p = 1; k1p <= 200; ++k1p) {
                if (k1 == k1p || std::max(k1, k1p) < k2) continue;
                ++checked;
                if (!check_gap_lemma(k1, k1p, k2).holds) ++failures;
            }
        }
    }
    return {failures == 0, fmt("%lld admissible triples, %lld failures", checked, failures)};
}

// 4
Outcome sine_dist_scan() {
    long long checked = 0, failures = 0;
    for (int i = 1; i * 1e-3 < pi; ++i) {
        for (long long k = 1; k <= 1000; ++k) {
            ++checked;
            if (!sine_dist_check(i * 1e-3, k)) ++failures;
        }
    }
    return {failures == 0, fmt("%lld (x, k) pairs, %lld failures", checked, failures)};
}

// 5
Outcome m_ab_values() {
    const auto per_n_oracle = [](double a, double b) {
        double best = 1e300;
        for (int n = 1; n <= 100; ++n) {
            const double v = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
                [n](double y) { return std::sin(n * y) * std::sin(n * y); }, a, b, 15, 1e-15);
            best = std::min(best, v);
        }
        return best;
    };
    const double full = m_ab(0.0, pi).value;
    const double mid = m_ab(pi / 4.0, 3.0 * pi / 4.0).value;
    const double oracle_full = per_n_oracle(0.0, pi);
    const double oracle_mid = per_n_oracle(pi / 4.0, 3.0 * pi / 4.0);
    const double e1 = std::abs(full - pi / 2.0);
    const double e2 = std::abs(mid - (pi / 4.0 - 1.0 / 6.0));
    const double o1 = std::abs(full - oracle_full);
    const double o2 = std::abs(mid - oracle_mid);
    const bool pass = e1 <= 1e-12 && e2 <= 1e-12 && o1 <= 1e-12 && o2 <= 1e-12;
    return {pass, fmt("|m(0,pi)-pi/2|=%.1e, |m(pi/4,3pi/4)-(pi/4-1/6)|=%.1e, vs per-n quadrature %.1e / %.1e", e1,
                      e2, o1, o2)};
}

std::vector<SpectralState> samples(const ModeSetPtr& modes, int count, unsigned seed, int p_x1 = 0, int q_x2 = 0) {
    std::vector<SpectralState> out;
    for (int i = 0; i < count; ++i) {
        SpectralState s = random_state(modes, seed + static_cast<unsigned>(i));
        if (p_x1) s = project_p_symmetric(s, p_x1, Axis::x1);
        if (q_x2) s = project_p_symmetric(s, q_x2, Axis::x2);
        out.push_back(std::move(s));
    }
    return out;
}

std::string verification_detail(const VerificationReport& r) {
    return fmt("T=%.4f (threshold %.4f), c=%.6g, c_min=%.6g, min ratio=%.6g over %zu states",
               r.empirical.terms.front().T, r.prediction.T_threshold, r.prediction.c.value_or(NAN), r.empirical.c_min,
               r.min_ratio.value_or(NAN), r.states_checked);
}

// 6
Outcome cross_strips() {
    const auto modes = build_mode_set(square, 16, 16);
    ScenarioParams params;
    params.m_ab = m_ab(1.0, 2.0).value;
    params.m_cd = m_ab(1.0, 2.0).value;
    const double m = std::min(params.m_ab, params.m_cd);
    params.T = 1.05 * std::sqrt(32.0 * pi * pi + 16.0 * pi * pi * pi / m);
    const ObservationSpec spec{region::CrossStrips{{1.0, 2.0}, {1.0, 2.0}}, Field::velocity, params.T, Model::wave};
    const auto r = verify_observability(Scenario::cross_strips, assemble_gram(spec, modes), EnergyWeight::wave(),
                                        samples(modes, 1000, 600), params);
    return {r.pass && r.states_checked == 1000, fmt("m=%.6f, ", m) + verification_detail(r)};
}

// 7
Outcome two_lines() {
    const auto modes = build_mode_set(square, 16, 16);
    const double T = 9.0 * pi;
    const auto sym = symmetry_constants(2, pi / 2.0);
    ScenarioParams params;
    params.T = T;
    params.m_p = params.m_q = sym.m_p;
    params.M_p = params.M_q = sym.M_p;
    const std::vector<ObservationSpec> specs{{region::VerticalLine{pi / 2.0}, Field::velocity, T, Model::wave},
                                             {region::HorizontalLine{pi / 2.0}, Field::velocity, T, Model::wave}};
    const auto r = verify_observability(Scenario::two_lines, assemble_gram(specs, modes), EnergyWeight::wave(),
                                        samples(modes, 500, 700, 2, 2), params, symmetry_mask(*modes, 2, 2));
    const double printed = 2.0 * (T * T - 64.0 * pi * pi) / (pi * pi * T);
    const bool constant_ok = r.prediction.c && std::abs(*r.prediction.c - printed) <= 1e-14 * printed &&
                             std::abs(printed - 34.0 / (9.0 * pi)) <= 1e-14;
    return {r.pass && constant_ok, verification_detail(r) + fmt(", 34/(9pi)=%.12f", 34.0 / (9.0 * pi))};
}

// 8
Outcome line_estimates() {
    const auto modes = build_mode_set(square, 16, 16);
    const double alpha = pi / 3.0;
    const int p = SymmetrySpec::from_alpha(alpha, Axis::x1).p();
    const auto sym = symmetry_constants(p, alpha);
    ScenarioParams params;
    params.m_p = sym.m_p;
    params.M_p = sym.M_p;
    params.m_cd = m_ab(1.0, 2.0).value;
    const ModeMask mask = symmetry_mask(*modes, p, 0);
    const auto states = samples(modes, 500, 800, p);

    params.T = 1.0;
    params.T = 1.05 * predicted_constant(Scenario::line_and_strip, params).T_threshold;
    const std::vector<ObservationSpec> strip{
        {region::VerticalLine{alpha}, Field::velocity, params.T, Model::wave},
        {region::HorizontalStrip{{1.0, 2.0}}, Field::velocity, params.T, Model::wave}};
    const auto r1 = verify_observability(Scenario::line_and_strip, assemble_gram(strip, modes), EnergyWeight::wave(),
                                         states, params, mask);

    params.T = 1.0;
    params.T = 1.05 * predicted_constant(Scenario::line_and_bottom_edge, params).T_threshold;
    const std::vector<ObservationSpec> edge{
        {region::VerticalLine{alpha}, Field::velocity, params.T, Model::wave},
        {region::BoundaryEdgeBottom{}, Field::normal_derivative, params.T, Model::wave}};
    const auto r2 = verify_observability(Scenario::line_and_bottom_edge, assemble_gram(edge, modes),
                                         EnergyWeight::wave(), states, params, mask);
    const bool consts = p == 3 && std::abs(sym.m_p - 0.75) <= 1e-15 && std::abs(sym.M_p - 0.75) <= 1e-15;
    return {consts && r1.pass && r2.pass,
            fmt("p=%d m_p=%.4f M_p=%.4f; strip: ", p, sym.m_p, sym.M_p) + verification_detail(r1) +
                "; edge: " + verification_detail(r2)};
}

// 9
Outcome algebraic_chain() {
    const auto points = build_algebraic_points(1, pi);
    const auto report = estimate_gamma(points, 1000000);
    const double expected = 6.0 - 4.0 * std::numbers::sqrt2;
    const double err = std::abs(report.gamma_hat - expected);
    long long failures = 0;
    for (int k1 = 1; k1 <= 10000; ++k1) {
        if (!sin_sum_lower_bound_check(k1, points.alphas, pi, 1, report.gamma_hat)) ++failures;
    }
    const auto modes = build_mode_set(square, 12, 12);
    const ObservationSpec spec{region::VerticalSegments{{{points.alphas[0], {1.0, 2.0}}}}, Field::displacement, 2.0,
                               Model::plate};
    const auto c = empirical_constants(assemble_gram(spec, modes), EnergyWeight::plate(-1.0));
    const bool pass = err <= 1e-9 && report.argmin_k == 2 && failures == 0 && c.c_min > 0.0 &&
                      c.c_min > kPositivityTolerance * c.c_max;
    return {pass, fmt("gamma_hat=%.12f (err %.1e, k=%lld), sin^2 chain failures %lld/10000, plate c_min=%.4e "
                      "c_max=%.4e",
                      report.gamma_hat, err, report.argmin_k, failures, c.c_min, c.c_max)};
}

// 10
Outcome mehrenberger() {
    UniformSource rng(2024);
    int failures = 0, trials = 0;
    for (int trial = 0; trial < 200; ++trial) {
        ExponentialSum sum;
        sum.first_index = 1;
        for (int k = 1; k <= 50; ++k) {
            sum.exponents.push_back(k + 0.1 * rng.symmetric());
            sum.coefficients.push_back(rng.unit_disc());
        }
        for (int n : {0, 5}) {
            sum.n = n;
            sum.gamma = partial_gap_analysis(sum.exponents, n, 1).gamma;
            const auto check = mehrenberger_check(sum, 2.5 * 2.0 * pi / sum.gamma);
            ++trials;
            if (!check.holds) ++failures;
        }
    }
    return {failures == 0, fmt("%d checks (200 sums x n in {0,5}), %d failures", trials, failures)};
}

// 11
Outcome symmetry_equivalence() {
    const auto modes = build_mode_set(square, 10, 10);
    const int N = 600;
    const double lines[] = {0.5, 1.1, 1.7, 2.3};
    const auto residual = [&](const SpectralState& s, int p) {
        double worst = 0.0;
        for (double x2 : lines) {
            const auto trace = displacement_trace_x1(s, x2, N);
            std::vector<double> re(trace.size()), im(trace.size());
            for (std::size_t i = 0; i < trace.size(); ++i) {
                re[i] = trace[i].real();
                im[i] = trace[i].imag();
            }
            worst = std::max({worst, symmetry_residual(re, p), symmetry_residual(im, p)});
        }
        return worst;
    };
    double projected_worst = 0.0, built_worst = 0.0, injected_min = 1e300;
    UniformSource rng(99);
    for (int p : {2, 3, 5}) {
        for (int i = 0; i < 100; ++i) {
            const SpectralState projected =
                project_p_symmetric(random_state(modes, 5000u + 100u * p + i), p, Axis::x1);
            projected_worst = std::max(projected_worst, residual(projected, p));

            SpectralState built(modes);
            for (std::size_t m = 0; m < modes->size(); ++m) {
                if ((*modes)[m].k1 % p != 0) built.set(m, rng.unit_disc(), rng.unit_disc());
            }
            built_worst = std::max(built_worst, residual(built, p));

            // multiple-of-p component of magnitude 1e-6 on a random mode
            std::vector<std::size_t> bad;
            for (std::size_t m = 0; m < modes->size(); ++m) {
                if ((*modes)[m].k1 % p == 0) bad.push_back(m);
            }
            const std::size_t m = bad[static_cast<std::size_t>(rng.next() * bad.size())];
            SpectralState injected = built;
            const Complex z = std::polar(1e-6, 2.0 * pi * rng.next());
            injected.set(m, injected.a(m) + z, injected.b(m));
            injected_min = std::min(injected_min, residual(injected, p));
        }
    }
    const bool pass = projected_worst <= 1e-10 && built_worst <= 1e-10 && injected_min > 1e-7;
    return {pass, fmt("projected residual %.2e, built %.2e, injected min %.2e (300 states each)", projected_worst,
                      built_worst, injected_min)};
}

// 12
Outcome four_family_stability() {
    const TimeSpaceWindow omega{{0.0, 1.0}, {0.5, 1.5}};
    const auto constants = [&](const RectangleGeometry& g, int K) {
        return hermitian_extremes(four_family_gram(omega, *build_mode_set(g, K, K)));
    };
    const RectangleGeometry g{1.0, 2.0};
    const Extremes e4 = constants(g, 4), e8 = constants(g, 8), e12 = constants(g, 12);
    const Extremes s4 = constants(square, 4), s12 = constants(square, 12);
    const bool pass = e12.min >= 0.5 * e4.min && e12.max <= 2.0 * e4.max && e12.min > 0.0;
    return {pass, fmt("(1,2): c1 = %.4g, %.4g, %.4g; c2 = %.4g, %.4g, %.4g for K = 4, 8, 12; "
                      "(pi,pi) for reference: c1(4)=%.2e c1(12)=%.2e",
                      e4.min, e8.min, e12.min, e4.max, e8.max, e12.max, s4.min, s12.min)};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"oracle equivalence", oracle_equivalence},
        {"energy identity", energy_identity},
        {"gap lemma brute force", gap_lemma},
        {"sine/distance scan", sine_dist_scan},
        {"m_ab values", m_ab_values},
        {"cross strips", cross_strips},
        {"two lines, p=q=2", two_lines},
        {"line with strip and with bottom edge, p=3", line_estimates},
        {"algebraic points chain", algebraic_chain},
        {"Mehrenberger inequality", mehrenberger},
        {"p-symmetry equivalence", symmetry_equivalence},
        {"four-family stability", four_family_stability},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %2zu %s: %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                    o.detail.c_str(), seconds);
        std::fflush(stdout);
        if (!o.pass) ++failures;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
