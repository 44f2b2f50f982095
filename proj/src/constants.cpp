#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "obslab/errors.hpp"
#include "obslab/inequalities.hpp"

namespace obslab {

using std::numbers::pi;

double sine_square_integral(int n, double a, double b) {
    // (b - a)/2 - [sin 2nb - sin 2na] / (4n), with the sine difference in product form
    const double diff = 2.0 * std::cos(n * (a + b)) * std::sin(n * (b - a));
    return 0.5 * (b - a) - diff / (4.0 * n);
}

MabResult m_ab(double a, double b, int max_n) {
    require(std::isfinite(a) && std::isfinite(b) && 0.0 <= a && a < b && b <= pi,
            "m_ab needs 0 <= a < b <= pi");
    require(max_n >= 1, "search bound must be positive");
    const double limit = 0.5 * (b - a);
    // Intervals of length pi integrate sin^2(n y) over whole periods for every n.
    if (std::abs((b - a) - pi) <= 4.0 * std::numeric_limits<double>::epsilon() * pi) {
        return {pi / 2.0, 1, 1, true};
    }
    // Terms within rounding of the limit do not count as falling below it.
    const double tie = 8.0 * std::numeric_limits<double>::epsilon() * limit;
    double best = limit;
    int best_n = 0;
    for (int n = 1; n <= max_n; ++n) {
        const double value = sine_square_integral(n, a, b);
        if (value < best - (best_n == 0 ? tie : 0.0)) {
            best = value;
            best_n = n;
        }
        // Every later term is at least limit - 1/(2n') > limit - 1/(2n).
        if (best_n != 0 && limit - 1.0 / (2.0 * n) >= best) return {best, best_n, n, true};
    }
    // No term certified below the limit within the search bound.
    if (best_n == 0) return {limit, 0, max_n, false};
    return {best, best_n, max_n, false};
}

SymmetryConstants symmetry_constants(int p, double alpha) {
    require(p >= 2, "symmetry order p must be at least 2");
    const SymmetrySpec spec = SymmetrySpec::from_alpha(alpha, Axis::x1);
    require(spec.p() == p, "p must be the smallest positive integer with p alpha / pi integral (found " +
                               std::to_string(spec.p()) + ")");
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (int k = 1; k < p; ++k) {
        const double s = std::sin(k * alpha);
        const double value = s * s;
        lo = std::min(lo, value);
        hi = std::max(hi, value);
    }
    return {p, alpha, lo, hi};
}

const char* to_string(Scenario scenario) {
    switch (scenario) {
        case Scenario::plate_segments: return "plate-segments";
        case Scenario::boundary_gamma0: return "boundary";
        case Scenario::cross_strips: return "cross-strips";
        case Scenario::bottom_edge_and_strip: return "edge-strip";
        case Scenario::line_and_strip: return "line-strip";
        case Scenario::line_and_bottom_edge: return "line-edge";
        case Scenario::two_lines: return "two-lines";
    }
    return "?";
}

Scenario scenario_from_string(const std::string& name) {
    for (Scenario s : {Scenario::plate_segments, Scenario::boundary_gamma0, Scenario::cross_strips,
                       Scenario::bottom_edge_and_strip, Scenario::line_and_strip, Scenario::line_and_bottom_edge,
                       Scenario::two_lines}) {
        if (name == to_string(s)) return s;
    }
    throw InvalidArgument("unknown scenario '" + name + "'");
}

bool has_explicit_constant(Scenario scenario) {
    return scenario != Scenario::plate_segments && scenario != Scenario::boundary_gamma0;
}

double combined_symmetry_bound(const ScenarioParams& p) {
    return std::max(p.m_p + p.M_q, p.m_q + p.M_p);
}

namespace {

void need_positive(double x, const char* name) {
    require(std::isfinite(x) && x > 0.0, std::string(name) + " must be positive");
}

}  // namespace

Prediction predicted_constant(Scenario scenario, const ScenarioParams& params) {
    Prediction out;
    out.has_formula = has_explicit_constant(scenario);
    if (!out.has_formula) return out;
    const double T = params.T;
    need_positive(T, "T");
    const double T2 = T * T;
    const double pi2 = pi * pi;
    const double pi3 = pi2 * pi;
    double c = 0.0;
    switch (scenario) {
        case Scenario::cross_strips: {
            const double m = std::min(params.m_ab, params.m_cd);
            need_positive(m, "m = min(m_ab, m_cd)");
            out.T2_threshold = 32.0 * pi2 + 16.0 * pi3 / m;
            const double bracket = params.paper_literal ? T2 - 32.0 * pi2 + 16.0 * pi3 / m
                                                        : T2 - 32.0 * pi2 - 16.0 * pi3 / m;
            c = 2.0 * m / (pi2 * T) * bracket;
            break;
        }
        case Scenario::bottom_edge_and_strip: {
            const double m = params.m_ab;
            need_positive(m, "m_ab");
            out.T2_threshold = std::max(32.0 * pi2 + 32.0 * pi3, 32.0 * pi2 + 32.0 * pi2 / m);
            c = std::min(T2 - 32.0 * pi2 - 32.0 * pi3, 2.0 * T2 * m - 64.0 * pi2 * m - 64.0 * pi2) / (pi2 * T);
            break;
        }
        case Scenario::line_and_strip: {
            need_positive(params.m_p, "m_p");
            need_positive(params.M_p, "M_p");
            need_positive(params.m_cd, "m_cd");
            const double mp = params.m_p;
            const double Mp = params.M_p;
            const double mcd = params.m_cd;
            out.T2_threshold = std::max(32.0 * pi2 + 16.0 * pi3 / mp, 32.0 * pi2 + 32.0 * pi2 * Mp / mcd);
            c = 2.0 / (pi2 * T) *
                std::min(T2 * mp - 32.0 * pi2 * mp - 16.0 * pi3, T2 * mcd - 32.0 * pi2 * mcd - 32.0 * pi2 * Mp);
            break;
        }
        case Scenario::line_and_bottom_edge: {
            need_positive(params.m_p, "m_p");
            need_positive(params.M_p, "M_p");
            const double mp = params.m_p;
            const double Mp = params.M_p;
            out.T2_threshold = 32.0 * pi2 * std::max(1.0 + 2.0 * Mp, 1.0 + 1.0 / mp);
            c = std::min(T2 - 32.0 * pi2 - 64.0 * pi2 * Mp, 2.0 * T2 * mp - 64.0 * pi2 * mp - 64.0 * pi2) /
                (pi2 * T);
            break;
        }
        case Scenario::two_lines: {
            need_positive(params.m_p, "m_p");
            need_positive(params.M_p, "M_p");
            need_positive(params.m_q, "m_q");
            need_positive(params.M_q, "M_q");
            const double Mpq = combined_symmetry_bound(params);
            out.T2_threshold = 32.0 * pi2 * Mpq;
            c = 2.0 / (pi2 * T) * (T2 - 32.0 * pi2 * Mpq);
            break;
        }
        default: break;
    }
    out.T_threshold = std::sqrt(out.T2_threshold);
    out.above_threshold = T2 > out.T2_threshold;
    if (out.above_threshold) out.c = c;
    return out;
}

}  // namespace obslab
