#include <cmath>
#include <vector>

#include "obslab/errors.hpp"
#include "obslab/observation.hpp"

namespace obslab {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

struct Rule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

Rule simpson(const Interval& interval, int intervals) {
    const int n = intervals + (intervals % 2);
    const double h = interval.length() / n;
    Rule r;
    r.nodes.resize(static_cast<std::size_t>(n) + 1);
    r.weights.resize(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        r.nodes[static_cast<std::size_t>(i)] = interval.lo + h * i;
        const double c = (i == 0 || i == n) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
        r.weights[static_cast<std::size_t>(i)] = c * h / 3.0;
    }
    return r;
}

Rule point(double x) { return {{x}, {1.0}}; }

// Spatial profile along one axis: sin(k s x), or its x-derivative k s cos(k s x).
struct Axis {
    Rule rule;
    bool derivative = false;
};

// Sum over the spatial grid of profile(k, x) profile(kp, x).
Eigen::MatrixXd spatial_sums(const Axis& axis, int K, double scale) {
    const auto n = axis.rule.nodes.size();
    Eigen::MatrixXd values(static_cast<Eigen::Index>(n), K);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = axis.rule.nodes[i];
        for (int k = 1; k <= K; ++k) {
            values(static_cast<Eigen::Index>(i), k - 1) =
                axis.derivative ? k * scale * std::cos(k * scale * x) : std::sin(k * scale * x);
        }
    }
    Eigen::VectorXd w(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) w(static_cast<Eigen::Index>(i)) = axis.rule.weights[i];
    return values.transpose() * w.asDiagonal() * values;
}

struct Piece {
    Axis x1;
    Axis x2;
};

}  // namespace

double quadrature_oracle(const SpectralState& state, const ObservationSpec& spec, int resolution) {
    require(resolution >= 64, "oracle resolution must be at least 64");
    const ModeSet& modes = state.mode_set();
    const RectangleGeometry& g = modes.geometry();
    spec.validate(g);
    const int n = resolution;
    const Interval full1{0.0, g.ell1()};
    const Interval full2{0.0, g.ell2()};

    std::vector<Piece> pieces;
    std::visit(overloaded{
                   [&](const region::VerticalSegments& r) {
                       for (const auto& s : r.segments)
                           pieces.push_back({{point(s.alpha)}, {simpson(s.span, n)}});
                   },
                   [&](const region::BoundaryEdgeBottom&) {
                       pieces.push_back({{simpson(full1, n)}, {point(0.0), true}});
                   },
                   [&](const region::BoundaryEdgeLeft&) {
                       pieces.push_back({{point(0.0), true}, {simpson(full2, n)}});
                   },
                   [&](const region::BoundaryGamma0&) {
                       pieces.push_back({{point(0.0), true}, {simpson(full2, n)}});
                       pieces.push_back({{simpson(full1, n)}, {point(0.0), true}});
                   },
                   [&](const region::VerticalStrip& r) {
                       pieces.push_back({{simpson(r.x1, n)}, {simpson(full2, n)}});
                   },
                   [&](const region::HorizontalStrip& r) {
                       pieces.push_back({{simpson(full1, n)}, {simpson(r.x2, n)}});
                   },
                   [&](const region::CrossStrips& r) {
                       pieces.push_back({{simpson(r.x1, n)}, {simpson(full2, n)}});
                       pieces.push_back({{simpson(full1, n)}, {simpson(r.x2, n)}});
                   },
                   [&](const region::VerticalLine& r) {
                       pieces.push_back({{point(r.alpha)}, {simpson(full2, n)}});
                   },
                   [&](const region::HorizontalLine& r) {
                       pieces.push_back({{simpson(full1, n)}, {point(r.beta)}});
                   },
                   [&](const region::OpenRect& r) {
                       pieces.push_back({{point(r.alpha)}, {simpson(r.x2, n)}});
                   },
               },
               spec.region);

    // The tensor-product rule over (x1, x2) factors into per-axis sums, so the spatial
    // integral at each time node is v(t)^H Q v(t) with Q[m, m'] = Q1[k1, k1'] Q2[k2, k2'].
    const auto M = static_cast<Eigen::Index>(modes.size());
    Eigen::MatrixXd Q = Eigen::MatrixXd::Zero(M, M);
    for (const auto& piece : pieces) {
        const Eigen::MatrixXd q1 = spatial_sums(piece.x1, modes.K1(), g.x1_scale());
        const Eigen::MatrixXd q2 = spatial_sums(piece.x2, modes.K2(), g.z());
        for (Eigen::Index m = 0; m < M; ++m) {
            const Mode& a = modes[static_cast<std::size_t>(m)];
            for (Eigen::Index mp = 0; mp < M; ++mp) {
                const Mode& b = modes[static_cast<std::size_t>(mp)];
                Q(m, mp) += q1(a.k1 - 1, b.k1 - 1) * q2(a.k2 - 1, b.k2 - 1);
            }
        }
    }

    const Rule time = simpson(spec.time_window(), n);
    double total = 0.0;
    Eigen::VectorXcd v(M);
    for (std::size_t it = 0; it < time.nodes.size(); ++it) {
        const double t = time.nodes[it];
        for (Eigen::Index m = 0; m < M; ++m) {
            const auto mi = static_cast<std::size_t>(m);
            const double w = modes[mi].frequency(spec.model);
            const Complex ep = std::polar(1.0, w * t);
            const Complex em = std::conj(ep);
            if (spec.field == Field::velocity) {
                v(m) = Complex(0.0, w) * (state.a(mi) * ep - state.b(mi) * em);
            } else {
                v(m) = state.a(mi) * ep + state.b(mi) * em;
            }
        }
        total += time.weights[it] * (v.adjoint() * Q * v)(0, 0).real();
    }
    return total;
}

}  // namespace obslab
