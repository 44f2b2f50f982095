#include "obslab/observation.hpp"

#include <cmath>
#include <numbers>

#include "obslab/errors.hpp"
#include "obslab/parallel.hpp"

namespace obslab {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// sin(x)/x, accurate near zero.
double sinc(double x) {
    if (std::abs(x) < 1e-4) {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sin(x) / x;
}

// Integral over interval of cos(w y).
double cosine_integral(double w, const Interval& interval) {
    const double length = interval.length();
    const double mid = 0.5 * (interval.lo + interval.hi);
    return length * std::cos(w * mid) * sinc(0.5 * w * length);
}

void check_interval(const Interval& i, double upper, const char* what) {
    require(std::isfinite(i.lo) && std::isfinite(i.hi), std::string(what) + " must be finite");
    require(i.lo < i.hi, std::string(what) + " must be a nondegenerate interval");
    require(i.lo >= 0.0 && i.hi <= upper, std::string(what) + " must lie inside the side");
}

void check_point(double x, double upper, const char* what) {
    require(std::isfinite(x) && x > 0.0 && x < upper, std::string(what) + " must lie strictly inside the side");
}

enum class Amplitude { one, velocity, d_x1, d_x2 };

struct AxisFactor {
    enum class Kind { point, overlap, edge } kind;
    double point = 0.0;
    Interval interval{0.0, 0.0};
};

// One product-form piece of an observation integral.
struct Term {
    Interval time;
    Amplitude amplitude;
    AxisFactor x1;
    AxisFactor x2;
};

AxisFactor full(double ell) { return {AxisFactor::Kind::overlap, 0.0, {0.0, ell}}; }
AxisFactor over(const Interval& i) { return {AxisFactor::Kind::overlap, 0.0, i}; }
AxisFactor at(double x) { return {AxisFactor::Kind::point, x, {}}; }
AxisFactor edge() { return {AxisFactor::Kind::edge, 0.0, {}}; }

std::vector<Term> decompose(const ObservationSpec& spec, const RectangleGeometry& g) {
    const Interval window = spec.time_window();
    const double l1 = g.ell1();
    const double l2 = g.ell2();
    std::vector<Term> terms;
    std::visit(overloaded{
                   [&](const region::VerticalSegments& r) {
                       for (const auto& s : r.segments)
                           terms.push_back({window, Amplitude::one, at(s.alpha), over(s.span)});
                   },
                   [&](const region::BoundaryEdgeBottom&) {
                       terms.push_back({window, Amplitude::d_x2, full(l1), edge()});
                   },
                   [&](const region::BoundaryEdgeLeft&) {
                       terms.push_back({window, Amplitude::d_x1, edge(), full(l2)});
                   },
                   [&](const region::BoundaryGamma0&) {
                       terms.push_back({window, Amplitude::d_x1, edge(), full(l2)});
                       terms.push_back({window, Amplitude::d_x2, full(l1), edge()});
                   },
                   [&](const region::VerticalStrip& r) {
                       terms.push_back({window, Amplitude::velocity, over(r.x1), full(l2)});
                   },
                   [&](const region::HorizontalStrip& r) {
                       terms.push_back({window, Amplitude::velocity, full(l1), over(r.x2)});
                   },
                   [&](const region::CrossStrips& r) {
                       terms.push_back({window, Amplitude::velocity, over(r.x1), full(l2)});
                       terms.push_back({window, Amplitude::velocity, full(l1), over(r.x2)});
                   },
                   [&](const region::VerticalLine& r) {
                       terms.push_back({window, Amplitude::velocity, at(r.alpha), full(l2)});
                   },
                   [&](const region::HorizontalLine& r) {
                       terms.push_back({window, Amplitude::velocity, full(l1), at(r.beta)});
                   },
                   [&](const region::OpenRect& r) {
                       terms.push_back({window, Amplitude::one, at(r.alpha), over(r.x2)});
                   },
               },
               spec.region);
    return terms;
}

Eigen::MatrixXd axis_matrix(const AxisFactor& f, int K, double scale) {
    Eigen::MatrixXd m(K, K);
    for (int k = 1; k <= K; ++k) {
        for (int kp = 1; kp <= K; ++kp) {
            double value = 1.0;
            switch (f.kind) {
                case AxisFactor::Kind::point:
                    value = std::sin(k * scale * f.point) * std::sin(kp * scale * f.point);
                    break;
                case AxisFactor::Kind::overlap:
                    value = sine_overlap(k, kp, f.interval, scale);
                    break;
                case AxisFactor::Kind::edge:
                    // cos(0) from differentiating the sine factor at the edge
                    value = 1.0;
                    break;
            }
            m(k - 1, kp - 1) = value;
        }
    }
    return m;
}

}  // namespace

const char* to_string(Field field) {
    switch (field) {
        case Field::displacement: return "displacement";
        case Field::velocity: return "velocity";
        case Field::normal_derivative: return "normal_derivative";
    }
    return "?";
}

std::string region_name(const Region& region) {
    return std::visit(overloaded{
                          [](const region::VerticalSegments&) { return "vertical_segments"; },
                          [](const region::BoundaryEdgeBottom&) { return "boundary_bottom"; },
                          [](const region::BoundaryEdgeLeft&) { return "boundary_left"; },
                          [](const region::BoundaryGamma0&) { return "boundary_gamma0"; },
                          [](const region::VerticalStrip&) { return "vertical_strip"; },
                          [](const region::HorizontalStrip&) { return "horizontal_strip"; },
                          [](const region::CrossStrips&) { return "cross_strips"; },
                          [](const region::VerticalLine&) { return "vertical_line"; },
                          [](const region::HorizontalLine&) { return "horizontal_line"; },
                          [](const region::OpenRect&) { return "open_rect"; },
                      },
                      region);
}

Interval ObservationSpec::time_window() const {
    if (const auto* r = std::get_if<region::OpenRect>(&region)) return r->t;
    return {0.0, T};
}

void ObservationSpec::validate(const RectangleGeometry& g) const {
    const bool is_open_rect = std::holds_alternative<region::OpenRect>(region);
    if (!is_open_rect) require(std::isfinite(T) && T > 0.0, "time horizon T must be positive");
    const double l1 = g.ell1();
    const double l2 = g.ell2();
    const auto pairing = [&](Model m, Field f, const char* what) {
        require(model == m && field == f,
                std::string(what) + " observation requires the " + to_string(m) + " model with field " +
                    to_string(f));
    };
    std::visit(overloaded{
                   [&](const region::VerticalSegments& r) {
                       pairing(Model::plate, Field::displacement, "segment");
                       require(!r.segments.empty(), "at least one segment is required");
                       for (const auto& s : r.segments) {
                           check_point(s.alpha, l1, "segment position alpha");
                           check_interval(s.span, l2, "segment interval");
                       }
                   },
                   [&](const region::BoundaryEdgeBottom&) {
                       pairing(Model::wave, Field::normal_derivative, "boundary");
                   },
                   [&](const region::BoundaryEdgeLeft&) {
                       pairing(Model::wave, Field::normal_derivative, "boundary");
                   },
                   [&](const region::BoundaryGamma0&) {
                       pairing(Model::wave, Field::normal_derivative, "boundary");
                   },
                   [&](const region::VerticalStrip& r) {
                       pairing(Model::wave, Field::velocity, "strip");
                       check_interval(r.x1, l1, "strip (a, b)");
                   },
                   [&](const region::HorizontalStrip& r) {
                       pairing(Model::wave, Field::velocity, "strip");
                       check_interval(r.x2, l2, "strip (c, d)");
                   },
                   [&](const region::CrossStrips& r) {
                       pairing(Model::wave, Field::velocity, "strip");
                       check_interval(r.x1, l1, "strip (a, b)");
                       check_interval(r.x2, l2, "strip (c, d)");
                   },
                   [&](const region::VerticalLine& r) {
                       pairing(Model::wave, Field::velocity, "line");
                       check_point(r.alpha, l1, "line position alpha");
                   },
                   [&](const region::HorizontalLine& r) {
                       pairing(Model::wave, Field::velocity, "line");
                       check_point(r.beta, l2, "line position beta");
                   },
                   [&](const region::OpenRect& r) {
                       pairing(Model::plate, Field::displacement, "open rectangle");
                       require(std::isfinite(r.t.lo) && std::isfinite(r.t.hi) && r.t.lo < r.t.hi,
                               "open rectangle time window must be nondegenerate");
                       check_interval(r.x2, l2, "open rectangle x2 window");
                       check_point(r.alpha, l1, "open rectangle line position alpha");
                   },
               },
               region);
}

Complex window_kernel(double delta, const Interval& window) {
    const double length = window.length();
    const double mid = 0.5 * (window.lo + window.hi);
    return std::polar(length * sinc(0.5 * delta * length), delta * mid);
}

Complex time_kernel(double w1, double w2, double T) {
    if (w1 == w2) return {T, 0.0};
    return window_kernel(w1 - w2, {0.0, T});
}

double sine_overlap(int k, int kp, const Interval& interval, double scale) {
    const double diff = k == kp ? interval.length() : cosine_integral(scale * (k - kp), interval);
    return 0.5 * (diff - cosine_integral(scale * (k + kp), interval));
}

GramForm::GramForm(ModeSetPtr modes, Eigen::MatrixXcd matrix, std::vector<ObservationSpec> terms)
    : modes_(std::move(modes)), matrix_(std::move(matrix)), terms_(std::move(terms)) {
    const auto n = static_cast<Eigen::Index>(modes_->dimension());
    require(matrix_.rows() == n && matrix_.cols() == n, "Gram matrix dimension must match the mode set");
}

double GramForm::quadratic(const Eigen::VectorXcd& c) const {
    return (c.adjoint() * matrix_ * c)(0, 0).real();
}

double GramForm::quadratic(const SpectralState& state) const {
    require(state.mode_set() == *modes_, "state and Gram form live on different mode sets");
    return quadratic(state.vector());
}

GramForm GramForm::operator+(const GramForm& other) const {
    require(*modes_ == other.mode_set(), "cannot add Gram forms on different mode sets");
    std::vector<ObservationSpec> terms = terms_;
    terms.insert(terms.end(), other.terms_.begin(), other.terms_.end());
    return GramForm(modes_, matrix_ + other.matrix_, std::move(terms));
}

GramForm assemble_gram(const std::vector<ObservationSpec>& specs, const ModeSetPtr& modes) {
    require(!specs.empty(), "at least one observation term is required");
    const RectangleGeometry& g = modes->geometry();
    const auto dim = modes->dimension();

    struct Prepared {
        Term term;
        Eigen::MatrixXd x1;
        Eigen::MatrixXd x2;
        Eigen::VectorXcd amplitude;
        Eigen::VectorXd frequency;  // signed: +w on branch a, -w on branch b
    };
    std::vector<Prepared> prepared;
    for (const auto& spec : specs) {
        spec.validate(g);
        for (const auto& term : decompose(spec, g)) {
            Prepared p{term, axis_matrix(term.x1, modes->K1(), g.x1_scale()),
                       axis_matrix(term.x2, modes->K2(), g.z()),
                       Eigen::VectorXcd(static_cast<Eigen::Index>(dim)),
                       Eigen::VectorXd(static_cast<Eigen::Index>(dim))};
            for (std::size_t m = 0; m < modes->size(); ++m) {
                const Mode& mode = (*modes)[m];
                const double w = mode.frequency(spec.model);
                for (Branch br : {Branch::a, Branch::b}) {
                    const double sigma = br == Branch::a ? 1.0 : -1.0;
                    const auto j = static_cast<Eigen::Index>(doubled_index(m, br));
                    Complex amp{1.0, 0.0};
                    switch (term.amplitude) {
                        case Amplitude::one: break;
                        case Amplitude::velocity: amp = Complex(0.0, sigma * w); break;
                        case Amplitude::d_x1: amp = g.x1_scale() * mode.k1; break;
                        case Amplitude::d_x2: amp = g.z() * mode.k2; break;
                    }
                    p.amplitude(j) = amp;
                    p.frequency(j) = sigma * w;
                }
            }
            prepared.push_back(std::move(p));
        }
    }

    Eigen::MatrixXcd G = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    parallel_for(dim, [&](std::size_t begin, std::size_t end) {
        for (std::size_t row = begin; row < end; ++row) {
            const auto i = static_cast<Eigen::Index>(row);
            const Mode& mi = (*modes)[row / 2];
            for (std::size_t col = row; col < dim; ++col) {
                const auto j = static_cast<Eigen::Index>(col);
                const Mode& mj = (*modes)[col / 2];
                Complex sum{};
                for (const auto& p : prepared) {
                    const double spatial = p.x1(mi.k1 - 1, mj.k1 - 1) * p.x2(mi.k2 - 1, mj.k2 - 1);
                    if (spatial == 0.0) continue;
                    const double delta = p.frequency(j) - p.frequency(i);
                    const Complex time = delta == 0.0 ? Complex(p.term.time.length(), 0.0)
                                                      : window_kernel(delta, p.term.time);
                    sum += std::conj(p.amplitude(i)) * p.amplitude(j) * time * spatial;
                }
                G(i, j) = sum;
            }
        }
    });
    for (Eigen::Index i = 0; i < G.rows(); ++i) {
        G(i, i) = G(i, i).real();
        for (Eigen::Index j = i + 1; j < G.cols(); ++j) G(j, i) = std::conj(G(i, j));
    }
    return GramForm(modes, std::move(G), specs);
}

GramForm assemble_gram(const ObservationSpec& spec, const ModeSetPtr& modes) {
    return assemble_gram(std::vector<ObservationSpec>{spec}, modes);
}

Eigen::VectorXcd FourFamilyCoefficients::vector() const {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(4 * a.size()));
    for (std::size_t m = 0; m < a.size(); ++m) {
        const auto base = static_cast<Eigen::Index>(4 * m);
        v(base) = a[m];
        v(base + 1) = b[m];
        v(base + 2) = c[m];
        v(base + 3) = d[m];
    }
    return v;
}

double FourFamilyCoefficients::norm_sq() const {
    return vector().squaredNorm();
}

Eigen::MatrixXcd four_family_gram(const TimeSpaceWindow& omega, const ModeSet& modes) {
    require(omega.t.lo < omega.t.hi && omega.x2.lo < omega.x2.hi, "window must be a nondegenerate rectangle");
    const auto dim = 4 * modes.size();
    const double z = modes.geometry().z();
    static constexpr double x_sign[4] = {1.0, -1.0, 1.0, -1.0};
    static constexpr double t_sign[4] = {1.0, 1.0, -1.0, -1.0};
    Eigen::VectorXd xf(static_cast<Eigen::Index>(dim));
    Eigen::VectorXd tf(static_cast<Eigen::Index>(dim));
    for (std::size_t m = 0; m < modes.size(); ++m) {
        for (int f = 0; f < 4; ++f) {
            const auto j = static_cast<Eigen::Index>(4 * m + f);
            xf(j) = x_sign[f] * z * modes[m].k2;
            tf(j) = t_sign[f] * modes[m].lambda;
        }
    }
    Eigen::MatrixXcd G(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    parallel_for(dim, [&](std::size_t begin, std::size_t end) {
        for (std::size_t row = begin; row < end; ++row) {
            const auto i = static_cast<Eigen::Index>(row);
            for (Eigen::Index j = i; j < G.cols(); ++j) {
                G(i, j) = window_kernel(tf(j) - tf(i), omega.t) * window_kernel(xf(j) - xf(i), omega.x2);
            }
        }
    });
    for (Eigen::Index i = 0; i < G.rows(); ++i) {
        G(i, i) = G(i, i).real();
        for (Eigen::Index j = i + 1; j < G.cols(); ++j) G(j, i) = std::conj(G(i, j));
    }
    return G;
}

double four_family_form(const FourFamilyCoefficients& coeffs, const TimeSpaceWindow& omega, const ModeSet& modes) {
    require(coeffs.a.size() == modes.size() && coeffs.b.size() == modes.size() && coeffs.c.size() == modes.size() &&
                coeffs.d.size() == modes.size(),
            "four-family coefficients must match the mode count");
    const Eigen::VectorXcd v = coeffs.vector();
    return (v.adjoint() * four_family_gram(omega, modes) * v)(0, 0).real();
}

FourFamilyCoefficients four_family_from_line(const SpectralState& state, double alpha) {
    const ModeSet& modes = state.mode_set();
    FourFamilyCoefficients out(modes.size());
    const Complex inv_2i(0.0, -0.5);
    for (std::size_t m = 0; m < modes.size(); ++m) {
        const double s = std::sin(modes[m].k1 * modes.geometry().x1_scale() * alpha);
        // sin(z k2 x2) = (e^{i z k2 x2} - e^{-i z k2 x2}) / 2i
        out.a[m] = state.a(m) * s * inv_2i;
        out.b[m] = -state.a(m) * s * inv_2i;
        out.c[m] = state.b(m) * s * inv_2i;
        out.d[m] = -state.b(m) * s * inv_2i;
    }
    return out;
}

}  // namespace obslab
