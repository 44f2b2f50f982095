#include "obslab/states.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "obslab/errors.hpp"

namespace obslab {

using std::numbers::pi;

SpectralState::SpectralState(ModeSetPtr modes)
    : modes_(std::move(modes)), a_(modes_->size()), b_(modes_->size()) {}

SpectralState::SpectralState(ModeSetPtr modes, std::vector<Complex> a, std::vector<Complex> b)
    : modes_(std::move(modes)), a_(std::move(a)), b_(std::move(b)) {
    require(a_.size() == modes_->size() && b_.size() == modes_->size(),
            "coefficient arrays must match the mode count");
    for (std::size_t i = 0; i < a_.size(); ++i) {
        require(std::isfinite(a_[i].real()) && std::isfinite(a_[i].imag()) &&
                    std::isfinite(b_[i].real()) && std::isfinite(b_[i].imag()),
                "coefficients must be finite");
    }
}

void SpectralState::set(std::size_t mode, Complex a, Complex b) {
    require(mode < a_.size(), "mode index out of range");
    require(std::isfinite(a.real()) && std::isfinite(a.imag()) && std::isfinite(b.real()) &&
                std::isfinite(b.imag()),
            "coefficients must be finite");
    a_[mode] = a;
    b_[mode] = b;
}

Eigen::VectorXcd SpectralState::vector() const {
    Eigen::VectorXcd c(static_cast<Eigen::Index>(2 * a_.size()));
    for (std::size_t m = 0; m < a_.size(); ++m) {
        c(static_cast<Eigen::Index>(doubled_index(m, Branch::a))) = a_[m];
        c(static_cast<Eigen::Index>(doubled_index(m, Branch::b))) = b_[m];
    }
    return c;
}

SpectralState SpectralState::from_vector(ModeSetPtr modes, const Eigen::VectorXcd& c) {
    require(static_cast<std::size_t>(c.size()) == modes->dimension(),
            "coefficient vector length must be twice the mode count");
    std::vector<Complex> a(modes->size());
    std::vector<Complex> b(modes->size());
    for (std::size_t m = 0; m < a.size(); ++m) {
        a[m] = c(static_cast<Eigen::Index>(doubled_index(m, Branch::a)));
        b[m] = c(static_cast<Eigen::Index>(doubled_index(m, Branch::b)));
    }
    return SpectralState(std::move(modes), std::move(a), std::move(b));
}

bool SpectralState::is_zero() const {
    for (std::size_t m = 0; m < a_.size(); ++m) {
        if (a_[m] != Complex{} || b_[m] != Complex{}) return false;
    }
    return true;
}

SpectralState SpectralState::scaled(Complex factor) const {
    SpectralState out = *this;
    for (auto& x : out.a_) x *= factor;
    for (auto& x : out.b_) x *= factor;
    return out;
}

double EnergyWeight::mode_weight(const ModeSet& modes, std::size_t mode) const {
    const double lambda = modes[mode].lambda;
    if (model == Model::wave) {
        const auto& g = modes.geometry();
        return scale * 0.5 * g.ell1() * g.ell2() * lambda;
    }
    return scale * std::pow(lambda, s);
}

Eigen::VectorXd EnergyWeight::diagonal(const ModeSet& modes) const {
    Eigen::VectorXd d(static_cast<Eigen::Index>(modes.dimension()));
    for (std::size_t m = 0; m < modes.size(); ++m) {
        const double w = mode_weight(modes, m);
        d(static_cast<Eigen::Index>(doubled_index(m, Branch::a))) = w;
        d(static_cast<Eigen::Index>(doubled_index(m, Branch::b))) = w;
    }
    return d;
}

double energy_seminorm_sq(const SpectralState& state, const EnergyWeight& weight) {
    const ModeSet& modes = state.mode_set();
    double sum = 0.0;
    for (std::size_t m = 0; m < modes.size(); ++m) {
        sum += weight.mode_weight(modes, m) * (std::norm(state.a(m)) + std::norm(state.b(m)));
    }
    return sum;
}

const char* to_string(Axis axis) {
    return axis == Axis::x1 ? "x1" : "x2";
}

SymmetrySpec::SymmetrySpec(long num, int p, Axis axis)
    : num_(num), p_(p), axis_(axis), alpha_(pi * static_cast<double>(num) / p) {}

SymmetrySpec SymmetrySpec::from_fraction(long num, long den, Axis axis) {
    require(den > 0, "denominator must be positive");
    const long g = std::gcd(num, den);
    num /= g;
    den /= g;
    require(num > 0 && num < den, "alpha must lie strictly inside (0, pi)");
    require(den >= 2, "symmetry order p must be at least 2");
    return SymmetrySpec(num, static_cast<int>(den), axis);
}

SymmetrySpec SymmetrySpec::from_alpha(double alpha, Axis axis, int max_p) {
    require(alpha > 0.0 && alpha < pi, "alpha must lie strictly inside (0, pi)");
    const double ratio = alpha / pi;
    for (int p = 2; p <= max_p; ++p) {
        const double scaled = ratio * p;
        const double nearest = std::round(scaled);
        if (std::abs(scaled - nearest) <= 1e-10 * p) {
            return from_fraction(static_cast<long>(nearest), p, axis);
        }
    }
    throw InvalidArgument("alpha/pi is not a rational number with denominator <= " +
                          std::to_string(max_p));
}

namespace {

int axis_index(const Mode& mode, Axis axis) {
    return axis == Axis::x1 ? mode.k1 : mode.k2;
}

}  // namespace

SpectralState project_p_symmetric(const SpectralState& state, int p, Axis axis) {
    require(p >= 2, "symmetry order p must be at least 2");
    SpectralState out = state;
    const ModeSet& modes = state.mode_set();
    for (std::size_t m = 0; m < modes.size(); ++m) {
        if (axis_index(modes[m], axis) % p == 0) out.set(m, {}, {});
    }
    return out;
}

SpectralState project_p_symmetric(const SpectralState& state, const SymmetrySpec& spec) {
    return project_p_symmetric(state, spec.p(), spec.axis());
}

bool is_p_symmetric(const SpectralState& state, int p, Axis axis) {
    const ModeSet& modes = state.mode_set();
    for (std::size_t m = 0; m < modes.size(); ++m) {
        if (axis_index(modes[m], axis) % p != 0) continue;
        if (state.a(m) != Complex{} || state.b(m) != Complex{}) return false;
    }
    return true;
}

double symmetry_residual(std::span<const double> samples, int p) {
    require(p >= 1, "symmetry order must be positive");
    require(samples.size() >= 2, "need samples on at least one grid interval");
    const auto N = static_cast<long>(samples.size()) - 1;
    require(N % p == 0,
            "grid of " + std::to_string(N) + " intervals on (0, pi) does not map the shifts 2k pi/" +
                std::to_string(p) + " onto grid nodes");
    const long period = 2 * N;
    const auto extended = [&](long j) {
        j %= period;
        if (j < 0) j += period;
        return j <= N ? samples[static_cast<std::size_t>(j)]
                      : -samples[static_cast<std::size_t>(period - j)];
    };
    const long step = period / p;
    double residual = 0.0;
    for (long t = 0; t < period; ++t) {
        double sum = 0.0;
        for (long k = 1; k <= p; ++k) sum += extended(t + k * step);
        residual = std::max(residual, std::abs(sum));
    }
    return residual;
}

namespace {

double basis(const RectangleGeometry& g, const Mode& mode, double x1, double x2) {
    return std::sin(mode.k1 * g.x1_scale() * x1) * std::sin(mode.k2 * g.z() * x2);
}

}  // namespace

Complex initial_displacement(const SpectralState& state, double x1, double x2) {
    const ModeSet& modes = state.mode_set();
    Complex sum{};
    for (std::size_t m = 0; m < modes.size(); ++m) {
        sum += (state.a(m) + state.b(m)) * basis(modes.geometry(), modes[m], x1, x2);
    }
    return sum;
}

Complex initial_velocity(const SpectralState& state, Model model, double x1, double x2) {
    const ModeSet& modes = state.mode_set();
    Complex sum{};
    for (std::size_t m = 0; m < modes.size(); ++m) {
        const double w = modes[m].frequency(model);
        sum += Complex(0.0, w) * (state.a(m) - state.b(m)) *
               basis(modes.geometry(), modes[m], x1, x2);
    }
    return sum;
}

std::vector<Complex> displacement_trace_x1(const SpectralState& state, double x2, int N) {
    require(N >= 1, "trace needs at least one interval");
    const double ell1 = state.mode_set().geometry().ell1();
    std::vector<Complex> out(static_cast<std::size_t>(N) + 1);
    for (int i = 0; i <= N; ++i) out[static_cast<std::size_t>(i)] = initial_displacement(state, ell1 * i / N, x2);
    return out;
}

std::vector<Complex> displacement_trace_x2(const SpectralState& state, double x1, int N) {
    require(N >= 1, "trace needs at least one interval");
    const double ell2 = state.mode_set().geometry().ell2();
    std::vector<Complex> out(static_cast<std::size_t>(N) + 1);
    for (int i = 0; i <= N; ++i) out[static_cast<std::size_t>(i)] = initial_displacement(state, x1, ell2 * i / N);
    return out;
}

Complex UniformSource::unit_disc() {
    const double r = std::sqrt(next());
    const double theta = 2.0 * pi * next();
    return std::polar(r, theta);
}

SpectralState random_state(ModeSetPtr modes, std::uint64_t seed, double decay) {
    require(decay >= 0.0, "decay must be nonnegative");
    UniformSource rng(seed);
    SpectralState state(modes);
    for (std::size_t m = 0; m < modes->size(); ++m) {
        const double scale = std::pow((*modes)[m].lambda, -decay);
        const Complex a = rng.unit_disc() * scale;
        const Complex b = rng.unit_disc() * scale;
        state.set(m, a, b);
    }
    if (state.is_zero()) state.set(0, std::pow((*modes)[0].lambda, -decay), 0.0);
    return state;
}

}  // namespace obslab
