#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "obslab/spectrum.hpp"

namespace obslab {

using Complex = std::complex<double>;

/// Branch of the time dependence: a_k e^{+i w t} or b_k e^{-i w t}.
enum class Branch : int { a = 0, b = 1 };

inline std::size_t doubled_index(std::size_t mode, Branch branch) {
    return 2 * mode + static_cast<std::size_t>(branch);
}

/// Coefficients (a_k, b_k) of a truncated solution on a ModeSet.
class SpectralState {
public:
    explicit SpectralState(ModeSetPtr modes);
    SpectralState(ModeSetPtr modes, std::vector<Complex> a, std::vector<Complex> b);

    const ModeSet& mode_set() const { return *modes_; }
    const ModeSetPtr& mode_set_ptr() const { return modes_; }

    std::span<const Complex> a() const { return a_; }
    std::span<const Complex> b() const { return b_; }

    Complex a(std::size_t mode) const { return a_[mode]; }
    Complex b(std::size_t mode) const { return b_[mode]; }
    void set(std::size_t mode, Complex a, Complex b);

    /// Interleaved vector (a_0, b_0, a_1, b_1, ...) matching Gram indices.
    Eigen::VectorXcd vector() const;
    static SpectralState from_vector(ModeSetPtr modes, const Eigen::VectorXcd& c);

    bool is_zero() const;
    SpectralState scaled(Complex factor) const;

    friend bool operator==(const SpectralState& x, const SpectralState& y) {
        return *x.modes_ == *y.modes_ && x.a_ == y.a_ && x.b_ == y.b_;
    }

private:
    ModeSetPtr modes_;
    std::vector<Complex> a_;
    std::vector<Complex> b_;
};

/// Diagonal energy weight on |a_k|^2 + |b_k|^2.
///
/// Plate: lambda_k^s. Wave: (ell1 ell2 / 2) lambda_k, so that the quadratic
/// form equals the integral of |grad u0|^2 + |u1|^2 over the rectangle.
struct EnergyWeight {
    Model model = Model::wave;
    double s = 1.0;
    double scale = 1.0;

    static EnergyWeight plate(double s) { return {Model::plate, s, 1.0}; }
    static EnergyWeight wave() { return {Model::wave, 1.0, 1.0}; }

    double mode_weight(const ModeSet& modes, std::size_t mode) const;
    /// Weight per doubled index.
    Eigen::VectorXd diagonal(const ModeSet& modes) const;
};

double energy_seminorm_sq(const SpectralState& state, const EnergyWeight& weight);

enum class Axis { x1, x2 };

const char* to_string(Axis axis);

/// alpha = (num/den) pi with p the smallest positive integer such that p alpha / pi is an integer.
class SymmetrySpec {
public:
    static SymmetrySpec from_fraction(long num, long den, Axis axis);
    /// Detects alpha/pi as a fraction with denominator at most max_p.
    static SymmetrySpec from_alpha(double alpha, Axis axis, int max_p = 10000);

    int p() const { return p_; }
    Axis axis() const { return axis_; }
    double alpha() const { return alpha_; }
    long numerator() const { return num_; }

    /// sin(n alpha) == 0 exactly when p divides n.
    bool vanishes(long n) const { return n % p_ == 0; }

private:
    SymmetrySpec(long num, int p, Axis axis);

    long num_;
    int p_;
    Axis axis_;
    double alpha_;
};

/// Zeroes a_k, b_k on every mode whose index along spec.axis() is divisible by p.
SpectralState project_p_symmetric(const SpectralState& state, const SymmetrySpec& spec);
SpectralState project_p_symmetric(const SpectralState& state, int p, Axis axis);

/// True if a_k = b_k = 0 for all modes with index along axis divisible by p.
bool is_p_symmetric(const SpectralState& state, int p, Axis axis);

/// max_t |sum_{k=1}^p f(t + 2k pi / p)| for f given by samples at x_i = i pi / N, i = 0..N,
/// extended oddly and 2 pi periodically. N must be a multiple of p.
double symmetry_residual(std::span<const double> samples, int p);

/// Initial displacement u0 and velocity u1 at a point, in the model's time convention.
Complex initial_displacement(const SpectralState& state, double x1, double x2);
Complex initial_velocity(const SpectralState& state, Model model, double x1, double x2);

/// Samples of x1 -> u0(x1, x2) at x1 = i ell1 / N, i = 0..N.
std::vector<Complex> displacement_trace_x1(const SpectralState& state, double x2, int N);
/// Samples of x2 -> u0(x1, x2) at x2 = i ell2 / N, i = 0..N.
std::vector<Complex> displacement_trace_x2(const SpectralState& state, double x1, int N);

/// Coefficients uniform on the complex unit disc, scaled by lambda_k^{-decay}.
SpectralState random_state(ModeSetPtr modes, std::uint64_t seed, double decay = 0.0);

/// Uniform deviates in [0, 1). std::mt19937_64 output is fixed by the standard,
/// the standard distributions are not, so the conversion is done here.
class UniformSource {
public:
    explicit UniformSource(std::uint64_t seed) : engine_(seed) {}
    double next() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double symmetric() { return 2.0 * next() - 1.0; }
    Complex unit_disc();

private:
    std::mt19937_64 engine_;
};

}  // namespace obslab
