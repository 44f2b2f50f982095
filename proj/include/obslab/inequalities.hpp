#pragma once

#include <optional>
#include <string>
#include <vector>

#include "obslab/observation.hpp"
#include "obslab/spectrum.hpp"
#include "obslab/states.hpp"

namespace obslab {

/// Extremal constants of c^H G c against the energy form, on the admissible modes.
struct ConstantReport {
    std::vector<ObservationSpec> terms;
    EnergyWeight weight;
    int K1 = 0;
    int K2 = 0;
    double c_min = 0.0;
    double c_max = 0.0;
    std::optional<SpectralState> argmin_state;
    /// |R(argmin_state) - c_min| for the Rayleigh quotient R.
    double rayleigh_residual = 0.0;
    std::size_t admissible_dimension = 0;
};

/// Modes that may carry nonzero coefficients; empty means all modes.
using ModeMask = std::vector<bool>;

ModeMask symmetry_mask(const ModeSet& modes, int p_x1, int q_x2);
bool state_respects_mask(const SpectralState& state, const ModeMask& mask);

/// Smallest and largest eigenvalue of D^{-1/2} G D^{-1/2}, D the energy diagonal.
ConstantReport empirical_constants(const GramForm& gram, const EnergyWeight& weight,
                                   const ModeMask& mask = {});

/// Extremal eigenvalues of a plain Hermitian matrix (identity weight).
struct Extremes {
    double min;
    double max;
};
Extremes hermitian_extremes(const Eigen::MatrixXcd& matrix);

struct MabResult {
    double value;
    int attained_n;  ///< 0 when the infimum is the limit (b - a) / 2
    int cutoff;      ///< last n examined
    bool certified;  ///< every n beyond cutoff provably exceeds value
};

/// Per-n value of the integral of sin^2(n y) over (a, b).
double sine_square_integral(int n, double a, double b);

/// inf over n >= 1 of the integral of sin^2(n y) over (a, b), for 0 <= a < b <= pi.
MabResult m_ab(double a, double b, int max_n = 1000000);

struct SymmetryConstants {
    int p;
    double alpha;
    double m_p;
    double M_p;
};

SymmetryConstants symmetry_constants(int p, double alpha);

/// Observation layouts with an explicit or qualitative lower bound.
enum class Scenario {
    plate_segments,        ///< plate displacement on vertical segments, no explicit constant
    boundary_gamma0,       ///< wave normal derivative on two adjacent edges, no explicit constant
    cross_strips,          ///< vertical plus horizontal strip
    bottom_edge_and_strip, ///< bottom-edge normal derivative plus vertical strip
    line_and_strip,        ///< vertical line plus horizontal strip, p-symmetric in x1
    line_and_bottom_edge,  ///< vertical line plus bottom edge, p-symmetric in x1
    two_lines,             ///< vertical and horizontal line, (p, q)-symmetric
};

const char* to_string(Scenario scenario);
Scenario scenario_from_string(const std::string& name);
bool has_explicit_constant(Scenario scenario);

struct ScenarioParams {
    double T = 0.0;
    double m_ab = 0.0;
    double m_cd = 0.0;
    double m_p = 0.0;
    double M_p = 0.0;
    double m_q = 0.0;
    double M_q = 0.0;
    /// Cross strips only: evaluate the constant with "+16 pi^3 / m" in place of the consistent "-16 pi^3 / m".
    bool paper_literal = false;
};

struct Prediction {
    bool has_formula = false;
    double T2_threshold = 0.0;  ///< estimate holds for T^2 strictly above this
    double T_threshold = 0.0;
    bool above_threshold = false;
    std::optional<double> c;    ///< defined only above threshold
};

Prediction predicted_constant(Scenario scenario, const ScenarioParams& params);

/// max(m_p + M_q, m_q + M_p)
double combined_symmetry_bound(const ScenarioParams& params);

struct VerificationReport {
    Scenario scenario;
    Prediction prediction;
    ConstantReport empirical;
    std::size_t states_checked = 0;
    std::size_t zero_states_skipped = 0;
    std::optional<double> min_ratio;
    bool samples_pass = true;
    bool eigen_pass = true;
    bool pass = false;
};

/// Relative slack of the pass/fail comparisons.
inline constexpr double kVerifySlack = 1e-9;
/// c_min counts as positive above this fraction of c_max.
inline constexpr double kPositivityTolerance = 1e-10;

VerificationReport verify_observability(Scenario scenario, const GramForm& gram, const EnergyWeight& weight,
                                        const std::vector<SpectralState>& states, const ScenarioParams& params,
                                        const ModeMask& mask = {});

/// sum_k a_k e^{i w_k t} for consecutive integer indices first_index, first_index + 1, ...
struct ExponentialSum {
    int first_index = 0;
    std::vector<double> exponents;
    std::vector<Complex> coefficients;
    int n = 0;
    double gamma = 0.0;
};

struct InequalityCheck {
    double lhs;
    double rhs;
    bool holds;
};

/// Integral over (0, T) of |sum a_k e^{i w_k t}|^2.
double exponential_sum_energy(std::span<const double> exponents, std::span<const Complex> coefficients, double T);

InequalityCheck mehrenberger_check(const ExponentialSum& sum, double T);

/// Fixed-k2 row of a membrane solution: a, b indexed by k1 = 1..N, T > 4 sqrt(2) pi.
InequalityCheck row_ingham_check(int k2, std::span<const Complex> a, std::span<const Complex> b, double T);

/// sum_j sin^2(k1 alpha_j pi / ell1) >= 4 gamma_hat^2 k1^{-2/M}
bool sin_sum_lower_bound_check(int k1, std::span<const double> alphas, double ell1, int M, double gamma_hat);

}  // namespace obslab
