#include "obslab/inequalities.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "obslab/errors.hpp"

namespace obslab {

using std::numbers::pi;

ModeMask symmetry_mask(const ModeSet& modes, int p_x1, int q_x2) {
    ModeMask mask(modes.size(), true);
    for (std::size_t m = 0; m < modes.size(); ++m) {
        if (p_x1 >= 2 && modes[m].k1 % p_x1 == 0) mask[m] = false;
        if (q_x2 >= 2 && modes[m].k2 % q_x2 == 0) mask[m] = false;
    }
    return mask;
}

bool state_respects_mask(const SpectralState& state, const ModeMask& mask) {
    if (mask.empty()) return true;
    for (std::size_t m = 0; m < mask.size(); ++m) {
        if (!mask[m] && (state.a(m) != Complex{} || state.b(m) != Complex{})) return false;
    }
    return true;
}

Extremes hermitian_extremes(const Eigen::MatrixXcd& matrix) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(matrix, Eigen::EigenvaluesOnly);
    require(solver.info() == Eigen::Success, "Hermitian eigensolver did not converge");
    const auto& ev = solver.eigenvalues();
    return {ev(0), ev(ev.size() - 1)};
}

ConstantReport empirical_constants(const GramForm& gram, const EnergyWeight& weight, const ModeMask& mask) {
    const ModeSet& modes = gram.mode_set();
    require(weight.model == Model::plate || weight.model == Model::wave, "unknown energy model");
    require(mask.empty() || mask.size() == modes.size(), "mode mask must cover every mode");

    std::vector<Eigen::Index> active;
    for (std::size_t m = 0; m < modes.size(); ++m) {
        if (!mask.empty() && !mask[m]) continue;
        active.push_back(static_cast<Eigen::Index>(doubled_index(m, Branch::a)));
        active.push_back(static_cast<Eigen::Index>(doubled_index(m, Branch::b)));
    }
    require(!active.empty(), "no admissible modes");

    const Eigen::VectorXd d = weight.diagonal(modes);
    const auto n = static_cast<Eigen::Index>(active.size());
    Eigen::VectorXd inv_sqrt(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double w = d(active[static_cast<std::size_t>(i)]);
        require(std::isfinite(w) && w > 0.0, "energy weight must be positive on every admissible mode");
        inv_sqrt(i) = 1.0 / std::sqrt(w);
    }
    Eigen::MatrixXcd H(n, n);
    const Eigen::MatrixXcd& G = gram.matrix();
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            H(i, j) = G(active[static_cast<std::size_t>(i)], active[static_cast<std::size_t>(j)]) * inv_sqrt(i) *
                      inv_sqrt(j);
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(H);
    require(solver.info() == Eigen::Success, "Hermitian eigensolver did not converge");

    ConstantReport report;
    report.terms = gram.terms();
    report.weight = weight;
    report.K1 = modes.K1();
    report.K2 = modes.K2();
    report.c_min = solver.eigenvalues()(0);
    report.c_max = solver.eigenvalues()(n - 1);
    report.admissible_dimension = static_cast<std::size_t>(n);

    Eigen::VectorXcd full = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(modes.dimension()));
    const Eigen::VectorXcd y = solver.eigenvectors().col(0);
    for (Eigen::Index i = 0; i < n; ++i) full(active[static_cast<std::size_t>(i)]) = y(i) * inv_sqrt(i);
    SpectralState argmin = SpectralState::from_vector(gram.mode_set_ptr(), full);
    const double rayleigh = gram.quadratic(full) / energy_seminorm_sq(argmin, weight);
    report.rayleigh_residual = std::abs(rayleigh - report.c_min);
    report.argmin_state = std::move(argmin);
    return report;
}

VerificationReport verify_observability(Scenario scenario, const GramForm& gram, const EnergyWeight& weight,
                                        const std::vector<SpectralState>& states, const ScenarioParams& params,
                                        const ModeMask& mask) {
    VerificationReport out;
    out.scenario = scenario;
    out.prediction = predicted_constant(scenario, params);
    if (out.prediction.has_formula && !out.prediction.above_threshold) {
        throw PreconditionError("T = " + std::to_string(params.T) + " is not above the threshold " +
                                std::to_string(out.prediction.T_threshold) + " for " + to_string(scenario));
    }
    for (const auto& s : states) {
        require(s.mode_set() == gram.mode_set(), "state and Gram form live on different mode sets");
        if (!state_respects_mask(s, mask)) {
            throw InvalidArgument("state is not projected onto the symmetric subspace required by " +
                                  std::string(to_string(scenario)));
        }
    }

    out.empirical = empirical_constants(gram, weight, mask);
    const double c_min = out.empirical.c_min;
    const double c_max = out.empirical.c_max;

    for (const auto& s : states) {
        const double energy = energy_seminorm_sq(s, weight);
        if (energy == 0.0) {
            ++out.zero_states_skipped;
            continue;
        }
        const double ratio = gram.quadratic(s) / energy;
        out.min_ratio = out.min_ratio ? std::min(*out.min_ratio, ratio) : ratio;
        ++out.states_checked;
    }

    if (out.prediction.has_formula) {
        const double c = *out.prediction.c;
        out.eigen_pass = c_min >= c * (1.0 - kVerifySlack);
        out.samples_pass = !out.min_ratio || *out.min_ratio >= c * (1.0 - kVerifySlack);
    } else {
        out.eigen_pass = c_min > kPositivityTolerance * c_max;
        out.samples_pass = !out.min_ratio || *out.min_ratio > 0.0;
    }
    out.pass = out.eigen_pass && out.samples_pass;
    return out;
}

double exponential_sum_energy(std::span<const double> exponents, std::span<const Complex> coefficients, double T) {
    require(exponents.size() == coefficients.size(), "exponents and coefficients must have equal length");
    double total = 0.0;
    for (std::size_t j = 0; j < exponents.size(); ++j) {
        total += std::norm(coefficients[j]) * T;
        for (std::size_t k = j + 1; k < exponents.size(); ++k) {
            // pair (j, k) and its conjugate (k, j)
            total += 2.0 * (std::conj(coefficients[j]) * coefficients[k] * time_kernel(exponents[k], exponents[j], T))
                               .real();
        }
    }
    return total;
}

InequalityCheck mehrenberger_check(const ExponentialSum& sum, double T) {
    require(sum.exponents.size() == sum.coefficients.size(), "exponents and coefficients must have equal length");
    require(sum.exponents.size() >= 2, "need at least two exponents");
    require(std::isfinite(sum.gamma) && sum.gamma > 0.0, "gap constant gamma must be positive");
    const PartialGap gap = partial_gap_analysis(sum.exponents, sum.n, sum.first_index);
    require(gap.gamma >= sum.gamma * (1.0 - 1e-12), "exponents violate the partial gap condition for the given gamma");
    require(T > 2.0 * pi / sum.gamma, "T must exceed 2 pi / gamma");

    const double lhs = exponential_sum_energy(sum.exponents, sum.coefficients, T);
    double upper = 0.0;
    double all = 0.0;
    for (std::size_t i = 0; i < sum.coefficients.size(); ++i) {
        const double w = std::norm(sum.coefficients[i]);
        all += w;
        if (std::abs(sum.first_index + static_cast<int>(i)) >= sum.n) upper += w;
    }
    const double slack = 2.0 * pi / (T * sum.gamma);
    const double rhs = 2.0 * T / pi * (upper - slack * slack * all);
    return {lhs, rhs, lhs >= rhs * (1.0 - kVerifySlack)};
}

InequalityCheck row_ingham_check(int k2, std::span<const Complex> a, std::span<const Complex> b, double T) {
    require(k2 >= 1, "k2 must be positive");
    require(a.size() == b.size(), "a and b must have equal length");
    require(T > 4.0 * std::numbers::sqrt2 * pi, "T must exceed 4 sqrt(2) pi");
    std::vector<double> exponents;
    std::vector<Complex> coefficients;
    double upper = 0.0;
    double lower = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const int k1 = static_cast<int>(i) + 1;
        const double r = std::hypot(static_cast<double>(k1), static_cast<double>(k2));
        exponents.push_back(r);
        coefficients.push_back(a[i]);
        exponents.push_back(-r);
        coefficients.push_back(b[i]);
        const double w = std::norm(a[i]) + std::norm(b[i]);
        (k1 >= k2 ? upper : lower) += w;
    }
    const double lhs = exponential_sum_energy(exponents, coefficients, T);
    const double rhs = (2.0 * T / pi - 64.0 * pi / T) * upper - 64.0 * pi / T * lower;
    return {lhs, rhs, lhs >= rhs * (1.0 - kVerifySlack)};
}

bool sin_sum_lower_bound_check(int k1, std::span<const double> alphas, double ell1, int M, double gamma_hat) {
    require(k1 >= 1 && M >= 1, "k1 and M must be positive");
    require(ell1 > 0.0, "ell1 must be positive");
    double sum = 0.0;
    for (double alpha : alphas) {
        const double s = std::sin(k1 * alpha * pi / ell1);
        sum += s * s;
    }
    return sum >= 4.0 * gamma_hat * gamma_hat * std::pow(static_cast<double>(k1), -2.0 / M);
}

}  // namespace obslab
