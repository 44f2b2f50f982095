#include "obslab/diophantine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>

#include "obslab/errors.hpp"
#include "obslab/parallel.hpp"

namespace obslab {

AlgebraicPointSet build_algebraic_points(int M, double ell1) {
    require(M >= 1, "M must be at least 1");
    require(std::isfinite(ell1) && ell1 > 0.0, "ell1 must be positive");
    AlgebraicPointSet set;
    set.M = M;
    set.ell1 = ell1;
    set.field_degree = M + 1;
    set.generator = "2^(1/" + std::to_string(M + 1) + ")";
    for (int j = 1; j <= M; ++j) {
        const long double power = std::pow(2.0L, static_cast<long double>(j) / (M + 1));
        const long double theta = power - std::floor(power);
        set.theta.push_back(theta);
        set.alphas.push_back(static_cast<double>(ell1 * theta));
    }
    return set;
}

double dist_to_integers(double x) { return std::abs(x - std::nearbyint(x)); }

long double dist_to_integers(long double x) { return std::fabs(x - std::nearbyintl(x)); }

DiophantineReport estimate_gamma(const AlgebraicPointSet& points, long long K_max) {
    require(K_max >= 1, "K_max must be at least 1");
    require(points.M >= 1 && points.theta.size() == static_cast<std::size_t>(points.M), "malformed point set");

    struct Best {
        long double value;
        long long k;
    };
    Best best{std::numeric_limits<long double>::infinity(), 0};
    std::mutex lock;
    const long double exponent = 1.0L / points.M;

    parallel_for(static_cast<std::size_t>(K_max), [&](std::size_t begin, std::size_t end) {
        Best local{std::numeric_limits<long double>::infinity(), 0};
        for (std::size_t i = begin; i < end; ++i) {
            const auto k = static_cast<long long>(i) + 1;
            long double worst = 0.0L;
            for (long double theta : points.theta) {
                worst = std::max(worst, dist_to_integers(static_cast<long double>(k) * theta));
            }
            const long double value = std::pow(static_cast<long double>(k), exponent) * worst;
            if (value < local.value) local = {value, k};
        }
        std::lock_guard guard(lock);
        if (local.value < best.value || (local.value == best.value && local.k < best.k)) best = local;
    });

    DiophantineReport report;
    report.M = points.M;
    report.K_max = K_max;
    report.gamma_hat = static_cast<double>(best.value);
    report.argmin_k = best.k;
    if (!(report.gamma_hat > 0.0)) throw PreconditionError("gamma_hat vanished; points are not badly approximable");
    return report;
}

bool sine_dist_check(double x, long long k) {
    const double kx = static_cast<double>(k) * x;
    return std::abs(std::sin(kx)) >= 2.0 * dist_to_integers(kx / std::numbers::pi) - 1e-12;
}

}  // namespace obslab
