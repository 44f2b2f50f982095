#include "obslab/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "obslab/errors.hpp"

namespace obslab {

using std::numbers::pi;

const char* to_string(Model model) {
    return model == Model::wave ? "wave" : "plate";
}

RectangleGeometry::RectangleGeometry(double ell1, double ell2) : ell1_(ell1), ell2_(ell2) {
    require(std::isfinite(ell1) && ell1 > 0.0, "side length ell1 must be positive");
    require(std::isfinite(ell2) && ell2 > 0.0, "side length ell2 must be positive");
    u_ = pi * pi / (ell1 * ell1);
    v_ = pi * pi / (ell2 * ell2);
    z_ = pi / ell2;
    x1_scale_ = pi / ell1;
}

double RectangleGeometry::eigenvalue(int k1, int k2) const {
    const double a = static_cast<double>(k1);
    const double b = static_cast<double>(k2);
    return std::fma(u_, a * a, v_ * b * b);
}

ModeSet::ModeSet(RectangleGeometry geometry, int K1, int K2)
    : geometry_(geometry), K1_(K1), K2_(K2) {
    require(K1 >= 1 && K2 >= 1, "truncation bounds must be at least 1");
    modes_.reserve(static_cast<std::size_t>(K1) * static_cast<std::size_t>(K2));
    for (int k2 = 1; k2 <= K2; ++k2) {
        for (int k1 = 1; k1 <= K1; ++k1) {
            const double lambda = geometry_.eigenvalue(k1, k2);
            modes_.push_back(Mode{k1, k2, lambda, std::sqrt(lambda), lambda});
        }
    }
}

std::size_t ModeSet::index_of(int k1, int k2) const {
    require(k1 >= 1 && k1 <= K1_ && k2 >= 1 && k2 <= K2_,
            "mode (" + std::to_string(k1) + "," + std::to_string(k2) + ") outside truncation");
    return static_cast<std::size_t>(k2 - 1) * static_cast<std::size_t>(K1_) +
           static_cast<std::size_t>(k1 - 1);
}

ModeSetPtr build_mode_set(const RectangleGeometry& geometry, int K1, int K2) {
    return std::make_shared<const ModeSet>(geometry, K1, K2);
}

GapLemmaResult check_gap_lemma(int k1, int k1p, int k2) {
    require(k1 >= 1 && k1p >= 1 && k2 >= 1, "gap lemma indices must be positive");
    require(k1 != k1p, "gap lemma needs k1 != k1p");
    require(std::max(k1, k1p) >= k2, "gap lemma needs max(k1, k1p) >= k2");
    const double a = k1;
    const double b = k1p;
    const double c = k2;
    const double ra = std::sqrt(a * a + c * c);
    const double rb = std::sqrt(b * b + c * c);
    // Difference of square roots in the cancellation-free form.
    const double lhs = std::abs(a * a - b * b) / (ra + rb);
    const double bound = std::abs(a - b) / (2.0 * std::numbers::sqrt2);
    return {lhs, bound, lhs >= bound};
}

PartialGap partial_gap_analysis(std::span<const double> frequencies, int n, int first_index) {
    require(frequencies.size() >= 2, "partial gap analysis needs at least two frequencies");
    double gamma = std::numeric_limits<double>::infinity();
    const auto count = static_cast<int>(frequencies.size());
    for (int i = 0; i < count; ++i) {
        const int ki = first_index + i;
        for (int j = i + 1; j < count; ++j) {
            const int kj = first_index + j;
            if (std::max(std::abs(ki), std::abs(kj)) < n) continue;
            const double ratio = std::abs(frequencies[j] - frequencies[i]) / std::abs(kj - ki);
            gamma = std::min(gamma, ratio);
        }
    }
    return {gamma, gamma > 0.0};
}

}  // namespace obslab
