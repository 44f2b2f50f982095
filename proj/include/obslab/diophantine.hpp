#pragma once

#include <string>
#include <vector>

namespace obslab {

/// theta_j = frac(2^{j/(M+1)}), alpha_j = ell1 theta_j, j = 1..M.
struct AlgebraicPointSet {
    int M = 0;
    double ell1 = 0.0;
    std::vector<long double> theta;
    std::vector<double> alphas;
    int field_degree = 0;
    std::string generator;
};

AlgebraicPointSet build_algebraic_points(int M, double ell1);

double dist_to_integers(double x);
long double dist_to_integers(long double x);

struct DiophantineReport {
    int M = 0;
    long long K_max = 0;
    double gamma_hat = 0.0;
    long long argmin_k = 0;
};

/// min over 1 <= k <= K_max of k^{1/M} max_j dist(k theta_j, Z); ties keep the smallest k.
DiophantineReport estimate_gamma(const AlgebraicPointSet& points, long long K_max);

/// |sin(k x)| >= 2 dist(k x / pi, Z) - 1e-12
bool sine_dist_check(double x, long long k);

}  // namespace obslab
