#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace obslab {

enum class Model { plate, wave };

const char* to_string(Model model);

/// Rectangle (0, ell1) x (0, ell2) with the scale constants of the sine basis.
class RectangleGeometry {
public:
    RectangleGeometry(double ell1, double ell2);

    double ell1() const { return ell1_; }
    double ell2() const { return ell2_; }

    double u() const { return u_; }  ///< pi^2 / ell1^2
    double v() const { return v_; }  ///< pi^2 / ell2^2
    double z() const { return z_; }  ///< pi / ell2

    /// Wavenumber scale pi/ell1 of the x1 factor sin(k1 pi x1 / ell1).
    double x1_scale() const { return x1_scale_; }

    double eigenvalue(int k1, int k2) const;

    friend bool operator==(const RectangleGeometry&, const RectangleGeometry&) = default;

private:
    double ell1_;
    double ell2_;
    double u_;
    double v_;
    double z_;
    double x1_scale_;
};

struct Mode {
    int k1;
    int k2;
    double lambda;
    double wave_freq;
    double plate_freq;

    double frequency(Model model) const { return model == Model::wave ? wave_freq : plate_freq; }
};

/// Truncated Dirichlet eigenbasis [1..K1] x [1..K2], ordered row-major in (k2, k1).
class ModeSet {
public:
    ModeSet(RectangleGeometry geometry, int K1, int K2);

    const RectangleGeometry& geometry() const { return geometry_; }
    int K1() const { return K1_; }
    int K2() const { return K2_; }
    std::size_t size() const { return modes_.size(); }

    std::span<const Mode> modes() const { return modes_; }
    const Mode& operator[](std::size_t i) const { return modes_[i]; }

    std::size_t index_of(int k1, int k2) const;

    /// Coefficient-vector dimension: one entry per (mode, branch).
    std::size_t dimension() const { return 2 * modes_.size(); }

    friend bool operator==(const ModeSet& a, const ModeSet& b) {
        return a.geometry_ == b.geometry_ && a.K1_ == b.K1_ && a.K2_ == b.K2_;
    }

private:
    RectangleGeometry geometry_;
    int K1_;
    int K2_;
    std::vector<Mode> modes_;
};

using ModeSetPtr = std::shared_ptr<const ModeSet>;

ModeSetPtr build_mode_set(const RectangleGeometry& geometry, int K1, int K2);

struct GapLemmaResult {
    double lhs;
    double bound;
    bool holds;
};

/// |sqrt(k1^2+k2^2) - sqrt(k1p^2+k2^2)| against |k1-k1p| / (2 sqrt 2),
/// valid when max(k1, k1p) >= k2.
GapLemmaResult check_gap_lemma(int k1, int k1p, int k2);

struct PartialGap {
    double gamma;
    bool satisfied;
};

/// Largest gamma with |w_k' - w_k| >= |k' - k| gamma whenever max(|k|,|k'|) >= n.
/// frequencies[i] carries the integer index first_index + i.
PartialGap partial_gap_analysis(std::span<const double> frequencies, int n, int first_index = 1);

}  // namespace obslab
