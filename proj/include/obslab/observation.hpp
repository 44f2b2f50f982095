#pragma once

#include <string>
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "obslab/spectrum.hpp"
#include "obslab/states.hpp"

namespace obslab {

enum class Field { displacement, velocity, normal_derivative };

const char* to_string(Field field);

struct Interval {
    double lo;
    double hi;

    double length() const { return hi - lo; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

struct Segment {
    double alpha;   ///< x1 position of the vertical segment
    Interval span;  ///< x2 extent
    friend bool operator==(const Segment&, const Segment&) = default;
};

namespace region {

struct VerticalSegments {
    std::vector<Segment> segments;
    friend bool operator==(const VerticalSegments&, const VerticalSegments&) = default;
};
struct BoundaryEdgeBottom {
    friend bool operator==(const BoundaryEdgeBottom&, const BoundaryEdgeBottom&) = default;
};
struct BoundaryEdgeLeft {
    friend bool operator==(const BoundaryEdgeLeft&, const BoundaryEdgeLeft&) = default;
};
/// Left edge {0} x (0, ell2) together with bottom edge (0, ell1) x {0}.
struct BoundaryGamma0 {
    friend bool operator==(const BoundaryGamma0&, const BoundaryGamma0&) = default;
};
struct VerticalStrip {
    Interval x1;
    friend bool operator==(const VerticalStrip&, const VerticalStrip&) = default;
};
struct HorizontalStrip {
    Interval x2;
    friend bool operator==(const HorizontalStrip&, const HorizontalStrip&) = default;
};
/// Both strips; the observation is the sum of the two strip integrals.
struct CrossStrips {
    Interval x1;
    Interval x2;
    friend bool operator==(const CrossStrips&, const CrossStrips&) = default;
};
struct VerticalLine {
    double alpha;
    friend bool operator==(const VerticalLine&, const VerticalLine&) = default;
};
struct HorizontalLine {
    double beta;
    friend bool operator==(const HorizontalLine&, const HorizontalLine&) = default;
};
/// Window t x x2 of plate displacement on the vertical line x1 = alpha.
/// The time window replaces (0, T).
struct OpenRect {
    Interval t;
    Interval x2;
    double alpha;
    friend bool operator==(const OpenRect&, const OpenRect&) = default;
};

}  // namespace region

using Region = std::variant<region::VerticalSegments, region::BoundaryEdgeBottom, region::BoundaryEdgeLeft,
                            region::BoundaryGamma0, region::VerticalStrip, region::HorizontalStrip,
                            region::CrossStrips, region::VerticalLine, region::HorizontalLine,
                            region::OpenRect>;

std::string region_name(const Region& region);

struct ObservationSpec {
    Region region;
    Field field;
    double T;
    Model model;

    /// Checks field/model pairing and that all geometric parameters lie inside the rectangle.
    void validate(const RectangleGeometry& geometry) const;
    Interval time_window() const;

    friend bool operator==(const ObservationSpec&, const ObservationSpec&) = default;
};

/// Integral over (0, T) of exp(i (w1 - w2) t).
Complex time_kernel(double w1, double w2, double T);

/// Integral over window of exp(i delta t).
Complex window_kernel(double delta, const Interval& window);

/// Integral over interval of sin(scale k y) sin(scale kp y).
double sine_overlap(int k, int kp, const Interval& interval, double scale);

/// Hermitian form G with c^H G c equal to the observation integral, over the
/// interleaved (mode, branch) index.
class GramForm {
public:
    GramForm(ModeSetPtr modes, Eigen::MatrixXcd matrix, std::vector<ObservationSpec> terms);

    const ModeSet& mode_set() const { return *modes_; }
    const ModeSetPtr& mode_set_ptr() const { return modes_; }
    const Eigen::MatrixXcd& matrix() const { return matrix_; }
    const std::vector<ObservationSpec>& terms() const { return terms_; }

    double quadratic(const SpectralState& state) const;
    double quadratic(const Eigen::VectorXcd& c) const;

    GramForm operator+(const GramForm& other) const;

private:
    ModeSetPtr modes_;
    Eigen::MatrixXcd matrix_;
    std::vector<ObservationSpec> terms_;
};

GramForm assemble_gram(const ObservationSpec& spec, const ModeSetPtr& modes);
/// Sum of the Gram forms of several observation terms.
GramForm assemble_gram(const std::vector<ObservationSpec>& specs, const ModeSetPtr& modes);

/// Composite Simpson evaluation of the observation integral: the solution series is
/// evaluated on a tensor grid with `resolution` intervals per axis.
double quadrature_oracle(const SpectralState& state, const ObservationSpec& spec, int resolution);

/// Four exponential families of the plate trace: index 4 m + f with
/// f = 0: e^{i( z k2 x2 + l t)}, 1: e^{i(-z k2 x2 + l t)},
/// f = 2: e^{i( z k2 x2 - l t)}, 3: e^{i(-z k2 x2 - l t)}, l = lambda_k.
struct FourFamilyCoefficients {
    std::vector<Complex> a, b, c, d;

    explicit FourFamilyCoefficients(std::size_t modes = 0) : a(modes), b(modes), c(modes), d(modes) {}
    Eigen::VectorXcd vector() const;
    double norm_sq() const;
};

struct TimeSpaceWindow {
    Interval t;
    Interval x2;
};

Eigen::MatrixXcd four_family_gram(const TimeSpaceWindow& omega, const ModeSet& modes);

/// Integral over omega of |f|^2 for the four-family sum f.
double four_family_form(const FourFamilyCoefficients& coeffs, const TimeSpaceWindow& omega,
                        const ModeSet& modes);

/// Four-family coefficients of x2, t -> u(t, alpha, x2) for the plate solution of state.
FourFamilyCoefficients four_family_from_line(const SpectralState& state, double alpha);

}  // namespace obslab
