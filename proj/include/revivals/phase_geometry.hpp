#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace revivals {

using Complex = std::complex<double>;

enum class Orientation { ccw, cw };

std::string to_string(Orientation o);
Orientation orientation_from_string(const std::string& s);

/// Closed polygonal loop in a complex parameter plane (α or β). The edge from
/// the last point back to the first is implicit; traversal order carries the
/// orientation.
class ParametricLoop {
public:
    /// Throws ValidationError for fewer than 3 points, NaN/inf coordinates,
    /// or two consecutive identical points (closing edge included).
    explicit ParametricLoop(std::vector<Complex> points);

    std::span<const Complex> points() const noexcept { return points_; }
    std::size_t size() const noexcept { return points_.size(); }

    ParametricLoop reversed() const;
    ParametricLoop scaled(double factor) const;

private:
    std::vector<Complex> points_;
};

struct CircleSpec {
    Complex center{0.0, 0.0};
    double radius = 1.0;
    int samples = 1000;
    Orientation orientation = Orientation::ccw;
};

struct EllipseSpec {
    Complex center{0.0, 0.0};
    double semi_major = 1.0;
    double semi_minor = 1.0;
    double rotation = 0.0;  // radians, applied to the (major, minor) axes
    int samples = 1000;
    Orientation orientation = Orientation::ccw;
};

/// Vertex list; "cw" reverses the order as given.
struct PolygonSpec {
    std::vector<Complex> vertices;
    Orientation orientation = Orientation::ccw;
};

/// Explicit sampled curve, taken as-is.
struct PointListSpec {
    std::vector<Complex> points;
};

using LoopDescriptor = std::variant<CircleSpec, EllipseSpec, PolygonSpec, PointListSpec>;

/// Named primitives are sampled at uniform parameter steps starting at
/// parameter 0; counter-clockwise is the positive orientation.
ParametricLoop loop_from_spec(const LoopDescriptor& spec);

/// Signed Euclidean area (shoelace). Positive for counter-clockwise loops.
double euclidean_area(const ParametricLoop& loop);

/// Signed invariant area  B = ∫ d²β sinh(2|β|)/|β|  over the enclosed region.
///
/// Evaluated by Stokes as the closed line integral of sinh²(r) dθ, which is
/// the potential (cosh 2r − 1)/2 with its origin singularity removed, using
/// the trapezoid rule per chord. Each chord contributes its exact subtended
/// angle (principal branch). Chords touching or crossing the origin are
/// radial and contribute nothing.
double hyperbolic_area(const ParametricLoop& loop);

/// Single-chord contribution to hyperbolic_area. Throws ValidationError when
/// both endpoints sit at the origin.
double hyperbolic_segment(Complex a, Complex b);

/// Loop areas entering the geometric phase. Both are signed and enter phases
/// directly (radians).
struct PhaseData {
    double area_A = 0.0;  // Euclidean area of the α-loop
    double area_B = 0.0;  // invariant area of the β-loop (Hannay angle)
};

/// γ_n = −2A − (n + 1/2)B.
double berry_phase(int n, const PhaseData& phases);

/// Inverse of berry_phase at n = 0, 1: A = (γ1 − 3γ0)/4, B = γ0 − γ1.
PhaseData areas_from_phases(double gamma0, double gamma1);

/// Composition phase of two displacements: twice the signed area of the
/// triangle (0, α', α + α'), positive when that triangle is counter-clockwise.
/// Equals Im(α · conj(α')).
double weyl_phase_chi(Complex alpha, Complex alpha_prime);

}  // namespace revivals
