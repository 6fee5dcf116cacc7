#include "revivals/phase_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "revivals/error.hpp"

namespace revivals {
namespace {

double cross(Complex a, Complex b) { return a.real() * b.imag() - a.imag() * b.real(); }
double dot(Complex a, Complex b) { return a.real() * b.real() + a.imag() * b.imag(); }

std::vector<Complex> sample_ellipse(Complex center, double a, double b, double rotation, int samples,
                                    Orientation orientation) {
    if (samples < 3) {
        throw ValidationError("loop primitive needs at least 3 samples, got " + std::to_string(samples));
    }
    const double sign = orientation == Orientation::ccw ? 1.0 : -1.0;
    const Complex axis = std::polar(1.0, rotation);
    std::vector<Complex> pts;
    pts.reserve(static_cast<std::size_t>(samples));
    for (int j = 0; j < samples; ++j) {
        const double t = sign * 2.0 * std::numbers::pi * j / samples;
        pts.push_back(center + axis * Complex(a * std::cos(t), b * std::sin(t)));
    }
    return pts;
}

}  // namespace

std::string to_string(Orientation o) { return o == Orientation::ccw ? "ccw" : "cw"; }

Orientation orientation_from_string(const std::string& s) {
    if (s == "ccw") return Orientation::ccw;
    if (s == "cw") return Orientation::cw;
    throw ValidationError("orientation must be \"ccw\" or \"cw\", got \"" + s + "\"");
}

ParametricLoop::ParametricLoop(std::vector<Complex> points) : points_(std::move(points)) {
    if (points_.size() < 3) {
        throw ValidationError("loop needs at least 3 points, got " + std::to_string(points_.size()));
    }
    for (std::size_t i = 0; i < points_.size(); ++i) {
        const Complex p = points_[i];
        if (!std::isfinite(p.real()) || !std::isfinite(p.imag())) {
            throw ValidationError("loop point " + std::to_string(i) + " is not finite");
        }
        if (p == points_[(i + 1) % points_.size()]) {
            throw ValidationError("loop points " + std::to_string(i) + " and " +
                                  std::to_string((i + 1) % points_.size()) + " coincide");
        }
    }
}

ParametricLoop ParametricLoop::reversed() const {
    std::vector<Complex> pts(points_.rbegin(), points_.rend());
    return ParametricLoop(std::move(pts));
}

ParametricLoop ParametricLoop::scaled(double factor) const {
    std::vector<Complex> pts(points_);
    for (auto& p : pts) p *= factor;
    return ParametricLoop(std::move(pts));
}

ParametricLoop loop_from_spec(const LoopDescriptor& spec) {
    return std::visit(
        [](const auto& s) -> ParametricLoop {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, CircleSpec>) {
                if (!(s.radius > 0.0) || !std::isfinite(s.radius)) {
                    throw ValidationError("circle radius must be positive and finite");
                }
                return ParametricLoop(sample_ellipse(s.center, s.radius, s.radius, 0.0, s.samples, s.orientation));
            } else if constexpr (std::is_same_v<T, EllipseSpec>) {
                if (!(s.semi_major > 0.0) || !(s.semi_minor > 0.0) || !std::isfinite(s.semi_major) ||
                    !std::isfinite(s.semi_minor)) {
                    throw ValidationError("ellipse semi-axes must be positive and finite");
                }
                return ParametricLoop(
                    sample_ellipse(s.center, s.semi_major, s.semi_minor, s.rotation, s.samples, s.orientation));
            } else if constexpr (std::is_same_v<T, PolygonSpec>) {
                std::vector<Complex> pts = s.vertices;
                if (s.orientation == Orientation::cw) std::reverse(pts.begin(), pts.end());
                return ParametricLoop(std::move(pts));
            } else {
                return ParametricLoop(s.points);
            }
        },
        spec);
}

double euclidean_area(const ParametricLoop& loop) {
    const auto pts = loop.points();
    const Complex origin = pts[0];
    double twice = 0.0;
    for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
        twice += cross(pts[i] - origin, pts[i + 1] - origin);
    }
    return 0.5 * twice;
}

double hyperbolic_segment(Complex a, Complex b) {
    const bool a_zero = a == Complex{};
    const bool b_zero = b == Complex{};
    if (a_zero && b_zero) {
        throw ValidationError("loop segment has both endpoints at the origin; angle increment undefined");
    }
    if (a_zero || b_zero) {
        return 0.0;
    }
    const double c = cross(a, b);
    const double d = dot(a, b);
    if (c == 0.0 && d < 0.0) {
        return 0.0;  // chord passes through the origin
    }
    const double dtheta = std::atan2(c, d);
    const double sa = std::sinh(std::abs(a));
    const double sb = std::sinh(std::abs(b));
    return 0.5 * (sa * sa + sb * sb) * dtheta;
}

double hyperbolic_area(const ParametricLoop& loop) {
    const auto pts = loop.points();
    double total = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        total += hyperbolic_segment(pts[i], pts[(i + 1) % pts.size()]);
    }
    return total;
}

double berry_phase(int n, const PhaseData& phases) {
    if (n < 0) {
        throw ValidationError("Fock level must be non-negative, got " + std::to_string(n));
    }
    return -2.0 * phases.area_A - (n + 0.5) * phases.area_B;
}

PhaseData areas_from_phases(double gamma0, double gamma1) {
    return PhaseData{(gamma1 - 3.0 * gamma0) / 4.0, gamma0 - gamma1};
}

double weyl_phase_chi(Complex alpha, Complex alpha_prime) {
    return cross(alpha_prime, alpha + alpha_prime);
}

}  // namespace revivals
