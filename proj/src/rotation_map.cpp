#include "revivals/rotation_map.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "revivals/circle_arithmetic.hpp"
#include "revivals/continued_fraction.hpp"
#include "revivals/error.hpp"

namespace revivals {
namespace {

constexpr double kMaxDelta = 0x1p62;

void require_window(double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 0.5)) {
        throw ValidationError("window epsilon must lie in (0, 1/2)");
    }
}

double fractional_as_double(double x) {
    const double f = static_cast<double>(frac(x));
    return f < 1.0 ? f : std::nextafter(1.0, 0.0);
}

}  // namespace

RotationParams rotation_params(double omega, double T, double B, double theta0, double epsilon) {
    if (!(omega > 0.0) || !std::isfinite(omega)) {
        throw ValidationError("omega must be positive and finite");
    }
    if (!(T > 0.0) || !std::isfinite(T)) {
        throw ValidationError("cycle period T must be positive and finite");
    }
    if (!std::isfinite(B) || !std::isfinite(theta0)) {
        throw ValidationError("B and theta0 must be finite");
    }
    require_window(epsilon);

    RotationParams r;
    r.Delta = (omega * T + B) / (2.0 * std::numbers::pi);
    if (std::abs(r.Delta) > kMaxDelta) {
        throw ValidationError("rotation number out of range");
    }
    r.int_part = static_cast<std::int64_t>(std::floor(r.Delta));
    r.delta = fractional_as_double(r.Delta);
    r.theta0 = static_cast<double>(wrap_angle(theta0));
    r.epsilon = epsilon;
    return r;
}

std::optional<std::int64_t> RotationClass::period() const {
    switch (kind) {
        case Kind::integer:
            return 1;
        case Kind::rational:
            return q;
        case Kind::irrational:
            break;
    }
    return std::nullopt;
}

std::string to_string(RotationClass::Kind kind) {
    switch (kind) {
        case RotationClass::Kind::integer:
            return "integer";
        case RotationClass::Kind::rational:
            return "rational";
        case RotationClass::Kind::irrational:
            break;
    }
    return "irrational";
}

RotationClass classify(double Delta, std::int64_t q_max, double tol) {
    if (!std::isfinite(Delta) || std::abs(Delta) > kMaxDelta) {
        throw ValidationError("rotation number must be finite and |Delta| <= 2^62");
    }
    if (q_max < 1 || !(tol > 0.0)) {
        throw ValidationError("classify needs q_max >= 1 and tol > 0");
    }
    const double nearest = std::round(Delta);
    if (std::abs(Delta - nearest) <= tol) {
        return {RotationClass::Kind::integer, static_cast<std::int64_t>(nearest), 1};
    }

    __extension__ typedef __int128 i128;
    const auto floor_part = static_cast<i128>(std::floor(Delta));
    const auto convergents = expand_fraction(Delta, q_max).convergents();
    for (std::size_t n = 1; n < convergents.size(); ++n) {
        const auto [p, q] = convergents[n];
        if (q > q_max) {
            break;
        }
        const long double f = frac_multiple(q, Delta);
        const long double dist = std::min(f, 1.0L - f);
        if (dist <= tol) {
            const i128 numerator = floor_part * q + p;
            if (numerator > INT64_MAX || numerator < INT64_MIN) {
                throw ValidationError("rational numerator overflows 64 bits");
            }
            return {RotationClass::Kind::rational, static_cast<std::int64_t>(numerator), q};
        }
    }
    return {RotationClass::Kind::irrational, 0, 0};
}

double iterate(double theta0, double Delta, std::int64_t k) {
    if (k < 0) {
        throw ValidationError("iteration index must be non-negative");
    }
    return static_cast<double>(wrap_angle(static_cast<long double>(theta0) - kTwoPi * frac_multiple(k, Delta)));
}

bool in_window(double theta0, double theta_k, double epsilon) {
    return wrap_angle(static_cast<long double>(theta0) - theta_k) < kTwoPi * epsilon;
}

std::vector<std::int64_t> window_hits(double delta, double epsilon, std::int64_t k_max) {
    require_window(epsilon);
    if (k_max < 1) {
        throw ValidationError("k_max must be >= 1");
    }
    std::vector<std::int64_t> hits;
    for (std::int64_t k = 1; k <= k_max; ++k) {
        if (frac_multiple(k, delta) < epsilon) {
            hits.push_back(k);
        }
    }
    return hits;
}

}  // namespace revivals
