#pragma once

#include <cstdint>
#include <numbers>

namespace revivals {

inline constexpr long double kTwoPi = 2.0L * std::numbers::pi_v<long double>;

/// Fractional part {k·x} = kx − floor(kx), always in [0, 1).
///
/// The product is reduced modulo 1 exactly from the binary mantissa of x
/// (128-bit integer arithmetic), so the result carries no O(k) rounding
/// drift; only the final conversion to long double rounds. Values of x
/// whose fractional bits reach past 2^-127 fall back to long double fmod.
/// Throws ValidationError for non-finite x.
long double frac_multiple(std::int64_t k, double x);

/// {x} for a single double, exact up to the final rounding.
inline long double frac(double x) { return frac_multiple(1, x); }

/// Reduces an angle to [0, 2π).
long double wrap_angle(long double theta);

}  // namespace revivals
