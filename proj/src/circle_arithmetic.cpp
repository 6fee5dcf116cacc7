#include "revivals/circle_arithmetic.hpp"

#include <cmath>

#include "revivals/error.hpp"

namespace revivals {
namespace {

__extension__ typedef unsigned __int128 u128;

constexpr long double kBelowOne = 1.0L - 0x1p-64L;

long double clamp_below_one(long double f) { return f >= 1.0L ? kBelowOne : f; }

}  // namespace

long double frac_multiple(std::int64_t k, double x) {
    if (!std::isfinite(x)) {
        throw ValidationError("fractional part of a non-finite value");
    }
    if (k == 0 || x == 0.0) {
        return 0.0L;
    }
    // {k·x} = {|k|·(±|x|)}, sign folded into x.
    bool negative = (x < 0.0) != (k < 0);
    const u128 count = k < 0 ? static_cast<u128>(-(k + 1)) + 1 : static_cast<u128>(k);

    int exponent = 0;
    const double mantissa = std::frexp(std::fabs(x), &exponent);
    const auto bits = static_cast<std::uint64_t>(std::ldexp(mantissa, 53));
    const int shift = 53 - exponent;  // |x| = bits · 2^-shift
    if (shift <= 0) {
        return 0.0L;  // |x| is an integer
    }
    if (shift > 127) {
        long double f = std::fmod(static_cast<long double>(count) * std::fabs(x), 1.0L);
        if (negative && f != 0.0L) {
            f = 1.0L - f;
        }
        return clamp_below_one(f);
    }

    const u128 one = u128{1} << shift;
    const u128 rem = (count * bits) & (one - 1);
    if (rem == 0) {
        return 0.0L;
    }
    const u128 num = negative ? one - rem : rem;
    return clamp_below_one(std::ldexp(static_cast<long double>(num), -shift));
}

long double wrap_angle(long double theta) {
    long double t = std::fmod(theta, kTwoPi);
    if (t < 0.0L) {
        t += kTwoPi;
    }
    if (t >= kTwoPi) {
        t = 0.0L;
    }
    return t;
}

}  // namespace revivals
