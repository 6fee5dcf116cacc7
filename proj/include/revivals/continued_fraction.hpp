#pragma once

#include <cstdint>
#include <vector>

namespace revivals {

struct Convergent {
    std::int64_t p = 0;
    std::int64_t q = 1;
};

/// Continued-fraction expansion [0; a1, a2, ...] of the fractional part of
/// a double. Every double is a dyadic rational, so the expansion is computed
/// exactly with integer Euclid and always terminates in principle; it is cut
/// after the first convergent whose denominator exceeds the caller's limit.
struct ContinuedFraction {
    /// a1, a2, ... ; the leading a0 = 0 is implicit. Terms larger than the
    /// limit are saturated to limit + 1.
    std::vector<std::int64_t> terms;
    /// True when the expansion ended exactly: the last convergent equals {x}.
    bool terminated = false;

    /// p_n/q_n for n = 0..terms.size(), starting with 0/1. Numerators and
    /// denominators saturate at INT64_MAX.
    std::vector<Convergent> convergents() const;
};

ContinuedFraction expand_fraction(double x, std::int64_t q_limit);

}  // namespace revivals
