#include "revivals/continued_fraction.hpp"

#include <cmath>
#include <limits>

#include "revivals/circle_arithmetic.hpp"
#include "revivals/error.hpp"

namespace revivals {
namespace {

__extension__ typedef unsigned __int128 u128;

constexpr auto kMax = std::numeric_limits<std::int64_t>::max();

std::int64_t saturate(u128 v) { return v > static_cast<u128>(kMax) ? kMax : static_cast<std::int64_t>(v); }

// a·b + c, saturating at INT64_MAX.
std::int64_t mul_add(std::int64_t a, std::int64_t b, std::int64_t c) {
    return saturate(static_cast<u128>(a) * static_cast<u128>(b) + static_cast<u128>(c));
}

}  // namespace

std::vector<Convergent> ContinuedFraction::convergents() const {
    std::vector<Convergent> out;
    out.reserve(terms.size() + 1);
    std::int64_t p_prev = 1, q_prev = 0;
    std::int64_t p = 0, q = 1;
    out.push_back({p, q});
    for (std::int64_t a : terms) {
        const std::int64_t p_next = mul_add(a, p, p_prev);
        const std::int64_t q_next = mul_add(a, q, q_prev);
        p_prev = p;
        q_prev = q;
        p = p_next;
        q = q_next;
        out.push_back({p, q});
    }
    return out;
}

ContinuedFraction expand_fraction(double x, std::int64_t q_limit) {
    if (!std::isfinite(x)) {
        throw ValidationError("continued fraction of a non-finite value");
    }
    if (q_limit < 1) {
        throw ValidationError("continued fraction denominator limit must be >= 1");
    }
    ContinuedFraction cf;
    const u128 term_cap = static_cast<u128>(q_limit) + 1;

    int exponent = 0;
    const double mantissa = std::frexp(std::fabs(x), &exponent);
    const int shift = 53 - exponent;
    if (x == 0.0 || shift <= 0) {
        cf.terminated = true;
        return cf;
    }

    if (shift > 127) {
        // Fractional bits too deep for exact 128-bit reduction; expand the
        // long double value instead. Only reachable for |x| < 2^-74, where
        // the first denominators are astronomically large anyway.
        long double value = frac(x);
        std::int64_t q_prev = 0, q = 1;
        while (value > 0.0L && q <= q_limit) {
            const long double inv = 1.0L / value;
            const long double a = std::floor(inv);
            const std::int64_t term = a >= static_cast<long double>(term_cap)
                                          ? static_cast<std::int64_t>(term_cap)
                                          : static_cast<std::int64_t>(a);
            cf.terms.push_back(term);
            const std::int64_t q_next = mul_add(term, q, q_prev);
            q_prev = q;
            q = q_next;
            value = inv - a;
        }
        return cf;
    }

    const auto bits = static_cast<std::uint64_t>(std::ldexp(mantissa, 53));
    const u128 den0 = u128{1} << shift;
    u128 num = static_cast<u128>(bits) & (den0 - 1);
    if (x < 0.0 && num != 0) {
        num = den0 - num;
    }
    u128 den = den0;

    std::int64_t q_prev = 0, q = 1;
    while (num != 0) {
        const u128 a = den / num;
        const u128 r = den - a * num;
        den = num;
        num = r;
        const std::int64_t term = static_cast<std::int64_t>(a < term_cap ? a : term_cap);
        cf.terms.push_back(term);
        const std::int64_t q_next = mul_add(term, q, q_prev);
        q_prev = q;
        q = q_next;
        if (q > q_limit) {
            break;
        }
    }
    cf.terminated = (num == 0);
    return cf;
}

}  // namespace revivals
