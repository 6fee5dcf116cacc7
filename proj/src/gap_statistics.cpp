#include "revivals/gap_statistics.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "revivals/circle_arithmetic.hpp"
#include "revivals/continued_fraction.hpp"
#include "revivals/error.hpp"
#include "revivals/rotation_map.hpp"

namespace revivals {
namespace {

void require_inputs(double delta, double epsilon) {
    if (!(delta >= 0.0 && delta < 1.0)) {
        throw ValidationError("fractional rotation delta must lie in [0, 1)");
    }
    if (!(epsilon > 0.0 && epsilon < 0.5)) {
        throw ValidationError("window epsilon must lie in (0, 1/2)");
    }
}

bool lower_hit(std::int64_t k, double delta, double epsilon) { return frac_multiple(k, delta) < epsilon; }

bool upper_hit(std::int64_t k, double delta, double epsilon) {
    const long double f = frac_multiple(k, delta);
    return f != 0.0L && 1.0L - f < epsilon;
}

FirstReturns scan_first_returns(double delta, double epsilon) {
    const std::int64_t bound = std::min(first_return_search_bound(delta, epsilon), kMaxReturnIndex);
    FirstReturns r;
    for (std::int64_t k = 1; k <= bound && (r.k1 == 0 || r.k2 == 0); ++k) {
        const long double f = frac_multiple(k, delta);
        if (r.k1 == 0 && f < epsilon) {
            r.k1 = k;
        }
        if (r.k2 == 0 && f != 0.0L && 1.0L - f < epsilon) {
            r.k2 = k;
        }
    }
    if (r.k1 == 0 || r.k2 == 0) {
        throw NumericalError("first return not found within search bound " + std::to_string(bound) +
                             " (delta=" + std::to_string(delta) + " is within tolerance of a rational)");
    }
    return r;
}

// Least hit among the one-sided best approximations of δ on one side.
// Lower side: q0 = 1, then blocks n = 2, 4, ...; upper side: blocks
// n = 1, 3, .... Block n holds q_{n-2} + j·q_{n-1}, j = 1..a_n, along
// which the one-sided distance decreases monotonically.
std::optional<std::int64_t> least_semiconvergent_hit(const ContinuedFraction& cf, const std::vector<Convergent>& conv,
                                                     bool lower, double delta, double epsilon) {
    auto hit = [&](std::int64_t k) { return lower ? lower_hit(k, delta, epsilon) : upper_hit(k, delta, epsilon); };
    if (lower && hit(1)) {
        return 1;
    }
    for (std::size_t n = lower ? 2 : 1; n <= cf.terms.size(); n += 2) {
        const std::int64_t q_before = n >= 2 ? conv[n - 2].q : 0;  // q_{-1} = 0
        const std::int64_t q_prev = conv[n - 1].q;
        const std::int64_t a = cf.terms[n - 1];
        std::int64_t j_hi = std::min(a, (kMaxReturnIndex - q_before) / q_prev);
        auto candidate = [&](std::int64_t j) { return q_before + j * q_prev; };
        if (!lower && j_hi >= 1 && frac_multiple(candidate(j_hi), delta) == 0.0L) {
            --j_hi;  // exact convergent of a rational δ sits on the lower side
        }
        if (j_hi >= 1 && hit(candidate(j_hi))) {
            std::int64_t lo = 1, hi = j_hi;
            while (lo < hi) {
                const std::int64_t mid = lo + (hi - lo) / 2;
                if (hit(candidate(mid))) {
                    hi = mid;
                } else {
                    lo = mid + 1;
                }
            }
            return candidate(lo);
        }
        if (j_hi < a) {
            break;  // block runs past the index ceiling
        }
    }
    return std::nullopt;
}

FirstReturns continued_fraction_first_returns(double delta, double epsilon) {
    const ContinuedFraction cf = expand_fraction(delta, kMaxReturnIndex);
    const auto conv = cf.convergents();
    const auto k1 = least_semiconvergent_hit(cf, conv, true, delta, epsilon);
    const auto k2 = least_semiconvergent_hit(cf, conv, false, delta, epsilon);
    if (!k1 || !k2) {
        throw NumericalError("first return beyond index ceiling for delta=" + std::to_string(delta));
    }
    return {*k1, *k2};
}

}  // namespace

std::int64_t first_return_search_bound(double delta, double epsilon) {
    require_inputs(delta, epsilon);
    const auto inverse = static_cast<std::int64_t>(std::ceil(1.0 / epsilon));
    const ContinuedFraction cf = expand_fraction(delta, kMaxReturnIndex);
    const auto conv = cf.convergents();

    std::int64_t q_cap = 1;
    for (const auto& c : conv) {
        if (static_cast<double>(c.q) < 1.0 / epsilon) {
            q_cap = std::max(q_cap, c.q);
        }
    }
    const std::int64_t base = 10 * inverse + q_cap;

    std::int64_t three_distance = kMaxReturnIndex + 1;
    for (std::size_t n = 0; n < conv.size(); ++n) {
        // |q_n δ − p_n|; for n = 0 that is δ itself, not its distance to 1.
        const long double f = frac_multiple(conv[n].q, delta);
        if ((n == 0 ? f : std::min(f, 1.0L - f)) < epsilon) {
            if (n + 1 < conv.size()) {
                three_distance = std::min(conv[n + 1].q, kMaxReturnIndex) + conv[n].q;
            } else if (cf.terminated) {
                three_distance = 2 * conv[n].q;
            }
            break;
        }
    }
    return std::max(base, three_distance);
}

FirstReturns first_return_indices(double delta, double epsilon, ReturnSearch method) {
    require_inputs(delta, epsilon);
    return method == ReturnSearch::scan ? scan_first_returns(delta, epsilon)
                                        : continued_fraction_first_returns(delta, epsilon);
}

std::vector<GapDistribution::Entry> GapDistribution::entries() const {
    std::vector<Entry> out{{k1, f_k1}, {k2, f_k2}, {k1 + k2, f_k1_plus_k2}};
    std::sort(out.begin(), out.end(), [](const Entry& a, const Entry& b) { return a.gap < b.gap; });
    return out;
}

double GapDistribution::probability(std::int64_t gap) const {
    if (gap == k1) return f_k1;
    if (gap == k2) return f_k2;
    if (gap == k1 + k2) return f_k1_plus_k2;
    return 0.0;
}

GapDistribution gap_distribution(double delta, double epsilon) {
    require_inputs(delta, epsilon);
    const RotationClass cls = classify(delta);
    if (cls.kind != RotationClass::Kind::irrational) {
        throw ValidationError("delta=" + std::to_string(delta) + " is " + to_string(cls.kind) + " (" +
                              std::to_string(cls.p) + "/" + std::to_string(cls.q) +
                              "); no closed-form gap weights, use empirical_gaps");
    }
    const FirstReturns r = first_return_indices(delta, epsilon);

    GapDistribution d;
    d.k1 = r.k1;
    d.k2 = r.k2;
    d.frac_k1 = frac_multiple(r.k1, delta);
    d.frac_k2 = frac_multiple(r.k2, delta);
    d.epsilon = epsilon;
    d.delta = delta;

    const long double eps = epsilon;
    const long double third = d.frac_k1 + 1.0L - d.frac_k2 - eps;
    if (third < -1e-15L) {
        throw NumericalError("window exceeds {k1 delta} + 1 - {k2 delta}; first returns inconsistent");
    }
    d.f_k1 = static_cast<double>((eps - d.frac_k1) / eps);
    d.f_k2 = static_cast<double>((eps - 1.0L + d.frac_k2) / eps);
    d.f_k1_plus_k2 = static_cast<double>(std::max(third, 0.0L) / eps);
    return d;
}

double verify_identity(std::int64_t k1, std::int64_t k2, double delta) {
    const long double a = frac_multiple(k1, delta);
    const long double b = 1.0L - frac_multiple(k2, delta);
    return static_cast<double>(static_cast<long double>(k2) * a + static_cast<long double>(k1) * b - 1.0L);
}

double mean_recurrence(const GapDistribution& dist) {
    long double sum = 0.0L;
    for (const auto& e : dist.entries()) {
        sum += static_cast<long double>(e.gap) * e.probability;
    }
    return static_cast<double>(sum);
}

double two_gap_epsilon(double delta, double epsilon) {
    const FirstReturns r = first_return_indices(delta, epsilon);
    // {k1 δ} + 1 − {k2 δ} lies in (0, 2ε), so it is exactly {(k1 − k2)δ}.
    const long double boundary = frac_multiple(r.k1 - r.k2, delta);
    double e = static_cast<double>(boundary);
    if (static_cast<long double>(e) > boundary) {
        e = std::nextafter(e, 0.0);
    }
    if (!(e < 0.5)) {
        throw ValidationError("two-gap window size reaches 1/2 for this (delta, epsilon)");
    }
    return e;
}

std::int64_t RecurrenceRecord::gap_total() const {
    std::int64_t n = 0;
    for (const auto& [gap, count] : gap_counts) n += count;
    return n;
}

std::map<std::int64_t, double> RecurrenceRecord::frequencies() const {
    const auto total = static_cast<double>(gap_total());
    std::map<std::int64_t, double> out;
    for (const auto& [gap, count] : gap_counts) {
        out[gap] = static_cast<double>(count) / total;
    }
    return out;
}

double RecurrenceRecord::mean_gap() const {
    const std::int64_t n = gap_total();
    if (n == 0) {
        return 0.0;
    }
    long double sum = 0.0L;
    for (const auto& [gap, count] : gap_counts) sum += static_cast<long double>(gap) * count;
    return static_cast<double>(sum / n);
}

double RecurrenceRecord::mean_gap_standard_error() const {
    const std::int64_t n = gap_total();
    if (n < 2) {
        return 0.0;
    }
    const long double mean = mean_gap();
    long double ss = 0.0L;
    for (const auto& [gap, count] : gap_counts) {
        const long double d = gap - mean;
        ss += d * d * count;
    }
    return static_cast<double>(std::sqrt(ss / (n - 1)) / std::sqrt(static_cast<long double>(n)));
}

namespace {

template <typename InWindow>
RecurrenceRecord collect_hits(std::int64_t iterations, InWindow&& in_window) {
    if (iterations < 1) {
        throw ValidationError("iterations must be >= 1");
    }
    RecurrenceRecord rec;
    for (std::int64_t k = 1; k <= iterations; ++k) {
        if (in_window(k)) {
            rec.hit_indices.push_back(k);
        }
    }
    if (rec.hit_indices.empty()) {
        throw NumericalError("orbit never entered the window in " + std::to_string(iterations) + " iterations");
    }
    rec.transient_discarded = rec.hit_indices.front() - 1;
    for (std::size_t i = 1; i < rec.hit_indices.size(); ++i) {
        ++rec.gap_counts[rec.hit_indices[i] - rec.hit_indices[i - 1]];
    }
    return rec;
}

}  // namespace

RecurrenceRecord empirical_gaps(double delta, double epsilon, std::int64_t iterations) {
    require_inputs(delta, epsilon);
    return collect_hits(iterations, [&](std::int64_t k) { return frac_multiple(k, delta) < epsilon; });
}

RecurrenceRecord empirical_gaps(std::int64_t p, std::int64_t q, double epsilon, std::int64_t iterations) {
    if (q < 1) {
        throw ValidationError("rational rotation needs q >= 1");
    }
    require_inputs(0.0, epsilon);
    __extension__ typedef unsigned __int128 u128;
    const auto pm = static_cast<u128>(((p % q) + q) % q);
    return collect_hits(iterations, [&](std::int64_t k) {
        const auto r = static_cast<std::int64_t>(static_cast<u128>(k) * pm % static_cast<u128>(q));
        return static_cast<double>(r) < epsilon * static_cast<double>(q);
    });
}

}  // namespace revivals
