#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace revivals {

/// Hard ceiling on first-return indices; beyond it fractional parts are no
/// longer reduced with full precision guarantees and scans get expensive.
inline constexpr std::int64_t kMaxReturnIndex = 1'000'000'000;

/// Least positive k1 with {k1·δ} < ε and least positive k2 with
/// 1 − {k2·δ} < ε. Inequalities are strict; boundary equality is a miss.
struct FirstReturns {
    std::int64_t k1 = 0;
    std::int64_t k2 = 0;
};

enum class ReturnSearch { scan, continued_fraction };

/// Largest index the scan will visit: max(10·ceil(1/ε) + q_cap, q_{n+1} + q_n),
/// where q_cap is the largest continued-fraction denominator below 1/ε and n
/// is the first index with ||q_n·δ|| < ε. Three-distance: the orbit points
/// 0..q_{n+1}+q_n−1 leave no gap wider than ||q_n·δ||, so both first returns
/// lie within it.
std::int64_t first_return_search_bound(double delta, double epsilon);

/// Direct scan by default; the continued-fraction path walks one-sided
/// best approximations (semiconvergents) and must agree with the scan.
/// Throws NumericalError when no return is found within the search bound.
FirstReturns first_return_indices(double delta, double epsilon, ReturnSearch method = ReturnSearch::scan);

/// Post-transient distribution of times between window visits, in units of
/// the cycle period: mass only at k1, k2 and k1 + k2.
struct GapDistribution {
    struct Entry {
        std::int64_t gap = 0;
        double probability = 0.0;
    };

    std::int64_t k1 = 0;
    std::int64_t k2 = 0;
    long double frac_k1 = 0.0L;  // {k1·δ}
    long double frac_k2 = 0.0L;  // {k2·δ}
    double f_k1 = 0.0;           // F(k1·T)
    double f_k2 = 0.0;           // F(k2·T)
    double f_k1_plus_k2 = 0.0;   // F((k1 + k2)·T)
    double epsilon = 0.0;
    double delta = 0.0;

    /// The three (gap, F) pairs sorted by gap.
    std::vector<Entry> entries() const;
    double probability(std::int64_t gap) const;
};

/// Rejects δ that classify() flags as integer or rational: the weights for
/// periodic orbits are not available in closed form, use empirical_gaps.
GapDistribution gap_distribution(double delta, double epsilon);

/// k2·{k1·δ} + k1·(1 − {k2·δ}) − 1; vanishes for genuine first returns.
double verify_identity(std::int64_t k1, std::int64_t k2, double delta);

/// Σ k·F(kT) in units of T; equals 1/ε for a valid distribution.
double mean_recurrence(const GapDistribution& dist);

/// Largest double not exceeding {k1·δ} + 1 − {k2·δ} for the first returns
/// at (δ, ε). At that window size the (k1 + k2) gap carries no weight.
double two_gap_epsilon(double delta, double epsilon);

/// Window visits of the orbit {k·δ}, k = 1..iterations, and the gaps
/// between successive visits. Everything before the first visit is
/// transient and excluded.
struct RecurrenceRecord {
    std::vector<std::int64_t> hit_indices;
    std::map<std::int64_t, std::int64_t> gap_counts;
    std::int64_t transient_discarded = 0;

    std::int64_t gap_total() const;
    std::map<std::int64_t, double> frequencies() const;
    double mean_gap() const;
    /// Sample standard deviation of the gaps over sqrt(count).
    double mean_gap_standard_error() const;
};

/// Throws NumericalError if the orbit never enters the window.
RecurrenceRecord empirical_gaps(double delta, double epsilon, std::int64_t iterations);

/// Same for δ = p/q exactly, with {k·p/q} = (k·p mod q)/q in integers.
RecurrenceRecord empirical_gaps(std::int64_t p, std::int64_t q, double epsilon, std::int64_t iterations);

}  // namespace revivals
