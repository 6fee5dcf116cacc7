#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace revivals {

/// Parameters of the cycle-to-cycle rotation θ_{k+1} = θ_k − 2πΔ (mod 2π),
/// with 2πΔ = ωT + B.
struct RotationParams {
    double Delta = 0.0;
    std::int64_t int_part = 0;  // floor(Δ), for either sign of Δ
    double delta = 0.0;         // Δ − floor(Δ), in [0, 1)
    double theta0 = 0.0;        // [0, 2π)
    double epsilon = 0.1;       // window size in fractional-part units, (0, 1/2)
};

RotationParams rotation_params(double omega, double T, double B, double theta0, double epsilon);

struct RotationClass {
    enum class Kind { integer, rational, irrational };

    Kind kind = Kind::irrational;
    std::int64_t p = 0;  // Δ ≈ p/q in lowest terms; q = 1 for integers
    std::int64_t q = 1;

    /// Orbit period: 1 for integer, q for rational, none for irrational.
    std::optional<std::int64_t> period() const;
};

std::string to_string(RotationClass::Kind kind);

inline constexpr std::int64_t kDefaultClassifyQMax = 1'000'000;
inline constexpr double kDefaultClassifyTol = 1e-12;

/// Integer if |Δ − round Δ| ≤ tol; otherwise rational(p, q) for the smallest
/// q ≤ q_max with |qΔ − round(qΔ)| ≤ tol; otherwise irrational. The smallest
/// such q is always a continued-fraction denominator of Δ, so only
/// convergents are examined.
RotationClass classify(double Delta, std::int64_t q_max = kDefaultClassifyQMax, double tol = kDefaultClassifyTol);

/// θ_k = (θ0 − 2πkΔ) mod 2π in [0, 2π), evaluated in closed form with kΔ
/// reduced mod 1 exactly.
double iterate(double theta0, double Delta, std::int64_t k);

/// Streaming form of iterate: yields θ1, θ2, ... each in closed form.
class Orbit {
public:
    Orbit(double theta0, double Delta) : theta0_(theta0), Delta_(Delta) {}

    double next() { return iterate(theta0_, Delta_, ++k_); }
    std::int64_t index() const noexcept { return k_; }

private:
    double theta0_;
    double Delta_;
    std::int64_t k_ = 0;
};

/// True when θ_k lies in the one-sided window: (θ0 − θ_k) mod 2π < 2πε,
/// i.e. the orbit has swept less than ε of a turn past θ0.
bool in_window(double theta0, double theta_k, double epsilon);

/// All k in 1..k_max with {kδ} < ε.
std::vector<std::int64_t> window_hits(double delta, double epsilon, std::int64_t k_max);

}  // namespace revivals
