#include "revivals/coherent_dynamics.hpp"

#include <cmath>
#include <numbers>

#include "revivals/circle_arithmetic.hpp"
#include "revivals/error.hpp"

namespace revivals {
namespace {

constexpr double kExactRevivalTol = 1e-12;
constexpr double kAdiabaticThreshold = 10.0;

void require_tail(const CoherentConfig& config) {
    const int needed = tail_truncation(std::norm(config.z));
    if (config.truncation_N < needed) {
        throw NumericalError("Fock truncation N=" + std::to_string(config.truncation_N) +
                             " is below the tail rule N=" + std::to_string(needed) + " for |z|^2=" +
                             std::to_string(std::norm(config.z)));
    }
}

// γ_n − (n + 1/2)ωT for one cycle.
long double cycle_phase(int n, const CoherentConfig& config) {
    return static_cast<long double>(berry_phase(n, config.phases)) -
           (n + 0.5L) * static_cast<long double>(config.omega) * config.cycle_period_T;
}

}  // namespace

int tail_truncation(double z_mod2) {
    if (!(z_mod2 >= 0.0) || !std::isfinite(z_mod2)) {
        throw ValidationError("|z|^2 must be finite and non-negative");
    }
    return static_cast<int>(std::ceil(z_mod2 + 10.0 * std::sqrt(z_mod2 + 1.0) + 20.0));
}

CoherentConfig CoherentConfig::with_tail_rule(Complex z, double omega, double cycle_period_T, PhaseData phases) {
    return CoherentConfig{z, omega, cycle_period_T, phases, tail_truncation(std::norm(z))};
}

std::vector<Complex> fock_coefficients(Complex z, int N) {
    if (N < 1) {
        throw ValidationError("Fock cutoff N must be >= 1");
    }
    std::vector<Complex> c(static_cast<std::size_t>(N) + 1);
    c[0] = std::exp(-0.5 * std::norm(z));
    for (int n = 0; n < N; ++n) {
        c[n + 1] = c[n] * z / std::sqrt(static_cast<double>(n + 1));
    }
    return c;
}

double static_correlation(double zeta_mod2, double omega_t) {
    return std::exp(2.0 * zeta_mod2 * (std::cos(omega_t) - 1.0));
}

double correlation_closed(double z_mod2, double omega_T, double B, std::int64_t cycles_k) {
    if (cycles_k < 0) {
        throw ValidationError("cycle count must be non-negative");
    }
    const long double phase = static_cast<long double>(cycles_k) * (static_cast<long double>(omega_T) + B);
    return std::exp(2.0 * z_mod2 * (static_cast<double>(std::cos(phase)) - 1.0));
}

double correlation_fock(const CoherentConfig& config, std::int64_t cycles_k) {
    if (cycles_k < 0) {
        throw ValidationError("cycle count must be non-negative");
    }
    require_tail(config);
    const auto c = fock_coefficients(config.z, config.truncation_N);
    const auto k = static_cast<long double>(cycles_k);
    Complex sum{};
    for (int n = 0; n <= config.truncation_N; ++n) {
        const auto phase = static_cast<double>(wrap_angle(k * cycle_phase(n, config)));
        sum += std::norm(c[n]) * std::polar(1.0, phase);
    }
    return std::norm(sum);
}

Complex factorized_overlap(const CoherentConfig& config) {
    require_tail(config);
    const double rotation = config.omega * config.cycle_period_T + config.phases.area_B;
    const Complex w = config.z * std::polar(1.0, -rotation);
    const auto cz = fock_coefficients(config.z, config.truncation_N);
    const auto cw = fock_coefficients(w, config.truncation_N);
    Complex sum{};
    for (int n = 0; n <= config.truncation_N; ++n) {
        sum += std::conj(cw[n]) * cz[n] * std::polar(1.0, static_cast<double>(wrap_angle(cycle_phase(n, config))));
    }
    return sum;
}

double phase_factorization_check(const CoherentConfig& config) { return std::abs(factorized_overlap(config)); }

std::vector<double> revival_times(double omega, double B, int p_max) {
    if (!(omega > 0.0) || !std::isfinite(omega)) {
        throw ValidationError("omega must be positive and finite");
    }
    if (p_max < 1) {
        throw ValidationError("p_max must be >= 1");
    }
    std::vector<double> times;
    for (int p = 1; p <= p_max; ++p) {
        const double t = (2.0 * std::numbers::pi * p - B) / omega;
        if (t > 0.0) {
            times.push_back(t);
        }
    }
    if (times.empty()) {
        throw ValidationError("no positive revival time for p <= " + std::to_string(p_max) +
                              " (B=" + std::to_string(B) + ")");
    }
    return times;
}

double near_revival_bound(double z_mod2, double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 0.5)) {
        throw ValidationError("window epsilon must lie in (0, 1/2)");
    }
    return 1.0 - 4.0 * z_mod2 * std::numbers::pi * std::numbers::pi * epsilon * epsilon;
}

bool is_exact_revival(double phase) { return std::abs(std::cos(phase) - 1.0) <= kExactRevivalTol; }

std::optional<std::string> adiabaticity_warning(double omega, double cycle_period_T) {
    const double wt = omega * cycle_period_T;
    if (wt < kAdiabaticThreshold) {
        return "omega*T = " + std::to_string(wt) + " < 10: adiabatic transport is doubtful";
    }
    return std::nullopt;
}

}  // namespace revivals
