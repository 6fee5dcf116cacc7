#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "revivals/phase_geometry.hpp"

namespace revivals {

// The coherent state is carried only as Fock coefficients over the
// (abstract, orthonormal) adiabatic eigenbasis. Over one cycle of period T
// level n picks up exp(i(γ_n − (n + 1/2)ωT)): geometric phase minus
// dynamical phase.

/// Fock cutoff for |z|²: ceil(|z|² + 10·sqrt(|z|² + 1) + 20). The Poisson
/// tail beyond it is far below 1e-12 for |z| ≤ 4.
int tail_truncation(double z_mod2);

struct CoherentConfig {
    Complex z{0.0, 0.0};
    double omega = 1.0;
    double cycle_period_T = 1.0;
    PhaseData phases{};
    int truncation_N = 20;

    /// Config with truncation_N set by tail_truncation(|z|²).
    static CoherentConfig with_tail_rule(Complex z, double omega, double cycle_period_T, PhaseData phases);
};

/// c_n = exp(−|z|²/2) zⁿ/√(n!) for n = 0..N, by c_{n+1} = c_n·z/√(n+1).
std::vector<Complex> fock_coefficients(Complex z, int N);

/// Static oscillator autocorrelation exp(2|ζ|²(cos ωt − 1)).
double static_correlation(double zeta_mod2, double omega_t);

/// exp(2|z|²(cos(k(ωT + B)) − 1)): the autocorrelation after k cycles.
double correlation_closed(double z_mod2, double omega_T, double B, std::int64_t cycles_k);

/// The same autocorrelation summed over the truncated Fock series,
/// |Σ |c_n|² exp(ik(γ_n − (n + 1/2)ωT))|². Throws NumericalError when
/// truncation_N is below the tail rule.
double correlation_fock(const CoherentConfig& config, std::int64_t cycles_k);

/// Overlap ⟨w|z(T)⟩ with w = z·exp(−i(ωT + B)), both sides expanded to
/// truncation_N. Equals exp(i(γ0 − ωT/2)) up to truncation error.
Complex factorized_overlap(const CoherentConfig& config);

/// |factorized_overlap(config)|; 1 up to truncation error.
double phase_factorization_check(const CoherentConfig& config);

/// T_p = (2πp − B)/ω for p = 1..p_max, non-positive values dropped.
/// Throws ValidationError if nothing is left.
std::vector<double> revival_times(double omega, double B, int p_max);

/// 1 − 4|z|²π²ε², the near-revival lower bound for window hits.
double near_revival_bound(double z_mod2, double epsilon);

/// True when |cos(phase) − 1| ≤ 1e-12.
bool is_exact_revival(double phase);

/// Advisory message when ωT < 10 (adiabatic regime doubtful).
std::optional<std::string> adiabaticity_warning(double omega, double cycle_period_T);

}  // namespace revivals
