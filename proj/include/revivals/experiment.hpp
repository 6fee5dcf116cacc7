#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "revivals/gap_statistics.hpp"
#include "revivals/phase_geometry.hpp"
#include "revivals/rotation_map.hpp"

namespace revivals {

struct OutputOptions {
    std::filesystem::path dir = "out";
    std::string format = "json";  // json | csv
};

/// One pipeline run. The cycle period is given either directly or through
/// a target rotation number Δ, in which case T = (2πΔ − B)/ω once B is known.
struct ExperimentConfig {
    std::optional<LoopDescriptor> alpha_loop;  // absent: α held at zero, A = 0
    std::optional<LoopDescriptor> beta_loop;
    double omega = 1.0;
    std::optional<double> cycle_period_T;
    std::optional<double> rotation_number;
    Complex z{1.0, 0.0};
    double epsilon = 0.1;
    std::int64_t iterations = 1'000'000;
    int correlation_cycles = 100;
    int orbit_samples = 1000;
    int gamma_levels = 4;
    OutputOptions output;
};

/// Command-line overrides; each replaces the config field of the same name.
struct ConfigOverrides {
    std::optional<double> omega;
    std::optional<double> cycle_period_T;
    std::optional<double> rotation_number;
    std::optional<double> epsilon;
    std::optional<std::int64_t> iterations;
    std::optional<std::filesystem::path> out;
    std::optional<std::string> format;
};

/// Loop descriptors given as strings are file paths relative to base_dir.
ExperimentConfig parse_config(const nlohmann::json& j, const std::filesystem::path& base_dir);
ExperimentConfig load_config(const std::filesystem::path& path);
void apply_overrides(ExperimentConfig& config, const ConfigOverrides& overrides);

/// Structural checks shared by load and override paths.
void validate_config(const ExperimentConfig& config);

struct InvariantCheck {
    std::string name;
    bool passed = false;
    double value = 0.0;
    double tolerance = 0.0;
};

struct CorrelationRow {
    std::int64_t k = 0;
    double closed = 0.0;
    double fock = 0.0;
};

struct OrbitSample {
    std::int64_t k = 0;
    double theta = 0.0;
    bool is_hit = false;
};

struct EmpiricalSummary {
    std::int64_t iterations = 0;
    std::int64_t hit_count = 0;
    std::int64_t transient_discarded = 0;
    std::vector<std::pair<std::int64_t, std::int64_t>> gap_counts;
    double mean_gap = 0.0;
    double standard_error = 0.0;
    double min_hit_correlation = 1.0;
};

struct ExperimentReport {
    // echo of the resolved inputs
    double omega = 0.0;
    double cycle_period_T = 0.0;
    Complex z{};
    double epsilon = 0.0;
    std::int64_t iterations = 0;

    // phase geometry
    PhaseData phases{};
    std::string alpha_orientation = "none";
    std::string beta_orientation;
    std::vector<double> gamma;  // γ_0, γ_1, ...

    // revival condition
    double revival_phase = 0.0;  // ωT + B
    std::int64_t nearest_p = 0;
    double revival_residual = 0.0;  // ωT + B − 2πp
    bool exact_revival = false;
    std::vector<double> revival_times;

    // correlations
    double near_revival_bound = 0.0;
    double max_correlation_discrepancy = 0.0;
    double factorization_modulus = 0.0;
    std::vector<CorrelationRow> correlation_series;

    // rotation map
    RotationParams rotation{};
    RotationClass classification{};

    std::optional<GapDistribution> analytic_gaps;
    double identity_residual = 0.0;
    double analytic_mean_gap = 0.0;
    std::optional<EmpiricalSummary> empirical;
    std::vector<OrbitSample> orbit_angles;

    std::vector<std::string> warnings;
    std::vector<InvariantCheck> checks;

    bool all_checks_passed() const;
};

/// phase_geometry → coherent_dynamics → rotation_map → gap_statistics.
/// Errors are rethrown with the failing stage named. Invariant failures do
/// not throw; they are recorded in `checks`.
ExperimentReport run_experiment(const ExperimentConfig& config);

nlohmann::json report_to_json(const ExperimentReport& report);
ExperimentReport report_from_json(const nlohmann::json& j);

/// Canonical serialized form; byte-identical for identical configs.
std::string serialize_report(const ExperimentReport& report);

}  // namespace revivals
