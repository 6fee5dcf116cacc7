#pragma once

#include <filesystem>
#include <string>

#include "revivals/experiment.hpp"

namespace revivals {

enum class PlotKind { correlation_series, gap_histogram, orbit_angles };

/// "correlation-series", "gap-histogram" or "orbit-angles".
PlotKind plot_kind_from_string(const std::string& name);
std::string to_string(PlotKind kind);

/// CSV with a one-line header:
///   correlation-series: k,correlation_closed,correlation_fock,bound
///   gap-histogram:      gap,analytic_F,empirical_frequency   (empty cell when absent)
///   orbit-angles:       k,theta_k,is_hit
/// Throws ValidationError when the report lacks the series.
std::string emit_plot_data(const ExperimentReport& report, PlotKind kind);

void write_plot_data(const ExperimentReport& report, PlotKind kind, const std::filesystem::path& path);

}  // namespace revivals
