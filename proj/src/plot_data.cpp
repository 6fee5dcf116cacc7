#include "revivals/plot_data.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "revivals/error.hpp"

namespace revivals {
namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

PlotKind plot_kind_from_string(const std::string& name) {
    if (name == "correlation-series") return PlotKind::correlation_series;
    if (name == "gap-histogram") return PlotKind::gap_histogram;
    if (name == "orbit-angles") return PlotKind::orbit_angles;
    throw ValidationError("unknown plot kind \"" + name + "\" (correlation-series, gap-histogram, orbit-angles)");
}

std::string to_string(PlotKind kind) {
    switch (kind) {
        case PlotKind::correlation_series:
            return "correlation-series";
        case PlotKind::gap_histogram:
            return "gap-histogram";
        case PlotKind::orbit_angles:
            break;
    }
    return "orbit-angles";
}

std::string emit_plot_data(const ExperimentReport& report, PlotKind kind) {
    std::ostringstream out;
    switch (kind) {
        case PlotKind::correlation_series: {
            if (report.correlation_series.empty()) {
                throw ValidationError("report has no correlation series");
            }
            out << "k,correlation_closed,correlation_fock,bound\n";
            for (const auto& row : report.correlation_series) {
                out << row.k << ',' << num(row.closed) << ',' << num(row.fock) << ','
                    << num(report.near_revival_bound) << '\n';
            }
            break;
        }
        case PlotKind::gap_histogram: {
            if (!report.analytic_gaps && !report.empirical) {
                throw ValidationError("report has no gap statistics (no simulation run)");
            }
            std::map<std::int64_t, std::pair<std::optional<double>, std::optional<double>>> rows;
            if (report.analytic_gaps) {
                for (const auto& e : report.analytic_gaps->entries()) rows[e.gap].first = e.probability;
            }
            if (report.empirical) {
                double total = 0.0;
                for (const auto& [gap, n] : report.empirical->gap_counts) total += static_cast<double>(n);
                for (const auto& [gap, n] : report.empirical->gap_counts) {
                    rows[gap].second = total > 0.0 ? static_cast<double>(n) / total : 0.0;
                }
            }
            out << "gap,analytic_F,empirical_frequency\n";
            for (const auto& [gap, cells] : rows) {
                out << gap << ',' << (cells.first ? num(*cells.first) : "") << ','
                    << (cells.second ? num(*cells.second) : "") << '\n';
            }
            break;
        }
        case PlotKind::orbit_angles: {
            if (report.orbit_angles.empty()) {
                throw ValidationError("report has no orbit samples (no simulation run)");
            }
            out << "k,theta_k,is_hit\n";
            for (const auto& s : report.orbit_angles) {
                out << s.k << ',' << num(s.theta) << ',' << (s.is_hit ? 1 : 0) << '\n';
            }
            break;
        }
    }
    return out.str();
}

void write_plot_data(const ExperimentReport& report, PlotKind kind, const std::filesystem::path& path) {
    const std::string csv = emit_plot_data(report, kind);
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ValidationError("cannot write " + path.string());
    }
    out << csv;
}

}  // namespace revivals
