// Command-line front end: phases, revivals, gaps, plot.
//
// Exit status: 0 success, 1 validation error, 2 numerical-contract violation.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "revivals/error.hpp"
#include "revivals/experiment.hpp"
#include "revivals/gap_statistics.hpp"
#include "revivals/loop_io.hpp"
#include "revivals/phase_geometry.hpp"
#include "revivals/plot_data.hpp"
#include "revivals/rotation_map.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace revivals;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitContract = 2;

void write_text(const fs::path& path, const std::string& text) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write " + path.string());
    out << text;
}

// Writes to <out>/<name> when an output directory was given, else stdout.
void emit(const std::optional<fs::path>& out_dir, const std::string& name, const std::string& text) {
    if (out_dir) {
        write_text(*out_dir / name, text);
        std::cerr << "wrote " << (*out_dir / name).string() << "\n";
    } else {
        std::cout << text;
    }
}

std::string fmt(double v) {
    std::ostringstream s;
    s.precision(17);
    s << v;
    return s.str();
}

struct PhasesArgs {
    std::string config;
    std::string alpha_loop;
    std::string beta_loop;
    int levels = 4;
    std::string format = "json";
    std::optional<fs::path> out;
};

int run_phases(const PhasesArgs& a) {
    std::optional<LoopDescriptor> alpha, beta;
    if (!a.config.empty()) {
        const ExperimentConfig cfg = load_config(a.config);
        alpha = cfg.alpha_loop;
        beta = cfg.beta_loop;
    }
    if (!a.alpha_loop.empty()) alpha = load_loop_descriptor(a.alpha_loop);
    if (!a.beta_loop.empty()) beta = load_loop_descriptor(a.beta_loop);
    if (!beta) throw ConfigError("beta_loop", "missing: pass --beta-loop or --config");
    if (a.levels < 1) throw ValidationError("--levels must be >= 1");

    PhaseData phases;
    std::string alpha_orientation = "none";
    if (alpha) {
        phases.area_A = euclidean_area(loop_from_spec(*alpha));
        alpha_orientation = phases.area_A >= 0.0 ? "ccw" : "cw";
    }
    const ParametricLoop beta_loop = loop_from_spec(*beta);
    phases.area_B = hyperbolic_area(beta_loop);
    const std::string beta_orientation = euclidean_area(beta_loop) >= 0.0 ? "ccw" : "cw";

    if (a.format == "csv") {
        std::string text = "n,gamma_n,area_A,area_B\n";
        for (int n = 0; n < a.levels; ++n) {
            text += std::to_string(n) + "," + fmt(berry_phase(n, phases)) + "," + fmt(phases.area_A) + "," +
                    fmt(phases.area_B) + "\n";
        }
        emit(a.out, "phases.csv", text);
    } else {
        json gamma = json::array();
        for (int n = 0; n < a.levels; ++n) gamma.push_back({{"n", n}, {"gamma", berry_phase(n, phases)}});
        const json j = {{"area_A", phases.area_A},
                        {"area_B", phases.area_B},
                        {"alpha_orientation", alpha_orientation},
                        {"beta_orientation", beta_orientation},
                        {"hannay_angle", phases.area_B},
                        {"gamma", gamma}};
        emit(a.out, "phases.json", j.dump(2) + "\n");
    }
    return kExitOk;
}

struct RevivalsArgs {
    std::string config;
    ConfigOverrides overrides;
};

int run_revivals(const RevivalsArgs& a) {
    ExperimentConfig cfg = load_config(a.config);
    apply_overrides(cfg, a.overrides);
    const ExperimentReport report = run_experiment(cfg);
    const fs::path dir = cfg.output.dir;
    write_text(dir / "report.json", serialize_report(report));
    if (cfg.output.format == "csv") {
        for (PlotKind kind : {PlotKind::correlation_series, PlotKind::gap_histogram, PlotKind::orbit_angles}) {
            try {
                write_plot_data(report, kind, dir / (to_string(kind) + ".csv"));
            } catch (const ValidationError&) {
                // series not produced on this run (e.g. integer rotation number)
            }
        }
    }

    std::cout << "A = " << fmt(report.phases.area_A) << "  B = " << fmt(report.phases.area_B) << " ("
              << report.beta_orientation << ")\n"
              << "omega*T + B = " << fmt(report.revival_phase) << "  nearest 2*pi*p: p = " << report.nearest_p
              << "  residual = " << fmt(report.revival_residual) << "\n"
              << (report.exact_revival ? "exact revival condition met\n" : "exact revival condition not met\n")
              << "Delta = " << fmt(report.rotation.Delta) << "  delta = " << fmt(report.rotation.delta) << "  ("
              << to_string(report.classification.kind) << ")\n";
    if (report.analytic_gaps) {
        std::cout << "k1 = " << report.analytic_gaps->k1 << "  k2 = " << report.analytic_gaps->k2 << "\n";
        for (const auto& e : report.analytic_gaps->entries()) {
            std::cout << "  F(" << e.gap << "T) = " << fmt(e.probability) << "\n";
        }
    }
    for (const auto& w : report.warnings) std::cout << "warning: " << w << "\n";
    for (const auto& c : report.checks) {
        std::cout << (c.passed ? "[ok]   " : "[FAIL] ") << c.name << "  value=" << fmt(c.value)
                  << "  tol=" << fmt(c.tolerance) << "\n";
    }
    std::cout << "report: " << (dir / "report.json").string() << "\n";
    return report.all_checks_passed() ? kExitOk : kExitContract;
}

struct GapsArgs {
    double delta = 0.0;
    double epsilon = 0.1;
    std::int64_t iterations = 1'000'000;
    bool fast_path = false;
    std::string format = "json";
    std::optional<fs::path> out;
};

int run_gaps(const GapsArgs& a) {
    if (!(a.delta >= 0.0 && a.delta < 1.0)) throw ValidationError("--delta must lie in [0, 1)");
    const RotationClass cls = classify(a.delta);
    bool ok = true;
    json j = {{"delta", a.delta}, {"epsilon", a.epsilon}, {"classification", to_string(cls.kind)}};
    std::optional<GapDistribution> dist;
    if (cls.kind == RotationClass::Kind::irrational) {
        dist = gap_distribution(a.delta, a.epsilon);
        if (a.fast_path) {
            const FirstReturns fr = first_return_indices(a.delta, a.epsilon, ReturnSearch::continued_fraction);
            const bool agree = fr.k1 == dist->k1 && fr.k2 == dist->k2;
            ok = ok && agree;
            j["fast_path_agrees"] = agree;
        }
        const double residual = verify_identity(dist->k1, dist->k2, a.delta);
        const double mean = mean_recurrence(*dist);
        ok = ok && std::abs(residual) < 1e-9 && std::abs(mean - 1.0 / a.epsilon) <= 1e-9;
        json entries = json::array();
        for (const auto& e : dist->entries()) entries.push_back({{"gap", e.gap}, {"F", e.probability}});
        j["analytic"] = {{"k1", dist->k1},
                         {"k2", dist->k2},
                         {"distribution", entries},
                         {"identity_residual", residual},
                         {"mean_gap", mean}};
    } else {
        j["p"] = cls.p;
        j["q"] = cls.q;
        j["analytic"] = nullptr;
    }
    const RecurrenceRecord rec = cls.kind == RotationClass::Kind::irrational
                                     ? empirical_gaps(a.delta, a.epsilon, a.iterations)
                                     : empirical_gaps(cls.p, cls.q, a.epsilon, a.iterations);
    const auto freq = rec.frequencies();
    json counts = json::array();
    for (const auto& [gap, n] : rec.gap_counts) counts.push_back({{"gap", gap}, {"count", n}, {"frequency", freq.at(gap)}});
    j["empirical"] = {{"iterations", a.iterations},
                      {"hit_count", rec.hit_indices.size()},
                      {"transient_discarded", rec.transient_discarded},
                      {"gaps", counts},
                      {"mean_gap", rec.mean_gap()},
                      {"standard_error", rec.mean_gap_standard_error()}};
    if (dist) {
        for (const auto& [gap, n] : rec.gap_counts) {
            if (gap != dist->k1 && gap != dist->k2 && gap != dist->k1 + dist->k2) ok = false;
        }
    }
    j["status"] = ok ? "ok" : "contract-violation";

    if (a.format == "csv") {
        std::string text = "gap,analytic_F,empirical_frequency\n";
        std::map<std::int64_t, std::pair<std::string, std::string>> rows;
        if (dist) {
            for (const auto& e : dist->entries()) rows[e.gap].first = fmt(e.probability);
        }
        for (const auto& [gap, f] : freq) rows[gap].second = fmt(f);
        for (const auto& [gap, cells] : rows) {
            text += std::to_string(gap) + "," + cells.first + "," + cells.second + "\n";
        }
        emit(a.out, "gaps.csv", text);
    } else {
        emit(a.out, "gaps.json", j.dump(2) + "\n");
    }
    return ok ? kExitOk : kExitContract;
}

struct PlotArgs {
    std::string report;
    std::string kind;
    std::optional<fs::path> out;
};

int run_plot(const PlotArgs& a) {
    const PlotKind kind = plot_kind_from_string(a.kind);
    std::ifstream in(a.report);
    if (!in) throw ValidationError("cannot open report " + a.report);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("report is not valid JSON: ") + e.what());
    }
    const ExperimentReport report = report_from_json(j);
    emit(a.out, to_string(kind) + ".csv", emit_plot_data(report, kind));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Geometric-phase revivals and three-gap recurrence statistics"};
    app.require_subcommand(1);

    PhasesArgs phases;
    auto* phases_cmd = app.add_subcommand("phases", "Loop areas A, B and the Berry phase table");
    phases_cmd->add_option("--config", phases.config, "Experiment config (uses its loops)");
    phases_cmd->add_option("--alpha-loop", phases.alpha_loop, "Loop descriptor file for the alpha plane");
    phases_cmd->add_option("--beta-loop", phases.beta_loop, "Loop descriptor file for the beta plane");
    phases_cmd->add_option("--levels", phases.levels, "Number of Fock levels in the table");
    phases_cmd->add_option("--format", phases.format)->check(CLI::IsMember({"json", "csv"}));
    phases_cmd->add_option("--out", phases.out, "Output directory (default: stdout)");

    RevivalsArgs revivals;
    auto& ov = revivals.overrides;
    auto* revivals_cmd = app.add_subcommand("revivals", "Full pipeline: phases, correlations, rotation map, gaps");
    revivals_cmd->add_option("--config", revivals.config, "Experiment config")->required();
    revivals_cmd->add_option("--omega", ov.omega);
    revivals_cmd->add_option("--cycle-period-t", ov.cycle_period_T);
    revivals_cmd->add_option("--rotation-number", ov.rotation_number);
    revivals_cmd->add_option("--epsilon", ov.epsilon);
    revivals_cmd->add_option("--iterations", ov.iterations);
    revivals_cmd->add_option("--out", ov.out, "Output directory");
    revivals_cmd->add_option("--format", ov.format, "json: report only; csv: report plus plot data")
        ->check(CLI::IsMember({"json", "csv"}));

    GapsArgs gaps;
    auto* gaps_cmd = app.add_subcommand("gaps", "Analytic and empirical gap distribution for (delta, epsilon)");
    gaps_cmd->add_option("--delta", gaps.delta, "Fractional rotation in [0, 1)")->required();
    gaps_cmd->add_option("--epsilon", gaps.epsilon);
    gaps_cmd->add_option("--iterations", gaps.iterations);
    gaps_cmd->add_flag("--fast-path", gaps.fast_path, "Cross-check first returns via continued fractions");
    gaps_cmd->add_option("--format", gaps.format)->check(CLI::IsMember({"json", "csv"}));
    gaps_cmd->add_option("--out", gaps.out, "Output directory (default: stdout)");

    PlotArgs plot;
    auto* plot_cmd = app.add_subcommand("plot", "Extract CSV plot data from a report");
    plot_cmd->add_option("--report", plot.report, "report.json from `revivals`")->required();
    plot_cmd->add_option("--kind", plot.kind, "correlation-series | gap-histogram | orbit-angles")->required();
    plot_cmd->add_option("--out", plot.out, "Output directory (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitValidation;
    }

    try {
        if (*phases_cmd) return run_phases(phases);
        if (*revivals_cmd) return run_revivals(revivals);
        if (*gaps_cmd) return run_gaps(gaps);
        if (*plot_cmd) return run_plot(plot);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const NumericalError& e) {
        std::cerr << "numerical contract violation: " << e.what() << "\n";
        return kExitContract;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitOk;
}
