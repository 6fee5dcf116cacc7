#include "revivals/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <numbers>
#include <set>

#include "revivals/circle_arithmetic.hpp"
#include "revivals/coherent_dynamics.hpp"
#include "revivals/error.hpp"
#include "revivals/loop_io.hpp"

namespace revivals {
namespace {

using nlohmann::json;

constexpr double kHannayTol = 1e-12;
constexpr double kFockTol = 1e-10;
constexpr double kFactorizationTol = 1e-10;
constexpr double kExactRevivalTol = 1e-12;
constexpr double kProbabilitySumTol = 1e-12;
constexpr double kIdentityTol = 1e-9;
constexpr double kMeanTol = 1e-9;
constexpr int kRevivalTimesShown = 5;

const std::set<std::string> kConfigKeys = {
    "alpha_loop", "beta_loop",          "omega",         "cycle_period_T", "rotation_number", "z",
    "epsilon",    "iterations",         "correlation_cycles", "orbit_samples", "gamma_levels", "output"};

// Runs one pipeline stage, prefixing any error with the stage name while
// keeping its category (validation vs numerical).
template <typename F>
auto in_stage(const char* stage, F&& body) -> decltype(body()) {
    try {
        return body();
    } catch (const ConfigError& e) {
        throw ConfigError(e.field(), std::string("stage ") + stage + ": " + e.what());
    } catch (const ValidationError& e) {
        throw ValidationError(std::string("stage ") + stage + ": " + e.what());
    } catch (const NumericalError& e) {
        throw NumericalError(std::string("stage ") + stage + ": " + e.what());
    }
}

double number_field(const json& j, const char* key) {
    const json& v = j.at(key);
    if (!v.is_number()) {
        throw ConfigError(key, "expected a number");
    }
    return v.get<double>();
}

std::int64_t integer_field(const json& j, const char* key) {
    const json& v = j.at(key);
    if (!v.is_number_integer()) {
        throw ConfigError(key, "expected an integer");
    }
    return v.get<std::int64_t>();
}

LoopDescriptor loop_field(const json& j, const char* key, const std::filesystem::path& base_dir) {
    const json& v = j.at(key);
    if (v.is_string()) {
        std::filesystem::path p = v.get<std::string>();
        if (p.is_relative()) p = base_dir / p;
        if (!std::filesystem::exists(p)) {
            throw ConfigError(key, "loop file not found: " + p.string());
        }
        return load_loop_descriptor(p);
    }
    return loop_descriptor_from_json(v, key);
}

void add_check(ExperimentReport& r, std::string name, bool passed, double value, double tolerance) {
    r.checks.push_back({std::move(name), passed, value, tolerance});
}

json check_to_json(const InvariantCheck& c) {
    return {{"name", c.name}, {"passed", c.passed}, {"value", c.value}, {"tolerance", c.tolerance}};
}

}  // namespace

ExperimentConfig parse_config(const json& j, const std::filesystem::path& base_dir) {
    if (!j.is_object()) {
        throw ConfigError("<root>", "config must be a JSON object");
    }
    for (const auto& [key, value] : j.items()) {
        if (!kConfigKeys.contains(key)) {
            throw ConfigError(key, "unknown field");
        }
    }
    ExperimentConfig c;
    if (!j.contains("beta_loop")) {
        throw ConfigError("beta_loop", "missing required field");
    }
    c.beta_loop = loop_field(j, "beta_loop", base_dir);
    if (j.contains("alpha_loop") && !j.at("alpha_loop").is_null()) {
        c.alpha_loop = loop_field(j, "alpha_loop", base_dir);
    }
    if (!j.contains("omega")) {
        throw ConfigError("omega", "missing required field");
    }
    c.omega = number_field(j, "omega");
    if (j.contains("cycle_period_T")) c.cycle_period_T = number_field(j, "cycle_period_T");
    if (j.contains("rotation_number")) c.rotation_number = number_field(j, "rotation_number");
    if (j.contains("z")) {
        const json& z = j.at("z");
        if (z.is_number()) {
            c.z = {z.get<double>(), 0.0};
        } else if (z.is_array() && z.size() == 2 && z[0].is_number() && z[1].is_number()) {
            c.z = {z[0].get<double>(), z[1].get<double>()};
        } else {
            throw ConfigError("z", "expected a number or [re, im]");
        }
    }
    if (!j.contains("epsilon")) {
        throw ConfigError("epsilon", "missing required field");
    }
    c.epsilon = number_field(j, "epsilon");
    if (j.contains("iterations")) c.iterations = integer_field(j, "iterations");
    if (j.contains("correlation_cycles")) c.correlation_cycles = static_cast<int>(integer_field(j, "correlation_cycles"));
    if (j.contains("orbit_samples")) c.orbit_samples = static_cast<int>(integer_field(j, "orbit_samples"));
    if (j.contains("gamma_levels")) c.gamma_levels = static_cast<int>(integer_field(j, "gamma_levels"));
    if (j.contains("output")) {
        const json& o = j.at("output");
        if (!o.is_object()) {
            throw ConfigError("output", "expected an object");
        }
        for (const auto& [key, value] : o.items()) {
            if (key == "dir" && value.is_string()) {
                c.output.dir = value.get<std::string>();
            } else if (key == "format" && value.is_string()) {
                c.output.format = value.get<std::string>();
            } else {
                throw ConfigError("output." + key, "unknown field or wrong type");
            }
        }
    }
    validate_config(c);
    return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError(path.string(), "cannot open config file");
    }
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError(path.string(), std::string("JSON parse error: ") + e.what());
    }
    return parse_config(j, path.parent_path());
}

void apply_overrides(ExperimentConfig& config, const ConfigOverrides& o) {
    if (o.omega) config.omega = *o.omega;
    if (o.cycle_period_T) {
        config.cycle_period_T = o.cycle_period_T;
        config.rotation_number.reset();
    }
    if (o.rotation_number) {
        config.rotation_number = o.rotation_number;
        config.cycle_period_T.reset();
    }
    if (o.epsilon) config.epsilon = *o.epsilon;
    if (o.iterations) config.iterations = *o.iterations;
    if (o.out) config.output.dir = *o.out;
    if (o.format) config.output.format = *o.format;
    validate_config(config);
}

void validate_config(const ExperimentConfig& c) {
    if (!c.beta_loop) throw ConfigError("beta_loop", "missing required field");
    if (!(c.omega > 0.0) || !std::isfinite(c.omega)) throw ConfigError("omega", "must be positive and finite");
    if (c.cycle_period_T.has_value() == c.rotation_number.has_value()) {
        throw ConfigError("cycle_period_T", "exactly one of cycle_period_T or rotation_number is required");
    }
    if (c.cycle_period_T && (!(*c.cycle_period_T > 0.0) || !std::isfinite(*c.cycle_period_T))) {
        throw ConfigError("cycle_period_T", "must be positive and finite");
    }
    if (c.rotation_number && !std::isfinite(*c.rotation_number)) {
        throw ConfigError("rotation_number", "must be finite");
    }
    if (!std::isfinite(c.z.real()) || !std::isfinite(c.z.imag())) throw ConfigError("z", "must be finite");
    if (!(c.epsilon > 0.0 && c.epsilon < 0.5)) throw ConfigError("epsilon", "must lie in (0, 1/2)");
    if (c.iterations < 1 || c.iterations > kMaxReturnIndex) throw ConfigError("iterations", "must be in [1, 1e9]");
    if (c.correlation_cycles < 1) throw ConfigError("correlation_cycles", "must be >= 1");
    if (c.orbit_samples < 0) throw ConfigError("orbit_samples", "must be >= 0");
    if (c.gamma_levels < 2) throw ConfigError("gamma_levels", "must be >= 2");
    if (c.output.format != "json" && c.output.format != "csv") {
        throw ConfigError("output.format", "must be \"json\" or \"csv\"");
    }
}

bool ExperimentReport::all_checks_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const InvariantCheck& c) { return c.passed; });
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
    in_stage("config", [&] { validate_config(config); });
    ExperimentReport r;
    r.omega = config.omega;
    r.z = config.z;
    r.epsilon = config.epsilon;
    r.iterations = config.iterations;
    const double z_mod2 = std::norm(config.z);

    // phase_geometry
    in_stage("phase_geometry", [&] {
        if (config.alpha_loop) {
            const ParametricLoop alpha = loop_from_spec(*config.alpha_loop);
            r.phases.area_A = euclidean_area(alpha);
            r.alpha_orientation = r.phases.area_A >= 0.0 ? "ccw" : "cw";
        }
        const ParametricLoop beta = loop_from_spec(*config.beta_loop);
        r.phases.area_B = hyperbolic_area(beta);
        r.beta_orientation = euclidean_area(beta) >= 0.0 ? "ccw" : "cw";
        for (int n = 0; n < config.gamma_levels; ++n) {
            r.gamma.push_back(berry_phase(n, r.phases));
        }
    });
    const double A = r.phases.area_A;
    const double B = r.phases.area_B;
    const double scale = std::max({1.0, std::abs(A), std::abs(B)});
    const double hannay_gap = std::abs((r.gamma[0] - r.gamma[1]) - B);
    add_check(r, "hannay_angle_consistency", hannay_gap <= kHannayTol * scale, hannay_gap, kHannayTol * scale);
    const PhaseData back = areas_from_phases(r.gamma[0], r.gamma[1]);
    const double roundtrip = std::abs(back.area_A - A) + std::abs(back.area_B - B);
    add_check(r, "phase_roundtrip", roundtrip <= kHannayTol * scale, roundtrip, kHannayTol * scale);

    // coherent_dynamics
    in_stage("coherent_dynamics", [&] {
        r.cycle_period_T = config.cycle_period_T
                               ? *config.cycle_period_T
                               : (2.0 * std::numbers::pi * *config.rotation_number - B) / config.omega;
        if (!(r.cycle_period_T > 0.0)) {
            throw ValidationError("rotation_number gives a non-positive cycle period T=" +
                                  std::to_string(r.cycle_period_T));
        }
        if (auto w = adiabaticity_warning(config.omega, r.cycle_period_T)) {
            r.warnings.push_back(*w);
        }
        if (std::abs(config.z) > 4.0) {
            r.warnings.push_back("|z| > 4: outside the range the Fock truncation rule is tuned for");
        }
        const double omega_T = config.omega * r.cycle_period_T;
        r.revival_phase = omega_T + B;
        r.nearest_p = std::llround(r.revival_phase / (2.0 * std::numbers::pi));
        r.revival_residual = r.revival_phase - 2.0 * std::numbers::pi * static_cast<double>(r.nearest_p);
        r.exact_revival = is_exact_revival(r.revival_phase);
        try {
            r.revival_times = revival_times(config.omega, B, kRevivalTimesShown);
        } catch (const ValidationError&) {
            r.warnings.push_back("no positive revival time for p <= 5");
        }

        r.near_revival_bound = near_revival_bound(z_mod2, config.epsilon);
        const auto coherent = CoherentConfig::with_tail_rule(config.z, config.omega, r.cycle_period_T, r.phases);
        double min_corr = 1.0, max_corr = 0.0;
        for (std::int64_t k = 1; k <= config.correlation_cycles; ++k) {
            const CorrelationRow row{k, correlation_closed(z_mod2, omega_T, B, k), correlation_fock(coherent, k)};
            r.max_correlation_discrepancy = std::max(r.max_correlation_discrepancy, std::abs(row.closed - row.fock));
            min_corr = std::min(min_corr, row.closed);
            max_corr = std::max(max_corr, row.closed);
            r.correlation_series.push_back(row);
        }
        r.factorization_modulus = phase_factorization_check(coherent);
        add_check(r, "fock_vs_closed_correlation", r.max_correlation_discrepancy <= kFockTol,
                  r.max_correlation_discrepancy, kFockTol);
        const double fact_gap = std::abs(r.factorization_modulus - 1.0);
        add_check(r, "phase_factorization", fact_gap <= kFactorizationTol, fact_gap, kFactorizationTol);
        add_check(r, "correlation_in_unit_interval", min_corr > 0.0 && max_corr <= 1.0, min_corr, 0.0);
        if (r.exact_revival) {
            add_check(r, "exact_revival_correlation", 1.0 - min_corr <= kExactRevivalTol, 1.0 - min_corr,
                      kExactRevivalTol);
        }
    });

    // rotation_map
    in_stage("rotation_map", [&] {
        const double theta0 = config.z == Complex{} ? 0.0 : std::arg(config.z);
        r.rotation = rotation_params(config.omega, r.cycle_period_T, B, theta0, config.epsilon);
        r.classification = classify(r.rotation.Delta);
        if (r.classification.kind == RotationClass::Kind::integer) {
            r.warnings.push_back("integer rotation number: every cycle is an exact revival; gap statistics skipped");
        } else if (r.classification.kind == RotationClass::Kind::rational) {
            r.warnings.push_back("rational rotation number " + std::to_string(r.classification.p) + "/" +
                                 std::to_string(r.classification.q) +
                                 ": periodic orbit, analytic three-gap weights not applicable");
        }
    });

    if (r.classification.kind == RotationClass::Kind::integer) {
        return r;
    }

    // gap_statistics
    in_stage("gap_statistics", [&] {
        const double delta = r.rotation.delta;
        const double eps = config.epsilon;
        if (r.classification.kind == RotationClass::Kind::irrational) {
            r.analytic_gaps = gap_distribution(delta, eps);
            const auto& g = *r.analytic_gaps;
            r.identity_residual = verify_identity(g.k1, g.k2, delta);
            r.analytic_mean_gap = mean_recurrence(g);
            const double sum = g.f_k1 + g.f_k2 + g.f_k1_plus_k2;
            add_check(r, "gap_probabilities_sum", std::abs(sum - 1.0) <= kProbabilitySumTol, std::abs(sum - 1.0),
                      kProbabilitySumTol);
            const double min_f = std::min({g.f_k1, g.f_k2, g.f_k1_plus_k2});
            add_check(r, "gap_probabilities_nonnegative", min_f >= 0.0, min_f, 0.0);
            add_check(r, "identity_residual", std::abs(r.identity_residual) < kIdentityTol,
                      std::abs(r.identity_residual), kIdentityTol);
            const double mean_gap = std::abs(r.analytic_mean_gap - 1.0 / eps);
            add_check(r, "analytic_mean_gap", mean_gap <= kMeanTol, mean_gap, kMeanTol);
        }

        const auto& cls = r.classification;
        const RecurrenceRecord rec = cls.kind == RotationClass::Kind::rational
                                         ? empirical_gaps(cls.p, cls.q, eps, config.iterations)
                                         : empirical_gaps(delta, eps, config.iterations);
        EmpiricalSummary e;
        e.iterations = config.iterations;
        e.hit_count = static_cast<std::int64_t>(rec.hit_indices.size());
        e.transient_discarded = rec.transient_discarded;
        e.gap_counts.assign(rec.gap_counts.begin(), rec.gap_counts.end());
        e.mean_gap = rec.mean_gap();
        e.standard_error = rec.mean_gap_standard_error();
        const double omega_T = config.omega * r.cycle_period_T;
        for (std::int64_t k : rec.hit_indices) {
            e.min_hit_correlation = std::min(e.min_hit_correlation, correlation_closed(z_mod2, omega_T, B, k));
        }
        add_check(r, "near_revival_bound", e.min_hit_correlation > r.near_revival_bound,
                  e.min_hit_correlation - r.near_revival_bound, 0.0);

        if (r.analytic_gaps) {
            const auto& g = *r.analytic_gaps;
            std::int64_t outside = 0;
            for (const auto& [gap, count] : rec.gap_counts) {
                if (gap != g.k1 && gap != g.k2 && gap != g.k1 + g.k2) outside += count;
            }
            add_check(r, "empirical_gaps_within_three", outside == 0, static_cast<double>(outside), 0.0);
            if (rec.gap_total() > 0) {
                const double dev = std::abs(e.mean_gap - 1.0 / eps);
                const double tol = 3.0 * e.standard_error + kMeanTol;
                add_check(r, "empirical_mean_gap", dev <= tol, dev, tol);
            }
        }

        const auto samples = std::min<std::int64_t>(config.orbit_samples, config.iterations);
        for (std::int64_t k = 1; k <= samples; ++k) {
            const bool hit = std::binary_search(rec.hit_indices.begin(), rec.hit_indices.end(), k);
            r.orbit_angles.push_back({k, iterate(r.rotation.theta0, r.rotation.Delta, k), hit});
        }
        r.empirical = std::move(e);
    });
    return r;
}

json report_to_json(const ExperimentReport& r) {
    json j;
    j["config"] = {{"omega", r.omega},
                   {"cycle_period_T", r.cycle_period_T},
                   {"z", {r.z.real(), r.z.imag()}},
                   {"epsilon", r.epsilon},
                   {"iterations", r.iterations}};
    j["phases"] = {{"area_A", r.phases.area_A},
                   {"area_B", r.phases.area_B},
                   {"alpha_orientation", r.alpha_orientation},
                   {"beta_orientation", r.beta_orientation},
                   {"gamma", r.gamma}};
    j["revival_condition"] = {{"phase", r.revival_phase},
                              {"nearest_p", r.nearest_p},
                              {"residual", r.revival_residual},
                              {"exact_revival", r.exact_revival},
                              {"revival_times", r.revival_times}};
    json series = json::array();
    for (const auto& row : r.correlation_series) {
        series.push_back({{"k", row.k}, {"closed", row.closed}, {"fock", row.fock}});
    }
    j["correlation"] = {{"near_revival_bound", r.near_revival_bound},
                        {"max_abs_discrepancy", r.max_correlation_discrepancy},
                        {"factorization_modulus", r.factorization_modulus},
                        {"series", series}};
    const auto& c = r.classification;
    json cls = {{"kind", to_string(c.kind)}};
    if (c.kind != RotationClass::Kind::irrational) {
        cls["p"] = c.p;
        cls["q"] = c.q;
        cls["period"] = *c.period();
    }
    j["rotation"] = {{"Delta", r.rotation.Delta},
                     {"int_part", r.rotation.int_part},
                     {"delta", r.rotation.delta},
                     {"theta0", r.rotation.theta0},
                     {"epsilon", r.rotation.epsilon},
                     {"classification", cls}};

    json gaps;
    if (r.analytic_gaps) {
        const auto& g = *r.analytic_gaps;
        json entries = json::array();
        for (const auto& e : g.entries()) entries.push_back({{"gap", e.gap}, {"F", e.probability}});
        gaps["analytic"] = {{"k1", g.k1},
                            {"k2", g.k2},
                            {"frac_k1", static_cast<double>(g.frac_k1)},
                            {"frac_k2", static_cast<double>(g.frac_k2)},
                            {"F_k1", g.f_k1},
                            {"F_k2", g.f_k2},
                            {"F_k1_plus_k2", g.f_k1_plus_k2},
                            {"distribution", entries},
                            {"identity_residual", r.identity_residual},
                            {"mean_gap", r.analytic_mean_gap}};
    } else {
        gaps["analytic"] = nullptr;
    }
    if (r.empirical) {
        const auto& e = *r.empirical;
        json counts = json::array();
        const double total = [&] {
            double t = 0.0;
            for (const auto& [gap, n] : e.gap_counts) t += static_cast<double>(n);
            return t;
        }();
        for (const auto& [gap, n] : e.gap_counts) {
            counts.push_back({{"gap", gap}, {"count", n}, {"frequency", total > 0 ? n / total : 0.0}});
        }
        gaps["empirical"] = {{"iterations", e.iterations},
                             {"hit_count", e.hit_count},
                             {"transient_discarded", e.transient_discarded},
                             {"gaps", counts},
                             {"mean_gap", e.mean_gap},
                             {"standard_error", e.standard_error},
                             {"min_hit_correlation", e.min_hit_correlation}};
    } else {
        gaps["empirical"] = nullptr;
    }
    j["gaps"] = gaps;

    if (r.empirical) {
        json orbit = json::array();
        for (const auto& s : r.orbit_angles) orbit.push_back({s.k, s.theta, s.is_hit});
        j["orbit_angles"] = orbit;
    } else {
        j["orbit_angles"] = nullptr;
    }
    j["warnings"] = r.warnings;
    json checks = json::array();
    for (const auto& chk : r.checks) checks.push_back(check_to_json(chk));
    j["checks"] = checks;
    j["status"] = r.all_checks_passed() ? "ok" : "contract-violation";
    return j;
}

ExperimentReport report_from_json(const json& j) {
    try {
        ExperimentReport r;
        const json& cfg = j.at("config");
        r.omega = cfg.at("omega").get<double>();
        r.cycle_period_T = cfg.at("cycle_period_T").get<double>();
        r.z = {cfg.at("z")[0].get<double>(), cfg.at("z")[1].get<double>()};
        r.epsilon = cfg.at("epsilon").get<double>();
        r.iterations = cfg.at("iterations").get<std::int64_t>();

        const json& ph = j.at("phases");
        r.phases = {ph.at("area_A").get<double>(), ph.at("area_B").get<double>()};
        r.alpha_orientation = ph.at("alpha_orientation").get<std::string>();
        r.beta_orientation = ph.at("beta_orientation").get<std::string>();
        r.gamma = ph.at("gamma").get<std::vector<double>>();

        const json& rc = j.at("revival_condition");
        r.revival_phase = rc.at("phase").get<double>();
        r.nearest_p = rc.at("nearest_p").get<std::int64_t>();
        r.revival_residual = rc.at("residual").get<double>();
        r.exact_revival = rc.at("exact_revival").get<bool>();
        r.revival_times = rc.at("revival_times").get<std::vector<double>>();

        const json& co = j.at("correlation");
        r.near_revival_bound = co.at("near_revival_bound").get<double>();
        r.max_correlation_discrepancy = co.at("max_abs_discrepancy").get<double>();
        r.factorization_modulus = co.at("factorization_modulus").get<double>();
        for (const auto& row : co.at("series")) {
            r.correlation_series.push_back(
                {row.at("k").get<std::int64_t>(), row.at("closed").get<double>(), row.at("fock").get<double>()});
        }

        const json& ro = j.at("rotation");
        r.rotation.Delta = ro.at("Delta").get<double>();
        r.rotation.int_part = ro.at("int_part").get<std::int64_t>();
        r.rotation.delta = ro.at("delta").get<double>();
        r.rotation.theta0 = ro.at("theta0").get<double>();
        r.rotation.epsilon = ro.at("epsilon").get<double>();
        const json& cls = ro.at("classification");
        const auto kind = cls.at("kind").get<std::string>();
        if (kind == "integer") {
            r.classification = {RotationClass::Kind::integer, cls.at("p").get<std::int64_t>(), 1};
        } else if (kind == "rational") {
            r.classification = {RotationClass::Kind::rational, cls.at("p").get<std::int64_t>(),
                                cls.at("q").get<std::int64_t>()};
        } else {
            r.classification = {RotationClass::Kind::irrational, 0, 0};
        }

        const json& gaps = j.at("gaps");
        if (!gaps.at("analytic").is_null()) {
            const json& a = gaps.at("analytic");
            GapDistribution g;
            g.k1 = a.at("k1").get<std::int64_t>();
            g.k2 = a.at("k2").get<std::int64_t>();
            g.frac_k1 = a.at("frac_k1").get<double>();
            g.frac_k2 = a.at("frac_k2").get<double>();
            g.f_k1 = a.at("F_k1").get<double>();
            g.f_k2 = a.at("F_k2").get<double>();
            g.f_k1_plus_k2 = a.at("F_k1_plus_k2").get<double>();
            g.epsilon = r.epsilon;
            g.delta = r.rotation.delta;
            r.identity_residual = a.at("identity_residual").get<double>();
            r.analytic_mean_gap = a.at("mean_gap").get<double>();
            r.analytic_gaps = g;
        }
        if (!gaps.at("empirical").is_null()) {
            const json& e = gaps.at("empirical");
            EmpiricalSummary s;
            s.iterations = e.at("iterations").get<std::int64_t>();
            s.hit_count = e.at("hit_count").get<std::int64_t>();
            s.transient_discarded = e.at("transient_discarded").get<std::int64_t>();
            for (const auto& g : e.at("gaps")) {
                s.gap_counts.emplace_back(g.at("gap").get<std::int64_t>(), g.at("count").get<std::int64_t>());
            }
            s.mean_gap = e.at("mean_gap").get<double>();
            s.standard_error = e.at("standard_error").get<double>();
            s.min_hit_correlation = e.at("min_hit_correlation").get<double>();
            r.empirical = s;
        }
        if (!j.at("orbit_angles").is_null()) {
            for (const auto& s : j.at("orbit_angles")) {
                r.orbit_angles.push_back({s[0].get<std::int64_t>(), s[1].get<double>(), s[2].get<bool>()});
            }
        }
        r.warnings = j.at("warnings").get<std::vector<std::string>>();
        for (const auto& c : j.at("checks")) {
            r.checks.push_back({c.at("name").get<std::string>(), c.at("passed").get<bool>(),
                                c.at("value").get<double>(), c.at("tolerance").get<double>()});
        }
        return r;
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed report: ") + e.what());
    }
}

std::string serialize_report(const ExperimentReport& report) { return report_to_json(report).dump(2) + "\n"; }

}  // namespace revivals
