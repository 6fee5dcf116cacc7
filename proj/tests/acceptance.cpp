// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "revivals/circle_arithmetic.hpp"
#include "revivals/coherent_dynamics.hpp"
#include "revivals/gap_statistics.hpp"
#include "revivals/phase_geometry.hpp"
#include "revivals/rotation_map.hpp"
#include "test_support.hpp"

using namespace revivals;
using std::numbers::pi;

namespace {

struct Outcome {
    bool passed = false;
    std::string detail;
};

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

// Gap runs shared by criteria 5, 7 and 8.
struct NamedRun {
    const char* label;
    double delta;
    double epsilon;
    std::vector<std::int64_t> gaps;
    std::vector<double> frequencies;  // expected, ordered with gaps
    RecurrenceRecord record;
};

std::vector<NamedRun>& named_runs() {
    static std::vector<NamedRun> runs = [] {
        std::vector<NamedRun> r{
            {"1/pi", 1.0 / pi, 0.1, {3, 16, 19}, {0.5493, 0.0704, 0.3803}, {}},
            {"sqrt2-1", std::sqrt(2.0) - 1.0, 0.15, {5, 7, 12}, {0.5262, 0.3299, 0.1439}, {}},
        };
        for (auto& run : r) run.record = empirical_gaps(run.delta, run.epsilon, 1'000'000);
        return r;
    }();
    return runs;
}

// Identity / mean suite: (δ, ε) pairs with δ not flagged rational.
std::vector<std::pair<double, double>> sampled_pairs() {
    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> ud(0.0, 1.0), ue(0.01, 0.45);
    std::vector<std::pair<double, double>> out;
    while (out.size() < 1000) {
        const double d = ud(gen);
        const double e = ue(gen);
        if (d == 0.0 || classify(d).kind != RotationClass::Kind::irrational) continue;
        out.emplace_back(d, e);
    }
    return out;
}

Outcome hyperbolic_area_oracle() {
    const auto loop = loop_from_spec(CircleSpec{{0, 0}, 0.5, 10000, Orientation::ccw});
    const double b = hyperbolic_area(loop);
    const double analytic = pi * (std::cosh(1.0) - 1.0);
    const double polar = testkit::disk_invariant_area({0, 0}, 0.5);
    // Off-center disk, where the polar quadrature is a genuine 2-D integral.
    const auto off = loop_from_spec(CircleSpec{{0.9, 0.4}, 0.3, 10000, Orientation::ccw});
    const double b_off = hyperbolic_area(off);
    const double polar_off = testkit::disk_invariant_area({0.9, 0.4}, 0.3, 20000);
    const double rel = std::max({std::abs(b - analytic) / analytic, std::abs(b - polar) / polar,
                                 std::abs(b_off - polar_off) / polar_off});
    return {rel < 1e-6, "B=" + fmt("%.12g", b) + " analytic=" + fmt("%.12g", analytic) + " max rel err=" +
                            fmt("%.2e", rel)};
}

Outcome hannay_consistency() {
    std::mt19937_64 gen(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst = 0.0;
    bool roundtrip_exact = true;
    for (int i = 0; i < 100; ++i) {
        LoopDescriptor spec;
        const Complex c(u(gen) * 1.6 - 0.8, u(gen) * 1.6 - 0.8);
        switch (i % 3) {
            case 0: spec = CircleSpec{c, 0.05 + 0.6 * u(gen), 64 + static_cast<int>(2000 * u(gen)), Orientation::ccw}; break;
            case 1:
                spec = EllipseSpec{c, 0.1 + 0.6 * u(gen), 0.05 + 0.3 * u(gen), 2 * pi * u(gen), 512,
                                   u(gen) < 0.5 ? Orientation::ccw : Orientation::cw};
                break;
            default: {
                std::vector<Complex> v;
                for (int k = 0; k < 7; ++k) v.push_back(c + std::polar(0.2 + 0.4 * u(gen), 2 * pi * k / 7.0));
                spec = PolygonSpec{v, Orientation::ccw};
            }
        }
        const auto beta = loop_from_spec(spec);
        const PhaseData ph{u(gen) * 4 - 2, hyperbolic_area(beta)};
        const double g0 = berry_phase(0, ph), g1 = berry_phase(1, ph);
        worst = std::max(worst, std::abs((g0 - g1) - ph.area_B) / std::max(1.0, std::abs(ph.area_B)));
        const PhaseData back = areas_from_phases(g0, g1);
        // "Exactly" up to the rounding the two affine maps introduce.
        const double scale = std::max({1.0, std::abs(ph.area_A), std::abs(ph.area_B)});
        if (std::abs(back.area_A - ph.area_A) > 1e-14 * scale || std::abs(back.area_B - ph.area_B) > 1e-14 * scale)
            roundtrip_exact = false;
    }
    return {worst <= 1e-12 && roundtrip_exact,
            "max |g0-g1-B|=" + fmt("%.2e", worst) + (roundtrip_exact ? " roundtrip ok" : " roundtrip FAILED")};
}

Outcome correlation_equivalence() {
    const double B = -0.7;
    double worst = 0.0;
    for (double r : {0.5, 1.0, 2.0}) {
        for (int i = 0; i < 50; ++i) {
            const double phase = 0.1 + i * (50.0 / 49.0);  // ωT + B over (0, 50]
            const auto cfg = CoherentConfig::with_tail_rule({r, 0.0}, 1.0, phase - B, {0.25, B});
            for (std::int64_t k = 1; k <= 100; ++k) {
                const double d = std::abs(correlation_fock(cfg, k) - correlation_closed(r * r, cfg.cycle_period_T, B, k));
                worst = std::max(worst, d);
            }
        }
    }
    return {worst <= 1e-10, "max |fock - closed|=" + fmt("%.2e", worst)};
}

Outcome revival_staggering() {
    const auto beta = loop_from_spec(EllipseSpec{{0.3, -0.2}, 0.45, 0.25, 0.6, 4096, Orientation::ccw});
    const double B = hyperbolic_area(beta);
    const double omega = 1.3;
    const auto times = revival_times(omega, B, 5);
    const auto base = revival_times(omega, 0.0, 5);
    double worst_corr = 0.0, worst_shift = 0.0;
    bool ok = times.size() == 5 && base.size() == 5;
    for (std::size_t p = 0; ok && p < times.size(); ++p) {
        const double T = times[p];
        worst_corr = std::max(worst_corr, std::abs(correlation_closed(1.0, omega * T, B, 1) - 1.0));
        worst_shift = std::max(worst_shift, std::abs((times[p] - base[p]) + B / omega));
    }
    ok = ok && worst_corr <= 1e-12 && worst_shift <= 1e-12;
    return {ok, "B=" + fmt("%.9g", B) + " max |C-1|=" + fmt("%.2e", worst_corr) + " max shift err=" +
                    fmt("%.2e", worst_shift)};
}

Outcome three_gap_desk() {
    bool ok = true;
    std::string detail;
    for (const auto& run : named_runs()) {
        std::vector<std::int64_t> seen;
        for (const auto& [gap, count] : run.record.gap_counts) seen.push_back(gap);
        const bool set_ok = seen == run.gaps;
        double worst = 0.0;
        const auto freq = run.record.frequencies();
        for (std::size_t i = 0; set_ok && i < run.gaps.size(); ++i)
            worst = std::max(worst, std::abs(freq.at(run.gaps[i]) - run.frequencies[i]));
        // Analytic weights must agree with the same figures.
        const auto dist = gap_distribution(run.delta, run.epsilon);
        for (std::size_t i = 0; i < run.gaps.size(); ++i)
            worst = std::max(worst, std::abs(dist.probability(run.gaps[i]) - run.frequencies[i]));
        ok = ok && set_ok && worst <= 0.01;
        detail += std::string(run.label) + (set_ok ? " gaps ok" : " gaps WRONG") + " max freq err=" +
                  fmt("%.4f", worst) + "; ";
    }
    return {ok, detail};
}

Outcome identity_suite() {
    double worst = 0.0;
    for (const auto& [d, e] : sampled_pairs()) {
        const auto r = first_return_indices(d, e);
        worst = std::max(worst, std::abs(verify_identity(r.k1, r.k2, d)));
    }
    return {worst < 1e-9, "1000 pairs, max residual=" + fmt("%.2e", worst)};
}

Outcome mean_recurrence_suite() {
    double worst = 0.0;
    for (const auto& [d, e] : sampled_pairs()) {
        worst = std::max(worst, std::abs(mean_recurrence(gap_distribution(d, e)) - 1.0 / e));
    }
    bool ok = worst <= 1e-9;
    std::string detail = "analytic max err=" + fmt("%.2e", worst) + "; ";
    for (const auto& run : named_runs()) {
        const double dev = std::abs(run.record.mean_gap() - 1.0 / run.epsilon);
        const double se = run.record.mean_gap_standard_error();
        ok = ok && dev <= 3.0 * se;
        detail += std::string(run.label) + " mean=" + fmt("%.6f", run.record.mean_gap()) + " (" +
                  fmt("%.2f", se > 0 ? dev / se : 0.0) + " SE); ";
    }
    return {ok, detail};
}

Outcome near_revival_bound_suite() {
    bool ok = true;
    std::string detail;
    for (const auto& run : named_runs()) {
        const double bound = near_revival_bound(1.0, run.epsilon);
        double lowest = 1.0;
        // ωT + B = 2πδ: the correlation after k cycles depends only on {kδ}.
        for (std::int64_t k : run.record.hit_indices)
            lowest = std::min(lowest, correlation_closed(1.0, 2.0 * pi * run.delta, 0.0, k));
        ok = ok && lowest > bound;
        detail += std::string(run.label) + " " + std::to_string(run.record.hit_indices.size()) + " hits, min C=" +
                  fmt("%.6f", lowest) + " > " + fmt("%.6f", bound) + "; ";
    }
    return {ok, detail};
}

Outcome two_gap_case() {
    bool ok = true;
    std::string detail;
    std::vector<std::pair<double, double>> cases{{1.0 / pi, 0.1}, {std::sqrt(2.0) - 1.0, 0.15}, {0.7236067977499789, 0.05}};
    for (const auto& [d, e] : cases) {
        const double eps2 = two_gap_epsilon(d, e);
        const auto dist = gap_distribution(d, eps2);
        const auto rec = empirical_gaps(d, eps2, 1'000'000);
        const bool case_ok = std::abs(dist.f_k1_plus_k2) <= 1e-9 && rec.gap_counts.size() == 2;
        ok = ok && case_ok;
        detail += "eps'=" + fmt("%.6f", eps2) + " F3=" + fmt("%.1e", dist.f_k1_plus_k2) + " gaps=" +
                  std::to_string(rec.gap_counts.size()) + "; ";
    }
    return {ok, detail};
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Outcome determinism() {
    const std::filesystem::path config = std::filesystem::path(REVIVALS_SOURCE_DIR) / "configs/three_gap_inv_pi.json";
    const auto root = std::filesystem::temp_directory_path() / ("revivals_accept_" + std::to_string(::getpid()));
    std::string reports[2];
    for (int i = 0; i < 2; ++i) {
        const auto dir = root / std::to_string(i);
        const std::string cmd = std::string("\"") + REVIVALS_CLI + "\" revivals --config \"" + config.string() +
                                "\" --out \"" + dir.string() + "\" > /dev/null";
        if (std::system(cmd.c_str()) != 0) {
            std::filesystem::remove_all(root);
            return {false, "revivals run " + std::to_string(i) + " failed"};
        }
        reports[i] = slurp(dir / "report.json");
    }
    std::filesystem::remove_all(root);
    const bool same = !reports[0].empty() && reports[0] == reports[1];
    return {same, std::to_string(reports[0].size()) + " bytes, " + (same ? "identical" : "DIFFERENT")};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"hyperbolic area oracle", hyperbolic_area_oracle},
        {"Hannay-angle consistency", hannay_consistency},
        {"correlation oracle equivalence", correlation_equivalence},
        {"revival staggering", revival_staggering},
        {"three-gap theorem at desk scale", three_gap_desk},
        {"first-return identity", identity_suite},
        {"mean recurrence", mean_recurrence_suite},
        {"near-revival bound", near_revival_bound_suite},
        {"two-gap degenerate case", two_gap_case},
        {"determinism", determinism},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = criteria[i].second();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        failures += !out.passed;
        std::printf("%s criterion %zu (%s): %s [%.2fs]\n", out.passed ? "PASS" : "FAIL", i + 1, criteria[i].first,
                    out.detail.c_str(), secs);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
