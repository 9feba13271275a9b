// Acceptance suite: one pass/fail line per criterion, all tolerances
// pinned in code. Exit status is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "hypls/experiments.hpp"
#include "hypls/metrics.hpp"
#include "hypls/surface_io.hpp"

using namespace hypls;

namespace {

int failures = 0;

void line(const std::string& name, bool pass, const std::string& detail = "") {
    std::printf("[%s] %s%s%s\n", pass ? "PASS" : "FAIL", name.c_str(),
                detail.empty() ? "" : " - ", detail.c_str());
    if (!pass) ++failures;
}

double now_s() {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

Surface fhs(double beta, double b0, double b1, double b2, double b3, double twist) {
    SurfaceSpec spec;
    spec.kind = TemplateKind::FourHoledSphere;
    Rule table;
    table.kind = Rule::Kind::Table;
    table.c = 1.0;
    table.table = {{0, b0}, {1, b1}, {2, b2}, {3, b3}};
    spec.lengths = {{0, Rule::constant(beta)}, {1, table}};
    spec.twists = {{0, Rule::constant(twist)}};
    return build_template(spec);
}

// 1. Holonomy lengths of pants curves reproduce the length rules.
void criterion_1() {
    const double t0 = now_s();
    const Surface flute = build_template(TemplateKind::Flute, {{0, Rule::harmonic(1.0)}}, {});
    const Surface ladder = build_template(
        TemplateKind::Ladder,
        {{0, Rule::constant(0.7)}, {1, Rule::constant(1.2)}, {2, Rule::constant(0.9)}}, {});
    const Surface tripod = build_template(
        TemplateKind::Tripod,
        {{0, Rule::harmonic(1.0)}, {1, Rule::power(1.0)}, {2, Rule::power(2.0)}}, {});

    std::mt19937_64 rng(414213562);
    std::uniform_int_distribution<std::int64_t> flute_idx(1, 200), ladder_idx(-200, 200),
        tripod_idx(1, 20);
    std::uniform_int_distribution<int> fam3(0, 2);
    bool ok = true;
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        double want = 0.0, got = 0.0;
        switch (trial % 3) {
            case 0: {
                const std::int64_t i = flute_idx(rng);
                want = 1.0 / static_cast<double>(i);
                got = geodesic_length(flute, Curve::pants({0, i})).value;
                break;
            }
            case 1: {
                const std::int64_t i = ladder_idx(rng);
                const int fam = fam3(rng);
                want = fam == 0 ? 0.7 : fam == 1 ? 1.2 : 0.9;
                got = geodesic_length(ladder, Curve::pants({fam, i})).value;
                break;
            }
            case 2: {
                const std::int64_t i = tripod_idx(rng);
                const int fam = fam3(rng);
                const double di = static_cast<double>(i);
                want = fam == 0 ? 1.0 / di : fam == 1 ? di : di * di;
                got = geodesic_length(tripod, Curve::pants({fam, i})).value;
                break;
            }
        }
        worst = std::max(worst, std::abs(got - want) / want);
        if (std::abs(got - want) > 1e-9 * want) ok = false;
    }
    const double dt = now_s() - t0;
    line("criterion 1: pants-curve lengths match the rules (50 random, rel 1e-9)",
         ok && dt < 10.0, "worst rel err " + format_g17(worst) + ", " + format_g17(dt) + " s");
}

// 2. A single global sign makes structure twists and curve twists agree.
void criterion_2() {
    const int sign = calibrated_twist_sign();
    const double betas[5] = {0.6, 0.9, 1.2, 1.6, 2.0};
    const double bs[5] = {0.6, 0.9, 1.2, 1.6, 2.0};
    bool ok = (sign == 1 || sign == -1);
    double worst = 0.0;
    for (double beta : betas)
        for (double b : bs)
            for (int tstep = 0; tstep < 7; ++tstep) {
                const double twist = beta * tstep / 7.0;
                const Surface s = fhs(beta, b, b, b, b, twist);
                const Curve dual = Curve::dual(s, {0, 0});
                for (int k = -3; k <= 3; ++k) {
                    const double via_curve =
                        geodesic_length(s, apply_twist(dual, {0, 0}, k)).value;
                    const double via_structure =
                        geodesic_length(twist_deform(s, {0, 0}, sign * k * beta), dual).value;
                    const double err =
                        std::abs(via_curve - via_structure) / std::max(1.0, via_curve);
                    worst = std::max(worst, err);
                    if (err > 1e-8) ok = false;
                }
            }
    line("criterion 2: full-twist periodicity on a 5x5x7 grid, k in -3..3 (1e-8)", ok,
         "sign = " + std::to_string(sign) + ", worst rel err " + format_g17(worst));
}

// 3. Twist inequalities: additive in length, multiplicative via collars.
void criterion_3() {
    const double betas[5] = {0.6, 0.9, 1.2, 1.6, 2.0};
    const double bs[5] = {0.6, 0.9, 1.2, 1.6, 2.0};
    bool additive_ok = true, ratio_ok = true;
    for (double beta : betas)
        for (double b : bs)
            for (int tstep = 0; tstep < 7; ++tstep) {
                const double twist = beta * tstep / 7.0;
                const Surface s = fhs(beta, b, b, b, b, twist);
                const Curve dual = Curve::dual(s, {0, 0});
                const double l0 = geodesic_length(s, dual).value;
                const double rate = beta / (2.0 * collar_half_width(beta));
                for (int k = -3; k <= 3; ++k) {
                    const double lk = geodesic_length(s, apply_twist(dual, {0, 0}, k)).value;
                    if (lk > l0 + std::abs(k) * 2.0 * beta + 1e-9) additive_ok = false;
                    if (beta <= 1.0 && lk / l0 > 1.0 + std::abs(k) * rate + 1e-9)
                        ratio_ok = false;
                }
            }
    line("criterion 3: twisted lengths within l + |k| i len, zero violations", additive_ok);
    line("criterion 3b: ratio within 1 + |k| len/(2 collar width) for len <= 1, zero violations",
         ratio_ok);
}

// 4. Exact sup ratios of a small twist decay like eps/|log eps|.
void criterion_4() {
    const double t0 = now_s();
    std::vector<double> sups;
    bool gate_ok = true;
    for (int e = 2; e <= 6; ++e) {
        const double eps = std::exp(-static_cast<double>(e));
        const Surface s = fhs(eps, 1.0, 1.0, 1.0, 1.0, 0.0);
        const auto curves = enumerate_curves(s, {CurveId{0, 0}}, 4);
        double sup = 1.0;
        for (const auto& c : curves) {
            const double l = geodesic_length(s, c).value;
            const double lt = geodesic_length(s, apply_twist(c, {0, 0}, -1)).value;
            sup = std::max(sup, std::max(lt / l, l / lt));
        }
        if (sup > 1.0 + 10.0 * eps / std::abs(std::log(eps))) gate_ok = false;
        sups.push_back(sup);
    }
    bool decreasing = true;
    for (std::size_t i = 1; i < sups.size(); ++i)
        if (!(sups[i] < sups[i - 1])) decreasing = false;
    const double dt = now_s() - t0;
    line("criterion 4: small-twist sup ratios strictly decreasing and within 10x rate",
         decreasing && gate_ok && dt < 60.0,
         "sups " + format_g17(sups.front()) + " .. " + format_g17(sups.back()) + ", " +
             format_g17(dt) + " s");
}

// 5. Four-holed-sphere twist gap over the default grids.
void criterion_5() {
    const double t0 = now_s();
    const auto gap = four_holed_min_gap(2.0, 0.25, 1.0 / 8.0);
    const Surface s = fhs(gap.witness_lengths[0], gap.witness_lengths[1], gap.witness_lengths[2],
                          gap.witness_lengths[3], gap.witness_lengths[4], gap.witness_twist);
    const Curve dual = Curve::dual(s, {0, 0});
    const double l0 = geodesic_length(s, dual).value;
    const double lp = geodesic_length(s, apply_twist(dual, {0, 0}, 1)).value;
    const double lm = geodesic_length(s, apply_twist(dual, {0, 0}, -1)).value;
    const double again = std::max(std::max(lp / l0, l0 / lp), std::max(lm / l0, l0 / lm));
    const double dt = now_s() - t0;
    line("criterion 5: twist gap exceeds 1 + 1e-4 with reproducible witness",
         gap.gap > 1.0 + 1e-4 && std::abs(again - gap.gap) <= 1e-9 * gap.gap && dt < 120.0,
         "K = " + format_g17(gap.gap) + ", " + format_g17(dt) + " s");
}

// 6. Modulus normalization and decay.
void criterion_6() {
    const bool norm_ok = std::abs(quad_modulus(-1.0) - 1.0) <= 1e-10;
    bool monotone = true;
    double prev = 0.0;
    for (int i = 0; i <= 120; ++i) {
        const double cr = -std::exp(std::log(1e-6) + i * (std::log(1.0) - std::log(1e-6)) / 120.0);
        const double m = quad_modulus(cr);
        if (m <= prev) monotone = false;
        prev = m;
    }
    const bool decay_ok = quad_modulus(-1e-6) < 0.2;
    line("criterion 6: quad modulus is 1 at -1 (1e-10), monotone, below 0.2 at -1e-6",
         norm_ok && monotone && decay_ok,
         "mod(-1) = " + format_g17(quad_modulus(-1.0)) +
             ", mod(-1e-6) = " + format_g17(quad_modulus(-1e-6)));
}

// 7. Dilatation floor of the twist deformation diverges.
void criterion_7() {
    std::vector<double> vals;
    for (int t = 0; t <= 10; ++t) vals.push_back(qc_twist_lower_bound(t, M_PI / 6.0));
    bool increasing = true;
    for (std::size_t i = 1; i < vals.size(); ++i)
        if (!(vals[i] > vals[i - 1])) increasing = false;
    double crossing = -1.0;
    for (std::size_t i = 1; i < vals.size(); ++i)
        if (vals[i - 1] <= 2.0 && vals[i] > 2.0) {
            double lo = static_cast<double>(i - 1), hi = static_cast<double>(i);
            for (int it = 0; it < 60; ++it) {
                const double mid = 0.5 * (lo + hi);
                (qc_twist_lower_bound(mid, M_PI / 6.0) <= 2.0 ? lo : hi) = mid;
            }
            crossing = 0.5 * (lo + hi);
        }
    line("criterion 7: qc floor is 1 at t=0, strictly increasing, exceeds 2 on 0..10",
         std::abs(vals[0] - 1.0) <= 1e-12 && increasing && crossing > 0.0,
         "crossing at t = " + format_g17(crossing));
}

// 8. Twist schedule: summable length bound, divergent dilatation floor.
void criterion_8() {
    const auto ts = TwistSchedule::midpoint(50);
    bool cap_ok = true;
    double run = 0.0, cap = 0.0;
    for (std::int64_t n = 1; n <= 50; ++n) {
        run += ts.t_times_eps(n) / ts.exponent(n);
        cap += 2.0 * std::log(static_cast<double>(n + 1)) / (static_cast<double>(n) * n);
        if (run > cap) cap_ok = false;
    }
    line("criterion 8a: truncated twist bound within 1 + 2 sum log(n+1)/n^2 for N <= 50", cap_ok,
         "bound " + format_g17(1.0 + run) + " vs cap " + format_g17(1.0 + cap));

    const auto seq = schedule_qc_divergence(ts, 8);
    bool increasing = true;
    for (std::size_t i = 1; i < seq.size(); ++i)
        if (!(seq[i] > seq[i - 1])) increasing = false;
    std::int64_t first_above = -1;
    for (std::size_t i = 0; i < seq.size(); ++i)
        if (seq[i] > 2.0) {
            first_above = static_cast<std::int64_t>(i) + 1;
            break;
        }
    line("criterion 8b: schedule qc floor increasing and above 2 by n = 5",
         increasing && seq[4] > 2.0,
         "value(5) = " + format_g17(seq[4]) + ", first n above 2 = " +
             std::to_string(first_above));
}

// 9. Divergence witnesses at desk scale.
void criterion_9() {
    {
        ExperimentSpec spec;
        spec.id = "ex-flute-divergence";
        spec.params["N"] = "100";
        const auto rep = run_experiment(spec);
        line("criterion 9a: flute divergence reaches sup 100 with witness C:100", rep.pass());
    }
    {
        ExperimentSpec spec;
        spec.id = "prop-twist-divergence";
        spec.params["imax"] = "20";
        const auto rep = run_experiment(spec);
        line("criterion 9b: constructed schedule pushes ratio(D_i) past i for i <= 20",
             rep.pass());
    }
    {
        ExperimentSpec spec;
        spec.id = "ex-noncompact-ball";
        spec.params["range"] = "5";
        const auto rep = run_experiment(spec);
        line("criterion 9c: ladder twists separated by a constant inside a finite ball",
             rep.pass());
    }
}

// 10. Inequality chain and the Lipschitz property of log-length.
void criterion_10() {
    ExperimentSpec spec;
    spec.id = "check-metric-chain";
    spec.params["pairs"] = "100";
    const auto rep = run_experiment(spec);
    line("criterion 10: metric chain without violations; log-length 2-Lipschitz on 100 pairs",
         rep.pass());
}

} // namespace

int main() {
    const double t0 = now_s();
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    const double dt = now_s() - t0;
    std::printf("acceptance: %d failed, wall time %.1f s\n", failures, dt);
    if (dt > 300.0) {
        std::printf("[FAIL] suite exceeded the 5 minute budget\n");
        ++failures;
    }
    return failures;
}
