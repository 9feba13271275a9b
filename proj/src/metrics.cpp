#include "hypls/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <thread>

namespace hypls {

double log_length_ratio(const Surface& s1, const Surface& s2, const Curve& c) {
    const double l1 = geodesic_length(s1, c).value;
    const double l2 = geodesic_length(s2, c).value;
    return std::abs(std::log(l2 / l1));
}

DistanceEstimate ls_constant_lower(const Surface& s1, const Surface& s2,
                                   const std::vector<Curve>& curves) {
    if (curves.empty()) throw Error(Err::BadParams, "sup needs a nonempty curve set");
    DistanceEstimate out;
    out.lower = 1.0;
    for (const auto& c : curves) {
        const double r = std::exp(log_length_ratio(s1, s2, c));
        if (r > out.lower) {
            out.lower = r;
            out.witness = c;
        }
    }
    if (!out.witness) out.witness = curves.front(); // all ratios equal to one
    out.certificate = "finite-curve-set-sup";
    return out;
}

DistanceEstimate twist_upper_bound(const Surface& s, const MappingClass& m) {
    if (!m.is_finite())
        throw Error(Err::BadParams, "upper bounds need a finite (truncated) schedule");
    const auto& entries = m.entries();
    DistanceEstimate out;
    out.lower = 1.0;
    if (entries.empty()) {
        out.upper = 1.0;
        out.certificate = "identity";
        return out;
    }
    bool all_short = true, all_long = true;
    for (const auto& e : entries) {
        const double l = s.fn.length(e.curve);
        (l < 0.1 ? all_long : all_short) = false;
    }
    if (entries.size() == 1) {
        const double l = s.fn.length(entries[0].curve);
        const double t0 = 2.0 * collar_half_width(l);
        out.upper = 1.0 + std::llabs(entries[0].power) * l / t0;
        out.certificate = "single-twist-collar-bound";
    } else if (all_short) {
        double sum = 0.0;
        for (const auto& e : entries) {
            const double l = s.fn.length(e.curve);
            sum += std::llabs(e.power) * l / std::abs(std::log(l));
        }
        out.upper = 1.0 + sum;
        out.certificate = "short-schedule-log-bound";
    } else {
        double prod = 1.0;
        for (const auto& e : entries) {
            const double l = s.fn.length(e.curve);
            const double t0 = 2.0 * collar_half_width(l);
            prod *= 1.0 + std::llabs(e.power) * l / t0;
        }
        out.upper = prod;
        out.certificate = "single-twist-product-bound";
        out.mixed_regime = !all_long; // mixture of short and non-short curves
    }
    return out;
}

double small_twist_rate(double eps) {
    if (!(eps > 0.0 && eps < 1.0))
        throw Error(Err::BadEpsilon, "twist rate needs eps in (0,1)");
    return 1.0 + eps / std::abs(std::log(eps));
}

namespace {

struct GapPoint {
    double value = kInf;
    std::array<double, 5> lengths{};
    double twist = 0.0;
};

GapPoint gap_at(const std::array<double, 5>& lens, double twist) {
    SurfaceSpec spec;
    spec.kind = TemplateKind::FourHoledSphere;
    Rule table;
    table.kind = Rule::Kind::Table;
    table.c = 1.0;
    table.table = {{0, lens[1]}, {1, lens[2]}, {2, lens[3]}, {3, lens[4]}};
    spec.lengths = {{0, Rule::constant(lens[0])}, {1, table}};
    spec.twists = {{0, Rule::constant(twist)}};
    const Surface s = build_template(spec);
    const CurveId beta{0, 0};
    const Curve dual = Curve::dual(s, beta);
    const Representation rep = build_representation(finite_subsurface(s, {beta}, 1));
    auto len = [&](const Curve& c) { return trace_to_length(word_matrix(rep, c).trace()); };
    const double l0 = len(dual);
    const double lp = len(apply_twist(dual, beta, 1));
    const double lm = len(apply_twist(dual, beta, -1));
    const double worst =
        std::max(std::max(lp / l0, l0 / lp), std::max(lm / l0, l0 / lm));
    return {worst, lens, twist};
}

std::vector<double> grid_values(double lo, double hi, double step) {
    std::vector<double> out;
    for (double v = lo; v <= hi + 1e-12; v += step) out.push_back(std::min(v, hi));
    return out;
}

} // namespace

FourHoledGap four_holed_min_gap(double M, double boundary_step, double twist_step, int jobs) {
    if (!(M > 1.0)) throw Error(Err::BadParams, "gap scan needs M > 1");
    const auto lens = grid_values(1.0 / M, M, boundary_step);

    std::vector<std::array<double, 5>> configs;
    for (double b : lens)
        for (double b1 : lens)
            for (double b2 : lens)
                for (double b3 : lens)
                    for (double b4 : lens) configs.push_back({b, b1, b2, b3, b4});

    const int nworkers = std::max(1, jobs);
    std::vector<std::future<GapPoint>> futures;
    auto scan_chunk = [&](std::size_t begin, std::size_t end) {
        GapPoint best;
        for (std::size_t i = begin; i < end; ++i) {
            const auto& lens5 = configs[i];
            const double tstep = twist_step > 0.0 ? twist_step * lens5[0] : lens5[0] / 8.0;
            for (double tw = 0.0; tw < lens5[0] - 1e-12; tw += tstep) {
                const auto pt = gap_at(lens5, tw);
                if (pt.value < 1.0 + 1e-6)
                    throw Error(Err::GridTooCoarse,
                                "worst twist ratio within 1e-6 of 1; refine the grid");
                if (pt.value < best.value) best = pt;
            }
        }
        return best;
    };
    const std::size_t chunk = (configs.size() + nworkers - 1) / nworkers;
    for (int w = 0; w < nworkers; ++w) {
        const std::size_t b = w * chunk, e = std::min(configs.size(), (w + 1) * chunk);
        if (b >= e) break;
        futures.push_back(std::async(nworkers > 1 ? std::launch::async : std::launch::deferred,
                                     scan_chunk, b, e));
    }
    GapPoint best;
    for (auto& f : futures) {
        const auto pt = f.get();
        if (pt.value < best.value) best = pt;
    }
    return {best.value, best.lengths, best.twist};
}

double collar_angle(double ell) { return std::atan(std::sinh(collar_half_width(ell))); }

double qc_twist_lower_bound(double t, double theta) {
    if (t == 0.0) return 1.0;
    const double spread = (std::exp(t) - 1.0) * std::sin(theta);
    return 1.0 / quad_modulus(-1.0 / (1.0 + spread));
}

std::vector<double> schedule_qc_divergence(const TwistSchedule& ts, std::int64_t N) {
    std::vector<double> out;
    for (std::int64_t n = 1; n <= N; ++n)
        out.push_back(qc_twist_lower_bound(ts.t_times_eps(n), collar_angle(ts.eps(n))));
    return out;
}

WolpertReport wolpert_check(double K,
                            const std::vector<std::pair<double, double>>& length_pairs) {
    if (!(K >= 1.0)) throw Error(Err::BadParams, "dilatation bound must be >= 1");
    WolpertReport out;
    for (std::size_t i = 0; i < length_pairs.size(); ++i) {
        const auto& [l1, l2] = length_pairs[i];
        if (!(l1 > 0.0 && l2 > 0.0))
            throw Error(Err::NonPositiveLength, "length pairs must be positive");
        const double r = l2 / l1;
        if (r > K * (1.0 + 1e-12) || r < 1.0 / K * (1.0 - 1e-12)) out.flagged.push_back(i);
    }
    return out;
}

namespace {

ChainCheck compare_le(const std::string& name, const Interval& small, const Interval& big) {
    // small <= big is violated exactly when the whole intervals separate.
    if (small.lower > big.upper) return {name, CheckStatus::Violated};
    if (small.upper <= big.lower) return {name, CheckStatus::Verified};
    return {name, CheckStatus::Undecidable};
}

} // namespace

ChainReport metric_chain_check(Interval d_ls, Interval d_qc, Interval d_bL, double C, double N,
                               ChainMode mode) {
    if (!(C >= 1.0) || !(N >= 0.0)) throw Error(Err::BadParams, "need C >= 1 and N >= 0");
    ChainReport out;
    out.checks.push_back(compare_le("d_ls <= d_qc", d_ls, d_qc));
    out.checks.push_back(compare_le("d_ls <= d_bL", d_ls, d_bL));
    out.checks.push_back(compare_le("d_qc <= d_bL", d_qc, d_bL));
    out.checks.push_back(compare_le("d_bL <= C*d_qc", d_bL,
                                    {C * d_qc.lower, d_qc.upper == kInf ? kInf : C * d_qc.upper}));
    if (mode == ChainMode::FiniteType) {
        const Interval rhs{4.0 * d_ls.lower + N, d_ls.upper == kInf ? kInf : 4.0 * d_ls.upper + N};
        out.checks.push_back(compare_le("d_qc <= 4*d_ls + N", d_qc, rhs));
    }
    return out;
}

LipschitzCheck two_lipschitz_check(const Curve& c, const Surface& s1, const Surface& s2,
                                   double d_ls_upper) {
    LipschitzCheck out;
    const double l1 = geodesic_length(s1, c).value;
    const double l2 = geodesic_length(s2, c).value;
    out.lhs = std::abs(std::log(l1) - std::log(l2));
    out.rhs = 2.0 * d_ls_upper;
    out.pass = out.lhs <= out.rhs + 1e-9;
    return out;
}

double twist_winding_floor(std::int64_t n, int crossings, double l_beta) {
    const double turns = std::max<double>(0.0, static_cast<double>(std::llabs(n)) - 2.0);
    return crossings * turns * l_beta;
}

bool DivergenceWitness::valid(double tol) const {
    if (curves.size() != ratios.size() || ratios.size() != floors.size() || ratios.empty())
        return false;
    for (std::size_t i = 0; i < ratios.size(); ++i) {
        if (ratios[i] < floors[i] - tol) return false;
        if (i > 0 && floors[i] < floors[i - 1] - tol) return false;
    }
    return true;
}

} // namespace hypls
