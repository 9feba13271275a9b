#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypls/curve.hpp"
#include "hypls/holonomy.hpp"

// Metric-level computations on pairs of marked structures: length-ratio
// functionals, certified lower bounds on the length-spectrum constant by
// enumeration, analytic upper bounds for twist mapping classes, the
// four-holed-sphere twist gap, quasiconformal lower bounds via moduli,
// and the inequality checkers tying the three metrics together.

namespace hypls {

// Bounds on a metric quantity, kept on the multiplicative (constant)
// scale: distance = log(bound)/2.
struct DistanceEstimate {
    double lower = 1.0;          // certified lower bound on the constant, >= 1
    double upper = kInf;         // certified upper bound, +inf when none applies
    std::optional<Curve> witness; // attains `lower` when present
    std::string certificate;     // rule that produced `upper`
    bool mixed_regime = false;   // schedule mixed short and long curves

    double d_lower() const { return 0.5 * std::log(lower); }
    double d_upper() const { return upper == kInf ? kInf : 0.5 * std::log(upper); }
};

// |log( l_{s2}(c) / l_{s1}(c) )| with exact lengths.
double log_length_ratio(const Surface& s1, const Surface& s2, const Curve& c);

// Sup of the two-sided length ratio over a finite curve set; the witness
// reproduces `lower` through log_length_ratio.
DistanceEstimate ls_constant_lower(const Surface& s1, const Surface& s2,
                                   const std::vector<Curve>& curves);

// Upper bound on the length-spectrum constant of a twist composition:
// single twist (beta, k): 1 + |k| l(beta)/t0 with t0 the full collar
// width; a schedule of short curves (< 0.1): 1 + sum |k| l / |log l|;
// otherwise the product of single-twist bounds, flagged as mixed.
DistanceEstimate twist_upper_bound(const Surface& s, const MappingClass& m);

// 1 + eps/|log eps| for eps in (0,1).
double small_twist_rate(double eps);

struct FourHoledGap {
    double gap = 0.0; // min over the grid of max(r, 1/r, r', 1/r'), > 1
    std::array<double, 5> witness_lengths{}; // (beta, b1, b2, b3, b4)
    double witness_twist = 0.0;
};

// Minimum over a grid of four-holed spheres with boundary data in
// [1/M, M] of the worst single-twist ratio of the dual curve.
FourHoledGap four_holed_min_gap(double M, double boundary_step, double twist_step, int jobs = 1);

// Lower bound on the dilatation of the time-t twist deformation, via the
// modulus of the worst boundary quadrilateral: 1 at t = 0, unbounded.
double qc_twist_lower_bound(double t, double theta);

// Half-angle of the lifted collar wedge of a closed geodesic.
double collar_angle(double ell);

// Per-step dilatation lower bounds of a twist schedule.
std::vector<double> schedule_qc_divergence(const TwistSchedule& ts, std::int64_t N);

struct WolpertReport {
    std::vector<std::size_t> flagged; // indices of pairs outside [1/K, K]
    bool pass() const { return flagged.empty(); }
};

WolpertReport wolpert_check(double K, const std::vector<std::pair<double, double>>& length_pairs);

struct Interval {
    double lower = 0.0;
    double upper = kInf;
};

enum class ChainMode { Infinite, FiniteType };
enum class CheckStatus { Verified, Violated, Undecidable };

struct ChainCheck {
    std::string name;
    CheckStatus status = CheckStatus::Undecidable;
};

struct ChainReport {
    std::vector<ChainCheck> checks;
    bool pass() const {
        for (const auto& c : checks)
            if (c.status == CheckStatus::Violated) return false;
        return true;
    }
};

// Decidable comparisons among d_ls <= d_qc <= d_bL <= C d_qc, plus the
// finite-type bound d_qc <= 4 d_ls + N.
ChainReport metric_chain_check(Interval d_ls, Interval d_qc, Interval d_bL, double C, double N,
                               ChainMode mode);

struct LipschitzCheck {
    bool pass = false;
    double lhs = 0.0; // |log l1 - log l2|
    double rhs = 0.0; // 2 * d_ls upper bound
};

LipschitzCheck two_lipschitz_check(const Curve& c, const Surface& s1, const Surface& s2,
                                   double d_ls_upper);

// A certified floor for the length of a curve twisted n times along beta:
// each of the i crossing strands winds nearly n full turns inside the
// collar, so l(tau^n c) >= i * max(0, |n| - 2) * l(beta).
double twist_winding_floor(std::int64_t n, int crossings, double l_beta);

// A divergence certificate: witness curves whose verified length ratios
// dominate a nondecreasing unbounded floor.
struct DivergenceWitness {
    std::vector<Curve> curves;
    std::vector<double> ratios; // from exact lengths
    std::vector<double> floors; // g(i): nondecreasing, unbounded

    // ratios dominate the floor and the floor does not decrease.
    bool valid(double tol = 1e-9) const;
};

} // namespace hypls
