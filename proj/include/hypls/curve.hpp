#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hypls/surface.hpp"

// Finite-support simple closed curves: pants curves, dual curves of
// four-holed-sphere / one-holed-torus pieces, and their images under
// twist words along pants curves.

namespace hypls {

enum class CurveBase { PantsCurve, DualCurve };
enum class PieceKind { None, FourHoledSphere, OneHoledTorus };

struct TwistTerm {
    CurveId curve;
    std::int64_t power = 0;
    auto operator<=>(const TwistTerm&) const = default;
};

struct Curve {
    CurveBase base = CurveBase::PantsCurve;
    CurveId core;
    PieceKind piece = PieceKind::None;
    // Geometric intersection numbers with pants curves; invariant under
    // twist words along pants curves, so fixed at construction.
    std::map<CurveId, int> crossings;
    std::vector<TwistTerm> word; // normal form: nonzero powers, adjacent ids distinct

    static Curve pants(CurveId c);
    static Curve dual(const Surface& s, CurveId core);

    auto operator<=>(const Curve&) const = default;
};

// i(c, C) for a pants curve C.
int intersection_with_pants_curve(const Curve& c, CurveId C);

// Appends (C, k) to the twist word and renormalizes. Twists along curves
// disjoint from c act trivially and are dropped.
Curve apply_twist(const Curve& c, CurveId C, std::int64_t k);

std::vector<TwistTerm> normalize_word(const Curve& base, std::vector<TwistTerm> word);

struct ScheduleEntry {
    CurveId curve;
    std::int64_t power = 0;
};

// A finite or lazily-infinite composition of twist powers along pairwise
// disjoint pants curves, ordered by a schedule index n >= 1.
class MappingClass {
public:
    static MappingClass empty();
    static MappingClass finite(std::vector<ScheduleEntry> entries);
    // Infinite schedule: entry(n) for n >= 1, plus a locator giving the
    // schedule indices that twist along a given curve (needed to apply
    // the class to a finite-support curve without scanning forever).
    static MappingClass lazy(std::function<ScheduleEntry(std::int64_t)> entry,
                             std::function<std::vector<std::int64_t>(CurveId)> locate);

    bool is_finite() const { return finite_; }
    const std::vector<ScheduleEntry>& entries() const { return entries_; }

    // Schedule entries meeting the support of c, as (index, entry).
    std::vector<std::pair<std::int64_t, ScheduleEntry>> relevant(const Curve& c) const;

private:
    bool finite_ = true;
    std::vector<ScheduleEntry> entries_;
    std::function<ScheduleEntry(std::int64_t)> entry_;
    std::function<std::vector<std::int64_t>(CurveId)> locate_;
};

// Composition f = tau_1 o tau_2 o ... applied to c: entries are applied
// right-to-left, i.e. highest relevant schedule index first.
Curve apply_mapping_class(const Curve& c, const MappingClass& m);

// All curves based at window curves with twist words of total |power|
// <= max_weight along effective window curves. Deterministic order.
std::vector<Curve> enumerate_curves(const Surface& s, const std::vector<CurveId>& window,
                                    int max_weight);

// Twist schedule with eps(n) decaying like exp(-n^2); t(n) chosen so that
// t(n)*eps(n) ~ log|log eps(n)|. Internals are kept in log space so the
// products remain finite after eps underflows.
struct TwistSchedule {
    // exponent e(n): eps(n) = exp(-e(n)); default e(n) = n^2 + n + 1
    std::function<double(std::int64_t)> exponent;
    std::int64_t count = 0;

    static TwistSchedule midpoint(std::int64_t count);

    double eps(std::int64_t n) const { return std::exp(-exponent(n)); }
    double log_abs_log_eps(std::int64_t n) const; // log(e(n))
    // t(n) = floor(log|log eps|/eps) + 1; +inf when not representable.
    double t(std::int64_t n) const;
    // t(n)*eps(n), computed stably: equals log(e(n)) up to +eps(n).
    double t_times_eps(std::int64_t n) const;
};

// Curve literal syntax: "C:<index>", "C:<family>:<index>",
// "D:<family>:<index>", optionally suffixed "~[(C:5,2),(C:7,-1)]".
std::string format_curve(const Curve& c);
Curve parse_curve(const std::string& text, const Surface& s);

} // namespace hypls
