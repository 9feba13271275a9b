#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hypls/errors.hpp"

// Surfaces as pants-decomposition graphs with Fenchel-Nielsen data.
// Graphs may be lazily infinite; generators are pure and deterministic.

namespace hypls {

struct CurveId {
    std::int32_t family = 0;
    std::int64_t index = 0;
    auto operator<=>(const CurveId&) const = default;
};

struct CellId {
    std::int32_t part = 0;
    std::int64_t index = 0;
    auto operator<=>(const CellId&) const = default;
};

enum class SlotKind { Glued, Boundary, Cusp };

struct Slot {
    SlotKind kind = SlotKind::Cusp;
    CurveId curve; // meaningful for Glued and Boundary

    static Slot glued(CurveId c) { return {SlotKind::Glued, c}; }
    static Slot boundary(CurveId c) { return {SlotKind::Boundary, c}; }
    static Slot cusp() { return {SlotKind::Cusp, {}}; }
    bool operator==(const Slot&) const = default;
};

struct PantsCell {
    CellId id;
    std::array<Slot, 3> slots;
    bool operator==(const PantsCell&) const = default;
};

struct SlotRef {
    CellId cell;
    int slot = 0;
    auto operator<=>(const SlotRef&) const = default;
};

// Lazily generated pants graph. `cell` and `curve_slots` must be pure:
// the same id yields an identical answer on every call.
class PantsGraph {
public:
    std::function<std::optional<PantsCell>(CellId)> cell_fn;
    std::function<std::vector<SlotRef>(CurveId)> curve_fn;

    PantsCell cell(CellId id) const;
    bool has_cell(CellId id) const { return cell_fn(id).has_value(); }
    std::vector<SlotRef> curve_slots(CurveId c) const { return curve_fn(c); }
    bool has_curve(CurveId c) const { return !curve_fn(c).empty(); }
    // Gluing curves have two incident slots; boundary curves have one.
    bool is_gluing_curve(CurveId c) const { return curve_fn(c).size() == 2; }
};

// A named family rule: curve (family, index) -> positive real.
struct Rule {
    enum class Kind { Const, Harmonic, Power, Table };
    Kind kind = Kind::Const;
    double c = 1.0;
    double p = 1.0;
    std::map<std::int64_t, double> table;

    double eval(std::int64_t index) const;

    static Rule constant(double v) { return {Kind::Const, v, 1.0, {}}; }
    static Rule harmonic(double v = 1.0) { return {Kind::Harmonic, v, 1.0, {}}; }
    static Rule power(double exponent, double v = 1.0) { return {Kind::Power, v, exponent, {}}; }

    bool operator==(const Rule&) const = default;
};

// Per-family length/twist rules plus a sparse twist overlay from
// deformations. Lengths must be positive wherever sampled.
struct FnAssignment {
    std::map<std::int32_t, Rule> length_rules;
    std::map<std::int32_t, Rule> twist_rules;
    std::map<CurveId, double> twist_offsets;

    double length(CurveId c) const;
    double twist(CurveId c) const;
};

enum class TemplateKind { Flute, Ladder, Tripod, FourHoledSphere, Custom };

struct CustomSpec {
    std::vector<PantsCell> cells;
    bool operator==(const CustomSpec&) const = default;
};

struct SurfaceSpec {
    TemplateKind kind = TemplateKind::Flute;
    std::string label;
    std::map<std::int32_t, Rule> lengths;
    std::map<std::int32_t, Rule> twists;
    CustomSpec custom;
    bool operator==(const SurfaceSpec&) const = default;
};

struct Surface {
    std::shared_ptr<const PantsGraph> graph;
    FnAssignment fn;
    SurfaceSpec spec;

    const std::string& label() const { return spec.label; }
};

Surface build_template(const SurfaceSpec& spec);
Surface build_template(TemplateKind kind, std::map<std::int32_t, Rule> lengths,
                       std::map<std::int32_t, Rule> twists, std::string label = "");

// Identical surface with the twist of one curve incremented by delta.
Surface twist_deform(const Surface& s, CurveId curve, double delta);

struct FnCertificate {
    double min_length = 0.0;
    double max_length = 0.0;
    double bound = 0.0;
};

struct FnViolation {
    CurveId curve;
    double length = 0.0;
    double bound = 0.0;
};

// Checks 1/M <= length <= M over the probe set; reports the first
// offending curve in probe order otherwise.
std::variant<FnCertificate, FnViolation>
fn_bounds_certificate(const Surface& s, double M, const std::vector<CurveId>& probe);

// A finite subsurface: extracted cells with slots resolved against the cut.
struct FsSlot {
    enum class Kind { Internal, Boundary, Cusp };
    Kind kind = Kind::Cusp;
    CurveId curve;
    double length = 0.0; // Internal and Boundary
    double twist = 0.0;  // Internal only
};

struct FsCell {
    CellId id;
    std::array<FsSlot, 3> slots;
};

struct FiniteSurface {
    std::vector<FsCell> cells; // sorted by id; deterministic
    int cell_index(CellId id) const;
    // Slots of an internal curve, as (cell position, slot) pairs.
    std::vector<std::pair<int, int>> internal_slots(CurveId c) const;
};

// Union of all cells within graph-distance `radius` of any core curve,
// where cells incident to a core curve are at distance 1. Cut gluing
// curves become geodesic boundary carrying their FN lengths.
FiniteSurface finite_subsurface(const Surface& s, const std::vector<CurveId>& core_curves,
                                int radius);

// Deterministic structural fingerprint of a probe window, for lazy
// determinism checks.
std::uint64_t graph_fingerprint(const Surface& s, const std::vector<CellId>& probe);

} // namespace hypls
