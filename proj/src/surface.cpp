#include "hypls/surface.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace hypls {

PantsCell PantsGraph::cell(CellId id) const {
    auto c = cell_fn(id);
    if (!c)
        throw Error(Err::UnknownCurve, "no cell (" + std::to_string(id.part) + "," +
                                           std::to_string(id.index) + ")");
    return *c;
}

double Rule::eval(std::int64_t index) const {
    switch (kind) {
        case Kind::Const: return c;
        case Kind::Harmonic: return c / static_cast<double>(std::max<std::int64_t>(1, std::llabs(index)));
        case Kind::Power: {
            const auto i = static_cast<double>(std::max<std::int64_t>(1, std::llabs(index)));
            return c * std::pow(i, p);
        }
        case Kind::Table: {
            auto it = table.find(index);
            return it == table.end() ? c : it->second;
        }
    }
    return c;
}

double FnAssignment::length(CurveId c) const {
    auto it = length_rules.find(c.family);
    const double v = it == length_rules.end() ? 1.0 : it->second.eval(c.index);
    if (!(v > 0.0))
        throw Error(Err::BadLengthRule, "length rule gave " + std::to_string(v) + " at family " +
                                            std::to_string(c.family) + " index " +
                                            std::to_string(c.index));
    return v;
}

double FnAssignment::twist(CurveId c) const {
    double v = 0.0;
    auto it = twist_rules.find(c.family);
    if (it != twist_rules.end()) v = it->second.eval(c.index);
    auto ov = twist_offsets.find(c);
    if (ov != twist_offsets.end()) v += ov->second;
    return v;
}

namespace {

// Flute: one-ended chain. Cell k >= 1 lies between C_{k-1} and C_k
// [family 0]; the third hole of every cell is a cusp, and cell 1 is the
// end cell with two cusps.
std::shared_ptr<PantsGraph> flute_graph() {
    auto g = std::make_shared<PantsGraph>();
    g->cell_fn = [](CellId id) -> std::optional<PantsCell> {
        if (id.part != 0 || id.index < 1) return std::nullopt;
        const std::int64_t k = id.index;
        PantsCell cell{id, {}};
        if (k == 1)
            cell.slots = {Slot::glued({0, 1}), Slot::cusp(), Slot::cusp()};
        else
            cell.slots = {Slot::glued({0, k - 1}), Slot::glued({0, k}), Slot::cusp()};
        return cell;
    };
    g->curve_fn = [](CurveId c) -> std::vector<SlotRef> {
        if (c.family != 0 || c.index < 1) return {};
        const std::int64_t i = c.index;
        return {{{0, i}, i == 1 ? 0 : 1}, {{0, i + 1}, 0}};
    };
    return g;
}

// Ladder: bi-infinite chain of two-holed tori. Piece i sits between C_i
// and C_{i+1} [family 0] and is X_i [part 0] glued to Y_i [part 1] along
// A_i [family 1] and B_i [family 2].
std::shared_ptr<PantsGraph> ladder_graph() {
    auto g = std::make_shared<PantsGraph>();
    g->cell_fn = [](CellId id) -> std::optional<PantsCell> {
        if (id.part != 0 && id.part != 1) return std::nullopt;
        const std::int64_t i = id.index;
        PantsCell cell{id, {}};
        if (id.part == 0)
            cell.slots = {Slot::glued({0, i}), Slot::glued({1, i}), Slot::glued({2, i})};
        else
            cell.slots = {Slot::glued({1, i}), Slot::glued({2, i}), Slot::glued({0, i + 1})};
        return cell;
    };
    g->curve_fn = [](CurveId c) -> std::vector<SlotRef> {
        const std::int64_t i = c.index;
        switch (c.family) {
            case 0: return {{{1, i - 1}, 2}, {{0, i}, 0}};
            case 1: return {{{0, i}, 1}, {{1, i}, 0}};
            case 2: return {{{0, i}, 2}, {{1, i}, 1}};
            default: return {};
        }
    };
    return g;
}

// Tripod: a central cell [part 3] with three flute-like rays. Ray r has
// curves (r, i), i >= 1, and cells (r, k), k >= 2, between (r, k-1) and
// (r, k); curve (r, 1) joins the center to cell (r, 2).
std::shared_ptr<PantsGraph> tripod_graph() {
    auto g = std::make_shared<PantsGraph>();
    g->cell_fn = [](CellId id) -> std::optional<PantsCell> {
        if (id.part == 3 && id.index == 0) {
            PantsCell cell{id, {Slot::glued({0, 1}), Slot::glued({1, 1}), Slot::glued({2, 1})}};
            return cell;
        }
        if (id.part < 0 || id.part > 2 || id.index < 2) return std::nullopt;
        PantsCell cell{id,
                       {Slot::glued({id.part, id.index - 1}), Slot::glued({id.part, id.index}),
                        Slot::cusp()}};
        return cell;
    };
    g->curve_fn = [](CurveId c) -> std::vector<SlotRef> {
        if (c.family < 0 || c.family > 2 || c.index < 1) return {};
        if (c.index == 1) return {{{3, 0}, c.family}, {{c.family, 2}, 0}};
        return {{{c.family, c.index}, 1}, {{c.family, c.index + 1}, 0}};
    };
    return g;
}

// Two pants glued along the core curve (0,0); the four outer holes are
// geodesic boundary curves (1,0)..(1,3).
std::shared_ptr<PantsGraph> four_holed_sphere_graph() {
    auto g = std::make_shared<PantsGraph>();
    g->cell_fn = [](CellId id) -> std::optional<PantsCell> {
        if (id.part != 0 || (id.index != 0 && id.index != 1)) return std::nullopt;
        PantsCell cell{id, {}};
        if (id.index == 0)
            cell.slots = {Slot::glued({0, 0}), Slot::boundary({1, 0}), Slot::boundary({1, 1})};
        else
            cell.slots = {Slot::glued({0, 0}), Slot::boundary({1, 2}), Slot::boundary({1, 3})};
        return cell;
    };
    g->curve_fn = [](CurveId c) -> std::vector<SlotRef> {
        if (c.family == 0 && c.index == 0) return {{{0, 0}, 0}, {{0, 1}, 0}};
        if (c.family == 1 && c.index >= 0 && c.index <= 3)
            return {{{0, c.index / 2}, 1 + static_cast<int>(c.index % 2)}};
        return {};
    };
    return g;
}

std::shared_ptr<PantsGraph> custom_graph(const CustomSpec& spec) {
    auto cells = std::make_shared<std::map<CellId, PantsCell>>();
    auto slots = std::make_shared<std::map<CurveId, std::vector<SlotRef>>>();
    for (const auto& cell : spec.cells) {
        if (!cells->emplace(cell.id, cell).second)
            throw Error(Err::BadParams, "duplicate custom cell id");
        for (int s = 0; s < 3; ++s)
            if (cell.slots[s].kind != SlotKind::Cusp)
                (*slots)[cell.slots[s].curve].push_back({cell.id, s});
    }
    for (const auto& [curve, refs] : *slots) {
        bool glued = false;
        for (const auto& r : refs)
            if (cells->at(r.cell).slots[r.slot].kind == SlotKind::Glued) glued = true;
        if (glued && refs.size() != 2)
            throw Error(Err::BadParams, "glued curve must have exactly two incident slots");
        if (!glued && refs.size() != 1)
            throw Error(Err::BadParams, "boundary curve must have exactly one incident slot");
    }
    auto g = std::make_shared<PantsGraph>();
    g->cell_fn = [cells](CellId id) -> std::optional<PantsCell> {
        auto it = cells->find(id);
        if (it == cells->end()) return std::nullopt;
        return it->second;
    };
    g->curve_fn = [slots](CurveId c) -> std::vector<SlotRef> {
        auto it = slots->find(c);
        if (it == slots->end()) return {};
        return it->second;
    };
    return g;
}

std::vector<CellId> probe_cells(const Surface& s) {
    std::vector<CellId> probe;
    switch (s.spec.kind) {
        case TemplateKind::Flute:
            for (std::int64_t k = 1; k <= 16; ++k) probe.push_back({0, k});
            break;
        case TemplateKind::Ladder:
            for (std::int64_t i = -8; i <= 8; ++i) {
                probe.push_back({0, i});
                probe.push_back({1, i});
            }
            break;
        case TemplateKind::Tripod:
            probe.push_back({3, 0});
            for (int r = 0; r < 3; ++r)
                for (std::int64_t k = 2; k <= 8; ++k) probe.push_back({r, k});
            break;
        case TemplateKind::FourHoledSphere:
            probe.push_back({0, 0});
            probe.push_back({0, 1});
            break;
        case TemplateKind::Custom:
            for (const auto& c : s.spec.custom.cells) probe.push_back(c.id);
            break;
    }
    return probe;
}

} // namespace

Surface build_template(const SurfaceSpec& spec) {
    Surface s;
    s.spec = spec;
    s.fn.length_rules = spec.lengths;
    s.fn.twist_rules = spec.twists;
    switch (spec.kind) {
        case TemplateKind::Flute: s.graph = flute_graph(); break;
        case TemplateKind::Ladder: s.graph = ladder_graph(); break;
        case TemplateKind::Tripod: s.graph = tripod_graph(); break;
        case TemplateKind::FourHoledSphere: s.graph = four_holed_sphere_graph(); break;
        case TemplateKind::Custom: s.graph = custom_graph(spec.custom); break;
    }
    // Probe the rules once: a non-positive length anywhere sampled is a
    // construction error, not a latent one.
    for (const auto& cid : probe_cells(s)) {
        const auto cell = s.graph->cell(cid);
        for (const auto& slot : cell.slots)
            if (slot.kind != SlotKind::Cusp) (void)s.fn.length(slot.curve);
    }
    return s;
}

Surface build_template(TemplateKind kind, std::map<std::int32_t, Rule> lengths,
                       std::map<std::int32_t, Rule> twists, std::string label) {
    SurfaceSpec spec;
    spec.kind = kind;
    spec.label = std::move(label);
    spec.lengths = std::move(lengths);
    spec.twists = std::move(twists);
    return build_template(spec);
}

Surface twist_deform(const Surface& s, CurveId curve, double delta) {
    if (!s.graph->is_gluing_curve(curve))
        throw Error(Err::UnknownCurve, "cannot twist: not a gluing curve of the surface");
    Surface out = s;
    out.fn.twist_offsets[curve] += delta;
    return out;
}

std::variant<FnCertificate, FnViolation>
fn_bounds_certificate(const Surface& s, double M, const std::vector<CurveId>& probe) {
    if (probe.empty()) throw Error(Err::EmptyCore, "certificate probe must be nonempty");
    FnCertificate cert{std::numeric_limits<double>::infinity(), 0.0, M};
    for (const auto& c : probe) {
        const double l = s.fn.length(c);
        if (l < 1.0 / M || l > M) return FnViolation{c, l, M};
        cert.min_length = std::min(cert.min_length, l);
        cert.max_length = std::max(cert.max_length, l);
    }
    return cert;
}

int FiniteSurface::cell_index(CellId id) const {
    for (int i = 0; i < static_cast<int>(cells.size()); ++i)
        if (cells[i].id == id) return i;
    return -1;
}

std::vector<std::pair<int, int>> FiniteSurface::internal_slots(CurveId c) const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < static_cast<int>(cells.size()); ++i)
        for (int s = 0; s < 3; ++s)
            if (cells[i].slots[s].kind == FsSlot::Kind::Internal && cells[i].slots[s].curve == c)
                out.emplace_back(i, s);
    return out;
}

FiniteSurface finite_subsurface(const Surface& s, const std::vector<CurveId>& core_curves,
                                int radius) {
    if (core_curves.empty()) throw Error(Err::EmptyCore, "finite subsurface needs a core");
    if (radius < 1) throw Error(Err::BadParams, "radius must be >= 1");

    std::set<CellId> selected;
    std::vector<CellId> frontier;
    for (const auto& c : core_curves) {
        const auto refs = s.graph->curve_slots(c);
        if (refs.empty()) throw Error(Err::UnknownCurve, "core curve not in surface");
        for (const auto& r : refs)
            if (selected.insert(r.cell).second) frontier.push_back(r.cell);
    }
    for (int d = 1; d < radius; ++d) {
        std::vector<CellId> next;
        for (const auto& cid : frontier) {
            const auto cell = s.graph->cell(cid);
            for (const auto& slot : cell.slots) {
                if (slot.kind != SlotKind::Glued) continue;
                for (const auto& r : s.graph->curve_slots(slot.curve))
                    if (selected.insert(r.cell).second) next.push_back(r.cell);
            }
        }
        frontier = std::move(next);
    }

    FiniteSurface fs;
    for (const auto& cid : selected) {
        const auto cell = s.graph->cell(cid);
        FsCell fc{cid, {}};
        for (int i = 0; i < 3; ++i) {
            const Slot& slot = cell.slots[i];
            switch (slot.kind) {
                case SlotKind::Cusp: fc.slots[i] = {FsSlot::Kind::Cusp, {}, 0.0, 0.0}; break;
                case SlotKind::Boundary:
                    fc.slots[i] = {FsSlot::Kind::Boundary, slot.curve, s.fn.length(slot.curve), 0.0};
                    break;
                case SlotKind::Glued: {
                    bool internal = true;
                    for (const auto& r : s.graph->curve_slots(slot.curve))
                        if (!selected.count(r.cell)) internal = false;
                    if (internal)
                        fc.slots[i] = {FsSlot::Kind::Internal, slot.curve, s.fn.length(slot.curve),
                                       s.fn.twist(slot.curve)};
                    else
                        fc.slots[i] = {FsSlot::Kind::Boundary, slot.curve, s.fn.length(slot.curve),
                                       0.0};
                    break;
                }
            }
        }
        fs.cells.push_back(fc);
    }
    return fs;
}

std::uint64_t graph_fingerprint(const Surface& s, const std::vector<CellId>& probe) {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    for (const auto& cid : probe) {
        auto c = s.graph->cell_fn(cid);
        mix(static_cast<std::uint64_t>(cid.part));
        mix(static_cast<std::uint64_t>(cid.index));
        if (!c) {
            mix(0xdeadu);
            continue;
        }
        for (const auto& slot : c->slots) {
            mix(static_cast<std::uint64_t>(slot.kind));
            mix(static_cast<std::uint64_t>(slot.curve.family));
            mix(static_cast<std::uint64_t>(slot.curve.index));
        }
    }
    return h;
}

} // namespace hypls
