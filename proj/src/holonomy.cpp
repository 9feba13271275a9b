#include "hypls/holonomy.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <set>

namespace hypls {

namespace {

// Standard pants representation for boundary lengths (l0, l1, l2) with
// l0 > 0 and cusps encoded as zero lengths: generators (X0, X1, X2) with
// X0 X1 X2 = 1 and tr Xi = -2 cosh(li/2).
std::array<Mat2, 3> pants_rep_base(double l0, double l1, double l2) {
    if (!(l0 > 0.0)) throw Error(Err::NonHyperbolicInput, "pants base slot must be geodesic");
    const double u0 = l0 / 2.0;
    const double c1 = l1 > 0.0 ? std::cosh(l1 / 2.0) : 1.0;
    const double c2 = l2 > 0.0 ? std::cosh(l2 / 2.0) : 1.0;
    Mat2 x0, x1;
    x0 << std::exp(u0), 0.0, 0.0, std::exp(-u0);
    const double a = -(c2 + c1 * std::exp(-u0)) / std::sinh(u0);
    const double d = 2.0 * c1 - a;
    x1 << a, 1.0 - a * d, -1.0, d;
    const Mat2 x2 = inv_unimodular(x0 * x1);
    return {Mat2(-x0), Mat2(-x1), x2};
}

double slot_length(const FsSlot& s) {
    return s.kind == FsSlot::Kind::Cusp ? 0.0 : s.length;
}

// Slot-order generators of one cell, rotated so a geodesic slot leads.
// The leading slot's generator is diagonal, hence its trace is exact; a
// preferred curve is put in front so its length survives to the last ulp.
std::array<Mat2, 3> local_cell_rep(const FsCell& cell, std::optional<CurveId> prefer) {
    int r = -1;
    if (prefer)
        for (int i = 0; i < 3; ++i)
            if (cell.slots[i].kind != FsSlot::Kind::Cusp && cell.slots[i].curve == *prefer &&
                slot_length(cell.slots[i]) > 0.0)
                r = i;
    if (r < 0)
        for (int i = 0; i < 3; ++i)
            if (slot_length(cell.slots[i]) > 0.0) {
                r = i;
                break;
            }
    if (r < 0)
        throw Error(Err::NonHyperbolicInput, "cell with three cusps has no geodesic data");
    const auto base = pants_rep_base(slot_length(cell.slots[r]),
                                     slot_length(cell.slots[(r + 1) % 3]),
                                     slot_length(cell.slots[(r + 2) % 3]));
    std::array<Mat2, 3> out;
    for (int j = 0; j < 3; ++j) out[(r + j) % 3] = base[j];
    return out;
}

// Foot of the perpendicular from the next slot's axis (or cusp point)
// on this slot's axis; fixes the twist origin of every gluing.
Cx slot_foot(const std::array<Mat2, 3>& gens, int s) {
    const Geodesic ax = axis_of(gens[s]);
    const Mat2& next = gens[(s + 1) % 3];
    if (is_hyperbolic(next)) return common_perpendicular(ax, axis_of(next)).foot1;
    return foot_from_boundary_point(ax, parabolic_fixed_point(next));
}

Mat2 conjugate(const Mat2& g, const Mat2& m) { return g * m * inv_unimodular(g); }

void check_gluing(const Mat2& parent, const Mat2& placed_child) {
    const Mat2 want = inv_unimodular(parent);
    const double err = std::min((placed_child - want).norm(), (placed_child + want).norm());
    if (err > 1e-7 * (1.0 + want.norm()))
        throw Error(Err::NonHyperbolicInput, "gluing alignment failed");
}

} // namespace

const Mat2& Representation::curve_generator(CurveId c) const {
    auto it = internal.find(c);
    if (it != internal.end()) {
        const auto [cell, slot] = it->second[0];
        return gens[cell][slot];
    }
    for (std::size_t i = 0; i < fs.cells.size(); ++i)
        for (int s = 0; s < 3; ++s)
            if (fs.cells[i].slots[s].kind == FsSlot::Kind::Boundary &&
                fs.cells[i].slots[s].curve == c)
                return gens[i][s];
    throw Error(Err::WordNotSupported, "curve has no generator in this subsurface");
}

Representation build_representation(const FiniteSurface& fs) { return build_representation(fs, std::nullopt); }

Representation build_representation(const FiniteSurface& fs, std::optional<CurveId> prefer) {
    if (fs.cells.empty()) throw Error(Err::EmptyCore, "empty finite surface");
    Representation rep;
    rep.fs = fs;
    rep.gens.resize(fs.cells.size());

    // Internal curve table, primary side = lower (cell, slot).
    std::map<CurveId, std::vector<std::pair<int, int>>> internal;
    for (int i = 0; i < static_cast<int>(fs.cells.size()); ++i)
        for (int s = 0; s < 3; ++s)
            if (fs.cells[i].slots[s].kind == FsSlot::Kind::Internal)
                internal[fs.cells[i].slots[s].curve].push_back({i, s});
    for (auto& [curve, refs] : internal) {
        if (refs.size() != 2)
            throw Error(Err::NonHyperbolicInput, "internal curve without two slots");
        std::sort(refs.begin(), refs.end());
        rep.internal[curve] = {refs[0], refs[1]};
    }

    std::vector<bool> placed(fs.cells.size(), false);
    std::vector<std::array<Mat2, 3>> local(fs.cells.size());
    for (std::size_t i = 0; i < fs.cells.size(); ++i)
        local[i] = local_cell_rep(fs.cells[i], prefer);

    std::set<CurveId> used;
    std::vector<int> queue;
    for (int seed = 0; seed < static_cast<int>(fs.cells.size()); ++seed) {
        if (placed[seed]) continue;
        rep.gens[seed] = local[seed];
        placed[seed] = true;
        queue.push_back(seed);
        while (!queue.empty()) {
            const int cur = queue.front();
            queue.erase(queue.begin());
            for (int s = 0; s < 3; ++s) {
                const FsSlot& slot = fs.cells[cur].slots[s];
                if (slot.kind != FsSlot::Kind::Internal || used.count(slot.curve)) continue;
                const auto& refs = rep.internal.at(slot.curve);
                const auto [pc, ps] = refs[0].first == cur && refs[0].second == s ? refs[0] : refs[1];
                const auto [qc, qs] = refs[0].first == cur && refs[0].second == s ? refs[1] : refs[0];
                used.insert(slot.curve);
                const Mat2& gp = rep.gens[pc][ps];
                const Geodesic pax = axis_of(gp);
                const Cx pfoot = slot_foot(rep.gens[pc], ps);
                if (!placed[qc]) {
                    const Mat2& gc = local[qc][qs];
                    const Mat2 g = align_gluing(pax, pfoot, axis_of(gc), slot_foot(local[qc], qs),
                                                slot.twist);
                    for (int j = 0; j < 3; ++j) rep.gens[qc][j] = conjugate(g, local[qc][j]);
                    check_gluing(gp, rep.gens[qc][qs]);
                    placed[qc] = true;
                    queue.push_back(qc);
                } else {
                    // Self-gluing or an extra gluing between placed cells:
                    // the crossing conjugator becomes a generator.
                    const Mat2& gq = rep.gens[qc][qs];
                    const Mat2 j = align_gluing(pax, pfoot, axis_of(gq), slot_foot(rep.gens[qc], qs),
                                                slot.twist);
                    check_gluing(gp, conjugate(j, gq));
                    rep.handles[slot.curve] = j;
                }
            }
        }
    }

    // Trace invariant, with an allowance for conjugation roundoff at the
    // matrix's own entry scale.
    for (std::size_t i = 0; i < fs.cells.size(); ++i)
        for (int s = 0; s < 3; ++s) {
            const double want = fs.cells[i].slots[s].kind == FsSlot::Kind::Cusp
                                    ? 2.0
                                    : 2.0 * std::cosh(fs.cells[i].slots[s].length / 2.0);
            const double scale = rep.gens[i][s].cwiseAbs().maxCoeff();
            const double tol = 1e-9 * std::max(1.0, want) + 1e-12 * scale;
            if (std::abs(std::abs(rep.gens[i][s].trace()) - want) > tol)
                throw Error(Err::NonHyperbolicInput, "boundary trace invariant failed");
        }
    return rep;
}

namespace {

std::int64_t net_core_power(const Curve& c) {
    std::int64_t k = 0;
    for (const auto& t : c.word) {
        if (t.curve != c.core)
            throw Error(Err::WordNotSupported, "twist word leaves the supported piece");
        k += t.power;
    }
    return k;
}

} // namespace

Mat2 word_matrix(const Representation& rep, const Curve& c) {
    if (c.base == CurveBase::PantsCurve) return rep.curve_generator(c.core);

    const auto it = rep.internal.find(c.core);
    if (it == rep.internal.end())
        throw Error(Err::WordNotSupported, "dual core is not interior to the subsurface");
    const std::int64_t k = net_core_power(c);

    if (c.piece == PieceKind::OneHoledTorus) {
        const auto hit = rep.handles.find(c.core);
        if (hit == rep.handles.end())
            throw Error(Err::WordNotSupported, "one-holed torus handle missing");
        const auto [cell, slot] = it->second[0];
        const Mat2& a = rep.gens[cell][slot];
        return hit->second * mat_pow(a, k);
    }

    const auto [pc, ps] = it->second[0];
    const auto [qc, qs] = it->second[1];
    if (pc == qc) throw Error(Err::WordNotSupported, "piece is not a four-holed sphere");
    const Mat2& b = rep.gens[pc][ps];
    const Mat2& p1 = rep.gens[pc][(ps + 1) % 3];
    const Mat2& q1 = rep.gens[qc][(qs + 1) % 3];
    const Mat2 bk = mat_pow(b, k);
    return p1 * bk * q1 * mat_pow(b, -k);
}

namespace {

LengthResult length_from_trace(double tr) {
    LengthResult out;
    out.value = trace_to_length(tr);
    out.method = LengthMethod::ExactHolonomy;
    double rel = 1e-11;
    if (std::abs(tr) > 1e12) {
        rel = 1e-6;
        out.conditioning_warning = true;
    }
    const double pad = rel * std::max(1.0, out.value);
    out.lo = std::max(0.0, out.value - pad);
    out.hi = out.value + pad;
    return out;
}

LengthResult geodesic_length_at_radius(const Surface& s, const Curve& c, int radius) {
    const FiniteSurface fs = finite_subsurface(s, {c.core}, radius);
    const Representation rep = build_representation(fs, c.core);
    return length_from_trace(word_matrix(rep, c).trace());
}

} // namespace

LengthResult geodesic_length(const Surface& s, const Curve& c) {
    try {
        return geodesic_length_at_radius(s, c, 1);
    } catch (const Error& e) {
        if (e.kind() != Err::WordNotSupported) throw;
        return geodesic_length_at_radius(s, c, 2);
    }
}

LengthResult length_bounds(const Surface& s, const Curve& c) {
    LengthResult out;
    out.method = LengthMethod::CollarBounds;
    double lo = 0.0;
    for (const auto& [curve, count] : c.crossings)
        lo += count * 2.0 * collar_half_width(s.fn.length(curve));
    Curve base = c;
    base.word.clear();
    double hi = geodesic_length(s, base).value;
    for (const auto& t : c.word)
        hi += static_cast<double>(std::llabs(t.power)) *
              intersection_with_pants_curve(c, t.curve) * s.fn.length(t.curve);
    out.lo = lo;
    out.hi = std::max(lo, hi);
    out.value = 0.5 * (out.lo + out.hi);
    return out;
}

CollarDecomposition collar_decomposition(const Surface& s, const Curve& c,
                                         const std::vector<CurveId>& short_set) {
    CollarDecomposition out;
    for (const auto& curve : short_set) {
        const double l = s.fn.length(curve);
        if (l >= 0.1)
            throw Error(Err::NotShort, "collar decomposition needs lengths < 0.1");
        out.crossing_term += intersection_with_pants_curve(c, curve) * std::abs(std::log(l));
    }
    out.remainder = geodesic_length(s, c).value - out.crossing_term;
    return out;
}

int calibrated_twist_sign() {
    static std::once_flag flag;
    static int sign = 0;
    std::call_once(flag, [] {
        // Asymmetric reference four-holed sphere: the two twist directions
        // give distinct dual lengths.
        SurfaceSpec spec;
        spec.kind = TemplateKind::FourHoledSphere;
        Rule table;
        table.kind = Rule::Kind::Table;
        table.c = 1.0;
        table.table = {{0, 0.7}, {1, 1.1}, {2, 1.3}, {3, 0.9}};
        spec.lengths = {{0, Rule::constant(1.0)}, {1, table}};
        spec.twists = {{0, Rule::constant(0.37)}};
        const Surface s = build_template(spec);
        const CurveId beta{0, 0};
        const double lb = s.fn.length(beta);
        const Curve dual = Curve::dual(s, beta);
        const double want = geodesic_length(s, apply_twist(dual, beta, 1)).value;
        const double lp = geodesic_length(twist_deform(s, beta, lb), dual).value;
        const double lm = geodesic_length(twist_deform(s, beta, -lb), dual).value;
        if (std::abs(lp - want) < 1e-7)
            sign = 1;
        else if (std::abs(lm - want) < 1e-7)
            sign = -1;
        else
            throw Error(Err::NonHyperbolicInput, "twist sign calibration failed");
    });
    return sign;
}

} // namespace hypls
