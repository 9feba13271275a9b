#include "hypls/curve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

namespace hypls {

Curve Curve::pants(CurveId c) {
    Curve out;
    out.base = CurveBase::PantsCurve;
    out.core = c;
    return out;
}

Curve Curve::dual(const Surface& s, CurveId core) {
    const auto refs = s.graph->curve_slots(core);
    if (refs.empty()) throw Error(Err::UnknownCurve, "dual core curve not in surface");
    if (refs.size() != 2)
        throw Error(Err::UnsupportedPiece, "dual curve needs a glued core curve");

    Curve out;
    out.base = CurveBase::DualCurve;
    out.core = core;
    if (refs[0].cell == refs[1].cell) {
        // Both sides of the core in one cell: one-holed torus.
        out.piece = PieceKind::OneHoledTorus;
        out.crossings[core] = 1;
        return out;
    }
    // Two distinct cells. They must share only the core; a second shared
    // gluing curve makes the piece a two-holed torus, which has no dual
    // in the supported class.
    const auto c0 = s.graph->cell(refs[0].cell);
    const auto c1 = s.graph->cell(refs[1].cell);
    int shared = 0;
    for (const auto& a : c0.slots)
        for (const auto& b : c1.slots)
            if (a.kind == SlotKind::Glued && b.kind == SlotKind::Glued && a.curve == b.curve)
                ++shared;
    if (shared != 1)
        throw Error(Err::UnsupportedPiece, "piece around core is not a four-holed sphere");
    out.piece = PieceKind::FourHoledSphere;
    out.crossings[core] = 2;
    return out;
}

int intersection_with_pants_curve(const Curve& c, CurveId C) {
    auto it = c.crossings.find(C);
    return it == c.crossings.end() ? 0 : it->second;
}

std::vector<TwistTerm> normalize_word(const Curve& base, std::vector<TwistTerm> word) {
    std::vector<TwistTerm> out;
    for (const auto& t : word) {
        if (t.power == 0) continue;
        if (intersection_with_pants_curve(base, t.curve) == 0) continue; // acts trivially
        if (!out.empty() && out.back().curve == t.curve) {
            out.back().power += t.power;
            if (out.back().power == 0) out.pop_back();
        } else {
            out.push_back(t);
        }
    }
    return out;
}

Curve apply_twist(const Curve& c, CurveId C, std::int64_t k) {
    Curve out = c;
    out.word.push_back({C, k});
    out.word = normalize_word(out, std::move(out.word));
    return out;
}

MappingClass MappingClass::empty() { return finite({}); }

MappingClass MappingClass::finite(std::vector<ScheduleEntry> entries) {
    MappingClass m;
    m.finite_ = true;
    m.entries_ = std::move(entries);
    return m;
}

MappingClass MappingClass::lazy(std::function<ScheduleEntry(std::int64_t)> entry,
                                std::function<std::vector<std::int64_t>(CurveId)> locate) {
    MappingClass m;
    m.finite_ = false;
    m.entry_ = std::move(entry);
    m.locate_ = std::move(locate);
    return m;
}

std::vector<std::pair<std::int64_t, ScheduleEntry>> MappingClass::relevant(const Curve& c) const {
    constexpr std::size_t kCap = 1u << 20;
    std::vector<std::pair<std::int64_t, ScheduleEntry>> out;
    if (finite_) {
        for (std::size_t n = 0; n < entries_.size(); ++n)
            if (intersection_with_pants_curve(c, entries_[n].curve) != 0)
                out.emplace_back(static_cast<std::int64_t>(n + 1), entries_[n]);
    } else {
        std::set<std::int64_t> seen;
        for (const auto& [curve, count] : c.crossings) {
            (void)count;
            for (std::int64_t n : locate_(curve)) {
                if (!seen.insert(n).second) continue;
                const auto e = entry_(n);
                if (intersection_with_pants_curve(c, e.curve) != 0) out.emplace_back(n, e);
            }
        }
        std::sort(out.begin(), out.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    if (out.size() > kCap)
        throw Error(Err::InfiniteInteraction, "schedule meets the curve's support unboundedly");
    return out;
}

Curve apply_mapping_class(const Curve& c, const MappingClass& m) {
    auto rel = m.relevant(c);
    Curve out = c;
    // f = tau_1 o tau_2 o ... : the highest index acts first.
    for (auto it = rel.rbegin(); it != rel.rend(); ++it)
        out = apply_twist(out, it->second.curve, it->second.power);
    return out;
}

std::vector<Curve> enumerate_curves(const Surface& s, const std::vector<CurveId>& window,
                                    int max_weight) {
    if (window.empty()) return {};
    if (max_weight < 0) throw Error(Err::BadParams, "max_weight must be >= 0");
    std::vector<CurveId> win = window;
    std::sort(win.begin(), win.end());
    win.erase(std::unique(win.begin(), win.end()), win.end());

    std::vector<Curve> bases;
    for (const auto& c : win) {
        if (!s.graph->is_gluing_curve(c)) continue;
        bases.push_back(Curve::pants(c));
        try {
            bases.push_back(Curve::dual(s, c));
        } catch (const Error& e) {
            if (e.kind() != Err::UnsupportedPiece) throw;
        }
    }

    std::vector<Curve> out;
    for (const auto& base : bases) {
        // Only window curves the base actually crosses produce new curves.
        std::vector<CurveId> effective;
        for (const auto& c : win)
            if (intersection_with_pants_curve(base, c) != 0) effective.push_back(c);
        std::vector<std::int64_t> powers(effective.size(), 0);
        std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int budget) {
            if (pos == effective.size()) {
                Curve c = base;
                for (std::size_t i = 0; i < effective.size(); ++i)
                    if (powers[i] != 0) c = apply_twist(c, effective[i], powers[i]);
                out.push_back(std::move(c));
                return;
            }
            for (std::int64_t k = -budget; k <= budget; ++k) {
                powers[pos] = k;
                rec(pos + 1, budget - static_cast<int>(std::llabs(k)));
            }
            powers[pos] = 0;
        };
        rec(0, max_weight);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

TwistSchedule TwistSchedule::midpoint(std::int64_t count) {
    TwistSchedule ts;
    ts.exponent = [](std::int64_t n) { return static_cast<double>(n * n + n + 1); };
    ts.count = count;
    return ts;
}

double TwistSchedule::log_abs_log_eps(std::int64_t n) const { return std::log(exponent(n)); }

double TwistSchedule::t(std::int64_t n) const {
    const double e = eps(n);
    if (e <= 0.0) return std::numeric_limits<double>::infinity();
    return std::floor(log_abs_log_eps(n) / e) + 1.0;
}

double TwistSchedule::t_times_eps(std::int64_t n) const {
    const double e = eps(n);
    const double lal = log_abs_log_eps(n);
    if (e < 1e-280) return lal; // floor(+1) correction below representability
    return (std::floor(lal / e) + 1.0) * e;
}

namespace {

std::string format_id(CurveId c) {
    std::ostringstream os;
    if (c.family == 0)
        os << "C:" << c.index;
    else
        os << "C:" << c.family << ":" << c.index;
    return os.str();
}

CurveId parse_id(const std::string& s, std::size_t& pos) {
    auto expect = [&](char ch) {
        if (pos >= s.size() || s[pos] != ch)
            throw Error(Err::BadParams, "bad curve literal: '" + s + "'");
        ++pos;
    };
    expect('C');
    expect(':');
    auto read_int = [&]() -> std::int64_t {
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw Error(Err::BadParams, "bad curve literal: '" + s + "'");
        return std::stoll(s.substr(start, pos - start));
    };
    std::int64_t a = read_int();
    if (pos < s.size() && s[pos] == ':') {
        ++pos;
        std::int64_t b = read_int();
        return {static_cast<std::int32_t>(a), b};
    }
    return {0, a};
}

} // namespace

std::string format_curve(const Curve& c) {
    std::ostringstream os;
    if (c.base == CurveBase::PantsCurve)
        os << format_id(c.core);
    else
        os << "D:" << c.core.family << ":" << c.core.index;
    if (!c.word.empty()) {
        os << "~[";
        for (std::size_t i = 0; i < c.word.size(); ++i) {
            if (i) os << ",";
            os << "(" << format_id(c.word[i].curve) << "," << c.word[i].power << ")";
        }
        os << "]";
    }
    return os.str();
}

Curve parse_curve(const std::string& text, const Surface& s) {
    std::size_t pos = 0;
    Curve out;
    if (text.compare(0, 2, "D:") == 0) {
        // Same shape as a pants literal after the leading letter, so reuse
        // the id parser on a copy with the letter swapped.
        std::string rest = "C" + text.substr(1);
        std::size_t rpos = 0;
        CurveId id = parse_id(rest, rpos);
        out = Curve::dual(s, id);
        pos = rpos;
    } else {
        CurveId id = parse_id(text, pos);
        if (!s.graph->has_curve(id)) throw Error(Err::UnknownCurve, "unknown curve " + text);
        out = Curve::pants(id);
    }
    if (pos < text.size()) {
        const std::string tail = text.substr(pos);
        if (tail.size() < 3 || tail[0] != '~' || tail[1] != '[' || tail.back() != ']')
            throw Error(Err::BadParams, "bad twist-word suffix: '" + text + "'");
        std::size_t tpos = 2;
        while (tpos < tail.size() - 1) {
            if (tail[tpos] == ',') {
                ++tpos;
                continue;
            }
            if (tail[tpos] != '(') throw Error(Err::BadParams, "bad twist-word suffix");
            ++tpos;
            CurveId cid = parse_id(tail, tpos);
            if (tpos >= tail.size() || tail[tpos] != ',')
                throw Error(Err::BadParams, "bad twist-word suffix");
            ++tpos;
            std::size_t start = tpos;
            if (tpos < tail.size() && (tail[tpos] == '-' || tail[tpos] == '+')) ++tpos;
            while (tpos < tail.size() && std::isdigit(static_cast<unsigned char>(tail[tpos]))) ++tpos;
            const std::int64_t k = std::stoll(tail.substr(start, tpos - start));
            if (tpos >= tail.size() || tail[tpos] != ')')
                throw Error(Err::BadParams, "bad twist-word suffix");
            ++tpos;
            out = apply_twist(out, cid, k);
        }
    }
    return out;
}

} // namespace hypls
