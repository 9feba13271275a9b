#include "hypls/surface_io.hpp"

#include <json.hpp>

namespace hypls {

namespace {

using json = nlohmann::ordered_json;

const char* template_name(TemplateKind k) {
    switch (k) {
        case TemplateKind::Flute: return "flute";
        case TemplateKind::Ladder: return "ladder";
        case TemplateKind::Tripod: return "tripod";
        case TemplateKind::FourHoledSphere: return "four-holed-sphere";
        case TemplateKind::Custom: return "custom";
    }
    return "flute";
}

TemplateKind template_from(const std::string& s) {
    if (s == "flute") return TemplateKind::Flute;
    if (s == "ladder") return TemplateKind::Ladder;
    if (s == "tripod") return TemplateKind::Tripod;
    if (s == "four-holed-sphere") return TemplateKind::FourHoledSphere;
    if (s == "custom") return TemplateKind::Custom;
    throw Error(Err::BadParams, "unknown template '" + s + "'");
}

json rule_to_json(const Rule& r) {
    json out;
    switch (r.kind) {
        case Rule::Kind::Const:
            out["rule"] = "const";
            out["c"] = r.c;
            break;
        case Rule::Kind::Harmonic:
            out["rule"] = "harmonic";
            out["c"] = r.c;
            break;
        case Rule::Kind::Power:
            out["rule"] = "power";
            out["c"] = r.c;
            out["p"] = r.p;
            break;
        case Rule::Kind::Table: {
            out["rule"] = "table";
            out["c"] = r.c;
            json t = json::object();
            for (const auto& [k, v] : r.table) t[std::to_string(k)] = v;
            out["values"] = t;
            break;
        }
    }
    return out;
}

Rule rule_from_json(const json& j) {
    Rule r;
    const std::string kind = j.at("rule").get<std::string>();
    r.c = j.value("c", 1.0);
    if (kind == "const") {
        r.kind = Rule::Kind::Const;
    } else if (kind == "harmonic") {
        r.kind = Rule::Kind::Harmonic;
    } else if (kind == "power") {
        r.kind = Rule::Kind::Power;
        r.p = j.value("p", 1.0);
    } else if (kind == "table") {
        r.kind = Rule::Kind::Table;
        if (j.contains("values"))
            for (const auto& [k, v] : j.at("values").items())
                r.table[std::stoll(k)] = v.get<double>();
    } else {
        throw Error(Err::BadParams, "unknown rule kind '" + kind + "'");
    }
    return r;
}

json rules_to_json(const std::map<std::int32_t, Rule>& rules) {
    json out = json::object();
    for (const auto& [fam, rule] : rules) out[std::to_string(fam)] = rule_to_json(rule);
    return out;
}

std::map<std::int32_t, Rule> rules_from_json(const json& j) {
    std::map<std::int32_t, Rule> out;
    for (const auto& [k, v] : j.items()) out[std::stoi(k)] = rule_from_json(v);
    return out;
}

json slot_to_json(const Slot& s) {
    json out;
    switch (s.kind) {
        case SlotKind::Glued:
            out["kind"] = "glued";
            out["curve"] = {s.curve.family, s.curve.index};
            break;
        case SlotKind::Boundary:
            out["kind"] = "boundary";
            out["curve"] = {s.curve.family, s.curve.index};
            break;
        case SlotKind::Cusp: out["kind"] = "cusp"; break;
    }
    return out;
}

Slot slot_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "cusp") return Slot::cusp();
    const CurveId c{j.at("curve").at(0).get<std::int32_t>(),
                    j.at("curve").at(1).get<std::int64_t>()};
    if (kind == "glued") return Slot::glued(c);
    if (kind == "boundary") return Slot::boundary(c);
    throw Error(Err::BadParams, "unknown slot kind '" + kind + "'");
}

} // namespace

std::string serialize_surface(const SurfaceSpec& spec) {
    json out;
    out["template"] = template_name(spec.kind);
    out["label"] = spec.label;
    out["lengths"] = rules_to_json(spec.lengths);
    out["twists"] = rules_to_json(spec.twists);
    if (spec.kind == TemplateKind::Custom) {
        json cells = json::array();
        for (const auto& cell : spec.custom.cells) {
            json c;
            c["id"] = {cell.id.part, cell.id.index};
            c["slots"] = {slot_to_json(cell.slots[0]), slot_to_json(cell.slots[1]),
                          slot_to_json(cell.slots[2])};
            cells.push_back(c);
        }
        out["cells"] = cells;
    }
    return out.dump(2) + "\n";
}

SurfaceSpec parse_surface(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw Error(Err::BadParams, std::string("surface document is not valid JSON: ") + e.what());
    }
    SurfaceSpec spec;
    spec.kind = template_from(j.at("template").get<std::string>());
    spec.label = j.value("label", std::string{});
    if (j.contains("lengths")) spec.lengths = rules_from_json(j.at("lengths"));
    if (j.contains("twists")) spec.twists = rules_from_json(j.at("twists"));
    if (spec.kind == TemplateKind::Custom) {
        for (const auto& c : j.at("cells")) {
            PantsCell cell;
            cell.id = {c.at("id").at(0).get<std::int32_t>(), c.at("id").at(1).get<std::int64_t>()};
            for (int s = 0; s < 3; ++s) cell.slots[s] = slot_from_json(c.at("slots").at(s));
            spec.custom.cells.push_back(cell);
        }
    }
    return spec;
}

Surface load_surface(const std::string& text) { return build_template(parse_surface(text)); }

} // namespace hypls
