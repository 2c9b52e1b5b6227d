#include "homothety/specfile.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace homothety {

namespace {

using Json = nlohmann::ordered_json;

Json scalar_json(const FieldScalar& s) { return Json(s.str()); }

Json vec_json(const Vec& v) {
    Json arr = Json::array();
    for (const auto& x : v) arr.push_back(scalar_json(x));
    return arr;
}

Json subspace_json(const AffineSubspace& s) {
    Json dirs = Json::array();
    for (const auto& d : s.directions) dirs.push_back(vec_json(d));
    return Json{{"base", vec_json(s.base)}, {"directions", std::move(dirs)}};
}

Json mul_closure_json(const MulClosure& c) {
    Json j{{"variant", mul_variant_name(c.variant)}};
    j["rho"] = c.rho ? Json(rational_to_string(*c.rho)) : Json(nullptr);
    j["zero_in_closure"] = c.zero_in_closure;
    return j;
}

Json add_closure_json(const AddClosure& c) {
    Json j{{"variant", add_variant_name(c.variant)}};
    if (c.variant == AddClosure::Variant::Lattice) {
        Json basis = Json::array();
        for (const auto& b : c.basis) basis.push_back(vec_json(b));
        j["basis"] = std::move(basis);
    } else {
        j["basis"] = nullptr;
    }
    j["direction"] = c.direction ? vec_json(*c.direction) : Json(nullptr);
    if (c.evidence) {
        j["evidence"] = Json{{"real_rank", c.evidence->real_rank},
                             {"q_rank", c.evidence->q_rank},
                             {"note", c.evidence->note}};
    }
    return j;
}

Json opt_bool(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

Vec parse_literal_vec(const Json& arr, const FieldContextPtr& ctx, int dimension,
                      const char* what) {
    if (!arr.is_array() || static_cast<int>(arr.size()) != dimension)
        throw SemanticError(std::string(what) + " must be an array of " +
                            std::to_string(dimension) + " scalar literals");
    Vec v;
    v.reserve(dimension);
    for (const auto& item : arr) {
        if (!item.is_string()) throw SemanticError("scalar literals must be strings");
        v.push_back(parse_scalar(item.get<std::string>(), ctx));
    }
    return v;
}

}  // namespace

GroupSpec parse_spec_json(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("spec file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw SemanticError("spec file must be a JSON object");
    if (!doc.contains("dimension") || !doc["dimension"].is_number_integer())
        throw SemanticError("spec file needs an integer \"dimension\"");
    GroupSpec spec;
    spec.dimension = doc["dimension"].get<int>();
    if (spec.dimension < 1) throw SemanticError("dimension must be >= 1");

    std::vector<std::int64_t> radicands;
    if (doc.contains("field")) {
        const Json& field = doc["field"];
        if (!field.is_object() || !field.contains("radicands") || !field["radicands"].is_array())
            throw SemanticError("\"field\" must be an object with a \"radicands\" array");
        for (const auto& r : field["radicands"]) {
            if (!r.is_number_integer()) throw SemanticError("radicands must be integers");
            radicands.push_back(r.get<std::int64_t>());
        }
    }
    spec.ctx = FieldContext::create(std::move(radicands));

    if (!doc.contains("generators") || !doc["generators"].is_array() || doc["generators"].empty())
        throw SemanticError("spec file needs a nonempty \"generators\" array");
    int index = 0;
    for (const auto& g : doc["generators"]) {
        if (!g.is_object()) throw SemanticError("generators must be objects");
        std::string name =
            g.contains("name") ? g["name"].get<std::string>() : "g" + std::to_string(index);
        if (!g.contains("ratio") || !g["ratio"].is_string())
            throw SemanticError("generator \"" + name + "\" needs a string \"ratio\"");
        FieldScalar ratio = parse_scalar(g["ratio"].get<std::string>(), spec.ctx);
        if (ratio.is_zero())
            throw SemanticError("generator \"" + name + "\" has zero ratio");
        const bool has_translation = g.contains("translation");
        const bool has_center = g.contains("center");
        if (has_translation == has_center)
            throw SemanticError("generator \"" + name +
                                "\" needs exactly one of \"translation\" or \"center\"");
        if (has_translation) {
            Vec b = parse_literal_vec(g["translation"], spec.ctx, spec.dimension, "translation");
            spec.generators.emplace_back(std::move(ratio), std::move(b));
        } else {
            if (ratio == FieldScalar::one(spec.ctx))
                throw SemanticError("generator \"" + name +
                                    "\" uses center form, which requires ratio != 1");
            Vec c = parse_literal_vec(g["center"], spec.ctx, spec.dimension, "center");
            spec.generators.push_back(AffineMap::from_center(c, std::move(ratio)));
        }
        spec.names.push_back(std::move(name));
        ++index;
    }
    spec.validate();
    return spec;
}

GroupSpec load_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open spec file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_spec_json(buf.str());
}

std::string render_spec_json(const GroupSpec& spec) {
    Json doc;
    doc["dimension"] = spec.dimension;
    doc["field"] = Json{{"radicands", spec.ctx->radicands()}};
    Json gens = Json::array();
    for (std::size_t i = 0; i < spec.generators.size(); ++i) {
        const auto& g = spec.generators[i];
        Json jg;
        jg["name"] = spec.names.empty() ? "g" + std::to_string(i) : spec.names[i];
        jg["ratio"] = g.ratio().str();
        jg["translation"] = vec_json(g.translation());
        gens.push_back(std::move(jg));
    }
    doc["generators"] = std::move(gens);
    return doc.dump(2);
}

Vec parse_point(const std::string& csv, const FieldContextPtr& ctx, int dimension) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : csv) {
        if (ch == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    if (static_cast<int>(parts.size()) != dimension)
        throw SemanticError("point needs " + std::to_string(dimension) +
                            " comma-separated scalar literals");
    Vec v;
    v.reserve(dimension);
    for (const auto& p : parts) v.push_back(parse_scalar(p, ctx));
    return v;
}

std::string report_to_json(const ClassificationReport& report) {
    Json j;
    j["case"] = report.group_case == GroupCase::One ? "one" : "two";
    j["abelian"] = false;
    j["dimension"] = report.dimension;
    j["E"] = report.hull ? subspace_json(*report.hull) : Json(nullptr);
    j["lambda"] = report.ratio_closure ? mul_closure_json(*report.ratio_closure) : Json(nullptr);
    j["H"] = report.translation_closure ? add_closure_json(*report.translation_closure)
                                        : Json(nullptr);
    j["a"] = vec_json(report.base_point);
    Json preds;
    preds["has_dense_orbit"] = opt_bool(report.predicates.has_dense_orbit);
    if (report.group_case == GroupCase::One) {
        preds["every_U_orbit_minimal_in_U"] = opt_bool(report.predicates.every_u_orbit_minimal_in_u);
        preds["dim_E"] = report.predicates.hull_dim ? Json(*report.predicates.hull_dim) : Json(nullptr);
    } else {
        preds["every_orbit_minimal"] = opt_bool(report.predicates.every_orbit_minimal);
    }
    preds["has_periodic_orbit"] = opt_bool(report.predicates.has_periodic_orbit);
    j["predicates"] = std::move(preds);
    j["warnings"] = report.warnings;
    return j.dump(2);
}

std::string closure_to_json(const OrbitClosureDescription& desc) {
    Json j;
    if (const auto* a = std::get_if<AffineSetDesc>(&desc)) {
        j["type"] = "AffineSet";
        j["E"] = subspace_json(a->hull);
    } else if (const auto* sf = std::get_if<ScaledFamilyDesc>(&desc)) {
        j["type"] = "ScaledFamily";
        j["a"] = vec_json(sf->base);
        j["direction"] = vec_json(sf->direction);
        j["lambda"] = mul_closure_json(sf->ratio_closure);
        j["E"] = subspace_json(sf->hull);
    } else {
        const auto& cp = std::get<CosetPairDesc>(desc);
        j["type"] = "CosetPair";
        j["x"] = vec_json(cp.x);
        j["a"] = vec_json(cp.base);
        j["H"] = add_closure_json(cp.translation_closure);
    }
    try {
        j["components"] = component_count_name(connected_components(desc));
    } catch (const UnresolvedClosureError&) {
        j["components"] = nullptr;
    }
    return j.dump(2);
}

std::string enumeration_to_json(const GroupSpec& spec, const WordEnumeration& words) {
    auto witnessed = [&](const std::vector<WitnessedPoint>& pts) {
        Json arr = Json::array();
        for (const auto& wp : pts)
            arr.push_back(Json{{"point", vec_json(wp.point)}, {"witness", word_str(spec, wp.word)}});
        return arr;
    };
    Json j;
    j["max_word_length"] = words.max_length;
    j["element_count"] = words.element_count;
    j["centers"] = witnessed(words.centers);
    j["symmetry_images"] = witnessed(words.symmetry_images);
    j["reflection_images"] = witnessed(words.reflection_images);
    Json ratios = Json::array();
    for (const auto& [r, w] : words.ratios)
        ratios.push_back(Json{{"ratio", r.str()}, {"witness", word_str(spec, w)}});
    j["ratios"] = std::move(ratios);
    return j.dump(2);
}

std::string density_to_json(const DensityReport& report) {
    Json j;
    j["max_deviation"] = report.max_deviation;
    j["coverage"] = report.coverage;
    j["retained"] = report.retained;
    j["discarded"] = report.discarded;
    j["probes"] = report.probes;
    return j.dump(2);
}

}  // namespace homothety
