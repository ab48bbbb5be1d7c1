#include "zslab/json_io.hpp"

#include "zslab/error.hpp"

namespace zslab {
namespace {

Json coords_json(const AbelianGroup& A, uint32_t index) {
    Json arr = Json::array();
    for (long long c : A.coords_of(index)) arr.push_back(c);
    return arr;
}

uint32_t index_from_coords(const AbelianGroup& A, const Json& arr) {
    if (!arr.is_array() || static_cast<int>(arr.size()) != A.rank())
        throw ParseError("element must be a coordinate array of length rank");
    std::vector<long long> coords;
    coords.reserve(arr.size());
    for (const auto& c : arr) {
        if (!c.is_number_integer()) throw ParseError("coordinates must be integers");
        coords.push_back(c.get<long long>());
    }
    return A.index_of(coords);
}

} // namespace

Json sequence_json(const ZSequence& S) {
    Json arr = Json::array();
    for (uint16_t e : S.expanded()) arr.push_back(coords_json(S.group(), e));
    return arr;
}

Json exact_result_json(const AbelianGroup& A, const std::string& quantity,
                       const ExactResult& r) {
    Json j;
    j["group"] = A.to_spec();
    j["quantity"] = quantity;
    if (r.value)
        j["value"] = *r.value;
    else
        j["value"] = nullptr;
    j["status"] = to_string(r.status);
    if (r.witness)
        j["witness"] = sequence_json(*r.witness);
    else
        j["witness"] = nullptr;
    j["nodes"] = r.nodes_explored;
    return j;
}

Json property_d_json(const PropertyDReport& rep) {
    Json j;
    j["group"] = rep.group.to_spec();
    j["status"] = to_string(rep.status);
    if (rep.s_value)
        j["s"] = *rep.s_value;
    else
        j["s"] = nullptr;
    j["extremal_orbits"] = rep.extremal_orbits_checked;
    j["raw_count"] = rep.extremal_raw_count.get_str();
    if (rep.counterexample)
        j["counterexample"] = sequence_json(*rep.counterexample);
    else
        j["counterexample"] = nullptr;
    j["nodes"] = rep.nodes_explored;
    return j;
}

Json bound_result_json(const BoundResult& b) {
    Json j;
    j["kind"] = to_string(b.kind);
    j["value_real"] = b.value_real.str(36);
    j["value_int"] = b.value_int.get_str();
    Json conds = Json::array();
    for (const auto& a : b.conditional_on) conds.push_back(a.render());
    j["conditional_on"] = conds;
    Json prov = Json::array();
    for (const auto& st : b.provenance) {
        Json s;
        s["thm"] = st.id;
        s["statement"] = st.statement;
        Json inputs = Json::object();
        for (const auto& [k, v] : st.inputs) inputs[k] = v;
        s["inputs"] = inputs;
        s["value"] = st.value;
        prov.push_back(s);
    }
    j["provenance"] = prov;
    return j;
}

Json best_bounds_json(const AbelianGroup& A, const BestBounds& bb) {
    Json j;
    j["group"] = A.to_spec();
    j["lower"] = bound_result_json(bb.lower);
    j["upper"] = bound_result_json(bb.upper);
    j["conditional_upper"] =
        bb.conditional_upper ? bound_result_json(*bb.conditional_upper) : Json(nullptr);
    j["exact"] = bb.exact ? bound_result_json(*bb.exact) : Json(nullptr);
    return j;
}

ZSequence sequence_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("group") || !j.contains("elems"))
        throw ParseError("sequence object needs \"group\" and \"elems\"");
    if (!j["group"].is_string()) throw ParseError("\"group\" must be a string");
    AbelianGroup A = parse_group(j["group"].get<std::string>());
    if (!j["elems"].is_array()) throw ParseError("\"elems\" must be an array");
    ZSequence S(A);
    for (const auto& e : j["elems"]) S.add(index_from_coords(A, e));
    return S;
}

std::vector<uint16_t> set_from_json(const AbelianGroup& A, const Json& j) {
    const Json* arr = nullptr;
    if (j.is_array())
        arr = &j;
    else if (j.is_object() && j.contains("elems") && j["elems"].is_array())
        arr = &j["elems"];
    else
        throw ParseError("expected an array of coordinate vectors or {\"elems\": [...]}");
    std::vector<uint16_t> out;
    out.reserve(arr->size());
    for (const auto& e : *arr)
        out.push_back(static_cast<uint16_t>(index_from_coords(A, e)));
    return out;
}

namespace {

bool type_matches(const Json& v, const std::string& t) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "integer") return v.is_number_integer();
    if (t == "number") return v.is_number();
    if (t == "boolean") return v.is_boolean();
    if (t == "null") return v.is_null();
    return false;
}

bool fail(std::string* error, const std::string& msg) {
    if (error) *error = msg;
    return false;
}

} // namespace

bool schema_validate(const Json& value, const Json& schema, std::string* error) {
    if (!schema.is_object()) return fail(error, "schema must be an object");

    if (schema.contains("oneOf")) {
        int hits = 0;
        for (const auto& sub : schema["oneOf"]) {
            std::string ignored;
            if (schema_validate(value, sub, &ignored)) ++hits;
        }
        if (hits != 1)
            return fail(error, "oneOf matched " + std::to_string(hits) + " schemas");
    }

    if (schema.contains("type")) {
        const Json& t = schema["type"];
        bool ok = false;
        if (t.is_string()) {
            ok = type_matches(value, t.get<std::string>());
        } else if (t.is_array()) {
            for (const auto& tt : t)
                if (tt.is_string() && type_matches(value, tt.get<std::string>())) ok = true;
        }
        if (!ok) return fail(error, "type mismatch: " + t.dump());
    }

    if (schema.contains("enum")) {
        bool ok = false;
        for (const auto& cand : schema["enum"])
            if (cand == value) ok = true;
        if (!ok) return fail(error, "value not in enum");
    }

    if (value.is_object()) {
        if (schema.contains("required")) {
            for (const auto& key : schema["required"]) {
                if (!key.is_string() || !value.contains(key.get<std::string>()))
                    return fail(error, "missing required key " + key.dump());
            }
        }
        if (schema.contains("properties")) {
            for (auto it = schema["properties"].begin(); it != schema["properties"].end(); ++it) {
                if (!value.contains(it.key())) continue;
                std::string sub;
                if (!schema_validate(value[it.key()], it.value(), &sub))
                    return fail(error, it.key() + ": " + sub);
            }
        }
        if (schema.contains("additionalProperties") &&
            schema["additionalProperties"].is_boolean() &&
            !schema["additionalProperties"].get<bool>()) {
            for (auto it = value.begin(); it != value.end(); ++it) {
                if (!schema.contains("properties") ||
                    !schema["properties"].contains(it.key()))
                    return fail(error, "unexpected key " + it.key());
            }
        }
    }

    if (value.is_array() && schema.contains("items")) {
        size_t i = 0;
        for (const auto& elem : value) {
            std::string sub;
            if (!schema_validate(elem, schema["items"], &sub))
                return fail(error, "item " + std::to_string(i) + ": " + sub);
            ++i;
        }
    }
    return true;
}

} // namespace zslab
